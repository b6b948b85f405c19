#include "platjones/circuitsim.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <random>
#include <string_view>

#include "json.hpp"

#include "kernels/block_bits.hpp"
#include "platjones/error.hpp"
#include "platjones/invariant.hpp"
#include "platjones/kernels.hpp"
#include "platjones/recoupling.hpp"

namespace platjones::circuitsim {

using kaulrep::LabelKind;
namespace bits = kernels::detail;

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::DiagonalPhase: return "diagonal-phase";
    case GateKind::Q6j: return "q6j";
    case GateKind::ColorRelabel: return "color-relabel";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Layout and encoding

int block_width(const Level& level) {
  int w = 1;
  while ((1 << w) < level.k() + 1) ++w;
  return w;
}

RegisterLayout layout(int m, const Level& level) {
  if (m < 1) throw Error(ErrorCode::Domain, "layout needs m >= 1, got " + std::to_string(m));
  RegisterLayout out{m, level, block_width(level), {}};
  if (m == 1) {
    out.blocks.push_back({LabelKind::Internal, 0});
    return out;
  }
  for (int i = 0; i < 2 * m; ++i) out.blocks.push_back({LabelKind::Color, i});
  for (int s = 0; s < kaulrep::internal_slots(m); ++s) out.blocks.push_back({LabelKind::Internal, s});
  return out;
}

int RegisterLayout::color_block(int strand) const { return m == 1 ? -1 : strand; }

int RegisterLayout::internal_block(int slot) const { return m == 1 ? slot : 2 * m + slot; }

namespace {

int block_of(const RegisterLayout& layout, const kaulrep::LabelRef& ref) {
  const int b = ref.kind == LabelKind::Color ? layout.color_block(ref.index) : layout.internal_block(ref.index);
  if (b < 0) throw Error(ErrorCode::Domain, "label has no register block in this layout");
  return b;
}

}  // namespace

std::uint64_t encode_path(const RegisterLayout& layout, const kaulrep::FusionPath& path) {
  if (path.colors.size() != static_cast<std::size_t>(2 * layout.m) ||
      path.internal.size() != static_cast<std::size_t>(kaulrep::internal_slots(layout.m))) {
    throw Error(ErrorCode::Domain, "fusion path shape does not match the register layout");
  }
  const int cap = (1 << layout.block_width) - 1;
  std::uint64_t index = 0;
  for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
    const auto& d = layout.blocks[b];
    const Spin s = d.kind == LabelKind::Color ? path.colors[static_cast<std::size_t>(d.index)]
                                              : path.internal[static_cast<std::size_t>(d.index)];
    if (s.twice < 0 || s.twice > cap) {
      throw Error(ErrorCode::Overflow, "label " + braid::format_spin(s) + " does not fit a " +
                                           std::to_string(layout.block_width) + "-qubit block");
    }
    index = bits::with_block(index, static_cast<int>(b), layout.block_width, static_cast<std::uint64_t>(s.twice));
  }
  return index;
}

kaulrep::FusionPath decode_path(const RegisterLayout& layout, std::uint64_t index) {
  kaulrep::FusionPath p;
  if (layout.m > 1) p.colors.resize(static_cast<std::size_t>(2 * layout.m));
  p.internal.resize(static_cast<std::size_t>(kaulrep::internal_slots(layout.m)));
  for (std::size_t b = 0; b < layout.blocks.size(); ++b) {
    const auto& d = layout.blocks[b];
    const Spin s{static_cast<int>(bits::block_code(index, static_cast<int>(b), layout.block_width))};
    (d.kind == LabelKind::Color ? p.colors : p.internal)[static_cast<std::size_t>(d.index)] = s;
  }
  return p;
}

kaulrep::FusionPath decode_path(const RegisterLayout& layout, std::uint64_t index, const braid::LevelSlice& slice) {
  kaulrep::FusionPath p = decode_path(layout, index);
  if (layout.m == 1) {
    for (const auto& s : slice.strands) p.colors.push_back(s.color);
  }
  return p;
}

// ---------------------------------------------------------------------------
// Gate algebra

namespace {

Eigen::Index ix(std::uint64_t i) { return static_cast<Eigen::Index>(i); }

/// Full-register index with the sub-register code of `g` scattered onto
/// blocks and everything else zero.
std::uint64_t sub_to_full(const GateOp& g, std::uint64_t code) { return bits::scatter_code(g, 0, code); }

}  // namespace

Eigen::MatrixXcd GateOp::dense() const {
  const std::uint64_t n = sub_dim();
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(ix(n), ix(n));
  const int w = block_width;
  const std::uint64_t lane = (std::uint64_t{1} << w) - 1;
  for (std::uint64_t x = 0; x < n; ++x) {
    switch (kind) {
      case GateKind::Q6j: {
        const std::uint64_t boundary = x & ((std::uint64_t{1} << (4 * w)) - 1);
        const std::uint64_t old = x >> (4 * w);
        const int t = q6j->boundary[boundary];
        if (t < 0) {
          d(ix(x), ix(x)) = 1.0;
          break;
        }
        const auto& m = q6j->tables[static_cast<std::size_t>(t)];
        for (std::uint64_t y = 0; y <= lane; ++y) d(ix(boundary | (y << (4 * w))), ix(x)) = m(ix(y), ix(old));
        break;
      }
      case GateKind::DiagonalPhase: d(ix(perm[x]), ix(x)) = phase[x]; break;
      case GateKind::ColorRelabel: {
        const std::uint64_t y = bits::gate_code(*this, sub_to_full(*this, x) ^ xor_mask);
        d(ix(y), ix(x)) = 1.0;
        break;
      }
    }
  }
  return d;
}

double GateOp::unitarity_defect() const {
  constexpr double kBroken = std::numeric_limits<double>::infinity();
  switch (kind) {
    case GateKind::Q6j: {
      const auto lanes = ix(std::uint64_t{1} << block_width);
      double worst = 0.0;
      for (const auto& m : q6j->tables) {
        if (m.rows() != lanes || m.cols() != lanes) return kBroken;
        worst = std::max(worst, (m * m.transpose() - Eigen::MatrixXd::Identity(lanes, lanes)).cwiseAbs().maxCoeff());
      }
      return worst;
    }
    case GateKind::DiagonalPhase: {
      std::vector<bool> hit(perm.size(), false);
      double worst = 0.0;
      for (std::size_t x = 0; x < perm.size(); ++x) {
        if (perm[x] >= perm.size() || hit[perm[x]]) return kBroken;
        hit[perm[x]] = true;
        worst = std::max(worst, std::abs(std::abs(phase[x]) - 1.0));
      }
      return worst;
    }
    case GateKind::ColorRelabel: return 0.0;
  }
  return kBroken;
}

GateOp controlled(GateOp g) {
  g.controlled = true;
  g.label = "c-" + g.label;
  return g;
}

GateOp transposed(const GateOp& g) {
  GateOp out = g;
  out.label = g.label + "^T";
  if (g.kind == GateKind::Q6j) {
    auto t = std::make_shared<GateOp::Q6jTables>(*g.q6j);
    for (auto& m : t->tables) m.transposeInPlace();
    out.q6j = std::move(t);
  } else if (g.kind == GateKind::DiagonalPhase) {
    for (std::size_t x = 0; x < g.perm.size(); ++x) {
      out.perm[g.perm[x]] = static_cast<std::uint32_t>(x);
      out.phase[g.perm[x]] = g.phase[x];
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gate builders

namespace {

std::shared_ptr<const GateOp::Q6jTables> build_q6j_tables(const Level& level, int w, bool forward) {
  const auto& cache = kaulrep::fmove_cache(level);
  const int lanes = 1 << w;
  const int k = level.k();
  auto out = std::make_shared<GateOp::Q6jTables>();
  out->boundary.assign(std::size_t{1} << (4 * w), -1);
  for (std::size_t code = 0; code < out->boundary.size(); ++code) {
    const auto lane = [&](int i) { return static_cast<int>((code >> (i * w)) & static_cast<std::size_t>(lanes - 1)); };
    const Spin a{lane(0)}, b{lane(1)}, c{lane(2)}, d{lane(3)};
    if (std::max({a.twice, b.twice, c.twice, d.twice}) > k) continue;
    std::vector<bool> left(static_cast<std::size_t>(lanes), false), right(left);
    bool any = false;
    for (int x = 0; x <= k; ++x) {
      const Spin s{x};
      left[static_cast<std::size_t>(x)] = recoupling::admissible(level, a, b, s) && recoupling::admissible(level, s, c, d);
      right[static_cast<std::size_t>(x)] = recoupling::admissible(level, b, c, s) && recoupling::admissible(level, a, s, d);
      any = any || left[static_cast<std::size_t>(x)];
    }
    if (!any) continue;
    const auto& from = forward ? left : right;
    const auto& to = forward ? right : left;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(lanes, lanes);
    std::vector<int> spare_in, spare_out;
    for (int x = 0; x < lanes; ++x) {
      const auto ux = static_cast<std::size_t>(x);
      if (from[ux]) {
        for (int y = 0; y < lanes; ++y) {
          if (!to[static_cast<std::size_t>(y)]) continue;
          m(y, x) = forward ? cache.get(a, b, c, d, Spin{x}, Spin{y}) : cache.get(a, b, c, d, Spin{y}, Spin{x});
        }
      } else if (!to[ux]) {
        m(x, x) = 1.0;
      } else {
        spare_in.push_back(x);
      }
      if (from[ux] && !to[ux]) spare_out.push_back(x);
    }
    // Codes freed on one side are paired with codes taken on the other so
    // that the full lane matrix stays orthogonal.
    for (std::size_t i = 0; i < spare_in.size(); ++i) m(spare_out[i], spare_in[i]) = 1.0;
    out->boundary[code] = static_cast<int>(out->tables.size());
    out->tables.push_back(std::move(m));
  }
  return out;
}

std::shared_ptr<const GateOp::Q6jTables> q6j_tables(const Level& level, int w, bool forward) {
  static std::mutex mutex;
  static std::map<std::pair<int, bool>, std::shared_ptr<const GateOp::Q6jTables>> memo;
  std::lock_guard lock(mutex);
  auto& slot = memo[{level.k(), forward}];
  if (!slot) slot = build_q6j_tables(level, w, forward);
  return slot;
}

}  // namespace

GateOp q6j_gate(const RegisterLayout& layout, const kaulrep::DualityMove& move) {
  GateOp g;
  g.kind = GateKind::Q6j;
  g.block_width = layout.block_width;
  for (const auto& ref : move.boundary) g.blocks.push_back(block_of(layout, ref));
  g.blocks.push_back(layout.internal_block(move.changed));
  g.q6j = q6j_tables(layout.level, layout.block_width, move.forward);
  g.label = std::string(move.forward ? "q6j" : "q6j^T") + "@" + std::to_string(move.changed);
  return g;
}

GateOp phase_gate(const RegisterLayout& layout, const braid::LevelSlice& slice, std::size_t lpos, int slot,
                  int sign) {
  GateOp g;
  g.kind = GateKind::DiagonalPhase;
  g.block_width = layout.block_width;
  const bool colors_in_register = layout.m > 1;
  if (colors_in_register) {
    g.blocks = {layout.color_block(static_cast<int>(lpos)), layout.color_block(static_cast<int>(lpos) + 1)};
  }
  g.blocks.push_back(layout.internal_block(slot));
  g.label = "phase@" + std::to_string(lpos + 1) + (sign > 0 ? "+" : "-");

  const int w = layout.block_width;
  const std::uint64_t lane = (std::uint64_t{1} << w) - 1;
  const std::uint64_t n = g.sub_dim();
  g.perm.resize(n);
  g.phase.assign(n, Cplx{1.0, 0.0});
  const int k = layout.level.k();
  for (std::uint64_t code = 0; code < n; ++code) {
    g.perm[code] = static_cast<std::uint32_t>(code);
    Spin ca = slice[lpos].color, cb = slice[lpos + 1].color, t{};
    if (colors_in_register) {
      ca = Spin{static_cast<int>(code & lane)};
      cb = Spin{static_cast<int>((code >> w) & lane)};
      t = Spin{static_cast<int>(code >> (2 * w))};
    } else {
      t = Spin{static_cast<int>(code)};
    }
    if (std::max({ca.twice, cb.twice, t.twice}) > k || !recoupling::admissible(layout.level, ca, cb, t)) continue;
    const braid::StrandState left{ca, slice[lpos].up}, right{cb, slice[lpos + 1].up};
    g.phase[code] = kaulrep::crossing_eigenvalue(layout.level, left, right, t, sign);
    if (colors_in_register) {
      g.perm[code] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(cb.twice) |
                                                (static_cast<std::uint64_t>(ca.twice) << w) |
                                                (static_cast<std::uint64_t>(t.twice) << (2 * w)));
    }
  }
  return g;
}

GateOp color_relabel(const RegisterLayout& layout, const braid::LevelSlice& from, const braid::LevelSlice& to) {
  GateOp g;
  g.kind = GateKind::ColorRelabel;
  g.block_width = layout.block_width;
  g.label = "relabel";
  if (layout.m == 1) return g;
  for (std::size_t i = 0; i < from.size(); ++i) {
    const int cap = (1 << layout.block_width) - 1;
    if (std::max(from[i].color.twice, to[i].color.twice) > cap) {
      throw Error(ErrorCode::Overflow, "color does not fit a " + std::to_string(layout.block_width) + "-qubit block");
    }
    const auto diff = static_cast<std::uint64_t>(from[i].color.twice ^ to[i].color.twice);
    if (diff == 0) continue;
    const int b = layout.color_block(static_cast<int>(i));
    g.blocks.push_back(b);
    g.xor_mask |= diff << (b * layout.block_width);
  }
  return g;
}

std::size_t CompiledCircuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates.begin(), gates.end(), [kind](const GateOp& g) { return g.kind == kind; }));
}

CompiledCircuit compile_word(const RegisterLayout& layout, const braid::LevelSlice& bottom,
                             const std::vector<int>& word) {
  const int m = layout.m;
  if (bottom.size() != static_cast<std::size_t>(2 * m)) {
    throw Error(ErrorCode::Size, "layout is for " + std::to_string(2 * m) + " strands, slice has " +
                                     std::to_string(bottom.size()));
  }
  std::vector<GateOp> forward, backward;
  for (const auto& mv : kaulrep::duality_decomposition(m)) forward.push_back(q6j_gate(layout, mv));
  for (const auto& mv : kaulrep::inverse_moves(kaulrep::duality_decomposition(m))) {
    backward.push_back(q6j_gate(layout, mv));
  }

  CompiledCircuit out;
  braid::LevelSlice slice = bottom;
  for (int letter : word) {
    const int gen = std::abs(letter);
    if (gen < 1 || gen > 2 * m - 1) {
      throw Error(ErrorCode::Index, "generator " + std::to_string(letter) + " outside 1.." + std::to_string(2 * m - 1));
    }
    const int sign = letter > 0 ? 1 : -1;
    const auto lpos = static_cast<std::size_t>(gen - 1);
    LetterGates lg{letter, out.gates.size()};
    if (gen % 2 == 1) {
      out.gates.push_back(phase_gate(layout, slice, lpos, kaulrep::odd_pair_slot(m, (gen - 1) / 2), sign));
    } else {
      out.gates.insert(out.gates.end(), forward.begin(), forward.end());
      out.gates.push_back(phase_gate(layout, slice, lpos, kaulrep::even_pair_slot(m, gen / 2), sign));
      out.gates.insert(out.gates.end(), backward.begin(), backward.end());
      lg.q6j = forward.size() + backward.size();
    }
    lg.phase = 1;
    out.letters.push_back(lg);
    slice = slice.swapped(lpos);
  }
  return out;
}

CompiledCircuit compile_braid(const RegisterLayout& layout, const braid::ColoredBraidWord& b) {
  if (b.strands != 2 * layout.m) {
    throw Error(ErrorCode::Size, "layout is for " + std::to_string(2 * layout.m) + " strands, braid has " +
                                     std::to_string(b.strands));
  }
  braid::check_plat(b);
  braid::check_level(b, layout.level);
  return compile_word(layout, b.bottom, b.word);
}

CompiledCircuit overlap_circuit(const RegisterLayout& layout, const braid::ColoredBraidWord& b) {
  CompiledCircuit c = compile_braid(layout, b);
  const braid::LevelSlice top = braid::slice_at(b, b.length());
  GateOp relabel = color_relabel(layout, top, b.bottom);
  if (relabel.xor_mask != 0) c.gates.push_back(std::move(relabel));
  return c;
}

// ---------------------------------------------------------------------------
// Simulation

int max_qubits() {
  constexpr int kDefault = 24;
  const char* env = std::getenv("PLATJONES_MAX_QUBITS");
  if (env == nullptr || *env == '\0') return kDefault;
  const std::string_view text(env);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || value < 1 || value > 40) {
    throw Error(ErrorCode::Domain, "PLATJONES_MAX_QUBITS must be an integer in 1..40, got '" + std::string(text) + "'");
  }
  return value;
}

void check_size(int qubits) {
  const int limit = max_qubits();
  if (qubits > limit) {
    throw Error(ErrorCode::SizeGuard, "simulation needs " + std::to_string(qubits) + " qubits; limit is " +
                                          std::to_string(limit) + " (PLATJONES_MAX_QUBITS)");
  }
}

std::vector<Cplx> basis_state(int qubits, std::uint64_t index) {
  check_size(qubits);
  std::vector<Cplx> state(std::size_t{1} << qubits);
  if (index >= state.size()) throw Error(ErrorCode::OutOfRange, "basis index beyond the register");
  state[index] = 1.0;
  return state;
}

void apply_gates(const std::vector<GateOp>& gates, int ancilla_bit, std::vector<Cplx>& state, Backend backend) {
  std::vector<Cplx> scratch;
  for (const auto& g : gates) {
    if (backend == Backend::Serial) {
      kernels::apply_serial(g, ancilla_bit, state, scratch);
    } else {
      kernels::apply_omp(g, ancilla_bit, state, scratch);
    }
  }
}

void apply_sparse(const GateOp& g, int ancilla_bit, SparseRegister& state) {
  SparseRegister out;
  out.reserve(state.size());
  const int w = g.block_width;
  for (const auto& [index, amp] : state) {
    if (!bits::active(g, index, ancilla_bit)) {
      out[index] += amp;
      continue;
    }
    switch (g.kind) {
      case GateKind::Q6j: {
        std::uint64_t boundary = 0;
        for (int i = 0; i < 4; ++i) boundary |= bits::block_code(index, g.blocks[static_cast<std::size_t>(i)], w) << (i * w);
        const int t = g.q6j->boundary[boundary];
        if (t < 0) {
          out[index] += amp;
          break;
        }
        const auto& m = g.q6j->tables[static_cast<std::size_t>(t)];
        const int changed = g.blocks[4];
        const auto old = ix(bits::block_code(index, changed, w));
        for (Eigen::Index y = 0; y < m.rows(); ++y) {
          const double c = m(y, old);
          if (c != 0.0) out[bits::with_block(index, changed, w, static_cast<std::uint64_t>(y))] += c * amp;
        }
        break;
      }
      case GateKind::DiagonalPhase: {
        const std::uint64_t code = bits::gate_code(g, index);
        out[bits::scatter_code(g, index, g.perm[code])] += g.phase[code] * amp;
        break;
      }
      case GateKind::ColorRelabel: out[index ^ g.xor_mask] += amp; break;
    }
  }
  state = std::move(out);
}

void apply_sparse(const std::vector<GateOp>& gates, int ancilla_bit, SparseRegister& state) {
  for (const auto& g : gates) apply_sparse(g, ancilla_bit, state);
}

// ---------------------------------------------------------------------------
// Hadamard test

namespace {

nlohmann::ordered_json cplx_json(Cplx z) { return {{"re", z.real()}, {"im", z.imag()}, {"abs", std::abs(z)}}; }

class SignStream {
 public:
  SignStream(double p0, std::uint64_t seed) : p0_(p0), rng_(seed) {}
  int next() {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return u < p0_ ? 1 : -1;
  }

 private:
  double p0_;
  std::mt19937_64 rng_;
};

/// Means of n signs overall and over kBatches consecutive batches.
std::pair<double, std::vector<double>> sign_means(double p0, std::int64_t n, std::uint64_t seed) {
  SignStream stream(p0, seed);
  const std::int64_t batches = std::min<std::int64_t>(kBatches, n);
  std::vector<double> batch_means;
  std::int64_t total = 0;
  for (std::int64_t bi = 0; bi < batches; ++bi) {
    const std::int64_t lo = n * bi / batches, hi = n * (bi + 1) / batches;
    std::int64_t sum = 0;
    for (std::int64_t i = lo; i < hi; ++i) sum += stream.next();
    total += sum;
    batch_means.push_back(static_cast<double>(sum) / static_cast<double>(hi - lo));
  }
  return {static_cast<double>(total) / static_cast<double>(n), batch_means};
}

}  // namespace

std::string to_json(const SampleReport& r) {
  nlohmann::ordered_json batches = nlohmann::ordered_json::array();
  for (const auto& z : r.per_batch_means) batches.push_back({{"re", z.real()}, {"im", z.imag()}});
  const nlohmann::ordered_json j = {{"exact", cplx_json(r.exact)},     {"estimate", cplx_json(r.estimate)},
                            {"n_samples", r.n_samples},        {"delta", r.delta},
                            {"seed", r.seed},                  {"scale", r.scale},
                            {"per_batch_means", batches}};
  return j.dump();
}

Cplx hadamard_overlap(const RegisterLayout& layout, const std::vector<GateOp>& gates, std::uint64_t initial,
                      Backend backend) {
  const int anc = layout.ancilla_bit();
  std::vector<Cplx> state = basis_state(layout.total_qubits(), initial);
  const std::uint64_t flag = std::uint64_t{1} << anc;
  const double r = 1.0 / std::sqrt(2.0);
  state[initial] = r;
  state[initial | flag] = r;

  std::vector<GateOp> ctrl;
  ctrl.reserve(gates.size());
  for (const auto& g : gates) ctrl.push_back(controlled(g));
  apply_gates(ctrl, anc, state, backend);

  // H on the ancilla (x), or S^dagger then H (y); keep P(ancilla = 0).
  double px = 0.0, py = 0.0;
  for (std::uint64_t i = 0; i < flag; ++i) {
    const Cplx a0 = state[i], a1 = state[i | flag];
    px += std::norm((a0 + a1) * r);
    py += std::norm((a0 - Cplx{0.0, 1.0} * a1) * r);
  }
  return {2.0 * px - 1.0, 2.0 * py - 1.0};
}

double zero_probability(Cplx z, Axis axis) {
  const double p = 0.5 * (1.0 + (axis == Axis::X ? z.real() : z.imag()));
  return std::clamp(p, 0.0, 1.0);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<int> draw_signs(double p0, std::int64_t n, std::uint64_t seed) {
  SignStream stream(p0, seed);
  std::vector<int> out(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  for (auto& s : out) s = stream.next();
  return out;
}

SampleReport hadamard_test(const RegisterLayout& layout, const std::vector<GateOp>& gates, std::uint64_t initial,
                           Axis axis, std::int64_t n, std::uint64_t seed, Backend backend) {
  if (n < 1) throw Error(ErrorCode::Domain, "hadamard_test needs n >= 1");
  SampleReport r;
  r.exact = hadamard_overlap(layout, gates, initial, backend);
  r.n_samples = n;
  r.seed = seed;
  const auto [mean, batches] = sign_means(zero_probability(r.exact, axis), n, seed);
  const auto on_axis = [axis](double v) { return axis == Axis::X ? Cplx{v, 0.0} : Cplx{0.0, v}; };
  r.estimate = on_axis(mean);
  for (double b : batches) r.per_batch_means.push_back(on_axis(b));
  return r;
}

std::int64_t chernoff_samples(double delta, double fail_prob, double variance_bound) {
  if (!(delta > 0.0) || !(fail_prob > 0.0) || !(fail_prob <= 1.0) || !(variance_bound > 0.0)) {
    throw Error(ErrorCode::Domain, "chernoff_samples needs delta > 0, 0 < fail_prob <= 1, variance_bound > 0");
  }
  const double n = std::ceil(4.0 * variance_bound / (delta * delta) * std::log(2.0 / fail_prob));
  if (!(n < 9.0e18)) throw Error(ErrorCode::Domain, "sample count overflows");
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(n));
}

Cplx plat_overlap(const Level& level, const braid::ColoredBraidWord& b, Backend backend) {
  const RegisterLayout lay = layout(b.caps(), level);
  check_size(lay.total_qubits());
  const CompiledCircuit circuit = overlap_circuit(lay, b);
  kaulrep::FusionPath vacuum;
  for (const auto& s : b.bottom.strands) vacuum.colors.push_back(s.color);
  vacuum.internal.assign(static_cast<std::size_t>(kaulrep::internal_slots(lay.m)), Spin{0});
  return hadamard_overlap(lay, circuit.gates, encode_path(lay, vacuum), backend);
}

SampleReport sample_overlap(Cplx overlap, Cplx exact_value, double scale, double delta, std::int64_t n,
                            std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::Domain, "sampling needs n >= 1");
  SampleReport r;
  r.scale = scale;
  r.exact = exact_value;
  r.delta = delta;
  r.seed = seed;
  r.n_samples = n;
  const auto [mx, bx] = sign_means(zero_probability(overlap, Axis::X), n, derive_seed(seed, 0));
  const auto [my, by] = sign_means(zero_probability(overlap, Axis::Y), n, derive_seed(seed, 1));
  r.estimate = scale * Cplx{mx, my};
  for (std::size_t i = 0; i < bx.size(); ++i) r.per_batch_means.push_back(scale * Cplx{bx[i], by[i]});
  return r;
}

SampleReport approximate_colored_jones(const Level& level, const braid::ColoredBraidWord& b, double delta,
                                       std::uint64_t seed, std::int64_t samples, Backend backend) {
  const invariant::InvariantValue exact = invariant::evaluate(level, b);
  if (samples <= 0 && !(delta > 0.0)) throw Error(ErrorCode::Domain, "sampling needs delta > 0 or a sample count");
  const Cplx z = plat_overlap(level, b, backend);
  const std::int64_t n = samples > 0 ? samples : chernoff_samples(delta / exact.qdim_product, 0.25, 1.0);
  return sample_overlap(z, exact.value, exact.qdim_product, delta, n, seed);
}

std::vector<TracePoint> convergence_trace(Cplx exact_overlap, std::int64_t n, std::uint64_t seed) {
  SignStream sx(zero_probability(exact_overlap, Axis::X), derive_seed(seed, 0));
  SignStream sy(zero_probability(exact_overlap, Axis::Y), derive_seed(seed, 1));
  std::vector<TracePoint> out;
  std::int64_t next_mark = 1, decade = 1;
  const std::int64_t steps[] = {1, 2, 5};
  int step = 0;
  std::int64_t sum_x = 0, sum_y = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    sum_x += sx.next();
    sum_y += sy.next();
    if (i == next_mark || i == n) {
      const auto d = static_cast<double>(i);
      out.push_back({i, Cplx{static_cast<double>(sum_x) / d, static_cast<double>(sum_y) / d}});
    }
    if (i == next_mark) {
      if (++step == 3) {
        step = 0;
        decade *= 10;
      }
      next_mark = steps[step] * decade;
    }
  }
  return out;
}

}  // namespace platjones::circuitsim
