#include "platjones/kaulrep.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "platjones/error.hpp"

namespace platjones::kaulrep {

using recoupling::admissible;

int internal_slots(int m) { return m == 1 ? 1 : 2 * m - 3; }

int chain_slot(int m, int l) { return l == 0 ? 0 : m - 2 + l; }

int odd_pair_slot(int m, int i) {
  if (m == 1) return 0;
  return i <= m - 2 ? i : chain_slot(m, m - 2);
}

int even_pair_slot(int m, int l) { return chain_slot(m, l - 1); }

Spin FusionPath::pair_label(int i) const {
  return internal.at(static_cast<std::size_t>(odd_pair_slot(caps(), i)));
}

Spin FusionPath::chain_label(int l) const {
  return internal.at(static_cast<std::size_t>(chain_slot(caps(), l)));
}

Basis::Basis(Level lvl, braid::LevelSlice s, std::vector<FusionPath> p)
    : level(lvl), slice(std::move(s)), paths(std::move(p)) {
  for (std::size_t i = 0; i < paths.size(); ++i) lookup_.emplace(paths[i], i);
}

std::optional<std::size_t> Basis::index_of(const FusionPath& p) const {
  if (auto it = lookup_.find(p); it != lookup_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::size_t> Basis::vacuum_index() const {
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& in = paths[i].internal;
    if (std::all_of(in.begin(), in.end(), [](Spin s) { return s.twice == 0; })) return i;
  }
  return std::nullopt;
}

Basis enumerate_basis(const Level& level, const braid::LevelSlice& slice) {
  if (slice.size() < 2 || slice.size() % 2 != 0) {
    throw Error(ErrorCode::Domain, "slice must have an even number of strands");
  }
  for (const auto& s : slice.strands) {
    if (s.color.twice > level.k()) {
      throw Error(ErrorCode::Truncation, "color " + braid::format_spin(s.color) + " exceeds k/2");
    }
  }
  std::vector<FusionPath> found;
  const int m = static_cast<int>(slice.size() / 2);
  auto color = [&](int i) { return slice[static_cast<std::size_t>(i)].color; };

  FusionPath path;
  for (const auto& s : slice.strands) path.colors.push_back(s.color);
  path.internal.assign(static_cast<std::size_t>(internal_slots(m)), Spin{0});

  if (m == 1) {
    if (admissible(level, color(0), color(1), Spin{0})) found.push_back(path);
  } else {
    // Depth-first over pairs 0..m-2 with the running chain label.
    auto recurse = [&](auto&& self, int i, Spin chain) -> void {
      if (i == m - 1) {
        if (admissible(level, color(2 * i), color(2 * i + 1), chain)) found.push_back(path);
        return;
      }
      for (int p = 0; p <= level.k(); ++p) {
        const Spin ps{p};
        if (!admissible(level, color(2 * i), color(2 * i + 1), ps)) continue;
        path.internal[static_cast<std::size_t>(i)] = ps;
        if (i == 0) {
          self(self, 1, ps);
          continue;
        }
        for (int r = 0; r <= level.k(); ++r) {
          const Spin rs{r};
          if (!admissible(level, chain, ps, rs)) continue;
          path.internal[static_cast<std::size_t>(chain_slot(m, i))] = rs;
          self(self, i + 1, rs);
        }
      }
    };
    recurse(recurse, 0, Spin{0});
  }
  std::sort(found.begin(), found.end(),
            [](const FusionPath& a, const FusionPath& b) { return a.internal < b.internal; });
  return Basis(level, slice, std::move(found));
}

Cplx half_twist_eigenvalue(const Level& level, Spin j, Spin jp, Spin t, bool parallel, bool inverse) {
  if (!admissible(level, j, jp, t)) {
    throw Error(ErrorCode::InadmissibleTriple, "(" + braid::format_spin(j) + "," + braid::format_spin(jp) +
                                                   "," + braid::format_spin(t) + ") is not admissible");
  }
  const Eighths cj = casimir(j), cjp = casimir(jp), ct = casimir(t);
  int sign_power;
  Eighths exponent;
  if (parallel) {
    sign_power = (j.twice + jp.twice - t.twice) / 2;
    exponent = (cj + cjp).half() + casimir(std::min(j, jp)) - ct.half();
  } else {
    sign_power = (t.twice - std::abs(j.twice - jp.twice)) / 2;
    const Eighths diff = cj > cjp ? cj - cjp : cjp - cj;
    exponent = ct.half() - diff.half();
  }
  Cplx value = q_power(level, exponent);
  if (sign_power % 2 != 0) value = -value;
  return inverse ? std::conj(value) : value;
}

Cplx crossing_eigenvalue(const Level& level, const braid::StrandState& left,
                         const braid::StrandState& right, Spin t, int sign) {
  const bool parallel = left.up == right.up;
  const bool positive = (sign > 0) == parallel;
  return half_twist_eigenvalue(level, left.color, right.color, t, parallel, !positive);
}

RepMatrix compose(const RepMatrix& first, const RepMatrix& second) {
  if (!(first.target.slice == second.source.slice) || !(first.target.level == second.source.level)) {
    throw Error(ErrorCode::SliceMismatch, "cannot compose: slices differ");
  }
  return RepMatrix{first.source, second.target, second.entries * first.entries};
}

namespace {

void check_generator(const Basis& basis, int generator) {
  const int strands = static_cast<int>(basis.slice.size());
  if (generator < 1 || generator > strands - 1) {
    throw Error(ErrorCode::Index, "generator " + std::to_string(generator) + " outside 1.." +
                                      std::to_string(strands - 1));
  }
}

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

RepMatrix odd_generator(const Basis& basis, int generator, bool inverse) {
  check_generator(basis, generator);
  if (generator % 2 == 0) throw Error(ErrorCode::Index, "odd_generator called with even index");
  const int m = basis.caps();
  const int pair = (generator - 1) / 2;
  const std::size_t lpos = static_cast<std::size_t>(generator - 1);
  Basis target = enumerate_basis(basis.level, basis.slice.swapped(lpos));
  RepMatrix out{basis, target, Eigen::MatrixXcd::Zero(idx(target.dim()), idx(basis.dim()))};
  const int slot = odd_pair_slot(m, pair);
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    FusionPath p = basis.paths[col];
    const Spin t = p.internal[static_cast<std::size_t>(slot)];
    const Cplx lambda = crossing_eigenvalue(basis.level, basis.slice[lpos], basis.slice[lpos + 1], t,
                                            inverse ? -1 : 1);
    std::swap(p.colors[lpos], p.colors[lpos + 1]);
    const auto row = target.index_of(p);
    if (!row) throw Error(ErrorCode::SliceMismatch, "exchanged path missing from target basis");
    out.entries(idx(*row), idx(col)) = lambda;
  }
  return out;
}

RepMatrix even_generator(const Basis& basis, int generator, bool inverse) {
  check_generator(basis, generator);
  if (generator % 2 != 0) throw Error(ErrorCode::Index, "even_generator called with odd index");
  const int m = basis.caps();
  const int l = generator / 2;
  const std::size_t lpos = static_cast<std::size_t>(generator - 1);
  Basis target = enumerate_basis(basis.level, basis.slice.swapped(lpos));
  RepMatrix out{basis, target, Eigen::MatrixXcd::Zero(idx(target.dim()), idx(basis.dim()))};

  const auto moves = duality_decomposition(m);
  const auto back = inverse_moves(moves);
  const int slot = even_pair_slot(m, l);
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    const SparseState even = apply_moves(basis.level, SparseState{{basis.paths[col], Cplx{1.0, 0.0}}}, moves);
    SparseState twisted;
    for (const auto& [path, amp] : even) {
      const Spin t = path.internal[static_cast<std::size_t>(slot)];
      const Cplx lambda = crossing_eigenvalue(basis.level, basis.slice[lpos], basis.slice[lpos + 1], t,
                                              inverse ? -1 : 1);
      FusionPath swapped = path;
      std::swap(swapped.colors[lpos], swapped.colors[lpos + 1]);
      twisted[swapped] += lambda * amp;
    }
    for (const auto& [path, amp] : apply_moves(basis.level, twisted, back)) {
      const auto row = target.index_of(path);
      if (!row) {
        if (std::abs(amp) > 1e-12) throw Error(ErrorCode::SliceMismatch, "amplitude left the target basis");
        continue;
      }
      out.entries(idx(*row), idx(col)) += amp;
    }
  }
  return out;
}

RepMatrix generator_matrix(const Basis& basis, int letter) {
  const int g = std::abs(letter);
  return g % 2 == 1 ? odd_generator(basis, g, letter < 0) : even_generator(basis, g, letter < 0);
}

std::vector<DualityMove> duality_decomposition(int m, MoveOrder order) {
  std::vector<DualityMove> moves;
  if (m < 2) return moves;
  auto color = [](int i) { return LabelRef{LabelKind::Color, i}; };
  auto slot = [](int i) { return LabelRef{LabelKind::Internal, i}; };

  // Stage 1: (r_{i-1} (j_{2i+1} j_{2i+2})_{p_i})_{r_i} -> ((r_{i-1} j_{2i+1})_{t_i} j_{2i+2})_{r_i}.
  std::vector<DualityMove> split;
  for (int i = 1; i <= m - 2; ++i) {
    split.push_back({{slot(chain_slot(m, i - 1)), color(2 * i), color(2 * i + 1), slot(chain_slot(m, i))}, i, false});
  }
  // Stage 2: ((t_l j_{2l+2})_{r_l} j_{2l+3})_{t_{l+1}} -> (t_l (j_{2l+2} j_{2l+3})_{q_{l+1}})_{t_{l+1}},
  // with t_0 = j_1 and t_{m-1} = j_{2m}.
  std::vector<DualityMove> pair;
  for (int l = 0; l <= m - 2; ++l) {
    const LabelRef a = l == 0 ? color(0) : slot(l);
    const LabelRef d = l + 1 == m - 1 ? color(2 * m - 1) : slot(l + 1);
    pair.push_back({{a, color(2 * l + 1), color(2 * l + 2), d}, chain_slot(m, l), true});
  }
  if (order == MoveOrder::Descending) {
    std::reverse(split.begin(), split.end());
    std::reverse(pair.begin(), pair.end());
  }
  moves.insert(moves.end(), split.begin(), split.end());
  moves.insert(moves.end(), pair.begin(), pair.end());

  // Stage 3: ((t_{i-1} Q_i)_{t_i} S_i)_{j_{2m}} -> (t_{i-1} (Q_i S_i)_{s_{i-1}})_{j_{2m}},
  // from i = m-2 down to 1, with S_{m-2} = Q_{m-1}.
  for (int i = m - 2; i >= 1; --i) {
    const LabelRef a = i == 1 ? color(0) : slot(i - 1);
    const LabelRef c = i == m - 2 ? slot(chain_slot(m, m - 2)) : slot(i + 1);
    moves.push_back({{a, slot(chain_slot(m, i - 1)), c, color(2 * m - 1)}, i, true});
  }
  return moves;
}

std::vector<DualityMove> inverse_moves(const std::vector<DualityMove>& moves) {
  std::vector<DualityMove> out(moves.rbegin(), moves.rend());
  for (auto& mv : out) mv.forward = !mv.forward;
  return out;
}

const recoupling::FMoveCache& fmove_cache(const Level& level) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<recoupling::FMoveCache>> caches;
  std::lock_guard lock(mutex);
  auto& slot = caches[level.k()];
  if (!slot) slot = std::make_unique<recoupling::FMoveCache>(level);
  return *slot;
}

namespace {

Spin read(const FusionPath& p, const LabelRef& ref) {
  return ref.kind == LabelKind::Color ? p.colors.at(static_cast<std::size_t>(ref.index))
                                      : p.internal.at(static_cast<std::size_t>(ref.index));
}

}  // namespace

SparseState apply_move(const Level& level, const SparseState& state, const DualityMove& move) {
  const auto& cache = fmove_cache(level);
  SparseState out;
  for (const auto& [path, amp] : state) {
    const Spin a = read(path, move.boundary[0]), b = read(path, move.boundary[1]);
    const Spin c = read(path, move.boundary[2]), d = read(path, move.boundary[3]);
    const Spin old = path.internal.at(static_cast<std::size_t>(move.changed));
    for (int x = 0; x <= level.k(); ++x) {
      const Spin fresh{x};
      const double coef = move.forward ? cache.get(a, b, c, d, old, fresh) : cache.get(a, b, c, d, fresh, old);
      if (coef == 0.0) continue;
      FusionPath next = path;
      next.internal[static_cast<std::size_t>(move.changed)] = fresh;
      out[next] += coef * amp;
    }
  }
  return out;
}

SparseState apply_moves(const Level& level, const SparseState& state, const std::vector<DualityMove>& moves) {
  SparseState cur = state;
  for (const auto& mv : moves) cur = apply_move(level, cur, mv);
  return cur;
}

DualityMatrix duality_matrix(const Basis& odd, MoveOrder order) {
  const auto moves = duality_decomposition(odd.caps(), order);
  const auto back = inverse_moves(moves);
  std::vector<SparseState> columns;
  std::map<FusionPath, std::size_t> even_index;
  for (const auto& p : odd.paths) {
    columns.push_back(apply_moves(odd.level, SparseState{{p, Cplx{1.0, 0.0}}}, moves));
    for (const auto& [path, amp] : columns.back()) even_index.emplace(path, 0);
  }
  DualityMatrix out{odd, {}, {}, {}};
  for (auto& [path, index] : even_index) {
    index = out.even.size();
    out.even.push_back(path);
  }
  out.forward = Eigen::MatrixXd::Zero(idx(out.even.size()), idx(odd.dim()));
  for (std::size_t col = 0; col < columns.size(); ++col) {
    for (const auto& [path, amp] : columns[col]) out.forward(idx(even_index.at(path)), idx(col)) = amp.real();
  }
  out.backward = Eigen::MatrixXd::Zero(idx(odd.dim()), idx(out.even.size()));
  for (std::size_t col = 0; col < out.even.size(); ++col) {
    for (const auto& [path, amp] : apply_moves(odd.level, SparseState{{out.even[col], Cplx{1.0, 0.0}}}, back)) {
      const auto row = odd.index_of(path);
      if (!row) {
        if (std::abs(amp) > 1e-12) throw Error(ErrorCode::SliceMismatch, "inverse duality left the basis");
        continue;
      }
      out.backward(idx(*row), idx(col)) = amp.real();
    }
  }
  return out;
}

}  // namespace platjones::kaulrep
