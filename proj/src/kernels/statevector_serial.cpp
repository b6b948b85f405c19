#include "platjones/kernels.hpp"

#include <array>
#include <cstdint>
#include <utility>

#include "block_bits.hpp"

namespace platjones::kernels {

using circuitsim::GateKind;
using circuitsim::GateOp;

namespace {

void q6j(const GateOp& g, int ancilla_bit, std::vector<Cplx>& state) {
  const int w = g.block_width;
  const unsigned shift = static_cast<unsigned>(g.blocks[4] * w);
  const std::int64_t groups = static_cast<std::int64_t>(state.size() >> w);
  const std::uint64_t lanes = std::uint64_t{1} << w;
  for (std::int64_t gi = 0; gi < groups; ++gi) {
    const std::uint64_t base = detail::group_base(static_cast<std::uint64_t>(gi), shift, w);
    if (!detail::active(g, base, ancilla_bit)) continue;
    std::uint64_t boundary = 0;
    for (int i = 0; i < 4; ++i) boundary |= detail::block_code(base, g.blocks[static_cast<std::size_t>(i)], w) << (i * w);
    const int t = g.q6j->boundary[boundary];
    if (t < 0) continue;
    const Eigen::MatrixXd& m = g.q6j->tables[static_cast<std::size_t>(t)];
    std::array<Cplx, std::size_t{1} << detail::kMaxBlockWidth> in{};
    for (std::uint64_t x = 0; x < lanes; ++x) in[x] = state[base | (x << shift)];
    for (std::uint64_t y = 0; y < lanes; ++y) {
      Cplx acc{0.0, 0.0};
      for (std::uint64_t x = 0; x < lanes; ++x) acc += m(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) * in[x];
      state[base | (y << shift)] = acc;
    }
  }
}

void phase(const GateOp& g, int ancilla_bit, std::vector<Cplx>& state, std::vector<Cplx>& scratch) {
  scratch.resize(state.size());
  const std::int64_t n = static_cast<std::int64_t>(state.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    if (!detail::active(g, index, ancilla_bit)) {
      scratch[index] = state[index];
      continue;
    }
    const std::uint64_t code = detail::gate_code(g, index);
    scratch[detail::scatter_code(g, index, g.perm[code])] = g.phase[code] * state[index];
  }
  std::swap(state, scratch);
}

void relabel(const GateOp& g, int ancilla_bit, std::vector<Cplx>& state, std::vector<Cplx>& scratch) {
  scratch.resize(state.size());
  const std::int64_t n = static_cast<std::int64_t>(state.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const auto index = static_cast<std::uint64_t>(i);
    scratch[detail::active(g, index, ancilla_bit) ? (index ^ g.xor_mask) : index] = state[index];
  }
  std::swap(state, scratch);
}

}  // namespace

void apply_serial(const GateOp& gate, int ancilla_bit, std::vector<Cplx>& state, std::vector<Cplx>& scratch) {
  detail::check_width(gate);
  switch (gate.kind) {
    case GateKind::Q6j: q6j(gate, ancilla_bit, state); break;
    case GateKind::DiagonalPhase: phase(gate, ancilla_bit, state, scratch); break;
    case GateKind::ColorRelabel: relabel(gate, ancilla_bit, state, scratch); break;
  }
}

}  // namespace platjones::kernels
