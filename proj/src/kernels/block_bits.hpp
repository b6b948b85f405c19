#pragma once

#include <cstdint>

#include "platjones/error.hpp"
#include "platjones/gate.hpp"

namespace platjones::kernels::detail {

inline std::uint64_t block_code(std::uint64_t index, int block, int w) {
  return (index >> (static_cast<unsigned>(block * w))) & ((std::uint64_t{1} << w) - 1);
}

inline std::uint64_t with_block(std::uint64_t index, int block, int w, std::uint64_t code) {
  const unsigned shift = static_cast<unsigned>(block * w);
  const std::uint64_t mask = ((std::uint64_t{1} << w) - 1) << shift;
  return (index & ~mask) | (code << shift);
}

/// Code of the gate's target blocks, first block in the lowest bits.
inline std::uint64_t gate_code(const circuitsim::GateOp& g, std::uint64_t index) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < g.blocks.size(); ++i) {
    code |= block_code(index, g.blocks[i], g.block_width) << (i * static_cast<std::size_t>(g.block_width));
  }
  return code;
}

inline std::uint64_t scatter_code(const circuitsim::GateOp& g, std::uint64_t index, std::uint64_t code) {
  const std::uint64_t lane = (std::uint64_t{1} << g.block_width) - 1;
  for (std::size_t i = 0; i < g.blocks.size(); ++i) {
    index = with_block(index, g.blocks[i], g.block_width, (code >> (i * static_cast<std::size_t>(g.block_width))) & lane);
  }
  return index;
}

/// Index of the g-th group of 2^w amplitudes that differ only in the
/// block at bit offset `shift`.
inline std::uint64_t group_base(std::uint64_t g, unsigned shift, int w) {
  const std::uint64_t lo = g & ((std::uint64_t{1} << shift) - 1);
  const std::uint64_t hi = g >> shift;
  return (hi << (shift + static_cast<unsigned>(w))) | lo;
}

inline bool active(const circuitsim::GateOp& g, std::uint64_t index, int ancilla_bit) {
  return !g.controlled || ((index >> ancilla_bit) & 1U) != 0;
}

constexpr int kMaxBlockWidth = 6;

inline void check_width(const circuitsim::GateOp& g) {
  if (g.block_width < 1 || g.block_width > kMaxBlockWidth) {
    throw Error(ErrorCode::SizeGuard, "block width outside 1..6");
  }
}

}  // namespace platjones::kernels::detail
