#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "platjones/qarith.hpp"

namespace platjones::circuitsim {

enum class GateKind {
  /// Phase on a (color, color, label) triple, exchanging the two color
  /// blocks on physical codes.
  DiagonalPhase,
  /// Elementary recoupling: four boundary blocks select a small unitary
  /// acting on the fifth block.
  Q6j,
  /// XOR mask on color blocks; maps the top coloring back onto the bottom
  /// one so a Hadamard test can overlap the two cap states.
  ColorRelabel,
};

std::string to_string(GateKind kind);

/// A gate on a sub-register of whole blocks. Blocks are `block_width`
/// qubits wide; block b occupies bits [b*w, (b+1)*w) of a basis index.
struct GateOp {
  GateKind kind = GateKind::DiagonalPhase;
  std::vector<int> blocks;
  int block_width = 1;
  bool controlled = false;
  std::string label;

  // Q6j: boundary code (a | b<<w | c<<2w | d<<3w) -> index into `tables`,
  // or -1 where the gate is the identity. Each table maps old code
  // (column) to new code (row) of the last block. Shared between gates of
  // the same level and direction.
  struct Q6jTables {
    std::vector<int> boundary;
    std::vector<Eigen::MatrixXd> tables;
  };
  std::shared_ptr<const Q6jTables> q6j;

  // DiagonalPhase: per code of the target blocks (first block lowest),
  // destination code and phase.
  std::vector<std::uint32_t> perm;
  std::vector<Cplx> phase;

  // ColorRelabel
  std::uint64_t xor_mask = 0;

  /// Dimension 2^(blocks * w) of the targeted sub-register.
  std::uint64_t sub_dim() const { return std::uint64_t{1} << (blocks.size() * static_cast<std::size_t>(block_width)); }

  /// Dense matrix on the targeted sub-register (tests; keep sub_dim small).
  Eigen::MatrixXcd dense() const;

  /// max |U U^dagger - I| evaluated block by block, exact for the
  /// block-diagonal structure.
  double unitarity_defect() const;
};

/// The same gate conditioned on the ancilla.
GateOp controlled(GateOp g);

/// Transpose (= inverse, gates are real orthogonal) of a Q6j gate.
GateOp transposed(const GateOp& g);

}  // namespace platjones::circuitsim
