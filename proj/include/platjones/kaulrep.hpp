#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "platjones/braid.hpp"
#include "platjones/qarith.hpp"
#include "platjones/recoupling.hpp"

namespace platjones::kaulrep {

/// One conformal-block basis vector. Strand pairs (2i-1, 2i) fuse to pair
/// labels p_0..p_{m-1}; the pair labels are then fused left to right
/// through chain labels r_0 = p_0, r_1, ..., r_{m-2} = p_{m-1}, total spin 0.
///
/// Storage: `internal` holds the 2m-3 free labels as
///   [p_0, ..., p_{m-2}, r_1, ..., r_{m-2}]
/// (a single p_0 for m = 1). During a duality transformation the same
/// slots are reused for the intermediate and even-tree labels.
struct FusionPath {
  std::vector<Spin> colors;
  std::vector<Spin> internal;

  int caps() const { return static_cast<int>(colors.size() / 2); }
  /// p label of pair i, 0 <= i < m.
  Spin pair_label(int i) const;
  /// r label, 0 <= l <= m-2.
  Spin chain_label(int l) const;
  auto operator<=>(const FusionPath&) const = default;
};

/// Number of internal slots for m caps.
int internal_slots(int m);
/// Slot holding p_i in the odd (pair) tree.
int odd_pair_slot(int m, int i);
/// Slot holding r_l in the odd tree.
int chain_slot(int m, int l);
/// Slot holding q_l (1 <= l <= m-1) of pair (2l, 2l+1) in the even tree.
int even_pair_slot(int m, int l);

/// Admissible fusion paths of the pair tree for one slice, ordered
/// lexicographically by internal labels.
struct Basis {
  Basis(Level lvl, braid::LevelSlice s, std::vector<FusionPath> p);

  Level level;
  braid::LevelSlice slice;
  std::vector<FusionPath> paths;

  int caps() const { return static_cast<int>(slice.size() / 2); }
  std::size_t dim() const { return paths.size(); }
  std::optional<std::size_t> index_of(const FusionPath& p) const;
  /// Path with every internal label 0, if admissible.
  std::optional<std::size_t> vacuum_index() const;

 private:
  std::map<FusionPath, std::size_t> lookup_;
};

Basis enumerate_basis(const Level& level, const braid::LevelSlice& slice);

/// Half-twist eigenvalue for strands of spins j, jp fused to t:
///   parallel:     (-1)^(j+j'-t)   q^((c_j+c_j')/2 + c_min(j,j') - c_t/2)
///   antiparallel: (-1)^(t-|j-j'|) q^(-|c_j-c_j'|/2 + c_t/2)
/// and the complex conjugate when `inverse`. Throws InadmissibleTriple.
Cplx half_twist_eigenvalue(const Level& level, Spin j, Spin jp, Spin t, bool parallel, bool inverse);

/// Eigenvalue picked up by letter sign(`sign`) acting on two adjacent
/// strands fused to t. The letter is a fixed over/under crossing; its
/// oriented handedness flips when the strands are antiparallel.
Cplx crossing_eigenvalue(const Level& level, const braid::StrandState& left,
                         const braid::StrandState& right, Spin t, int sign);

/// Groupoid morphism: maps vectors on `source` to vectors on `target`.
struct RepMatrix {
  Basis source;
  Basis target;
  Eigen::MatrixXcd entries;
};

/// second ∘ first; throws SliceMismatch when first.target != second.source.
RepMatrix compose(const RepMatrix& first, const RepMatrix& second);

/// Generator `generator` (odd, 1-based) or its inverse, diagonal on the
/// pair tree.
RepMatrix odd_generator(const Basis& basis, int generator, bool inverse);

/// Generator `generator` (even) or its inverse: duality to the even tree,
/// diagonal eigenvalue, duality back on the exchanged slice.
RepMatrix even_generator(const Basis& basis, int generator, bool inverse);

/// Dispatch on a signed letter.
RepMatrix generator_matrix(const Basis& basis, int letter);

// ---------------------------------------------------------------------------
// Duality decomposition

enum class LabelKind { Color, Internal };

struct LabelRef {
  LabelKind kind;
  int index;
  bool operator==(const LabelRef&) const = default;
};

/// One elementary recoupling on a path. Forward moves rewrite
/// ((a b)_e c)_d -> (a (b c)_f)_d with amplitude F(a,b,c,d;e,f); backward
/// moves are the transpose.
struct DualityMove {
  std::array<LabelRef, 4> boundary;  // a, b, c, d
  int changed;                       // internal slot rewritten
  bool forward;
};

enum class MoveOrder { Ascending, Descending };

/// The 3m-5 moves carrying the pair tree to the even tree
///   j_1 (Q_1 (Q_2 ( ... (Q_{m-2} Q_{m-1}) ... ))) -> j_{2m},  Q_l = (j_{2l} j_{2l+1})_{q_l}.
/// Three stages: split pairs 2..m-1 into the running chain (m-2 moves),
/// re-pair the chain into Q's (m-1 moves), then re-nest the Q's to the
/// right (m-2 moves). `order` permutes the mutually commuting moves of
/// the first two stages.
std::vector<DualityMove> duality_decomposition(int m, MoveOrder order = MoveOrder::Ascending);

/// Reverse sequence (transposed moves, reversed order).
std::vector<DualityMove> inverse_moves(const std::vector<DualityMove>& moves);

using SparseState = std::map<FusionPath, Cplx>;

SparseState apply_move(const Level& level, const SparseState& state, const DualityMove& move);
SparseState apply_moves(const Level& level, const SparseState& state, const std::vector<DualityMove>& moves);

/// Dense duality A: rows are even-tree paths, columns the pair-tree basis.
struct DualityMatrix {
  Basis odd;
  std::vector<FusionPath> even;
  Eigen::MatrixXd forward;   // even x odd
  Eigen::MatrixXd backward;  // odd x even, from the inverse move sequence
};

DualityMatrix duality_matrix(const Basis& odd, MoveOrder order = MoveOrder::Ascending);

/// Shared per-level F-move memo.
const recoupling::FMoveCache& fmove_cache(const Level& level);

}  // namespace platjones::kaulrep
