#pragma once

#include <array>
#include <cstdint>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "platjones/qarith.hpp"

namespace platjones::recoupling {

/// Level-k truncated SU(2) fusion rule for the triple (a, b, c).
bool admissible(const Level& level, Spin a, Spin b, Spin c);

/// Labels of the Racah-Wigner symbol {j1 j2 j12; j3 j j23}.
struct SixJ {
  Spin j1, j2, j12, j3, j, j23;
};

/// Quantum 6j symbol at q = exp(2 pi i/(k+2)) in the Racah-Wigner
/// normalization (full tetrahedral symmetry). Zero when any of the four
/// triples (j1,j2,j12), (j12,j3,j), (j2,j3,j23), (j1,j23,j) is inadmissible.
double qsixj(const Level& level, const SixJ& s);

/// Entry of the unitary recoupling matrix
///   ((a b)_e c)_d = sum_f F(a,b,c,d;e,f) (a (b c)_f)_d,
/// F = (-1)^(a+b+c+d) sqrt([2e+1][2f+1]) {a b e; c d f}.
/// Structural zero when inadmissible.
double fmove(const Level& level, Spin a, Spin b, Spin c, Spin d, Spin e, Spin f);

/// Change of basis between the two pairings of four objects with outer
/// labels (a, b, c; d). Rows are indexed by the left-coupled channels e,
/// columns by the right-coupled channels f, both in ascending twice-spin.
struct ElementaryDualityMatrix {
  Spin a, b, c, d;
  std::vector<Spin> left;   // e: (a,b,e) and (e,c,d) admissible
  std::vector<Spin> right;  // f: (b,c,f) and (a,f,d) admissible
  Eigen::MatrixXd entries;
};

/// Throws EmptyBlock when neither pairing has an admissible channel.
ElementaryDualityMatrix elementary_duality(const Level& level, Spin a, Spin b, Spin c, Spin d);

/// Memo table of F-move entries for one level. Reads are shared, fills
/// take the exclusive lock; results are identical to calling fmove().
class FMoveCache {
 public:
  explicit FMoveCache(Level level) : level_(level) {}

  double get(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) const;
  const Level& level() const noexcept { return level_; }
  std::size_t size() const;

 private:
  Level level_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::uint64_t, double> table_;
};

}  // namespace platjones::recoupling
