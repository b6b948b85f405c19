#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "platjones/braid.hpp"
#include "platjones/kaulrep.hpp"

namespace platjones::invariant {

struct InvariantValue {
  Cplx value;
  Level level;
  std::vector<Spin> coloring;  // one color per bottom cap
  std::size_t braid_length = 0;
  double qdim_product = 1.0;
  std::size_t basis_dim = 0;  // dimension at the bottom slice
};

/// prod_i [2 j_i + 1] over the bottom caps.
double qdim_product(const Level& level, const braid::ColoredBraidWord& b);

/// Colored Jones polynomial of the plat closure:
///   V = prod_i [2 j_i + 1] <vacuum_top| rho(b) |vacuum_bottom>.
/// Throws PlatError or TruncationError.
InvariantValue evaluate(const Level& level, const braid::ColoredBraidWord& b);

/// The bare matrix element <vacuum_top| rho(b) |vacuum_bottom>.
Cplx evaluate_trace_of_word(const Level& level, const braid::ColoredBraidWord& b);

/// Evolve a state on the bottom basis through every letter, one
/// matrix-vector product per letter. Returns the state on the top basis.
Eigen::VectorXcd evolve(const Level& level, const braid::ColoredBraidWord& b, const Eigen::VectorXcd& initial);

/// Dense rho(b) as a groupoid morphism from the bottom to the top basis.
kaulrep::RepMatrix word_matrix(const Level& level, const braid::ColoredBraidWord& b);

}  // namespace platjones::invariant
