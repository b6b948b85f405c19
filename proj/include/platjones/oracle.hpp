#pragma once

#include <cstdint>
#include <map>

#include "platjones/braid.hpp"
#include "platjones/qarith.hpp"

namespace platjones::oracle {

/// Integer Laurent polynomial: exponent -> coefficient.
using Laurent = std::map<int, std::int64_t>;

/// Choice of the bracket variable: A = i q^(1/4) or A = i q^(-1/4).
/// Both give loop value -A^2 - A^-2 = [2].
enum class Convention { Direct, Inverse };

/// Fixed against the Kaul engine: with A = i q^(-1/4) the normalized
/// bracket equals V exactly (phase included) on the small-link table.
constexpr Convention kPinned = Convention::Inverse;

constexpr std::size_t kMaxCrossings = 16;

/// Unreduced Kauffman bracket of the plat closure in powers of A, times the
/// writhe factor (-A^3)^(-w). The unknot is -A^2 - A^-2. Colors must all
/// be 1/2 and the word at most 16 letters.
Laurent bracket_polynomial(const braid::ColoredBraidWord& b);

/// The same state sum with loop value divided out once (unknot = 1).
Laurent reduced_bracket_polynomial(const braid::ColoredBraidWord& b);

/// Jones polynomial V(t) with t = A^-4, keyed by twice the exponent of t.
Laurent jones_polynomial(const braid::ColoredBraidWord& b);

Cplx bracket_variable(const Level& level, Convention c = kPinned);

Cplx evaluate(const Laurent& p, Cplx x);

/// bracket_polynomial evaluated at the level's bracket variable.
Cplx kauffman_bracket(const Level& level, const braid::ColoredBraidWord& b, Convention c = kPinned);

struct Comparison {
  double kaul_abs;
  double oracle_abs;
  double difference;
  bool pass;
};

constexpr double kCompareTolerance = 1e-6;

Comparison compare(const Level& level, const braid::ColoredBraidWord& b);

}  // namespace platjones::oracle
