#pragma once

#include <complex>
#include <cstdint>
#include <compare>

namespace platjones {

using Cplx = std::complex<double>;

/// An SU(2)_q spin label, held exactly as twice its value.
struct Spin {
  int twice = 0;

  static constexpr Spin from_twice(int t) { return Spin{t}; }
  constexpr double value() const { return twice / 2.0; }
  constexpr bool is_integer() const { return twice % 2 == 0; }
  constexpr auto operator<=>(const Spin&) const = default;
};

/// Chern-Simons level; fixes q = exp(2 pi i / (k + 2)).
class Level {
 public:
  explicit Level(int k);
  int k() const noexcept { return k_; }
  /// Largest admissible twice-spin, i.e. k.
  int max_twice() const noexcept { return k_; }
  bool operator==(const Level&) const = default;

 private:
  int k_;
};

/// Exact rational with denominator 8. Casimirs live in quarters and the
/// half-twist exponents need one more halving.
struct Eighths {
  std::int64_t num = 0;

  constexpr double value() const { return static_cast<double>(num) / 8.0; }
  constexpr Eighths operator+(Eighths o) const { return {num + o.num}; }
  constexpr Eighths operator-(Eighths o) const { return {num - o.num}; }
  constexpr Eighths operator-() const { return {-num}; }
  /// Exact halving; requires an even numerator.
  Eighths half() const;
  constexpr auto operator<=>(const Eighths&) const = default;
};

/// q^(half_steps / 2) = exp(2 pi i half_steps / (2 (k + 2))).
Cplx root_of_unity(const Level& level, std::int64_t half_steps);

/// q^e for an exact exponent in eighths.
Cplx q_power(const Level& level, Eighths exponent);

/// Quantum integer [n] = sin(pi n / (k+2)) / sin(pi / (k+2)), 0 <= n <= k+2.
double qint(const Level& level, int n);

/// [n]! = [1][2]...[n]; n <= k+1 so the product never vanishes.
double qfactorial(const Level& level, int n);

/// Quadratic Casimir j(j+1) as an exact rational.
Eighths casimir(Spin j);

/// Quantum dimension [2j+1]; requires 2j <= k.
double qdim(const Level& level, Spin j);

}  // namespace platjones
