#include "platjones/qarith.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "platjones/error.hpp"

namespace platjones {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::Index: return "IndexError";
    case ErrorCode::Plat: return "PlatError";
    case ErrorCode::Truncation: return "TruncationError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::InadmissibleTriple: return "InadmissibleTriple";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Domain: return "DomainError";
    case ErrorCode::SizeGuard: return "SizeGuard";
    case ErrorCode::Color: return "ColorError";
    case ErrorCode::Size: return "SizeError";
    case ErrorCode::SliceMismatch: return "SliceMismatch";
  }
  return "Unknown";
}

Level::Level(int k) : k_(k) {
  if (k < 1) {
    throw Error(ErrorCode::Domain, "level k must be >= 1, got " + std::to_string(k));
  }
}

Eighths Eighths::half() const {
  if (num % 2 != 0) {
    throw Error(ErrorCode::Domain, "exponent not representable in eighths");
  }
  return {num / 2};
}

Cplx root_of_unity(const Level& level, std::int64_t half_steps) {
  // Reduce modulo the period 2(k+2) first so large exponents stay exact.
  const std::int64_t period = 2 * (level.k() + 2);
  std::int64_t r = half_steps % period;
  if (r < 0) r += period;
  if (r == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(period);
  return std::polar(1.0, angle);
}

Cplx q_power(const Level& level, Eighths exponent) {
  const std::int64_t period = 8 * (level.k() + 2);
  std::int64_t r = exponent.num % period;
  if (r < 0) r += period;
  if (r == 0) return {1.0, 0.0};
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(period);
  return std::polar(1.0, angle);
}

double qint(const Level& level, int n) {
  const int h = level.k() + 2;
  if (n < 0 || n > h) {
    throw Error(ErrorCode::OutOfRange,
                "quantum integer [" + std::to_string(n) + "] outside 0.." + std::to_string(h));
  }
  if (n == 0 || n == h) return 0.0;
  const double x = std::numbers::pi / h;
  return std::sin(n * x) / std::sin(x);
}

double qfactorial(const Level& level, int n) {
  if (n < 0 || n > level.k() + 1) {
    throw Error(ErrorCode::OutOfRange, "quantum factorial [" + std::to_string(n) + "]! undefined");
  }
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= qint(level, i);
  return f;
}

Eighths casimir(Spin j) {
  // j(j+1) = t(t+2)/4 with t = 2j, i.e. 2 t (t+2) eighths.
  const std::int64_t t = j.twice;
  return {2 * t * (t + 2)};
}

double qdim(const Level& level, Spin j) {
  if (j.twice < 0 || j.twice > level.k()) {
    throw Error(ErrorCode::OutOfRange,
                "spin " + std::to_string(j.twice) + "/2 exceeds level " + std::to_string(level.k()));
  }
  return qint(level, j.twice + 1);
}

}  // namespace platjones
