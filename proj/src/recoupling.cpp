#include "platjones/recoupling.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

#include "platjones/error.hpp"

namespace platjones::recoupling {

bool admissible(const Level& level, Spin a, Spin b, Spin c) {
  const int x = a.twice, y = b.twice, z = c.twice;
  if (x < 0 || y < 0 || z < 0) return false;
  if (x > level.k() || y > level.k() || z > level.k()) return false;
  if ((x + y + z) % 2 != 0) return false;
  if (z < std::abs(x - y) || z > x + y) return false;
  return x + y + z <= 2 * level.k();
}

namespace {

// Triangle coefficient; all arguments are twice-spins of an admissible triple.
double delta(const Level& level, int a, int b, int c) {
  const double num = qfactorial(level, (a + b - c) / 2) * qfactorial(level, (a - b + c) / 2) *
                     qfactorial(level, (-a + b + c) / 2);
  return std::sqrt(num / qfactorial(level, (a + b + c) / 2 + 1));
}

}  // namespace

double qsixj(const Level& level, const SixJ& s) {
  const int j1 = s.j1.twice, j2 = s.j2.twice, j12 = s.j12.twice;
  const int j3 = s.j3.twice, j = s.j.twice, j23 = s.j23.twice;
  if (!admissible(level, s.j1, s.j2, s.j12) || !admissible(level, s.j12, s.j3, s.j) ||
      !admissible(level, s.j2, s.j3, s.j23) || !admissible(level, s.j1, s.j23, s.j)) {
    return 0.0;
  }
  // Triangle sums (a1..a4) and quadrilateral sums (b1..b3), in ordinary units.
  const int a1 = (j1 + j2 + j12) / 2;
  const int a2 = (j12 + j3 + j) / 2;
  const int a3 = (j2 + j3 + j23) / 2;
  const int a4 = (j1 + j23 + j) / 2;
  const int b1 = (j1 + j2 + j3 + j) / 2;
  const int b2 = (j1 + j3 + j12 + j23) / 2;
  const int b3 = (j2 + j + j12 + j23) / 2;
  const int zmin = std::max({a1, a2, a3, a4});
  const int zmax = std::min({b1, b2, b3});

  double sum = 0.0;
  for (int z = zmin; z <= zmax; ++z) {
    // [z+1]! contains [k+2] = 0 beyond the truncation.
    if (z + 1 > level.k() + 1) break;
    const double den = qfactorial(level, z - a1) * qfactorial(level, z - a2) *
                       qfactorial(level, z - a3) * qfactorial(level, z - a4) *
                       qfactorial(level, b1 - z) * qfactorial(level, b2 - z) *
                       qfactorial(level, b3 - z);
    const double term = qfactorial(level, z + 1) / den;
    sum += (z % 2 == 0) ? term : -term;
  }
  return delta(level, j1, j2, j12) * delta(level, j12, j3, j) * delta(level, j2, j3, j23) *
         delta(level, j1, j23, j) * sum;
}

double fmove(const Level& level, Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) {
  if (!admissible(level, a, b, e) || !admissible(level, e, c, d) ||
      !admissible(level, b, c, f) || !admissible(level, a, f, d)) {
    return 0.0;
  }
  const int parity = (a.twice + b.twice + c.twice + d.twice) / 2;
  const double sign = (parity % 2 == 0) ? 1.0 : -1.0;
  return sign * std::sqrt(qdim(level, e) * qdim(level, f)) *
         qsixj(level, SixJ{a, b, e, c, d, f});
}

ElementaryDualityMatrix elementary_duality(const Level& level, Spin a, Spin b, Spin c, Spin d) {
  ElementaryDualityMatrix m{a, b, c, d, {}, {}, {}};
  for (int t = 0; t <= level.k(); ++t) {
    const Spin x{t};
    if (admissible(level, a, b, x) && admissible(level, x, c, d)) m.left.push_back(x);
    if (admissible(level, b, c, x) && admissible(level, a, x, d)) m.right.push_back(x);
  }
  if (m.left.empty() || m.right.empty()) {
    throw Error(ErrorCode::EmptyBlock,
                "no admissible intermediate channel for boundary (" + std::to_string(a.twice) + "," +
                    std::to_string(b.twice) + "," + std::to_string(c.twice) + ";" +
                    std::to_string(d.twice) + ")/2");
  }
  m.entries.resize(static_cast<Eigen::Index>(m.left.size()), static_cast<Eigen::Index>(m.right.size()));
  for (std::size_t r = 0; r < m.left.size(); ++r) {
    for (std::size_t s = 0; s < m.right.size(); ++s) {
      m.entries(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) =
          fmove(level, a, b, c, d, m.left[r], m.right[s]);
    }
  }
  return m;
}

namespace {

std::uint64_t pack(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) {
  std::uint64_t key = 0;
  for (int v : {a.twice, b.twice, c.twice, d.twice, e.twice, f.twice}) {
    key = (key << 10) | static_cast<std::uint64_t>(v & 0x3ff);
  }
  return key;
}

}  // namespace

double FMoveCache::get(Spin a, Spin b, Spin c, Spin d, Spin e, Spin f) const {
  const std::uint64_t key = pack(a, b, c, d, e, f);
  {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
  }
  const double value = fmove(level_, a, b, c, d, e, f);
  std::unique_lock lock(mutex_);
  table_.emplace(key, value);
  return value;
}

std::size_t FMoveCache::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

}  // namespace platjones::recoupling
