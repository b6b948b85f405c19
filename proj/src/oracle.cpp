#include "platjones/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "platjones/error.hpp"
#include "platjones/invariant.hpp"

namespace platjones::oracle {

namespace {

Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

void check_input(const braid::ColoredBraidWord& b) {
  braid::check_plat(b);
  for (const auto& s : b.bottom.strands) {
    if (s.color.twice != 1) {
      throw Error(ErrorCode::Color, "oracle handles color 1/2 only, got " + braid::format_spin(s.color));
    }
  }
  if (b.length() > kMaxCrossings) {
    throw Error(ErrorCode::Size, "oracle state sum is capped at " + std::to_string(kMaxCrossings) +
                                     " crossings, word has " + std::to_string(b.length()));
  }
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

int writhe(const braid::ColoredBraidWord& b) {
  int w = 0;
  braid::LevelSlice slice = b.bottom;
  for (int g : b.word) {
    const auto i = static_cast<std::size_t>(std::abs(g) - 1);
    const bool parallel = slice[i].up == slice[i + 1].up;
    w += (g > 0 ? 1 : -1) * (parallel ? 1 : -1);
    slice = slice.swapped(i);
  }
  return w;
}

/// Sum over smoothings of A^(#A - #A^-1) d^(loops - loop_offset), times
/// (-A^3)^(-w).
Laurent state_sum(const braid::ColoredBraidWord& b, int loop_offset) {
  check_input(b);
  const int n = b.strands;
  const int len = static_cast<int>(b.length());
  const auto node = [n](int y, int x) { return y * n + x; };

  // (A exponent, loops) -> number of states
  std::map<std::pair<int, int>, std::int64_t> tally;
  for (std::uint32_t state = 0; state < (std::uint32_t{1} << len); ++state) {
    UnionFind uf((len + 1) * n);
    int a_exp = 0;
    for (int y = 0; y < len; ++y) {
      const int g = b.word[static_cast<std::size_t>(y)];
      const int i = std::abs(g) - 1;
      for (int x = 0; x < n; ++x) {
        if (x != i && x != i + 1) uf.unite(node(y, x), node(y + 1, x));
      }
      const bool cupcap = ((state >> y) & 1U) != 0;
      if (cupcap) {
        uf.unite(node(y, i), node(y, i + 1));
        uf.unite(node(y + 1, i), node(y + 1, i + 1));
      } else {
        uf.unite(node(y, i), node(y + 1, i));
        uf.unite(node(y, i + 1), node(y + 1, i + 1));
      }
      a_exp += (cupcap == (g > 0)) ? -1 : 1;
    }
    for (int x = 0; x + 1 < n; x += 2) {
      uf.unite(node(0, x), node(0, x + 1));
      uf.unite(node(len, x), node(len, x + 1));
    }
    int loops = 0;
    for (int v = 0; v < (len + 1) * n; ++v) loops += uf.find(v) == v ? 1 : 0;
    ++tally[{a_exp, loops}];
  }

  const Laurent d{{-2, -1}, {2, -1}};
  std::vector<Laurent> d_pow{{{0, 1}}};
  Laurent sum;
  for (const auto& [key, count] : tally) {
    const int power = key.second - loop_offset;
    while (static_cast<int>(d_pow.size()) <= power) d_pow.push_back(multiply(d_pow.back(), d));
    for (const auto& [e, c] : d_pow[static_cast<std::size_t>(power)]) sum[e + key.first] += count * c;
  }
  std::erase_if(sum, [](const auto& kv) { return kv.second == 0; });

  const int w = writhe(b);
  return multiply(sum, Laurent{{-3 * w, (w % 2 == 0) ? 1 : -1}});
}

}  // namespace

Laurent bracket_polynomial(const braid::ColoredBraidWord& b) { return state_sum(b, 0); }

Laurent reduced_bracket_polynomial(const braid::ColoredBraidWord& b) { return state_sum(b, 1); }

Laurent jones_polynomial(const braid::ColoredBraidWord& b) {
  Laurent out;
  for (const auto& [e, c] : reduced_bracket_polynomial(b)) {
    if (e % 2 != 0) throw Error(ErrorCode::Domain, "odd power of A in a bracket");
    out[-e / 2] = c;
  }
  return out;
}

Cplx bracket_variable(const Level& level, Convention c) {
  return Cplx{0.0, 1.0} * q_power(level, Eighths{c == Convention::Direct ? 2 : -2});
}

Cplx evaluate(const Laurent& p, Cplx x) {
  Cplx sum{0.0, 0.0};
  for (const auto& [e, c] : p) sum += static_cast<double>(c) * std::pow(x, e);
  return sum;
}

Cplx kauffman_bracket(const Level& level, const braid::ColoredBraidWord& b, Convention c) {
  return evaluate(bracket_polynomial(b), bracket_variable(level, c));
}

Comparison compare(const Level& level, const braid::ColoredBraidWord& b) {
  const double oracle_abs = std::abs(kauffman_bracket(level, b));
  const double kaul_abs = std::abs(invariant::evaluate(level, b).value);
  const double diff = std::abs(kaul_abs - oracle_abs);
  return {kaul_abs, oracle_abs, diff, diff <= kCompareTolerance};
}

}  // namespace platjones::oracle
