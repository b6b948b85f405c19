#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <algorithm>

#include "platjones/error.hpp"
#include "platjones/kaulrep.hpp"

using namespace platjones;
using namespace platjones::kaulrep;

namespace {

braid::LevelSlice slice_of(const std::vector<int>& colors, const std::string& orient) {
  braid::LevelSlice s;
  for (std::size_t i = 0; i < colors.size(); ++i) s.strands.push_back({Spin{colors[i]}, orient[i] == 'u'});
  return s;
}

braid::LevelSlice half_slice(int m) {
  std::vector<int> colors(static_cast<std::size_t>(2 * m), 1);
  std::string orient;
  for (int i = 0; i < m; ++i) orient += "ud";
  return slice_of(colors, orient);
}

RepMatrix product(const Basis& start, const std::vector<int>& word) {
  const auto n = static_cast<Eigen::Index>(start.dim());
  RepMatrix acc{start, start, Eigen::MatrixXcd::Identity(n, n)};
  for (int g : word) acc = compose(acc, generator_matrix(acc.target, g));
  return acc;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  const auto n = u.rows();
  return (u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

// Walks 0 -> ... -> 0 with 2m unit steps inside [0, k]: the dimension of the
// spin-1/2 plat space, counted without any tree.
long walk_count(int m, int k) {
  std::vector<long> ways(static_cast<std::size_t>(k + 1), 0);
  ways[0] = 1;
  for (int step = 0; step < 2 * m; ++step) {
    std::vector<long> next(ways.size(), 0);
    for (int h = 0; h <= k; ++h) {
      if (h > 0) next[static_cast<std::size_t>(h - 1)] += ways[static_cast<std::size_t>(h)];
      if (h < k) next[static_cast<std::size_t>(h + 1)] += ways[static_cast<std::size_t>(h)];
    }
    ways = next;
  }
  return ways[0];
}

}  // namespace

TEST_CASE("enumerate_basis examples") {
  CHECK(enumerate_basis(Level(1), half_slice(2)).dim() == 1);
  CHECK(enumerate_basis(Level(2), half_slice(2)).dim() == 2);
  for (int k = 1; k <= 4; ++k) {
    const auto b = enumerate_basis(Level(k), slice_of({0, 0}, "ud"));
    REQUIRE(b.dim() == 1);
    CHECK(b.paths[0].internal == std::vector<Spin>{Spin{0}});
  }
}

TEST_CASE("basis dimension matches the walk count") {
  const long catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= 7; ++k) {
      CHECK(static_cast<long>(enumerate_basis(Level(k), half_slice(m)).dim()) == walk_count(m, k));
    }
    CHECK(walk_count(m, 2 * m) == catalan[m]);
  }
}

TEST_CASE("basis is sorted, admissible and indexed") {
  const auto b = enumerate_basis(Level(3), slice_of({1, 1, 2, 2, 1, 1}, "ududud"));
  for (std::size_t i = 0; i + 1 < b.dim(); ++i) CHECK(b.paths[i].internal < b.paths[i + 1].internal);
  for (std::size_t i = 0; i < b.dim(); ++i) CHECK(b.index_of(b.paths[i]) == i);
  CHECK(b.vacuum_index().has_value());
  CHECK_THROWS_AS(enumerate_basis(Level(1), slice_of({2, 2}, "ud")), Error);
}

TEST_CASE("half twist eigenvalue examples") {
  const Level lv(3);
  CHECK(std::abs(half_twist_eigenvalue(lv, Spin{1}, Spin{1}, Spin{2}, true, false) - q_power(lv, Eighths{4})) < 1e-12);
  CHECK(std::abs(half_twist_eigenvalue(lv, Spin{1}, Spin{1}, Spin{0}, true, false) + q_power(lv, Eighths{12})) < 1e-12);
  for (int t = 0; t <= 3; ++t) {
    CHECK(std::abs(half_twist_eigenvalue(lv, Spin{t}, Spin{t}, Spin{0}, false, false) - 1.0) < 1e-12);
  }
  const Cplx l = half_twist_eigenvalue(lv, Spin{1}, Spin{2}, Spin{1}, true, false);
  CHECK(std::abs(half_twist_eigenvalue(lv, Spin{1}, Spin{2}, Spin{1}, true, true) - std::conj(l)) < 1e-15);
  CHECK_THROWS_AS(half_twist_eigenvalue(lv, Spin{1}, Spin{1}, Spin{1}, true, false), Error);
}

TEST_CASE("odd generator at k=1 is the single surviving eigenvalue") {
  const Level lv(1);
  const auto b = enumerate_basis(lv, half_slice(2));
  const auto g = odd_generator(b, 1, false);
  REQUIRE(g.entries.rows() == 1);
  // strands 1,2 are antiparallel at the caps; the letter is the oriented-negative crossing there
  CHECK(std::abs(g.entries(0, 0) - half_twist_eigenvalue(lv, Spin{1}, Spin{1}, Spin{0}, false, true)) < 1e-12);
}

TEST_CASE("odd generators are diagonal and invert") {
  const Level lv(3);
  const auto b = enumerate_basis(lv, slice_of({1, 1, 2, 2, 1, 1}, "udduud"));
  for (int g : {1, 3, 5}) {
    const auto u = odd_generator(b, g, false);
    for (Eigen::Index i = 0; i < u.entries.rows(); ++i)
      for (Eigen::Index j = 0; j < u.entries.cols(); ++j)
        if (i != j) CHECK(u.entries(i, j) == Cplx{0.0, 0.0});
    const auto id = compose(u, odd_generator(u.target, g, true));
    CHECK((id.entries - Eigen::MatrixXcd::Identity(id.entries.rows(), id.entries.cols())).cwiseAbs().maxCoeff() <
          1e-12);
  }
  CHECK_THROWS_AS(odd_generator(b, 2, false), Error);
  CHECK_THROWS_AS(even_generator(b, 3, false), Error);
  CHECK_THROWS_AS(generator_matrix(b, 6), Error);
  CHECK_THROWS_AS(generator_matrix(b, 0), Error);
}

TEST_CASE("move counts are 3m-5") {
  CHECK(duality_decomposition(1).empty());
  for (int m = 2; m <= 8; ++m) {
    CHECK(static_cast<int>(duality_decomposition(m).size()) == 3 * m - 5);
    CHECK(static_cast<int>(duality_decomposition(m, MoveOrder::Descending).size()) == 3 * m - 5);
  }
}

TEST_CASE("duality matrix: orderings agree and back-transform inverts") {
  for (int k = 1; k <= 3; ++k) {
    for (int m = 2; m <= 4; ++m) {
      const auto basis = enumerate_basis(Level(k), half_slice(m));
      const auto a = duality_matrix(basis, MoveOrder::Ascending);
      const auto d = duality_matrix(basis, MoveOrder::Descending);
      REQUIRE(a.forward.rows() == d.forward.rows());
      CHECK((a.forward - d.forward).cwiseAbs().maxCoeff() <= 1e-10);
      const auto n = static_cast<Eigen::Index>(basis.dim());
      CHECK((a.backward * a.forward - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-10);
      CHECK((a.forward * a.forward.transpose() - Eigen::MatrixXd::Identity(a.forward.rows(), a.forward.rows()))
                .cwiseAbs()
                .maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("generators are unitary and satisfy the braid relations on B4") {
  for (int k = 1; k <= 3; ++k) {
    for (const auto& colors : std::vector<std::vector<int>>{{1, 1, 1, 1}, {1, 1, 2, 2}, {2, 2, 2, 2}}) {
      if (*std::max_element(colors.begin(), colors.end()) > k) continue;
      for (const std::string orient : {"udud", "uddu", "duud"}) {
        const auto s = slice_of(colors, orient);
        const auto b = enumerate_basis(Level(k), s);
        if (b.dim() == 0) continue;
        for (int g : {1, -1, 2, -2, 3, -3}) CHECK(unitarity_defect(generator_matrix(b, g).entries) <= 1e-10);
        const auto lhs = product(b, {1, 2, 1}), rhs = product(b, {2, 1, 2});
        CHECK(lhs.target.slice == rhs.target.slice);
        CHECK((lhs.entries - rhs.entries).cwiseAbs().maxCoeff() <= 1e-9);
        const auto far1 = product(b, {1, 3}), far2 = product(b, {3, 1});
        CHECK((far1.entries - far2.entries).cwiseAbs().maxCoeff() <= 1e-9);
        const auto inv = product(b, {2, -2});
        CHECK((inv.entries - Eigen::MatrixXcd::Identity(inv.entries.rows(), inv.entries.cols())).cwiseAbs().maxCoeff() <=
              1e-9);
      }
    }
  }
}

TEST_CASE("compose checks slices") {
  const auto b = enumerate_basis(Level(3), slice_of({1, 1, 2, 2}, "udud"));
  const auto g = generator_matrix(b, 2);  // exchanges colors 1/2 and 1
  CHECK_THROWS_AS(compose(g, g), Error);
}

TEST_CASE("sparse moves agree with the dense duality matrix") {
  const auto basis = enumerate_basis(Level(2), half_slice(3));
  const auto dense = duality_matrix(basis);
  const auto moves = duality_decomposition(3);
  for (std::size_t col = 0; col < basis.dim(); ++col) {
    const auto out = apply_moves(Level(2), SparseState{{basis.paths[col], Cplx{1.0, 0.0}}}, moves);
    for (std::size_t row = 0; row < dense.even.size(); ++row) {
      const auto it = out.find(dense.even[row]);
      const Cplx v = it == out.end() ? Cplx{} : it->second;
      CHECK(std::abs(v - dense.forward(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col))) <= 1e-12);
    }
  }
}
