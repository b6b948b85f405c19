#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "platjones/error.hpp"
#include "platjones/invariant.hpp"
#include "platjones/oracle.hpp"

using namespace platjones;
using braid::make_braid;

namespace {

std::vector<braid::ColoredBraidWord> random_braids(int count, unsigned seed, int max_color) {
  std::mt19937 rng(seed);
  std::vector<braid::ColoredBraidWord> out;
  while (static_cast<int>(out.size()) < count) {
    const int m = 1 + static_cast<int>(rng() % 3);
    std::vector<int> colors;
    for (int i = 0; i < m; ++i) {
      const int c = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_color));
      colors.insert(colors.end(), {c, c});
    }
    std::vector<int> word;
    const int len = static_cast<int>(rng() % 7);
    for (int i = 0; i < len; ++i) {
      const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(2 * m - 1));
      word.push_back(rng() % 2 ? g : -g);
    }
    try {
      out.push_back(make_braid(2 * m, colors, word, std::nullopt));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("identity braids give quantum dimensions") {
  for (int k = 1; k <= 6; ++k) {
    const Level lv(k);
    for (int t = 0; t <= k; ++t) {
      const auto v = invariant::evaluate(lv, make_braid(2, {t, t}, {}, std::nullopt));
      CHECK(std::abs(v.value - qdim(lv, Spin{t})) < 1e-12);
      CHECK(v.braid_length == 0);
      for (int u = 0; u <= k; ++u) {
        const auto w = invariant::evaluate(lv, make_braid(4, {t, t, u, u}, {}, std::nullopt));
        CHECK(std::abs(w.value - qdim(lv, Spin{t}) * qdim(lv, Spin{u})) < 1e-12);
      }
    }
  }
  CHECK(std::abs(invariant::evaluate(Level(2), make_braid(2, {1, 1}, {}, std::nullopt)).value - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("trefoil at k=3 matches the bracket oracle in modulus") {
  const Level lv(3);
  const auto b = braid::parse("strands=4 colors=1/2,1/2,1/2,1/2 word=2 2 2");
  const auto v = invariant::evaluate(lv, b);
  CHECK(std::abs(v.value) == doctest::Approx(std::abs(oracle::kauffman_bracket(lv, b))).epsilon(1e-9));
  CHECK(std::abs(v.value - v.qdim_product * invariant::evaluate_trace_of_word(lv, b)) < 1e-12);
  CHECK(v.basis_dim == 2);
}

TEST_CASE("matrix element is bounded and prefactor is consistent") {
  for (const auto& b : random_braids(60, 11, 2)) {
    for (int k = 2; k <= 4; ++k) {
      const Level lv(k);
      const auto v = invariant::evaluate(lv, b);
      const Cplx t = invariant::evaluate_trace_of_word(lv, b);
      CHECK(std::abs(t) <= 1.0 + 1e-12);
      CHECK(std::abs(v.value) <= v.qdim_product + 1e-12);
    }
  }
}

TEST_CASE("mirror conjugates the value") {
  for (const auto& b : random_braids(60, 12, 2)) {
    for (int k = 2; k <= 4; ++k) {
      const Level lv(k);
      const Cplx v = invariant::evaluate(lv, b).value;
      const Cplx w = invariant::evaluate(lv, braid::mirror(b)).value;
      CHECK(std::abs(w - std::conj(v)) <= 1e-9);
    }
  }
}

TEST_CASE("cancelling pairs do not change the value") {
  std::mt19937 rng(5);
  for (const auto& b : random_braids(40, 13, 2)) {
    const Level lv(3);
    const Cplx v = invariant::evaluate(lv, b).value;
    const int g = 1 + static_cast<int>(rng() % static_cast<unsigned>(b.strands - 1));
    const std::size_t at = rng() % (b.length() + 1);
    for (int s : {g, -g}) {
      const Cplx w = invariant::evaluate(lv, braid::insert_cancelling_pair(b, at, s)).value;
      CHECK(std::abs(w - v) <= 1e-9);
    }
  }
}

TEST_CASE("a spin-0 component drops out") {
  for (int k = 2; k <= 4; ++k) {
    const Level lv(k);
    const Cplx twist = invariant::evaluate(lv, make_braid(2, {1, 1}, {1, 1, 1}, std::nullopt)).value;
    const Cplx with_zero = invariant::evaluate(lv, make_braid(4, {1, 1, 0, 0}, {1, 1, 1}, std::nullopt)).value;
    CHECK(std::abs(twist - with_zero) <= 1e-12);
    // Hopf-linked with an invisible component: just the unknot
    const Cplx hopf0 = invariant::evaluate(lv, make_braid(4, {1, 1, 0, 0}, {2, 2}, std::nullopt)).value;
    CHECK(std::abs(hopf0 - qdim(lv, Spin{1})) <= 1e-12);
  }
}

TEST_CASE("evaluate errors") {
  CHECK_THROWS_AS(invariant::evaluate(Level(1), make_braid(2, {2, 2}, {}, std::nullopt)), Error);
  try {
    invariant::evaluate(Level(1), make_braid(2, {2, 2}, {}, std::nullopt));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Truncation);
  }
  braid::ColoredBraidWord bad = make_braid(4, {1, 1, 1, 1}, {}, std::nullopt);
  bad.bottom.strands[1].up = bad.bottom.strands[0].up;
  try {
    invariant::evaluate(Level(2), bad);
    FAIL("expected PlatError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Plat);
  }
}

TEST_CASE("evolve and word_matrix agree") {
  for (const auto& b : random_braids(20, 14, 2)) {
    const Level lv(3);
    const auto u = invariant::word_matrix(lv, b);
    const auto n = u.entries.cols();
    for (Eigen::Index c = 0; c < n; ++c) {
      Eigen::VectorXcd e = Eigen::VectorXcd::Zero(n);
      e(c) = 1.0;
      CHECK((invariant::evolve(lv, b, e) - u.entries.col(c)).cwiseAbs().maxCoeff() <= 1e-12);
    }
  }
}
