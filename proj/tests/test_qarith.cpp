#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "platjones/error.hpp"
#include "platjones/qarith.hpp"

using namespace platjones;

namespace {
bool near(Cplx a, Cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("root_of_unity examples") {
  CHECK(near(root_of_unity(Level(1), 0), Cplx{1.0, 0.0}));
  CHECK(near(root_of_unity(Level(2), 8), Cplx{1.0, 0.0}));
  CHECK(near(root_of_unity(Level(1), 2), Cplx{-0.5, std::sqrt(3.0) / 2.0}));
}

TEST_CASE("root_of_unity is a homomorphism") {
  for (int k = 1; k <= 6; ++k) {
    const Level lv(k);
    for (int a = -20; a <= 20; a += 3) {
      for (int b = -11; b <= 11; b += 2) {
        CHECK(near(root_of_unity(lv, a) * root_of_unity(lv, b), root_of_unity(lv, a + b)));
      }
    }
  }
}

TEST_CASE("q_power agrees with the exponential") {
  const Level lv(3);
  for (int e = -40; e <= 40; ++e) {
    const double angle = 2.0 * std::numbers::pi * (e / 8.0) / 5.0;
    CHECK(near(q_power(lv, Eighths{e}), std::polar(1.0, angle)));
  }
}

TEST_CASE("qint examples and errors") {
  CHECK(qint(Level(3), 1) == doctest::Approx(1.0));
  CHECK(qint(Level(2), 2) == doctest::Approx(std::sqrt(2.0)));
  CHECK(qint(Level(1), 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(qint(Level(2), -1), Error);
  CHECK_THROWS_AS(qint(Level(2), 5), Error);
  try {
    qint(Level(2), 5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("qint reflection symmetry and positivity") {
  for (int k = 1; k <= 12; ++k) {
    const Level lv(k);
    for (int n = 0; n <= k + 2; ++n) CHECK(qint(lv, n) == doctest::Approx(qint(lv, k + 2 - n)).epsilon(1e-12));
    for (int n = 1; n <= k + 1; ++n) CHECK(qint(lv, n) > 0.0);
    CHECK(qint(lv, 0) == 0.0);
    CHECK(qint(lv, k + 2) == 0.0);
  }
}

TEST_CASE("qint tends to the classical integer at large k") {
  const Level lv(4000);
  for (int n = 1; n <= 10; ++n) CHECK(qint(lv, n) == doctest::Approx(n).epsilon(1e-5));
}

TEST_CASE("qfactorial") {
  const Level lv(3);
  CHECK(qfactorial(lv, 0) == doctest::Approx(1.0));
  CHECK(qfactorial(lv, 3) == doctest::Approx(qint(lv, 1) * qint(lv, 2) * qint(lv, 3)));
  CHECK_THROWS_AS(qfactorial(lv, 5), Error);
}

TEST_CASE("casimir examples") {
  CHECK(casimir(Spin{0}).value() == 0.0);
  CHECK(casimir(Spin{1}).value() == 0.75);
  CHECK(casimir(Spin{2}).value() == 2.0);
  for (int t = 0; t <= 30; ++t) {
    const Eighths c = casimir(Spin{t});
    CHECK(c.num % 2 == 0);  // 4 c_j is an integer
    CHECK(c.value() == doctest::Approx(t / 2.0 * (t / 2.0 + 1.0)));
  }
}

TEST_CASE("qdim examples") {
  CHECK(qdim(Level(3), Spin{0}) == doctest::Approx(1.0));
  CHECK(qdim(Level(1), Spin{1}) == doctest::Approx(1.0));
  CHECK(qdim(Level(2), Spin{1}) == doctest::Approx(std::sqrt(2.0)));
  CHECK(qdim(Level(3), Spin{1}) == doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0));
  CHECK_THROWS_AS(qdim(Level(2), Spin{3}), Error);
}

TEST_CASE("level validation") {
  CHECK_THROWS_AS(Level(0), Error);
  CHECK(Level(5).max_twice() == 5);
}
