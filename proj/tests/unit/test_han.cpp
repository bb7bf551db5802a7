#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "syzgap/han.hpp"
#include "syzgap/syzygy.hpp"

using namespace syzgap;
using namespace syzgap::testing;

namespace {

std::array<Rational, 3> T(Rational a, Rational b, Rational c) { return {a, b, c}; }

}  // namespace

TEST_CASE("Han values at hand-checked points") {
  CHECK(han_delta_star(T(1, 1, 1), 3) == 1);
  CHECK(han_delta_star(T({1, 3}, {1, 3}, {1, 3}), 3) == Rational(1, 3));
  CHECK(han_delta_star(T(1, 1, 0), 3) == 0);
  CHECK(han_delta_star(T(1, 0, 0), 2) == 1);
  CHECK(han_delta_star(T({7, 9}, {1, 9}, {2, 9}), 3) == Rational(4, 9));
  CHECK(han_delta_star(T(0, 0, 0), 5) == 0);
}

TEST_CASE("Han rejects bad coordinates") {
  CHECK_THROWS_AS(han_delta_star(T({4, 3}, 0, 0), 3), Error);
  CHECK_THROWS_AS(han_delta_star(T({-1, 3}, 0, 0), 3), Error);
  CHECK_THROWS_AS(han_delta_star(T({1, 2}, 0, 0), 3), Error);
}

TEST_CASE("Han agrees with the syzygy gap on small grids") {
  auto r = han_cross_check(9, 3);
  CHECK(r.checked == 1000);
  CHECK(r.passed());
  auto s = han_cross_check(4, 2);
  CHECK(s.checked == 125);
  CHECK(s.passed());
  auto u = han_cross_check(5, 5);
  CHECK(u.passed());
  CHECK_THROWS_AS(han_cross_check(6, 3), Error);
}

TEST_CASE("Han is symmetric") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> a(0, 27);
  for (int trial = 0; trial < 300; ++trial) {
    std::array<Rational, 3> t{Rational(a(rng), 27), Rational(a(rng), 27), Rational(a(rng), 27)};
    Rational v = han_delta_star(t, 3);
    std::sort(t.begin(), t.end());
    do {
      REQUIRE(han_delta_star(t, 3) == v);
    } while (std::next_permutation(t.begin(), t.end()));
  }
}

TEST_CASE("Han scales by 1/p inside the triangle region") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> a(0, 9);
  int used = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::array<Rational, 3> t{Rational(a(rng), 9), Rational(a(rng), 9), Rational(a(rng), 9)};
    auto triangle = [](const std::array<Rational, 3>& v) {
      return v[0] <= v[1] + v[2] && v[1] <= v[0] + v[2] && v[2] <= v[0] + v[1];
    };
    std::array<Rational, 3> s{t[0] / 3, t[1] / 3, t[2] / 3};
    Rational v = han_delta_star(t, 3);
    if (!triangle(t) || v >= 1) continue;
    ++used;
    REQUIRE(han_delta_star(s, 3) == v / 3);
  }
  CHECK(used > 50);
}

TEST_CASE("Han matches the syzygy gap at random points over F_5") {
  auto f = FieldSpec::prime(5);
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> a(0, 25);
  for (int trial = 0; trial < 60; ++trial) {
    int a1 = a(rng), a2 = a(rng), a3 = a(rng);
    auto g = syzygy_gap(P("x", f).pow(static_cast<unsigned>(a1)), P("y", f).pow(static_cast<unsigned>(a2)),
                        P("x+y", f).pow(static_cast<unsigned>(a3)), SyzygyEngine::Gaussian);
    REQUIRE(han_delta_star(T({a1, 25}, {a2, 25}, {a3, 25}), 5) * 25 == g.delta);
  }
}
