#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "syzgap/hilbert_kunz.hpp"
#include "syzgap/linalg.hpp"
#include "syzgap/syzygy.hpp"

using namespace syzgap;
using namespace syzgap::testing;

namespace {

RationalPoint pt(std::vector<std::int64_t> a, std::uint64_t q) { return {std::move(a), q}; }

RationalPoint random_point(std::size_t n, std::uint64_t q, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> a(0, static_cast<std::int64_t>(q));
  RationalPoint t{{}, q};
  for (std::size_t i = 0; i < n; ++i) t.a.push_back(a(rng));
  return t;
}

struct Tri {
  int i, j, k;
  Elem c;
};

// Quotient dimension from the full multiple spans in every degree up to the
// socle bound of (U^q, V^q, z^q).
std::uint64_t surface_oracle(const SurfaceInstance& s, std::uint64_t q) {
  const FieldSpec& f = s.U.field();
  auto terms = [](const HomogPoly& h, int z) {
    std::vector<Tri> out;
    for (int i = 0; i <= h.degree(); ++i)
      if (h.coeff(i) != 0) out.push_back({h.degree() - i, i, z, h.coeff(i)});
    return out;
  };
  HomogPoly lc = linear_product(s.forms, s.c);
  std::vector<std::pair<int, std::vector<Tri>>> gens;
  auto F = terms(lc, 0);
  for (auto t : terms(s.Hlin, s.m)) F.push_back({t.i, t.j, t.k, f.neg(t.c)});
  gens.push_back({lc.degree(), F});
  HomogPoly Uq = s.U.frobenius_power(q), Vq = s.V.frobenius_power(q);
  gens.push_back({Uq.degree(), terms(Uq, 0)});
  gens.push_back({Vq.degree(), terms(Vq, 0)});
  gens.push_back({static_cast<int>(q), {{0, 0, static_cast<int>(q), 1}}});

  const int top = 2 * Uq.degree() + static_cast<int>(q);
  std::uint64_t total = 0;
  for (int D = 0; D <= top; ++D) {
    std::vector<std::array<int, 2>> mons;  // (j, k) with i = D - j - k
    for (int k = 0; k <= D; ++k)
      for (int j = 0; j + k <= D; ++j) mons.push_back({j, k});
    auto col = [&](int j, int k) {
      for (std::size_t c = 0; c < mons.size(); ++c)
        if (mons[c][0] == j && mons[c][1] == k) return c;
      return mons.size();
    };
    std::vector<std::vector<Elem>> rows;
    for (const auto& [deg, g] : gens) {
      if (deg > D) continue;
      for (int k = 0; k <= D - deg; ++k)
        for (int j = 0; j + k <= D - deg; ++j) {
          std::vector<Elem> r(mons.size(), 0);
          for (const auto& t : g) r[col(t.j + j, t.k + k)] = f.add(r[col(t.j + j, t.k + k)], t.c);
          rows.push_back(r);
        }
    }
    Matrix m(rows.size(), mons.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t c = 0; c < mons.size(); ++c) m.at(r, c) = rows[r][c];
    total += mons.size() - (rows.empty() ? 0 : rank(f, m));
  }
  return total;
}

SurfaceInstance line_instance(const FieldPtr& f, int m) {
  SurfaceInstance s;
  s.U = P("x", f);
  s.V = P("y", f);
  s.forms = {P("x", f), P("y", f), P("x+y", f)};
  s.c = {1, 1, 1};
  s.m = m;
  s.Hlin = P("x+2*y", f).pow(static_cast<unsigned>(3 - m));
  return s;
}

}  // namespace

TEST_CASE("phi values on <x,y>") {
  auto f = f3();
  Cell c = xy_cell({P("x", f), P("y", f)});
  // H = 1 makes <F, G, H> the unit ideal.
  CHECK(phi_C(c, pt({0, 0}, 1)) == 0);
  for (std::uint64_t q : {1, 3, 9}) {
    CHECK(phi_C(c, pt({static_cast<std::int64_t>(q), static_cast<std::int64_t>(q)}, q)) == 1);
    auto Q = static_cast<std::int64_t>(q);
    CHECK(phi_I({P("x", f), P("y", f)}, c.forms, pt({Q, Q}, q)) == 1);
    CHECK(phi_I({P("x", f), P("y", f)}, c.forms, pt({Q, 0}, q)) == 1);
    // l^0 = 1 generates the unit ideal.
    CHECK(phi_I({P("x", f), P("y", f)}, c.forms, pt({0, 0}, q)) == 0);
  }
  CHECK_THROWS_AS(phi_C(c, pt({0, 0}, 6)), Error);
  CHECK_THROWS_AS(phi_C(c, pt({4, 0}, 3)), Error);
  CHECK_THROWS_AS(phi_I({P("x", f), P("x^2", f)}, c.forms, pt({1, 0}, 3)), Error);
}

TEST_CASE("colon ideal of a complete intersection") {
  auto f = f3();
  auto I = colon_ideal(P("x^2", f), P("y^2", f), P("x*y", f));
  REQUIRE(I.size() == 2);
  // (x^2, y^2) : xy = (x, y).
  CHECK(colength(I) == 1);
}

TEST_CASE("Hilbert-Kunz identities hold at random points") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 6; ++trial) {
    Cell c = random_cell(trial % 2 ? f3() : f9(), 3, 3, rng);
    std::vector<RationalPoint> pts;
    for (int k = 0; k < 8; ++k) pts.push_back(random_point(3, k % 2 ? 9 : 3, rng));
    auto rep = verify_hk_identities(c, pts);
    CHECK(rep.checked == 24);
    CHECK(rep.passed());
  }
}

TEST_CASE("identities on the principal colon case") {
  auto f = f3();
  Cell c = Cell::make(P("x", f), P("y", f), P("x^2+y^2", f), {P("x+y", f), P("x+2*y", f)});
  std::vector<RationalPoint> pts = {pt({0, 0}, 1), pt({1, 2}, 3), pt({5, 7}, 9), pt({9, 0}, 9)};
  CHECK(verify_hk_identities(c, pts).passed());
}

TEST_CASE("newbound on the F_9 example") {
  auto f = f9();
  Cell c = xy_cell(example_forms(f));
  CHECK(newbound_lhs(c, pt({2, 2, 2, 2}, 9)) == 2);
  CHECK(newbound_check(c, pt({2, 2, 2, 2}, 9)).passed());
  CHECK_THROWS_AS(newbound_lhs(c, pt({0, 2, 2, 2}, 9)), Error);
  CHECK_THROWS_AS(newbound_lhs(c, pt({3, 2, 2, 2}, 9)), Error);
  CHECK_THROWS_AS(newbound_lhs(c, pt({2, 2, 2, 2}, 9), 4), Error);
}

TEST_CASE("newbound equals a second difference of delta squared") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    Cell c = random_cell(trial % 2 ? f3() : f9(), 3, 3, rng);
    std::uint64_t q = trial % 3 ? 9 : 3;
    RationalPoint t = random_point(3, q, rng);
    int axis = trial % 3;
    auto& ai = t.a[static_cast<std::size_t>(axis)];
    ai = 1 + (ai % static_cast<std::int64_t>(q - 1));
    if (ai % 3 == 0) ai -= 1;
    auto rep = newbound_check(c, t, axis);
    REQUIRE(rep.passed());
    // The colength identity turns the left side into (2D(a)^2 - D(a+e)^2 - D(a-e)^2 + 2) / 4.
    auto D = [&](std::int64_t shift) {
      RationalPoint u = t;
      u.a[static_cast<std::size_t>(axis)] += shift;
      std::vector<HomogPoly> fq = {c.F.frobenius_power(q), c.G.frobenius_power(q),
                                   c.H.frobenius_power(q) * linear_product(c.forms, {u.a.begin(), u.a.end()})};
      return syzygy_gap(fq[0], fq[1], fq[2], SyzygyEngine::Gaussian).delta;
    };
    std::int64_t d0 = D(0), dp = D(1), dm = D(-1);
    CHECK(4 * newbound_lhs(c, t, axis) == 2 * d0 * d0 - dp * dp - dm * dm + 2);
  }
}

TEST_CASE("mu formula") {
  CHECK(mu_formula(1, 3, 2, 0) == Rational(9, 4));
  CHECK(mu_formula(1, 3, 1, 1) == Rational(7, 3));
  Rational a = mu_formula(2, 5, 3, Rational(1, 3));
  Rational b = mu_formula(2, 5, 3, Rational(2, 3));
  CHECK(b - a == 3 * Rational(9, 20) * Rational(1, 9));
  CHECK_THROWS_AS(mu_formula(1, 3, 3, 0), Error);
}

TEST_CASE("surface colength") {
  auto f = f3();
  SECTION("level one is the plane colength of <U, V, l^c>") {
    for (int m : {1, 2}) {
      auto s = line_instance(f, m);
      CHECK(surface_colength(s, 1) == colength({s.U, s.V, linear_product(s.forms, s.c)}));
    }
  }
  SECTION("matches full multiple spans") {
    for (int m : {1, 2})
      for (std::uint64_t q : {1, 3}) {
        auto s = line_instance(f, m);
        CHECK(surface_colength(s, q) == surface_oracle(s, q));
      }
    SurfaceInstance s;
    s.U = P("x^2+y^2", f);
    s.V = P("x*y", f);
    s.forms = {P("x", f), P("x+y", f)};
    s.c = {2, 1};
    s.m = 2;
    s.Hlin = P("y", f);
    CHECK(surface_colength(s, 3) == surface_oracle(s, 3));
  }
  SECTION("recorded values") {
    CHECK(surface_colength(line_instance(f, 2), 3) == 19);
    CHECK(surface_colength(line_instance(f, 1), 3) == 21);
    CHECK(surface_colength(line_instance(f, 1), 9) == 189);
  }
  SECTION("preconditions") {
    auto s = line_instance(f, 1);
    CHECK_THROWS_AS(surface_colength(s, 27), Error);
    CHECK_THROWS_AS(surface_colength(s, 6), Error);
    auto bad = s;
    bad.Hlin = P("x^2", f);
    CHECK_THROWS_AS(validate(bad), Error);
    bad = s;
    bad.m = 3;
    CHECK_THROWS_AS(validate(bad), Error);
    bad = s;
    bad.V = P("y^2", f);
    CHECK_THROWS_AS(validate(bad), Error);
  }
}
