#include <catch_amalgamated.hpp>

#include <random>

#include "support.hpp"
#include "syzgap/field.hpp"

using namespace syzgap;
using namespace syzgap::testing;

namespace {

// Schoolbook F_9 product with g^2 = g + 1 (from g^2 + 2g + 2 = 0 over F_3).
std::pair<int, int> f9_mul(int a0, int a1, int b0, int b1) {
  int c0 = a0 * b0, c1 = a0 * b1 + a1 * b0, c2 = a1 * b1;
  return {(c0 + c2) % 3, (c1 + c2) % 3};
}

}  // namespace

TEST_CASE("F_9 multiplication matches the hand reduction") {
  auto f = f9();
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      auto [c0, c1] = f9_mul(a % 3, a / 3, b % 3, b / 3);
      REQUIRE(f->mul(a, b) == static_cast<Elem>(c0 + 3 * c1));
    }
  }
  FieldElement g(f, f->generator());
  REQUIRE(format_element(g * g) == "e+1");
}

TEST_CASE("prime field inverse and group order") {
  auto f = f3();
  REQUIRE(f->inv(2) == 2);
  auto g = f9();
  for (Elem a = 1; a < 9; ++a) REQUIRE(g->pow(a, 8) == 1);
}

TEST_CASE("division by zero and mixed fields are errors") {
  auto f = f9();
  FieldElement a(f, 4);
  REQUIRE_THROWS_AS(a / FieldElement::zero(f), Error);
  REQUIRE_THROWS_AS(a + FieldElement::one(f3()), Error);
}

TEST_CASE("frobenius examples") {
  auto f = f9();
  REQUIRE(f3()->frobenius(2, 1) == 2);
  Elem g = f->generator();
  REQUIRE(f->frobenius(g, 2) == g);
  REQUIRE(f->frobenius(g, 1) == f->mul(g, f->mul(g, g)));
  // g^3 = g(g+1) = g^2 + g = 2g + 1.
  REQUIRE(format_elem(*f, f->frobenius(g, 1)) == "2*e+1");
}

TEST_CASE("parse and format elements") {
  auto f = f9();
  auto a = parse_element("e+1", f);
  REQUIRE(a.coeffs() == std::vector<std::uint64_t>{1, 1});
  REQUIRE(parse_element("0", f).is_zero());
  // 2e^3 = 2(2e+1) = e+2.
  REQUIRE(parse_element("2*e^3", f) == parse_element("e+2", f));
  REQUIRE(parse_element("2e(e+1)", f) == parse_element("2*e^2+2*e", f));
  REQUIRE_THROWS_AS(parse_element("e+z", f), Error);
  REQUIRE_THROWS_AS(parse_element("e+", f), Error);
  REQUIRE_THROWS_AS(parse_element("(e", f), Error);
  for (Elem c = 0; c < 9; ++c) {
    FieldElement x(f, c);
    REQUIRE(parse_element(format_element(x), f) == x);
  }
}

TEST_CASE("reducible moduli are rejected") {
  REQUIRE_THROWS_AS(FieldSpec::parse(3, 2, "e^2+2"), Error);  // (e+1)(e+2)
  REQUIRE_THROWS_AS(FieldSpec::parse(3, 2, "e^2"), Error);
  REQUIRE_THROWS_AS(FieldSpec::prime(9), Error);
  REQUIRE_THROWS_AS(FieldSpec::parse(3, 2, "2e^2+1"), Error);
  REQUIRE_NOTHROW(FieldSpec::parse(2, 3, "e^3+e+1"));
}

TEST_CASE("field axioms on random elements across representations") {
  std::mt19937_64 rng(7);
  std::vector<FieldPtr> fields = {
      f3(), f9(), FieldSpec::prime(1000003), FieldSpec::parse(2, 8, "e^8+e^4+e^3+e+1"),
      FieldSpec::make(5, 7, FieldSpec::default_modulus(5, 7)),     // Zech tables
      FieldSpec::make(3, 20, FieldSpec::default_modulus(3, 20)),   // schoolbook
      FieldSpec::prime(4294967311ULL),
  };
  for (const auto& f : fields) {
    for (int it = 0; it < 300; ++it) {
      Elem a = random_elem(*f, rng), b = random_elem(*f, rng), c = random_elem(*f, rng);
      REQUIRE(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
      REQUIRE(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
      REQUIRE(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      REQUIRE(f->add(a, f->neg(a)) == 0);
      if (a != 0) {
        REQUIRE(f->mul(a, f->inv(a)) == 1);
        REQUIRE(f->pow(a, f->order() - 1) == 1);
      }
      REQUIRE(f->frobenius(f->add(a, b), 1) == f->add(f->frobenius(a, 1), f->frobenius(b, 1)));
      REQUIRE(f->frobenius(f->mul(a, b), 1) == f->mul(f->frobenius(a, 1), f->frobenius(b, 1)));
      REQUIRE(f->frobenius(a, f->degree()) == a);
      FieldElement x(f, a);
      REQUIRE(parse_element(format_element(x), f) == x);
    }
    for (Elem a = 0; a < std::min<Elem>(f->characteristic(), 50); ++a) REQUIRE(f->frobenius(a, 1) == a);
  }
}
