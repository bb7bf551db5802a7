#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "syzgap/field.hpp"

namespace syzgap {

/// Homogeneous polynomial in x, y over a finite field.
///
/// A nonzero polynomial of degree d stores d+1 coefficients, index i holding
/// the coefficient of x^{d-i} y^i. The zero polynomial stores nothing and has
/// no degree (degree() returns -1).
class HomogPoly {
 public:
  HomogPoly() = default;
  /// Coefficients as described above; an all-zero vector yields zero.
  HomogPoly(FieldPtr field, std::vector<Elem> coeffs);

  static HomogPoly zero(FieldPtr field);
  static HomogPoly constant(FieldPtr field, Elem c);
  /// c * x^i * y^j.
  static HomogPoly monomial(FieldPtr field, int i, int j, Elem c = 1);
  /// a*x + b*y.
  static HomogPoly linear(FieldPtr field, Elem a, Elem b);

  const FieldSpec& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_constant() const { return c_.size() == 1; }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

  /// Same-degree sum; either side may be zero.
  HomogPoly operator+(const HomogPoly& o) const;
  HomogPoly operator-(const HomogPoly& o) const;
  HomogPoly operator-() const;
  HomogPoly operator*(const HomogPoly& o) const;
  HomogPoly scale(Elem c) const;
  HomogPoly pow(unsigned k) const;
  /// f^q for q a power of the characteristic, via coefficient Frobenius.
  HomogPoly frobenius_power(std::uint64_t q) const;
  /// Multiply by x^i y^j.
  HomogPoly shift(int i, int j) const;
  /// Scale so the highest-index nonzero coefficient is 1.
  HomogPoly monic() const;

  Elem eval(Elem u, Elem v) const;

  /// Largest k with x^k | f (resp. y^k).
  int x_power() const;
  int y_power() const;

  bool operator==(const HomogPoly& o) const;
  bool operator!=(const HomogPoly& o) const { return !(*this == o); }

 private:
  FieldPtr field_;
  std::vector<Elem> c_;
};

/// Monic greatest common divisor of nonzero f and g.
HomogPoly gcd(const HomogPoly& f, const HomogPoly& g);
HomogPoly gcd(const std::vector<HomogPoly>& polys);

/// f / g; throws Error when g does not divide f.
HomogPoly divide_exact(const HomogPoly& f, const HomogPoly& g);
bool divides(const HomogPoly& g, const HomogPoly& f);

/// Projective point (u:v) with u, v not both zero.
FieldElement eval_projective(const HomogPoly& f, const FieldElement& u, const FieldElement& v);

/// Product of forms[i]^a[i]; the constant 1 for an all-zero exponent vector.
HomogPoly linear_product(const std::vector<HomogPoly>& forms, const std::vector<int>& a);

/// Nonzero linear forms f, g proportional to each other.
bool proportional(const HomogPoly& f, const HomogPoly& g);
bool pairwise_prime(const std::vector<HomogPoly>& forms);
/// The projective zero (b : -a) of a*x + b*y.
std::pair<Elem, Elem> root_of(const HomogPoly& linear_form);

/// Parses a homogeneous expression in x, y; coefficients use the field
/// element syntax. Inhomogeneous input is rejected with the degrees found.
HomogPoly parse_poly(std::string_view text, const FieldPtr& field);
/// Re-parseable text, e.g. "x^2+2*x*y+(e+1)*y^2".
std::string format_poly(const HomogPoly& f);

}  // namespace syzgap
