#pragma once

#include <random>
#include <string>

#include "syzgap/fractal.hpp"
#include "syzgap/poly.hpp"

namespace syzgap::testing {

inline FieldPtr f3() { return FieldSpec::prime(3); }
inline FieldPtr f9() { return FieldSpec::parse(3, 2, "e^2+2e+2"); }

inline HomogPoly P(const std::string& text, const FieldPtr& f) { return parse_poly(text, f); }

inline Elem random_elem(const FieldSpec& f, std::mt19937_64& rng) {
  return std::uniform_int_distribution<Elem>(0, f.order() - 1)(rng);
}

inline HomogPoly random_poly(const FieldPtr& f, int degree, std::mt19937_64& rng) {
  for (;;) {
    std::vector<Elem> c(static_cast<std::size_t>(degree) + 1);
    for (auto& v : c) v = random_elem(*f, rng);
    HomogPoly p(f, std::move(c));
    if (!p.is_zero()) return p;
  }
}

inline HomogPoly random_linear(const FieldPtr& f, std::mt19937_64& rng) { return random_poly(f, 1, rng); }

inline std::vector<HomogPoly> random_forms(const FieldPtr& f, int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<HomogPoly> forms;
    for (int i = 0; i < n; ++i) forms.push_back(random_linear(f, rng));
    if (pairwise_prime(forms)) return forms;
  }
}

/// Random valid cell; degree 0 for H gives a constant.
inline Cell random_cell(const FieldPtr& f, int n, int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, max_degree), hdeg(0, max_degree);
  for (;;) {
    auto forms = random_forms(f, n, rng);
    Cell c{random_poly(f, deg(rng), rng), random_poly(f, deg(rng), rng), random_poly(f, hdeg(rng), rng), forms};
    try {
      validate(c);
      return c;
    } catch (const Error&) {
    }
  }
}

inline std::vector<HomogPoly> example_forms(const FieldPtr& f9) {
  return {P("x", f9), P("y", f9), P("x+y", f9), P("x+e*y", f9)};
}

/// <x, y> over the given forms.
inline Cell xy_cell(const std::vector<HomogPoly>& forms) {
  const FieldPtr& f = forms.front().field_ptr();
  return Cell::make(P("x", f), P("y", f), HomogPoly::constant(f, 1), forms);
}

}  // namespace syzgap::testing
