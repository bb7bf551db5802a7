#include "syzgap/poly.hpp"

#include <algorithm>

#include "parse.hpp"
#include "upoly.hpp"

namespace syzgap {

HomogPoly::HomogPoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
  if (!field_) throw Error("polynomial without a field");
  if (std::all_of(c_.begin(), c_.end(), [](Elem c) { return c == 0; })) c_.clear();
}

HomogPoly HomogPoly::zero(FieldPtr field) { return {std::move(field), {}}; }

HomogPoly HomogPoly::constant(FieldPtr field, Elem c) { return {std::move(field), {c}}; }

HomogPoly HomogPoly::monomial(FieldPtr field, int i, int j, Elem c) {
  if (i < 0 || j < 0) throw Error("negative monomial exponent");
  std::vector<Elem> v(static_cast<std::size_t>(i + j + 1), 0);
  v[static_cast<std::size_t>(j)] = c;
  return {std::move(field), std::move(v)};
}

HomogPoly HomogPoly::linear(FieldPtr field, Elem a, Elem b) { return {std::move(field), {a, b}}; }

HomogPoly HomogPoly::operator+(const HomogPoly& o) const {
  if (!same_field(*field_, *o.field_)) throw Error("polynomials over different fields");
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (degree() != o.degree()) {
    throw Error("cannot add homogeneous polynomials of degrees " + std::to_string(degree()) +
                " and " + std::to_string(o.degree()));
  }
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->add(c_[i], o.c_[i]);
  return {field_, std::move(r)};
}

HomogPoly HomogPoly::operator-() const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->neg(c_[i]);
  return {field_, std::move(r)};
}

HomogPoly HomogPoly::operator-(const HomogPoly& o) const { return *this + (-o); }

HomogPoly HomogPoly::operator*(const HomogPoly& o) const {
  if (!same_field(*field_, *o.field_)) throw Error("polynomials over different fields");
  if (is_zero() || o.is_zero()) return zero(field_);
  const FieldSpec& f = *field_;
  std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f.fma(c_[i], o.c_[j], r[i + j]);
  }
  return {field_, std::move(r)};
}

HomogPoly HomogPoly::scale(Elem c) const {
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_->mul(c_[i], c);
  return {field_, std::move(r)};
}

HomogPoly HomogPoly::pow(unsigned k) const {
  HomogPoly r = constant(field_, 1);
  HomogPoly b = *this;
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return r;
}

HomogPoly HomogPoly::frobenius_power(std::uint64_t q) const {
  std::uint64_t t = q;
  while (t > 1 && t % field_->characteristic() == 0) t /= field_->characteristic();
  if (q == 0 || t != 1) {
    throw Error(std::to_string(q) + " is not a power of the characteristic " +
                std::to_string(field_->characteristic()));
  }
  if (is_zero()) return *this;
  std::vector<Elem> r(static_cast<std::size_t>(degree()) * q + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) r[i * q] = field_->pow(c_[i], q);
  return {field_, std::move(r)};
}

HomogPoly HomogPoly::shift(int i, int j) const {
  if (i < 0 || j < 0) throw Error("negative monomial exponent");
  if (is_zero()) return *this;
  std::vector<Elem> r(c_.size() + static_cast<std::size_t>(i + j), 0);
  std::copy(c_.begin(), c_.end(), r.begin() + j);
  return {field_, std::move(r)};
}

HomogPoly HomogPoly::monic() const {
  if (is_zero()) return *this;
  auto it = std::find_if(c_.rbegin(), c_.rend(), [](Elem c) { return c != 0; });
  return scale(field_->inv(*it));
}

Elem HomogPoly::eval(Elem u, Elem v) const {
  // Horner in v/u is unavailable when u = 0, so accumulate both power ladders.
  const FieldSpec& f = *field_;
  Elem acc = 0;
  Elem vpow = 1;
  std::vector<Elem> upow(c_.size(), 1);
  for (std::size_t i = 1; i < c_.size(); ++i) upow[i] = f.mul(upow[i - 1], u);
  const std::size_t d = c_.size() - 1;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    acc = f.fma(c_[i], f.mul(upow[d - i], vpow), acc);
    vpow = f.mul(vpow, v);
  }
  return acc;
}

int HomogPoly::x_power() const {
  if (is_zero()) return 0;
  int k = 0;
  for (std::size_t i = c_.size(); i-- > 0 && c_[i] == 0;) ++k;
  return k;
}

int HomogPoly::y_power() const {
  if (is_zero()) return 0;
  int k = 0;
  while (c_[static_cast<std::size_t>(k)] == 0) ++k;
  return k;
}

bool HomogPoly::operator==(const HomogPoly& o) const {
  if (!field_ || !o.field_) return c_ == o.c_ && field_ == o.field_;
  return same_field(*field_, *o.field_) && c_ == o.c_;
}

namespace {

// The dehomogenized core of f: coefficients between its y- and x-power runs.
detail::UPoly core(const HomogPoly& f) {
  const auto& c = f.coeffs();
  return {c.begin() + f.y_power(), c.end() - f.x_power()};
}

}  // namespace

HomogPoly gcd(const HomogPoly& f, const HomogPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error("gcd of the zero polynomial");
  if (!same_field(f.field(), g.field())) throw Error("polynomials over different fields");
  int xs = std::min(f.x_power(), g.x_power());
  int ys = std::min(f.y_power(), g.y_power());
  detail::UPoly u = detail::ugcd(f.field(), core(f), core(g));
  return HomogPoly(f.field_ptr(), std::move(u)).shift(xs, ys);
}

HomogPoly gcd(const std::vector<HomogPoly>& polys) {
  if (polys.empty()) throw Error("gcd of an empty list");
  HomogPoly g = polys.front().monic();
  for (std::size_t i = 1; i < polys.size() && g.degree() > 0; ++i) g = gcd(g, polys[i]);
  return g.monic();
}

namespace {

bool try_divide(const HomogPoly& f, const HomogPoly& g, HomogPoly& out) {
  if (g.is_zero()) throw Error("division by the zero polynomial");
  if (!same_field(f.field(), g.field())) throw Error("polynomials over different fields");
  if (f.is_zero()) {
    out = f;
    return true;
  }
  if (f.degree() < g.degree()) return false;
  const FieldSpec& fs = f.field();
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t s = static_cast<std::size_t>(g.y_power());
  for (std::size_t i = 0; i < s; ++i)
    if (fc[i] != 0) return false;
  // Power-series division from the low end after removing y^s.
  const std::size_t n = static_cast<std::size_t>(f.degree() - g.degree()) + 1;
  const std::size_t gl = gc.size() - s;
  Elem inv0 = fs.inv(gc[s]);
  std::vector<Elem> h(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    Elem acc = fc[k + s];
    for (std::size_t j = 1; j <= k && j < gl; ++j) acc = fs.sub(acc, fs.mul(gc[s + j], h[k - j]));
    h[k] = fs.mul(acc, inv0);
  }
  HomogPoly cand(f.field_ptr(), std::move(h));
  if (cand * g != f) return false;
  out = std::move(cand);
  return true;
}

}  // namespace

HomogPoly divide_exact(const HomogPoly& f, const HomogPoly& g) {
  HomogPoly out;
  if (!try_divide(f, g, out)) throw Error("inexact polynomial division");
  return out;
}

bool divides(const HomogPoly& g, const HomogPoly& f) {
  HomogPoly out;
  return try_divide(f, g, out);
}

FieldElement eval_projective(const HomogPoly& f, const FieldElement& u, const FieldElement& v) {
  if (u.is_zero() && v.is_zero()) throw Error("(0:0) is not a projective point");
  if (!same_field(f.field(), u.field()) || !same_field(u.field(), v.field())) {
    throw Error("operands belong to different fields");
  }
  if (f.is_zero()) return FieldElement::zero(f.field_ptr());
  return {f.field_ptr(), f.eval(u.code(), v.code())};
}

HomogPoly linear_product(const std::vector<HomogPoly>& forms, const std::vector<int>& a) {
  if (forms.size() != a.size()) throw Error("exponent vector length differs from the number of forms");
  if (forms.empty()) throw Error("linear_product needs at least one form");
  const FieldSpec& f = forms.front().field();
  std::vector<Elem> acc{1};
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (a[i] < 0) throw Error("negative exponent in linear_product");
    if (forms[i].degree() != 1) throw Error("linear_product expects linear forms");
    Elem l0 = forms[i].coeff(0), l1 = forms[i].coeff(1);
    for (int k = 0; k < a[i]; ++k) {
      std::vector<Elem> next(acc.size() + 1, 0);
      for (std::size_t j = 0; j < acc.size(); ++j) {
        next[j] = f.fma(acc[j], l0, next[j]);
        next[j + 1] = f.mul(acc[j], l1);
      }
      acc = std::move(next);
    }
  }
  return {forms.front().field_ptr(), std::move(acc)};
}

bool proportional(const HomogPoly& f, const HomogPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error("proportionality of the zero polynomial");
  if (f.degree() != g.degree()) return false;
  const FieldSpec& fs = f.field();
  // f and g are proportional iff all 2x2 minors of the coefficient pair vanish.
  std::size_t k = static_cast<std::size_t>(f.y_power());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (fs.mul(f.coeffs()[i], g.coeffs()[k]) != fs.mul(f.coeffs()[k], g.coeffs()[i])) return false;
  }
  return true;
}

bool pairwise_prime(const std::vector<HomogPoly>& forms) {
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].is_zero() || forms[i].degree() != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (proportional(forms[i], forms[j])) return false;
  }
  return true;
}

std::pair<Elem, Elem> root_of(const HomogPoly& l) {
  if (l.degree() != 1) throw Error("root_of expects a linear form");
  return {l.coeff(1), l.field().neg(l.coeff(0))};
}

HomogPoly parse_poly(std::string_view text, const FieldPtr& field) {
  detail::ParseContext ctx{field.get(), {"x", "y"}, field->degree() > 1 ? field->symbol() : ""};
  detail::Sparse s = detail::parse_sparse(text, ctx);
  if (s.empty()) return HomogPoly::zero(field);
  const int d = s.begin()->first[0] + s.begin()->first[1];
  std::vector<Elem> c(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& [k, v] : s) {
    int dk = k[0] + k[1];
    if (dk != d) {
      throw Error("inhomogeneous polynomial \"" + std::string(text) + "\": monomials of degree " +
                  std::to_string(d) + " and " + std::to_string(dk));
    }
    c[static_cast<std::size_t>(k[1])] = v;
  }
  return {field, std::move(c)};
}

std::string format_poly(const HomogPoly& f) {
  if (f.is_zero()) return "0";
  const int d = f.degree();
  std::string out;
  for (int i = 0; i <= d; ++i) {
    Elem c = f.coeff(i);
    if (c == 0) continue;
    std::string mono;
    auto put = [&mono](const char* v, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    put("x", d - i);
    put("y", i);
    std::string coeff = format_elem(f.field(), c);
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (c == 1) {
      term = mono;
    } else if (coeff.find('+') != std::string::npos || coeff.find('*') != std::string::npos ||
               coeff.find('^') != std::string::npos) {
      term = "(" + coeff + ")*" + mono;
    } else {
      term = coeff + "*" + mono;
    }
    if (!out.empty()) out += "+";
    out += term;
  }
  return out;
}

}  // namespace syzgap
