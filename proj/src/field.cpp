#include "syzgap/field.hpp"

#include <algorithm>

#include "parse.hpp"

namespace syzgap {
namespace {

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 61;
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;
constexpr std::uint64_t kAddTableLimit = 1024;

// Dense polynomials over F_p, lowest degree first, trimmed.
using PolyP = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k > 0) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP poly_mod(PolyP a, const PolyP& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint64_t lead_inv = invmod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = mulmod(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

PolyP poly_mulmod(const PolyP& a, const PolyP& b, const PolyP& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

PolyP poly_powmod(PolyP base, std::uint64_t k, const PolyP& m, std::uint64_t p) {
  PolyP r{1};
  base = poly_mod(std::move(base), m, p);
  while (k > 0) {
    if (k & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    k >>= 1;
  }
  return r;
}

PolyP poly_gcd(PolyP a, PolyP b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const PolyP& m, std::uint64_t p) {
  const std::size_t e = m.size() - 1;
  if (e <= 1) return true;
  PolyP g{0, 1};
  PolyP h = g;
  for (std::size_t k = 1; k <= e / 2; ++k) {
    h = poly_powmod(h, p, m, p);  // g^(p^k) mod m
    PolyP diff = h;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(m, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus,
                     std::string symbol)
    : p_(p), e_(e), modulus_(std::move(modulus)), symbol_(std::move(symbol)) {
  if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw Error("extension degree must be at least 1");
  order_ = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (order_ > kMaxOrder / p) throw Error("field order p^e must be below 2^61");
    order_ *= p;
  }
  if (modulus_.size() != e + 1) {
    throw Error("modulus must have degree " + std::to_string(e));
  }
  for (auto& c : modulus_) {
    if (c >= p) throw Error("modulus coefficients must be residues mod p");
  }
  if (modulus_.back() != 1) throw Error("modulus must be monic");
  if (!is_irreducible(modulus_, p)) throw Error("modulus is reducible over F_" + std::to_string(p));
  if (symbol_.empty()) throw Error("generator symbol must be nonempty");
  if (e == 1) {
    mode_ = Mode::Prime;
  } else if (order_ <= kTableLimit) {
    build_tables();
    mode_ = Mode::Table;
  }
}

FieldPtr FieldSpec::make(std::uint64_t p, unsigned e, std::vector<std::uint64_t> modulus,
                         std::string symbol) {
  return std::make_shared<const FieldSpec>(p, e, std::move(modulus), std::move(symbol));
}

FieldPtr FieldSpec::prime(std::uint64_t p) { return make(p, 1, {0, 1}); }

FieldPtr FieldSpec::parse(std::uint64_t p, unsigned e, std::string_view modulus,
                          std::string symbol) {
  auto fp = prime(p);
  detail::ParseContext ctx{fp.get(), {symbol}, ""};
  detail::Sparse s = detail::parse_sparse(modulus, ctx);
  std::vector<std::uint64_t> coeffs(e + 1, 0);
  for (const auto& [k, v] : s) {
    if (static_cast<unsigned>(k[0]) > e) {
      throw Error("modulus \"" + std::string(modulus) + "\" has degree above " + std::to_string(e));
    }
    coeffs[k[0]] = v;
  }
  return make(p, e, std::move(coeffs), std::move(symbol));
}

std::vector<std::uint64_t> FieldSpec::default_modulus(std::uint64_t p, unsigned e) {
  if (e == 1) return {0, 1};
  std::vector<std::uint64_t> m(e + 1, 0);
  m[e] = 1;
  // Enumerate the low coefficients as a base-p counter.
  for (;;) {
    if (m[0] != 0 && is_irreducible(m, p)) return m;
    std::size_t i = 0;
    while (i < e) {
      if (++m[i] < p) break;
      m[i++] = 0;
    }
    if (i == e) throw Error("no irreducible modulus found");
  }
}

Elem FieldSpec::generator() const { return e_ == 1 ? 0 : p_; }

Elem FieldSpec::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

Elem FieldSpec::from_digits(std::span<const std::uint64_t> digits) const {
  Elem code = 0;
  for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i] % p_;
  return code;
}

std::vector<std::uint64_t> FieldSpec::digits(Elem a) const {
  std::vector<std::uint64_t> d(e_, 0);
  for (unsigned i = 0; i < e_; ++i) {
    d[i] = a % p_;
    a /= p_;
  }
  return d;
}

Elem FieldSpec::add_generic(Elem a, Elem b) const {
  if (mode_ == Mode::Prime) return add(a, b);
  auto da = digits(a);
  auto db = digits(b);
  for (unsigned i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
  return from_digits(da);
}

Elem FieldSpec::neg_generic(Elem a) const {
  auto d = digits(a);
  for (auto& c : d) c = c == 0 ? 0 : p_ - c;
  return from_digits(d);
}

Elem FieldSpec::mul_generic(Elem a, Elem b) const {
  auto da = digits(a);
  auto db = digits(b);
  trim(da);
  trim(db);
  PolyP r = poly_mulmod(da, db, modulus_, p_);
  r.resize(e_, 0);
  return from_digits(r);
}

Elem FieldSpec::add_zech(Elem a, Elem b) const {
  const std::int64_t n = static_cast<std::int64_t>(order_ - 1);
  std::int64_t la = log_[a];
  std::int64_t k = (static_cast<std::int64_t>(log_[b]) - la) % n;
  if (k < 0) k += n;
  std::int64_t z = zech_[static_cast<std::size_t>(k)];
  if (z < 0) return 0;
  return exp_[static_cast<std::size_t>((la + z) % n)];
}

void FieldSpec::build_tables() {
  const std::uint64_t n = order_ - 1;
  auto factors = prime_factors(n);
  auto pow_generic = [&](Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k > 0) {
      if (k & 1) r = mul_generic(r, a);
      a = mul_generic(a, a);
      k >>= 1;
    }
    return r;
  };
  Elem prim = 0;
  for (Elem c = 2; c < order_; ++c) {
    bool ok = true;
    for (auto r : factors) {
      if (pow_generic(c, n / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      prim = c;
      break;
    }
  }
  if (prim == 0) throw InternalError("no primitive element found");
  exp_.assign(2 * n, 0);
  log_.assign(order_, 0);
  Elem cur = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur);
    exp_[i + n] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(i);
    cur = mul_generic(cur, prim);
  }
  neg_table_.assign(order_, 0);
  for (Elem a = 0; a < order_; ++a) neg_table_[a] = static_cast<std::uint32_t>(neg_generic(a));
  zech_.assign(n, -1);
  for (std::uint64_t k = 0; k < n; ++k) {
    Elem s = add_generic(1, exp_[k]);
    zech_[k] = s == 0 ? -1 : static_cast<std::int64_t>(log_[s]);
  }
  if (order_ <= kAddTableLimit) {
    add_table_.assign(order_ * order_, 0);
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b)
        add_table_[a * order_ + b] = static_cast<std::uint16_t>(add_generic(a, b));
  }
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in F_" + std::to_string(order_));
  switch (mode_) {
    case Mode::Prime:
      return invmod(a, p_);
    case Mode::Table: {
      const std::uint64_t n = order_ - 1;
      return exp_[(n - log_[a]) % n];
    }
    default:
      return pow(a, order_ - 2);
  }
}

Elem FieldSpec::pow(Elem a, std::uint64_t k) const {
  if (mode_ == Mode::Table && a != 0) {
    const std::uint64_t n = order_ - 1;
    std::uint64_t e = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(log_[a]) * (k % n)) % n);
    return exp_[e];
  }
  Elem r = 1;
  while (k > 0) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem FieldSpec::frobenius(Elem a, std::uint64_t k) const {
  k %= e_;
  for (std::uint64_t i = 0; i < k; ++i) a = pow(a, p_);
  return a;
}

bool same_field(const FieldSpec& a, const FieldSpec& b) { return &a == &b || a == b; }

FieldElement::FieldElement(FieldPtr field, Elem code) : field_(std::move(field)), code_(code) {
  if (!field_) throw Error("field element without a field");
  if (code_ >= field_->order()) throw Error("field element code out of range");
}

FieldElement FieldElement::from_int(FieldPtr field, std::int64_t v) {
  Elem c = field->from_int(v);
  return {std::move(field), c};
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_field(*field_, *o.field_)) throw Error("operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return {field_, field_->div(code_, o.code_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(code_)}; }
FieldElement FieldElement::inv() const { return {field_, field_->inv(code_)}; }
FieldElement FieldElement::pow(std::uint64_t k) const { return {field_, field_->pow(code_, k)}; }
FieldElement FieldElement::frobenius(std::uint64_t k) const {
  return {field_, field_->frobenius(code_, k)};
}
bool FieldElement::operator==(const FieldElement& o) const {
  return same_field(*field_, *o.field_) && code_ == o.code_;
}

FieldElement parse_element(std::string_view text, const FieldPtr& field) {
  detail::ParseContext ctx{field.get(), {}, field->degree() > 1 ? field->symbol() : ""};
  detail::Sparse s = detail::parse_sparse(text, ctx);
  auto it = s.find({0, 0});
  return {field, it == s.end() ? 0 : it->second};
}

std::string format_elem(const FieldSpec& field, Elem a) {
  auto d = field.digits(a);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
      continue;
    }
    if (d[i] != 1) out += std::to_string(d[i]) + "*";
    out += field.symbol();
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string format_element(const FieldElement& a) { return format_elem(a.field(), a.code()); }

}  // namespace syzgap
