#include "syzgap/hilbert_kunz.hpp"

#include <array>
#include <numeric>

#include "syzgap/linalg.hpp"
#include "syzgap/syzygy.hpp"

namespace syzgap {

namespace {

void check_point(const FieldSpec& f, const RationalPoint& t, std::size_t n) {
  std::uint64_t q = t.q;
  while (q > 1 && q % f.characteristic() == 0) q /= f.characteristic();
  if (t.q < 1 || q != 1) throw Error("level " + std::to_string(t.q) + " is not a power of the characteristic");
  if (t.n() != n) throw Error("point has " + std::to_string(t.n()) + " coordinates, expected " + std::to_string(n));
  for (auto a : t.a)
    if (a < 0 || static_cast<std::uint64_t>(a) > t.q) throw Error("point " + t.str() + " lies outside the cube");
}

std::vector<int> exponents(const RationalPoint& t) { return {t.a.begin(), t.a.end()}; }

std::uint64_t cell_colength(const Cell& c, std::uint64_t q, const std::vector<int>& a) {
  return colength({c.F.frobenius_power(q), c.G.frobenius_power(q), c.H.frobenius_power(q) * linear_product(c.forms, a)});
}

Rational over_q2(std::uint64_t v, std::uint64_t q) {
  return {static_cast<std::int64_t>(v), static_cast<std::int64_t>(q * q)};
}

GapValue as_value(const Rational& r) { return {r.numerator(), static_cast<std::uint64_t>(r.denominator())}; }

// Monomials x^i y^j z^k of one degree, indexed by (j, k).
struct MonomialIndex {
  int degree;
  std::vector<std::size_t> offset;  // start of the block with a given k

  explicit MonomialIndex(int d) : degree(d), offset(static_cast<std::size_t>(d) + 2, 0) {
    for (int k = 0; k <= d; ++k) offset[static_cast<std::size_t>(k) + 1] = offset[static_cast<std::size_t>(k)] + static_cast<std::size_t>(d - k + 1);
  }
  std::size_t size() const { return offset.back(); }
  std::size_t at(int j, int k) const { return offset[static_cast<std::size_t>(k)] + static_cast<std::size_t>(j); }
};

struct Term {
  int i, j, k;
  Elem c;
};

}  // namespace

Rational phi_C(const Cell& c, const RationalPoint& t) {
  validate(c);
  check_point(c.F.field(), t, c.forms.size());
  return over_q2(cell_colength(c, t.q, exponents(t)), t.q);
}

Rational phi_I(const std::vector<HomogPoly>& generators, const std::vector<HomogPoly>& forms, const RationalPoint& t) {
  if (generators.empty()) throw Error("phi_I needs at least one generator");
  check_point(generators.front().field(), t, forms.size());
  std::vector<HomogPoly> gens;
  for (const auto& g : generators) gens.push_back(g.frobenius_power(t.q));
  gens.push_back(linear_product(forms, exponents(t)));
  return over_q2(colength(gens), t.q);
}

std::vector<HomogPoly> colon_ideal(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H) {
  SyzygyGenerators s = syzygy_generators(F, G, H);
  std::vector<HomogPoly> out;
  for (const auto* g : {&s.s1[2], &s.s2[2]})
    if (!g->is_zero()) out.push_back(*g);
  return out;
}

VerificationReport verify_hk_identities(const Cell& c, const std::vector<RationalPoint>& points) {
  validate(c);
  const auto d = static_cast<std::int64_t>(colength({c.F, c.G, c.H}));
  const std::int64_t delta = syzygy_gap(c.F, c.G, c.H).delta;
  const std::int64_t lin = c.F.degree() + c.G.degree() - c.H.degree();
  const auto I = colon_ideal(c.F, c.G, c.H);
  VerificationReport rep{"hk-identities", points.empty() ? 1 : points.front().q, 0, {}};
  for (const auto& t : points) {
    Rational s = 0;
    for (std::size_t i = 0; i < t.n(); ++i) s += t.coord(i);
    const Rational dc = delta_at(c, t).value();
    const Rational pc = phi_C(c, t);
    const Rational pi = phi_I(I, c.forms, t);
    const Rational common = dc * dc - delta * delta + 2 * lin * s - s * s;
    rep.checked += 3;
    if (4 * pc != common + 4 * d) rep.violations.push_back({t, as_value(common + 4 * d), as_value(4 * pc)});
    if (4 * pi != common) rep.violations.push_back({t, as_value(common), as_value(4 * pi)});
    if (pc != pi + d) rep.violations.push_back({t, as_value(pi + d), as_value(pc)});
  }
  return rep;
}

std::int64_t newbound_lhs(const Cell& c, const RationalPoint& t, int axis) {
  validate(c);
  check_point(c.F.field(), t, c.forms.size());
  if (axis < 0 || axis >= c.n()) throw Error("axis " + std::to_string(axis + 1) + " out of range");
  const auto A = static_cast<std::size_t>(axis);
  const std::uint64_t p = c.F.field().characteristic();
  if (t.a[A] < 1 || static_cast<std::uint64_t>(t.a[A]) >= t.q)
    throw Error("coordinate " + std::to_string(axis + 1) + " must satisfy 1 <= a <= q - 1");
  if (t.a[A] % static_cast<std::int64_t>(p) == 0)
    throw Error("coordinate " + std::to_string(axis + 1) + " must be prime to " + std::to_string(p));
  auto a = exponents(t);
  auto mid = static_cast<std::int64_t>(cell_colength(c, t.q, a));
  ++a[A];
  auto up = static_cast<std::int64_t>(cell_colength(c, t.q, a));
  a[A] -= 2;
  auto down = static_cast<std::int64_t>(cell_colength(c, t.q, a));
  return 2 * mid - up - down;
}

VerificationReport newbound_check(const Cell& c, const RationalPoint& t, int axis) {
  VerificationReport rep{"newbound", t.q, 1, {}};
  std::int64_t lhs = newbound_lhs(c, t, axis);
  if (lhs > c.n() - 2) rep.violations.push_back({t, {c.n() - 2, 1}, {lhs, 1}});
  return rep;
}

void validate(const SurfaceInstance& s) {
  if (s.U.is_zero() || s.V.is_zero()) throw Error("U and V must be nonzero");
  if (s.U.degree() != s.V.degree() || s.U.degree() < 1) throw Error("U and V must share a positive degree");
  if (gcd(s.U, s.V).degree() > 0) throw Error("U and V share a common factor");
  if (s.forms.empty() || !pairwise_prime(s.forms)) throw Error("forms must be pairwise prime linear forms");
  if (s.c.size() != s.forms.size()) throw Error("exponent vector length differs from the number of forms");
  int r = 0;
  for (int v : s.c) {
    if (v < 0) throw Error("negative exponent in c");
    r += v;
  }
  if (!(s.m > 0 && s.m < r)) throw Error("need 0 < m < r = sum c");
  for (int v : s.c)
    if (v > s.m) throw Error("c/m must lie in the unit cube");
  if (s.Hlin.is_zero() || s.Hlin.degree() != r - s.m)
    throw Error("Hlin must have degree r - m = " + std::to_string(r - s.m));
  if (gcd(s.Hlin, linear_product(s.forms, s.c)).degree() > 0) throw Error("Hlin must be prime to l^c");
}

std::uint64_t surface_colength(const SurfaceInstance& s, std::uint64_t q, bool allow_large) {
  validate(s);
  const FieldSpec& fs = s.U.field();
  const std::uint64_t p = fs.characteristic();
  {
    std::uint64_t t = q;
    while (t > 1 && t % p == 0) t /= p;
    if (q < 1 || t != 1) throw Error("level " + std::to_string(q) + " is not a power of " + std::to_string(p));
  }
  if (q > p * p && !allow_large)
    throw Error("level " + std::to_string(q) + " exceeds p^2; pass the large-level flag to force it");

  // Generators as trivariate term lists.
  std::vector<std::pair<int, std::vector<Term>>> gens;
  auto bivariate = [](const HomogPoly& h, int zpow) {
    std::vector<Term> out;
    const int d = h.degree();
    for (int i = 0; i <= d; ++i)
      if (h.coeff(i) != 0) out.push_back({d - i, i, zpow, h.coeff(i)});
    return out;
  };
  {
    HomogPoly lc = linear_product(s.forms, s.c);
    auto F = bivariate(lc, 0);
    for (auto t : bivariate(s.Hlin, s.m)) {
      t.c = fs.neg(t.c);
      F.push_back(t);
    }
    gens.push_back({lc.degree(), F});
  }
  HomogPoly Uq = s.U.frobenius_power(q), Vq = s.V.frobenius_power(q);
  gens.push_back({Uq.degree(), bivariate(Uq, 0)});
  gens.push_back({Vq.degree(), bivariate(Vq, 0)});
  gens.push_back({static_cast<int>(q), {Term{0, 0, static_cast<int>(q), 1}}});

  std::uint64_t total = 0;
  std::vector<std::vector<Elem>> prev;
  for (int D = 0;; ++D) {
    MonomialIndex idx(D), low(D > 0 ? D - 1 : 0);
    Echelon ech(fs, idx.size());
    for (const auto& row : prev) {
      // Multiply by x, y and z: (j, k) -> (j, k), (j+1, k), (j, k+1).
      for (int var = 0; var < 3 && ech.rank() < idx.size(); ++var) {
        std::vector<Elem> v(idx.size(), 0);
        for (int k = 0; k <= D - 1; ++k)
          for (int j = 0; j <= D - 1 - k; ++j) {
            Elem c = row[low.at(j, k)];
            if (c == 0) continue;
            v[idx.at(j + (var == 1), k + (var == 2))] = c;
          }
        ech.insert(std::move(v));
      }
    }
    for (const auto& [deg, terms] : gens) {
      if (deg != D) continue;
      std::vector<Elem> v(idx.size(), 0);
      for (const auto& t : terms) v[idx.at(t.j, t.k)] = fs.add(v[idx.at(t.j, t.k)], t.c);
      ech.insert(std::move(v));
    }
    total += idx.size() - ech.rank();
    if (ech.rank() == idx.size()) break;
    prev = ech.rows();
  }
  return total;
}

Rational mu_formula(std::int64_t d, std::int64_t r, std::int64_t m, const Rational& delta_star) {
  if (!(r > m && m > 0)) throw Error("need r > m > 0");
  return Rational(d * r) - Rational(r, 4) + Rational(m * m, 4 * r) * delta_star * delta_star;
}

std::optional<Rational> surface_delta_star(const SurfaceInstance& s) {
  validate(s);
  const auto p = static_cast<std::int64_t>(s.U.field().characteristic());
  std::int64_t den = 1;
  std::vector<Rational> t;
  for (int v : s.c) {
    t.emplace_back(v, s.m);
    den = std::lcm(den, t.back().denominator());
  }
  std::int64_t rest = den;
  while (rest % p == 0) rest /= p;
  if (rest != 1) return std::nullopt;
  RationalPoint pt{{}, static_cast<std::uint64_t>(den)};
  for (const auto& r : t) pt.a.push_back(r.numerator() * (den / r.denominator()));
  Cell c = Cell::make(s.U, s.V, HomogPoly::constant(s.U.field_ptr(), 1), s.forms);
  return delta_at(c, pt).value();
}

std::optional<Rational> surface_mu(const SurfaceInstance& s) {
  auto ds = surface_delta_star(s);
  if (!ds) return std::nullopt;
  std::int64_t r = 0;
  for (int v : s.c) r += v;
  return mu_formula(s.U.degree(), r, s.m, *ds);
}

}  // namespace syzgap
