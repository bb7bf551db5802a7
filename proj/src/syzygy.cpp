#include "syzgap/syzygy.hpp"

#include <algorithm>

#include "syzgap/linalg.hpp"
#include "upoly.hpp"

namespace syzgap {

using detail::UPoly;

HomogPoly apply_syzygy(const Triple& s, const HomogPoly& F, const HomogPoly& G, const HomogPoly& H) {
  HomogPoly acc = HomogPoly::zero(F.field_ptr());
  const HomogPoly* P[3] = {&F, &G, &H};
  for (int j = 0; j < 3; ++j) {
    if (s[j].is_zero()) continue;
    acc = acc + s[j] * *P[j];
  }
  return acc;
}

namespace {

void require_nonzero(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H) {
  if (F.is_zero() || G.is_zero() || H.is_zero()) {
    throw Error("syzygy computations need nonzero homogeneous polynomials");
  }
  if (!same_field(F.field(), G.field()) || !same_field(F.field(), H.field())) {
    throw Error("polynomials over different fields");
  }
}

bool coprime3(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H) {
  HomogPoly g = gcd(F, G);
  if (g.degree() == 0) return true;
  return gcd(g, H).degree() == 0;
}

// A row of the module over k[t]: column 0 tracks the combination of (f, g, h),
// columns 1..3 the multipliers.
struct Row {
  std::array<UPoly, 4> c;
};

void row_sub(const FieldSpec& fs, Row& a, const UPoly& mult, const Row& b) {
  for (int j = 0; j < 4; ++j) {
    if (b.c[j].empty()) continue;
    UPoly prod = detail::umul(fs, mult, b.c[j]);
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = fs.neg(prod[i]);
    a.c[j] = detail::uadd(fs, a.c[j], prod);
  }
}

// Shifted degree over columns 1..3 and the rightmost column attaining it.
int sdeg(const Row& r, const int shift[3], int& pivot) {
  int best = -1;
  pivot = -1;
  for (int j = 1; j < 4; ++j) {
    if (r.c[j].empty()) continue;
    int d = detail::udeg(r.c[j]) + shift[j - 1];
    if (d >= best) {
      best = d;
      pivot = j;
    }
  }
  return best;
}

HomogPoly homogenize(const FieldPtr& fp, const UPoly& u, int degree) {
  if (u.empty()) return HomogPoly::zero(fp);
  if (detail::udeg(u) > degree) throw InternalError("syzygy component exceeds its degree bound");
  std::vector<Elem> c(static_cast<std::size_t>(degree) + 1, 0);
  std::copy(u.begin(), u.end(), c.begin());
  return {fp, std::move(c)};
}

// Reduced basis of syz(F, G, H), valid with or without common factors.
SyzygyGenerators reduce_module(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H) {
  const FieldSpec& fs = F.field();
  const int shift[3] = {F.degree(), G.degree(), H.degree()};
  std::array<Row, 3> rows;
  const HomogPoly* P[3] = {&F, &G, &H};
  for (int i = 0; i < 3; ++i) {
    rows[i].c[0] = P[i]->coeffs();
    detail::trim(rows[i].c[0]);
    rows[i].c[i + 1] = {1};
  }

  // Euclid on column 0 until a single row keeps a nonzero entry there; the
  // other two rows then span the syzygy module.
  for (;;) {
    int piv = -1;
    int live = 0;
    for (int i = 0; i < 3; ++i) {
      if (rows[i].c[0].empty()) continue;
      ++live;
      if (piv < 0 || rows[i].c[0].size() < rows[piv].c[0].size()) piv = i;
    }
    if (live <= 1) break;
    for (int i = 0; i < 3; ++i) {
      if (i == piv || rows[i].c[0].empty()) continue;
      UPoly quo, rem;
      detail::udivmod(fs, rows[i].c[0], rows[piv].c[0], quo, rem);
      row_sub(fs, rows[i], quo, rows[piv]);
    }
  }
  std::vector<Row> syz;
  for (auto& r : rows)
    if (r.c[0].empty()) syz.push_back(std::move(r));
  if (syz.size() != 2) throw InternalError("syzygy module reduction lost its rank");

  // Weak Popov form of the two remaining rows under the degree shift.
  for (;;) {
    int pa, pb;
    int da = sdeg(syz[0], shift, pa);
    int db = sdeg(syz[1], shift, pb);
    if (pa < 0 || pb < 0) throw InternalError("zero row in syzygy basis");
    if (pa != pb) break;
    Row& hi = da >= db ? syz[0] : syz[1];
    const Row& lo = da >= db ? syz[1] : syz[0];
    const UPoly& hp = hi.c[pa];
    const UPoly& lp = lo.c[pa];
    UPoly mult(static_cast<std::size_t>(std::abs(da - db)) + 1, 0);
    mult.back() = fs.div(hp.back(), lp.back());
    row_sub(fs, hi, mult, lo);
  }

  SyzygyGenerators out;
  const FieldPtr& fp = F.field_ptr();
  int degs[2];
  Triple gens[2];
  for (int k = 0; k < 2; ++k) {
    int piv;
    degs[k] = sdeg(syz[k], shift, piv);
    for (int j = 0; j < 3; ++j) gens[k][j] = homogenize(fp, syz[k].c[j + 1], degs[k] - shift[j]);
  }
  int lo = degs[0] <= degs[1] ? 0 : 1;
  out.s1 = gens[lo];
  out.s2 = gens[1 - lo];
  out.m = degs[lo];
  out.n = degs[1 - lo];
  return out;
}

}  // namespace

std::size_t graded_kernel_dim(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H, int d) {
  require_nonzero(F, G, H);
  if (d < 0) return 0;
  const FieldSpec& fs = F.field();
  const std::size_t width = static_cast<std::size_t>(d) + 1;
  Echelon ech(fs, width);
  std::size_t unknowns = 0;
  for (const HomogPoly* P : {&F, &G, &H}) {
    int e = d - P->degree();
    if (e < 0) continue;
    for (int k = 0; k <= e; ++k) {
      // Image of the unknown monomial x^{e-k} y^k: P shifted by k.
      std::vector<Elem> v(width, 0);
      std::copy(P->coeffs().begin(), P->coeffs().end(), v.begin() + k);
      ech.insert(std::move(v));
      ++unknowns;
    }
  }
  return unknowns - ech.rank();
}

int min_syzygy_degree(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H,
                      SyzygyEngine engine) {
  require_nonzero(F, G, H);
  if (engine == SyzygyEngine::Reduction) return reduce_module(F, G, H).m;
  int lo = 0;
  int hi = (F.degree() + G.degree() + H.degree()) / 2;
  if (graded_kernel_dim(F, G, H, hi) == 0) throw InternalError("no syzygy below half the degree sum");
  // Multiplying a syzygy by x keeps it nonzero, so kernel nontriviality is monotone in d.
  while (lo < hi) {
    int mid = lo + (hi - lo) / 2;
    if (graded_kernel_dim(F, G, H, mid) > 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

GapResult syzygy_gap(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H,
                     SyzygyEngine engine) {
  int m = min_syzygy_degree(F, G, H, engine);
  return {F.degree() + G.degree() + H.degree() - 2 * m, m};
}

SyzygyGenerators syzygy_generators(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H) {
  require_nonzero(F, G, H);
  if (!coprime3(F, G, H)) {
    throw Error("syzygy generators need gcd(F, G, H) = 1");
  }
  SyzygyGenerators s = reduce_module(F, G, H);
  if (s.m + s.n != F.degree() + G.degree() + H.degree()) {
    throw InternalError("generator degrees do not sum to the degree sum");
  }
  return s;
}

std::uint64_t colength(const std::vector<HomogPoly>& gens) {
  if (gens.empty()) throw Error("colength of the zero ideal is infinite");
  for (const auto& g : gens)
    if (g.is_zero()) throw Error("colength generators must be nonzero");
  if (gcd(gens).degree() > 0) throw Error("infinite colength: generators share a common factor");
  const FieldSpec& fs = gens.front().field();
  std::uint64_t total = 0;
  std::vector<std::vector<Elem>> prev;  // basis of the previous graded piece
  for (int d = 0;; ++d) {
    const std::size_t width = static_cast<std::size_t>(d) + 1;
    Echelon ech(fs, width);
    for (const auto& row : prev) {
      std::vector<Elem> vx(width, 0), vy(width, 0);
      std::copy(row.begin(), row.end(), vx.begin());
      std::copy(row.begin(), row.end(), vy.begin() + 1);
      ech.insert(std::move(vx));
      ech.insert(std::move(vy));
    }
    for (const auto& g : gens) {
      if (g.degree() == d) ech.insert(g.coeffs());
    }
    total += width - ech.rank();
    // Once the ideal contains every form of degree d it contains every form of
    // higher degree, so the quotient vanishes from here on.
    if (ech.rank() == width) break;
    prev = ech.rows();
  }
  return total;
}

long long q_form(long long d1, long long d2, long long d3) {
  return 2 * (d1 * d2 + d1 * d3 + d2 * d3) - d1 * d1 - d2 * d2 - d3 * d3;
}

namespace {

// p / l for a linear form l dividing p; zero stays zero.
HomogPoly divide_linear(const HomogPoly& p, Elem a, Elem b) {
  if (p.is_zero()) return p;
  const FieldSpec& fs = p.field();
  const auto& c = p.coeffs();
  const std::size_t k = c.size() - 1;
  if (k == 0) throw InternalError("constant is not divisible by a linear form");
  std::vector<Elem> q(k, 0);
  if (a != 0) {
    Elem ia = fs.inv(a);
    Elem prev = 0;
    for (std::size_t i = 0; i < k; ++i) {
      q[i] = fs.mul(fs.sub(c[i], fs.mul(b, prev)), ia);
      prev = q[i];
    }
    if (fs.mul(b, q[k - 1]) != c[k]) throw InternalError("inexact division by a linear form");
  } else {
    Elem ib = fs.inv(b);
    for (std::size_t i = k; i >= 1; --i) q[i - 1] = fs.mul(c[i], ib);
    if (c[0] != 0) throw InternalError("inexact division by a linear form");
  }
  return {p.field_ptr(), std::move(q)};
}

HomogPoly times_linear(const HomogPoly& p, Elem a, Elem b) {
  if (p.is_zero()) return p;
  const FieldSpec& fs = p.field();
  const auto& c = p.coeffs();
  std::vector<Elem> r(c.size() + 1, 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    r[i] = fs.fma(a, c[i], r[i]);
    r[i + 1] = fs.mul(b, c[i]);
  }
  return {p.field_ptr(), std::move(r)};
}

Elem eval_or_zero(const HomogPoly& p, Elem u, Elem v) { return p.is_zero() ? 0 : p.eval(u, v); }

}  // namespace

SyzygyWalker::SyzygyWalker(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H, bool full)
    : field_(F.field_ptr()), full_(full) {
  SyzygyGenerators s = syzygy_generators(F, G, H);
  s1_ = std::move(s.s1);
  s2_ = std::move(s.s2);
  m_ = s.m;
  n_ = s.n;
  sum_ = F.degree() + G.degree() + H.degree();
  if (!full_) {
    for (int j = 0; j < 2; ++j) {
      s1_[j] = HomogPoly::zero(field_);
      s2_[j] = HomogPoly::zero(field_);
    }
  }
}

void SyzygyWalker::multiply_third(const HomogPoly& l) {
  if (l.degree() != 1) throw Error("multiply_third expects a linear form");
  const FieldSpec& fs = *field_;
  const Elem a = l.coeff(0), b = l.coeff(1);
  const auto [u, v] = root_of(l);
  const Elem g1 = eval_or_zero(s1_[2], u, v);
  const Elem g2 = eval_or_zero(s2_[2], u, v);
  if (g1 == 0 && g2 == 0) throw InternalError("linear factor divides both third components");
  ++sum_;
  if (g1 == 0) {
    // s1 survives with gamma1 / l; s2 must be multiplied by l.
    s1_[2] = divide_linear(s1_[2], a, b);
    if (full_) {
      s2_[0] = times_linear(s2_[0], a, b);
      s2_[1] = times_linear(s2_[1], a, b);
    }
    ++n_;
  } else {
    // s2 + c*s1 with c = kappa * w^(n-m) chosen so its gamma vanishes at the root.
    const int k = n_ - m_;
    const bool use_x = u != 0;
    const Elem w = use_x ? u : v;
    const Elem kappa = fs.neg(fs.div(g2, fs.mul(g1, fs.pow(w, static_cast<std::uint64_t>(k)))));
    auto c_times = [&](const HomogPoly& p) {
      return p.is_zero() ? p : (use_x ? p.shift(k, 0) : p.shift(0, k)).scale(kappa);
    };
    s2_[2] = divide_linear(s2_[2] + c_times(s1_[2]), a, b);
    if (full_) {
      s2_[0] = s2_[0] + c_times(s1_[0]);
      s2_[1] = s2_[1] + c_times(s1_[1]);
      s1_[0] = times_linear(s1_[0], a, b);
      s1_[1] = times_linear(s1_[1], a, b);
    }
    ++m_;
    if (m_ > n_) {
      std::swap(s1_, s2_);
      std::swap(m_, n_);
    }
  }
}

SyzygyGenerators SyzygyWalker::generators() const {
  if (!full_) throw Error("walker was built without full generators");
  return {s1_, s2_, m_, n_};
}

}  // namespace syzgap
