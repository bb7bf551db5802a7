#include "syzgap/operators.hpp"

#include <map>
#include <optional>
#include <utility>

#include "syzgap/linalg.hpp"
#include "syzgap/syzygy.hpp"

namespace syzgap {

namespace {

bool vanishes_on_forms(const HomogPoly& f, const Cell& c) {
  for (const auto& l : c.forms) {
    auto [u, v] = root_of(l);
    if (f.eval(u, v) == 0) return true;
  }
  return false;
}

std::optional<HomogPoly> free_linear(const Cell& c) {
  const FieldPtr& f = c.field();
  HomogPoly y = HomogPoly::linear(f, 0, 1);
  if (!vanishes_on_forms(y, c)) return y;
  for (Elem lam = 0; lam < f->order(); ++lam) {
    HomogPoly l = HomogPoly::linear(f, 1, lam);
    if (!vanishes_on_forms(l, c)) return l;
  }
  return std::nullopt;
}

// Monic form x^d + ... with no root on the projective line; d is 2 or 3.
HomogPoly rootless(const FieldPtr& f, int d) {
  const Elem q = f->order();
  std::vector<Elem> coeffs(static_cast<std::size_t>(d) + 1, 0);
  coeffs[0] = 1;
  auto has_root = [&](const HomogPoly& h) {
    for (Elem lam = 0; lam < q; ++lam)
      if (h.eval(lam, 1) == 0) return true;
    return false;
  };
  // Odometer over the lower coefficients; the constant term must be nonzero.
  while (true) {
    std::size_t k = coeffs.size() - 1;
    while (k > 0) {
      if (++coeffs[k] < q) break;
      coeffs[k] = 0;
      --k;
    }
    if (k == 0) throw InternalError("no irreducible form of degree " + std::to_string(d));
    HomogPoly h(f, coeffs);
    if (coeffs.back() != 0 && !has_root(h)) return h;
  }
}

std::pair<HomogPoly, HomogPoly> strip_common(const HomogPoly& a, const HomogPoly& b) {
  HomogPoly g = gcd(a, b);
  if (g.degree() <= 0) return {a, b};
  return {divide_exact(a, g), divide_exact(b, g)};
}

// Linear form nonzero at (u : v).
HomogPoly off_point(const FieldPtr& f, Elem u, Elem /*v*/) {
  return u != 0 ? HomogPoly::linear(f, 1, 0) : HomogPoly::linear(f, 0, 1);
}

HomogPoly one(const FieldPtr& f) { return HomogPoly::constant(f, 1); }

// Writes f = A*u + B*l with deg A = deg f - deg u; requires deg f >= deg u + deg l - 1.
HomogPoly quotient_mod(const HomogPoly& f, const HomogPoly& u, const HomogPoly& l) {
  const FieldSpec& fs = f.field();
  const int d = f.degree(), du = u.degree(), dl = l.degree();
  const int da = d - du, db = d - dl;
  const std::size_t na = static_cast<std::size_t>(da + 1);
  const std::size_t nb = db >= 0 ? static_cast<std::size_t>(db + 1) : 0;
  Matrix m(static_cast<std::size_t>(d + 1), na + nb);
  for (std::size_t k = 0; k < na; ++k)
    for (int j = 0; j <= du; ++j) m.at(k + static_cast<std::size_t>(j), k) = u.coeff(j);
  for (std::size_t k = 0; k < nb; ++k)
    for (int j = 0; j <= dl; ++j) m.at(k + static_cast<std::size_t>(j), na + k) = l.coeff(j);
  auto sol = solve(fs, m, f.coeffs());
  if (!sol) throw InternalError("form of degree " + std::to_string(d) + " is not in the ideal (u, l)");
  return HomogPoly(f.field_ptr(), std::vector<Elem>(sol->begin(), sol->begin() + static_cast<long>(na)));
}

}  // namespace

HomogPoly aux_form(const Cell& c, int degree) {
  const FieldPtr& f = c.field();
  if (degree < 0) throw Error("negative auxiliary degree");
  if (degree == 0) return one(f);
  if (auto l = free_linear(c)) return l->pow(static_cast<unsigned>(degree));
  if (degree == 1) throw Error("every linear form vanishes at a root of the cell forms; no auxiliary linear form");
  HomogPoly quad = rootless(f, 2);
  if (degree % 2 == 0) return quad.pow(static_cast<unsigned>(degree / 2));
  return quad.pow(static_cast<unsigned>((degree - 3) / 2)) * rootless(f, 3);
}

namespace {

// Colon reduction plus whether delta_C = delta + sum t (a Koszul-type syzygy of least degree).
std::pair<Cell, bool> colon_reduce_impl(const Cell& c) {
  validate(c);
  const FieldPtr& fp = c.field();
  SyzygyGenerators s = syzygy_generators(c.F, c.G, c.H);
  const HomogPoly& U = s.s1[2];
  const HomogPoly& V = s.s2[2];
  const int delta = c.F.degree() + c.G.degree() + c.H.degree() - 2 * s.m;
  if (U.is_zero()) return {Cell::make(aux_form(c, delta + c.n()), c.ell(), one(fp), c.forms), true};
  // H lies in (F, G); delta_C = |delta - sum t|.
  if (V.is_zero()) return {Cell::make(HomogPoly::monomial(fp, delta, 0), one(fp), one(fp), c.forms), false};
  return {Cell::make(U, V, one(fp), c.forms), false};
}

}  // namespace

Cell colon_reduce(const Cell& c) { return colon_reduce_impl(c).first; }

Cell reflect(const Cell& c, int i) {
  if (i < 0 || i >= c.n()) throw Error("reflection index " + std::to_string(i + 1) + " out of range");
  Cell r = colon_reduce(c);
  const FieldPtr& fp = c.field();
  const FieldSpec& fs = *fp;
  const int n = c.n();
  const HomogPoly& li = c.forms[static_cast<std::size_t>(i)];
  const auto [u, v] = root_of(li);

  auto [F, G] = strip_common(r.F, r.G);
  int low = std::min(F.degree(), G.degree());
  if (low < n) {
    HomogPoly P = aux_form(c, n - low);
    F = F * P;
    G = G * P;
  }
  // Arrange l_i | F.
  if (F.eval(u, v) != 0) {
    if (G.eval(u, v) == 0) {
      std::swap(F, G);
    } else {
      if (F.degree() < G.degree()) std::swap(F, G);
      const int k = F.degree() - G.degree();
      HomogPoly w = off_point(fp, u, v).pow(static_cast<unsigned>(k));
      Elem coef = fs.neg(fs.div(F.eval(u, v), fs.mul(w.eval(u, v), G.eval(u, v))));
      HomogPoly next = F + (w * G).scale(coef);
      // F was a multiple of G (both raised from constants); a multiple of l keeps it nonzero.
      if (next.is_zero()) next = off_point(fp, u, v).pow(static_cast<unsigned>(F.degree() - n)) * c.ell();
      F = next;
    }
  }
  HomogPoly Fstar = divide_exact(F, li);
  if (Fstar.eval(u, v) == 0) {
    HomogPoly w = off_point(fp, u, v).pow(static_cast<unsigned>(F.degree() - n));
    F = F + w * c.ell();
    Fstar = divide_exact(F, li);
  }
  // Interpolate G* of degree deg G - 1 with l_i G* = G at every other root.
  const int dg = G.degree() - 1;
  std::vector<std::pair<Elem, Elem>> roots;
  for (int j = 0; j < n; ++j)
    if (j != i) roots.push_back(root_of(c.forms[static_cast<std::size_t>(j)]));
  Matrix m(roots.size(), static_cast<std::size_t>(dg + 1));
  std::vector<Elem> rhs;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    auto [ru, rv] = roots[r];
    Elem li_val = li.eval(ru, rv);
    for (int k = 0; k <= dg; ++k)
      m.at(r, static_cast<std::size_t>(k)) =
          fs.mul(li_val, fs.mul(fs.pow(ru, static_cast<std::uint64_t>(dg - k)), fs.pow(rv, static_cast<std::uint64_t>(k))));
    rhs.push_back(G.eval(ru, rv));
  }
  auto sol = solve(fs, m, rhs);
  if (!sol) throw InternalError("reflection interpolation has no solution");
  HomogPoly Gstar(fp, *sol);
  if (Gstar.is_zero()) {
    HomogPoly rest = divide_exact(c.ell(), li);
    Gstar = rest * off_point(fp, u, v).pow(static_cast<unsigned>(dg - (n - 1)));
  }
  return Cell::make(Fstar, li * Gstar, one(fp), c.forms);
}

Cell magnify(const Cell& c, std::uint64_t q, const std::vector<int>& b) {
  validate(c);
  const std::uint64_t p = c.field()->characteristic();
  std::uint64_t t = q;
  while (t > 1 && t % p == 0) t /= p;
  if (q < 1 || t != 1) throw Error("magnification level " + std::to_string(q) + " is not a power of " + std::to_string(p));
  if (static_cast<int>(b.size()) != c.n()) throw Error("shift vector length differs from the number of forms");
  for (int v : b)
    if (v < 0 || static_cast<std::uint64_t>(v) >= q)
      throw Error("shift entry " + std::to_string(v) + " outside 0.." + std::to_string(q - 1));
  return Cell::make(c.F.frobenius_power(q), c.G.frobenius_power(q), c.H.frobenius_power(q) * linear_product(c.forms, b),
                    c.forms);
}

CanonicalCell canonicalize(const Cell& c) {
  validate(c);
  const FieldPtr& fp = c.field();
  const int n = c.n();
  HomogPoly F = c.F, G = c.G;
  if (!c.H.is_constant()) {
    auto [r, linear] = colon_reduce_impl(c);
    if (linear) return {r, true};
    F = r.F;
    G = r.G;
  }
  const HomogPoly ell = c.ell();
  auto finish = [&](bool linear) {
    return CanonicalCell{Cell::make(F.monic(), G.monic(), one(fp), c.forms), linear};
  };
  // Each pass lowers deg F + deg G, so the loop ends.
  while (true) {
    std::tie(F, G) = strip_common(F, G);
    if (F.degree() > G.degree()) std::swap(F, G);
    if (G.degree() - F.degree() >= n) return finish(true);
    if (F.degree() <= n) return finish(false);
    // deg F > n puts F and G in (U, l) for any U of degree <= 2 prime to l.
    auto lin = free_linear(c);
    HomogPoly U = lin ? *lin : aux_form(c, 2);
    HomogPoly A = quotient_mod(F, U, ell);
    if (A.is_zero()) return finish(true);  // l | F, so delta = deg G - deg F + sum t
    HomogPoly B = quotient_mod(G, U, ell);
    if (B.is_zero()) {
      G = G + aux_form(c, G.degree() - F.degree()) * F;
      continue;
    }
    F = A;
    G = B;
  }
}

std::vector<std::int64_t> fingerprint(const Cell& c, std::uint64_t q) {
  if (q == 0) {
    const std::uint64_t p = c.field()->characteristic();
    q = p * p;
  }
  return grid_eval(c, q, Slice::identity(c.n())).values;
}

bool delta_equivalent(const Cell& a, const Cell& b) {
  if (a.n() != b.n()) return false;
  return fingerprint(a) == fingerprint(b);
}

OrbitGraph orbit_explore(const Cell& c, int depth, const std::vector<std::vector<int>>& bs_in) {
  if (depth < 1) throw Error("orbit depth must be at least 1");
  const std::uint64_t p = c.field()->characteristic();
  const std::uint64_t q2 = p * p, q3 = q2 * p;
  const int n = c.n();
  std::vector<std::vector<int>> bs = bs_in;
  if (bs.empty()) {
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    while (true) {
      bs.push_back(b);
      std::size_t k = 0;
      while (k < b.size() && ++b[k] == static_cast<int>(p)) b[k++] = 0;
      if (k == b.size()) break;
    }
  }

  OrbitGraph g;
  std::map<std::vector<std::int64_t>, int> ids;
  int linear_id = -1;
  auto add_node = [&](const Cell& rep, bool linear, std::vector<std::int64_t> fp, int d) {
    FractalGrid grid{q2, Slice::identity(n), fp};
    linear = linear || grid_is_corner_linear(grid);
    if (linear && linear_id >= 0) return std::make_pair(linear_id, false);
    if (!linear) {
      auto it = ids.find(fp);
      if (it != ids.end()) return std::make_pair(it->second, false);
    }
    int id = static_cast<int>(g.nodes.size());
    g.nodes.push_back({id, d, linear, rep, fp});
    if (linear)
      linear_id = id;
    else
      ids.emplace(std::move(fp), id);
    return std::make_pair(id, true);
  };

  CanonicalCell root = canonicalize(c);
  add_node(root.cell, root.linear, fingerprint(root.cell, q2), 0);
  std::size_t next = 0;
  while (next < g.nodes.size()) {
    if (g.nodes[next].depth >= depth) break;
    if (g.nodes[next].linear) {
      ++next;
      continue;
    }
    const Cell rep = g.nodes[next].rep;
    const int from = g.nodes[next].id;
    const int d = g.nodes[next].depth;
    FractalGrid fine = grid_eval(rep, q3, Slice::identity(n));
    const std::size_t side2 = static_cast<std::size_t>(q2) + 1;
    std::size_t count = 1;
    for (int k = 0; k < n; ++k) count *= side2;
    for (const auto& b : bs) {
      // Child value at a/p^2 is the parent value at (a + b p^2)/p^3.
      std::vector<std::int64_t> fp(count);
      std::vector<int> idx(static_cast<std::size_t>(n), 0);
      for (std::size_t f = 0; f < count; ++f) {
        std::vector<int> fi(idx);
        for (std::size_t k = 0; k < fi.size(); ++k) fi[k] += b[k] * static_cast<int>(q2);
        fp[f] = fine.at(fi);
        for (std::size_t k = idx.size(); k-- > 0;) {
          if (++idx[k] < static_cast<int>(side2)) break;
          idx[k] = 0;
        }
      }
      auto known = ids.find(fp);
      int to;
      if (known != ids.end()) {
        to = known->second;
      } else if (linear_id >= 0 && grid_is_corner_linear({q2, Slice::identity(n), fp})) {
        to = linear_id;
      } else {
        CanonicalCell child = canonicalize(magnify(rep, p, b));
        to = add_node(child.cell, child.linear, std::move(fp), d + 1).first;
      }
      g.edges.push_back({from, to, b});
    }
    ++next;
  }
  g.closed = true;
  for (std::size_t k = next; k < g.nodes.size(); ++k)
    if (!g.nodes[k].linear) g.closed = false;
  return g;
}

}  // namespace syzgap
