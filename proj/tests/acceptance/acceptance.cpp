// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "syzgap/han.hpp"
#include "syzgap/hilbert_kunz.hpp"
#include "syzgap/io.hpp"
#include "syzgap/operators.hpp"
#include "syzgap/syzygy.hpp"

using namespace syzgap;
using namespace syzgap::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

RationalPoint pt(std::vector<std::int64_t> a, std::uint64_t q) { return {std::move(a), q}; }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// Grids from criteria 3-8, rechecked for parity and Lipschitz in criterion 12.
struct Recorded {
  Cell cell;
  FractalGrid grid;
};
std::vector<Recorded> recorded;

FractalGrid keep(const Cell& c, FractalGrid g) {
  recorded.push_back({c, g});
  return g;
}

Cell example_cell() { return xy_cell(example_forms(f9())); }

FractalGrid full(const Cell& c, std::uint64_t q) { return grid_eval(c, q, Slice::identity(c.n())); }

// Strict local maximum among the 2n axis neighbors at level u.q.
bool neighbors_smaller(const Cell& c, const RationalPoint& u) {
  std::vector<std::int64_t> lo, hi;
  for (auto a : u.a) {
    lo.push_back(std::max<std::int64_t>(0, a - 1));
    hi.push_back(std::min<std::int64_t>(static_cast<std::int64_t>(u.q), a + 1));
  }
  auto box = box_eval(c, u.q, lo, hi);
  auto at = [&](const std::vector<std::int64_t>& a) {
    std::size_t f = 0;
    for (std::size_t i = 0; i < a.size(); ++i) f = f * static_cast<std::size_t>(hi[i] - lo[i] + 1) + static_cast<std::size_t>(a[i] - lo[i]);
    return box[f];
  };
  const std::int64_t mid = at(u.a);
  for (std::size_t i = 0; i < u.n(); ++i)
    for (int d : {-1, 1}) {
      auto a = u.a;
      a[i] += d;
      if (a[i] < lo[i] || a[i] > hi[i]) continue;
      if (at(a) >= mid) return false;
    }
  return true;
}

Outcome criterion1() {
  Outcome o;
  std::mt19937_64 rng(1001);
  std::uniform_int_distribution<int> deg(0, 6);
  int done = 0, bad = 0;
  for (int trial = 0; done < 240; ++trial) {
    auto f = trial % 2 ? f3() : f9();
    HomogPoly F = random_poly(f, deg(rng), rng), G = random_poly(f, deg(rng), rng), H = random_poly(f, deg(rng), rng);
    if (gcd(std::vector<HomogPoly>{F, G, H}).degree() > 0) continue;
    ++done;
    auto g = syzygy_gap(F, G, H);
    long long lhs = 4 * static_cast<long long>(colength({F, G, H}));
    long long rhs = q_form(F.degree(), G.degree(), H.degree()) + static_cast<long long>(g.delta) * g.delta;
    if (lhs != rhs) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " triples violate 4 colength = Q + delta^2");
  o.detail = std::to_string(done) + " triples, " + std::to_string(bad) + " mismatches" + (o.detail.empty() ? "" : "; " + o.detail);
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto a = han_cross_check(9, 3);
  auto b = han_cross_check(8, 2);
  o.require(a.checked == 1000 && a.passed(), "(3,9): " + std::to_string(a.violations.size()) + " mismatches");
  o.require(b.checked == 729 && b.passed(), "(2,8): " + std::to_string(b.violations.size()) + " mismatches");
  if (o.ok) o.detail = "1000 + 729 points, 0 mismatches";
  return o;
}

Outcome criterion3() {
  Outcome o;
  Cell c = example_cell();
  auto diag = keep(c, grid_eval(c, 27, Slice::parse("t1,t1,t1,t1", 4)));
  for (int a = 14; a <= 27; ++a)
    o.require(Rational(diag.at({a}), 27) == Rational(4 * a, 27) - 2, "Delta_1(" + std::to_string(a) + "/27)");

  auto g9 = keep(c, full(c, 9));
  bool found9 = false;
  for (const auto& [u, v] : local_maxima(g9))
    if (u == pt({2, 2, 2, 2}, 9)) found9 = v.value() == Rational(2, 9);
  o.require(found9, "(2,2,2,2)/9 not a local max with value 2/9");

  auto g27 = keep(c, full(c, 27));
  bool found27 = false;
  for (const auto& [u, v] : local_maxima(g27))
    if (u == pt({10, 10, 2, 2}, 27)) found27 = v.value() == Rational(2, 27);
  o.require(found27, "(10,10,2,2)/27 not a local max with value 2/27");

  auto t0 = Clock::now();
  auto v81 = delta_at(c, pt({2, 2, 16, 16}, 81));
  double single = seconds_since(t0);
  o.require(v81.value() == Rational(2, 81), "value at (2,2,16,16)/81 is " + v81.str());
  o.require(single < 60, "single q=81 evaluation took " + std::to_string(single) + " s");
  o.require(neighbors_smaller(c, pt({2, 2, 16, 16}, 81)), "(2,2,16,16)/81 not a local max");
  if (o.ok) {
    std::ostringstream s;
    s << "Delta_1 = 4a/27 - 2 for a = 14..27; maxima 2/9, 2/27, 2/81; q=81 point in " << single << " s";
    o.detail = s.str();
  }
  return o;
}

std::vector<Cell> random_cells_n3() {
  std::mt19937_64 rng(4004);
  std::vector<Cell> cells;
  for (int k = 0; k < 20; ++k) cells.push_back(random_cell(k % 2 ? f3() : f9(), 3, 3, rng));
  return cells;
}

Outcome criterion4(const std::vector<Cell>& cells) {
  Outcome o;
  std::size_t checked = 0;
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (std::uint64_t q : {9, 27}) {
      auto g = keep(cells[k], full(cells[k], q));
      auto r = verify_theorem_A(cells[k], g);
      checked += r.checked;
      o.require(r.passed(), "cell " + std::to_string(k) + " q=" + std::to_string(q) + ": " +
                                std::to_string(r.violations.size()) + " violations");
    }
  if (o.ok) o.detail = std::to_string(cells.size()) + " cells at q=9,27, " + std::to_string(checked) + " points, 0 violations";
  return o;
}

Outcome criterion5() {
  Outcome o;
  Cell c = example_cell();
  std::size_t checked = 0;
  for (const auto& u : {pt({2, 2, 2, 2}, 9), pt({10, 10, 2, 2}, 27), pt({2, 2, 16, 16}, 81)}) {
    auto r = verify_theorem_B(c, u, 3 * u.q);
    checked += r.checked;
    o.require(r.passed(), u.str() + ": " + std::to_string(r.violations.size()) + " violations");
  }
  if (o.ok) o.detail = "3 maxima at q' = 3q, " + std::to_string(checked) + " ball points, 0 violations";
  return o;
}

Outcome criterion6(const std::vector<Cell>& cells) {
  Outcome o;
  Cell c = example_cell();
  for (std::uint64_t q : {9, 27}) {
    auto r = verify_theorem_C(c, full(c, q));
    o.require(r.passed(), "example cell q=" + std::to_string(q));
  }
  for (std::size_t k = 0; k < cells.size(); ++k)
    for (std::uint64_t q : {9, 27})
      o.require(verify_theorem_C(cells[k], full(cells[k], q)).passed(),
                "cell " + std::to_string(k) + " q=" + std::to_string(q));
  for (const auto& u : {pt({2, 2, 2, 2}, 9), pt({10, 10, 2, 2}, 27), pt({2, 2, 16, 16}, 81)}) {
    auto v = delta_at(c, u).value();
    o.require(v == Rational(c.n() - 2, static_cast<std::int64_t>(u.q)), u.str() + " does not attain (n-2)/q");
  }
  if (o.ok) o.detail = "example + 20 cells at q=9,27; (n-2)/q attained at the 3 maxima";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::mt19937_64 rng(7007);
  int linear = 0;
  for (int k = 0; k < 10; ++k) {
    Cell c = random_cell(k % 2 ? f3() : f9(), 3, 3, rng);
    auto g9 = keep(c, full(c, 9));
    auto g27 = keep(c, full(c, 27));
    const std::string tag = "cell " + std::to_string(k) + ": ";

    Cell r = reflect(c, 0);
    auto gr = keep(r, full(r, 9));
    bool mirror = true;
    for (std::size_t f = 0; f < gr.values.size(); ++f) {
      auto idx = gr.index(f);
      idx[0] = 9 - idx[0];
      mirror = mirror && gr.values[f] == g9.at(idx);
    }
    o.require(mirror, tag + "R1 grid is not the mirror image");

    for (int b = 0; b < 27; ++b) {
      std::vector<int> bv = {b / 9, (b / 3) % 3, b % 3};
      Cell t = magnify(c, 3, bv);
      auto gt = full(t, 9);
      bool same = true;
      for (std::size_t f = 0; f < gt.values.size(); ++f) {
        auto idx = gt.index(f);
        for (std::size_t j = 0; j < 3; ++j) idx[j] += 9 * bv[j];
        same = same && gt.values[f] == g27.at(idx);
      }
      o.require(same, tag + "T_3 magnification mismatch");
    }

    o.require(full(colon_reduce(c), 9).values == g9.values, tag + "colon_reduce changed the grid");
    auto cc = canonicalize(c);
    if (cc.linear) ++linear;
    o.require(full(cc.cell, 9).values == g9.values, tag + "canonicalize changed the grid");
  }
  if (o.ok)
    o.detail = "10 cells: R1, T_{3|b} for 27 b, colon_reduce, canonicalize (" + std::to_string(linear) + " linear) exact";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto f = f9();
  Cell c = example_cell();
  auto gc = keep(c, full(c, 9));
  Cell t = magnify(c, 3, {2, 2, 0, 0});
  o.require(keep(t, full(t, 9)).values == gc.values, "T_{3|(2,2,0,0)} does not fix <x,y>");
  auto forms = example_forms(f);
  for (int n = 3; n <= 4; ++n) {
    std::vector<HomogPoly> fs(forms.begin(), forms.begin() + n);
    Cell r = xy_cell(fs);
    for (int i = 1; i < n; ++i) r = reflect(r, i);
    Cell target = Cell::make(P("x", f), P("y", f).pow(static_cast<unsigned>(n - 2)), HomogPoly::constant(f, 1), fs);
    o.require(keep(r, full(r, 9)).values == keep(target, full(target, 9)).values,
              "R2..Rn<x,y> differs from <x,y^(n-2)> for n=" + std::to_string(n));
  }
  if (o.ok) o.detail = "fixed point and R2..Rn<x,y> = <x,y^(n-2)> for n=3,4 at q=9";
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(9009);
  std::size_t points = 0;
  for (int k = 0; k < 6; ++k) {
    Cell c = random_cell(k % 2 ? f3() : f9(), 3, 3, rng);
    std::vector<RationalPoint> pts;
    for (int j = 0; j < 10; ++j) {
      std::uint64_t q = j % 2 ? 9 : 3;
      std::uniform_int_distribution<std::int64_t> a(0, static_cast<std::int64_t>(q));
      pts.push_back(pt({a(rng), a(rng), a(rng)}, q));
    }
    points += pts.size();
    auto r = verify_hk_identities(c, pts);
    o.require(r.passed(), "cell " + std::to_string(k) + ": " + std::to_string(r.violations.size()) + " identity failures");
  }
  int samples = 0, bad = 0;
  for (int k = 0; k < 120; ++k) {
    Cell c = random_cell(k % 2 ? f3() : f9(), k % 3 == 0 ? 4 : 3, 3, rng);
    std::uint64_t q = k % 2 ? 9 : 3;
    std::uniform_int_distribution<std::int64_t> a(0, static_cast<std::int64_t>(q));
    std::uniform_int_distribution<int> ax(0, c.n() - 1);
    RationalPoint t{{}, q};
    for (int i = 0; i < c.n(); ++i) t.a.push_back(a(rng));
    int axis = ax(rng);
    auto& ai = t.a[static_cast<std::size_t>(axis)];
    std::uniform_int_distribution<std::int64_t> prime(1, static_cast<std::int64_t>(q) - 1);
    do ai = prime(rng);
    while (ai % 3 == 0);
    ++samples;
    if (!newbound_check(c, t, axis).passed()) ++bad;
  }
  o.require(bad == 0, std::to_string(bad) + " newbound violations");
  if (o.ok)
    o.detail = std::to_string(points) + " points on 6 cells exact; " + std::to_string(samples) + " newbound samples, 0 violations";
  return o;
}

Outcome criterion10() {
  Outcome o;
  auto f = f3();
  SurfaceInstance s;
  s.U = P("x", f);
  s.V = P("y", f);
  s.forms = {P("x", f), P("y", f), P("x+y", f)};
  s.c = {1, 1, 1};
  s.m = 1;
  s.Hlin = P("x+2*y", f).pow(2);
  auto mu = surface_mu(s);
  o.require(mu.has_value(), "delta* not computable at c/m");
  if (!mu) return o;
  auto gap = [&](std::uint64_t q) {
    return boost::abs(Rational(static_cast<std::int64_t>(surface_colength(s, q)), static_cast<std::int64_t>(q * q)) - *mu);
  };
  Rational e3 = gap(3), e9 = gap(9);
  o.require(e9 <= e3, "gap grew from " + rational_str(e3) + " to " + rational_str(e9));
  if (o.ok) o.detail = "mu = " + rational_str(*mu) + ", |colength/q^2 - mu| = " + rational_str(e3) + " (q=3), " + rational_str(e9) + " (q=9)";
  return o;
}

Outcome criterion11() {
  Outcome o;
  Cell c = example_cell();
  auto slice = Slice::parse("t1,t1,t2,t2", 4);
  auto t0 = Clock::now();
  auto g1 = grid_eval(c, 27, slice, 1);
  double secs = seconds_since(t0);
  auto g4 = grid_eval(c, 27, slice, 4);
  o.require(g1.values.size() == 784, "slice has " + std::to_string(g1.values.size()) + " points");
  o.require(secs < 60, "single-threaded slice took " + std::to_string(secs) + " s");
  std::ostringstream a, b, pa, pb;
  write_pgm(a, g1);
  write_pgm(b, g4);
  write_pgm(pa, g1, true);
  write_pgm(pb, g4, true);
  o.require(a.str() == b.str() && pa.str() == pb.str(), "PGM differs between 1 and 4 workers");
  if (o.ok) {
    std::ostringstream s;
    s << "784 points in " << secs << " s single-threaded; P2/P5 identical for 1 and 4 workers";
    o.detail = s.str();
  }
  return o;
}

Outcome criterion12() {
  Outcome o;
  std::size_t points = 0;
  for (const auto& r : recorded) {
    points += r.grid.values.size();
    o.require(check_parity(r.cell, r.grid).passed(), "parity fails on a q=" + std::to_string(r.grid.q) + " grid");
    o.require(check_lipschitz(r.grid).passed(), "Lipschitz fails on a q=" + std::to_string(r.grid.q) + " grid");
  }
  if (o.ok) o.detail = std::to_string(recorded.size()) + " grids, " + std::to_string(points) + " points";
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int n, const char* title, double limit, const std::function<Outcome()>& run) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = seconds_since(t0);
    if (limit > 0 && secs >= limit) {
      o.ok = false;
      o.detail += "; runtime " + std::to_string(secs) + " s over the " + std::to_string(static_cast<int>(limit)) + " s limit";
    }
    if (!o.ok) ++failed;
    std::printf("criterion %2d %s: %s (%.1f s) %s\n", n, o.ok ? "PASS" : "FAIL", title, secs, o.detail.c_str());
    std::fflush(stdout);
  };
  const auto cells = random_cells_n3();
  report(1, "4 colength = Q + delta^2", 30, criterion1);
  report(2, "Han oracle equivalence", 60, criterion2);
  report(3, "example values and maxima", 0, criterion3);
  report(4, "theorem A verifier", 300, [&] { return criterion4(cells); });
  report(5, "theorem B verifier", 0, criterion5);
  report(6, "theorem C verifier", 0, [&] { return criterion6(cells); });
  report(7, "operator identities", 0, criterion7);
  report(8, "fixed points and reflections", 0, criterion8);
  report(9, "Hilbert-Kunz identities and newbound", 0, criterion9);
  report(10, "surface colength trend", 300, criterion10);
  report(11, "performance and deterministic PGM", 0, criterion11);
  report(12, "parity and Lipschitz suites", 0, criterion12);
  std::printf("%d of 12 criteria failed\n", failed);
  return failed ? 1 : 0;
}
