#include "syzgap/fractal.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <deque>
#include <exception>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>

#include "syzgap/syzygy.hpp"

namespace syzgap {

namespace {

bool is_power_of(std::uint64_t q, std::uint64_t p) {
  if (q == 0) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

void check_level(const FieldSpec& f, std::uint64_t q) {
  if (!is_power_of(q, f.characteristic()))
    throw Error("level " + std::to_string(q) + " is not a power of the characteristic " +
                std::to_string(f.characteristic()));
}

// Largest k with l^k | f, for a linear form l and nonzero f; also returns f / l^k.
int strip_linear(HomogPoly& f, const HomogPoly& l) {
  auto [u, v] = root_of(l);
  int k = 0;
  while (f.degree() > 0 && f.eval(u, v) == 0) {
    f = divide_exact(f, l);
    ++k;
  }
  return k;
}

std::int64_t parse_int(std::string_view s, std::string_view what) {
  std::int64_t v = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw Error("malformed " + std::string(what) + " \"" + std::string(s) + "\"");
  return v;
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(',', start);
    auto piece = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(piece);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return {parse_int(s, "number"), 1};
  std::int64_t den = parse_int(s.substr(slash + 1), "denominator");
  if (den <= 0) throw Error("nonpositive denominator in \"" + std::string(s) + "\"");
  return {parse_int(s.substr(0, slash), "numerator"), den};
}

std::string rational_str(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// One grid axis: the coordinates that advance together, and the step count.
struct AxisPlan {
  std::vector<int> coords;
  std::size_t len = 0;
};

// Walks the syzygy module along the axes; values in row-major order.
std::vector<std::int64_t> walk_eval(const Cell& c, std::uint64_t q, const std::vector<std::int64_t>& base,
                                    const std::vector<AxisPlan>& axes, unsigned workers) {
  const HomogPoly Fq = c.F.frobenius_power(q);
  const HomogPoly Gq = c.G.frobenius_power(q);
  const HomogPoly Hq = c.H.frobenius_power(q);
  auto start_walker = [&](std::vector<std::int64_t> a) {
    std::vector<int> ai(a.begin(), a.end());
    return SyzygyWalker(Fq, Gq, Hq * linear_product(c.forms, ai));
  };
  if (axes.empty()) return {start_walker(base).delta()};

  std::size_t total = 1;
  std::vector<std::size_t> stride(axes.size(), 1);
  for (std::size_t k = axes.size(); k-- > 0;) {
    stride[k] = total;
    total *= axes[k].len;
  }
  std::vector<std::int64_t> out(total);

  auto step = [&](SyzygyWalker& w, std::size_t axis) {
    for (int i : axes[axis].coords) w.multiply_third(c.forms[static_cast<std::size_t>(i)]);
  };
  // Fills the sub-block at `offset` spanned by axes >= axis.
  auto walk = [&](auto& self, SyzygyWalker w, std::size_t axis, std::size_t offset) -> void {
    const bool last = axis + 1 == axes.size();
    for (std::size_t i = 0; i < axes[axis].len; ++i) {
      if (last)
        out[offset + i] = w.delta();
      else
        self(self, w, axis + 1, offset + i * stride[axis]);
      if (i + 1 < axes[axis].len) step(w, axis);
    }
  };
  auto chunk = [&](std::size_t begin, std::size_t end) {
    auto a = base;
    for (int i : axes[0].coords) a[static_cast<std::size_t>(i)] += static_cast<std::int64_t>(begin);
    SyzygyWalker w = start_walker(a);
    for (std::size_t i = begin; i < end; ++i) {
      if (axes.size() == 1)
        out[i] = w.delta();
      else
        walk(walk, w, 1, i * stride[0]);
      if (i + 1 < end) step(w, 0);
    }
  };

  const std::size_t len0 = axes[0].len;
  if (workers == 0) workers = default_workers();
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, len0));
  if (workers <= 1) {
    chunk(0, len0);
    return out;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t b = len0 * w / workers, e = len0 * (w + 1) / workers;
    threads.emplace_back([&, w, b, e] {
      try {
        chunk(b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::size_t> neighbors(const FractalGrid& g, std::size_t flat) {
  std::vector<std::size_t> out;
  auto idx = g.index(flat);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    for (int d : {-1, 1}) {
      int v = idx[k] + d;
      if (v < 0 || v > static_cast<int>(g.q)) continue;
      auto j = idx;
      j[k] = v;
      out.push_back(g.flat(j));
    }
  }
  return out;
}

void require_identity(const FractalGrid& g, const char* what) {
  if (!g.slice.is_identity()) throw Error(std::string(what) + " needs a full-dimensional grid");
}

}  // namespace

HomogPoly Cell::ell() const { return linear_product(forms, std::vector<int>(forms.size(), 1)); }

void validate(const Cell& c) {
  if (c.F.is_zero() || c.G.is_zero() || c.H.is_zero()) throw Error("cell polynomials must be nonzero");
  if (c.forms.empty()) throw Error("a cell needs at least one linear form");
  const FieldSpec& f = c.F.field();
  auto same = [&](const HomogPoly& h) { return h.field() == f; };
  if (!same(c.G) || !same(c.H)) throw Error("cell polynomials lie over different fields");
  for (const auto& l : c.forms) {
    if (!same(l)) throw Error("linear forms lie over a different field");
    if (l.degree() != 1) throw Error("cell form \"" + format_poly(l) + "\" is not linear");
  }
  if (!pairwise_prime(c.forms)) throw Error("cell forms are not pairwise prime");
  if (gcd(std::vector<HomogPoly>{c.F, c.G, c.H * c.ell()}).degree() > 0)
    throw Error("F, G and H*l share a common factor");
}

Cell Cell::make(HomogPoly F, HomogPoly G, HomogPoly H, std::vector<HomogPoly> forms) {
  Cell c{std::move(F), std::move(G), std::move(H), std::move(forms)};
  validate(c);
  return c;
}

RationalPoint RationalPoint::normalized(std::uint64_t p) const {
  RationalPoint r = *this;
  while (r.q % p == 0 &&
         std::all_of(r.a.begin(), r.a.end(), [&](std::int64_t v) { return v % static_cast<std::int64_t>(p) == 0; })) {
    r.q /= p;
    for (auto& v : r.a) v /= static_cast<std::int64_t>(p);
  }
  return r;
}

bool RationalPoint::reduced(std::uint64_t p) const {
  return q > 1 && std::any_of(a.begin(), a.end(), [&](std::int64_t v) { return v % static_cast<std::int64_t>(p) != 0; });
}

RationalPoint RationalPoint::at_level(std::uint64_t q2) const {
  if (q2 % q != 0) throw Error("level " + std::to_string(q2) + " is not a multiple of " + std::to_string(q));
  RationalPoint r{a, q2};
  for (auto& v : r.a) v *= static_cast<std::int64_t>(q2 / q);
  return r;
}

std::string RationalPoint::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")/" + std::to_string(q);
}

bool RationalPoint::operator==(const RationalPoint& o) const {
  if (a.size() != o.a.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (coord(i) != o.coord(i)) return false;
  return true;
}

RationalPoint parse_point(std::string_view text, std::uint64_t p) {
  std::vector<Rational> coords;
  std::int64_t q = 1;
  for (auto piece : split_commas(text)) {
    Rational r = parse_rational(piece);
    if (r < 0 || r > 1) throw Error("coordinate " + std::string(piece) + " lies outside [0,1]");
    if (!is_power_of(static_cast<std::uint64_t>(r.denominator()), p))
      throw Error("denominator of " + std::string(piece) + " is not a power of " + std::to_string(p));
    q = std::max(q, r.denominator());
    coords.push_back(r);
  }
  RationalPoint pt{{}, static_cast<std::uint64_t>(q)};
  for (const auto& r : coords) pt.a.push_back(r.numerator() * (q / r.denominator()));
  return pt;
}

std::string GapValue::str() const { return rational_str(value()); }

Rational taxicab(const RationalPoint& t, const RationalPoint& u) {
  if (t.n() != u.n()) throw Error("taxicab distance between points of different dimension");
  Rational d = 0;
  for (std::size_t i = 0; i < t.n(); ++i) d += boost::abs(t.coord(i) - u.coord(i));
  return d;
}

Slice Slice::identity(int n) {
  Slice s;
  s.axes = n;
  for (int i = 0; i < n; ++i) s.coords.push_back({i, 0});
  return s;
}

Slice Slice::parse(std::string_view text, int n) {
  Slice s;
  auto pieces = split_commas(text);
  if (static_cast<int>(pieces.size()) != n)
    throw Error("slice \"" + std::string(text) + "\" has " + std::to_string(pieces.size()) +
                " coordinates, expected " + std::to_string(n));
  for (auto piece : pieces) {
    Binding b;
    if (!piece.empty() && piece.front() == 't') {
      auto k = parse_int(piece.substr(1), "slice axis");
      if (k < 1) throw Error("slice axis \"" + std::string(piece) + "\" must be t1 or higher");
      b.axis = static_cast<int>(k - 1);
      s.axes = std::max(s.axes, b.axis + 1);
    } else {
      b.constant = parse_rational(piece);
      if (b.constant < 0 || b.constant > 1)
        throw Error("slice constant " + std::string(piece) + " lies outside [0,1]");
    }
    s.coords.push_back(b);
  }
  for (int k = 0; k < s.axes; ++k)
    if (s.multiplicity(k) == 0) throw Error("slice skips axis t" + std::to_string(k + 1));
  return s;
}

std::string Slice::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += coords[i].axis >= 0 ? "t" + std::to_string(coords[i].axis + 1) : rational_str(coords[i].constant);
  }
  return out;
}

bool Slice::is_identity() const {
  if (axes != static_cast<int>(coords.size())) return false;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i].axis != static_cast<int>(i)) return false;
  return true;
}

int Slice::multiplicity(int axis) const {
  return static_cast<int>(std::count_if(coords.begin(), coords.end(), [&](const Binding& b) { return b.axis == axis; }));
}

std::vector<int> FractalGrid::index(std::size_t flat) const {
  std::vector<int> idx(static_cast<std::size_t>(axes()));
  for (std::size_t k = idx.size(); k-- > 0;) {
    idx[k] = static_cast<int>(flat % side());
    flat /= side();
  }
  return idx;
}

std::size_t FractalGrid::flat(const std::vector<int>& idx) const {
  std::size_t f = 0;
  for (int v : idx) f = f * side() + static_cast<std::size_t>(v);
  return f;
}

RationalPoint FractalGrid::point(std::size_t flat_index) const {
  auto idx = index(flat_index);
  RationalPoint pt{{}, q};
  for (const auto& b : slice.coords) {
    if (b.axis >= 0)
      pt.a.push_back(idx[static_cast<std::size_t>(b.axis)]);
    else
      pt.a.push_back((b.constant * static_cast<std::int64_t>(q)).numerator());
  }
  return pt;
}

GapValue delta_at(const Cell& c, const RationalPoint& t, bool precancel) {
  validate(c);
  check_level(c.F.field(), t.q);
  if (static_cast<int>(t.n()) != c.n())
    throw Error("point has " + std::to_string(t.n()) + " coordinates, cell has " + std::to_string(c.n()) + " forms");
  for (auto v : t.a)
    if (v < 0 || static_cast<std::uint64_t>(v) > t.q) throw Error("point " + t.str() + " lies outside the cube");
  const std::uint64_t q = t.q;
  const auto Q = static_cast<std::int64_t>(q);
  std::vector<int> a(t.a.begin(), t.a.end());
  if (!precancel) {
    auto r = syzygy_gap(c.F.frobenius_power(q), c.G.frobenius_power(q),
                        c.H.frobenius_power(q) * linear_product(c.forms, a));
    return {r.delta, q};
  }
  // A power of l_i dividing F^q (or G^q) and l^a leaves the gap unchanged when removed from both.
  HomogPoly fcore = c.F, gcore = c.G;
  std::vector<int> keep_f(a.size(), 0), keep_g(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::int64_t mf = Q * strip_linear(fcore, c.forms[i]);
    std::int64_t mg = Q * strip_linear(gcore, c.forms[i]);
    std::int64_t s = std::min<std::int64_t>(std::max(mf, mg), a[i]);
    a[i] -= static_cast<int>(s);
    keep_f[i] = static_cast<int>(mf > 0 ? mf - s : 0);
    keep_g[i] = static_cast<int>(mg > 0 ? mg - s : 0);
  }
  HomogPoly Fq = fcore.frobenius_power(q) * linear_product(c.forms, keep_f);
  HomogPoly Gq = gcore.frobenius_power(q) * linear_product(c.forms, keep_g);
  auto r = syzygy_gap(Fq, Gq, c.H.frobenius_power(q) * linear_product(c.forms, a));
  return {r.delta, q};
}

unsigned default_workers() {
  if (const char* env = std::getenv("SYZGAP_THREADS")) {
    try {
      auto v = std::stoul(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

FractalGrid grid_eval(const Cell& c, std::uint64_t q, const Slice& slice, unsigned workers) {
  validate(c);
  check_level(c.F.field(), q);
  if (static_cast<int>(slice.coords.size()) != c.n())
    throw Error("slice binds " + std::to_string(slice.coords.size()) + " coordinates, cell has " +
                std::to_string(c.n()) + " forms");
  std::vector<std::int64_t> base(slice.coords.size(), 0);
  std::vector<AxisPlan> axes(static_cast<std::size_t>(slice.axes));
  for (auto& ax : axes) ax.len = static_cast<std::size_t>(q) + 1;
  for (std::size_t i = 0; i < slice.coords.size(); ++i) {
    const auto& b = slice.coords[i];
    if (b.axis >= 0) {
      axes[static_cast<std::size_t>(b.axis)].coords.push_back(static_cast<int>(i));
    } else {
      Rational scaled = b.constant * static_cast<std::int64_t>(q);
      if (scaled.denominator() != 1)
        throw Error("slice constant " + rational_str(b.constant) + " is not on the level-" + std::to_string(q) +
                    " grid");
      base[i] = scaled.numerator();
    }
  }
  return {q, slice, walk_eval(c, q, base, axes, workers)};
}

std::vector<std::int64_t> box_eval(const Cell& c, std::uint64_t q, const std::vector<std::int64_t>& lo,
                                   const std::vector<std::int64_t>& hi, unsigned workers) {
  validate(c);
  check_level(c.F.field(), q);
  if (static_cast<int>(lo.size()) != c.n() || static_cast<int>(hi.size()) != c.n())
    throw Error("box corners must have one entry per form");
  std::vector<AxisPlan> axes;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (lo[i] < 0 || hi[i] < lo[i] || static_cast<std::uint64_t>(hi[i]) > q)
      throw Error("box is empty or leaves the cube");
    axes.push_back({{static_cast<int>(i)}, static_cast<std::size_t>(hi[i] - lo[i] + 1)});
  }
  return walk_eval(c, q, lo, axes, workers);
}

std::vector<RationalPoint> zero_set(const FractalGrid& g) {
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < g.values.size(); ++i)
    if (g.values[i] == 0) out.push_back(g.point(i));
  return out;
}

std::vector<std::pair<RationalPoint, GapValue>> local_maxima(const FractalGrid& g) {
  std::vector<std::pair<RationalPoint, GapValue>> out;
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto nb = neighbors(g, i);
    bool is_max = std::all_of(nb.begin(), nb.end(), [&](std::size_t j) { return g.values[j] < g.values[i]; });
    if (is_max) out.push_back({g.point(i), {g.values[i], g.q}});
  }
  return out;
}

VerificationReport verify_theorem_A(const Cell& c, const FractalGrid& g) {
  require_identity(g, "verify_theorem_A");
  (void)c;
  VerificationReport rep{"A", g.q, g.values.size(), {}};
  const std::size_t N = g.values.size();
  std::vector<std::int64_t> expected(N, -1);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < N; ++i) {
    if (g.values[i] == 0) {
      expected[i] = 0;
      queue.push_back(i);
    }
  }
  if (!queue.empty()) {
    // Breadth-first search on the grid graph gives taxicab distance in a box.
    while (!queue.empty()) {
      auto i = queue.front();
      queue.pop_front();
      for (auto j : neighbors(g, i)) {
        if (expected[j] < 0) {
          expected[j] = expected[i] + 1;
          queue.push_back(j);
        }
      }
    }
  } else {
    const int n = g.axes();
    std::size_t best = 0;
    std::int64_t best_val = std::numeric_limits<std::int64_t>::max();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<int> idx(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) idx[static_cast<std::size_t>(k)] = (mask >> k & 1) ? static_cast<int>(g.q) : 0;
      auto f = g.flat(idx);
      if (g.values[f] < best_val) {
        best_val = g.values[f];
        best = f;
      }
    }
    auto u = g.index(best);
    for (std::size_t i = 0; i < N; ++i) {
      auto t = g.index(i);
      std::int64_t d = 0;
      for (std::size_t k = 0; k < t.size(); ++k) d += std::abs(t[k] - u[k]);
      expected[i] = best_val + d;
    }
  }
  for (std::size_t i = 0; i < N; ++i)
    if (expected[i] != g.values[i]) rep.violations.push_back({g.point(i), {expected[i], g.q}, {g.values[i], g.q}});
  return rep;
}

VerificationReport verify_theorem_A(const Cell& c, std::uint64_t q) {
  return verify_theorem_A(c, grid_eval(c, q, Slice::identity(c.n())));
}

VerificationReport verify_theorem_B(const Cell& c, const RationalPoint& u, std::uint64_t q2) {
  validate(c);
  check_level(c.F.field(), u.q);
  check_level(c.F.field(), q2);
  if (static_cast<int>(u.n()) != c.n()) throw Error("point dimension differs from the number of forms");
  const auto q = static_cast<std::int64_t>(u.q);
  for (auto v : u.a)
    if (v < 0 || v > q) throw Error("point " + u.str() + " lies outside the cube");

  // Precondition: strict local maximum among in-cube neighbors on X_q.
  std::vector<std::int64_t> lo(u.a), hi(u.a);
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::max<std::int64_t>(0, lo[i] - 1);
    hi[i] = std::min<std::int64_t>(q, hi[i] + 1);
  }
  const std::int64_t du = delta_at(c, u).num;
  for (std::size_t i = 0; i < u.n(); ++i) {
    for (int d : {-1, 1}) {
      auto t = u;
      t.a[i] += d;
      if (t.a[i] < 0 || t.a[i] > q) continue;
      if (delta_at(c, t).num >= du) throw Error("point " + u.str() + " is not a local maximum at level " + std::to_string(q));
    }
  }

  const RationalPoint uf = u.at_level(q2);
  const auto Q2 = static_cast<std::int64_t>(q2);
  const std::int64_t R = du * (Q2 / q);
  VerificationReport rep{"B", q2, 0, {}};
  if (R == 0) return rep;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    lo[i] = std::max<std::int64_t>(0, uf.a[i] - R);
    hi[i] = std::min<std::int64_t>(Q2, uf.a[i] + R);
  }
  auto vals = box_eval(c, q2, lo, hi);
  std::vector<std::int64_t> t(lo);
  for (std::size_t f = 0; f < vals.size(); ++f) {
    std::int64_t d = 0;
    for (std::size_t k = 0; k < t.size(); ++k) d += std::abs(t[k] - uf.a[k]);
    if (d <= R) {
      ++rep.checked;
      if (vals[f] != R - d) rep.violations.push_back({{t, q2}, {R - d, q2}, {vals[f], q2}});
    }
    for (std::size_t k = t.size(); k-- > 0;) {
      if (++t[k] <= hi[k]) break;
      t[k] = lo[k];
    }
  }
  return rep;
}

VerificationReport verify_theorem_C(const Cell& c, const FractalGrid& g) {
  require_identity(g, "verify_theorem_C");
  VerificationReport rep{"C", g.q, 0, {}};
  if (g.q <= 1) return rep;
  const std::uint64_t p = c.F.field().characteristic();
  const std::int64_t bound = c.n() - 2;
  const auto Q = static_cast<int>(g.q);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    const auto idx = g.index(i);
    const std::int64_t v = g.values[i];
    bool hit = false;
    RationalPoint pt{{idx.begin(), idx.end()}, g.q};
    if (pt.reduced(p)) {
      auto nb = neighbors(g, i);
      hit = std::all_of(nb.begin(), nb.end(), [&](std::size_t j) { return g.values[j] < v; });
    }
    for (std::size_t k = 0; k < idx.size() && !hit; ++k) {
      if (idx[k] % static_cast<int>(p) == 0) continue;
      bool axis_max = true;
      for (int d : {-1, 1}) {
        int w = idx[k] + d;
        if (w < 0 || w > Q) continue;
        auto j = idx;
        j[k] = w;
        if (g.at(j) >= v) axis_max = false;
      }
      hit = axis_max;
    }
    if (!hit) continue;
    ++rep.checked;
    if (v > bound) rep.violations.push_back({pt, {bound, g.q}, {v, g.q}});
  }
  return rep;
}

VerificationReport verify_theorem_C(const Cell& c, std::uint64_t q) {
  return verify_theorem_C(c, grid_eval(c, q, Slice::identity(c.n())));
}

VerificationReport check_parity(const Cell& c, const FractalGrid& g) {
  VerificationReport rep{"parity", g.q, g.values.size(), {}};
  const auto base = static_cast<std::int64_t>(g.q) * (c.F.degree() + c.G.degree() + c.H.degree());
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto pt = g.point(i);
    std::int64_t s = base + std::accumulate(pt.a.begin(), pt.a.end(), std::int64_t{0});
    if ((s - g.values[i]) % 2 != 0) rep.violations.push_back({pt, {s % 2, 1}, {g.values[i], g.q}});
  }
  return rep;
}

VerificationReport check_lipschitz(const FractalGrid& g) {
  VerificationReport rep{"lipschitz", g.q, 0, {}};
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto idx = g.index(i);
    for (int k = 0; k < g.axes(); ++k) {
      auto j = idx;
      if (++j[static_cast<std::size_t>(k)] > static_cast<int>(g.q)) continue;
      ++rep.checked;
      std::int64_t diff = std::abs(g.at(j) - g.values[i]);
      std::int64_t m = g.slice.multiplicity(k);
      if (diff > m) rep.violations.push_back({g.point(g.flat(j)), {g.values[i] + m, g.q}, {g.at(j), g.q}});
    }
  }
  return rep;
}

VerificationReport check_convexity(const FractalGrid& g) {
  VerificationReport rep{"convexity", g.q, 0, {}};
  const int Q = static_cast<int>(g.q);
  std::vector<int> simple;
  for (int k = 0; k < g.axes(); ++k)
    if (g.slice.multiplicity(k) == 1) simple.push_back(k);
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto idx = g.index(i);
    const std::int64_t v = g.values[i];
    for (int k : simple) {
      auto K = static_cast<std::size_t>(k);
      if (idx[K] == 0 || idx[K] == Q) continue;
      auto lo = idx, hi = idx;
      --lo[K];
      ++hi[K];
      ++rep.checked;
      if (v > 0 && g.at(lo) > v && g.at(hi) > v) rep.violations.push_back({g.point(i), {0, g.q}, {v, g.q}});
    }
    for (std::size_t a = 0; a < simple.size(); ++a) {
      for (std::size_t b = a + 1; b < simple.size(); ++b) {
        auto A = static_cast<std::size_t>(simple[a]), B = static_cast<std::size_t>(simple[b]);
        if (idx[A] == Q || idx[B] == Q) continue;
        auto ea = idx, eb = idx, eab = idx;
        ++ea[A];
        ++eb[B];
        ++eab[A];
        ++eab[B];
        ++rep.checked;
        const std::int64_t va = g.at(ea), vb = g.at(eb), vab = g.at(eab);
        if (v == vab && va == vb && v != 0 && va != 0)
          rep.violations.push_back({g.point(i), {0, g.q}, {v, g.q}});
      }
    }
  }
  return rep;
}

bool grid_is_corner_linear(const FractalGrid& g) {
  if (g.axes() == 0) return true;
  const int n = g.axes();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> u(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) u[static_cast<std::size_t>(k)] = (mask >> k & 1) ? static_cast<int>(g.q) : 0;
    const std::int64_t base = g.at(u);
    bool ok = true;
    for (std::size_t i = 0; i < g.values.size() && ok; ++i) {
      auto t = g.index(i);
      std::int64_t d = 0;
      for (int k = 0; k < n; ++k) {
        auto K = static_cast<std::size_t>(k);
        d += std::abs(t[K] - u[K]) * g.slice.multiplicity(k);
      }
      ok = g.values[i] == base + d;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace syzgap
