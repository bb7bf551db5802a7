#include "syzgap/han.hpp"

#include <cmath>
#include <optional>
#include <set>

#include "syzgap/syzygy.hpp"

namespace syzgap {

namespace {

std::int64_t floor_div(const Rational& r) {
  std::int64_t n = r.numerator(), d = r.denominator();
  return n >= 0 ? n / d : -((-n + d - 1) / d);
}

// The unique u with odd coordinate sum and d(v, u) < 1, if any.
std::optional<std::pair<std::array<std::int64_t, 3>, Rational>> odd_neighbor(const std::array<Rational, 3>& v) {
  std::set<std::array<std::int64_t, 3>> seen;
  std::optional<std::pair<std::array<std::int64_t, 3>, Rational>> found;
  for (int mask = 0; mask < 8; ++mask) {
    std::array<std::int64_t, 3> u{};
    for (int i = 0; i < 3; ++i) {
      std::int64_t f = floor_div(v[static_cast<std::size_t>(i)]);
      bool up = (mask >> i & 1) && v[static_cast<std::size_t>(i)].denominator() != 1;
      u[static_cast<std::size_t>(i)] = f + (up ? 1 : 0);
    }
    if (!seen.insert(u).second) continue;
    if (((u[0] + u[1] + u[2]) % 2 + 2) % 2 != 1) continue;
    Rational d = 0;
    for (std::size_t i = 0; i < 3; ++i) d += boost::abs(v[i] - u[i]);
    if (d >= 1) continue;
    if (found) throw InternalError("two odd lattice points within distance 1");
    found = std::make_pair(u, d);
  }
  return found;
}

}  // namespace

Rational han_delta_star(const std::array<Rational, 3>& t, std::uint64_t p) {
  int E = 0;
  for (const auto& c : t) {
    if (c < 0 || c > 1) throw Error("Han coordinates must lie in [0,1]");
    std::int64_t den = c.denominator();
    int e = 0;
    while (den % static_cast<std::int64_t>(p) == 0) {
      den /= static_cast<std::int64_t>(p);
      ++e;
    }
    if (den != 1) throw Error("Han coordinates need denominators that are powers of " + std::to_string(p));
    E = std::max(E, e);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    const Rational& a = t[i];
    const Rational& b = t[(i + 1) % 3];
    const Rational& c = t[(i + 2) % 3];
    if (a > b + c) return a - b - c;
  }
  // s below zero never succeeds under the triangle inequalities; -2 is a safety margin.
  const auto P = static_cast<std::int64_t>(p);
  for (int s = -2; s <= E; ++s) {
    Rational scale = 1;
    for (int k = 0; k < std::abs(s); ++k) scale *= P;
    if (s < 0) scale = 1 / scale;
    std::array<Rational, 3> v{t[0] * scale, t[1] * scale, t[2] * scale};
    if (auto hit = odd_neighbor(v)) return (1 - hit->second) / scale;
  }
  return 0;
}

VerificationReport han_cross_check(std::uint64_t q, std::uint64_t p) {
  auto field = FieldSpec::prime(p);
  {
    std::uint64_t t = q;
    while (t > 1 && t % p == 0) t /= p;
    if (q < 1 || t != 1) throw Error("level " + std::to_string(q) + " is not a power of " + std::to_string(p));
  }
  const HomogPoly x = HomogPoly::linear(field, 1, 0), y = HomogPoly::linear(field, 0, 1),
                  xy = HomogPoly::linear(field, 1, 1);
  std::vector<HomogPoly> xp{HomogPoly::constant(field, 1)}, yp{xp[0]}, sp{xp[0]};
  for (std::uint64_t k = 1; k <= q; ++k) {
    xp.push_back(xp.back() * x);
    yp.push_back(yp.back() * y);
    sp.push_back(sp.back() * xy);
  }
  const auto Q = static_cast<std::int64_t>(q);
  VerificationReport rep{"han", q, 0, {}};
  for (std::int64_t a1 = 0; a1 <= Q; ++a1)
    for (std::int64_t a2 = 0; a2 <= Q; ++a2)
      for (std::int64_t a3 = 0; a3 <= Q; ++a3) {
        ++rep.checked;
        std::int64_t direct = syzygy_gap(xp[static_cast<std::size_t>(a1)], yp[static_cast<std::size_t>(a2)],
                                         sp[static_cast<std::size_t>(a3)])
                                  .delta;
        Rational h = han_delta_star({Rational(a1, Q), Rational(a2, Q), Rational(a3, Q)}, p) * Q;
        if (h.denominator() != 1 || h.numerator() != direct)
          rep.violations.push_back({{{a1, a2, a3}, q},
                                    {h.numerator(), static_cast<std::uint64_t>(h.denominator()) * q},
                                    {direct, q}});
      }
  return rep;
}

}  // namespace syzgap
