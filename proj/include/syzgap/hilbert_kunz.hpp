#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "syzgap/fractal.hpp"

namespace syzgap {

/// colength(F^q, G^q, H^q l^a) / q^2.
Rational phi_C(const Cell& c, const RationalPoint& t);

/// colength(g_1^q, ..., g_k^q, l^a) / q^2 for the ideal I = (g_1, ..., g_k);
/// throws Error when the colength is infinite.
Rational phi_I(const std::vector<HomogPoly>& generators, const std::vector<HomogPoly>& forms,
               const RationalPoint& t);

/// Generators of (F, G) : H, taken from the third components of the
/// syzygy generators of (F, G, H).
std::vector<HomogPoly> colon_ideal(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H);

/// Checks at each point, with d = colength(F, G, H), delta = delta(F, G, H)
/// and s = sum t:
///   4 phi_C = delta_C^2 + 4d - delta^2 + 2(deg F + deg G - deg H)s - s^2,
///   4 phi_I = delta_C^2 - delta^2 + 2(deg F + deg G - deg H)s - s^2,
///   phi_C = phi_I + d.
VerificationReport verify_hk_identities(const Cell& c, const std::vector<RationalPoint>& points);

/// 2 colength(a) - colength(a + e_i) - colength(a - e_i) <= n - 2 at level q,
/// colengths of (F^q, G^q, H^q l^a); requires a_i prime to p.
VerificationReport newbound_check(const Cell& c, const RationalPoint& t, int axis = 0);

/// The three-colength left side of newbound_check.
std::int64_t newbound_lhs(const Cell& c, const RationalPoint& t, int axis = 0);

struct SurfaceInstance {
  HomogPoly U, V;
  std::vector<HomogPoly> forms;
  std::vector<int> c;
  int m = 1;
  /// Degree r - m, prime to l^c.
  HomogPoly Hlin;
};

void validate(const SurfaceInstance& s);

/// dim k[x,y,z] / (F, U^q, V^q, z^q) with F = l^c - z^m Hlin. Levels above
/// p^2 need `allow_large`.
std::uint64_t surface_colength(const SurfaceInstance& s, std::uint64_t q, bool allow_large = false);

/// d r - r/4 + (m^2 / 4r) delta*^2.
Rational mu_formula(std::int64_t d, std::int64_t r, std::int64_t m, const Rational& delta_star);

/// delta of <U, V> at c/m when that point has a p-power denominator;
/// nullopt otherwise.
std::optional<Rational> surface_delta_star(const SurfaceInstance& s);

/// mu_formula for the instance, when surface_delta_star is available.
std::optional<Rational> surface_mu(const SurfaceInstance& s);

}  // namespace syzgap
