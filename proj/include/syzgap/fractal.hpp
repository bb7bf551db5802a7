#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "syzgap/poly.hpp"

namespace boost {

// Under C++20 rewritten comparisons, boost's mixed integer/rational == recurses forever.
inline bool operator==(const rational<std::int64_t>& a, std::int64_t b) { return a.denominator() == 1 && a.numerator() == b; }
inline bool operator==(std::int64_t b, const rational<std::int64_t>& a) { return a == b; }
inline bool operator==(const rational<std::int64_t>& a, int b) { return a == static_cast<std::int64_t>(b); }
inline bool operator==(int b, const rational<std::int64_t>& a) { return a == static_cast<std::int64_t>(b); }

}  // namespace boost

namespace syzgap {

using Rational = boost::rational<std::int64_t>;

/// A triple (F, G, H) together with pairwise prime linear forms l_1..l_n,
/// subject to gcd(F, G, H*l_1*...*l_n) = 1.
struct Cell {
  HomogPoly F, G, H;
  std::vector<HomogPoly> forms;

  /// Validates and returns the cell; throws Error naming the failed condition.
  static Cell make(HomogPoly F, HomogPoly G, HomogPoly H, std::vector<HomogPoly> forms);

  int n() const { return static_cast<int>(forms.size()); }
  const FieldPtr& field() const { return F.field_ptr(); }
  /// l_1 * ... * l_n.
  HomogPoly ell() const;
};

void validate(const Cell& c);

/// The point a/q of [0,1]^n with q a power of p.
struct RationalPoint {
  std::vector<std::int64_t> a;
  std::uint64_t q = 1;

  std::size_t n() const { return a.size(); }
  Rational coord(std::size_t i) const { return {a[i], static_cast<std::int64_t>(q)}; }
  /// Divides out common factors of p from all a_i and q.
  RationalPoint normalized(std::uint64_t p) const;
  /// q > 1 and some a_i prime to p.
  bool reduced(std::uint64_t p) const;
  /// Same point written over denominator q2 (a multiple of q).
  RationalPoint at_level(std::uint64_t q2) const;
  std::string str() const;
  bool operator==(const RationalPoint& o) const;
};

/// Parses "a1/q,a2/q,..." (each coordinate may carry its own denominator,
/// all powers of p; the result uses their maximum).
RationalPoint parse_point(std::string_view text, std::uint64_t p);

/// Delta / q, where Delta = q * delta_C.
struct GapValue {
  std::int64_t num = 0;
  std::uint64_t den = 1;

  Rational value() const { return {num, static_cast<std::int64_t>(den)}; }
  std::string str() const;
  bool operator==(const GapValue& o) const { return value() == o.value(); }
};

/// Taxicab distance sum |t_i - u_i|.
Rational taxicab(const RationalPoint& t, const RationalPoint& u);

/// Affine map from k grid axes into the n coordinates: each coordinate is
/// either a grid axis or a constant in [0,1].
struct Slice {
  struct Binding {
    int axis = -1;  // -1 for a constant
    Rational constant = 0;
  };
  std::vector<Binding> coords;
  int axes = 0;

  static Slice identity(int n);
  /// Comma-separated coordinates, each "tK" (K >= 1) or a constant such as
  /// "0", "1", "1/3". Axis names must be t1..tk without gaps.
  static Slice parse(std::string_view text, int n);
  std::string str() const;
  bool is_identity() const;
  /// Number of coordinates bound to the given axis.
  int multiplicity(int axis) const;
};

/// Integer values Delta = q * delta_C over a slice of X_q, row-major with
/// axis 0 varying slowest; every axis has q + 1 entries.
struct FractalGrid {
  std::uint64_t q = 1;
  Slice slice;
  std::vector<std::int64_t> values;

  std::size_t side() const { return static_cast<std::size_t>(q) + 1; }
  int axes() const { return slice.axes; }
  std::vector<int> index(std::size_t flat) const;
  std::size_t flat(const std::vector<int>& idx) const;
  std::int64_t at(const std::vector<int>& idx) const { return values[flat(idx)]; }
  /// Full n-dimensional point for a flat index.
  RationalPoint point(std::size_t flat) const;
};

struct Violation {
  RationalPoint point;
  GapValue expected;
  GapValue actual;
};

struct VerificationReport {
  std::string theorem;
  std::uint64_t q = 1;
  std::size_t checked = 0;
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

/// delta_C(a/q) exactly. With `precancel`, powers of l_i shared by F^q (or
/// G^q) and l^a are removed first, which leaves the gap unchanged.
GapValue delta_at(const Cell& c, const RationalPoint& t, bool precancel = true);

/// Worker count for grid evaluation: SYZGAP_THREADS if set, else hardware
/// concurrency.
unsigned default_workers();

/// Evaluates delta_C over the slice at level q; values are independent of
/// the worker count (0 selects default_workers()).
FractalGrid grid_eval(const Cell& c, std::uint64_t q, const Slice& slice, unsigned workers = 0);

/// Values Delta on the box lo <= a <= hi (componentwise) at level q, in the
/// row-major order of the box.
std::vector<std::int64_t> box_eval(const Cell& c, std::uint64_t q, const std::vector<std::int64_t>& lo,
                                   const std::vector<std::int64_t>& hi, unsigned workers = 0);

std::vector<RationalPoint> zero_set(const FractalGrid& g);

/// Points whose every in-cube neighbor (+-1 along one grid axis) has a
/// strictly smaller value.
std::vector<std::pair<RationalPoint, GapValue>> local_maxima(const FractalGrid& g);

/// Checks delta_C = taxicab distance to the zero set on X_q, or the corner
/// formula when there are no zeros. Needs a full-dimensional grid.
VerificationReport verify_theorem_A(const Cell& c, const FractalGrid& g);
VerificationReport verify_theorem_A(const Cell& c, std::uint64_t q);

/// Checks the cone formula delta(t) = delta(u) - d(t, u) on X_{q2} around
/// the local maximum u; throws Error when u is not a local maximum.
VerificationReport verify_theorem_B(const Cell& c, const RationalPoint& u, std::uint64_t q2);

/// Checks q * delta_C <= n - 2 at reduced local maxima and at axis-wise
/// maxima with that coordinate prime to p. Vacuous for q = 1.
VerificationReport verify_theorem_C(const Cell& c, const FractalGrid& g);
VerificationReport verify_theorem_C(const Cell& c, std::uint64_t q);

/// Delta = q(deg F + deg G + deg H) + sum a_i (mod 2) at every grid point.
VerificationReport check_parity(const Cell& c, const FractalGrid& g);
/// |Delta(t) - Delta(t + e_k)| <= multiplicity of axis k.
VerificationReport check_lipschitz(const FractalGrid& g);
/// On axes binding a single coordinate: no strict valley with a positive
/// bottom along a line, and the square pattern (equal diagonals, equal
/// off-diagonals) only around a zero.
VerificationReport check_convexity(const FractalGrid& g);

/// delta_C is affine on the cube: delta(t) = delta(u) + d(t, u) for a corner u,
/// tested on the grid.
bool grid_is_corner_linear(const FractalGrid& g);

}  // namespace syzgap
