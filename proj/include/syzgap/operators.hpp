#pragma once

#include <cstdint>
#include <vector>

#include "syzgap/fractal.hpp"

namespace syzgap {

/// A form of the given degree with no linear factor among the cell forms:
/// a power of the first linear form off the forms when one exists, else
/// built from irreducible quadratics and cubics. Throws Error for degree 1
/// when every point of the projective line is a root of some form.
HomogPoly aux_form(const Cell& c, int degree);

/// <U, V, 1> with U, V the third components of the syzygy generators of
/// (F, G, H); same delta function. When one of them vanishes the colon ideal
/// is principal: a zero on the least-degree generator means delta + sum t,
/// returned as <B, l> with deg B = delta + n; a zero on the other means
/// |delta - sum t|, returned as <x^delta, 1>.
Cell colon_reduce(const Cell& c);

/// Cell whose delta function is delta_C with t_i replaced by 1 - t_i
/// (i is zero-based).
Cell reflect(const Cell& c, int i);

/// <F^q, G^q, H^q l^b> with 0 <= b_i <= q - 1; its delta function is
/// t -> q * delta_C((t + b) / q).
Cell magnify(const Cell& c, std::uint64_t q, const std::vector<int>& b);

struct CanonicalCell {
  Cell cell;
  /// delta_C is affine on the cube; `cell` is then only a representative.
  bool linear = false;
};

/// Representative <F, G> with deg F <= deg G, deg F <= n and
/// deg G - deg F < n, or a linear flag.
CanonicalCell canonicalize(const Cell& c);

/// Values at level q of the full grid; the default is p^2.
std::vector<std::int64_t> fingerprint(const Cell& c, std::uint64_t q = 0);

/// Heuristic: the two delta functions agree on X_{p^2}.
bool delta_equivalent(const Cell& a, const Cell& b);

struct OrbitNode {
  int id = 0;
  int depth = 0;
  bool linear = false;
  Cell rep;
  std::vector<std::int64_t> fingerprint;
};

struct OrbitEdge {
  int from = 0;
  int to = 0;
  std::vector<int> b;
};

struct OrbitGraph {
  std::vector<OrbitNode> nodes;
  std::vector<OrbitEdge> edges;
  /// Every discovered node was expanded within the depth limit.
  bool closed = false;
};

/// Breadth-first closure under T_{p|b}. Nodes are identified by their
/// level-p^2 grid; affine functions share one "linear" node. `bs` restricts
/// the magnifications (default: all of {0..p-1}^n).
OrbitGraph orbit_explore(const Cell& c, int depth, const std::vector<std::vector<int>>& bs = {});

}  // namespace syzgap
