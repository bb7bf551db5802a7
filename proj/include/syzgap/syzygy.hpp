#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "syzgap/poly.hpp"

namespace syzgap {

/// (alpha, beta, gamma); components may be zero.
using Triple = std::array<HomogPoly, 3>;

struct SyzygyGenerators {
  Triple s1;
  Triple s2;
  int m = 0;  // degree of s1, i.e. deg(alpha1 * F)
  int n = 0;
};

struct GapResult {
  int delta = 0;
  int m = 0;
};

enum class SyzygyEngine {
  /// Shifted row reduction of the dehomogenized syzygy module (default).
  Reduction,
  /// Graded Gaussian elimination with binary search over degrees.
  Gaussian,
};

/// alpha*F + beta*G + gamma*H (zero components skipped).
HomogPoly apply_syzygy(const Triple& s, const HomogPoly& F, const HomogPoly& G, const HomogPoly& H);

/// Dimension of the degree-d piece of syz(F, G, H), graded so that
/// (alpha, beta, gamma) has degree deg(alpha*F).
std::size_t graded_kernel_dim(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H, int d);

/// Least degree of a nontrivial syzygy. Common factors are allowed.
int min_syzygy_degree(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H,
                      SyzygyEngine engine = SyzygyEngine::Reduction);

GapResult syzygy_gap(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H,
                     SyzygyEngine engine = SyzygyEngine::Reduction);

/// Free generators of degrees m <= n; requires gcd(F, G, H) = 1.
SyzygyGenerators syzygy_generators(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H);

/// dim k[x,y]/I; throws when the generators share a factor.
std::uint64_t colength(const std::vector<HomogPoly>& generators);

/// 2(d1d2 + d1d3 + d2d3) - d1^2 - d2^2 - d3^2.
long long q_form(long long d1, long long d2, long long d3);

/// Follows the syzygy module of (F, G, H * l1 * l2 * ...) as linear factors
/// are appended to the third entry, one O(degree) update per factor.
///
/// Only the third components of the two generators are needed to decide each
/// step, so alpha and beta are carried only when `full` is set.
class SyzygyWalker {
 public:
  /// Requires gcd(F, G, H) = 1.
  SyzygyWalker(const HomogPoly& F, const HomogPoly& G, const HomogPoly& H, bool full = false);

  /// Replace H by l*H; l must keep the triple coprime.
  void multiply_third(const HomogPoly& l);

  int m() const { return m_; }
  int n() const { return n_; }
  int degree_sum() const { return sum_; }
  int delta() const { return sum_ - 2 * m_; }
  /// Full generators; requires `full`.
  SyzygyGenerators generators() const;
  const HomogPoly& gamma1() const { return s1_[2]; }
  const HomogPoly& gamma2() const { return s2_[2]; }

 private:
  FieldPtr field_;
  bool full_;
  Triple s1_, s2_;
  int m_ = 0, n_ = 0, sum_ = 0;
};

}  // namespace syzgap
