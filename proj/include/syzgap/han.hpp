#pragma once

#include <array>
#include <cstdint>

#include "syzgap/fractal.hpp"

namespace syzgap {

/// Han's delta*(t) for t in [0,1]^3 with p-power denominators: the continuous
/// extension of a/q -> delta(x^a1, y^a2, (x+y)^a3) / q.
Rational han_delta_star(const std::array<Rational, 3>& t, std::uint64_t p);

/// Compares han_delta_star(a/q) with the syzygy gap of
/// (x^a1, y^a2, (x+y)^a3) over F_p for every a in [0,q]^3.
VerificationReport han_cross_check(std::uint64_t q, std::uint64_t p);

}  // namespace syzgap
