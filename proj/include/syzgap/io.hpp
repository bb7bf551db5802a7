#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "syzgap/fractal.hpp"
#include "syzgap/operators.hpp"

namespace syzgap {

/// Header a1,...,ak,num,den; one row per grid point with value num/den =
/// Delta/q.
void write_csv(std::ostream& out, const FractalGrid& g);

/// Reads write_csv output. The slice is not stored, so the result carries
/// Slice::identity(k).
FractalGrid read_csv(std::istream& in);

std::string rational_str(const Rational& r);

nlohmann::json to_json(const RationalPoint& t);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const OrbitGraph& g);

/// Gray relief of a two-axis grid: pixel round(255 Delta / max Delta), zeros
/// black, t1 left to right and t2 from top (t2 = 1) to bottom.
void write_pgm(std::ostream& out, const FractalGrid& g, bool binary = false);

struct TableOptions {
  int lo1 = 0, hi1 = -1;  // window on axis t1 (hi -1: up to q)
  int lo2 = 0, hi2 = -1;
  /// Print Delta / 2 instead of Delta; needs every entry even.
  bool halve = false;
  /// Blank out the cells with a1 + a2 >= q.
  bool mask_linear = false;
};

/// Integer table of a two-axis grid: rows t2 descending, zeros as ".".
std::string ascii_table(const FractalGrid& g, const TableOptions& opt = {});

}  // namespace syzgap
