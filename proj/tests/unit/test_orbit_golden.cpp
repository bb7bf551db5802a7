#include <catch_amalgamated.hpp>

#include "support.hpp"
#include "syzgap/operators.hpp"

using namespace syzgap;
using namespace syzgap::testing;

// Recorded on first exploration; about a minute on one core.
TEST_CASE("orbit of <x,y> over the F_9 example forms closes at depth 3") {
  Cell c = xy_cell(example_forms(f9()));
  auto g = orbit_explore(c, 3);
  CHECK(g.closed);
  CHECK(g.nodes.size() == 53);
  int linear = 0;
  for (const auto& n : g.nodes) linear += n.linear;
  CHECK(linear == 1);
  // Every nonlinear node is expanded by all 3^4 magnifications.
  CHECK(g.edges.size() == static_cast<std::size_t>(52 * 81));
  for (const auto& n : g.nodes) CHECK(n.depth <= 3);
}
