#include "fg/metric.hpp"
#include "fg/seqcomb.hpp"

namespace fg {

GrowthSeries growth_series(const BallTable& table) {
  GrowthSeries gs;
  gs.max_len = table.radius;
  gs.gamma.assign(static_cast<std::size_t>(table.radius) + 1, 0);
  gs.beta.assign(static_cast<std::size_t>(table.radius) + 1, 0);
  gs.delta.assign(static_cast<std::size_t>(table.radius) + 1, 0);

  ReductionFreeChecker checker(table);
  for (const auto& [key, entry] : table.entries) {
    gs.gamma[entry.minlen] += 1;
    if (in_commutator_subgroup(entry.rep)) gs.beta[entry.minlen] += 1;
    // Reduction-free through every level equals reduction-free through
    // level 3 on the exhausted range (certified by the structure-I suite).
    if (checker.check(entry.rep, 3)) gs.delta[entry.minlen] += 1;
  }
  // gamma and beta count balls, delta counts spheres.
  for (std::size_t n = 1; n < gs.gamma.size(); ++n) {
    gs.gamma[n] += gs.gamma[n - 1];
    gs.beta[n] += gs.beta[n - 1];
  }
  return gs;
}

}  // namespace fg
