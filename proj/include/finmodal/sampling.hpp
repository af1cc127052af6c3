#pragma once

#include <random>
#include <vector>

#include "finmodal/formula.hpp"
#include "finmodal/kripke.hpp"
#include "finmodal/topo.hpp"

namespace finmodal {

using Rng = std::mt19937_64;

/// Random formula of syntactic depth at most max_depth over the given
/// variable pool. Occasionally emits <*>/[*], which expand as usual.
Formula random_formula(Rng& rng, int max_depth,
                       const std::vector<std::string>& var_pool);

/// Transitive closure of a random relation on n points.
Frame random_transitive_frame(Rng& rng, int n, double edge_prob = 0.35);

/// Space generated by `generators` random subsets of an n-point carrier.
TopSpace random_space(Rng& rng, int n, int generators);

inline PointSet random_subset(Rng& rng, int n) {
  return rng() & full_set(n);
}

}  // namespace finmodal
