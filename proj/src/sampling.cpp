#include "finmodal/sampling.hpp"

namespace finmodal {

Formula random_formula(Rng& rng, int max_depth,
                       const std::vector<std::string>& var_pool) {
  auto leaf = [&]() -> Formula {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(var_pool.size()) + 1);
    int c = pick(rng);
    if (c == 0) return Formula::top();
    if (c == 1) return Formula::bot();
    return Formula::var(var_pool[c - 2]);
  };
  if (max_depth <= 0) return leaf();
  // Weights: leaves 3, unary 5, binary 6, starred 1.
  std::uniform_int_distribution<int> pick(0, 14);
  int c = pick(rng);
  if (c < 3) return leaf();
  if (c < 5) return neg(random_formula(rng, max_depth - 1, var_pool));
  if (c < 7) return dia(random_formula(rng, max_depth - 1, var_pool));
  if (c < 8) return box(random_formula(rng, max_depth - 1, var_pool));
  if (c < 10)
    return conj(random_formula(rng, max_depth - 1, var_pool),
                random_formula(rng, max_depth - 1, var_pool));
  if (c < 12)
    return disj(random_formula(rng, max_depth - 1, var_pool),
                random_formula(rng, max_depth - 1, var_pool));
  if (c < 14)
    return impl(random_formula(rng, max_depth - 1, var_pool),
                random_formula(rng, max_depth - 1, var_pool));
  return (rng() & 1) ? dia_star(random_formula(rng, max_depth - 1, var_pool))
                     : box_star(random_formula(rng, max_depth - 1, var_pool));
}

Frame random_transitive_frame(Rng& rng, int n, double edge_prob) {
  Frame f = Frame::empty(n);
  std::bernoulli_distribution edge(edge_prob);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (edge(rng)) f.succ[x] |= point_bit(y);
  return transitive_closure(f);
}

TopSpace random_space(Rng& rng, int n, int generators) {
  std::vector<PointSet> family;
  family.reserve(generators);
  for (int i = 0; i < generators; ++i) family.push_back(random_subset(rng, n));
  return make_space(n, family, true);
}

}  // namespace finmodal
