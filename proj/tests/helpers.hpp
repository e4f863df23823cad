#ifndef CHEEGER_TESTS_HELPERS_HPP
#define CHEEGER_TESTS_HELPERS_HPP

#include <map>
#include <vector>

#include "cheeger/graph.hpp"
#include "cheeger/rng.hpp"
#include "cheeger/signed.hpp"

namespace testing
{

inline cheeger::Graph random_graph(cheeger::Rng &rng, int n, double p, double loop_p = 0.0)
{
  std::vector<cheeger::Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u; v < n; ++v)
      if (rng.uniform() < (u == v ? loop_p : p))
        e.emplace_back(u, v);
  return cheeger::Graph(n, e);
}

inline cheeger::Signature random_signature(cheeger::Rng &rng, cheeger::Graph const &g)
{
  std::map<cheeger::Edge, int> m;
  for (auto e : g.edges())
    m[e] = rng.below(2) ? -1 : 1;
  return cheeger::Signature::from_map(g, m);
}

inline cheeger::VertexSet random_set(cheeger::Rng &rng, int n)
{
  cheeger::VertexSet s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    if (rng.below(2))
      s.insert(i);
  return s;
}

inline cheeger::SwitchingFunction random_switch(cheeger::Rng &rng, int n)
{
  std::vector<int> v(static_cast<std::size_t>(n));
  for (auto &x : v)
    x = rng.below(2) ? -1 : 1;
  return cheeger::SwitchingFunction(cheeger::VertexSet::full(static_cast<std::size_t>(n)), v);
}

inline std::vector<double> weights(cheeger::VertexMeasure const &pi)
{
  return {pi.weights().begin(), pi.weights().end()};
}

} // namespace testing

#endif
