#include "cheeger/cayley.hpp"

#include "cheeger/errors.hpp"

namespace cheeger
{

namespace
{

void check_universe(FiniteGroup const &x, GroupSubset const &s)
{
  if (s.universe() != static_cast<std::size_t>(x.order()))
    throw ValidationError("subset universe does not match the group order");
}

void require_symmetric(FiniteGroup const &x, GroupSubset const &s)
{
  check_universe(x, s);
  if (!is_symmetric_set(x, s))
    throw ValidationError("S is not closed under inverses");
}

void require_normal(FiniteGroup const &x, GroupSubset const &s)
{
  check_universe(x, s);
  if (!is_normal_set(x, s))
    throw ValidationError("S is not closed under conjugation");
}

bool some_index2_avoids(FiniteGroup const &x, GroupSubset const &s)
{
  for (auto const &h : index2_subgroups(x))
    if ((h & s).empty())
      return true;
  return false;
}

} // namespace

Graph build_cayley(FiniteGroup const &x, GroupSubset const &s)
{
  require_symmetric(x, s);
  int const n = x.order();
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (s.contains(x.mul(a, x.inverse(b))))
        edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph build_cayley_sum(FiniteGroup const &x, GroupSubset const &s)
{
  require_normal(x, s);
  int const n = x.order();
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (s.contains(x.mul(a, b)))
        edges.emplace_back(a, b);
  return Graph(n, edges);
}

bool cayley_bipartite_algebraic(FiniteGroup const &x, GroupSubset const &s)
{
  require_symmetric(x, s);
  return some_index2_avoids(x, s);
}

bool cayley_sum_connected_algebraic(FiniteGroup const &x, GroupSubset const &s)
{
  require_normal(x, s);
  if (generated_subgroup(x, s).size() != static_cast<std::size_t>(x.order()))
    return false;
  auto const h = generated_subgroup(x, inverse_product_set(x, s));
  return 2 * h.size() >= static_cast<std::size_t>(x.order());
}

bool cayley_sum_bipartite_sufficient(FiniteGroup const &x, GroupSubset const &s)
{
  require_normal(x, s);
  return some_index2_avoids(x, s);
}

} // namespace cheeger
