#ifndef CHEEGER_CAYLEY_HPP
#define CHEEGER_CAYLEY_HPP

#include "graph.hpp"
#include "group.hpp"

namespace cheeger
{

/// C(X,S): x ~ y iff x y^-1 in S. Requires S inverse-closed.
Graph build_cayley(FiniteGroup const &x, GroupSubset const &s);

/// C_sum(X,S): x ~ y iff x y in S, with a loop at x iff x^2 in S.
/// Requires S closed under conjugation.
Graph build_cayley_sum(FiniteGroup const &x, GroupSubset const &s);

/// C(X,S) is bipartite iff some index-two subgroup avoids S.
bool cayley_bipartite_algebraic(FiniteGroup const &x, GroupSubset const &s);

/// C_sum(X,S) is connected iff S generates X and <S^-1 S> has index <= 2.
bool cayley_sum_connected_algebraic(FiniteGroup const &x, GroupSubset const &s);

/// Sufficient (not necessary) condition for C_sum(X,S) to be bipartite:
/// an index-two subgroup disjoint from S. False means "unknown".
bool cayley_sum_bipartite_sufficient(FiniteGroup const &x, GroupSubset const &s);

} // namespace cheeger

#endif // CHEEGER_CAYLEY_HPP
