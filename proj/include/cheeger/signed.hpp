#ifndef CHEEGER_SIGNED_HPP
#define CHEEGER_SIGNED_HPP

#include <map>
#include <vector>

#include "config.hpp"
#include "graph.hpp"
#include "number.hpp"

namespace cheeger
{

/// A +-1 sign on every edge of a graph (loops included). Signs are stored per
/// adjacency slot, so sign_at(u, i) belongs to the edge {u, neighbors(u)[i]}.
class Signature
{
public:
  Signature() = default;

  static Signature all_plus(Graph const &g) { return constant(g, +1); }
  static Signature all_minus(Graph const &g) { return constant(g, -1); }
  static Signature constant(Graph const &g, int sign);

  /// Keys are edges in either orientation; edges not listed get +1.
  static Signature from_map(Graph const &g, std::map<Edge, int> const &signs);

  int sign(int u, int v) const;
  int sign_at(int u, int slot) const { return signs_[u][slot]; }

  /// Every edge (u <= v) with its sign.
  std::map<Edge, int> to_map() const;

  bool is_constant(int sign) const;
  int order() const { return static_cast<int>(adj_.size()); }

  friend bool operator==(Signature const &, Signature const &) = default;

private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> signs_;
};

/// tau: D -> {+1,-1} on a vertex subset D. Entries outside D are 0.
class SwitchingFunction
{
public:
  SwitchingFunction() = default;
  SwitchingFunction(VertexSet domain, std::vector<int> values);

  static SwitchingFunction constant(VertexSet domain, int value);
  /// Bit x of mask set means tau(x) = -1.
  static SwitchingFunction from_mask(VertexSet domain, std::uint64_t mask);

  VertexSet const &domain() const { return domain_; }
  int operator()(int x) const { return values_[x]; }
  std::vector<int> const &values() const { return values_; }
  std::uint64_t minus_mask() const;

  friend bool operator==(SwitchingFunction const &,
                         SwitchingFunction const &) = default;

private:
  VertexSet domain_;
  std::vector<int> values_;
};

/// sigma^tau_xy = tau(x) sigma_xy tau(y); loops keep their sign.
Signature switch_signature(Graph const &g, Signature const &sigma,
                           SwitchingFunction const &tau);

struct BalanceResult
{
  bool balanced = false;
  SwitchingFunction tau;               // sigma^tau == +1 when balanced
  std::vector<int> unbalanced_cycle;   // closed walk with sign -1 otherwise
};

BalanceResult is_balanced(Graph const &g, Signature const &sigma);

struct FrustrationResult
{
  Number value;
  SwitchingFunction tau;
};

/// Edge-form p-frustration of the signed subgraph induced on V1, minimized
/// over all switchings of V1. Exact (rational) whenever p is an integer.
FrustrationResult frustration_edge(Graph const &g, Signature const &sigma,
                                   VertexSet const &v1, double p = 1.0,
                                   Caps const &caps = {},
                                   Execution exec = Execution::parallel);

/// Sup-form frustration: (1/2) sum over V1 of pi(x) times the largest
/// disagreement |tau(x) - sigma_xy tau(y)| over neighbors y in V1. A vertex
/// without neighbors in V1 contributes 0.
FrustrationResult frustration_sup(Graph const &g, Signature const &sigma,
                                  VertexMeasure const &pi, VertexSet const &v1,
                                  Caps const &caps = {},
                                  Execution exec = Execution::parallel);

} // namespace cheeger

#endif // CHEEGER_SIGNED_HPP
