#ifndef CHEEGER_GRAPH_HPP
#define CHEEGER_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "index_set.hpp"

namespace cheeger
{

using Edge = std::pair<int, int>;

/// Finite undirected graph that may carry self-loops. A loop at v is stored
/// as v in neighbors(v) and adds one to the degree of v. Parallel edges are
/// not representable.
class Graph
{
public:
  Graph() = default;

  /// Edges are deduplicated; (u,v) and (v,u) describe the same edge.
  Graph(int n, std::span<const Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }

  /// Sorted neighbor list, including v itself when v carries a loop.
  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const;
  bool has_loop(int v) const { return adjacent(v, v); }

  /// Position of v in neighbors(u), or -1.
  int neighbor_index(int u, int v) const;

  /// Canonical edge list: pairs (u,v) with u <= v in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  long volume(VertexSet const &s) const;
  long volume() const;

  int max_degree() const;
  int min_degree() const;
  std::optional<int> regular_degree() const;

  friend bool operator==(Graph const &, Graph const &) = default;

private:
  std::vector<std::vector<int>> adj_;
};

/// Positive vertex weights pi. The counting measure is pi = 1.
class VertexMeasure
{
public:
  VertexMeasure() = default;
  explicit VertexMeasure(std::vector<double> weights);

  static VertexMeasure counting(int n)
  { return VertexMeasure(std::vector<double>(static_cast<std::size_t>(n), 1.0)); }

  std::size_t size() const { return w_.size(); }
  double operator[](int v) const { return w_[v]; }
  std::span<const double> weights() const { return w_; }

  bool is_counting() const;
  /// True when every weight is a (positive) integer, so sums stay exact.
  bool is_integral() const;

  double total(VertexSet const &s) const;

private:
  std::vector<double> w_;
};

enum class BoundaryKind
{
  edge,  // edges {x,y} with x in V1, y outside
  out,   // outside vertices with a neighbor in V1
  in,    // vertices of V1 with a neighbor outside
  sym    // in | out
};

struct Boundary
{
  VertexSet vertices;      // vertex kinds
  std::vector<Edge> edges; // edge kind, as (inside, outside)
  std::size_t size = 0;
};

Boundary boundary(Graph const &g, VertexSet const &v1, BoundaryKind kind);

/// V1 minus its inner boundary.
VertexSet interior(Graph const &g, VertexSet const &v1);

/// Number of vertices of L with a neighbor in L; a loop counts.
int inner_neighbor_count(Graph const &g, VertexSet const &l);

struct BipartiteResult
{
  bool bipartite = false;
  std::vector<int> side;      // 0/1 coloring when bipartite
  std::vector<int> odd_cycle; // closed walk of odd length otherwise
};

BipartiteResult is_bipartite(Graph const &g);
bool is_connected(Graph const &g);
std::vector<int> connected_components(Graph const &g);

/// Stable color refinement, starting from (degree, has loop). Colors are
/// canonical: equal colors in two graphs mean equal refinement histories.
std::vector<int> refine_colors(Graph const &g);

bool is_automorphism(Graph const &g, std::span<const int> perm);

struct TransitivityResult
{
  bool transitive = false;
  /// When transitive, witnesses[u] is an automorphism mapping 0 to u.
  std::vector<std::vector<int>> witnesses;
};

/// Backtracking automorphism search, refined by color classes. Throws
/// CapExceeded above n_cap vertices.
TransitivityResult is_vertex_transitive(Graph const &g, int n_cap = 16);

// A few standard families, mostly for tests and descriptors.
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
Graph hypercube_graph(int dim);
Graph petersen_graph();

} // namespace cheeger

#endif // CHEEGER_GRAPH_HPP
