#include "cheeger/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>

#include "cheeger/errors.hpp"

namespace cheeger
{

Graph::Graph(int n, std::span<const Edge> edges)
: adj_(static_cast<std::size_t>(n))
{
  if (n < 0)
    throw ValidationError("negative vertex count");
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ValidationError("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") outside 0.." +
                            std::to_string(n - 1));
    adj_[u].push_back(v);
    if (u != v)
      adj_[v].push_back(u);
  }
  for (auto &nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
}

bool Graph::adjacent(int u, int v) const
{
  auto const &nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::neighbor_index(int u, int v) const
{
  auto const &nb = adj_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v)
    return -1;
  return static_cast<int>(it - nb.begin());
}

std::vector<Edge> Graph::edges() const
{
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      if (u <= v)
        out.emplace_back(u, v);
  return out;
}

std::size_t Graph::edge_count() const
{
  std::size_t c = 0;
  for (int u = 0; u < order(); ++u)
    for (int v : adj_[u])
      c += (u <= v);
  return c;
}

long Graph::volume(VertexSet const &s) const
{
  long vol = 0;
  for (int v : s.members())
    vol += degree(v);
  return vol;
}

long Graph::volume() const
{
  long vol = 0;
  for (int v = 0; v < order(); ++v)
    vol += degree(v);
  return vol;
}

int Graph::max_degree() const
{
  int d = 0;
  for (int v = 0; v < order(); ++v)
    d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const
{
  if (order() == 0)
    return 0;
  int d = degree(0);
  for (int v = 1; v < order(); ++v)
    d = std::min(d, degree(v));
  return d;
}

std::optional<int> Graph::regular_degree() const
{
  if (order() == 0 || min_degree() != max_degree())
    return std::nullopt;
  return max_degree();
}

VertexMeasure::VertexMeasure(std::vector<double> weights)
: w_(std::move(weights))
{
  for (double x : w_)
    if (!(x > 0.0) || !std::isfinite(x))
      throw ValidationError("vertex measure must be positive and finite");
}

bool VertexMeasure::is_counting() const
{
  return std::all_of(w_.begin(), w_.end(), [](double x) { return x == 1.0; });
}

bool VertexMeasure::is_integral() const
{
  return std::all_of(w_.begin(), w_.end(), [](double x) {
    return x == std::floor(x) && x < 9.0e15;
  });
}

double VertexMeasure::total(VertexSet const &s) const
{
  double t = 0.0;
  for (int v : s.members())
    t += w_[v];
  return t;
}

Boundary boundary(Graph const &g, VertexSet const &v1, BoundaryKind kind)
{
  auto const n = static_cast<std::size_t>(g.order());
  if (v1.universe() != n)
    throw ValidationError("vertex set universe does not match the graph");
  Boundary b;
  b.vertices = VertexSet(n);
  for (int x : v1.members())
    for (int y : g.neighbors(x)) {
      if (v1.contains(y))
        continue;
      switch (kind) {
      case BoundaryKind::edge:
        b.edges.emplace_back(x, y);
        break;
      case BoundaryKind::out:
        b.vertices.insert(y);
        break;
      case BoundaryKind::in:
        b.vertices.insert(x);
        break;
      case BoundaryKind::sym:
        b.vertices.insert(x);
        b.vertices.insert(y);
        break;
      }
    }
  b.size = kind == BoundaryKind::edge ? b.edges.size() : b.vertices.size();
  return b;
}

VertexSet interior(Graph const &g, VertexSet const &v1)
{
  return v1 - boundary(g, v1, BoundaryKind::in).vertices;
}

int inner_neighbor_count(Graph const &g, VertexSet const &l)
{
  int c = 0;
  for (int x : l.members())
    for (int y : g.neighbors(x))
      if (l.contains(y)) {
        ++c;
        break;
      }
  return c;
}

BipartiteResult is_bipartite(Graph const &g)
{
  int const n = g.order();
  BipartiteResult r;
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0)
      continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (color[v] < 0) {
          color[v] = 1 - color[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
        } else if (color[v] == color[u]) {
          // Tree paths to the common ancestor plus the edge uv close an odd walk.
          std::vector<int> a{u}, b{v};
          int x = u, y = v;
          while (depth[x] > depth[y]) {
            x = parent[x];
            a.push_back(x);
          }
          while (depth[y] > depth[x]) {
            y = parent[y];
            b.push_back(y);
          }
          while (x != y) {
            x = parent[x];
            y = parent[y];
            a.push_back(x);
            b.push_back(y);
          }
          b.pop_back();
          r.odd_cycle = a;
          r.odd_cycle.insert(r.odd_cycle.end(), b.rbegin(), b.rend());
          if (u == v)
            r.odd_cycle = {u};
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  r.side = std::move(color);
  return r;
}

std::vector<int> connected_components(Graph const &g)
{
  int const n = g.order();
  std::vector<int> comp(n, -1);
  int c = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0)
      continue;
    std::queue<int> q;
    q.push(s);
    comp[s] = c;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (comp[v] < 0) {
          comp[v] = c;
          q.push(v);
        }
    }
    ++c;
  }
  return comp;
}

bool is_connected(Graph const &g)
{
  if (g.order() == 0)
    return true;
  auto comp = connected_components(g);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<int> refine_colors(Graph const &g)
{
  int const n = g.order();
  using Signature = std::pair<int, std::vector<int>>;

  auto rank = [n](std::vector<Signature> const &sigs) {
    std::vector<Signature> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(n);
    for (int v = 0; v < n; ++v)
      out[v] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) -
          sorted.begin());
    return std::make_pair(out, static_cast<int>(sorted.size()));
  };

  std::vector<Signature> sigs(n);
  for (int v = 0; v < n; ++v)
    sigs[v] = {g.degree(v), {g.has_loop(v) ? 1 : 0}};
  auto [colors, count] = rank(sigs);

  for (;;) {
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      for (int w : g.neighbors(v))
        nb.push_back(colors[w]);
      std::sort(nb.begin(), nb.end());
      sigs[v] = {colors[v], std::move(nb)};
    }
    auto [next, next_count] = rank(sigs);
    if (next_count == count)
      return colors;
    colors = std::move(next);
    count = next_count;
  }
}

bool is_automorphism(Graph const &g, std::span<const int> perm)
{
  int const n = g.order();
  if (static_cast<int>(perm.size()) != n)
    return false;
  std::vector<char> hit(n, 0);
  for (int p : perm) {
    if (p < 0 || p >= n || hit[p])
      return false;
    hit[p] = 1;
  }
  for (int u = 0; u < n; ++u) {
    if (g.degree(u) != g.degree(perm[u]))
      return false;
    for (int v : g.neighbors(u))
      if (!g.adjacent(perm[u], perm[v]))
        return false;
  }
  return true;
}

namespace
{

class AutomorphismSearch
{
public:
  AutomorphismSearch(Graph const &g, std::vector<int> const &colors)
  : g_(g), colors_(colors), n_(g.order())
  {
    // Assign vertices in BFS order so most candidates are pinned by an
    // already-mapped neighbor.
    std::vector<char> seen(n_, 0);
    for (int s = 0; s < n_; ++s) {
      if (seen[s])
        continue;
      std::queue<int> q;
      q.push(s);
      seen[s] = 1;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        order_.push_back(u);
        for (int v : g_.neighbors(u))
          if (!seen[v]) {
            seen[v] = 1;
            q.push(v);
          }
      }
    }
  }

  std::optional<std::vector<int>> find(int target)
  {
    int first = order_[0];
    if (colors_[first] != colors_[target])
      return std::nullopt;
    map_.assign(n_, -1);
    used_.assign(n_, 0);
    map_[first] = target;
    used_[target] = 1;
    if (extend(1))
      return map_;
    return std::nullopt;
  }

private:
  bool consistent(int v, int w) const
  {
    for (int i = 0; i < n_; ++i) {
      int a = order_[i];
      if (map_[a] < 0)
        continue;
      if (g_.adjacent(v, a) != g_.adjacent(w, map_[a]))
        return false;
    }
    return g_.has_loop(v) == g_.has_loop(w);
  }

  bool extend(std::size_t pos)
  {
    if (pos == order_.size())
      return true;
    int v = order_[pos];
    for (int w = 0; w < n_; ++w) {
      if (used_[w] || colors_[w] != colors_[v] || !consistent(v, w))
        continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(pos + 1))
        return true;
      map_[v] = -1;
      used_[w] = 0;
    }
    return false;
  }

  Graph const &g_;
  std::vector<int> const &colors_;
  int n_;
  std::vector<int> order_;
  std::vector<int> map_;
  std::vector<char> used_;
};

} // namespace

TransitivityResult is_vertex_transitive(Graph const &g, int n_cap)
{
  int const n = g.order();
  if (n > n_cap)
    throw CapExceeded("vertex-transitivity search limited to " +
                      std::to_string(n_cap) + " vertices, graph has " +
                      std::to_string(n));
  TransitivityResult r;
  if (n == 0) {
    r.transitive = true;
    return r;
  }
  auto colors = refine_colors(g);
  if (std::any_of(colors.begin(), colors.end(),
                  [&](int c) { return c != colors[0]; }))
    return r;

  AutomorphismSearch search(g, colors);
  // The search always fixes the image of the first BFS vertex, which is 0.
  std::vector<std::vector<int>> witnesses(n);
  for (int u = 0; u < n; ++u) {
    auto found = search.find(u);
    if (!found)
      return r;
    witnesses[u] = std::move(*found);
  }
  r.transitive = true;
  r.witnesses = std::move(witnesses);
  return r;
}

Graph cycle_graph(int n)
{
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

Graph path_graph(int n)
{
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i)
    e.emplace_back(i, i + 1);
  return Graph(n, e);
}

Graph complete_graph(int n)
{
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e.emplace_back(i, j);
  return Graph(n, e);
}

Graph hypercube_graph(int dim)
{
  int const n = 1 << dim;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < dim; ++b)
      if (v < (v ^ (1 << b)))
        e.emplace_back(v, v ^ (1 << b));
  return Graph(n, e);
}

Graph petersen_graph()
{
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);         // outer cycle
    e.emplace_back(i, i + 5);               // spokes
    e.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
  }
  return Graph(10, e);
}

} // namespace cheeger
