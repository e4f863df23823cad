#include "cheeger/signed.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

#include "cheeger/errors.hpp"
#include "cheeger/kernels.hpp"

namespace cheeger
{

Signature Signature::constant(Graph const &g, int sign)
{
  if (sign != 1 && sign != -1)
    throw ValidationError("signs must be +1 or -1");
  Signature s;
  for (int v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    s.adj_.emplace_back(nb.begin(), nb.end());
    s.signs_.emplace_back(nb.size(), sign);
  }
  return s;
}

Signature Signature::from_map(Graph const &g, std::map<Edge, int> const &signs)
{
  Signature s = constant(g, +1);
  for (auto const &[e, sign] : signs) {
    auto [u, v] = e;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
      throw ValidationError("signature names a non-edge (" + std::to_string(u) +
                            "," + std::to_string(v) + ")");
    if (sign != 1 && sign != -1)
      throw ValidationError("signature values must be +1 or -1");
    s.signs_[u][g.neighbor_index(u, v)] = sign;
    s.signs_[v][g.neighbor_index(v, u)] = sign;
  }
  return s;
}

int Signature::sign(int u, int v) const
{
  auto const &nb = adj_.at(u);
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v)
    throw ValidationError("no edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
  return signs_[u][it - nb.begin()];
}

std::map<Edge, int> Signature::to_map() const
{
  std::map<Edge, int> out;
  for (int u = 0; u < order(); ++u)
    for (std::size_t i = 0; i < adj_[u].size(); ++i)
      if (u <= adj_[u][i])
        out[{u, adj_[u][i]}] = signs_[u][i];
  return out;
}

bool Signature::is_constant(int sign) const
{
  return std::all_of(signs_.begin(), signs_.end(), [sign](auto const &row) {
    return std::all_of(row.begin(), row.end(), [sign](int s) { return s == sign; });
  });
}

SwitchingFunction::SwitchingFunction(VertexSet domain, std::vector<int> values)
: domain_(std::move(domain)), values_(std::move(values))
{
  if (values_.size() != domain_.universe())
    throw ValidationError("switching function size does not match its domain");
  for (std::size_t x = 0; x < values_.size(); ++x) {
    bool const inside = domain_.contains(static_cast<int>(x));
    if (inside ? values_[x] != 1 && values_[x] != -1 : values_[x] != 0)
      throw ValidationError("switching values must be +-1 on the domain, 0 off it");
  }
}

SwitchingFunction SwitchingFunction::constant(VertexSet domain, int value)
{
  std::vector<int> v(domain.universe(), 0);
  for (int x : domain.members())
    v[x] = value;
  return SwitchingFunction(std::move(domain), std::move(v));
}

SwitchingFunction SwitchingFunction::from_mask(VertexSet domain,
                                               std::uint64_t mask)
{
  std::vector<int> v(domain.universe(), 0);
  for (int x : domain.members())
    v[x] = (x < 64 && ((mask >> x) & 1u)) ? -1 : 1;
  return SwitchingFunction(std::move(domain), std::move(v));
}

std::uint64_t SwitchingFunction::minus_mask() const
{
  std::uint64_t m = 0;
  for (std::size_t x = 0; x < values_.size() && x < 64; ++x)
    if (values_[x] < 0)
      m |= std::uint64_t{1} << x;
  return m;
}

Signature switch_signature(Graph const &g, Signature const &sigma,
                           SwitchingFunction const &tau)
{
  int const n = g.order();
  if (tau.domain() != VertexSet::full(static_cast<std::size_t>(n)))
    throw ValidationError("switching must be defined on every vertex");
  std::map<Edge, int> signs;
  for (auto const &[e, s] : sigma.to_map()) {
    auto [u, v] = e;
    signs[e] = u == v ? s : tau(u) * s * tau(v);
  }
  return Signature::from_map(g, signs);
}

BalanceResult is_balanced(Graph const &g, Signature const &sigma)
{
  int const n = g.order();
  std::vector<int> tau(n, 0), parent(n, -1), depth(n, 0);
  BalanceResult r;
  for (int root = 0; root < n; ++root) {
    if (tau[root] != 0)
      continue;
    tau[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int const u = q.front();
      q.pop();
      auto nb = g.neighbors(u);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        int const v = nb[i];
        int const s = sigma.sign_at(u, static_cast<int>(i));
        if (tau[v] == 0) {
          tau[v] = s * tau[u];
          parent[v] = u;
          depth[v] = depth[u] + 1;
          q.push(v);
          continue;
        }
        if (tau[u] * s * tau[v] == 1)
          continue;
        if (u == v) {
          r.unbalanced_cycle = {u};
          return r;
        }
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
        r.unbalanced_cycle = a;
        r.unbalanced_cycle.insert(r.unbalanced_cycle.end(), b.rbegin(), b.rend());
        return r;
      }
    }
  }
  r.balanced = true;
  r.tau = SwitchingFunction(VertexSet::full(static_cast<std::size_t>(n)), tau);
  return r;
}

namespace
{

struct Induced
{
  kernels::MaskGraph mask;
  std::vector<int> vertices; // local index -> vertex
};

Induced induce(Graph const &g, Signature const &sigma, VertexSet const &v1)
{
  Induced out;
  out.vertices = v1.members();
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    local[out.vertices[i]] = static_cast<int>(i);
  auto &m = out.mask;
  m.n = static_cast<int>(out.vertices.size());
  m.nbr.assign(m.n, 0);
  m.neg.assign(m.n, 0);
  m.degree.assign(m.n, 0);
  for (int i = 0; i < m.n; ++i) {
    auto nb = g.neighbors(out.vertices[i]);
    for (std::size_t s = 0; s < nb.size(); ++s) {
      int const j = local[nb[s]];
      if (j < 0)
        continue;
      m.nbr[i] |= std::uint64_t{1} << j;
      ++m.degree[i];
      if (sigma.sign_at(out.vertices[i], static_cast<int>(s)) < 0)
        m.neg[i] |= std::uint64_t{1} << j;
    }
  }
  return out;
}

void check_inputs(Graph const &g, Signature const &sigma, VertexSet const &v1,
                  Caps const &caps)
{
  if (sigma.order() != g.order() ||
      v1.universe() != static_cast<std::size_t>(g.order()))
    throw ValidationError("signature or vertex set does not match the graph");
  if (static_cast<int>(v1.size()) > caps.subset_cap)
    throw CapExceeded("frustration enumeration over " +
                      std::to_string(v1.size()) + " vertices exceeds cap " +
                      std::to_string(caps.subset_cap));
}

SwitchingFunction lift(Graph const &g, Induced const &ind, std::uint64_t tau)
{
  std::vector<int> values(g.order(), 0);
  VertexSet domain(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < ind.vertices.size(); ++i) {
    domain.insert(ind.vertices[i]);
    values[ind.vertices[i]] = ((tau >> i) & 1u) ? -1 : 1;
  }
  return SwitchingFunction(std::move(domain), std::move(values));
}

} // namespace

FrustrationResult frustration_edge(Graph const &g, Signature const &sigma,
                                   VertexSet const &v1, double p,
                                   Caps const &caps, Execution exec)
{
  if (!(p >= 1.0) || !std::isfinite(p))
    throw ValidationError("frustration exponent p must be finite and >= 1");
  check_inputs(g, sigma, v1, caps);
  auto const ind = induce(g, sigma, v1);
  std::uint64_t const all =
      ind.mask.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ind.mask.n) - 1;
  auto const best = kernels::edge_frustration_min(ind.mask, all, exec);
  // Each frustrated edge contributes 2^p, each negative loop 2^(p-1).
  long const units = 2L * best.frustrated + kernels::negative_loops(ind.mask, all);
  FrustrationResult r;
  if (p == std::floor(p) && p <= 40.0)
    r.value = Rational(units * (std::int64_t{1} << (static_cast<int>(p) - 1)));
  else
    r.value = std::pow(2.0, p - 1.0) * static_cast<double>(units);
  r.tau = lift(g, ind, best.tau);
  return r;
}

FrustrationResult frustration_sup(Graph const &g, Signature const &sigma,
                                  VertexMeasure const &pi, VertexSet const &v1,
                                  Caps const &caps, Execution exec)
{
  check_inputs(g, sigma, v1, caps);
  if (pi.size() != static_cast<std::size_t>(g.order()))
    throw ValidationError("vertex measure does not match the graph");
  auto const ind = induce(g, sigma, v1);
  std::uint64_t const all =
      ind.mask.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ind.mask.n) - 1;
  FrustrationResult r;
  if (pi.is_integral()) {
    std::vector<long> w;
    for (int v : ind.vertices)
      w.push_back(static_cast<long>(pi[v]));
    auto const best = kernels::sup_frustration_min<long>(ind.mask, all, w, exec);
    r.value = Rational(best.weight);
    r.tau = lift(g, ind, best.tau);
  } else {
    std::vector<double> w;
    for (int v : ind.vertices)
      w.push_back(pi[v]);
    auto const best = kernels::sup_frustration_min<double>(ind.mask, all, w, exec);
    r.value = best.weight;
    r.tau = lift(g, ind, best.tau);
  }
  return r;
}

} // namespace cheeger
