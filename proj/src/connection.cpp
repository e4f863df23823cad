#include "cheeger/connection.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>

#include "cheeger/errors.hpp"
#include "cheeger/kernels.hpp"
#include "cheeger/rng.hpp"

namespace cheeger
{

namespace
{

constexpr double unitary_tol = 1e-12;
constexpr std::uint64_t eta_stream = 0x657461ULL;

CMatrix identity(int k)
{
  CMatrix m(k);
  for (int i = 0; i < k; ++i)
    m(i, i) = 1.0;
  return m;
}

CMatrix adjoint(CMatrix const &m)
{
  CMatrix out(m.n);
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      out(i, j) = std::conj(m(j, i));
  return out;
}

CMatrix product(CMatrix const &a, CMatrix const &b)
{
  CMatrix out(a.n);
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      Complex s = 0.0;
      for (int l = 0; l < a.n; ++l)
        s += a(i, l) * b(l, j);
      out(i, j) = s;
    }
  return out;
}

double distance_to_identity(CMatrix const &m)
{
  double d = 0.0;
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      d = std::max(d, std::abs(m(i, j) - (i == j ? 1.0 : 0.0)));
  return d;
}

int slot_of(std::vector<std::vector<int>> const &adj, int u, int v)
{
  if (u < 0 || u >= static_cast<int>(adj.size()))
    return -1;
  auto const &nb = adj[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  return (it == nb.end() || *it != v) ? -1 : static_cast<int>(it - nb.begin());
}

std::vector<std::vector<int>> copy_adjacency(Graph const &g)
{
  std::vector<std::vector<int>> adj;
  for (int v = 0; v < g.order(); ++v) {
    auto nb = g.neighbors(v);
    adj.emplace_back(nb.begin(), nb.end());
  }
  return adj;
}

} // namespace

Connection::Connection(Graph const &g, int k)
: k_(k), adj_(copy_adjacency(g))
{
  if (k < 1)
    throw ValidationError("connection dimension must be positive");
  for (auto const &nb : adj_)
    blocks_.emplace_back(nb.size(), identity(k));
}

void Connection::set(int u, int v, CMatrix const &m)
{
  int const su = slot_of(adj_, u, v);
  if (su < 0)
    throw ValidationError("connection names a non-edge (" + std::to_string(u) +
                          "," + std::to_string(v) + ")");
  if (m.n != k_)
    throw ValidationError("connection block has the wrong dimension");
  auto const adj = adjoint(m);
  if (distance_to_identity(product(m, adj)) > unitary_tol)
    throw ValidationError("connection block on (" + std::to_string(u) + "," +
                          std::to_string(v) + ") is not unitary");
  if (u == v && distance_to_identity(product(m, m)) > unitary_tol)
    throw ValidationError("loop block at " + std::to_string(u) +
                          " is not an involution");
  blocks_[u][su] = m;
  if (u != v)
    blocks_[v][slot_of(adj_, v, u)] = adj;
}

CMatrix const &Connection::get(int u, int v) const
{
  int const s = slot_of(adj_, u, v);
  if (s < 0)
    throw ValidationError("no edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
  return blocks_[u][s];
}

bool Connection::is_real() const
{
  for (auto const &row : blocks_)
    for (auto const &m : row)
      for (auto const &z : m.a)
        if (z.imag() != 0.0)
          return false;
  return true;
}

Connection Connection::from_signature(Graph const &g, Signature const &sigma)
{
  Connection c(g, 1);
  for (auto const &[e, s] : sigma.to_map()) {
    CMatrix m(1);
    m(0, 0) = static_cast<double>(s);
    c.set(e.first, e.second, m);
  }
  return c;
}

CyclicConnection::CyclicConnection(Graph const &g, int k)
: k_(k), adj_(copy_adjacency(g))
{
  if (k < 1)
    throw ValidationError("cyclic order must be positive");
  for (auto const &nb : adj_)
    exps_.emplace_back(nb.size(), 0);
}

void CyclicConnection::set(int u, int v, int j)
{
  int const su = slot_of(adj_, u, v);
  if (su < 0)
    throw ValidationError("connection names a non-edge (" + std::to_string(u) +
                          "," + std::to_string(v) + ")");
  j = ((j % k_) + k_) % k_;
  if (u == v && (2 * j) % k_ != 0)
    throw ValidationError("loop exponent at " + std::to_string(u) +
                          " is not an involution");
  exps_[u][su] = j;
  if (u != v)
    exps_[v][slot_of(adj_, v, u)] = (k_ - j) % k_;
}

int CyclicConnection::exponent(int u, int v) const
{
  int const s = slot_of(adj_, u, v);
  if (s < 0)
    throw ValidationError("no edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ")");
  return exps_[u][s];
}

Complex CyclicConnection::root(int j) const
{
  j = ((j % k_) + k_) % k_;
  if ((4 * j) % k_ == 0) {
    switch ((4 * j / k_) % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
    }
  }
  double const a = 2.0 * std::numbers::pi * j / k_;
  return {std::cos(a), std::sin(a)};
}

Connection CyclicConnection::to_connection(Graph const &g) const
{
  Connection c(g, 1);
  for (int u = 0; u < order(); ++u)
    for (std::size_t i = 0; i < adj_[u].size(); ++i)
      if (u <= adj_[u][i]) {
        CMatrix m(1);
        m(0, 0) = root(exps_[u][i]);
        c.set(u, adj_[u][i], m);
      }
  return c;
}

Signature CyclicConnection::to_signature(Graph const &g) const
{
  if (k_ > 2)
    throw ValidationError("only k <= 2 cyclic connections are signatures");
  std::map<Edge, int> signs;
  for (int u = 0; u < order(); ++u)
    for (std::size_t i = 0; i < adj_[u].size(); ++i)
      if (u <= adj_[u][i])
        signs[{u, adj_[u][i]}] = exps_[u][i] == 0 ? 1 : -1;
  return Signature::from_map(g, signs);
}

CyclicConnection CyclicConnection::from_signature(Graph const &g,
                                                  Signature const &sigma)
{
  CyclicConnection c(g, 2);
  for (auto const &[e, s] : sigma.to_map())
    c.set(e.first, e.second, s < 0 ? 1 : 0);
  return c;
}

SpectralReport connection_laplacian_spectrum(Graph const &g, Connection const &c)
{
  require_no_isolated(g);
  if (c.order() != g.order())
    throw ValidationError("connection does not match the graph");
  int const n = g.order(), k = c.k();
  CMatrix m(n * k);
  for (int x = 0; x < n; ++x) {
    auto nb = g.neighbors(x);
    for (std::size_t s = 0; s < nb.size(); ++s) {
      int const y = nb[s];
      double const scale = std::sqrt(static_cast<double>(g.degree(x)) * g.degree(y));
      auto const &b = c.at(x, static_cast<int>(s));
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
          m(x * k + i, y * k + j) = b(i, j) / scale;
    }
  }
  for (int i = 0; i < n * k; ++i)
    for (int j = 0; j < n * k; ++j)
      m(i, j) = (i == j ? 1.0 : 0.0) - m(i, j);

  if (c.is_real()) {
    Matrix<double> r(n * k);
    for (std::size_t i = 0; i < m.a.size(); ++i)
      r.a[i] = m.a[i].real();
    return real_spectrum(r, SpectrumKind::connection_laplacian);
  }
  return hermitian_spectrum(m, SpectrumKind::connection_laplacian);
}

SpectralReport connection_laplacian_spectrum(Graph const &g,
                                             CyclicConnection const &c)
{
  return connection_laplacian_spectrum(g, c.to_connection(g));
}

namespace
{

struct LocalCyclic
{
  kernels::CyclicMaskGraph graph;
  std::vector<int> vertices;
  std::vector<double> weights;
};

LocalCyclic localize(Graph const &g, CyclicConnection const &c,
                     VertexMeasure const &pi, std::vector<int> vertices)
{
  LocalCyclic out;
  out.vertices = std::move(vertices);
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    local[out.vertices[i]] = static_cast<int>(i);
  int const m = static_cast<int>(out.vertices.size());
  auto &cg = out.graph;
  cg.n = m;
  cg.k = c.k();
  cg.nbr.assign(m, 0);
  cg.exponent.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i) {
    int const x = out.vertices[i];
    out.weights.push_back(pi[x]);
    auto nb = g.neighbors(x);
    for (std::size_t s = 0; s < nb.size(); ++s) {
      int const j = local[nb[s]];
      if (j < 0)
        continue;
      cg.nbr[i] |= std::uint64_t{1} << j;
      cg.exponent[i][j] = c.exponent_at(x, static_cast<int>(s));
    }
  }
  return out;
}

void check_cyclic_budget(int size, int k, Caps const &caps)
{
  if (k > caps.cyclic_max_k || size > caps.cyclic_max_size)
    throw CapExceeded("cyclic enumeration limited to k <= " +
                      std::to_string(caps.cyclic_max_k) + " on at most " +
                      std::to_string(caps.cyclic_max_size) + " vertices (k = " +
                      std::to_string(k) + ", " + std::to_string(size) +
                      " vertices)");
}

void check_shapes(Graph const &g, int order, VertexMeasure const &pi)
{
  if (order != g.order() || pi.size() != static_cast<std::size_t>(g.order()))
    throw ValidationError("connection or measure does not match the graph");
}

} // namespace

EtaResult frustration_eta_cyclic(Graph const &g, CyclicConnection const &c,
                                 VertexMeasure const &pi, VertexSet const &v1,
                                 Caps const &caps)
{
  check_shapes(g, c.order(), pi);
  check_cyclic_budget(static_cast<int>(v1.size()), c.k(), caps);
  auto const loc = localize(g, c, pi, v1.members());
  std::uint64_t const all = (std::uint64_t{1} << loc.graph.n) - 1;
  std::vector<int> tau;
  EtaResult r;
  r.value = kernels::cyclic_sup_min(loc.graph, all, loc.weights, tau);
  r.exponents.assign(g.order(), 0);
  r.tau.assign(g.order(), {});
  for (std::size_t i = 0; i < loc.vertices.size(); ++i) {
    int const x = loc.vertices[i];
    r.exponents[x] = tau[i];
    r.tau[x] = {c.root(tau[i])};
  }
  return r;
}

namespace
{

using Vec = std::vector<Complex>;

Vec act(CMatrix const &m, Vec const &v)
{
  Vec out(v.size());
  for (int i = 0; i < m.n; ++i) {
    Complex s = 0.0;
    for (int j = 0; j < m.n; ++j)
      s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double distance(Vec const &a, Vec const &b)
{
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

double norm(Vec const &a)
{
  double s = 0.0;
  for (auto const &z : a)
    s += std::norm(z);
  return std::sqrt(s);
}

struct SphereProblem
{
  Graph const &g;
  Connection const &c;
  std::vector<double> pi;
  std::vector<int> domain;    // vertices
  std::vector<char> inside;   // by vertex
};

double sphere_objective(SphereProblem const &p, std::vector<Vec> const &tau)
{
  double s = 0.0;
  for (int x : p.domain) {
    auto nb = p.g.neighbors(x);
    double sup = 0.0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      int const y = nb[i];
      if (!p.inside[y])
        continue;
      sup = std::max(sup, distance(tau[x], act(p.c.at(x, static_cast<int>(i)), tau[y])));
    }
    s += p.pi[x] * sup * 0.5;
  }
  return s;
}

struct SphereResult
{
  double value = std::numeric_limits<double>::infinity();
  std::vector<Vec> tau;
};

SphereResult alternating_descent(SphereProblem const &p, std::vector<Vec> tau,
                                 int sweeps)
{
  double current = sphere_objective(p, tau);
  for (int s = 0; s < sweeps; ++s) {
    double const temperature =
        1.0 + 49.0 * s / std::max(1, sweeps - 1);
    bool improved = false;
    for (int x : p.domain) {
      auto nb = p.g.neighbors(x);
      std::vector<Vec> points;
      for (std::size_t i = 0; i < nb.size(); ++i)
        if (nb[i] != x && p.inside[nb[i]])
          points.push_back(act(p.c.at(x, static_cast<int>(i)), tau[nb[i]]));
      if (points.empty())
        continue;

      // Softmax toward the farthest points approximates the minimax center.
      std::vector<double> dist;
      double far = 0.0;
      for (auto const &q : points) {
        dist.push_back(distance(tau[x], q));
        far = std::max(far, dist.back());
      }
      Vec mean(tau[x].size(), 0.0);
      for (std::size_t i = 0; i < points.size(); ++i) {
        double const w = std::exp(temperature * (dist[i] - far));
        for (std::size_t a = 0; a < mean.size(); ++a)
          mean[a] += w * points[i][a];
      }
      std::vector<Vec> candidates;
      if (double const len = norm(mean); len > 1e-14) {
        for (auto &z : mean)
          z /= len;
        candidates.push_back(mean);
      }
      for (auto const &q : points)
        candidates.push_back(q);

      Vec const saved = tau[x];
      Vec best_vec = saved;
      double best_val = current;
      for (auto const &cand : candidates) {
        tau[x] = cand;
        double const v = sphere_objective(p, tau);
        if (v < best_val) {
          best_val = v;
          best_vec = cand;
        }
      }
      tau[x] = best_vec;
      if (best_val < current) {
        current = best_val;
        improved = true;
      }
    }
    if (!improved && s > 0 && temperature >= 50.0)
      break;
  }
  return {current, std::move(tau)};
}

SphereResult sphere_min(SphereProblem const &p, int k, EtaOptions const &opts,
                        std::uint64_t stream, bool parallel)
{
  bool const real = p.c.is_real();
  int const n = p.g.order();
  int const restarts = std::max(1, opts.restarts);
  std::vector<SphereResult> results(restarts);

  auto run = [&](int r) {
    std::vector<Vec> tau(n);
    Rng rng(derive_seed(opts.seed, stream, static_cast<std::uint64_t>(r)));
    for (int x : p.domain) {
      Vec v(k, 0.0);
      if (r == 0) {
        v[0] = 1.0;
      } else {
        for (auto &z : v)
          z = real ? Complex(rng.normal(), 0.0) : Complex(rng.normal(), rng.normal());
        double const len = norm(v);
        for (auto &z : v)
          z /= len;
      }
      tau[x] = std::move(v);
    }
    results[r] = alternating_descent(p, std::move(tau), opts.sweeps);
  };

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < restarts; ++r)
      run(r);
  } else {
    for (int r = 0; r < restarts; ++r)
      run(r);
  }
  SphereResult best = results[0];
  for (auto const &r : results)
    if (r.value < best.value)
      best = r;
  return best;
}

SphereProblem make_sphere_problem(Graph const &g, Connection const &c,
                                  VertexMeasure const &pi, std::vector<int> domain)
{
  SphereProblem p{g, c, {pi.weights().begin(), pi.weights().end()}, std::move(domain),
                  std::vector<char>(g.order(), 0)};
  for (int x : p.domain)
    p.inside[x] = 1;
  return p;
}

} // namespace

EtaResult frustration_eta_heuristic(Graph const &g, Connection const &c,
                                    VertexMeasure const &pi, VertexSet const &v1,
                                    EtaOptions const &opts)
{
  check_shapes(g, c.order(), pi);
  auto const p = make_sphere_problem(g, c, pi, v1.members());
  auto best = sphere_min(p, c.k(), opts, eta_stream,
                         opts.exec == Execution::parallel);
  EtaResult r;
  r.method = Method::heuristic_upper_bound;
  r.value = best.value;
  r.tau = std::move(best.tau);
  return r;
}

namespace
{

std::string eta_name(EtaKind kind)
{ return kind == EtaKind::out ? "eta_star_out" : "eta_star_sym"; }

} // namespace

ConstantResult eta_star(Graph const &g, CyclicConnection const &c,
                        VertexMeasure const &pi, EtaKind kind, Caps const &caps,
                        Execution exec)
{
  check_shapes(g, c.order(), pi);
  if (g.order() == 0)
    throw ValidationError("graph has no vertices");
  check_cyclic_budget(g.order(), c.k(), caps);
  std::vector<int> all(g.order());
  for (int i = 0; i < g.order(); ++i)
    all[i] = i;
  auto const loc = localize(g, c, pi, all);
  auto const best = kernels::cyclic_sup_scan(
      loc.graph, loc.weights,
      kind == EtaKind::out ? kernels::SupKind::out : kernels::SupKind::sym, exec);
  ConstantResult r;
  r.name = eta_name(kind);
  r.value = best.num / best.den;
  r.set = VertexSet::from_mask(static_cast<std::size_t>(g.order()), best.set);
  r.root_exponents = best.tau;
  return r;
}

ConstantResult eta_star(Graph const &g, Connection const &c,
                        VertexMeasure const &pi, EtaKind kind,
                        EtaOptions const &opts)
{
  check_shapes(g, c.order(), pi);
  int const n = g.order();
  if (n == 0)
    throw ValidationError("graph has no vertices");
  if (n > opts.caps.cyclic_max_size)
    throw CapExceeded("heuristic eta* limited to " +
                      std::to_string(opts.caps.cyclic_max_size) + " vertices");
  auto const universe = static_cast<std::size_t>(n);

  struct Best
  {
    double num = 0.0, den = 1.0;
    std::uint64_t set = 0;
    bool found = false;
  };
  auto better = [](Best const &a, Best const &b) {
    double const l = a.num * b.den, r = b.num * a.den;
    if (l != r)
      return l < r;
    int const sa = std::popcount(a.set), sb = std::popcount(b.set);
    if (sa != sb)
      return sa < sb;
    std::uint64_t const d = a.set ^ b.set;
    return (a.set & (d & (~d + 1))) != 0;
  };

  std::int64_t const count = std::int64_t{1} << n;
  std::vector<Best> per_set(static_cast<std::size_t>(count));
  auto evaluate = [&](std::int64_t i) {
    auto const mask = static_cast<std::uint64_t>(i);
    VertexSet const v1 = VertexSet::from_mask(universe, mask);
    VertexSet domain = v1;
    VertexSet bnd = boundary(g, v1, BoundaryKind::out).vertices;
    if (kind == EtaKind::sym) {
      domain = interior(g, v1);
      bnd = boundary(g, v1, BoundaryKind::sym).vertices;
    }
    auto const p = make_sphere_problem(g, c, pi, domain.members());
    auto const eta = sphere_min(p, c.k(), opts, derive_seed(eta_stream, mask), false);
    per_set[i] = {2.0 * eta.value + pi.total(bnd), pi.total(v1), mask, true};
  };
  if (opts.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 1; i < count; ++i)
      evaluate(i);
  } else {
    for (std::int64_t i = 1; i < count; ++i)
      evaluate(i);
  }
  Best best;
  for (std::int64_t i = 1; i < count; ++i)
    if (!best.found || better(per_set[i], best))
      best = per_set[i];

  ConstantResult r;
  r.name = eta_name(kind);
  r.value = best.num / best.den;
  r.method = Method::heuristic_upper_bound;
  r.set = VertexSet::from_mask(universe, best.set);
  return r;
}

namespace
{

template<typename T>
double cutoff_vector_impl(std::span<const T> z1, std::span<const T> z2)
{
  if (z1.size() != z2.size() || z1.empty())
    throw ValidationError("cutoff vectors must have the same positive length");
  auto len = [](std::span<const T> z) {
    double s = 0.0;
    for (auto const &v : z)
      s += std::norm(v);
    return std::sqrt(s);
  };
  double a = len(z1), b = len(z2);
  if (a > 1.0 + 1e-15 || b > 1.0 + 1e-15)
    throw ValidationError("cutoff integral needs |z| <= 1");
  if (b > a) {
    std::swap(z1, z2);
    std::swap(a, b);
  }
  double diff = 0.0;
  for (std::size_t i = 0; i < z1.size(); ++i) {
    T const u1 = a > 0.0 ? z1[i] / a : T(i == 0 ? 1.0 : 0.0);
    T const u2 = b > 0.0 ? z2[i] / b : T(i == 0 ? 1.0 : 0.0);
    diff += std::norm(u1 - u2);
  }
  return b * b * std::sqrt(diff) + (a * a - b * b);
}

} // namespace

double cutoff_integral_vector(std::span<const double> z1, std::span<const double> z2)
{
  return cutoff_vector_impl(z1, z2);
}

double cutoff_integral_vector(std::span<const Complex> z1,
                              std::span<const Complex> z2)
{
  return cutoff_vector_impl(z1, z2);
}

double cutoff_integral_cyclic(Complex z1, Complex z2, int k, int resolution)
{
  if (resolution < 16)
    throw ValidationError("cyclic cutoff quadrature needs at least 16 nodes");
  if (k < 2)
    throw ValidationError("cyclic cutoff needs k >= 2");
  double const r1 = std::abs(z1), r2 = std::abs(z2);
  if (r1 > 1.0 + 1e-15 || r2 > 1.0 + 1e-15)
    throw ValidationError("cutoff integral needs |z| <= 1");
  auto const dist = kernels::root_distances(k);
  double const two_pi = 2.0 * std::numbers::pi;
  double const a1 = std::atan2(z1.imag(), z1.real());
  double const a2 = std::atan2(z2.imag(), z2.real());
  auto sector = [&](double alpha, double theta) {
    double u = std::fmod(alpha - theta, two_pi);
    if (u < 0.0)
      u += two_pi;
    return std::min(k - 1, static_cast<int>(u * k / two_pi));
  };
  double const lo = std::min(r1 * r1, r2 * r2);
  double const spread = std::abs(r1 * r1 - r2 * r2);
  if (lo == 0.0)
    return spread;
  double sum = 0.0;
  for (int i = 0; i < resolution; ++i) {
    double const theta = (i + 0.5) * two_pi / resolution;
    int const j = ((sector(a1, theta) - sector(a2, theta)) % k + k) % k;
    sum += lo * dist[j] + spread;
  }
  return sum / resolution;
}

double cyclic_quadrature_allowance(int resolution)
{
  return 4.0 * std::numbers::pi / resolution;
}

} // namespace cheeger
