#include "cheeger/kernels.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cmath>
#include <numbers>

#include "cheeger/errors.hpp"
#include "cheeger/signed.hpp"

namespace cheeger::kernels
{

namespace
{

constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::uint64_t universe_mask(int n)
{ return n >= 64 ? ~std::uint64_t{0} : bit(n) - 1; }

int lowest(std::uint64_t m) { return std::countr_zero(m); }

/// Neighbors y of x with tau(x) sigma_xy tau(y) = -1.
std::uint64_t frustrated_row(MaskGraph const &g, int x, std::uint64_t tau)
{
  std::uint64_t const t = (tau >> x) & 1u ? ~tau : tau;
  return (t ^ g.neg[x]) & g.nbr[x];
}

bool set_less(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t const d = a ^ b;
  return d != 0 && (a & (d & (~d + 1))) != 0;
}

bool tau_less(std::uint64_t a, std::uint64_t b)
{
  std::uint64_t const d = a ^ b;
  return d != 0 && (b & (d & (~d + 1))) != 0;
}

int compare_ratio(long an, long ad, long bn, long bd)
{
  __int128 const l = static_cast<__int128>(an) * bd;
  __int128 const r = static_cast<__int128>(bn) * ad;
  return (l > r) - (l < r);
}

int compare_ratio(double an, double ad, double bn, double bd)
{
  double const l = an * bd;
  double const r = bn * ad;
  return (l > r) - (l < r);
}

template<typename C>
void consider(C &best, C const &cand)
{
  if (!best.found || better(cand, best))
    best = cand;
}

std::vector<int> members_of(std::uint64_t mask)
{
  std::vector<int> out;
  for (; mask; mask &= mask - 1)
    out.push_back(lowest(mask));
  return out;
}

template<typename W>
W weight_of(std::uint64_t mask, std::span<const W> w)
{
  W s{};
  for (; mask; mask &= mask - 1)
    s += w[lowest(mask)];
  return s;
}

long volume_of(MaskGraph const &g, std::uint64_t mask)
{
  long v = 0;
  for (; mask; mask &= mask - 1)
    v += g.degree[lowest(mask)];
  return v;
}

int edge_cut(MaskGraph const &g, std::uint64_t set)
{
  int c = 0;
  for (std::uint64_t m = set; m; m &= m - 1)
    c += std::popcount(g.nbr[lowest(m)] & ~set);
  return c;
}

std::uint64_t outer_boundary(MaskGraph const &g, std::uint64_t set)
{
  std::uint64_t reach = 0;
  for (std::uint64_t m = set; m; m &= m - 1)
    reach |= g.nbr[lowest(m)];
  return reach & ~set & universe_mask(g.n);
}

std::uint64_t inner_boundary(MaskGraph const &g, std::uint64_t set)
{
  std::uint64_t in = 0;
  for (std::uint64_t m = set; m; m &= m - 1) {
    int const x = lowest(m);
    if (g.nbr[x] & ~set)
      in |= bit(x);
  }
  return in;
}

/// Frustrated edge count under single-vertex flips.
struct EdgeGray
{
  MaskGraph const &g;
  std::uint64_t domain;
  std::uint64_t tau = 0;
  int m = 0;

  void reset(std::uint64_t t)
  {
    tau = t;
    m = frustrated_edges(g, domain, t);
  }

  void flip(int v)
  {
    std::uint64_t const others = g.nbr[v] & domain & ~bit(v);
    int const f = std::popcount(frustrated_row(g, v, tau) & others);
    m += std::popcount(others) - 2 * f;
    tau ^= bit(v);
  }
};

/// Per-vertex frustrated-neighbor counts under single-vertex flips.
struct SupGray
{
  MaskGraph const &g;
  std::uint64_t domain;
  std::uint64_t tau = 0;
  std::uint64_t bad = 0;
  std::array<int, 64> count{};

  void reset(std::uint64_t t)
  {
    tau = t;
    bad = 0;
    for (std::uint64_t m = domain; m; m &= m - 1) {
      int const x = lowest(m);
      count[x] = std::popcount(frustrated_row(g, x, t) & domain);
      if (count[x])
        bad |= bit(x);
    }
  }

  void flip(int v)
  {
    std::uint64_t const others = g.nbr[v] & domain & ~bit(v);
    std::uint64_t const was = frustrated_row(g, v, tau) & others;
    for (std::uint64_t m = others; m; m &= m - 1) {
      int const y = lowest(m);
      int const d = (was & bit(y)) ? -1 : 1;
      count[v] += d;
      count[y] += d;
      bad = count[y] ? bad | bit(y) : bad & ~bit(y);
    }
    bad = count[v] ? bad | bit(v) : bad & ~bit(v);
    tau ^= bit(v);
  }
};

/// Visits every switching of the listed vertices, starting from tau = start.
template<typename State, typename Visit>
void gray_walk(State &state, std::span<const int> vars, std::uint64_t start,
               Visit &&visit)
{
  state.reset(start);
  visit(state);
  std::uint64_t const steps = std::uint64_t{1} << vars.size();
  for (std::uint64_t i = 1; i < steps; ++i) {
    state.flip(vars[lowest(i)]);
    visit(state);
  }
}

template<typename C, typename Body>
C reduce_serial(std::int64_t count, Body &&body)
{
  C best;
  for (std::int64_t i = 0; i < count; ++i)
    body(i, best);
  return best;
}

template<typename C, typename Body>
C reduce_parallel(std::int64_t count, Body &&body)
{
  C best;
#pragma omp parallel
  {
    C local;
#pragma omp for schedule(dynamic, 64) nowait
    for (std::int64_t i = 0; i < count; ++i)
      body(i, local);
#pragma omp critical(cheeger_kernel_merge)
    if (local.found)
      consider(best, local);
  }
  return best;
}

template<typename C, typename Body>
C reduce(Execution exec, std::int64_t count, Body &&body)
{
  return exec == Execution::serial ? reduce_serial<C>(count, body)
                                   : reduce_parallel<C>(count, body);
}

void check_size(MaskGraph const &g)
{
  if (g.n > 62)
    throw ValidationError("subset scans need fewer than 63 vertices");
}

} // namespace

MaskGraph make_mask_graph(Graph const &g, Signature const *sigma)
{
  if (g.order() > 64)
    throw ValidationError("mask kernels support at most 64 vertices");
  MaskGraph mg;
  mg.n = g.order();
  mg.nbr.assign(mg.n, 0);
  mg.neg.assign(mg.n, 0);
  mg.degree.assign(mg.n, 0);
  for (int x = 0; x < mg.n; ++x) {
    auto nb = g.neighbors(x);
    mg.degree[x] = g.degree(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      mg.nbr[x] |= bit(nb[i]);
      if (sigma && sigma->sign_at(x, static_cast<int>(i)) < 0)
        mg.neg[x] |= bit(nb[i]);
    }
  }
  return mg;
}

template<typename W>
bool better(Candidate<W> const &a, Candidate<W> const &b)
{
  if (int c = compare_ratio(a.num, a.den, b.num, b.den))
    return c < 0;
  int const sa = std::popcount(a.set), sb = std::popcount(b.set);
  if (sa != sb)
    return sa < sb;
  if (a.set != b.set)
    return set_less(a.set, b.set);
  return tau_less(a.tau, b.tau);
}

template bool better(Candidate<long> const &, Candidate<long> const &);
template bool better(Candidate<double> const &, Candidate<double> const &);

int frustrated_edges(MaskGraph const &g, std::uint64_t domain, std::uint64_t tau)
{
  int s = 0;
  for (std::uint64_t m = domain; m; m &= m - 1) {
    int const x = lowest(m);
    s += std::popcount(frustrated_row(g, x, tau) & domain & ~bit(x));
  }
  return s / 2;
}

std::uint64_t bad_vertices(MaskGraph const &g, std::uint64_t domain,
                           std::uint64_t tau)
{
  std::uint64_t bad = 0;
  for (std::uint64_t m = domain; m; m &= m - 1) {
    int const x = lowest(m);
    if (frustrated_row(g, x, tau) & domain)
      bad |= bit(x);
  }
  return bad;
}

int negative_loops(MaskGraph const &g, std::uint64_t domain)
{
  int c = 0;
  for (std::uint64_t m = domain; m; m &= m - 1) {
    int const x = lowest(m);
    c += (g.neg[x] >> x) & 1u;
  }
  return c;
}

namespace
{

// Fixed-domain minimizations split the switchings into blocks by the values
// on the highest domain vertices; each block is one Gray-code walk.
constexpr int block_bits = 6;

template<typename W, typename Value>
Candidate<W> fixed_domain_serial(std::uint64_t domain, Value &&value)
{
  Candidate<W> best;
  std::uint64_t sub = 0;
  do {
    consider(best, Candidate<W>{value(sub), W{1}, domain, sub, true});
    sub = (sub - domain) & domain;
  } while (sub != 0);
  return best;
}

template<typename W, typename State, typename Value>
Candidate<W> fixed_domain_parallel(MaskGraph const &g, std::uint64_t domain,
                                   Value &&value)
{
  auto const vars = members_of(domain);
  int const hi = std::min<int>(block_bits, static_cast<int>(vars.size()));
  int const lo = static_cast<int>(vars.size()) - hi;
  std::span<const int> low_vars(vars.data(), static_cast<std::size_t>(lo));
  return reduce_parallel<Candidate<W>>(
      std::int64_t{1} << hi, [&](std::int64_t block, Candidate<W> &best) {
        std::uint64_t start = 0;
        for (int j = 0; j < hi; ++j)
          if ((block >> j) & 1)
            start |= bit(vars[lo + j]);
        State state{g, domain};
        gray_walk(state, low_vars, start, [&](State const &s) {
          consider(best, Candidate<W>{value(s), W{1}, domain, s.tau, true});
        });
      });
}

} // namespace

EdgeMin edge_frustration_min(MaskGraph const &g, std::uint64_t domain,
                             Execution exec)
{
  auto const best =
      exec == Execution::serial
          ? fixed_domain_serial<long>(domain,
                                      [&](std::uint64_t t) {
                                        return long{frustrated_edges(g, domain, t)};
                                      })
          : fixed_domain_parallel<long, EdgeGray>(
                g, domain, [](EdgeGray const &s) { return long{s.m}; });
  return {static_cast<int>(best.num), best.tau};
}

template<typename W>
SupMin<W> sup_frustration_min(MaskGraph const &g, std::uint64_t domain,
                              std::span<const W> weights, Execution exec)
{
  auto const best =
      exec == Execution::serial
          ? fixed_domain_serial<W>(domain,
                                   [&](std::uint64_t t) {
                                     return weight_of(bad_vertices(g, domain, t),
                                                      weights);
                                   })
          : fixed_domain_parallel<W, SupGray>(g, domain, [&](SupGray const &s) {
              return weight_of(s.bad, weights);
            });
  return {best.num, best.tau};
}

template SupMin<long> sup_frustration_min(MaskGraph const &, std::uint64_t,
                                          std::span<const long>, Execution);
template SupMin<double> sup_frustration_min(MaskGraph const &, std::uint64_t,
                                            std::span<const double>, Execution);

Candidate<long> cheeger_scan(MaskGraph const &g, Execution exec)
{
  check_size(g);
  long const total = volume_of(g, universe_mask(g.n));
  return reduce<Candidate<long>>(
      exec, std::int64_t{1} << g.n, [&](std::int64_t i, Candidate<long> &best) {
        auto const set = static_cast<std::uint64_t>(i);
        long const vol = volume_of(g, set);
        if (vol == 0 || 2 * vol > total)
          return;
        consider(best, Candidate<long>{edge_cut(g, set), vol, set, 0, true});
      });
}

Candidate<long> outer_scan(MaskGraph const &g, Execution exec)
{
  check_size(g);
  return reduce<Candidate<long>>(
      exec, std::int64_t{1} << g.n, [&](std::int64_t i, Candidate<long> &best) {
        auto const set = static_cast<std::uint64_t>(i);
        int const size = std::popcount(set);
        if (size == 0 || 2 * size > g.n)
          return;
        consider(best, Candidate<long>{std::popcount(outer_boundary(g, set)),
                                       size, set, 0, true});
      });
}

Candidate<long> edge_tripartition_scan(MaskGraph const &g, Execution exec)
{
  check_size(g);
  return reduce<Candidate<long>>(
      exec, std::int64_t{1} << g.n, [&](std::int64_t i, Candidate<long> &best) {
        auto const set = static_cast<std::uint64_t>(i);
        long const vol = volume_of(g, set);
        if (vol == 0)
          return;
        long const fixed = edge_cut(g, set) + negative_loops(g, set);
        if (exec == Execution::serial) {
          std::uint64_t sub = 0;
          do {
            long const num = 2L * frustrated_edges(g, set, sub) + fixed;
            consider(best, Candidate<long>{num, vol, set, sub, true});
            sub = (sub - set) & set;
          } while (sub != 0);
          return;
        }
        auto const vars = members_of(set);
        EdgeGray state{g, set};
        gray_walk(state, vars, 0, [&](EdgeGray const &s) {
          consider(best, Candidate<long>{2L * s.m + fixed, vol, set, s.tau, true});
        });
      });
}

template<typename W>
Candidate<W> sup_tripartition_scan(MaskGraph const &g, std::span<const W> weights,
                                   SupKind kind, int coefficient, Execution exec)
{
  check_size(g);
  return reduce<Candidate<W>>(
      exec, std::int64_t{1} << g.n, [&](std::int64_t i, Candidate<W> &best) {
        auto const set = static_cast<std::uint64_t>(i);
        if (set == 0)
          return;
        W const den = weight_of(set, weights);
        std::uint64_t const out = outer_boundary(g, set);
        std::uint64_t domain = set, bnd = out;
        if (kind == SupKind::sym) {
          std::uint64_t const in = inner_boundary(g, set);
          domain = set & ~in;
          bnd = in | out;
        }
        W const fixed = weight_of(bnd, weights);
        if (exec == Execution::serial) {
          std::uint64_t sub = 0;
          do {
            W const num =
                W(coefficient) * weight_of(bad_vertices(g, domain, sub), weights) +
                fixed;
            consider(best, Candidate<W>{num, den, set, sub, true});
            sub = (sub - domain) & domain;
          } while (sub != 0);
          return;
        }
        auto const vars = members_of(domain);
        SupGray state{g, domain};
        gray_walk(state, vars, 0, [&](SupGray const &s) {
          W const num = W(coefficient) * weight_of(s.bad, weights) + fixed;
          consider(best, Candidate<W>{num, den, set, s.tau, true});
        });
      });
}

template Candidate<long> sup_tripartition_scan(MaskGraph const &,
                                               std::span<const long>, SupKind,
                                               int, Execution);
template Candidate<double> sup_tripartition_scan(MaskGraph const &,
                                                 std::span<const double>,
                                                 SupKind, int, Execution);

bool better(CyclicCandidate const &a, CyclicCandidate const &b)
{
  if (int c = compare_ratio(a.num, a.den, b.num, b.den))
    return c < 0;
  int const sa = std::popcount(a.set), sb = std::popcount(b.set);
  if (sa != sb)
    return sa < sb;
  if (a.set != b.set)
    return set_less(a.set, b.set);
  return a.tau < b.tau;
}

std::vector<double> root_distances(int k)
{
  std::vector<double> d(static_cast<std::size_t>(k));
  for (int m = 0; m < k; ++m) {
    if (m == 0)
      d[m] = 0.0;
    else if (2 * m == k)
      d[m] = 2.0;
    else
      d[m] = 2.0 * std::sin(std::numbers::pi * m / k);
  }
  return d;
}

namespace
{

double cyclic_value(CyclicMaskGraph const &g, std::uint64_t domain,
                    std::span<const int> tau, std::span<const double> weights,
                    std::vector<double> const &dist)
{
  double s = 0.0;
  for (std::uint64_t m = domain; m; m &= m - 1) {
    int const x = lowest(m);
    double sup = 0.0;
    for (std::uint64_t nb = g.nbr[x] & domain; nb; nb &= nb - 1) {
      int const y = lowest(nb);
      int const r = ((g.exponent[x][y] + tau[y] - tau[x]) % g.k + g.k) % g.k;
      sup = std::max(sup, dist[r]);
    }
    s += weights[x] * sup * 0.5;
  }
  return s;
}

double cyclic_min(CyclicMaskGraph const &g, std::uint64_t domain,
                  std::span<const double> weights,
                  std::vector<double> const &dist, std::vector<int> &best_tau)
{
  auto const vars = members_of(domain);
  std::vector<int> tau(static_cast<std::size_t>(g.n), 0);
  best_tau = tau;
  double best = cyclic_value(g, domain, tau, weights, dist);
  if (vars.size() < 2)
    return best;
  // A global rotation leaves the value unchanged, so the first variable stays
  // at exponent 0; the odometer then runs in lexicographic order.
  for (;;) {
    std::size_t pos = vars.size() - 1;
    while (pos > 0 && tau[vars[pos]] == g.k - 1) {
      tau[vars[pos]] = 0;
      --pos;
    }
    if (pos == 0)
      break;
    ++tau[vars[pos]];
    double const v = cyclic_value(g, domain, tau, weights, dist);
    if (v < best) {
      best = v;
      best_tau = tau;
    }
  }
  return best;
}

} // namespace

double cyclic_sup_frustration(CyclicMaskGraph const &g, std::uint64_t domain,
                              std::span<const int> tau,
                              std::span<const double> weights)
{
  return cyclic_value(g, domain, tau, weights, root_distances(g.k));
}

double cyclic_sup_min(CyclicMaskGraph const &g, std::uint64_t domain,
                      std::span<const double> weights, std::vector<int> &tau)
{
  return cyclic_min(g, domain, weights, root_distances(g.k), tau);
}

CyclicCandidate cyclic_sup_scan(CyclicMaskGraph const &g,
                                std::span<const double> weights, SupKind kind,
                                Execution exec)
{
  if (g.n > 62)
    throw ValidationError("subset scans need fewer than 63 vertices");
  auto const dist = root_distances(g.k);
  MaskGraph shape;
  shape.n = g.n;
  shape.nbr = g.nbr;
  return reduce<CyclicCandidate>(
      exec, std::int64_t{1} << g.n, [&](std::int64_t i, CyclicCandidate &best) {
        auto const set = static_cast<std::uint64_t>(i);
        if (set == 0)
          return;
        std::uint64_t const out = outer_boundary(shape, set);
        std::uint64_t domain = set, bnd = out;
        if (kind == SupKind::sym) {
          std::uint64_t const in = inner_boundary(shape, set);
          domain = set & ~in;
          bnd = in | out;
        }
        CyclicCandidate cand;
        double const eta = cyclic_min(g, domain, weights, dist, cand.tau);
        cand.num = 2.0 * eta + weight_of(bnd, weights);
        cand.den = weight_of(set, weights);
        cand.set = set;
        cand.found = true;
        consider(best, cand);
      });
}

} // namespace cheeger::kernels
