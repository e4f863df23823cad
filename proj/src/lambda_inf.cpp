#include "cheeger/lambda_inf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cheeger/errors.hpp"
#include "cheeger/iso_constants.hpp"
#include "cheeger/rng.hpp"
#include "cheeger/spectra.hpp"

namespace cheeger
{

namespace
{

constexpr std::uint64_t restart_stream = 0x6c616d626461ULL;

struct Problem
{
  Graph const &g;
  Signature const &sigma;
  std::vector<double> pi;
};

double numerator(Problem const &p, std::span<const double> f)
{
  double s = 0.0;
  for (int x = 0; x < p.g.order(); ++x) {
    auto nb = p.g.neighbors(x);
    double sup = 0.0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      double const d = f[x] - p.sigma.sign_at(x, static_cast<int>(i)) * f[nb[i]];
      sup = std::max(sup, d * d);
    }
    s += p.pi[x] * sup;
  }
  return s;
}

double denominator(Problem const &p, std::span<const double> f)
{
  double s = 0.0;
  for (std::size_t x = 0; x < f.size(); ++x)
    s += p.pi[x] * f[x] * f[x];
  return s;
}

void normalize(Problem const &p, std::vector<double> &f)
{
  double const d = std::sqrt(denominator(p, f));
  for (double &v : f)
    v /= d;
}

/// Subgradient of N(f) - R D(f) at a pi-normalized f. Ties in a sup are
/// resolved by averaging the tied terms.
std::vector<double> subgradient(Problem const &p, std::vector<double> const &f,
                                double ratio)
{
  int const n = p.g.order();
  std::vector<double> grad(n, 0.0);
  std::vector<int> tied;
  for (int x = 0; x < n; ++x) {
    auto nb = p.g.neighbors(x);
    double sup = 0.0;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      double const d = f[x] - p.sigma.sign_at(x, static_cast<int>(i)) * f[nb[i]];
      sup = std::max(sup, d * d);
    }
    tied.clear();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      double const d = f[x] - p.sigma.sign_at(x, static_cast<int>(i)) * f[nb[i]];
      if (d * d >= sup * (1.0 - 1e-12))
        tied.push_back(static_cast<int>(i));
    }
    double const share = p.pi[x] / static_cast<double>(std::max<std::size_t>(1, tied.size()));
    for (int i : tied) {
      int const y = nb[i];
      double const s = p.sigma.sign_at(x, i);
      double const d = f[x] - s * f[y];
      grad[x] += share * 2.0 * d;
      grad[y] -= share * 2.0 * s * d;
    }
    grad[x] -= ratio * 2.0 * p.pi[x] * f[x];
  }
  return grad;
}

struct SearchResult
{
  double ratio = std::numeric_limits<double>::infinity();
  std::vector<double> f;
};

SearchResult descend(Problem const &p, std::vector<double> f, int iterations)
{
  normalize(p, f);
  SearchResult best{numerator(p, f), f};
  double const c = 0.1 * best.ratio;
  if (c == 0.0)
    return best;
  double ratio = best.ratio;
  for (int k = 1; k <= iterations; ++k) {
    auto const g = subgradient(p, f, ratio);
    double norm = 0.0;
    for (double v : g)
      norm += v * v;
    norm = std::sqrt(norm);
    if (norm == 0.0)
      break;
    double const step = c / std::sqrt(static_cast<double>(k));
    for (std::size_t i = 0; i < f.size(); ++i)
      f[i] -= step * g[i] / norm;
    normalize(p, f);
    ratio = numerator(p, f);
    if (ratio < best.ratio) {
      best.ratio = ratio;
      best.f = f;
    }
  }
  return best;
}

bool better_search(SearchResult const &a, SearchResult const &b)
{ return a.ratio < b.ratio; }

double floor_term(Number const &h)
{
  double const r = std::sqrt(1.0 + h.to_double()) - 1.0;
  return r * r;
}

} // namespace

double sup_rayleigh_ratio(Graph const &g, Signature const &sigma,
                          VertexMeasure const &pi, std::span<const double> f)
{
  if (f.size() != static_cast<std::size_t>(g.order()) ||
      pi.size() != f.size())
    throw ValidationError("function does not match the graph");
  Problem const p{g, sigma, {pi.weights().begin(), pi.weights().end()}};
  double const d = denominator(p, f);
  if (d == 0.0)
    throw ValidationError("the zero function has no Rayleigh quotient");
  return numerator(p, f) / d;
}

LambdaInfBracket lambda_inf_bracket(Graph const &g, Signature const &sigma,
                                    VertexMeasure const &pi,
                                    LambdaOptions const &opts)
{
  if (opts.restarts < 1 || opts.iterations < 0)
    throw ValidationError("need at least one restart and nonnegative iterations");
  if (pi.size() != static_cast<std::size_t>(g.order()))
    throw ValidationError("vertex measure does not match the graph");
  int const n = g.order();
  Problem const p{g, sigma, {pi.weights().begin(), pi.weights().end()}};

  auto const spectrum = signed_laplacian_spectrum(g, sigma);
  double const lambda1 = spectrum.eigenvalues.front();
  auto const degree = g.regular_degree();
  bool const lemma_applies = degree.has_value() && pi.is_counting();

  LambdaInfBracket b;
  b.seed = opts.seed;
  b.restarts = opts.restarts;
  b.iterations = opts.iterations;

  // Seeds: restart 0 starts at D^-1/2 times the first eigenvector.
  std::vector<std::vector<double>> starts(static_cast<std::size_t>(opts.restarts));
  starts[0].resize(n);
  for (int x = 0; x < n; ++x)
    starts[0][x] = spectrum.vectors.front()[x] / std::sqrt(static_cast<double>(g.degree(x)));
  for (int r = 1; r < opts.restarts; ++r) {
    Rng rng(derive_seed(opts.seed, restart_stream, static_cast<std::uint64_t>(r)));
    starts[r].resize(n);
    for (double &v : starts[r])
      v = rng.normal();
  }

  std::vector<SearchResult> results(starts.size());
  if (opts.exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < opts.restarts; ++r)
      results[r] = descend(p, starts[r], opts.iterations);
  } else {
    for (int r = 0; r < opts.restarts; ++r)
      results[r] = descend(p, starts[r], opts.iterations);
  }
  SearchResult best = results[0];
  for (auto const &r : results)
    if (better_search(r, best))
      best = r;

  auto const balance = is_balanced(g, sigma);
  if (balance.balanced) {
    std::vector<double> tau(balance.tau.values().begin(), balance.tau.values().end());
    normalize(p, tau);
    double const ratio = numerator(p, tau);
    if (ratio < best.ratio)
      best = {ratio, tau};
  }
  b.search_upper = best.ratio;
  b.best_function = best.f;

  b.upper = best.ratio;
  if (lemma_applies) {
    double const v = 2.0 * *degree * lambda1;
    b.upper_terms.push_back({"2d*lambda_1", v, ""});
    b.upper = std::min(b.upper, v);
  } else {
    b.upper_terms.push_back({"2d*lambda_1", std::nullopt,
                             "needs a regular graph with counting measure"});
  }
  b.upper_terms.push_back({"search", best.ratio, ""});

  b.lower = 0.0;
  if (lemma_applies) {
    double const v = 2.0 * lambda1;
    b.lower_terms.push_back({"2*lambda_1", v, ""});
    b.lower = std::max(b.lower, v);
  } else {
    b.lower_terms.push_back({"2*lambda_1", std::nullopt,
                             "needs a regular graph with counting measure"});
  }

  auto add_floor = [&](char const *name, std::optional<Number> given,
                       auto compute) {
    try {
      Number const h = given ? *given : compute().value;
      double const v = floor_term(h);
      b.lower_terms.push_back({name, v, ""});
      b.lower = std::max(b.lower, v);
    } catch (CapExceeded const &e) {
      b.lower_terms.push_back({name, std::nullopt, e.what()});
    }
  };
  add_floor("(sqrt(1+h_out_sigma)-1)^2", opts.h_out_sigma,
            [&] { return signed_h_out(g, sigma, pi, opts.caps, opts.exec); });
  add_floor("(sqrt(1+h_sym_sigma)-1)^2", opts.h_sym_sigma,
            [&] { return signed_h_sym(g, sigma, pi, opts.caps, opts.exec); });
  return b;
}

double cutoff_integral_scalar(double z1, double z2)
{
  if (std::abs(z1) > 1.0 || std::abs(z2) > 1.0)
    throw ValidationError("cutoff integral needs |z| <= 1");
  auto sign = [](double z) { return z < 0.0 ? -1.0 : 1.0; };
  double const a = z1 * z1, b = z2 * z2;
  return std::abs(sign(z1) - sign(z2)) * std::min(a, b) + std::abs(a - b);
}

} // namespace cheeger
