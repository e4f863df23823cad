#include "cheeger/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "cheeger/errors.hpp"

namespace cheeger
{

Eigen jacobi_eigen(Matrix<double> const &m, double tol, int max_sweeps)
{
  int const n = m.n;
  Matrix<double> a = m;
  Matrix<double> v(n);
  for (int i = 0; i < n; ++i)
    v(i, i) = 1.0;

  double frob = 0.0;
  for (double x : a.a)
    frob += x * x;
  double const threshold = tol * std::max(1.0, std::sqrt(frob));

  auto off_norm = [&] {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j)
          s += a(i, j) * a(i, j);
    return std::sqrt(s);
  };

  Eigen out;
  while (off_norm() > threshold) {
    if (out.sweeps == max_sweeps)
      throw SolverError("Jacobi did not converge in " +
                        std::to_string(max_sweeps) + " sweeps");
    ++out.sweeps;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        double const apq = a(p, q);
        if (apq == 0.0)
          continue;
        double const theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double const t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double const c = 1.0 / std::sqrt(t * t + 1.0);
        double const s = t * c;
        for (int k = 0; k < n; ++k) {
          double const akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double const apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          double const vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return a(i, i) < a(j, j); });
  for (int i : order) {
    out.values.push_back(a(i, i));
    std::vector<double> col(n);
    for (int k = 0; k < n; ++k)
      col[k] = v(k, i);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

std::string to_string(SpectrumKind kind)
{
  switch (kind) {
  case SpectrumKind::adjacency:
    return "adjacency";
  case SpectrumKind::laplacian:
    return "laplacian";
  case SpectrumKind::signed_laplacian:
    return "signed_laplacian";
  case SpectrumKind::connection_laplacian:
    return "connection_laplacian";
  }
  return "unknown";
}

SpectralReport real_spectrum(Matrix<double> const &m, SpectrumKind kind)
{
  auto eig = jacobi_eigen(m);
  SpectralReport r;
  r.kind = kind;
  r.eigenvalues = eig.values;
  int const n = m.n;
  for (std::size_t e = 0; e < eig.values.size(); ++e) {
    auto const &x = eig.vectors[e];
    double res = 0.0, norm = 0.0;
    for (int i = 0; i < n; ++i) {
      double y = -eig.values[e] * x[i];
      for (int j = 0; j < n; ++j)
        y += m(i, j) * x[j];
      res += y * y;
      norm += x[i] * x[i];
    }
    r.residual = std::max(r.residual, std::sqrt(res / norm));
  }
  r.vectors = std::move(eig.vectors);
  return r;
}

SpectralReport hermitian_spectrum(Matrix<std::complex<double>> const &m,
                                  SpectrumKind kind)
{
  int const n = m.n;
  Matrix<double> big(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double const re = m(i, j).real(), im = m(i, j).imag();
      big(i, j) = re;
      big(i + n, j + n) = re;
      big(i, j + n) = -im;
      big(i + n, j) = im;
    }
  auto eig = jacobi_eigen(big);

  SpectralReport r;
  r.kind = kind;
  for (std::size_t e = 0; e < eig.values.size(); e += 2) {
    auto const &x = eig.vectors[e];
    double res = 0.0, norm = 0.0;
    for (int i = 0; i < n; ++i) {
      std::complex<double> y = -eig.values[e] * std::complex<double>(x[i], x[i + n]);
      for (int j = 0; j < n; ++j)
        y += m(i, j) * std::complex<double>(x[j], x[j + n]);
      res += std::norm(y);
      norm += x[i] * x[i] + x[i + n] * x[i + n];
    }
    r.residual = std::max(r.residual, std::sqrt(res / norm));
    r.eigenvalues.push_back(eig.values[e]);
    r.vectors.push_back(x);
  }
  return r;
}

void require_no_isolated(Graph const &g)
{
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0)
      throw ValidationError("vertex " + std::to_string(v) +
                            " is isolated; normalized operators need degree >= 1");
}

namespace
{

/// D^-1/2 A^sigma D^-1/2, with sigma = +1 when absent.
Matrix<double> normalized_adjacency(Graph const &g, Signature const *sigma)
{
  require_no_isolated(g);
  int const n = g.order();
  Matrix<double> m(n);
  for (int x = 0; x < n; ++x) {
    auto nb = g.neighbors(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      int const y = nb[i];
      double const s = sigma ? sigma->sign_at(x, static_cast<int>(i)) : 1.0;
      m(x, y) = s / std::sqrt(static_cast<double>(g.degree(x)) * g.degree(y));
    }
  }
  return m;
}

Matrix<double> identity_minus(Matrix<double> m)
{
  for (int i = 0; i < m.n; ++i)
    for (int j = 0; j < m.n; ++j)
      m(i, j) = (i == j ? 1.0 : 0.0) - m(i, j);
  return m;
}

} // namespace

SpectralReport adjacency_spectrum(Graph const &g)
{
  return real_spectrum(normalized_adjacency(g, nullptr), SpectrumKind::adjacency);
}

SpectralReport laplacian_spectrum(Graph const &g)
{
  return real_spectrum(identity_minus(normalized_adjacency(g, nullptr)),
                       SpectrumKind::laplacian);
}

SpectralReport signed_laplacian_spectrum(Graph const &g, Signature const &sigma)
{
  if (sigma.order() != g.order())
    throw ValidationError("signature does not match the graph");
  return real_spectrum(identity_minus(normalized_adjacency(g, &sigma)),
                       SpectrumKind::signed_laplacian);
}

} // namespace cheeger
