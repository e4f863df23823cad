#ifndef CHEEGER_SPECTRA_HPP
#define CHEEGER_SPECTRA_HPP

#include <complex>
#include <string>
#include <vector>

#include "graph.hpp"
#include "signed.hpp"

namespace cheeger
{

/// Dense row-major square matrix.
template<typename T>
struct Matrix
{
  int n = 0;
  std::vector<T> a;

  explicit Matrix(int size = 0)
  : n(size), a(static_cast<std::size_t>(size) * size, T{})
  {}

  T &operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  T operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

struct Eigen
{
  std::vector<double> values;               // ascending
  std::vector<std::vector<double>> vectors; // vectors[i] belongs to values[i]
  int sweeps = 0;
};

/// Cyclic Jacobi for a real symmetric matrix. Stops once the off-diagonal
/// Frobenius norm drops below tol * max(1, |A|_F); throws SolverError after
/// max_sweeps.
Eigen jacobi_eigen(Matrix<double> const &m, double tol = 1e-12,
                   int max_sweeps = 100);

enum class SpectrumKind
{
  adjacency,
  laplacian,
  signed_laplacian,
  connection_laplacian
};

std::string to_string(SpectrumKind kind);

struct SpectralReport
{
  SpectrumKind kind = SpectrumKind::adjacency;
  std::vector<double> eigenvalues; // ascending, with multiplicity
  double residual = 0.0;           // max |Mv - lambda v| / |v|
  /// Eigenvectors of the symmetrized operator, parallel to eigenvalues. For a
  /// Hermitian operator each is stored as (real parts, imaginary parts).
  std::vector<std::vector<double>> vectors;
};

SpectralReport real_spectrum(Matrix<double> const &m, SpectrumKind kind);

/// Hermitian spectrum through the real embedding [[A,-B],[B,A]], whose
/// eigenvalues are those of A + iB, each doubled.
SpectralReport hermitian_spectrum(Matrix<std::complex<double>> const &m,
                                  SpectrumKind kind);

/// Eigenvalues of D^-1 A (through the similar D^-1/2 A D^-1/2).
SpectralReport adjacency_spectrum(Graph const &g);

/// Eigenvalues of I - D^-1 A.
SpectralReport laplacian_spectrum(Graph const &g);

/// Eigenvalues of I - D^-1 A^sigma.
SpectralReport signed_laplacian_spectrum(Graph const &g, Signature const &sigma);

/// Throws ValidationError naming the first vertex of degree 0.
void require_no_isolated(Graph const &g);

} // namespace cheeger

#endif // CHEEGER_SPECTRA_HPP
