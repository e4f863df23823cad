#ifndef CHEEGER_CONNECTION_HPP
#define CHEEGER_CONNECTION_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "config.hpp"
#include "graph.hpp"
#include "iso_constants.hpp"
#include "signed.hpp"
#include "spectra.hpp"

namespace cheeger
{

using Complex = std::complex<double>;
using CMatrix = Matrix<Complex>;

/// k x k unitary matrices on oriented edges with sigma_yx = sigma_xy^*.
/// Loop matrices are unitary involutions. Defaults to the identity.
class Connection
{
public:
  Connection() = default;
  Connection(Graph const &g, int k);

  /// Sets sigma_uv = m and sigma_vu = m^*. Throws ValidationError unless m is
  /// unitary to 1e-12 (and an involution when u == v).
  void set(int u, int v, CMatrix const &m);

  CMatrix const &at(int u, int slot) const { return blocks_[u][slot]; }
  CMatrix const &get(int u, int v) const;

  int k() const { return k_; }
  int order() const { return static_cast<int>(adj_.size()); }

  /// True when every entry has zero imaginary part.
  bool is_real() const;

  /// The O(1) connection of a signature.
  static Connection from_signature(Graph const &g, Signature const &sigma);

private:
  int k_ = 1;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<CMatrix>> blocks_;
};

/// Connection with values in the k-th roots of unity: sigma_xy = xi^j,
/// xi = exp(2 pi i / k), stored as exponents.
class CyclicConnection
{
public:
  CyclicConnection() = default;
  CyclicConnection(Graph const &g, int k);

  /// Sets the exponent of (u,v) to j and of (v,u) to -j mod k.
  void set(int u, int v, int j);

  int exponent(int u, int v) const;
  int exponent_at(int u, int slot) const { return exps_[u][slot]; }
  int k() const { return k_; }
  int order() const { return static_cast<int>(adj_.size()); }

  /// xi^j, exact when 4j is a multiple of k.
  Complex root(int j) const;

  Connection to_connection(Graph const &g) const;

  /// For k <= 2 the connection is a signature.
  Signature to_signature(Graph const &g) const;

  static CyclicConnection from_signature(Graph const &g, Signature const &sigma);

private:
  int k_ = 1;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> exps_;
};

/// Spectrum of I - D^-1 A^sigma on C^(kN). Real connections use the real
/// symmetric solver, so an O(1) connection reproduces the signed spectrum.
SpectralReport connection_laplacian_spectrum(Graph const &g, Connection const &c);
SpectralReport connection_laplacian_spectrum(Graph const &g,
                                             CyclicConnection const &c);

struct EtaResult
{
  double value = 0.0;
  Method method = Method::exact;
  /// One unit vector per vertex of the domain (empty off the domain).
  std::vector<std::vector<Complex>> tau;
  /// Root exponents for the cyclic minimization.
  std::vector<int> exponents;
};

struct EtaOptions
{
  int restarts = 8;
  int sweeps = 60;
  std::uint64_t seed = 0;
  Caps caps;
  Execution exec = Execution::parallel;
};

/// min over tau: V1 -> roots of unity of
/// (1/2) sum_{x in V1} pi(x) max_{y in V1, y ~ x} |tau(x) - sigma_xy tau(y)|.
/// Exact; throws CapExceeded beyond the cyclic size and k budget.
EtaResult frustration_eta_cyclic(Graph const &g, CyclicConnection const &c,
                                 VertexMeasure const &pi, VertexSet const &v1,
                                 Caps const &caps = {});

/// Same objective with tau valued in the unit sphere (real when the
/// connection is real). Alternating minimization from seeded starts, so the
/// result is only an upper bound.
EtaResult frustration_eta_heuristic(Graph const &g, Connection const &c,
                                    VertexMeasure const &pi, VertexSet const &v1,
                                    EtaOptions const &opts = {});

enum class EtaKind
{
  out,
  sym
};

/// min over nonempty V1 of (2 eta(D) + pi(boundary)) / pi(V1), D = V1 with
/// the outer boundary (out) or D = interior(V1) with in + out boundary (sym).
ConstantResult eta_star(Graph const &g, CyclicConnection const &c,
                        VertexMeasure const &pi, EtaKind kind,
                        Caps const &caps = {},
                        Execution exec = Execution::parallel);

ConstantResult eta_star(Graph const &g, Connection const &c,
                        VertexMeasure const &pi, EtaKind kind,
                        EtaOptions const &opts = {});

/// int_0^1 |Y(z1) - Y(z2)| dt with Y_s(z) = z/|z| for |z| >= s, else 0.
/// The zero vector points along e1.
double cutoff_integral_vector(std::span<const double> z1, std::span<const double> z2);
double cutoff_integral_vector(std::span<const Complex> z1,
                              std::span<const Complex> z2);

/// (1/2pi) int_0^2pi int_0^1 |Y_{sqrt t, theta}(z1) - Y_{sqrt t, theta}(z2)|
/// dt dtheta for the k-sector cutoff, by the midpoint rule in theta with the t
/// integral done exactly. Throws ValidationError below 16 nodes.
double cutoff_integral_cyclic(Complex z1, Complex z2, int k, int resolution);

/// Quadrature error allowance for cutoff_integral_cyclic.
double cyclic_quadrature_allowance(int resolution);

} // namespace cheeger

#endif // CHEEGER_CONNECTION_HPP
