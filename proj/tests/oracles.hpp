#ifndef CHEEGER_TESTS_ORACLES_HPP
#define CHEEGER_TESTS_ORACLES_HPP

// Definition-level reference computations, written independently of the
// library kernels: plain loops over vertex lists, no bit tricks, no Gray
// codes, no pruning. Only for small inputs.

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "cheeger/connection.hpp"
#include "cheeger/graph.hpp"
#include "cheeger/group.hpp"
#include "cheeger/number.hpp"
#include "cheeger/signed.hpp"

namespace oracle
{

using cheeger::Graph;
using cheeger::Rational;
using cheeger::Signature;

/// All subgroups of a group of order at most 16, by subset enumeration.
std::vector<std::vector<int>> subgroups(cheeger::FiniteGroup const &x);

/// Isomorphism test by trying every bijection (order at most 8).
bool isomorphic(cheeger::FiniteGroup const &a, cheeger::FiniteGroup const &b);

/// Graph isomorphism by trying every bijection (at most 9 vertices).
bool isomorphic(Graph const &a, Graph const &b);

std::vector<int> members(int n, unsigned mask);

Rational cheeger_h(Graph const &g);
Rational h_out(Graph const &g);
Rational beta(Graph const &g);
Rational beta_out(Graph const &g);

/// (1/2) sum_{x in V1} sum_{y in V1, y ~ x} |tau_x - sigma_xy tau_y|^p, min over tau.
double iota_edge(Graph const &g, Signature const &sigma, std::vector<int> const &v1,
                 double p = 1.0);

/// (1/2) sum_{x in V1} pi(x) max_{y in V1, y ~ x} |tau_x - sigma_xy tau_y|, min over tau.
double iota_sup(Graph const &g, Signature const &sigma, std::vector<double> const &pi,
                std::vector<int> const &v1);

/// Same objective evaluated at a given switching.
double iota_sup_at(Graph const &g, Signature const &sigma, std::vector<double> const &pi,
                   std::vector<int> const &v1, std::vector<int> const &tau);

double h_sigma(Graph const &g, Signature const &sigma);
double h_out_sigma(Graph const &g, Signature const &sigma, std::vector<double> const &pi);
double h_sym_sigma(Graph const &g, Signature const &sigma, std::vector<double> const &pi);

/// Cyclic sup frustration by enumerating all k^|V1| switchings.
double iota_cyclic(Graph const &g, cheeger::CyclicConnection const &c,
                   std::vector<double> const &pi, std::vector<int> const &v1);

/// Cyclic eta* over all nonempty V1 (out or sym form).
double eta_cyclic(Graph const &g, cheeger::CyclicConnection const &c,
                  std::vector<double> const &pi, bool sym);

/// Adaptive Simpson quadrature of f over [a, b].
double integrate(std::function<double(double)> const &f, double a, double b, double tol);

/// Same, summed over the pieces of [a, b] cut at known discontinuities.
double integrate(std::function<double(double)> const &f, std::vector<double> cuts, double a,
                 double b, double tol);

/// Y_s(z): sign of z when |z| >= s, else 0, with sign(0) = +1.
double cutoff_scalar(double z, double s);

/// Quadrature of int_0^1 |Y_sqrt(t)(z1) - Y_sqrt(t)(z2)| dt.
double cutoff_scalar_quadrature(double z1, double z2);

/// Same for vectors, with zero mapped to e1.
double cutoff_vector_quadrature(std::vector<std::complex<double>> const &z1,
                                std::vector<std::complex<double>> const &z2);

/// Two-dimensional midpoint rule for the sector-rounded cyclic cutoff,
/// evaluating the sector map directly.
double cutoff_cyclic_quadrature(std::complex<double> z1, std::complex<double> z2, int k,
                                int theta_nodes, int t_nodes);

/// Dense normalized matrices built entry by entry.
std::vector<std::vector<double>> normalized_adjacency(Graph const &g);

/// max_i |M v_i - lambda_i v_i| for a candidate spectrum with vectors.
double residual(std::vector<std::vector<double>> const &m, double lambda,
                std::vector<double> const &v);

} // namespace oracle

#endif
