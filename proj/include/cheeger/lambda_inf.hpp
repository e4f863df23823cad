#ifndef CHEEGER_LAMBDA_INF_HPP
#define CHEEGER_LAMBDA_INF_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "graph.hpp"
#include "number.hpp"
#include "signed.hpp"

namespace cheeger
{

struct LambdaOptions
{
  int restarts = 8;
  int iterations = 2000;
  std::uint64_t seed = 0;
  Caps caps;
  Execution exec = Execution::parallel;
  /// Precomputed isoperimetric constants; computed on demand when absent.
  std::optional<Number> h_out_sigma;
  std::optional<Number> h_sym_sigma;
};

struct BoundTerm
{
  std::string name;
  std::optional<double> value; // absent when the term could not be computed
  std::string note;
};

/// Two-sided bound on the sup-form Poincare constant
///   lambda_inf = inf_f sum_x pi(x) max_{y~x} |f(x) - sigma_xy f(y)|^2
///                      / sum_x pi(x) f(x)^2.
/// The upper end is always attained by best_function.
struct LambdaInfBracket
{
  double lower = 0.0;
  double upper = 0.0;
  double search_upper = 0.0; // best ratio found by the descent alone
  std::vector<double> best_function;
  std::vector<BoundTerm> lower_terms;
  std::vector<BoundTerm> upper_terms;
  std::uint64_t seed = 0;
  int restarts = 0;
  int iterations = 0;
};

/// The quotient above; vertices without neighbors contribute 0 to the
/// numerator. Throws ValidationError for f == 0.
double sup_rayleigh_ratio(Graph const &g, Signature const &sigma,
                          VertexMeasure const &pi, std::span<const double> f);

/// Lower end: max of 2 lambda_1 (regular graphs, counting measure) and
/// (sqrt(1 + h) - 1)^2 for h the outer and symmetric signed constants.
/// Upper end: min of 2 d lambda_1 (same conditions) and a projected
/// subgradient search seeded from the first eigenvector and random vectors.
LambdaInfBracket lambda_inf_bracket(Graph const &g, Signature const &sigma,
                                    VertexMeasure const &pi,
                                    LambdaOptions const &opts = {});

/// Closed form of int_0^1 |Y_sqrt(t)(z1) - Y_sqrt(t)(z2)| dt for the scalar
/// cutoff Y_s(z) = sign(z) if |z| >= s else 0, with sign(0) = +1.
double cutoff_integral_scalar(double z1, double z2);

} // namespace cheeger

#endif // CHEEGER_LAMBDA_INF_HPP
