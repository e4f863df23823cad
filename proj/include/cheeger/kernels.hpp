#ifndef CHEEGER_KERNELS_HPP
#define CHEEGER_KERNELS_HPP

// Exhaustive subset and switching scans on graphs with at most 64 vertices.
//
// Every scan has a serial reference, which evaluates each candidate from
// scratch, and a parallel version (OpenMP over subsets, Gray-code updates over
// switchings). Candidates are compared with a strict total order, so both
// variants return the same optimum and the same witness.
//
// Bit conventions: a vertex set is a mask; in a switching mask a set bit
// means tau(x) = -1.

#include <cstdint>
#include <span>
#include <vector>

#include "config.hpp"
#include "graph.hpp"

namespace cheeger
{

class Signature;

namespace kernels
{

struct MaskGraph
{
  int n = 0;
  std::vector<std::uint64_t> nbr; // contains x itself when x has a loop
  std::vector<std::uint64_t> neg; // neighbors joined by a negative edge
  std::vector<int> degree;
};

/// Throws ValidationError above 64 vertices. Without sigma all signs are +1.
MaskGraph make_mask_graph(Graph const &g, Signature const *sigma = nullptr);

/// num/den with its witness set and switching. den > 0 whenever found.
template<typename W>
struct Candidate
{
  W num{};
  W den{};
  std::uint64_t set = 0;
  std::uint64_t tau = 0;
  bool found = false;
};

/// Strict total order: ratio, then |set|, then set, then tau (+1 first).
template<typename W>
bool better(Candidate<W> const &a, Candidate<W> const &b);

/// Frustrated non-loop edges inside domain under tau.
int frustrated_edges(MaskGraph const &g, std::uint64_t domain, std::uint64_t tau);

/// Vertices of domain with a frustrated neighbor in domain (a loop counts).
std::uint64_t bad_vertices(MaskGraph const &g, std::uint64_t domain,
                           std::uint64_t tau);

/// Negative loops at vertices of domain.
int negative_loops(MaskGraph const &g, std::uint64_t domain);

struct EdgeMin
{
  int frustrated = 0; // non-loop edges
  std::uint64_t tau = 0;
};

/// min over tau on domain of frustrated_edges, ties to the smallest tau.
EdgeMin edge_frustration_min(MaskGraph const &g, std::uint64_t domain,
                             Execution exec);

template<typename W>
struct SupMin
{
  W weight{}; // pi(bad vertices)
  std::uint64_t tau = 0;
};

/// min over tau on domain of the weight of bad_vertices.
template<typename W>
SupMin<W> sup_frustration_min(MaskGraph const &g, std::uint64_t domain,
                              std::span<const W> weights, Execution exec);

/// min |edge boundary| / vol over nonempty sets with 2 vol <= vol(V).
Candidate<long> cheeger_scan(MaskGraph const &g, Execution exec);

/// min |outer boundary| / |set| over nonempty sets with 2 |set| <= n.
Candidate<long> outer_scan(MaskGraph const &g, Execution exec);

/// min over nonempty V1 and tau of (2 m + loops- + |edge boundary|) / vol(V1),
/// m the frustrated edges inside V1 and loops- its negative loops.
Candidate<long> edge_tripartition_scan(MaskGraph const &g, Execution exec);

enum class SupKind
{
  out, // frustration on V1, outer boundary
  sym  // frustration on V1 minus its inner boundary, inner + outer boundary
};

/// min over nonempty V1 and tau of
/// (coefficient * pi(bad) + pi(boundary)) / pi(V1).
template<typename W>
Candidate<W> sup_tripartition_scan(MaskGraph const &g, std::span<const W> weights,
                                   SupKind kind, int coefficient,
                                   Execution exec);

/// Graph with Z_k-valued edge labels: sigma_xy = xi^exponent[x][y].
struct CyclicMaskGraph
{
  int n = 0;
  int k = 1;
  std::vector<std::uint64_t> nbr;
  std::vector<std::vector<int>> exponent; // -1 off the edge set
};

struct CyclicCandidate
{
  double num = 0.0;
  double den = 0.0;
  std::uint64_t set = 0;
  std::vector<int> tau; // exponents, 0 outside the switching domain
  bool found = false;
};

bool better(CyclicCandidate const &a, CyclicCandidate const &b);

/// |1 - xi^m| for m in 0..k-1, exact at 0 and at m = k/2.
std::vector<double> root_distances(int k);

/// (1/2) sum over domain of pi(x) max_y |xi^a_x - sigma_xy xi^a_y|.
double cyclic_sup_frustration(CyclicMaskGraph const &g, std::uint64_t domain,
                              std::span<const int> tau,
                              std::span<const double> weights);

/// Exact minimum over all k^|domain| switchings; ties to the smallest tau.
double cyclic_sup_min(CyclicMaskGraph const &g, std::uint64_t domain,
                      std::span<const double> weights, std::vector<int> &tau);

/// Cyclic analogue of sup_tripartition_scan with coefficient 2.
CyclicCandidate cyclic_sup_scan(CyclicMaskGraph const &g,
                                std::span<const double> weights, SupKind kind,
                                Execution exec);

} // namespace kernels
} // namespace cheeger

#endif // CHEEGER_KERNELS_HPP
