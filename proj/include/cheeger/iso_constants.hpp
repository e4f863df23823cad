#ifndef CHEEGER_ISO_CONSTANTS_HPP
#define CHEEGER_ISO_CONSTANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "graph.hpp"
#include "number.hpp"
#include "signed.hpp"

namespace cheeger
{

enum class Method
{
  exact,
  heuristic_upper_bound
};

std::string to_string(Method m);

/// A minimized isoperimetric quantity and the set that attains it.
///
/// For the bipartiteness constants the switching splits the witness set into
/// left (tau = +1) and right (tau = -1).
struct ConstantResult
{
  std::string name;
  Number value;
  Method method = Method::exact;
  VertexSet set;
  std::optional<SwitchingFunction> tau;
  std::optional<VertexSet> left;
  std::optional<VertexSet> right;
  /// Root-of-unity exponents of a cyclic switching, 0 off its domain.
  std::vector<int> root_exponents;
};

/// min |E(V1, V \ V1)| / vol(V1) over nonempty V1 with vol(V1) <= vol(V)/2.
ConstantResult cheeger_h(Graph const &g, Caps const &caps = {},
                         Execution exec = Execution::parallel);

/// min |outer boundary(V1)| / |V1| over nonempty V1 with |V1| <= |V|/2.
ConstantResult vertex_iso_h_out(Graph const &g, Caps const &caps = {},
                                Execution exec = Execution::parallel);

/// Trevisan's bipartiteness ratio
///   min (2|E(L)| + 2|E(R)| + |E(L u R, complement)|) / vol(L u R)
/// over disjoint L, R with L u R nonempty. Regular graphs only.
ConstantResult trevisan_beta(Graph const &g, Caps const &caps = {},
                             Execution exec = Execution::parallel);

/// min (I(L) + I(R) + |outer boundary(L u R)|) / |L u R|.
ConstantResult mrt_beta_out(Graph const &g, Caps const &caps = {},
                            Execution exec = Execution::parallel);

/// min over nonempty V1 of (iota(V1) + |edge boundary(V1)|) / vol(V1).
ConstantResult signed_cheeger(Graph const &g, Signature const &sigma,
                              Caps const &caps = {},
                              Execution exec = Execution::parallel);

/// min over nonempty V1 of (2 iota_inf(V1) + pi(outer boundary)) / pi(V1).
ConstantResult signed_h_out(Graph const &g, Signature const &sigma,
                            VertexMeasure const &pi, Caps const &caps = {},
                            Execution exec = Execution::parallel);

/// min over nonempty V1 of (2 iota_inf(interior V1) + pi(in u out boundary))
/// / pi(V1).
ConstantResult signed_h_sym(Graph const &g, Signature const &sigma,
                            VertexMeasure const &pi, Caps const &caps = {},
                            Execution exec = Execution::parallel);

} // namespace cheeger

#endif // CHEEGER_ISO_CONSTANTS_HPP
