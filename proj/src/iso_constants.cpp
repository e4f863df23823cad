#include "cheeger/iso_constants.hpp"

#include "cheeger/errors.hpp"
#include "cheeger/kernels.hpp"

namespace cheeger
{

std::string to_string(Method m)
{
  return m == Method::exact ? "exact" : "heuristic-upper-bound";
}

namespace
{

void check_cap(Graph const &g, int cap, char const *what)
{
  if (g.order() == 0)
    throw ValidationError("graph has no vertices");
  if (g.order() > cap)
    throw CapExceeded(std::string(what) + " enumerates all subsets; " +
                      std::to_string(g.order()) + " vertices exceed cap " +
                      std::to_string(cap));
}

void check_measure(Graph const &g, VertexMeasure const &pi)
{
  if (pi.size() != static_cast<std::size_t>(g.order()))
    throw ValidationError("vertex measure does not match the graph");
}

std::size_t universe(Graph const &g) { return static_cast<std::size_t>(g.order()); }

template<typename W>
ConstantResult make_result(std::string name, Graph const &g,
                           kernels::Candidate<W> const &c)
{
  if (!c.found)
    throw ValidationError(name + ": no admissible vertex set");
  ConstantResult r;
  r.name = std::move(name);
  if constexpr (std::is_same_v<W, long>)
    r.value = Rational(c.num, c.den);
  else
    r.value = c.num / c.den;
  r.set = VertexSet::from_mask(universe(g), c.set);
  return r;
}

void attach_partition(ConstantResult &r, Graph const &g, std::uint64_t set,
                      std::uint64_t tau)
{
  r.tau = SwitchingFunction::from_mask(r.set, tau);
  r.left = VertexSet::from_mask(universe(g), set & ~tau);
  r.right = VertexSet::from_mask(universe(g), set & tau);
}

std::uint64_t interior_mask(Graph const &g, std::uint64_t set)
{
  VertexSet v1 = VertexSet::from_mask(universe(g), set);
  return interior(g, v1).to_mask();
}

ConstantResult sup_constant(std::string name, Graph const &g,
                            Signature const &sigma, VertexMeasure const &pi,
                            kernels::SupKind kind, Caps const &caps,
                            Execution exec)
{
  check_cap(g, caps.tripartition_cap, name.c_str());
  check_measure(g, pi);
  auto const mg = kernels::make_mask_graph(g, &sigma);
  ConstantResult r;
  std::uint64_t set = 0, tau = 0;
  if (pi.is_integral()) {
    std::vector<long> w;
    for (double x : pi.weights())
      w.push_back(static_cast<long>(x));
    auto const c = kernels::sup_tripartition_scan<long>(mg, w, kind, 2, exec);
    r = make_result(name, g, c);
    set = c.set;
    tau = c.tau;
  } else {
    std::vector<double> w(pi.weights().begin(), pi.weights().end());
    auto const c = kernels::sup_tripartition_scan<double>(mg, w, kind, 2, exec);
    r = make_result(name, g, c);
    set = c.set;
    tau = c.tau;
  }
  std::uint64_t const domain =
      kind == kernels::SupKind::sym ? interior_mask(g, set) : set;
  r.tau = SwitchingFunction::from_mask(VertexSet::from_mask(universe(g), domain),
                                       tau);
  return r;
}

} // namespace

ConstantResult cheeger_h(Graph const &g, Caps const &caps, Execution exec)
{
  check_cap(g, caps.subset_cap, "h");
  auto const c = kernels::cheeger_scan(kernels::make_mask_graph(g), exec);
  return make_result("h", g, c);
}

ConstantResult vertex_iso_h_out(Graph const &g, Caps const &caps, Execution exec)
{
  check_cap(g, caps.subset_cap, "h_out");
  auto const c = kernels::outer_scan(kernels::make_mask_graph(g), exec);
  return make_result("h_out", g, c);
}

ConstantResult trevisan_beta(Graph const &g, Caps const &caps, Execution exec)
{
  if (!g.regular_degree())
    throw ValidationError("beta is defined for regular graphs only");
  check_cap(g, caps.tripartition_cap, "beta");
  auto const minus = Signature::all_minus(g);
  auto const c =
      kernels::edge_tripartition_scan(kernels::make_mask_graph(g, &minus), exec);
  auto r = make_result("beta", g, c);
  attach_partition(r, g, c.set, c.tau);
  return r;
}

ConstantResult mrt_beta_out(Graph const &g, Caps const &caps, Execution exec)
{
  check_cap(g, caps.tripartition_cap, "beta_out");
  auto const minus = Signature::all_minus(g);
  std::vector<long> ones(universe(g), 1);
  auto const c = kernels::sup_tripartition_scan<long>(
      kernels::make_mask_graph(g, &minus), ones, kernels::SupKind::out, 1, exec);
  auto r = make_result("beta_out", g, c);
  attach_partition(r, g, c.set, c.tau);
  return r;
}

ConstantResult signed_cheeger(Graph const &g, Signature const &sigma,
                              Caps const &caps, Execution exec)
{
  check_cap(g, caps.tripartition_cap, "h_sigma");
  auto const c =
      kernels::edge_tripartition_scan(kernels::make_mask_graph(g, &sigma), exec);
  auto r = make_result("h_sigma", g, c);
  r.tau = SwitchingFunction::from_mask(r.set, c.tau);
  return r;
}

ConstantResult signed_h_out(Graph const &g, Signature const &sigma,
                            VertexMeasure const &pi, Caps const &caps,
                            Execution exec)
{
  return sup_constant("h_out_sigma", g, sigma, pi, kernels::SupKind::out, caps,
                      exec);
}

ConstantResult signed_h_sym(Graph const &g, Signature const &sigma,
                            VertexMeasure const &pi, Caps const &caps,
                            Execution exec)
{
  return sup_constant("h_sym_sigma", g, sigma, pi, kernels::SupKind::sym, caps,
                      exec);
}

} // namespace cheeger
