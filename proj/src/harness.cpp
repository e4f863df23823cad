#include "cheeger/harness.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "cheeger/errors.hpp"

namespace cheeger
{

std::string to_string(GraphClass c)
{
  switch (c) {
  case GraphClass::cayley:
    return "cayley";
  case GraphClass::cayley_sum:
    return "cayleysum";
  default:
    return "generic";
  }
}

std::string to_string(Status s)
{
  switch (s) {
  case Status::pass:
    return "pass";
  case Status::fail:
    return "fail";
  case Status::inconclusive:
    return "inconclusive";
  default:
    return "not-applicable";
  }
}

std::string to_string(Relation r) { return r == Relation::geq ? ">=" : "<="; }

Instance Instance::of(std::string name, Graph g)
{
  Instance inst;
  inst.name = std::move(name);
  inst.sigma = Signature::all_minus(g);
  inst.pi = VertexMeasure::counting(g.order());
  inst.graph = std::move(g);
  return inst;
}

void RunConfig::validate() const
{
  if (caps.subset_cap <= 0 || caps.tripartition_cap <= 0 ||
      caps.cyclic_max_size <= 0 || caps.cyclic_max_k <= 0 ||
      caps.transitivity_cap <= 0)
    throw ValidationError("caps must be positive");
  if (!(tol > 0.0 && tol <= 1e-3))
    throw ValidationError("tol must lie in (0, 1e-3]");
  if (restarts < 1 || iterations < 0 || eta_sweeps < 1)
    throw ValidationError("search parameters must be positive");
  if (format != "json" && format != "csv")
    throw ValidationError("format must be json or csv");
  for (auto const &[name, value] : overrides) {
    (void)value;
    auto const &known = override_names();
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw ValidationError("unknown override '" + name + "'");
  }
}

std::vector<std::string> const &override_names()
{
  static std::vector<std::string> const names = {
      "h",          "h_out",        "beta",          "beta_out",
      "h_sigma",    "h_out_sigma",  "h_sym_sigma",   "h_out_minus",
      "eta_star_out", "eta_star_sym", "THM5.C",      "THM11_UPPER.C",
      "THM11_LOWER.c"};
  return names;
}

std::optional<double> Verdict::slack() const
{
  if (!margin)
    return std::nullopt;
  double const m = margin->to_double();
  return relation == Relation::geq ? m : -m;
}

std::vector<CheckInfo> const &registry()
{
  static std::vector<CheckInfo> const r = {
      {"ALON", "Alon: lambda_2 >= h_out^2 / (2 d_max (2 + h_out))"},
      {"BHT", "Bobkov-Houdre-Tetali: lambda_2 >= (sqrt(1 + h_out) - 1)^2 / (4 d_max)"},
      {"TBJ", "Trevisan / Bauer-Jost dual Cheeger: beta^2/2 <= 2 - lambda_N <= 2 beta"},
      {"AL", "Atay-Liu signed Cheeger: (h_sigma)^2/2 <= lambda_1_sigma <= 2 h_sigma"},
      {"SANDWICH_EDGE", "h_out >= h >= h_out / d on d-regular graphs"},
      {"SANDWICH_BETA", "beta_out >= beta >= beta_out / d on d-regular graphs"},
      {"SANDWICH_SIGNED",
       "h_out_sigma / (2d) <= h_sigma <= h_out_sigma on d-regular graphs, pi = 1"},
      {"PROP31", "h_out_sigma at sigma = -1 is at least beta_out (pi = 1)"},
      {"LEM31", "2 lambda_1_sigma <= lambda_inf_sigma <= 2 d lambda_1_sigma"},
      {"THM41_OUT", "signed BHT: lambda_inf_sigma >= (sqrt(1 + h_out_sigma) - 1)^2"},
      {"THM41_SYM", "signed BHT: lambda_inf_sigma >= (sqrt(1 + h_sym_sigma) - 1)^2"},
      {"REMARK_TWELFTH",
       "lambda_inf_sigma >= (h_out_sigma)^2 / 12 and >= (h_sym_sigma)^2 / 12"},
      {"KEY1", "1 + t_1 >= (sqrt(1 + beta_out) - 1)^2 / (2d)"},
      {"GAPBETA", "1 + t_1 >= beta_out^2 / (16 d)"},
      {"THM51",
       "Moorman-Ralli-Tetali: h_out <= 200 beta_out for non-bipartite Cayley graphs"},
      {"THM52",
       "h_out <= C beta_out for non-bipartite Cayley sum graphs, proof-extracted C = 200"},
      {"THM53",
       "h_out <= C beta_out for non-bipartite vertex-transitive graphs, proof-extracted "
       "C = 200"},
      {"THM11_UPPER", "t_{N-1} <= 1 - C h_out^2 / d with C = 1/8 (Alon and h_out <= 2)"},
      {"THM11_LOWER", "t_1 >= -1 + c h_out^2 / d with c = 1/(16 * 200^2)"},
      {"THM61_OUT",
       "connection BHT: 2d lambda_1_sigma >= (sqrt(1 + (2/sqrt 5) eta*_out) - 1)^2"},
      {"THM61_SYM",
       "connection BHT: 2d lambda_1_sigma >= (sqrt(1 + (2/sqrt 5) eta*_sym) - 1)^2"},
      {"THM62", "cyclic connection BHT: 2d lambda_1_sigma >= (sqrt(1 + h_out_sigma / 2) - 1)^2"},
  };
  return r;
}

namespace
{

template<typename T>
struct Lazy
{
  bool done = false;
  std::optional<T> value;
  std::string error;

  template<typename F>
  std::optional<T> const &get(F &&compute)
  {
    if (!done) {
      done = true;
      try {
        value = compute();
      } catch (CapExceeded const &e) {
        error = e.what();
      } catch (ValidationError const &e) {
        error = e.what();
      } catch (SolverError const &e) {
        error = e.what();
      }
    }
    return value;
  }
};

Number sqrt_floor(Number const &h, double scale = 1.0)
{
  double const r = std::sqrt(1.0 + scale * h.to_double()) - 1.0;
  return r * r;
}

Number add(Number const &a, Number const &b)
{
  if (a.is_exact() && b.is_exact())
    return a.exact() + b.exact();
  return a.to_double() + b.to_double();
}

class Context
{
public:
  Context(Instance const &inst, RunConfig const &config)
  : inst_(inst), config_(config)
  {}

  Graph const &g() const { return inst_.graph; }
  Instance const &inst() const { return inst_; }
  RunConfig const &config() const { return config_; }

  std::optional<int> degree() const { return g().regular_degree(); }
  bool counting() const { return inst_.pi.is_counting(); }

  bool connected() const { return is_connected(g()); }

  bool bipartite()
  {
    if (!bipartite_)
      bipartite_ = is_bipartite(g()).bipartite;
    return *bipartite_;
  }

  bool has_loops() const
  {
    for (int v = 0; v < g().order(); ++v)
      if (g().has_loop(v))
        return true;
    return false;
  }

  std::optional<bool> vertex_transitive()
  {
    return transitive_.get([&] {
      return is_vertex_transitive(g(), config_.caps.transitivity_cap).transitive;
    });
  }
  std::string const &transitive_error() const { return transitive_.error; }

  Number pinned(std::string const &name, Rational fallback) const
  {
    auto it = config_.overrides.find(name);
    return it != config_.overrides.end() ? it->second : Number(fallback);
  }

  /// Constant by override name, or nullopt with error() set.
  std::optional<Number> constant(std::string const &name)
  {
    if (auto it = config_.overrides.find(name); it != config_.overrides.end())
      return it->second;
    auto &slot = constants_[name];
    auto const &r = slot.get([&] { return compute(name); });
    if (!r)
      return std::nullopt;
    return r->value;
  }

  std::string error(std::string const &name) const
  {
    auto it = constants_.find(name);
    return it == constants_.end() ? "" : it->second.error;
  }

  std::optional<ConstantResult> constant_result(std::string const &name)
  {
    constant(name);
    auto it = constants_.find(name);
    if (it == constants_.end())
      return std::nullopt;
    return it->second.value;
  }

  std::optional<SpectralReport> const &adjacency()
  { return adjacency_.get([&] { return adjacency_spectrum(g()); }); }

  std::optional<SpectralReport> const &laplacian()
  { return laplacian_.get([&] { return laplacian_spectrum(g()); }); }

  std::optional<SpectralReport> const &signed_spectrum()
  { return signed_.get([&] { return signed_laplacian_spectrum(g(), inst_.sigma); }); }

  std::optional<SpectralReport> const &connection_spectrum()
  {
    return connection_.get([&] {
      if (inst_.cyclic)
        return connection_laplacian_spectrum(g(), *inst_.cyclic);
      return connection_laplacian_spectrum(g(), *inst_.connection);
    });
  }

  std::optional<LambdaInfBracket> const &bracket()
  {
    return bracket_.get([&] {
      LambdaOptions opts;
      opts.restarts = config_.restarts;
      opts.iterations = config_.iterations;
      opts.seed = config_.seed;
      opts.caps = config_.caps;
      opts.exec = config_.exec;
      opts.h_out_sigma = constant("h_out_sigma");
      opts.h_sym_sigma = constant("h_sym_sigma");
      return lambda_inf_bracket(g(), inst_.sigma, inst_.pi, opts);
    });
  }
  std::string const &bracket_error() const { return bracket_.error; }

  void collect(VerificationReport &report)
  {
    for (auto const &name : override_names()) {
      auto it = constants_.find(name);
      if (it != constants_.end() && it->second.value)
        report.constants.push_back(*it->second.value);
    }
    for (auto *s : {&adjacency_, &laplacian_, &signed_, &connection_})
      if (s->value)
        report.spectra.push_back(*s->value);
    if (bracket_.value)
      report.bracket = bracket_.value;
  }

private:
  ConstantResult compute(std::string const &name)
  {
    return compute_constant(inst_, name, config_);
  }

  Instance const &inst_;
  RunConfig const &config_;
  std::optional<bool> bipartite_;
  Lazy<bool> transitive_;
  std::map<std::string, Lazy<ConstantResult>> constants_;
  Lazy<SpectralReport> adjacency_, laplacian_, signed_, connection_;
  Lazy<LambdaInfBracket> bracket_;
};

std::string const &citation_of(std::string const &id)
{
  for (auto const &c : registry())
    if (c.id == id)
      return c.citation;
  throw ValidationError("unknown check id '" + id + "'");
}

Verdict blank(std::string const &id)
{
  Verdict v;
  v.id = id;
  v.citation = citation_of(id);
  return v;
}

Verdict not_applicable(std::string const &id, std::string note)
{
  Verdict v = blank(id);
  v.note = std::move(note);
  return v;
}

Verdict inconclusive(std::string const &id, std::string note)
{
  Verdict v = blank(id);
  v.status = Status::inconclusive;
  v.note = std::move(note);
  return v;
}

/// Compares lhs against rhs. Exact margins use no tolerance; floating ones
/// get tol of slack toward passing. A violation is a fail only when both
/// sides are sound for this direction.
Verdict compare(std::string const &id, Number lhs, Number rhs, Relation rel,
                double tol, bool sound = true, std::string note = {})
{
  Verdict v = blank(id);
  v.relation = rel;
  v.margin = lhs - rhs;
  v.lhs = lhs;
  v.rhs = rhs;
  v.note = std::move(note);
  bool holds;
  if (v.margin->is_exact()) {
    auto const zero = Rational(0);
    holds = rel == Relation::geq ? v.margin->exact() >= zero
                                 : v.margin->exact() <= zero;
  } else {
    double const m = v.margin->to_double();
    holds = rel == Relation::geq ? m >= -tol : m <= tol;
  }
  v.status = holds ? Status::pass : sound ? Status::fail : Status::inconclusive;
  return v;
}

int severity(Status s)
{
  switch (s) {
  case Status::fail:
    return 3;
  case Status::inconclusive:
    return 2;
  case Status::pass:
    return 1;
  default:
    return 0;
  }
}

/// Worst status wins; among equals the side closer to violation is shown.
Verdict combine(std::vector<Verdict> parts)
{
  Verdict best = parts.front();
  for (auto const &p : parts) {
    if (severity(p.status) > severity(best.status))
      best = p;
    else if (severity(p.status) == severity(best.status) && p.slack() && best.slack() &&
             *p.slack() < *best.slack())
      best = p;
  }
  return best;
}

std::string missing(Context &ctx, std::initializer_list<char const *> names)
{
  std::string out;
  for (auto const *n : names) {
    auto e = ctx.error(n);
    if (!e.empty())
      out += std::string(n) + ": " + e + "; ";
  }
  return out.empty() ? "required constant unavailable" : out.substr(0, out.size() - 2);
}

std::string const loop_note =
    "instance has self-loops; loop frustration uses the literal formula";

using Evaluator = std::function<Verdict(Context &, std::string const &)>;

Verdict eval_spectral_gap(Context &ctx, std::string const &id)
{
  auto const &lap = ctx.laplacian();
  if (!lap)
    return not_applicable(id, ctx.g().order() == 0 ? "empty graph" : "needs degree >= 1");
  if (ctx.g().order() < 2)
    return not_applicable(id, "needs at least two vertices");
  auto h = ctx.constant("h_out");
  if (!h)
    return inconclusive(id, missing(ctx, {"h_out"}));
  double const lambda2 = lap->eigenvalues[1];
  Rational const dmax(ctx.g().max_degree());
  if (id == "ALON") {
    Number rhs = h->is_exact()
                     ? Number(h->exact() * h->exact() /
                              (Rational(2) * dmax * (Rational(2) + h->exact())))
                     : Number(h->to_double() * h->to_double() /
                              (2.0 * dmax.to_double() * (2.0 + h->to_double())));
    return compare(id, lambda2, rhs, Relation::geq, ctx.config().tol);
  }
  double const rhs = sqrt_floor(*h).to_double() / (4.0 * dmax.to_double());
  return compare(id, lambda2, rhs, Relation::geq, ctx.config().tol);
}

Verdict eval_tbj(Context &ctx, std::string const &id)
{
  if (!ctx.degree())
    return not_applicable(id, "beta is defined for regular graphs");
  auto const &lap = ctx.laplacian();
  if (!lap)
    return not_applicable(id, "needs degree >= 1");
  auto beta = ctx.constant("beta");
  if (!beta)
    return inconclusive(id, missing(ctx, {"beta"}));
  double const gap = 2.0 - lap->eigenvalues.back();
  double const tol = ctx.config().tol;
  return combine({compare(id, gap, *beta * *beta * Number(Rational(1, 2)), Relation::geq,
                          tol, true, "lower side"),
                  compare(id, gap, Number(Rational(2)) * *beta, Relation::leq, tol, true,
                          "upper side")});
}

Verdict eval_al(Context &ctx, std::string const &id)
{
  auto const &sp = ctx.signed_spectrum();
  if (!sp)
    return not_applicable(id, "needs degree >= 1");
  auto h = ctx.constant("h_sigma");
  if (!h)
    return inconclusive(id, missing(ctx, {"h_sigma"}));
  double const l1 = sp->eigenvalues.front();
  double const tol = ctx.config().tol;
  std::string const note = ctx.has_loops() ? loop_note : "";
  auto v = combine({compare(id, l1, *h * *h * Number(Rational(1, 2)), Relation::geq, tol,
                            true, "lower side"),
                    compare(id, l1, Number(Rational(2)) * *h, Relation::leq, tol, true,
                            "upper side")});
  if (!note.empty())
    v.note += "; " + note;
  return v;
}

Verdict eval_sandwich(Context &ctx, std::string const &id, char const *big,
                      char const *small, Rational scale)
{
  auto d = ctx.degree();
  if (!d)
    return not_applicable(id, "needs a regular graph");
  auto b = ctx.constant(big);
  auto s = ctx.constant(small);
  if (!b || !s)
    return inconclusive(id, missing(ctx, {big, small}));
  double const tol = ctx.config().tol;
  Number const lower = *b * Number(scale / Rational(*d));
  return combine({compare(id, *b, *s, Relation::geq, tol, true,
                          std::string(big) + " >= " + small),
                  compare(id, *s, lower, Relation::geq, tol, true,
                          std::string(small) + " >= scaled " + big)});
}

Verdict eval_sandwich_signed(Context &ctx, std::string const &id)
{
  auto d = ctx.degree();
  if (!d || !ctx.counting())
    return not_applicable(id, "needs a regular graph with counting measure");
  auto hs = ctx.constant("h_sigma");
  auto ho = ctx.constant("h_out_sigma");
  if (!hs || !ho)
    return inconclusive(id, missing(ctx, {"h_sigma", "h_out_sigma"}));
  double const tol = ctx.config().tol;
  return combine(
      {compare(id, *hs, *ho * Number(Rational(1, 2 * *d)), Relation::geq, tol, true,
               "h_sigma >= h_out_sigma / (2d)"),
       compare(id, *hs, *ho, Relation::leq, tol, true, "h_sigma <= h_out_sigma")});
}

Verdict eval_prop31(Context &ctx, std::string const &id)
{
  auto hm = ctx.constant("h_out_minus");
  auto bo = ctx.constant("beta_out");
  if (!hm || !bo)
    return inconclusive(id, missing(ctx, {"h_out_minus", "beta_out"}));
  return compare(id, *hm, *bo, Relation::geq, ctx.config().tol, true,
                 "sigma = -1, counting measure; h_out_sigma has no |V1| <= |V|/2 "
                 "restriction, unlike h_out");
}

/// Lambda_inf checks: a sound composite through 2d lambda_1 (regular graphs,
/// counting measure) and a refutation check against the search upper bound.
Verdict eval_lambda_floor(Context &ctx, std::string const &id, Number rhs)
{
  double const tol = ctx.config().tol;
  std::vector<Verdict> parts;
  auto d = ctx.degree();
  if (d && ctx.counting()) {
    auto const &sp = ctx.signed_spectrum();
    if (!sp)
      return not_applicable(id, "needs degree >= 1");
    double const up = 2.0 * *d * sp->eigenvalues.front();
    parts.push_back(compare(id, up, rhs, Relation::geq, tol, true,
                            "composite: 2d lambda_1_sigma >= lambda_inf_sigma"));
  }
  auto const &b = ctx.bracket();
  if (!b)
    return inconclusive(id, "lambda_inf search failed: " + ctx.bracket_error());
  parts.push_back(compare(id, b->search_upper, rhs, Relation::geq, tol, true,
                          "search upper bound on lambda_inf_sigma"));
  return combine(parts);
}

Verdict eval_lem31(Context &ctx, std::string const &id)
{
  auto d = ctx.degree();
  if (!d || !ctx.counting())
    return not_applicable(id, "needs a regular graph with counting measure");
  auto const &sp = ctx.signed_spectrum();
  if (!sp)
    return not_applicable(id, "needs degree >= 1");
  auto const &b = ctx.bracket();
  if (!b)
    return inconclusive(id, "lambda_inf search failed: " + ctx.bracket_error());
  double const l1 = sp->eigenvalues.front();
  double const tol = ctx.config().tol;
  auto lower = compare(id, b->search_upper, 2.0 * l1, Relation::geq, tol, true,
                       "search upper bound vs 2 lambda_1_sigma");
  auto upper = compare(id, b->search_upper, 2.0 * *d * l1, Relation::leq, tol, false,
                       "search upper bound vs 2d lambda_1_sigma");
  auto v = combine({lower, upper});
  if (b->lower > b->upper + tol) {
    v.status = Status::fail;
    v.note = "bracket lower end exceeds upper end";
  }
  return v;
}

Verdict eval_thm41(Context &ctx, std::string const &id, char const *constant)
{
  auto h = ctx.constant(constant);
  if (!h)
    return inconclusive(id, missing(ctx, {constant}));
  auto v = eval_lambda_floor(ctx, id, sqrt_floor(*h));
  if (ctx.has_loops())
    v.note += "; " + loop_note;
  return v;
}

Verdict eval_twelfth(Context &ctx, std::string const &id)
{
  auto ho = ctx.constant("h_out_sigma");
  auto hs = ctx.constant("h_sym_sigma");
  if (!ho || !hs)
    return inconclusive(id, missing(ctx, {"h_out_sigma", "h_sym_sigma"}));
  Number const a = *ho * *ho * Number(Rational(1, 12));
  Number const b = *hs * *hs * Number(Rational(1, 12));
  return combine({eval_lambda_floor(ctx, id, a), eval_lambda_floor(ctx, id, b)});
}

Verdict eval_gap_beta_out(Context &ctx, std::string const &id)
{
  auto d = ctx.degree();
  if (!d)
    return not_applicable(id, "needs a regular graph");
  auto const &adj = ctx.adjacency();
  if (!adj)
    return not_applicable(id, "needs degree >= 1");
  auto bo = ctx.constant("beta_out");
  if (!bo)
    return inconclusive(id, missing(ctx, {"beta_out"}));
  double const gap = 1.0 + adj->eigenvalues.front();
  Number rhs = id == "KEY1" ? Number(sqrt_floor(*bo).to_double() / (2.0 * *d))
                            : *bo * *bo * Number(Rational(1, 16 * *d));
  return compare(id, gap, rhs, Relation::geq, ctx.config().tol);
}

Verdict eval_class_theorem(Context &ctx, std::string const &id)
{
  auto const kind = ctx.inst().construction.kind;
  if (id == "THM51" && kind != GraphClass::cayley)
    return not_applicable(id, "not a Cayley graph");
  if (id == "THM52" && kind != GraphClass::cayley_sum)
    return not_applicable(id, "not a Cayley sum graph");
  if (id == "THM53") {
    auto vt = ctx.vertex_transitive();
    if (!vt)
      return inconclusive(id, "vertex transitivity undecided: " + ctx.transitive_error());
    if (!*vt)
      return not_applicable(id, "not vertex-transitive");
  }
  if (ctx.bipartite())
    return not_applicable(id, "bipartite");
  auto h = ctx.constant("h_out");
  auto bo = ctx.constant("beta_out");
  if (!h || !bo)
    return inconclusive(id, missing(ctx, {"h_out", "beta_out"}));
  std::string note = id == "THM51" ? "" : "proof-extracted constant";
  auto const &c = ctx.inst().construction;
  if (id == "THM51" && c.group && c.s.contains(c.group->identity()))
    note = "identity in S: beta_out = 1, holds trivially";
  if (!ctx.connected())
    note += std::string(note.empty() ? "" : "; ") + "disconnected: h_out = 0, holds trivially";
  return compare(id, *h, ctx.pinned("THM5.C", Rational(200)) * *bo, Relation::leq,
                 ctx.config().tol, true, note);
}

Verdict eval_thm11(Context &ctx, std::string const &id)
{
  auto d = ctx.degree();
  if (!d)
    return not_applicable(id, "needs a regular graph");
  if (ctx.bipartite())
    return not_applicable(id, "bipartite");
  auto const kind = ctx.inst().construction.kind;
  if (kind == GraphClass::generic) {
    auto vt = ctx.vertex_transitive();
    if (!vt)
      return inconclusive(id, "vertex transitivity undecided: " + ctx.transitive_error());
    if (!*vt)
      return not_applicable(id, "not Cayley, Cayley sum or vertex-transitive");
  }
  auto const &adj = ctx.adjacency();
  if (!adj)
    return not_applicable(id, "needs degree >= 1");
  auto h = ctx.constant("h_out");
  if (!h)
    return inconclusive(id, missing(ctx, {"h_out"}));
  Number const hh = *h * *h * Number(Rational(1, *d));
  auto const &t = adj->eigenvalues;
  if (id == "THM11_UPPER") {
    if (t.size() < 2)
      return not_applicable(id, "needs at least two vertices");
    Number const rhs = Number(Rational(1)) - ctx.pinned("THM11_UPPER.C", Rational(1, 8)) * hh;
    return compare(id, t[t.size() - 2], rhs, Relation::leq, ctx.config().tol);
  }
  Number const rhs =
      add(Number(Rational(-1)), ctx.pinned("THM11_LOWER.c", Rational(1, 640000)) * hh);
  return compare(id, t.front(), rhs, Relation::geq, ctx.config().tol);
}

Verdict eval_connection(Context &ctx, std::string const &id)
{
  auto const &inst = ctx.inst();
  if (!inst.cyclic && !inst.connection)
    return not_applicable(id, "instance carries no connection");
  if (id == "THM62" && !inst.cyclic)
    return not_applicable(id, "needs a cyclic connection");
  auto d = ctx.degree();
  if (!d || !ctx.counting())
    return not_applicable(id, "needs a regular graph with counting measure");
  auto const &sp = ctx.connection_spectrum();
  if (!sp)
    return not_applicable(id, "needs degree >= 1");
  char const *name = id == "THM61_SYM" ? "eta_star_sym" : "eta_star_out";
  auto eta = ctx.constant(name);
  if (!eta)
    return inconclusive(id, missing(ctx, {name}));
  double const lhs = 2.0 * *d * sp->eigenvalues.front();
  if (id == "THM62")
    return compare(id, lhs, sqrt_floor(*eta, 0.5), Relation::geq, ctx.config().tol, true,
                   "h_out_sigma over k-th roots of unity");
  // Over the sphere the minimum can only be smaller than the computed one,
  // unless the connection is a signature.
  bool const exact = inst.cyclic ? inst.cyclic->k() <= 2 : false;
  std::string note = exact ? "exact eta*" : inst.cyclic ? "eta* over k-th roots of unity "
                                                          "is an upper bound"
                                                        : "heuristic eta* upper bound";
  return compare(id, lhs, sqrt_floor(*eta, 2.0 / std::sqrt(5.0)), Relation::geq,
                 ctx.config().tol, exact, note);
}

std::map<std::string, Evaluator> const &evaluators()
{
  static std::map<std::string, Evaluator> const m = {
      {"ALON", eval_spectral_gap},
      {"BHT", eval_spectral_gap},
      {"TBJ", eval_tbj},
      {"AL", eval_al},
      {"SANDWICH_EDGE",
       [](Context &c, std::string const &id) {
         return eval_sandwich(c, id, "h_out", "h", Rational(1));
       }},
      {"SANDWICH_BETA",
       [](Context &c, std::string const &id) {
         return eval_sandwich(c, id, "beta_out", "beta", Rational(1));
       }},
      {"SANDWICH_SIGNED", eval_sandwich_signed},
      {"PROP31", eval_prop31},
      {"LEM31", eval_lem31},
      {"THM41_OUT",
       [](Context &c, std::string const &id) { return eval_thm41(c, id, "h_out_sigma"); }},
      {"THM41_SYM",
       [](Context &c, std::string const &id) { return eval_thm41(c, id, "h_sym_sigma"); }},
      {"REMARK_TWELFTH", eval_twelfth},
      {"KEY1", eval_gap_beta_out},
      {"GAPBETA", eval_gap_beta_out},
      {"THM51", eval_class_theorem},
      {"THM52", eval_class_theorem},
      {"THM53", eval_class_theorem},
      {"THM11_UPPER", eval_thm11},
      {"THM11_LOWER", eval_thm11},
      {"THM61_OUT", eval_connection},
      {"THM61_SYM", eval_connection},
      {"THM62", eval_connection},
  };
  return m;
}

std::vector<std::string> expand(std::vector<std::string> const &ids)
{
  std::vector<std::string> out;
  for (auto const &id : ids) {
    if (id == "all") {
      for (auto const &c : registry())
        out.push_back(c.id);
      continue;
    }
    citation_of(id);
    out.push_back(id);
  }
  return out;
}

std::vector<Verdict> evaluate_in(Context &ctx, std::vector<std::string> const &ids)
{
  std::vector<Verdict> out;
  for (auto const &id : expand(ids))
    out.push_back(evaluators().at(id)(ctx, id));
  return out;
}

InstanceSummary summarize(Context &ctx)
{
  InstanceSummary s;
  auto const &inst = ctx.inst();
  s.name = inst.name;
  s.n = inst.graph.order();
  s.edges = inst.graph.edge_count();
  s.regular_degree = inst.graph.regular_degree();
  s.connected = ctx.connected();
  s.bipartite = ctx.bipartite();
  s.has_loops = ctx.has_loops();
  s.graph_class = to_string(inst.construction.kind);
  s.signature = inst.sigma_name;
  return s;
}

} // namespace

ConstantResult compute_constant(Instance const &inst, std::string const &name,
                                RunConfig const &config)
{
  auto const &caps = config.caps;
  auto const exec = config.exec;
  if (name == "h")
    return cheeger_h(inst.graph, caps, exec);
  if (name == "h_out")
    return vertex_iso_h_out(inst.graph, caps, exec);
  if (name == "beta")
    return trevisan_beta(inst.graph, caps, exec);
  if (name == "beta_out")
    return mrt_beta_out(inst.graph, caps, exec);
  if (name == "h_sigma")
    return signed_cheeger(inst.graph, inst.sigma, caps, exec);
  if (name == "h_out_sigma")
    return signed_h_out(inst.graph, inst.sigma, inst.pi, caps, exec);
  if (name == "h_sym_sigma")
    return signed_h_sym(inst.graph, inst.sigma, inst.pi, caps, exec);
  if (name == "h_out_minus") {
    auto r = signed_h_out(inst.graph, Signature::all_minus(inst.graph),
                          VertexMeasure::counting(inst.graph.order()), caps, exec);
    r.name = "h_out_minus";
    return r;
  }
  if (name == "eta_star_out" || name == "eta_star_sym") {
    auto const kind = name == "eta_star_out" ? EtaKind::out : EtaKind::sym;
    if (inst.cyclic)
      return eta_star(inst.graph, *inst.cyclic, inst.pi, kind, caps, exec);
    if (inst.connection) {
      EtaOptions opts;
      opts.restarts = config.restarts;
      opts.sweeps = config.eta_sweeps;
      opts.seed = config.seed;
      opts.caps = caps;
      opts.exec = exec;
      return eta_star(inst.graph, *inst.connection, inst.pi, kind, opts);
    }
    throw ValidationError("instance carries no connection");
  }
  throw ValidationError("unknown constant " + name);
}

std::map<Status, int> VerificationReport::counts() const
{
  std::map<Status, int> c{{Status::pass, 0},
                          {Status::fail, 0},
                          {Status::inconclusive, 0},
                          {Status::not_applicable, 0}};
  for (auto const &v : verdicts)
    ++c[v.status];
  return c;
}

bool VerificationReport::any_fail() const
{
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](Verdict const &v) { return v.status == Status::fail; });
}

std::vector<Verdict> evaluate(Instance const &inst, std::vector<std::string> const &ids,
                              RunConfig const &config)
{
  config.validate();
  Context ctx(inst, config);
  return evaluate_in(ctx, ids);
}

VerificationReport run_suite(Instance const &inst, std::vector<std::string> const &ids,
                             RunConfig const &config)
{
  config.validate();
  Context ctx(inst, config);
  VerificationReport r;
  r.config = config;
  r.instance = summarize(ctx);
  r.verdicts = evaluate_in(ctx, ids);
  ctx.collect(r);
  return r;
}

VerificationReport run_suite(Instance const &inst, RunConfig const &config)
{
  return run_suite(inst, {"all"}, config);
}

void scan_family(std::function<Instance(int)> const &builder,
                 std::vector<int> const &values, std::vector<std::string> const &ids,
                 RunConfig const &config, ScanState &state,
                 std::function<void(ScanState const &)> const &progress)
{
  auto const expanded = expand(ids);
  for (int v : values) {
    if (std::find(state.done.begin(), state.done.end(), v) != state.done.end())
      continue;
    auto const inst = builder(v);
    auto report = run_suite(inst, expanded, config);
    for (auto const &verdict : report.verdicts) {
      state.rows.push_back({inst.name, verdict.id, verdict.status, verdict.margin});
      auto &e = state.entries[verdict.id];
      e.id = verdict.id;
      ++e.counts[verdict.status];
      auto const s = verdict.slack();
      if (s && (!e.min_slack || *s < *e.min_slack)) {
        e.min_slack = s;
        e.instance = inst.name;
        e.margin = verdict.margin;
      }
    }
    state.done.push_back(v);
    bool const failed = report.any_fail();
    if (failed)
      state.failure = std::move(report);
    if (progress)
      progress(state);
    if (failed)
      return;
  }
}

} // namespace cheeger
