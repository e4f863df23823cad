#ifndef CHEEGER_HARNESS_HPP
#define CHEEGER_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "connection.hpp"
#include "graph.hpp"
#include "group.hpp"
#include "iso_constants.hpp"
#include "lambda_inf.hpp"
#include "number.hpp"
#include "signed.hpp"
#include "spectra.hpp"

namespace cheeger
{

enum class GraphClass
{
  generic,
  cayley,
  cayley_sum
};

std::string to_string(GraphClass c);

struct Construction
{
  GraphClass kind = GraphClass::generic;
  std::optional<FiniteGroup> group;
  GroupSubset s;
  std::string group_name; // e.g. "zn:5"
};

/// A graph plus everything the checks may need. The signature defaults to
/// all -1 and the measure to counting measure.
struct Instance
{
  std::string name;
  Graph graph;
  Signature sigma;
  std::string sigma_name = "all-minus";
  VertexMeasure pi;
  Construction construction;
  std::optional<CyclicConnection> cyclic;
  std::optional<Connection> connection;

  static Instance of(std::string name, Graph g);
};

struct RunConfig
{
  std::uint64_t seed = 0;
  Caps caps;
  double tol = 1e-9;
  int restarts = 8;
  int iterations = 2000;
  int eta_sweeps = 60;
  Execution exec = Execution::parallel;
  /// Replaces a computed constant or a pinned theorem constant by name.
  std::map<std::string, Number> overrides;
  std::string out;
  std::string format = "json";

  /// Throws ValidationError for non-positive caps or tol outside (0, 1e-3].
  void validate() const;
};

/// Names accepted as override keys.
std::vector<std::string> const &override_names();

enum class Status
{
  pass,
  fail,
  inconclusive,
  not_applicable
};

std::string to_string(Status s);

enum class Relation
{
  geq, // lhs >= rhs
  leq  // lhs <= rhs
};

std::string to_string(Relation r);

struct Verdict
{
  std::string id;
  Status status = Status::not_applicable;
  Relation relation = Relation::geq;
  std::optional<Number> lhs;
  std::optional<Number> rhs;
  std::optional<Number> margin; // lhs - rhs
  std::string citation;
  std::string note;

  /// Signed distance from violation: margin for >=, -margin for <=.
  std::optional<double> slack() const;
};

struct CheckInfo
{
  std::string id;
  std::string citation;
};

/// Every registered check in evaluation order.
std::vector<CheckInfo> const &registry();

struct InstanceSummary
{
  std::string name;
  int n = 0;
  std::size_t edges = 0;
  std::optional<int> regular_degree;
  bool connected = false;
  bool bipartite = false;
  bool has_loops = false;
  std::string graph_class;
  std::string signature;
};

struct VerificationReport
{
  InstanceSummary instance;
  std::vector<Verdict> verdicts;
  std::vector<ConstantResult> constants;
  std::vector<SpectralReport> spectra;
  std::optional<LambdaInfBracket> bracket;
  RunConfig config;

  std::map<Status, int> counts() const;
  bool any_fail() const;
};

/// Evaluates the requested ids (unknown ids throw ValidationError).
std::vector<Verdict> evaluate(Instance const &inst, std::vector<std::string> const &ids,
                              RunConfig const &config = {});

/// Evaluates ids ("all" expands to the registry) and attaches the computed
/// constants and spectra.
VerificationReport run_suite(Instance const &inst, std::vector<std::string> const &ids,
                             RunConfig const &config = {});

VerificationReport run_suite(Instance const &inst, RunConfig const &config = {});

/// Computes one named constant (see override_names; overrides are ignored).
/// Throws CapExceeded or ValidationError.
ConstantResult compute_constant(Instance const &inst, std::string const &name,
                                RunConfig const &config = {});

/// Per-id extreme over a family: the instance with the smallest slack.
struct ScanEntry
{
  std::string id;
  std::optional<double> min_slack;
  std::string instance;
  std::optional<Number> margin;
  std::map<Status, int> counts;
};

/// One verdict of one scanned instance.
struct ScanRow
{
  std::string instance;
  std::string id;
  Status status = Status::not_applicable;
  std::optional<Number> margin;
};

struct ScanState
{
  std::vector<int> done;
  std::vector<ScanRow> rows;
  std::map<std::string, ScanEntry> entries;
  std::optional<VerificationReport> failure; // first failing instance
};

/// Runs the suite on builder(v) for each v in values not already in
/// state.done, merging into state and calling progress after each instance.
/// Stops at the first fail.
void scan_family(std::function<Instance(int)> const &builder,
                 std::vector<int> const &values, std::vector<std::string> const &ids,
                 RunConfig const &config, ScanState &state,
                 std::function<void(ScanState const &)> const &progress = {});

} // namespace cheeger

#endif // CHEEGER_HARNESS_HPP
