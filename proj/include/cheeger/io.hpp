#ifndef CHEEGER_IO_HPP
#define CHEEGER_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "harness.hpp"

namespace cheeger::io
{

using json = nlohmann::ordered_json;

json to_json(Number const &x);
json to_json(FiniteGroup const &g);
json to_json(SpectralReport const &r);
json to_json(ConstantResult const &r);
json to_json(LambdaInfBracket const &b);
json to_json(Verdict const &v);
json to_json(Caps const &c);
json to_json(RunConfig const &c);
json to_json(VerificationReport const &r);

/// Graph file: vertices, canonical edge list, signature, measure, optional
/// connection and construction metadata.
json to_json(Instance const &inst);

Number number_from_json(json const &j);
FiniteGroup group_from_json(json const &j);
RunConfig config_from_json(json const &j);

/// Rebuilds an instance. When construction metadata is present the graph is
/// rebuilt from the group and must match the stored edges.
Instance instance_from_json(json const &j);

/// Descriptors:
///   cayley:GROUP:s1,s2,...      cayleysum:GROUP:s1,s2,...
///   GROUP = zn:N | dn:N | sn:N | table:FILE | prod(GROUP;GROUP)
///   cycle:N  path:N  complete:N  cube:D  petersen  file:PATH
/// Generators are element labels.
Instance parse_descriptor(std::string const &descriptor);

/// Parses a group expression such as "prod(zn:2;dn:3)".
FiniteGroup parse_group(std::string const &text);

/// Replaces {n}, {n-K} and {n+K} in a family template.
std::string instantiate(std::string const &family, int n);

/// "A..B" or "A..B:STEP" with A <= B and STEP >= 1.
std::vector<int> parse_range(std::string const &text);

/// Signature from {"u,v": sign, ...} or [[u, v, sign], ...]; omitted edges
/// are +1.
Signature signature_from_json(Graph const &g, json const &j);

/// Signature from "all-minus", "all-plus" or a JSON file.
Signature parse_signature(Graph const &g, std::string const &text);

/// Measure from a JSON file holding a weight array.
VertexMeasure parse_measure(Graph const &g, std::string const &path);

/// One row per (instance, id); numbers rendered as in the JSON report.
std::string to_csv(std::vector<VerificationReport> const &reports);
std::string constants_csv(json const &constants);

/// Failing report together with everything needed to rerun it.
json counterexample(Instance const &inst, VerificationReport const &report);

/// Instance and config stored in a counterexample file.
std::pair<Instance, RunConfig> load_replay(json const &j);

json checkpoint_key(std::string const &family, std::string const &range,
                    RunConfig const &config);
json to_json(ScanState const &s, json const &key);
/// Empty state when the key differs.
ScanState scan_state_from_json(json const &j, json const &key);
json scan_summary(ScanState const &s);
std::string scan_csv(ScanState const &s);

json read_json_file(std::string const &path);
void write_text(std::string const &path, std::string const &text);

} // namespace cheeger::io

#endif // CHEEGER_IO_HPP
