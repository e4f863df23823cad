#include <filesystem>
#include <iostream>

#include <CLI11.hpp>

#include "cheeger/errors.hpp"
#include "cheeger/io.hpp"

using namespace cheeger;
using io::json;

namespace
{

constexpr int exit_pass = 0;
constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Common
{
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int subset_cap = 22;
  int tripartition_cap = 14;
  int restarts = 8;
  int iterations = 2000;
  bool serial = false;
  std::string out;
  std::string format = "json";
  std::string sigma;
  std::string pi;
  std::vector<std::string> overrides;

  RunConfig config() const
  {
    RunConfig c;
    c.seed = seed;
    c.tol = tol;
    c.caps.subset_cap = subset_cap;
    c.caps.tripartition_cap = tripartition_cap;
    c.restarts = restarts;
    c.iterations = iterations;
    c.exec = serial ? Execution::serial : Execution::parallel;
    c.out = out;
    c.format = format;
    for (auto const &o : overrides) {
      auto eq = o.find('=');
      if (eq == std::string::npos)
        throw ValidationError("override must be NAME=VALUE, got '" + o + "'");
      c.overrides[o.substr(0, eq)] = io::number_from_json(o.substr(eq + 1));
    }
    c.validate();
    return c;
  }
};

void add_common(CLI::App *cmd, Common &c, bool instance_options)
{
  cmd->add_option("--seed", c.seed, "Random seed");
  cmd->add_option("--tol", c.tol, "Slack for floating comparisons");
  cmd->add_option("--subset-cap", c.subset_cap, "Largest n for 2^n scans");
  cmd->add_option("--tripartition-cap", c.tripartition_cap, "Largest n for 3^n scans");
  cmd->add_option("--restarts", c.restarts, "Restarts of the randomized searches");
  cmd->add_option("--iterations", c.iterations, "Iterations per lambda_inf restart");
  cmd->add_flag("--serial", c.serial, "Use the serial kernels");
  cmd->add_option("--out", c.out, "Output file (default stdout)");
  cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  if (instance_options) {
    cmd->add_option("--sigma", c.sigma, "all-minus, all-plus or a signature file");
    cmd->add_option("--pi", c.pi, "Vertex measure file");
  }
}

void emit(Common const &c, std::string const &text)
{
  if (c.out.empty())
    std::cout << text;
  else
    io::write_text(c.out, text);
}

Instance apply_options(Instance inst, Common const &c)
{
  if (!c.sigma.empty()) {
    inst.sigma = io::parse_signature(inst.graph, c.sigma);
    inst.sigma_name = c.sigma;
  }
  if (!c.pi.empty())
    inst.pi = io::parse_measure(inst.graph, c.pi);
  return inst;
}

Instance load_input(std::string const &input, Common const &c)
{
  if (std::filesystem::is_regular_file(input))
    return apply_options(io::instance_from_json(io::read_json_file(input)), c);
  return apply_options(io::parse_descriptor(input), c);
}

std::vector<std::string> split_ids(std::string const &ids)
{
  std::vector<std::string> out;
  std::string cur;
  for (char ch : ids + ",") {
    if (ch == ',') {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  return out;
}

std::string counterexample_path(std::string const &explicit_path, Common const &c)
{
  if (!explicit_path.empty())
    return explicit_path;
  return c.out.empty() ? "counterexample.json" : c.out + ".counterexample.json";
}

int cmd_build(std::string const &descriptor, Common const &c)
{
  auto inst = load_input(descriptor, c);
  emit(c, io::to_json(inst).dump(2) + "\n");
  return exit_pass;
}

int cmd_constants(std::string const &input, std::string const &which, Common const &c)
{
  auto const config = c.config();
  auto const inst = load_input(input, c);
  json constants = json::array();
  for (auto const &name : split_ids(which)) {
    if (name == "lambda_inf") {
      LambdaOptions opts;
      opts.restarts = config.restarts;
      opts.iterations = config.iterations;
      opts.seed = config.seed;
      opts.caps = config.caps;
      opts.exec = config.exec;
      auto b = lambda_inf_bracket(inst.graph, inst.sigma, inst.pi, opts);
      constants.push_back({{"name", "lambda_inf"},
                           {"status", "ok"},
                           {"value", format12(b.upper)},
                           {"method", "bracket"},
                           {"bracket", io::to_json(b)}});
      continue;
    }
    auto const &known = override_names();
    if (std::find(known.begin(), known.end(), name) == known.end() ||
        name.find('.') != std::string::npos)
      throw ValidationError("unknown constant '" + name + "'");
    try {
      constants.push_back(io::to_json(compute_constant(inst, name, config)));
    } catch (CapExceeded const &e) {
      constants.push_back({{"name", name}, {"status", "cap-exceeded"}, {"note", e.what()}});
    } catch (ValidationError const &e) {
      constants.push_back({{"name", name}, {"status", "not-applicable"}, {"note", e.what()}});
    }
  }
  if (c.format == "csv") {
    emit(c, io::constants_csv(constants));
  } else {
    json j = {{"instance", inst.name},
              {"seed", config.seed},
              {"caps", io::to_json(config.caps)},
              {"constants", constants}};
    emit(c, j.dump(2) + "\n");
  }
  return exit_pass;
}

int cmd_verify(std::string const &input, std::string const &ids, std::string const &replay,
               bool drop_overrides, std::string const &cx_path, Common const &c)
{
  Instance inst;
  RunConfig config;
  std::vector<std::string> id_list = split_ids(ids);
  if (!replay.empty()) {
    auto const j = io::read_json_file(replay);
    auto loaded = io::load_replay(j);
    inst = std::move(loaded.first);
    config = std::move(loaded.second);
    if (drop_overrides)
      config.overrides.clear();
    for (auto const &[k, v] : c.config().overrides)
      config.overrides[k] = v;
    config.out = c.out;
    config.format = c.format;
    if (ids == "all")
      id_list = j.at("replay").at("ids").get<std::vector<std::string>>();
  } else {
    if (input.empty())
      throw ValidationError("verify needs an input or --replay");
    config = c.config();
    inst = load_input(input, c);
  }
  auto const report = run_suite(inst, id_list, config);
  if (c.format == "csv")
    emit(c, io::to_csv({report}));
  else
    emit(c, io::to_json(report).dump(2) + "\n");

  auto const counts = report.counts();
  std::cerr << inst.name << ": " << counts.at(Status::pass) << " pass, "
            << counts.at(Status::fail) << " fail, " << counts.at(Status::inconclusive)
            << " inconclusive, " << counts.at(Status::not_applicable)
            << " not-applicable\n";
  if (report.any_fail()) {
    auto const path = counterexample_path(cx_path, c);
    io::write_text(path, io::counterexample(inst, report).dump(2) + "\n");
    std::cerr << "counterexample written to " << path << "\n";
    return exit_fail;
  }
  return exit_pass;
}

int cmd_scan(std::string const &family, std::string const &range, std::string const &ids,
             std::string const &checkpoint, std::string const &cx_path, Common const &c)
{
  auto const config = c.config();
  auto const values = io::parse_range(range);
  auto const id_list = split_ids(ids);
  io::instantiate(family, values.front());
  auto const key = io::checkpoint_key(family, range, config);

  ScanState state;
  if (!checkpoint.empty() && std::filesystem::is_regular_file(checkpoint))
    state = io::scan_state_from_json(io::read_json_file(checkpoint), key);

  auto builder = [&](int v) { return load_input(io::instantiate(family, v), c); };
  scan_family(builder, values, id_list, config, state, [&](ScanState const &s) {
    if (!checkpoint.empty())
      io::write_text(checkpoint, io::to_json(s, key).dump(2) + "\n");
  });

  if (c.format == "csv") {
    emit(c, io::scan_csv(state));
  } else {
    json j = {{"family", family},
              {"range", range},
              {"seed", config.seed},
              {"caps", io::to_json(config.caps)},
              {"summary", io::scan_summary(state)}};
    emit(c, j.dump(2) + "\n");
  }
  if (state.failure) {
    auto const path = counterexample_path(cx_path, c);
    auto const inst = load_input(state.failure->instance.name, c);
    io::write_text(path, io::counterexample(inst, *state.failure).dump(2) + "\n");
    std::cerr << "counterexample written to " << path << "\n";
    return exit_fail;
  }
  return exit_pass;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Cheeger-type constants and spectral inequalities on small graphs"};
  app.require_subcommand(1);

  Common common;
  std::string input, ids = "all", which = "h,h_out,beta,beta_out,h_sigma,h_out_sigma,h_sym_sigma";
  std::string replay, cx_path, family, range, checkpoint;
  bool drop_overrides = false;

  auto *build = app.add_subcommand("build", "Build a graph file from a descriptor");
  build->add_option("descriptor", input, "Graph descriptor")->required();
  add_common(build, common, true);

  auto *constants = app.add_subcommand("constants", "Compute isoperimetric constants");
  constants->add_option("input", input, "Graph file or descriptor")->required();
  constants->add_option("--which", which, "Comma-separated constant names");
  add_common(constants, common, true);

  auto *verify = app.add_subcommand("verify", "Evaluate inequality checks");
  verify->add_option("input", input, "Graph file or descriptor");
  verify->add_option("--ids", ids, "Comma-separated check ids or 'all'");
  verify->add_option("--override", common.overrides, "Replace a constant: NAME=VALUE");
  verify->add_option("--replay", replay, "Rerun a counterexample file");
  verify->add_flag("--no-overrides", drop_overrides, "Drop overrides stored in --replay");
  verify->add_option("--counterexample", cx_path, "Where to write a counterexample");
  add_common(verify, common, true);

  auto *scan = app.add_subcommand("scan", "Run checks over a family of instances");
  scan->add_option("family", family, "Descriptor template with {n}")->required();
  scan->add_option("range", range, "A..B or A..B:STEP")->required();
  scan->add_option("--ids", ids, "Comma-separated check ids or 'all'");
  scan->add_option("--checkpoint", checkpoint, "Progress file for resuming");
  scan->add_option("--override", common.overrides, "Replace a constant: NAME=VALUE");
  scan->add_option("--counterexample", cx_path, "Where to write a counterexample");
  add_common(scan, common, true);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*build)
      return cmd_build(input, common);
    if (*constants)
      return cmd_constants(input, which, common);
    if (*verify)
      return cmd_verify(input, ids, replay, drop_overrides, cx_path, common);
    return cmd_scan(family, range, ids, checkpoint, cx_path, common);
  } catch (ValidationError const &e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (CapExceeded const &e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (SolverError const &e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return exit_usage;
}
