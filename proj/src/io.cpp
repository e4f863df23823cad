#include "cheeger/io.hpp"

#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

#include "cheeger/cayley.hpp"
#include "cheeger/errors.hpp"

namespace cheeger::io
{

namespace
{

json set_json(VertexSet const &s) { return s.members(); }

json round_all(std::vector<double> const &xs)
{
  json out = json::array();
  for (double x : xs)
    out.push_back(round12(x));
  return out;
}

json optional_number(std::optional<Number> const &x)
{
  return x ? to_json(*x) : json(nullptr);
}

std::string to_string(Execution e) { return e == Execution::serial ? "serial" : "parallel"; }

Status status_from(std::string const &s)
{
  for (auto st : {Status::pass, Status::fail, Status::inconclusive, Status::not_applicable})
    if (cheeger::to_string(st) == s)
      return st;
  throw ValidationError("unknown status '" + s + "'");
}

template<typename T>
T field(json const &j, char const *key)
{
  if (!j.is_object() || !j.contains(key))
    throw ValidationError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (json::exception const &e) {
    throw ValidationError(std::string("bad field '") + key + "': " + e.what());
  }
}

int parse_int(std::string const &text, char const *what)
{
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (used == 0 || used != text.size())
    throw ValidationError(std::string("expected an integer for ") + what + ", got '" +
                          text + "'");
  return v;
}

std::vector<std::string> split(std::string const &text, char sep)
{
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::string csv_field(std::string const &s)
{
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_opt(std::optional<Number> const &x) { return x ? x->render() : ""; }

json row_json(ScanRow const &r)
{
  return {{"instance", r.instance},
          {"id", r.id},
          {"status", to_string(r.status)},
          {"margin", optional_number(r.margin)}};
}

/// Recursive-descent reader for group expressions.
class GroupParser
{
public:
  explicit GroupParser(std::string const &text) : text_(text) {}

  std::pair<FiniteGroup, std::string> group()
  {
    if (text_.compare(pos_, 5, "prod(") == 0) {
      pos_ += 5;
      auto [a, na] = group();
      expect(';');
      auto [b, nb] = group();
      expect(')');
      return {direct_product(a, b), "prod(" + na + ";" + nb + ")"};
    }
    std::string kind = until(":");
    expect(':');
    if (kind == "table") {
      std::string path = until(":;)");
      return {table_group(path), "table:" + path};
    }
    std::string arg = until(":;)");
    int const n = parse_int(arg, "group order");
    if (n < 1)
      throw ValidationError("group parameter must be positive");
    if (kind == "zn")
      return {cyclic_group(n), "zn:" + arg};
    if (kind == "dn") {
      if (n < 2)
        throw ValidationError("dn needs n >= 2");
      return {dihedral_group(n), "dn:" + arg};
    }
    if (kind == "sn")
      return {symmetric_group(n), "sn:" + arg};
    throw ValidationError("unknown group '" + kind + "'");
  }

  std::size_t pos() const { return pos_; }
  void expect(char c)
  {
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ValidationError(std::string("expected '") + c + "' at position " +
                            std::to_string(pos_) + " in '" + text_ + "'");
    ++pos_;
  }
  bool done() const { return pos_ >= text_.size(); }

private:
  std::string until(char const *stops)
  {
    auto end = text_.find_first_of(stops, pos_);
    if (end == std::string::npos)
      end = text_.size();
    std::string out = text_.substr(pos_, end - pos_);
    pos_ = end;
    return out;
  }

  static FiniteGroup table_group(std::string const &path)
  {
    json j = read_json_file(path);
    if (j.is_array())
      return FiniteGroup::from_table(j.get<std::vector<std::vector<int>>>());
    return group_from_json(j);
  }

  std::string const &text_;
  std::size_t pos_ = 0;
};

GroupSubset parse_generators(FiniteGroup const &x, std::string const &list)
{
  GroupSubset s(static_cast<std::size_t>(x.order()));
  if (list.empty())
    return s;
  for (auto const &label : split(list, ',')) {
    auto idx = x.find_label(label);
    if (!idx)
      throw ValidationError("no group element labelled '" + label + "'");
    s.insert(*idx);
  }
  return s;
}

Instance from_construction(std::string const &name, GraphClass kind, FiniteGroup x,
                           std::string group_name, GroupSubset s)
{
  Graph g = kind == GraphClass::cayley ? build_cayley(x, s) : build_cayley_sum(x, s);
  Instance inst = Instance::of(name, std::move(g));
  inst.construction.kind = kind;
  inst.construction.group = std::move(x);
  inst.construction.s = std::move(s);
  inst.construction.group_name = std::move(group_name);
  return inst;
}

std::string edge_key(int u, int v) { return std::to_string(u) + "," + std::to_string(v); }

json matrix_json(CMatrix const &m)
{
  json rows = json::array();
  for (int i = 0; i < m.n; ++i) {
    json row = json::array();
    for (int k = 0; k < m.n; ++k)
      row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(row);
  }
  return rows;
}

CMatrix matrix_from_json(json const &rows, int k)
{
  CMatrix m(k);
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(k))
    throw ValidationError("connection block has the wrong size");
  for (int i = 0; i < k; ++i) {
    if (!rows[i].is_array() || rows[i].size() != static_cast<std::size_t>(k))
      throw ValidationError("connection block has the wrong size");
    for (int l = 0; l < k; ++l) {
      auto const &z = rows[i][l];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
        throw ValidationError("connection entries are [re, im] pairs");
      m(i, l) = Complex(z[0].get<double>(), z[1].get<double>());
    }
  }
  return m;
}

Edge parse_edge_key(Graph const &g, std::string const &key)
{
  auto comma = key.find(',');
  if (comma == std::string::npos)
    throw ValidationError("edge keys look like \"u,v\", got '" + key + "'");
  int u = parse_int(key.substr(0, comma), "edge endpoint");
  int v = parse_int(key.substr(comma + 1), "edge endpoint");
  if (u > v)
    std::swap(u, v);
  if (u < 0 || v >= g.order() || !g.adjacent(u, v))
    throw ValidationError("non-edge " + key);
  return {u, v};
}

json connection_json(Graph const &g, Instance const &inst)
{
  json edges = json::object();
  if (inst.cyclic) {
    for (auto [u, v] : g.edges())
      edges[edge_key(u, v)] = inst.cyclic->exponent(u, v);
    return {{"k", inst.cyclic->k()}, {"kind", "cyclic"}, {"edges", edges}};
  }
  for (auto [u, v] : g.edges())
    edges[edge_key(u, v)] = matrix_json(inst.connection->get(u, v));
  return {{"k", inst.connection->k()}, {"kind", "unitary"}, {"edges", edges}};
}

void connection_from_json(Graph const &g, json const &j, Instance &inst)
{
  int const k = field<int>(j, "k");
  auto const kind = field<std::string>(j, "kind");
  auto const edges = field<json>(j, "edges");
  if (!edges.is_object())
    throw ValidationError("connection edges must be an object keyed by \"u,v\"");
  for (auto const &[key, value] : edges.items()) {
    (void)value;
    auto [u, v] = parse_edge_key(g, key);
    if (key != edge_key(u, v))
      throw ValidationError("connection edge keys use u <= v, got '" + key + "'");
  }
  if (kind == "cyclic") {
    CyclicConnection c(g, k);
    for (auto [u, v] : g.edges())
      if (auto it = edges.find(edge_key(u, v)); it != edges.end())
        c.set(u, v, it->get<int>());
    inst.cyclic = std::move(c);
  } else if (kind == "unitary") {
    Connection c(g, k);
    for (auto [u, v] : g.edges())
      if (auto it = edges.find(edge_key(u, v)); it != edges.end())
        c.set(u, v, matrix_from_json(*it, k));
    inst.connection = std::move(c);
  } else {
    throw ValidationError("connection kind must be cyclic or unitary");
  }
}

} // namespace

Signature signature_from_json(Graph const &g, json const &j)
{
  std::map<Edge, int> m;
  auto put = [&](Edge e, json const &sign) {
    if (!sign.is_number_integer())
      throw ValidationError("signature values must be +1 or -1");
    m[e] = sign.get<int>();
  };
  if (j.is_object()) {
    for (auto const &[key, sign] : j.items())
      put(parse_edge_key(g, key), sign);
  } else if (j.is_array()) {
    for (auto const &e : j) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw ValidationError("signature entries are [u, v, sign]");
      put(parse_edge_key(g, std::to_string(e[0].get<int>()) + "," +
                                std::to_string(e[1].get<int>())),
          e[2]);
    }
  } else {
    throw ValidationError("signature must be an object keyed by \"u,v\"");
  }
  return Signature::from_map(g, m);
}

json to_json(Number const &x) { return x.render(); }

Number number_from_json(json const &j)
{
  if (j.is_number())
    return j.get<double>();
  if (!j.is_string())
    throw ValidationError("expected a number");
  auto const s = j.get<std::string>();
  bool rational = !s.empty();
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
      rational = false;
  if (rational)
    return Rational::parse(s);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (used == 0 || used != s.size())
    throw ValidationError("not a number: '" + s + "'");
  return v;
}

json to_json(FiniteGroup const &g)
{
  return {{"order", g.order()}, {"labels", g.labels()}, {"table", g.table()}};
}

FiniteGroup group_from_json(json const &j)
{
  auto table = field<std::vector<std::vector<int>>>(j, "table");
  std::vector<std::string> labels;
  if (j.contains("labels"))
    labels = field<std::vector<std::string>>(j, "labels");
  return FiniteGroup::from_table(table, labels);
}

json to_json(SpectralReport const &r)
{
  return {{"kind", to_string(r.kind)},
          {"eigenvalues", round_all(r.eigenvalues)},
          {"residual", round12(r.residual)}};
}

json to_json(ConstantResult const &r)
{
  json witness = {{"set", set_json(r.set)}};
  if (r.tau)
    witness["tau"] = r.tau->values();
  if (r.left)
    witness["left"] = set_json(*r.left);
  if (r.right)
    witness["right"] = set_json(*r.right);
  if (!r.root_exponents.empty())
    witness["root_exponents"] = r.root_exponents;
  return {{"name", r.name},
          {"status", "ok"},
          {"value", to_json(r.value)},
          {"method", to_string(r.method)},
          {"witness", witness}};
}

json to_json(LambdaInfBracket const &b)
{
  auto terms = [](std::vector<BoundTerm> const &ts) {
    json out = json::object();
    for (auto const &t : ts)
      out[t.name] = {{"value", t.value ? json(round12(*t.value)) : json(nullptr)},
                     {"note", t.note}};
    return out;
  };
  return {{"lower", round12(b.lower)},
          {"upper", round12(b.upper)},
          {"search_upper", round12(b.search_upper)},
          {"lower_terms", terms(b.lower_terms)},
          {"upper_terms", terms(b.upper_terms)},
          {"best_function", round_all(b.best_function)},
          {"seed", b.seed},
          {"restarts", b.restarts},
          {"iterations", b.iterations}};
}

json to_json(Verdict const &v)
{
  return {{"id", v.id},
          {"status", to_string(v.status)},
          {"relation", to_string(v.relation)},
          {"lhs", optional_number(v.lhs)},
          {"rhs", optional_number(v.rhs)},
          {"margin", optional_number(v.margin)},
          {"citation", v.citation},
          {"note", v.note}};
}

json to_json(Caps const &c)
{
  return {{"subset_cap", c.subset_cap},
          {"tripartition_cap", c.tripartition_cap},
          {"cyclic_max_size", c.cyclic_max_size},
          {"cyclic_max_k", c.cyclic_max_k},
          {"transitivity_cap", c.transitivity_cap}};
}

json to_json(RunConfig const &c)
{
  json overrides = json::object();
  for (auto const &[k, v] : c.overrides)
    overrides[k] = to_json(v);
  return {{"seed", c.seed},
          {"caps", to_json(c.caps)},
          {"tol", c.tol},
          {"restarts", c.restarts},
          {"iterations", c.iterations},
          {"eta_sweeps", c.eta_sweeps},
          {"execution", to_string(c.exec)},
          {"overrides", overrides},
          {"format", c.format}};
}

RunConfig config_from_json(json const &j)
{
  RunConfig c;
  c.seed = field<std::uint64_t>(j, "seed");
  auto const caps = field<json>(j, "caps");
  c.caps.subset_cap = field<int>(caps, "subset_cap");
  c.caps.tripartition_cap = field<int>(caps, "tripartition_cap");
  c.caps.cyclic_max_size = field<int>(caps, "cyclic_max_size");
  c.caps.cyclic_max_k = field<int>(caps, "cyclic_max_k");
  c.caps.transitivity_cap = field<int>(caps, "transitivity_cap");
  c.tol = field<double>(j, "tol");
  c.restarts = field<int>(j, "restarts");
  c.iterations = field<int>(j, "iterations");
  c.eta_sweeps = field<int>(j, "eta_sweeps");
  c.exec = field<std::string>(j, "execution") == "serial" ? Execution::serial
                                                          : Execution::parallel;
  auto const overrides = field<json>(j, "overrides");
  for (auto const &[k, v] : overrides.items())
    c.overrides[k] = number_from_json(v);
  if (j.contains("format"))
    c.format = field<std::string>(j, "format");
  c.validate();
  return c;
}

json to_json(VerificationReport const &r)
{
  auto const &s = r.instance;
  json counts = json::object();
  for (auto const &[st, n] : r.counts())
    counts[to_string(st)] = n;
  json verdicts = json::array();
  for (auto const &v : r.verdicts)
    verdicts.push_back(to_json(v));
  json constants = json::array();
  for (auto const &c : r.constants)
    constants.push_back(to_json(c));
  json spectra = json::array();
  for (auto const &sp : r.spectra)
    spectra.push_back(to_json(sp));
  return {{"instance",
           {{"name", s.name},
            {"n", s.n},
            {"edges", s.edges},
            {"regular_degree",
             s.regular_degree ? json(*s.regular_degree) : json(nullptr)},
            {"connected", s.connected},
            {"bipartite", s.bipartite},
            {"has_loops", s.has_loops},
            {"class", s.graph_class},
            {"signature", s.signature}}},
          {"seed", r.config.seed},
          {"caps", to_json(r.config.caps)},
          {"config", to_json(r.config)},
          {"counts", counts},
          {"verdicts", verdicts},
          {"constants", constants},
          {"spectra", spectra},
          {"lambda_inf", r.bracket ? to_json(*r.bracket) : json(nullptr)}};
}

json to_json(Instance const &inst)
{
  auto const &g = inst.graph;
  auto const edges = g.edges();
  json e = json::array(), signs = json::object();
  for (auto [u, v] : edges) {
    e.push_back({u, v});
    signs[edge_key(u, v)] = inst.sigma.sign(u, v);
  }
  auto const bip = is_bipartite(g);
  auto const d = g.regular_degree();
  json meta = {{"regular_degree", d ? json(*d) : json(nullptr)},
               {"connected", is_connected(g)},
               {"connected_method", "bfs"},
               {"bipartite", bip.bipartite},
               {"bipartite_method", "bfs-two-coloring"}};
  json j = {{"format", "cheeger-graph"},
            {"version", 1},
            {"name", inst.name},
            {"n", g.order()},
            {"edges", e},
            {"signature_name", inst.sigma_name},
            {"signature", signs},
            {"measure", std::vector<double>(inst.pi.weights().begin(),
                                            inst.pi.weights().end())},
            {"metadata", meta}};
  auto const &c = inst.construction;
  if (c.kind != GraphClass::generic && c.group) {
    json gens = json::array();
    for (int a : c.s.members())
      gens.push_back(c.group->label(a));
    if (c.kind == GraphClass::cayley)
      j["metadata"]["bipartite_algebraic"] = cayley_bipartite_algebraic(*c.group, c.s);
    else
      j["metadata"]["connected_algebraic"] = cayley_sum_connected_algebraic(*c.group, c.s);
    j["construction"] = {{"kind", to_string(c.kind)},
                         {"group_name", c.group_name},
                         {"group", to_json(*c.group)},
                         {"generators", gens}};
  }
  if (inst.cyclic || inst.connection)
    j["connection"] = connection_json(g, inst);
  return j;
}

Instance instance_from_json(json const &j)
{
  if (!j.is_object() || j.value("format", "") != "cheeger-graph")
    throw ValidationError("not a graph file");
  int const n = field<int>(j, "n");
  if (n < 0)
    throw ValidationError("negative vertex count");
  std::vector<Edge> edges;
  for (auto const &e : field<json>(j, "edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw ValidationError("edges are [u, v] integer pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Graph g(n, edges);
  edges = g.edges();

  Instance inst;
  if (j.contains("construction")) {
    auto const &c = j["construction"];
    auto const kind_name = field<std::string>(c, "kind");
    GraphClass kind;
    if (kind_name == "cayley")
      kind = GraphClass::cayley;
    else if (kind_name == "cayleysum")
      kind = GraphClass::cayley_sum;
    else
      throw ValidationError("unknown construction '" + kind_name + "'");
    auto x = group_from_json(field<json>(c, "group"));
    std::string gens;
    for (auto const &s : field<std::vector<std::string>>(c, "generators"))
      gens += (gens.empty() ? "" : ",") + s;
    auto s = parse_generators(x, gens);
    inst = from_construction(field<std::string>(j, "name"), kind, std::move(x),
                             field<std::string>(c, "group_name"), std::move(s));
    if (!(inst.graph == g))
      throw ValidationError("stored edges do not match the construction");
  } else {
    inst = Instance::of(field<std::string>(j, "name"), std::move(g));
  }
  auto const &graph = inst.graph;

  if (j.contains("signature")) {
    inst.sigma = signature_from_json(graph, j["signature"]);
    inst.sigma_name = j.value("signature_name", "file");
  }
  if (j.contains("measure")) {
    auto w = field<std::vector<double>>(j, "measure");
    if (w.size() != static_cast<std::size_t>(n))
      throw ValidationError("measure needs one weight per vertex");
    inst.pi = VertexMeasure(std::move(w));
  }
  if (j.contains("connection"))
    connection_from_json(graph, j["connection"], inst);
  return inst;
}

FiniteGroup parse_group(std::string const &text)
{
  GroupParser p(text);
  auto g = p.group();
  if (!p.done())
    throw ValidationError("trailing text in group '" + text + "'");
  return std::move(g.first);
}

Instance parse_descriptor(std::string const &d)
{
  auto colon = d.find(':');
  std::string const head = d.substr(0, colon);
  std::string const rest = colon == std::string::npos ? "" : d.substr(colon + 1);
  auto number = [&](char const *what) {
    if (colon == std::string::npos)
      throw ValidationError(std::string(what) + " needs a parameter");
    return parse_int(rest, what);
  };
  if (head == "cayley" || head == "cayleysum") {
    GroupParser p(rest);
    auto [x, name] = p.group();
    p.expect(':');
    auto s = parse_generators(x, rest.substr(p.pos()));
    auto kind = head == "cayley" ? GraphClass::cayley : GraphClass::cayley_sum;
    return from_construction(d, kind, std::move(x), name, std::move(s));
  }
  if (head == "file")
    return instance_from_json(read_json_file(rest));
  if (head == "petersen" && colon == std::string::npos)
    return Instance::of(d, petersen_graph());
  if (head == "cycle") {
    int n = number("cycle");
    if (n < 3)
      throw ValidationError("cycle needs n >= 3");
    return Instance::of(d, cycle_graph(n));
  }
  if (head == "path") {
    int n = number("path");
    if (n < 1)
      throw ValidationError("path needs n >= 1");
    return Instance::of(d, path_graph(n));
  }
  if (head == "complete") {
    int n = number("complete");
    if (n < 1)
      throw ValidationError("complete needs n >= 1");
    return Instance::of(d, complete_graph(n));
  }
  if (head == "cube") {
    int n = number("cube");
    if (n < 1 || n > 10)
      throw ValidationError("cube needs 1 <= d <= 10");
    return Instance::of(d, hypercube_graph(n));
  }
  throw ValidationError("unknown descriptor '" + d + "'");
}

std::string instantiate(std::string const &family, int n)
{
  static std::regex const slot(R"(\{n(([+-])(\d+))?\})");
  std::string out;
  auto begin = std::sregex_iterator(family.begin(), family.end(), slot);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    auto const &m = *it;
    out += family.substr(last, m.position() - last);
    int v = n;
    if (m[1].matched) {
      int k = std::stoi(m[3].str());
      v = m[2].str() == "+" ? n + k : n - k;
    }
    out += std::to_string(v);
    last = m.position() + m.length();
  }
  out += family.substr(last);
  if (out == family)
    throw ValidationError("family template has no {n} slot");
  return out;
}

std::vector<int> parse_range(std::string const &text)
{
  static std::regex const re(R"((-?\d+)\.\.(-?\d+)(:(\d+))?)");
  std::smatch m;
  if (!std::regex_match(text, m, re))
    throw ValidationError("range must look like A..B or A..B:STEP");
  int a = std::stoi(m[1].str()), b = std::stoi(m[2].str());
  int step = m[3].matched ? std::stoi(m[4].str()) : 1;
  if (a > b)
    throw ValidationError("empty range " + text);
  if (step < 1)
    throw ValidationError("range step must be positive");
  std::vector<int> out;
  for (int v = a; v <= b; v += step)
    out.push_back(v);
  return out;
}

Signature parse_signature(Graph const &g, std::string const &text)
{
  if (text == "all-minus")
    return Signature::all_minus(g);
  if (text == "all-plus")
    return Signature::all_plus(g);
  return signature_from_json(g, read_json_file(text));
}

VertexMeasure parse_measure(Graph const &g, std::string const &path)
{
  json j = read_json_file(path);
  std::vector<double> w;
  try {
    w = j.get<std::vector<double>>();
  } catch (json::exception const &) {
    throw ValidationError("measure file holds an array of weights");
  }
  if (w.size() != static_cast<std::size_t>(g.order()))
    throw ValidationError("measure needs one weight per vertex");
  return VertexMeasure(std::move(w));
}

std::string to_csv(std::vector<VerificationReport> const &reports)
{
  std::ostringstream out;
  out << "instance,id,status,relation,lhs,rhs,margin\n";
  for (auto const &r : reports)
    for (auto const &v : r.verdicts)
      out << csv_field(r.instance.name) << ',' << v.id << ',' << to_string(v.status) << ','
          << to_string(v.relation) << ',' << render_opt(v.lhs) << ',' << render_opt(v.rhs)
          << ',' << render_opt(v.margin) << '\n';
  return out.str();
}

std::string constants_csv(json const &constants)
{
  std::ostringstream out;
  out << "name,status,value,method,note\n";
  for (auto const &c : constants)
    out << c.value("name", "") << ',' << c.value("status", "") << ','
        << c.value("value", "") << ',' << c.value("method", "") << ','
        << csv_field(c.value("note", "")) << '\n';
  return out.str();
}

json counterexample(Instance const &inst, VerificationReport const &report)
{
  json failing = json::array(), ids = json::array();
  for (auto const &v : report.verdicts) {
    ids.push_back(v.id);
    if (v.status == Status::fail)
      failing.push_back(to_json(v));
  }
  return {{"format", "cheeger-counterexample"},
          {"instance", to_json(inst)},
          {"failing", failing},
          {"report", to_json(report)},
          {"replay",
           {{"command", "cheeger verify --replay FILE"},
            {"ids", ids},
            {"config", to_json(report.config)}}}};
}

std::pair<Instance, RunConfig> load_replay(json const &j)
{
  if (!j.is_object() || j.value("format", "") != "cheeger-counterexample")
    throw ValidationError("not a counterexample file");
  auto const &replay = field<json>(j, "replay");
  return {instance_from_json(field<json>(j, "instance")),
          config_from_json(field<json>(replay, "config"))};
}

json checkpoint_key(std::string const &family, std::string const &range,
                    RunConfig const &config)
{
  return {{"family", family},
          {"range", range},
          {"seed", config.seed},
          {"caps", to_json(config.caps)}};
}

json to_json(ScanState const &s, json const &key)
{
  std::vector<int> done = s.done;
  // A failing instance is rerun on resume so the failure is reported again.
  if (s.failure && !done.empty())
    done.pop_back();
  json entries = json::object();
  for (auto const &[id, e] : s.entries) {
    json counts = json::object();
    for (auto const &[st, n] : e.counts)
      counts[to_string(st)] = n;
    entries[id] = {{"min_slack", e.min_slack ? json(*e.min_slack) : json(nullptr)},
                   {"instance", e.instance},
                   {"margin", optional_number(e.margin)},
                   {"counts", counts}};
  }
  json rows = json::array();
  for (auto const &r : s.rows)
    if (!s.failure || r.instance != s.failure->instance.name)
      rows.push_back(row_json(r));
  return {{"format", "cheeger-checkpoint"}, {"key", key}, {"done", done},
          {"entries", entries}, {"rows", rows}};
}

ScanState scan_state_from_json(json const &j, json const &key)
{
  ScanState s;
  if (!j.is_object() || j.value("format", "") != "cheeger-checkpoint" ||
      j.value("key", json()) != key)
    return s;
  s.done = field<std::vector<int>>(j, "done");
  auto const entries = field<json>(j, "entries");
  for (auto const &[id, e] : entries.items()) {
    ScanEntry entry;
    entry.id = id;
    if (!e.at("min_slack").is_null())
      entry.min_slack = e.at("min_slack").get<double>();
    entry.instance = field<std::string>(e, "instance");
    if (!e.at("margin").is_null())
      entry.margin = number_from_json(e.at("margin"));
    auto const counts = field<json>(e, "counts");
    for (auto const &[st, n] : counts.items())
      entry.counts[status_from(st)] = n.get<int>();
    s.entries[id] = entry;
  }
  for (auto const &r : field<json>(j, "rows")) {
    ScanRow row;
    row.instance = field<std::string>(r, "instance");
    row.id = field<std::string>(r, "id");
    row.status = status_from(field<std::string>(r, "status"));
    if (!r.at("margin").is_null())
      row.margin = number_from_json(r.at("margin"));
    s.rows.push_back(row);
  }
  return s;
}

json scan_summary(ScanState const &s)
{
  json entries = json::array();
  for (auto const &[id, e] : s.entries) {
    json counts = json::object();
    for (auto const &[st, n] : e.counts)
      counts[to_string(st)] = n;
    entries.push_back({{"id", id},
                       {"min_slack", e.min_slack ? json(round12(*e.min_slack)) : json(nullptr)},
                       {"margin", optional_number(e.margin)},
                       {"extremal_instance", e.instance},
                       {"counts", counts}});
  }
  json rows = json::array();
  for (auto const &r : s.rows)
    rows.push_back(row_json(r));
  return {{"instances", s.done.size()},
          {"entries", entries},
          {"rows", rows},
          {"failure", s.failure ? json(s.failure->instance.name) : json(nullptr)}};
}

std::string scan_csv(ScanState const &s)
{
  std::ostringstream out;
  out << "instance,id,status,margin\n";
  for (auto const &r : s.rows)
    out << csv_field(r.instance) << ',' << r.id << ',' << to_string(r.status) << ','
        << render_opt(r.margin) << '\n';
  return out.str();
}

json read_json_file(std::string const &path)
{
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (json::parse_error const &e) {
    throw ValidationError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_text(std::string const &path, std::string const &text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ValidationError("cannot write '" + path + "'");
  out << text;
  if (!out)
    throw ValidationError("failed writing '" + path + "'");
}

} // namespace cheeger::io
