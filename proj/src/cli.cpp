#include "tristrip/cli.hpp"

#include <algorithm>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "tristrip/complex_roots.hpp"
#include "tristrip/errors.hpp"
#include "tristrip/falling_factorial.hpp"
#include "tristrip/graph.hpp"
#include "tristrip/partition.hpp"
#include "tristrip/roots.hpp"
#include "tristrip/spectral.hpp"
#include "tristrip/transfer.hpp"

namespace tristrip::cli {

using tristrip::to_string;

namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

const std::map<std::string, Subcommand>& subcommand_names() {
  static const std::map<std::string, Subcommand> names{
      {"poly", Subcommand::poly},
      {"qvec", Subcommand::qvec},
      {"family", Subcommand::family},
      {"root4", Subcommand::root4},
      {"classify", Subcommand::classify},
      {"predict", Subcommand::predict},
      {"verify-golden", Subcommand::verify_golden},
      {"verify-M", Subcommand::verify_M},
      {"croots", Subcommand::croots},
      {"reproduce-tables", Subcommand::reproduce_tables},
  };
  return names;
}

Json polynomial_json(const IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
  return Json{{"degree", p.degree()}, {"coefficients", coeffs}, {"text", p.to_string()}};
}

Json engine_json(const EngineStats& s) {
  return Json{{"nodes", s.nodes}, {"cache_hits", s.cache_hits}, {"cache_size", s.cache_size}};
}

FramedGraph load_end(const std::string& name, int frame) {
  return load_graph_file(resolve_graph_path(name)).framed(static_cast<std::size_t>(frame));
}

PartitionVector end_vector(const std::string& name, const RunConfig& config) {
  return partitioned_chromatic(load_end(name, config.frame), config.engine);
}

ClassifyOptions classify_options(const RunConfig& config) {
  ClassifyOptions o;
  o.always_sweep = config.always_sweep;
  return o;
}

Rational width_for(int digits) {
  // One extra digit so the rounded midpoint is stable.
  return Rational(1) / ipow(Integer(10), static_cast<unsigned long>(digits + 1));
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ResourceLimitError*>(&e)) return "resource-limit";
  if (dynamic_cast<const GraphFormatError*>(&e)) return "graph-format";
  if (dynamic_cast<const NoSignChange*>(&e)) return "no-sign-change";
  if (dynamic_cast<const NonPositiveAtFour*>(&e)) return "nonpositive-at-4";
  if (dynamic_cast<const InconclusiveClassification*>(&e)) return "inconclusive-classification";
  if (dynamic_cast<const GuardViolation*>(&e)) return "guard-violation";
  if (dynamic_cast<const SingularDError*>(&e)) return "singular-d";
  if (dynamic_cast<const AdjacentMergeError*>(&e)) return "adjacent-merge";
  if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid-argument";
  return "error";
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ResourceLimitError*>(&e)) return kExitResourceLimit;
  if (dynamic_cast<const GraphFormatError*>(&e) || dynamic_cast<const std::invalid_argument*>(&e)) {
    return kExitBadInput;
  }
  return kExitComputation;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  return out;
}

std::string fixture_path(const std::string& file) { return (fs::path(TRISTRIP_FIXTURE_DIR) / file).string(); }

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// ffK or ffK*(x-3).
IntPolynomial parse_multiplier(const std::string& token) {
  std::string t = token;
  bool times_x3 = false;
  const std::string suffix = "*(x-3)";
  if (t.size() > suffix.size() && t.compare(t.size() - suffix.size(), suffix.size(), suffix) == 0) {
    times_x3 = true;
    t.resize(t.size() - suffix.size());
  }
  if (t.rfind("ff", 0) != 0) throw std::invalid_argument("bad multiplier " + token);
  IntPolynomial m = falling_factorial(static_cast<unsigned>(std::stoul(t.substr(2))));
  return times_x3 ? m * IntPolynomial::linear_root(Integer(3)) : m;
}

// Q(H) columns from the shipped reference file, multipliers applied.
std::array<IntPolynomial, 4> read_component_fixture() {
  std::array<IntPolynomial, 4> multipliers;
  std::array<std::map<int, Integer>, 4> columns;
  bool have_multipliers = false;
  for (const auto& line : read_lines(fixture_path("table1.csv"))) {
    if (line.rfind("# multiplier,", 0) == 0) {
      auto cells = split_csv_line(line.substr(2));
      if (cells.size() != 5) throw std::invalid_argument("bad multiplier line");
      for (int i = 0; i < 4; ++i) multipliers[i] = parse_multiplier(cells[i + 1]);
      have_multipliers = true;
      continue;
    }
    if (line.empty() || line[0] == '#' || line.rfind("power", 0) == 0) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != 5) throw std::invalid_argument("bad row: " + line);
    for (int i = 0; i < 4; ++i) columns[i][std::stoi(cells[0])] = Integer(cells[i + 1]);
  }
  if (!have_multipliers) throw std::invalid_argument("missing multiplier line");
  std::array<IntPolynomial, 4> out;
  for (int i = 0; i < 4; ++i) {
    std::vector<Integer> c(columns[i].empty() ? 0 : columns[i].rbegin()->first + 1);
    for (const auto& [k, v] : columns[i]) c[k] = v;
    out[i] = IntPolynomial(c) * multipliers[i];
  }
  return out;
}

struct RootRow {
  unsigned long n = 0;
  Rational expected;
  std::string expected_text;
};

std::vector<RootRow> read_root_fixture(const std::string& file) {
  std::vector<RootRow> rows;
  for (const auto& line : read_lines(fixture_path(file))) {
    if (line.empty() || line[0] == '#' || line.rfind("n,", 0) == 0) continue;
    auto cells = split_csv_line(line);
    if (cells.size() != 2) throw std::invalid_argument("bad row: " + line);
    rows.push_back({std::stoul(cells[0]), parse_rational(cells[1]), cells[1]});
  }
  return rows;
}

Json reproduce_components(const RunConfig& config, bool& pass) {
  ChromaticEngine engine(config.engine);
  PartitionVector q = partitioned_chromatic(load_end("H", 0), engine);
  auto expected = read_component_fixture();
  Json columns = Json::array();
  bool all = true;
  for (int i = 0; i < 4; ++i) {
    bool ok = q[i] == expected[i];
    all = all && ok;
    columns.push_back(Json{{"component", "P" + std::to_string(i + 1)}, {"match", ok}});
  }
  pass = pass && all;
  return Json{{"pass", all}, {"columns", columns}, {"engine", engine_json(engine.stats())}};
}

struct RootResult {
  bool ok = false;
  Rational lo, hi;
  std::optional<bool> certified;
  std::string error;
};

// Family index = row n + offset. Rows run concurrently; output stays in row order.
Json reproduce_roots(const std::vector<RootRow>& all_rows, unsigned long offset, const RunConfig& config, bool& pass,
                     std::vector<std::pair<unsigned long, std::string>>* csv) {
  std::vector<RootRow> rows;
  for (const auto& r : all_rows) {
    if (r.n <= config.max_n) rows.push_back(r);
  }
  const PartitionVector qa = partitioned_chromatic(load_end("H", 0), config.engine);
  const PartitionVector qb = partitioned_chromatic(load_end("W4", 0), config.engine);
  const Rational tolerance(1, Integer("2000000000"));  // 5e-10
  std::vector<RootResult> results(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      LargestRootOptions o;
      o.bracket.parallel = false;
      auto r = largest_root_near_four(qa, qb, rows[i].n + offset, o);
      results[i] = RootResult{true, r.interval.lo, r.interval.hi, r.certified, {}};
    } catch (const std::exception& e) {
      results[i].error = e.what();
    }
  }
  Json out = Json::array();
  bool all = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json row{{"n", rows[i].n}, {"family_index", rows[i].n + offset}, {"expected", rows[i].expected_text}};
    const auto& r = results[i];
    if (!r.ok) {
      row["error"] = r.error;
      row["pass"] = false;
      all = false;
    } else {
      Rational mid = (r.lo + r.hi) / 2;
      Rational err = abs(mid - rows[i].expected);
      bool ok = err <= tolerance && r.certified.value_or(true);
      row["computed"] = to_decimal(mid, 10);
      row["error"] = to_decimal(err, 13);
      row["lo"] = to_string(r.lo);
      row["hi"] = to_string(r.hi);
      row["sturm_certified"] = r.certified ? Json(*r.certified) : Json(nullptr);
      row["pass"] = ok;
      all = all && ok;
      if (csv) csv->push_back({rows[i].n, to_decimal(mid, 10)});
    }
    out.push_back(row);
  }
  pass = pass && all;
  return Json{{"pass", all}, {"tolerance", "5e-10"}, {"rows", out}};
}

class Emitter {
 public:
  Emitter(const RunConfig& config, std::ostream& fallback) : out_(&fallback) {
    if (!config.output_path.empty()) {
      file_.open(config.output_path);
      if (!file_) throw std::invalid_argument("cannot write " + config.output_path);
      out_ = &file_;
    }
  }
  std::ostream& stream() { return *out_; }
  void json(const Json& j) { *out_ << j.dump(2) << '\n'; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

void cmd_poly(const RunConfig& config, Emitter& emit) {
  Json results = Json::array();
  for (const auto& input : config.inputs) {
    GraphFile file = load_graph_file(resolve_graph_path(input));
    ChromaticEngine engine(config.engine);
    IntPolynomial p = engine(file.graph);
    if (config.format == OutputFormat::text) {
      emit.stream() << p.to_string() << '\n';
      continue;
    }
    if (config.format == OutputFormat::csv) {
      emit.stream() << "power,coefficient\n";
      for (int k = p.degree(); k >= 0; --k) emit.stream() << k << ',' << p.coefficient(k).get_str() << '\n';
      continue;
    }
    results.push_back(Json{{"graph", input},
                           {"vertices", file.graph.vertex_count()},
                           {"edges", file.graph.edge_count()},
                           {"polynomial", polynomial_json(p)},
                           {"engine", engine_json(engine.stats())}});
  }
  if (config.format == OutputFormat::json) emit.json(results.size() == 1 ? results[0] : results);
}

void cmd_qvec(const RunConfig& config, Emitter& emit) {
  Json results = Json::array();
  for (const auto& input : config.inputs) {
    ChromaticEngine engine(config.engine);
    PartitionVector q = partitioned_chromatic(load_end(input, config.frame), engine);
    if (config.format == OutputFormat::text) {
      for (int i = 0; i < 4; ++i) {
        emit.stream() << 'P' << i + 1 << " = " << to_string(power_to_ff(q[i])) << '\n';
      }
      continue;
    }
    if (config.format == OutputFormat::csv) {
      emit.stream() << "power,P1,P2,P3,P4\n";
      int top = 0;
      for (int i = 0; i < 4; ++i) top = std::max(top, q[i].degree());
      for (int k = top; k >= 0; --k) {
        emit.stream() << k;
        for (int i = 0; i < 4; ++i) emit.stream() << ',' << q[i].coefficient(k).get_str();
        emit.stream() << '\n';
      }
      continue;
    }
    Json comps = Json::object();
    for (int i = 0; i < 4; ++i) {
      Json c = polynomial_json(q[i]);
      c["falling_factorial"] = to_string(power_to_ff(q[i]));
      comps["P" + std::to_string(i + 1)] = c;
    }
    results.push_back(Json{{"graph", input},
                           {"frame", config.frame},
                           {"components", comps},
                           {"sum", polynomial_json(q.sum())},
                           {"engine", engine_json(engine.stats())}});
  }
  if (config.format == OutputFormat::json) emit.json(results.size() == 1 ? results[0] : results);
}

void cmd_family(RunConfig config, Emitter& emit) {
  if (!config.descriptor.empty()) {
    std::ifstream in(config.descriptor);
    if (!in) throw std::invalid_argument("cannot open " + config.descriptor);
    Json d = Json::parse(in);
    config.end_a = d.value("endA", config.end_a);
    config.end_b = d.value("endB", config.end_b);
    config.n = d.value("n", config.n);
    if (d.contains("at")) config.at = parse_rational(d["at"].get<std::string>());
    validate(config);
  }
  PartitionVector qa = end_vector(config.end_a, config);
  PartitionVector qb = end_vector(config.end_b, config);
  Json j{{"endA", config.end_a}, {"endB", config.end_b}, {"n", config.n}};
  if (config.at) {
    Rational v = family_value_at(qa, qb, config.n, *config.at);
    if (config.format == OutputFormat::text) {
      emit.stream() << to_string(v) << '\n';
      return;
    }
    j["at"] = to_string(*config.at);
    j["value"] = to_string(v);
    j["decimal"] = to_decimal(v, config.digits);
  } else {
    IntPolynomial p = family_polynomial(qa, qb, config.n, config.max_symbolic_n);
    if (config.format == OutputFormat::text) {
      emit.stream() << p.to_string() << '\n';
      return;
    }
    j["polynomial"] = polynomial_json(p);
  }
  emit.json(j);
}

bool cmd_root4(const RunConfig& config, Emitter& emit) {
  PartitionVector qa = end_vector(config.end_a, config);
  PartitionVector qb = end_vector(config.end_b, config);
  LargestRootOptions o;
  o.width = width_for(config.digits);
  o.certify = config.n <= kMaxCertifiedN;
  LargestRoot r = largest_root_near_four(qa, qb, config.n, o);
  std::string decimal = r.interval.decimal(config.digits);
  if (config.format == OutputFormat::text) {
    emit.stream() << decimal << '\n'
                  << "lo = " << to_string(r.interval.lo) << '\n'
                  << "hi = " << to_string(r.interval.hi) << '\n';
  } else {
    Json j{{"endA", config.end_a},
           {"endB", config.end_b},
           {"n", config.n},
           {"root", decimal},
           {"lo", to_string(r.interval.lo)},
           {"hi", to_string(r.interval.hi)},
           {"width", to_string(r.interval.width())},
           {"bisection_steps", r.interval.steps},
           {"sturm_certified", r.certified ? Json(*r.certified) : Json(nullptr)}};
    emit.json(j);
  }
  return r.certified.value_or(true);
}

bool cmd_classify(const RunConfig& config, Emitter& emit) {
  Json results = Json::array();
  bool all = true;
  for (const auto& input : config.inputs) {
    PartitionVector q = end_vector(input, config);
    Classification c = classify_end_graph(q, classify_options(config));
    bool face = planar_face_identity(q);
    all = all && face;
    if (config.format == OutputFormat::text) {
      emit.stream() << input << ' ' << to_string(c.verdict) << '\n';
      continue;
    }
    Json trace = Json::array();
    for (const auto& [k, s] : c.trace) trace.push_back(Json::array({k, s}));
    results.push_back(Json{{"graph", input},
                           {"class", to_string(c.verdict)},
                           {"four_colour_constant", to_string(c.fast_path_constant)},
                           {"decided_by_constant", c.decided_by_fast_path},
                           {"sweep", trace},
                           {"planar_face_identity", face}});
  }
  if (config.format != OutputFormat::text) emit.json(results.size() == 1 ? results[0] : results);
  return all;
}

void cmd_predict(const RunConfig& config, Emitter& emit) {
  PartitionVector qa = end_vector(config.end_a, config);
  PartitionVector qb = end_vector(config.end_b, config);
  ClassifyOptions o = classify_options(config);
  bool yes = predict_roots_to_four(qa, qb, o);
  if (config.format == OutputFormat::text) {
    emit.stream() << (yes ? "true" : "false") << '\n';
    return;
  }
  emit.json(Json{{"endA", config.end_a},
                 {"endB", config.end_b},
                 {"classA", to_string(classify_end_graph(qa, o).verdict)},
                 {"classB", to_string(classify_end_graph(qb, o).verdict)},
                 {"roots_accumulate_at_four", yes}});
}

bool cmd_verify_golden(const RunConfig& config, Emitter& emit) {
  std::string a = config.family.size() == 2 ? config.family[0] : config.end_a;
  std::string b = config.family.size() == 2 ? config.family[1] : config.end_b;
  FramedGraph ga = load_end(a, config.frame);
  FramedGraph gb = load_end(b, config.frame);
  PartitionVector qa = partitioned_chromatic(ga, config.engine);
  PartitionVector qb = partitioned_chromatic(gb, config.engine);
  Json rows = Json::array();
  bool all = true;
  for (unsigned long n = 1; n <= config.n; ++n) {
    IntPolynomial p = family_polynomial(qa, qb, n, config.max_symbolic_n);
    int vertices = ga.graph.vertex_count() + gb.graph.vertex_count() + 4 * static_cast<int>(n) - 8;
    GoldenCheck g = golden_identity_check(p, vertices);
    all = all && g.pass;
    if (config.format == OutputFormat::text) {
      emit.stream() << "n=" << n << ' ' << (g.pass ? "pass" : "FAIL") << '\n';
      continue;
    }
    rows.push_back(Json{{"n", n}, {"vertices", vertices}, {"exponent", g.exponent}, {"pass", g.pass},
                        {"residual", g.residual.to_string()}});
  }
  if (config.format != OutputFormat::text) {
    emit.json(Json{{"endA", a}, {"endB", b}, {"pass", all}, {"checks", rows}});
  }
  return all;
}

bool cmd_verify_M(const RunConfig& config, Emitter& emit) {
  MOracleReport r = verify_M_against_oracle();
  Json entries = Json::array();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (config.format == OutputFormat::text) {
        emit.stream() << "M" << i + 1 << j + 1 << ' ' << (r.match[i][j] ? "pass" : "FAIL") << '\n';
        continue;
      }
      entries.push_back(Json{{"entry", "M" + std::to_string(i + 1) + std::to_string(j + 1)},
                             {"match", r.match[i][j]},
                             {"interpolated", r.interpolated[i][j].to_string()}});
    }
  }
  if (config.format != OutputFormat::text) emit.json(Json{{"pass", r.all_pass}, {"entries", entries}});
  return r.all_pass;
}

bool cmd_croots(const RunConfig& config, Emitter& emit) {
  PartitionVector qa = end_vector(config.end_a, config);
  PartitionVector qb = end_vector(config.end_b, config);
  IntPolynomial p = family_polynomial(qa, qb, config.n, config.max_symbolic_n);
  ComplexRootOptions o;
  o.precision_bits = config.precision_bits > 0 ? config.precision_bits : suggested_precision_bits(p);
  o.max_iterations = config.max_iterations;
  ComplexRootSet roots = complex_roots(p, o);
  const int digits = 20;
  if (config.format == OutputFormat::json) {
    Json list = Json::array();
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
      list.push_back(Json{{"re", format_fixed(roots.roots[i].re, digits)},
                          {"im", format_fixed(roots.roots[i].im, digits)}});
    }
    std::ostringstream res;
    res.precision(3);
    res << std::scientific << roots.max_residual();
    emit.json(Json{{"endA", config.end_a},
                   {"endB", config.end_b},
                   {"n", config.n},
                   {"degree", p.degree()},
                   {"precision_bits", roots.precision_bits},
                   {"converged", roots.converged},
                   {"max_residual", res.str()},
                   {"roots", list}});
  } else {
    emit.stream() << "re,im\n";
    for (const auto& z : roots.roots) emit.stream() << format_fixed(z.re, digits) << ',' << format_fixed(z.im, digits) << '\n';
  }
  return roots.converged;
}

bool cmd_reproduce(const RunConfig& config, Emitter& emit) {
  auto wanted = [&](const std::string& name) {
    return config.only.empty() || std::find(config.only.begin(), config.only.end(), name) != config.only.end();
  };
  bool pass = true;
  if (config.format == OutputFormat::csv) {
    std::vector<std::pair<unsigned long, std::string>> rows;
    if (wanted("table2")) reproduce_roots(read_root_fixture("table2.csv"), 0, config, pass, &rows);
    else reproduce_roots(read_root_fixture("table3.csv"), 1, config, pass, &rows);
    emit.stream() << "n,largest_real_root\n";
    for (const auto& [n, v] : rows) emit.stream() << n << ',' << v << '\n';
    return pass;
  }
  Json report = Json::object();
  if (wanted("table1")) report["table1"] = reproduce_components(config, pass);
  if (wanted("table2")) report["table2"] = reproduce_roots(read_root_fixture("table2.csv"), 0, config, pass, nullptr);
  if (wanted("table3")) report["table3"] = reproduce_roots(read_root_fixture("table3.csv"), 1, config, pass, nullptr);
  if (config.format == OutputFormat::text) {
    for (const auto& [name, table] : report.items()) {
      emit.stream() << name << ' ' << (table["pass"].get<bool>() ? "pass" : "FAIL") << '\n';
      if (!table.contains("rows")) continue;
      for (const auto& row : table["rows"]) {
        emit.stream() << "  n=" << row["n"].get<unsigned long>() << ' '
                      << (row.contains("computed") ? row["computed"].get<std::string>() : std::string("-")) << " expected "
                      << row["expected"].get<std::string>() << (row["pass"].get<bool>() ? "" : "  FAIL") << '\n';
      }
    }
  } else {
    Json j{{"pass", pass}};
    for (const auto& [name, table] : report.items()) j[name] = table;
    emit.json(j);
  }
  return pass;
}

}  // namespace

Subcommand parse_subcommand(const std::string& name) {
  auto it = subcommand_names().find(name);
  if (it == subcommand_names().end()) throw std::invalid_argument("unknown subcommand " + name);
  return it->second;
}

std::string to_string(Subcommand s) {
  for (const auto& [name, value] : subcommand_names()) {
    if (value == s) return name;
  }
  return "?";
}

OutputFormat parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown format " + name);
}

std::string resolve_graph_path(const std::string& name_or_path) {
  if (fs::is_regular_file(name_or_path)) return name_or_path;
  fs::path fixture = fs::path(TRISTRIP_FIXTURE_DIR) / (name_or_path + ".graph");
  if (fs::is_regular_file(fixture)) return fixture.string();
  throw std::invalid_argument("no graph file or fixture named " + name_or_path);
}

void validate(const RunConfig& c) {
  if (c.n < 1) throw std::invalid_argument("n must be at least 1");
  if (c.digits < 1 || c.digits > 30) throw std::invalid_argument("digits must be in 1..30");
  if (c.frame < 0) throw std::invalid_argument("frame index must be non-negative");
  if (c.max_iterations < 1) throw std::invalid_argument("max-iterations must be positive");
  if (c.precision_bits != 0 && c.precision_bits < 32) throw std::invalid_argument("precision must be at least 32 bits");
  bool needs_inputs = c.subcommand == Subcommand::poly || c.subcommand == Subcommand::qvec ||
                      c.subcommand == Subcommand::classify;
  if (needs_inputs && c.inputs.empty()) throw std::invalid_argument(to_string(c.subcommand) + " needs a graph");
  for (const auto& input : c.inputs) resolve_graph_path(input);
  if (!c.family.empty() && c.family.size() != 2) throw std::invalid_argument("--family takes two ends, e.g. H,W4");
  for (const auto& t : c.only) {
    if (t != "table1" && t != "table2" && t != "table3") throw std::invalid_argument("unknown table " + t);
  }
  if (c.subcommand == Subcommand::reproduce_tables && c.format == OutputFormat::csv) {
    bool two = std::find(c.only.begin(), c.only.end(), "table2") != c.only.end();
    bool three = std::find(c.only.begin(), c.only.end(), "table3") != c.only.end();
    if (c.only.size() != 1 || !(two || three)) {
      throw std::invalid_argument("csv output needs exactly one of --only table2 or --only table3");
    }
  }
  if (c.subcommand == Subcommand::croots && c.format == OutputFormat::text) {
    throw std::invalid_argument("croots writes csv or json");
  }
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
    Emitter emit(config, out);
    bool ok = true;
    switch (config.subcommand) {
      case Subcommand::poly: cmd_poly(config, emit); break;
      case Subcommand::qvec: cmd_qvec(config, emit); break;
      case Subcommand::family: cmd_family(config, emit); break;
      case Subcommand::root4: ok = cmd_root4(config, emit); break;
      case Subcommand::classify: ok = cmd_classify(config, emit); break;
      case Subcommand::predict: cmd_predict(config, emit); break;
      case Subcommand::verify_golden: ok = cmd_verify_golden(config, emit); break;
      case Subcommand::verify_M: ok = cmd_verify_M(config, emit); break;
      case Subcommand::croots: ok = cmd_croots(config, emit); break;
      case Subcommand::reproduce_tables: ok = cmd_reproduce(config, emit); break;
    }
    if (!ok) err << to_string(config.subcommand) << ": check failed\n";
    return ok ? kExitOk : kExitCheckFailed;
  } catch (const std::exception& e) {
    out << Json{{"status", "error"}, {"subcommand", to_string(config.subcommand)}, {"kind", error_kind(e)},
                {"message", e.what()}}
               .dump(2)
        << '\n';
    err << to_string(config.subcommand) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace tristrip::cli
