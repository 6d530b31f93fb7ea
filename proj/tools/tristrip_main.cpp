#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tristrip/cli.hpp"

namespace {

using tristrip::cli::RunConfig;

struct Shared {
  std::string format;
  std::string at;
  std::string family;
  std::string only;
  std::string edge_order = "densest";
};

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void add_common(CLI::App* sub, RunConfig& cfg, Shared& sh) {
  sub->add_option("--format", sh.format, "json, csv or text");
  sub->add_option("-o,--out", cfg.output_path, "Write the result to this file");
  sub->add_option("--node-budget", cfg.engine.node_budget, "Deletion-contraction node cap");
  sub->add_option("--cache-entries", cfg.engine.cache_entries, "Memo table cap");
  sub->add_option("--edge-order", sh.edge_order, "densest, first or last");
  sub->add_option("--frame", cfg.frame, "Frame index within graph files");
}

void add_ends(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--endA", cfg.end_a, "First end graph (fixture name or path)");
  sub->add_option("--endB", cfg.end_b, "Second end graph (fixture name or path)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic polynomials and roots near 4 of width-4 triangular strips"};
  app.require_subcommand(1);
  RunConfig cfg;
  Shared sh;

  auto* poly = app.add_subcommand("poly", "Chromatic polynomial of each graph");
  poly->add_option("graphs", cfg.inputs, "Graph files or fixture names")->required();
  add_common(poly, cfg, sh);

  auto* qvec = app.add_subcommand("qvec", "Partitioned chromatic polynomial (P1..P4) of each framed graph");
  qvec->add_option("graphs", cfg.inputs, "Graph files or fixture names")->required();
  add_common(qvec, cfg, sh);

  auto* family = app.add_subcommand("family", "Polynomial or exact value of the strip family");
  family->add_option("descriptor", cfg.descriptor, "JSON file with endA, endB, n and optional at");
  add_ends(family, cfg);
  family->add_option("--n", cfg.n, "Family index");
  family->add_option("--at", sh.at, "Evaluate at this rational instead of expanding");
  family->add_option("--digits", cfg.digits, "Decimals for --at output");
  family->add_option("--max-symbolic-n", cfg.max_symbolic_n, "Largest n expanded symbolically");
  add_common(family, cfg, sh);

  auto* root4 = app.add_subcommand("root4", "Largest real root below 4 of the strip family");
  add_ends(root4, cfg);
  root4->add_option("--n", cfg.n, "Family index");
  root4->add_option("--digits", cfg.digits, "Decimals to report");
  add_common(root4, cfg, sh);

  auto* classify = app.add_subcommand("classify", "Positive or negative end-graph class");
  classify->add_option("graphs", cfg.inputs, "Graph files or fixture names")->required();
  classify->add_flag("--always-sweep", cfg.always_sweep, "Record the sign sweep even when the constant decides");
  add_common(classify, cfg, sh);

  auto* predict = app.add_subcommand("predict", "Whether the family has real roots tending to 4");
  add_ends(predict, cfg);
  predict->add_flag("--always-sweep", cfg.always_sweep, "Record the sign sweep even when the constant decides");
  add_common(predict, cfg, sh);

  auto* golden = app.add_subcommand("verify-golden", "Golden identity for family indices 1..n");
  golden->add_option("--family", sh.family, "Two ends, e.g. H,W4");
  golden->add_option("--n", cfg.n, "Largest family index checked");
  golden->add_option("--max-symbolic-n", cfg.max_symbolic_n, "Largest n expanded symbolically");
  add_common(golden, cfg, sh);

  auto* verify_m = app.add_subcommand("verify-M", "Check the transfer matrix against brute-force colourings");
  add_common(verify_m, cfg, sh);

  auto* croots = app.add_subcommand("croots", "Complex roots of the strip family polynomial");
  add_ends(croots, cfg);
  croots->add_option("--n", cfg.n, "Family index");
  croots->add_option("--bits", cfg.precision_bits, "Working precision (0 picks one from the coefficients)");
  croots->add_option("--max-iterations", cfg.max_iterations, "Aberth sweep cap");
  croots->add_option("--max-symbolic-n", cfg.max_symbolic_n, "Largest n expanded symbolically");
  add_common(croots, cfg, sh);

  auto* tables = app.add_subcommand("reproduce-tables", "Recompute the shipped reference tables and compare");
  tables->add_option("--only", sh.only, "Comma list from table1, table2, table3");
  tables->add_option("--max-n", cfg.max_n, "Skip rows with n above this");
  add_common(tables, cfg, sh);

  CLI11_PARSE(app, argc, argv);

  try {
    CLI::App* chosen = app.get_subcommands().front();
    cfg.subcommand = tristrip::cli::parse_subcommand(chosen->get_name());
    if (sh.format.empty()) {
      cfg.format = cfg.subcommand == tristrip::cli::Subcommand::croots ? tristrip::cli::OutputFormat::csv
                                                                       : tristrip::cli::OutputFormat::json;
    } else {
      cfg.format = tristrip::cli::parse_format(sh.format);
    }
    if (!sh.at.empty()) cfg.at = tristrip::parse_rational(sh.at);
    cfg.family = split_commas(sh.family);
    cfg.only = split_commas(sh.only);
    if (sh.edge_order == "densest") {
      cfg.engine.edge_order = tristrip::EdgeOrder::densest_first;
    } else if (sh.edge_order == "first") {
      cfg.engine.edge_order = tristrip::EdgeOrder::first_edge;
    } else if (sh.edge_order == "last") {
      cfg.engine.edge_order = tristrip::EdgeOrder::last_edge;
    } else {
      throw std::invalid_argument("unknown edge order " + sh.edge_order);
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return tristrip::cli::kExitBadInput;
  }
  return tristrip::cli::run(cfg, std::cout, std::cerr);
}
