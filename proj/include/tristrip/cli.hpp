#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tristrip/chromatic.hpp"
#include "tristrip/numeric.hpp"

namespace tristrip::cli {

enum class Subcommand { poly, qvec, family, root4, classify, predict, verify_golden, verify_M, croots, reproduce_tables };
enum class OutputFormat { json, csv, text };

Subcommand parse_subcommand(const std::string& name);
std::string to_string(Subcommand s);
OutputFormat parse_format(const std::string& name);

// Exit statuses of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitResourceLimit = 3;
inline constexpr int kExitComputation = 4;

struct RunConfig {
  Subcommand subcommand = Subcommand::poly;
  // Graph files or fixture names (H, W4, L, neg10) for poly, qvec, classify.
  std::vector<std::string> inputs;
  // Ends of the strip family; fixture names or paths.
  std::string end_a = "H";
  std::string end_b = "W4";
  int frame = 0;
  // verify-golden: the two ends, e.g. {"H", "W4"}.
  std::vector<std::string> family;
  // Family descriptor JSON: {"endA": ..., "endB": ..., "n": ..., "at": ...}.
  std::string descriptor;
  unsigned long n = 1;
  std::optional<Rational> at;
  int digits = 10;
  EngineOptions engine;
  unsigned long max_symbolic_n = 128;
  // croots: 0 picks suggested_precision_bits.
  int precision_bits = 0;
  int max_iterations = 2000;
  bool always_sweep = false;
  std::vector<std::string> only;  // reproduce-tables: subset of table1, table2, table3
  unsigned long max_n = 512;
  std::string output_path;  // empty: the `out` stream
  OutputFormat format = OutputFormat::json;
};

// Throws std::invalid_argument naming the first violated constraint.
void validate(const RunConfig& config);

// Fixture name or path to an existing graph file path.
std::string resolve_graph_path(const std::string& name_or_path);

// Runs one subcommand. Results go to `out` (or config.output_path); on error a
// JSON failure record goes to `out` and a one-line message to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace tristrip::cli
