#pragma once

#include "hgb/ordering.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hgb::cli {

enum class Subcommand { gb, hilbert, chains, normal_words, check };
enum class Method { normal_words, chains, closed_form, all };
enum class OutputFormat { text, records };

/// Process exit codes.
enum ExitCode : int {
  ok = 0,
  failed = 1,      // a check failed or methods disagree
  parse_error = 2, // bad input file or arguments
  grading_error = 3,
  saturation_error = 4,
};

struct RunConfig {
  Subcommand subcommand = Subcommand::gb;
  std::string input_path;
  /// Truncation degree for series and the completion bound for words.
  std::size_t max_degree = 12;
  /// Completion bound when it should differ from max_degree.
  std::optional<std::size_t> completion_degree;
  /// Overrides the file's `order` directive.
  std::optional<OrderScheme> order;
  bool reduced = false;
  Method method = Method::normal_words;
  OutputFormat format = OutputFormat::text;
  /// Chain words / normal words listed per group in text output.
  std::size_t list_cap = 20;
};

/// Runs a subcommand on presentation text; returns the exit code.
int run_text(const RunConfig& config, std::string_view presentation,
             std::ostream& out, std::ostream& err);

/// Reads config.input_path ("-" for stdin) and runs.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Full command line including argv[0].
int main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

} // namespace hgb::cli
