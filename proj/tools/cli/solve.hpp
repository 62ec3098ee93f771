#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plp/semantics.hpp"

namespace plp::cli {

enum class SemanticsKind { wfs, wfs_star, wfs_pr, answer, pp_answer, diff };
enum class OutputFormat { text, json };

std::optional<SemanticsKind> parse_semantics(std::string_view s);
std::string_view name_of(SemanticsKind k);

struct RunConfig {
  std::string input_path;
  SemanticsKind semantics = SemanticsKind::wfs_pr;
  std::optional<Engine> engine;  // wfs-pr only
  bool coherence = false;        // wfs-pr and diff only
  bool trace = false;
  OutputFormat format = OutputFormat::text;
  std::size_t max_atoms = 20;
};

/// Error message for an invalid selector/engine/flag combination.
std::optional<std::string> validate(const RunConfig& config);

struct TraceEntry {
  int step = 0;
  std::vector<std::string> conclusions;
  std::vector<std::string> new_safe_rules;
};

struct DiffEntry {
  std::vector<std::string> wfs;
  std::vector<std::string> wfs_star;
  std::vector<std::string> wfs_pr;
  bool wfs_in_wfs_star = true;
  bool wfs_star_in_wfs_pr = true;
};

/// Everything a run reports, already rendered to strings and sorted.
struct Report {
  std::string semantics;
  std::vector<std::string> conclusions;
  std::vector<TraceEntry> trace;
  std::vector<std::vector<std::string>> answer_sets;
  std::vector<std::vector<std::string>> priority_preserving;
  std::optional<DiffEntry> diff;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int program_error = 1;
inline constexpr int too_large = 2;
inline constexpr int internal_error = 3;
}  // namespace exit_code

/// Computes the report for an already loaded program.  Throws TooLarge.
Report compute(const PrioritizedProgram& program, const RunConfig& config);

std::string render_text(const Report& report);
std::string render_json(const Report& report);
/// Inverse of render_json.
Report parse_json(std::string_view json);

/// Loads `text`, computes and prints the report; returns the exit status.
int solve_text(const RunConfig& config, std::string_view text, std::ostream& out, std::ostream& err);
/// Same, reading config.input_path.
int solve(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace plp::cli
