#include "cli/solve.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "plp/answer_set.hpp"
#include "plp/errors.hpp"
#include "plp/parser.hpp"

namespace plp::cli {

namespace {

using json = nlohmann::json;

constexpr std::pair<SemanticsKind, std::string_view> kSemantics[] = {
    {SemanticsKind::wfs, "wfs"},       {SemanticsKind::wfs_star, "wfs-star"},
    {SemanticsKind::wfs_pr, "wfs-pr"}, {SemanticsKind::answer, "answer"},
    {SemanticsKind::pp_answer, "pp-answer"}, {SemanticsKind::diff, "diff"},
};

std::vector<std::string> labels(const PrioritizedProgram& p, const RuleSet& now, const RuleSet* before) {
  std::vector<std::string> out;
  for (RuleIndex r : now.indices())
    if (!before || !before->contains(r)) out.push_back(p.rule_label(r));
  return out;
}

void add_trace(Report& report, const PrioritizedProgram& p, const SemanticsTrace& trace) {
  const RuleSet* previous = nullptr;
  int step = 1;
  for (const auto& s : trace.steps) {
    report.trace.push_back({step++, p.render(s.conclusions), labels(p, s.safe_rules, previous)});
    previous = &s.safe_rules;
  }
}

std::vector<std::vector<std::string>> render_sets(const PrioritizedProgram& p, const std::vector<LiteralSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const auto& s : sets) out.push_back(p.render(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::string braces(const std::vector<std::string>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += items[i];
  }
  return out + "}";
}

}  // namespace

std::optional<SemanticsKind> parse_semantics(std::string_view s) {
  for (auto [kind, name] : kSemantics)
    if (name == s) return kind;
  return std::nullopt;
}

std::string_view name_of(SemanticsKind k) {
  for (auto [kind, name] : kSemantics)
    if (kind == k) return name;
  return "?";
}

std::optional<std::string> validate(const RunConfig& config) {
  if (config.engine && config.semantics != SemanticsKind::wfs_pr)
    return "--engine applies only to --semantics wfs-pr";
  if (config.coherence && config.semantics != SemanticsKind::wfs_pr && config.semantics != SemanticsKind::diff)
    return "--coherence applies only to --semantics wfs-pr or diff";
  return std::nullopt;
}

Report compute(const PrioritizedProgram& p, const RunConfig& config) {
  Report report;
  report.semantics = std::string(name_of(config.semantics));
  const Coherence coherence = config.coherence ? Coherence::on : Coherence::off;

  switch (config.semantics) {
    case SemanticsKind::wfs:
    case SemanticsKind::wfs_star:
    case SemanticsKind::wfs_pr: {
      SemanticsTrace trace;
      if (config.semantics == SemanticsKind::wfs) {
        trace = wfs(p);
      } else if (config.semantics == SemanticsKind::wfs_star) {
        trace = wfs_star(p);
      } else {
        trace = wfs_pr(p, {config.engine.value_or(Engine::declarative), coherence, std::nullopt});
      }
      report.conclusions = p.render(trace.final);
      if (config.trace) add_trace(report, p, trace);
      break;
    }
    case SemanticsKind::answer:
    case SemanticsKind::pp_answer: {
      const AnswerSetReport sets = analyze_answer_sets(p, {config.max_atoms});
      report.answer_sets = render_sets(p, sets.answer_sets);
      report.priority_preserving = render_sets(p, sets.pp_answer_sets);
      const auto& basis = config.semantics == SemanticsKind::answer ? sets.answer_sets : sets.pp_answer_sets;
      report.conclusions = p.render(cautious_consequences(basis));
      break;
    }
    case SemanticsKind::diff: {
      const LiteralSet plain = wfs(p).final;
      const LiteralSet star = wfs_star(p).final;
      const LiteralSet prioritized = wfs_pr(p, {Engine::declarative, coherence, std::nullopt}).final;
      DiffEntry d{p.render(plain), p.render(star), p.render(prioritized), plain.subset_of(star),
                  star.subset_of(prioritized)};
      report.conclusions = d.wfs_pr;
      report.diff = std::move(d);
      break;
    }
  }
  return report;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "semantics: " << r.semantics << "\n";
  for (const auto& t : r.trace) {
    out << "S" << t.step << " = " << braces(t.conclusions) << "\n";
    if (!t.new_safe_rules.empty()) out << "  new safe rules: " << braces(t.new_safe_rules) << "\n";
  }
  if (r.semantics == "answer" || r.semantics == "pp-answer") {
    out << "answer sets: " << r.answer_sets.size() << "\n";
    int i = 1;
    for (const auto& a : r.answer_sets) {
      const bool pp = std::find(r.priority_preserving.begin(), r.priority_preserving.end(), a) !=
                      r.priority_preserving.end();
      out << "A" << i++ << " = " << braces(a) << (pp ? "  [priority preserving]" : "") << "\n";
    }
    out << "priority preserving: " << r.priority_preserving.size() << "\n";
  }
  if (r.diff) {
    out << "WFS    = " << braces(r.diff->wfs) << "\n";
    out << "WFS*   = " << braces(r.diff->wfs_star) << "\n";
    out << "WFS^pr = " << braces(r.diff->wfs_pr) << "\n";
    out << "WFS <= WFS*: " << (r.diff->wfs_in_wfs_star ? "ok" : "VIOLATED (internal error)") << "\n";
    out << "WFS* <= WFS^pr: " << (r.diff->wfs_star_in_wfs_pr ? "ok" : "VIOLATED (internal error)") << "\n";
  }
  out << "conclusions (" << r.conclusions.size() << "): " << braces(r.conclusions) << "\n";
  return out.str();
}

std::string render_json(const Report& r) {
  json j;
  j["semantics"] = r.semantics;
  j["conclusions"] = r.conclusions;
  j["trace"] = json::array();
  for (const auto& t : r.trace)
    j["trace"].push_back({{"step", t.step}, {"conclusions", t.conclusions}, {"new_safe_rules", t.new_safe_rules}});
  j["answer_sets"] = r.answer_sets;
  j["priority_preserving"] = r.priority_preserving;
  if (r.diff) {
    j["diff"] = {{"wfs", r.diff->wfs},
                 {"wfs-star", r.diff->wfs_star},
                 {"wfs-pr", r.diff->wfs_pr},
                 {"wfs_in_wfs_star", r.diff->wfs_in_wfs_star},
                 {"wfs_star_in_wfs_pr", r.diff->wfs_star_in_wfs_pr}};
  }
  return j.dump(2) + "\n";
}

Report parse_json(std::string_view text) {
  const json j = json::parse(text);
  Report r;
  r.semantics = j.at("semantics").get<std::string>();
  r.conclusions = j.at("conclusions").get<std::vector<std::string>>();
  for (const auto& t : j.at("trace"))
    r.trace.push_back({t.at("step").get<int>(), t.at("conclusions").get<std::vector<std::string>>(),
                       t.at("new_safe_rules").get<std::vector<std::string>>()});
  r.answer_sets = j.at("answer_sets").get<std::vector<std::vector<std::string>>>();
  r.priority_preserving = j.at("priority_preserving").get<std::vector<std::vector<std::string>>>();
  if (j.contains("diff")) {
    const auto& d = j.at("diff");
    r.diff = DiffEntry{d.at("wfs").get<std::vector<std::string>>(), d.at("wfs-star").get<std::vector<std::string>>(),
                       d.at("wfs-pr").get<std::vector<std::string>>(), d.at("wfs_in_wfs_star").get<bool>(),
                       d.at("wfs_star_in_wfs_pr").get<bool>()};
  }
  return r;
}

int solve_text(const RunConfig& config, std::string_view text, std::ostream& out, std::ostream& err) {
  if (auto problem = validate(config)) {
    err << "error: " << *problem << "\n";
    return exit_code::program_error;
  }
  PrioritizedProgram program;
  try {
    program = load_program(text);
  } catch (const ProgramError& e) {
    err << config.input_path << ":" << e.what() << "\n";
    return exit_code::program_error;
  }

  Report report;
  try {
    report = compute(program, config);
  } catch (const TooLarge& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::too_large;
  }
  out << (config.format == OutputFormat::json ? render_json(report) : render_text(report));
  if (report.diff && !(report.diff->wfs_in_wfs_star && report.diff->wfs_star_in_wfs_pr)) {
    err << "internal error: inclusion chain WFS <= WFS* <= WFS^pr violated\n";
    return exit_code::internal_error;
  }
  return exit_code::ok;
}

int solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ifstream in(config.input_path, std::ios::binary);
  if (!in) {
    err << "error: cannot open " << config.input_path << "\n";
    return exit_code::program_error;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return solve_text(config, buffer.str(), out, err);
}

}  // namespace plp::cli
