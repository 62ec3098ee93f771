#include "plp/answer_set.hpp"

#include <algorithm>
#include <set>

#include "plp/errors.hpp"
#include "plp/semantics.hpp"

namespace plp {

namespace {

bool answer_set_less(const LiteralSet& a, const LiteralSet& b) {
  if (a.is_lit() != b.is_lit()) return b.is_lit();
  return a.members() < b.members();
}

}  // namespace

std::vector<LiteralSet> answer_sets(const PrioritizedProgram& p, const AnswerSetOptions& options) {
  ClosureEngine engine(p);
  engine.run(RuleSet::all(p.size()));

  std::set<LitId> weak;
  for (const auto& r : p.ground_rules())
    for (LitId b : r.weak_body)
      if (engine.derived(b)) weak.insert(b);
  const std::vector<LitId> choice(weak.begin(), weak.end());
  if (choice.size() > options.max_atoms || choice.size() >= 63)
    throw TooLarge("answer-set enumeration would branch on " + std::to_string(choice.size()) +
                   " literals (limit " + std::to_string(options.max_atoms) + ")");

  std::vector<LiteralSet> found;
  const std::uint64_t candidates = std::uint64_t{1} << choice.size();
  std::vector<LitId> guess;
  for (std::uint64_t mask = 0; mask < candidates; ++mask) {
    guess.clear();
    for (std::size_t i = 0; i < choice.size(); ++i)
      if (mask >> i & 1u) guess.push_back(choice[i]);
    const LiteralSet z(guess);
    engine.run(reduct(p, z));
    if (!engine.consistent()) continue;
    bool matches = true;
    for (std::size_t i = 0; i < choice.size() && matches; ++i)
      matches = engine.derived(choice[i]) == static_cast<bool>(mask >> i & 1u);
    if (matches) found.push_back(engine.cl());
  }

  // Lit is an answer set iff the strict rules alone are inconsistent.
  engine.run(strict_rules(p));
  if (!engine.consistent()) found.push_back(LiteralSet::lit());

  std::sort(found.begin(), found.end(), answer_set_less);
  return found;
}

RuleSet rebutted(const PrioritizedProgram& p, const LiteralSet& a) {
  RuleSet out(p.size());
  for (RuleIndex r = 0; r < p.size(); ++r) {
    const GroundRule& rule = p.ground_rule(r);
    const bool applicable =
        std::all_of(rule.pos_body.begin(), rule.pos_body.end(), [&](LitId l) { return a.contains(l); });
    if (applicable && defeats(a, rule)) out.insert(r);
  }
  return out;
}

bool priority_preserving(const PrioritizedProgram& p, const LiteralSet& a) {
  const RuleSet undefeated = reduct(p, a);
  ClosureEngine engine(p);
  for (RuleIndex r : rebutted(p, a).indices()) {
    const RuleSet dominated = dom(p, r, a, undefeated);
    engine.run(undefeated, &dominated);
    if (!engine.defeats(p.ground_rule(r))) return false;
  }
  return true;
}

AnswerSetReport analyze_answer_sets(const PrioritizedProgram& p, const AnswerSetOptions& options) {
  AnswerSetReport report;
  report.answer_sets = answer_sets(p, options);
  for (const auto& a : report.answer_sets) {
    report.rebutted.push_back(rebutted(p, a));
    if (priority_preserving(p, a)) report.pp_answer_sets.push_back(a);
  }
  return report;
}

LiteralSet cautious_consequences(const std::vector<LiteralSet>& sets) {
  if (sets.empty()) return {};
  LiteralSet out = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) out = set_intersection(out, sets[i]);
  return out;
}

}  // namespace plp
