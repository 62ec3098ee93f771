#include "plp/semantics.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace plp {

namespace {

template <typename Step>
SemanticsTrace iterate_from_empty(const PrioritizedProgram& p, Step step) {
  SemanticsTrace trace;
  LiteralSet x;
  // Monotone operators over a finite lattice reach the fixpoint within
  // |Lit| + 1 applications.
  const std::uint64_t limit = p.signature().literal_count() + 2;
  for (std::uint64_t i = 0; i < limit; ++i) {
    TraceStep s = step(x);
    const bool fixed = s.conclusions == x;
    x = s.conclusions;
    trace.steps.push_back(std::move(s));
    if (fixed) {
      trace.final = x;
      return trace;
    }
  }
  throw std::logic_error("fixpoint iteration did not converge");
}

/// Dom and the safeness test share one closure engine for the rule-specific
/// closures and keep a second one for Cl(P_X), which most rules reuse.
class SafetyChecker {
 public:
  SafetyChecker(const PrioritizedProgram& p, Coherence coherence)
      : p_(p), coherence_(coherence), work_(p), base_(p) {}

  /// Sets X and P_X for subsequent checks.
  void reset(const LiteralSet& x, const RuleSet& undefeated) {
    x_ = &x;
    undefeated_ = &undefeated;
    base_.run(undefeated);
  }

  RuleSet dom(RuleIndex r, const RuleSet& y) {
    RuleSet out(p_.size());
    const GroundRule& rule = p_.ground_rule(r);
    if (!rule.name) return out;
    std::vector<RuleIndex> rivals;
    for (NameIndex n : x_->preferred_over(p_.signature(), *rule.name))
      if (auto other = p_.rule_named(n)) rivals.push_back(*other);
    if (rivals.empty()) return out;
    work_.run(y, nullptr, r);
    for (RuleIndex other : rivals)
      if (work_.defeats(p_.ground_rule(other))) out.insert(other);
    return out;
  }

  /// r is not defeated by Cl(P_X \ Dom_{X,Y}(r)).
  bool safe(RuleIndex r, const RuleSet& y) {
    const RuleSet dominated = dom(r, y);
    if (dominated.empty()) return !defeated_by(base_, r);
    work_.run(*undefeated_, &dominated);
    return !defeated_by(work_, r);
  }

 private:
  bool defeated_by(const ClosureEngine& engine, RuleIndex r) const {
    for (LitId b : p_.ground_rule(r).weak_body) {
      if (!engine.derived(b)) continue;
      if (coherence_ == Coherence::on && x_->contains(b.complement())) continue;
      return true;
    }
    return false;
  }

  const PrioritizedProgram& p_;
  Coherence coherence_;
  ClosureEngine work_;
  ClosureEngine base_;
  const LiteralSet* x_ = nullptr;
  const RuleSet* undefeated_ = nullptr;
};

RuleSet safe_rules_with(SafetyChecker& checker, const PrioritizedProgram& p, const LiteralSet& x) {
  const RuleSet undefeated = reduct(p, x);
  checker.reset(x, undefeated);
  RuleSet previous(p.size());
  // R_i grows with R_{i-1} because Dom is monotone in Y; at most |P| + 1 rounds.
  for (std::size_t round = 0; round <= p.size() + 1; ++round) {
    RuleSet current(p.size());
    for (RuleIndex r = 0; r < p.size(); ++r)
      if (checker.safe(r, previous)) current.insert(r);
    if (current == previous) return current;
    previous = std::move(current);
  }
  throw std::logic_error("safe rule construction did not converge");
}

SemanticsTrace wfs_plus(const PrioritizedProgram& p, const PrOptions& options) {
  const std::size_t n = p.size();
  SafetyChecker checker(p, options.coherence);
  ClosureEngine conclusions(p);

  std::vector<RuleIndex> order(n);
  std::iota(order.begin(), order.end(), RuleIndex{0});
  std::mt19937_64 rng(options.selection_seed.value_or(0));

  SemanticsTrace trace;
  LiteralSet s;
  RuleSet admitted(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const RuleSet undefeated = reduct(p, s);
    checker.reset(s, undefeated);
    if (options.selection_seed) std::shuffle(order.begin(), order.end(), rng);

    std::optional<RuleIndex> chosen;
    for (RuleIndex r : order) {
      if (admitted.contains(r) || !undefeated.contains(r)) continue;
      if (checker.safe(r, admitted)) {
        chosen = r;
        break;
      }
    }
    if (!chosen) break;

    admitted.insert(*chosen);
    conclusions.run(admitted);
    s = conclusions.cn();
    trace.steps.push_back({s, admitted});
  }
  trace.final = s;
  return trace;
}

}  // namespace

LiteralSet gamma(const PrioritizedProgram& p, const LiteralSet& x) { return cn(p, reduct(p, x)); }

LiteralSet gamma_star(const PrioritizedProgram& p, const LiteralSet& x) { return cl(p, reduct(p, x)); }

LiteralSet wfs_operator(const PrioritizedProgram& p, const LiteralSet& x) { return gamma(p, gamma(p, x)); }

LiteralSet wfs_star_operator(const PrioritizedProgram& p, const LiteralSet& x) {
  return gamma(p, gamma_star(p, x));
}

SemanticsTrace wfs(const PrioritizedProgram& p) {
  return iterate_from_empty(p, [&](const LiteralSet& x) {
    RuleSet rules = reduct(p, gamma(p, x));
    LiteralSet next = cn(p, rules);
    return TraceStep{std::move(next), std::move(rules)};
  });
}

SemanticsTrace wfs_star(const PrioritizedProgram& p) {
  return iterate_from_empty(p, [&](const LiteralSet& x) {
    RuleSet rules = reduct(p, gamma_star(p, x));
    LiteralSet next = cn(p, rules);
    return TraceStep{std::move(next), std::move(rules)};
  });
}

RuleSet dom(const PrioritizedProgram& p, RuleIndex r, const LiteralSet& x, const RuleSet& y) {
  SafetyChecker checker(p, Coherence::off);
  const RuleSet undefeated = reduct(p, x);
  checker.reset(x, undefeated);
  return checker.dom(r, y);
}

RuleSet safe_pr(const PrioritizedProgram& p, const LiteralSet& x, Coherence coherence) {
  SafetyChecker checker(p, coherence);
  return safe_rules_with(checker, p, x);
}

LiteralSet gamma_pr(const PrioritizedProgram& p, const LiteralSet& x, Coherence coherence) {
  return cn(p, safe_pr(p, x, coherence));
}

SemanticsTrace wfs_pr(const PrioritizedProgram& p, const PrOptions& options) {
  if (options.engine == Engine::incremental) return wfs_plus(p, options);
  SafetyChecker checker(p, options.coherence);
  return iterate_from_empty(p, [&](const LiteralSet& x) {
    RuleSet rules = safe_rules_with(checker, p, x);
    LiteralSet next = cn(p, rules);
    return TraceStep{std::move(next), std::move(rules)};
  });
}

}  // namespace plp
