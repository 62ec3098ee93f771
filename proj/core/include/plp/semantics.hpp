#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "plp/closure.hpp"
#include "plp/program.hpp"

namespace plp {

struct TraceStep {
  LiteralSet conclusions;
  RuleSet safe_rules;  // the rules whose closure produced `conclusions`
};

/// S1, S2, ... of a fixpoint iteration started on the empty set.
struct SemanticsTrace {
  std::vector<TraceStep> steps;
  LiteralSet final;
};

enum class Coherence { off, on };

/// gamma_P(X) = Cn(P_X)
LiteralSet gamma(const PrioritizedProgram& p, const LiteralSet& x);
/// gamma*_P(X) = Cl(P_X)
LiteralSet gamma_star(const PrioritizedProgram& p, const LiteralSet& x);

/// Gamma_P = gamma_P o gamma_P
LiteralSet wfs_operator(const PrioritizedProgram& p, const LiteralSet& x);
/// Gamma*_P = gamma_P o gamma*_P
LiteralSet wfs_star_operator(const PrioritizedProgram& p, const LiteralSet& x);

/// Well-founded conclusions: least fixpoint of Gamma_P.
SemanticsTrace wfs(const PrioritizedProgram& p);
/// Strengthened well-founded conclusions: least fixpoint of Gamma*_P.
SemanticsTrace wfs_star(const PrioritizedProgram& p);

/// Rules dominated by r wrt. X and Y:
///   { r' | name(r) < name(r') in X and Cl(Y + r) defeats r' }
RuleSet dom(const PrioritizedProgram& p, RuleIndex r, const LiteralSet& x, const RuleSet& y);

/// X-safe rules: the union of R_0 = {} and
///   R_i = { r | r not defeated by Cl(P_X \ Dom_{X,R_{i-1}}(r)) }.
/// With coherence on, a weak precondition `not b` is also satisfied when the
/// complement of b is in X.
RuleSet safe_pr(const PrioritizedProgram& p, const LiteralSet& x, Coherence coherence = Coherence::off);

/// Gamma^pr_P(X) = Cn(SAFE^pr_X(P))
LiteralSet gamma_pr(const PrioritizedProgram& p, const LiteralSet& x, Coherence coherence = Coherence::off);

enum class Engine { declarative, incremental };

struct PrOptions {
  Engine engine = Engine::declarative;
  Coherence coherence = Coherence::off;
  /// Incremental engine only: when set, candidate rules are tried in an order
  /// shuffled with this seed instead of textual order.
  std::optional<std::uint64_t> selection_seed;
};

/// Prioritized well-founded conclusions: least fixpoint of Gamma^pr_P.
///
/// The declarative engine iterates gamma_pr from the empty set; each step is
/// one S_i.  The incremental engine admits one safe rule per step (S_i =
/// Cn(R_i)) and stops as soon as no further rule qualifies, so its trace has
/// one step per admitted rule.
SemanticsTrace wfs_pr(const PrioritizedProgram& p, const PrOptions& options = {});

}  // namespace plp
