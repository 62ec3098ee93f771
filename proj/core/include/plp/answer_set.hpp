#pragma once

#include <cstddef>
#include <vector>

#include "plp/closure.hpp"
#include "plp/program.hpp"

namespace plp {

struct AnswerSetOptions {
  /// Largest number of literals the enumeration may branch on (2^n candidates).
  std::size_t max_atoms = 20;
};

/// All X with X = Cn(P_X), sorted; Lit is included when it is an answer set.
///
/// P_X depends on X only through the literals that occur under `not`.  Each
/// answer set A is therefore determined by A ∩ W, where W is the set of weak
/// literals that Cl(P) can derive (Lit is checked separately), and the search
/// enumerates subsets Z of W and keeps Cn(P_Z) when Cn(P_Z) ∩ W = Z.
/// Throws TooLarge when |W| exceeds the guard.
std::vector<LiteralSet> answer_sets(const PrioritizedProgram& p, const AnswerSetOptions& options = {});

/// Rules whose positive body holds in A and which A defeats.
RuleSet rebutted(const PrioritizedProgram& p, const LiteralSet& a);

/// Every rebutted rule r is still defeated by Cl(P_A \ Dom_{A,P_A}(r)).
bool priority_preserving(const PrioritizedProgram& p, const LiteralSet& a);

struct AnswerSetReport {
  std::vector<LiteralSet> answer_sets;
  std::vector<LiteralSet> pp_answer_sets;
  std::vector<RuleSet> rebutted;  // parallel to answer_sets
};

AnswerSetReport analyze_answer_sets(const PrioritizedProgram& p, const AnswerSetOptions& options = {});

/// Literals contained in every set; empty when `sets` is empty.
LiteralSet cautious_consequences(const std::vector<LiteralSet>& sets);

}  // namespace plp
