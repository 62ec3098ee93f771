#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "plp/program.hpp"

namespace plp {

/// A subset of a program's rules, as a membership bitmap over rule indices.
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::size_t universe) : bits_(universe, false) {}
  static RuleSet all(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }
  bool contains(RuleIndex r) const { return r < bits_.size() && bits_[r]; }
  void insert(RuleIndex r);
  void erase(RuleIndex r);
  std::vector<RuleIndex> indices() const;

  bool subset_of(const RuleSet& other) const;
  RuleSet without(const RuleSet& other) const;

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
};

/// Forward chaining over the monotonic counterparts of a rule subset, with
/// the transitivity and antisymmetry of `<` applied on the fly:
///   a < b, b < c  =>  a < c        a < b  =>  -(b < a)
/// Complementary literals are treated as unrelated atoms; consistency is a
/// separate check.  Each run costs O(|rules| + total body size) plus the
/// transitive closure of whatever preferences get derived.
///
/// Holds scratch buffers reused across runs; one engine per thread.
class ClosureEngine {
 public:
  explicit ClosureEngine(const PrioritizedProgram& p);

  /// Closure of `rules`, minus `excluded`, plus `extra`.
  void run(const RuleSet& rules, const RuleSet* excluded = nullptr, std::optional<RuleIndex> extra = std::nullopt);
  void run(std::span<const RuleIndex> rules);

  bool derived(LitId l) const;
  bool defeats(const GroundRule& r) const;
  bool consistent() const;
  const std::vector<LitId>& derived_literals() const { return order_; }

  LiteralSet cl() const;
  LiteralSet cn() const;

 private:
  void start();
  void include(RuleIndex r);
  void close();
  void derive(LitId l);
  void propagate_pref(LitId l);

  const PrioritizedProgram* program_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint32_t> rule_epoch_;  // rule is in the current set
  std::vector<std::uint32_t> remaining_;   // unsatisfied positive body literals
  std::vector<std::uint32_t> slot_epoch_;  // slot literal derived
  std::unordered_set<LitId, LitIdHash> extra_derived_;
  std::unordered_map<NameIndex, std::vector<NameIndex>> succ_;
  std::unordered_map<NameIndex, std::vector<NameIndex>> pred_;
  std::vector<LitId> order_;
  std::size_t head_ = 0;
};

/// Cl(R): least set closed under Mon(R) and the built-in `<` axioms.
LiteralSet cl(const PrioritizedProgram& p, const RuleSet& rules);
/// Cn(R): Cl(R) if consistent, otherwise Lit.
LiteralSet cn(const PrioritizedProgram& p, const RuleSet& rules);
/// P_X: the rules not defeated by X (weak bodies retained).
RuleSet reduct(const PrioritizedProgram& p, const LiteralSet& x);
/// The rules without weak preconditions.
RuleSet strict_rules(const PrioritizedProgram& p);

}  // namespace plp
