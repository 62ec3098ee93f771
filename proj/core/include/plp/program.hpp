#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "plp/literal.hpp"

namespace plp {

/// Interned literal.  `value = 2 * atom + (negated ? 1 : 0)`, where atoms are
/// numbered ordinary atoms first and then every preference atom over the name
/// universe: atom(l < r) = ordinary_count + l * name_count + r.  Preference
/// atoms are never stored explicitly, so |names|^2 costs nothing.
struct LitId {
  std::uint64_t value = 0;

  constexpr LitId complement() const { return LitId{value ^ 1u}; }
  constexpr bool negated() const { return (value & 1u) != 0; }
  constexpr std::uint64_t atom() const { return value >> 1; }

  friend constexpr auto operator<=>(LitId, LitId) = default;
  friend constexpr bool operator==(LitId, LitId) = default;
};

struct LitIdHash {
  std::size_t operator()(LitId l) const noexcept { return std::hash<std::uint64_t>{}(l.value); }
};

using RuleIndex = std::uint32_t;
using NameIndex = std::uint32_t;

/// Atom and name universe of one program.
class Signature {
 public:
  Signature() = default;
  Signature(std::vector<OrdinaryAtom> atoms, std::vector<RuleName> names);

  std::size_t ordinary_count() const { return atoms_.size(); }
  std::size_t name_count() const { return names_.size(); }
  /// Number of literals in Lit: both polarities of every atom.
  std::uint64_t literal_count() const;

  std::optional<LitId> find(const Literal& l) const;
  /// Throws std::out_of_range for literals outside the signature.
  LitId id(const Literal& l) const;
  Literal literal(LitId id) const;

  std::optional<NameIndex> find_name(const RuleName& n) const;
  const RuleName& name(NameIndex i) const { return names_[i]; }
  const std::vector<RuleName>& names() const { return names_; }
  const std::vector<OrdinaryAtom>& atoms() const { return atoms_; }

  LitId pref(NameIndex left, NameIndex right, bool negated = false) const;
  bool is_pref(LitId l) const { return l.atom() >= atoms_.size(); }
  /// (left, right) of a preference literal.
  std::pair<NameIndex, NameIndex> pref_names(LitId l) const;

  std::string render(LitId l) const;

 private:
  std::vector<OrdinaryAtom> atoms_;
  std::vector<RuleName> names_;
  std::map<OrdinaryAtom, std::uint64_t> atom_index_;
  std::map<RuleName, NameIndex> name_index_;
};

/// A set of literals, or Lit itself (every literal over the signature).
class LiteralSet {
 public:
  LiteralSet() = default;
  explicit LiteralSet(std::vector<LitId> members);
  static LiteralSet lit();

  bool is_lit() const { return is_lit_; }
  bool contains(LitId l) const;
  bool empty() const { return !is_lit_ && members_.empty(); }
  /// Explicit members; empty when is_lit().
  const std::vector<LitId>& members() const { return members_; }
  std::uint64_t size(const Signature& sig) const;

  bool subset_of(const LiteralSet& other) const;
  /// True iff no complementary pair is present (Lit is inconsistent).
  bool consistent() const;

  /// Positive preference literals `left < r` present for a fixed left name.
  std::vector<NameIndex> preferred_over(const Signature& sig, NameIndex left) const;

  friend bool operator==(const LiteralSet&, const LiteralSet&) = default;

 private:
  std::vector<LitId> members_;  // sorted, unique
  bool is_lit_ = false;
};

LiteralSet set_union(const LiteralSet& a, const LiteralSet& b);
LiteralSet set_intersection(const LiteralSet& a, const LiteralSet& b);

/// Interned rule.  Bodies are sorted and duplicate-free.
struct GroundRule {
  std::optional<NameIndex> name;
  LitId head;
  std::vector<LitId> pos_body;
  std::vector<LitId> weak_body;

  bool is_strict() const { return weak_body.empty(); }
};

/// X defeats r iff X contains a literal occurring under `not` in r.
bool defeats(const LiteralSet& x, const GroundRule& r);

/// Watch lists used by forward chaining.  Every literal occurring in some
/// rule, and its complement, gets a dense slot.
struct ClosureIndex {
  std::unordered_map<LitId, std::uint32_t, LitIdHash> slot_of;
  std::vector<LitId> slot_literal;
  std::vector<std::vector<RuleIndex>> watchers;  // slot -> rules with it in pos_body
  std::vector<std::uint32_t> head_slot;          // rule -> slot of head
  std::vector<std::uint32_t> pos_count;          // rule -> |pos_body|

  std::optional<std::uint32_t> slot(LitId l) const {
    auto it = slot_of.find(l);
    if (it == slot_of.end()) return std::nullopt;
    return it->second;
  }
};

/// A ground prioritized program: a set of rules plus the partial injective
/// naming function (carried on each rule).
///
/// Construction validates that names are injective and that only rules with
/// weak preconditions are named.  Textually identical rules collapse.
class PrioritizedProgram {
 public:
  PrioritizedProgram() = default;
  /// Throws DuplicateName or NameOnStrictRule.
  static PrioritizedProgram build(std::vector<Rule> rules);

  std::size_t size() const { return rules_.size(); }
  const std::vector<Rule>& rules() const { return rules_; }
  const Rule& rule(RuleIndex i) const { return rules_[i]; }
  const std::vector<GroundRule>& ground_rules() const { return ground_; }
  const GroundRule& ground_rule(RuleIndex i) const { return ground_[i]; }
  const Signature& signature() const { return signature_; }
  const ClosureIndex& index() const { return index_; }

  std::optional<RuleIndex> rule_named(NameIndex n) const;
  std::optional<RuleIndex> rule_named(const RuleName& n) const;
  /// True iff some literal of the program mentions `<`.
  bool has_preferences() const { return has_preferences_; }

  LitId id(const Literal& l) const { return signature_.id(l); }
  std::string render(LitId l) const { return signature_.render(l); }
  /// Lexicographically sorted rendering (all of Lit when is_lit()).
  std::vector<std::string> render(const LiteralSet& s) const;
  /// The rule's name if it has one, else its full text.
  std::string rule_label(RuleIndex i) const;

 private:
  std::vector<Rule> rules_;
  std::vector<GroundRule> ground_;
  Signature signature_;
  ClosureIndex index_;
  std::vector<std::optional<RuleIndex>> named_rule_;  // NameIndex -> rule
  bool has_preferences_ = false;
};

}  // namespace plp
