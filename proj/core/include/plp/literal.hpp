#pragma once

// Structural (name-based) representation of literals, rule names and rules.
// These are the values the parser produces and the renderer consumes; the
// semantics engines work on the interned form in program.hpp.

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace plp {

/// A rule name such as `ucc` or `lp(ucc,sma)`.
struct RuleName {
  std::string functor;
  std::vector<std::string> args;

  friend auto operator<=>(const RuleName&, const RuleName&) = default;
  friend bool operator==(const RuleName&, const RuleName&) = default;
};

struct OrdinaryAtom {
  std::string predicate;
  std::vector<std::string> args;

  friend auto operator<=>(const OrdinaryAtom&, const OrdinaryAtom&) = default;
  friend bool operator==(const OrdinaryAtom&, const OrdinaryAtom&) = default;
};

/// The preference atom `left < right`: the rule named `left` is preferred.
struct PrefAtom {
  RuleName left;
  RuleName right;

  friend auto operator<=>(const PrefAtom&, const PrefAtom&) = default;
  friend bool operator==(const PrefAtom&, const PrefAtom&) = default;
};

using Atom = std::variant<OrdinaryAtom, PrefAtom>;

struct Literal {
  Atom atom;
  bool strong_neg = false;

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;
};

Literal make_atom(std::string predicate, std::vector<std::string> args = {});
Literal make_pref(RuleName left, RuleName right);

inline bool is_pref(const Literal& l) { return std::holds_alternative<PrefAtom>(l.atom); }

Literal complement(Literal l);

/// c <- a1, ..., an, not b1, ..., not bm.  Bodies are kept sorted and
/// duplicate-free so that structurally equal rules compare equal.
struct Rule {
  std::optional<RuleName> name;
  Literal head;
  std::vector<Literal> pos_body;
  std::vector<Literal> weak_body;

  bool is_strict() const { return weak_body.empty(); }

  friend auto operator<=>(const Rule&, const Rule&) = default;
  friend bool operator==(const Rule&, const Rule&) = default;
};

Rule make_rule(Literal head, std::vector<Literal> pos_body = {}, std::vector<Literal> weak_body = {},
               std::optional<RuleName> name = std::nullopt);

/// Monotonic counterpart: weak preconditions and the name are dropped.
Rule mon(const Rule& r);

std::string to_string(const RuleName& n);
std::string to_string(const Literal& l);
std::string to_string(const Rule& r);

}  // namespace plp
