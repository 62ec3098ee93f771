#pragma once

// Surface language
//
//   program    ::= { statement }
//   statement  ::= [ term ':' ] literal [ ( '<-' | '<=' ) [ body ] ] '.'
//                | '#constants' ident { ',' ident } '.'
//   body       ::= body_lit { ',' body_lit }
//   body_lit   ::= [ 'not' ] literal
//   literal    ::= [ '-' ] atom
//   atom       ::= term '<' term | '(' term '<' term ')' | term
//   term       ::= ident [ '(' ident { ',' ident } ')' ]
//
// `-` is strong negation, `not` weak negation, `n < m` the preference atom
// (n is preferred over m), `%` starts a comment.  Identifiers starting with an
// upper-case letter or `_` are variables.  `c <= body` abbreviates
// `c <- body, not c'` with c' the complement of c.

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "plp/errors.hpp"
#include "plp/literal.hpp"
#include "plp/program.hpp"

namespace plp {

/// A rule as written: identifiers may be variables and the name may be a
/// pattern such as lp(D1,D2).
struct SchemaRule {
  std::optional<RuleName> name;
  Literal head;
  std::vector<Literal> pos_body;
  std::vector<Literal> weak_body;
  bool seminormal = false;  // written with `<=`
  SourceLocation location;

  bool same_rule(const SchemaRule& other) const;
};

struct SchemaProgram {
  std::vector<SchemaRule> rules;
  std::set<std::string> declared_constants;
};

bool is_variable(std::string_view identifier);

/// Throws SyntaxError, DuplicateName or NameOnStrictRule.
SchemaProgram parse_program(std::string_view text);

/// Parses a single literal such as `-p(a)` or `n1 < n2`.
Literal parse_literal(std::string_view text);

/// `c <= body` becomes `c <- body, not c'`; other rules are returned as is.
SchemaRule expand_seminormal(SchemaRule r);

/// Identifiers occurring as ground terms, plus the declared constants.
std::set<std::string> collect_constants(const SchemaProgram& program);

/// Every ground instance of `r` over `constants`, in lexicographic order of
/// the substitution.  Instances keep the `seminormal` flag.
/// Throws UnboundVariable when `r` has variables and `constants` is empty.
std::vector<SchemaRule> instantiate(const SchemaRule& r, const std::set<std::string>& constants);

/// Expands, instantiates and validates.  Throws DuplicateName when two
/// distinct ground rules share a name, NameOnStrictRule, UnboundVariable.
PrioritizedProgram ground(const std::vector<SchemaRule>& schemas, const std::set<std::string>& constants);

/// parse_program + collect_constants + ground.
PrioritizedProgram load_program(std::string_view text);

/// Renders a rule in the surface syntax (parse_program reads it back).
std::string to_string(const SchemaRule& r);
std::string to_string(const SchemaProgram& p);

}  // namespace plp
