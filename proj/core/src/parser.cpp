#include "plp/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace plp {

namespace {

enum class Tok { ident, directive, lparen, rparen, comma, dot, colon, less, arrow, semi_arrow, minus, end };

struct Token {
  Tok kind;
  std::string text;
  SourceLocation loc;
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::ident: return "identifier";
    case Tok::directive: return "directive";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::dot: return "'.'";
    case Tok::colon: return "':'";
    case Tok::less: return "'<'";
    case Tok::arrow: return "'<-'";
    case Tok::semi_arrow: return "'<='";
    case Tok::minus: return "'-'";
    case Tok::end: return "end of input";
  }
  return "?";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    const SourceLocation loc{line, col};
    if (ident_char(c) || c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string word(text.substr(i, j - i));
      if (c == '#' && word.size() == 1) throw SyntaxError("empty directive", loc);
      out.push_back({c == '#' ? Tok::directive : Tok::ident, word, loc});
      advance(j - i);
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case '.': kind = Tok::dot; break;
      case ':': kind = Tok::colon; break;
      case '-': kind = Tok::minus; break;
      case '<':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          kind = Tok::arrow;
          len = 2;
        } else if (i + 1 < text.size() && text[i + 1] == '=') {
          kind = Tok::semi_arrow;
          len = 2;
        } else {
          kind = Tok::less;
        }
        break;
      default: throw SyntaxError(std::string("unexpected character '") + c + "'", loc);
    }
    out.push_back({kind, std::string(text.substr(i, len)), loc});
    advance(len);
  }
  out.push_back({Tok::end, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  SchemaProgram program() {
    SchemaProgram out;
    while (peek().kind != Tok::end) {
      if (peek().kind == Tok::directive) {
        directive(out);
        continue;
      }
      out.rules.push_back(statement());
    }
    return out;
  }

  Literal single_literal() {
    Literal l = literal();
    expect(Tok::end);
    return l;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& next() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k) {
    if (peek().kind != k) fail(std::string("expected ") + describe(k) + ", found " + found());
    return next();
  }
  std::string found() const {
    const Token& t = peek();
    return t.kind == Tok::ident ? "'" + t.text + "'" : describe(t.kind);
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(what, peek().loc); }

  void directive(SchemaProgram& out) {
    const Token& d = next();
    if (d.text != "#constants") throw SyntaxError("unknown directive " + d.text, d.loc);
    do {
      const Token& c = expect(Tok::ident);
      if (is_variable(c.text)) throw SyntaxError("variable in #constants: " + c.text, c.loc);
      out.declared_constants.insert(c.text);
    } while (accept(Tok::comma));
    expect(Tok::dot);
  }

  RuleName term() {
    const Token& f = expect(Tok::ident);
    if (f.text == "not") throw SyntaxError("'not' is reserved", f.loc);
    RuleName t{f.text, {}};
    if (accept(Tok::lparen)) {
      if (is_variable(t.functor)) throw SyntaxError("variable used as functor: " + t.functor, f.loc);
      do t.args.push_back(expect(Tok::ident).text);
      while (accept(Tok::comma));
      expect(Tok::rparen);
    }
    return t;
  }

  Literal after_term(RuleName t, bool neg, SourceLocation loc) {
    if (accept(Tok::less)) {
      Literal l = make_pref(std::move(t), term());
      l.strong_neg = neg;
      return l;
    }
    if (is_variable(t.functor)) throw SyntaxError("variable used as atom: " + t.functor, loc);
    Literal l = make_atom(std::move(t.functor), std::move(t.args));
    l.strong_neg = neg;
    return l;
  }

  Literal literal() {
    const bool neg = accept(Tok::minus);
    const SourceLocation loc = peek().loc;
    if (accept(Tok::lparen)) {
      RuleName left = term();
      expect(Tok::less);
      Literal l = make_pref(std::move(left), term());
      expect(Tok::rparen);
      l.strong_neg = neg;
      return l;
    }
    return after_term(term(), neg, loc);
  }

  SchemaRule statement() {
    SchemaRule r;
    r.location = peek().loc;
    if (peek().kind == Tok::ident) {
      const SourceLocation loc = peek().loc;
      RuleName t = term();
      if (accept(Tok::colon)) {
        r.name = std::move(t);
        r.head = literal();
      } else {
        r.head = after_term(std::move(t), false, loc);
      }
    } else {
      r.head = literal();
    }
    if (peek().kind == Tok::arrow || peek().kind == Tok::semi_arrow) {
      r.seminormal = next().kind == Tok::semi_arrow;
      if (peek().kind != Tok::dot) {
        do {
          if (peek().kind == Tok::ident && peek().text == "not") {
            next();
            r.weak_body.push_back(literal());
          } else {
            r.pos_body.push_back(literal());
          }
        } while (accept(Tok::comma));
      }
    }
    expect(Tok::dot);
    return r;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

void check_named_rule(const SchemaRule& r) {
  if (r.name && r.weak_body.empty() && !r.seminormal)
    throw NameOnStrictRule("strict rule may not carry a name: " + to_string(*r.name), r.location);
}

// Constants and variables of one term or literal.

void scan_identifier(const std::string& id, std::set<std::string>* constants, std::vector<std::string>* variables) {
  if (is_variable(id)) {
    if (variables && std::find(variables->begin(), variables->end(), id) == variables->end())
      variables->push_back(id);
  } else if (constants) {
    constants->insert(id);
  }
}

void scan(const RuleName& n, std::set<std::string>* constants, std::vector<std::string>* variables) {
  if (n.args.empty()) scan_identifier(n.functor, constants, variables);
  for (const auto& a : n.args) scan_identifier(a, constants, variables);
}

void scan(const Literal& l, std::set<std::string>* constants, std::vector<std::string>* variables) {
  if (const auto* p = std::get_if<PrefAtom>(&l.atom)) {
    scan(p->left, constants, variables);
    scan(p->right, constants, variables);
    return;
  }
  for (const auto& a : std::get<OrdinaryAtom>(l.atom).args) scan_identifier(a, constants, variables);
}

template <typename Fn>
void for_each_term(const SchemaRule& r, Fn&& fn) {
  if (r.name) fn(*r.name);
  fn(r.head);
  for (const auto& l : r.pos_body) fn(l);
  for (const auto& l : r.weak_body) fn(l);
}

using Substitution = std::map<std::string, std::string>;

std::string substitute(const std::string& id, const Substitution& s) {
  auto it = s.find(id);
  return it == s.end() ? id : it->second;
}

RuleName substitute(RuleName n, const Substitution& s) {
  n.functor = substitute(n.functor, s);
  for (auto& a : n.args) a = substitute(a, s);
  return n;
}

Literal substitute(Literal l, const Substitution& s) {
  if (auto* p = std::get_if<PrefAtom>(&l.atom)) {
    p->left = substitute(std::move(p->left), s);
    p->right = substitute(std::move(p->right), s);
  } else {
    for (auto& a : std::get<OrdinaryAtom>(l.atom).args) a = substitute(a, s);
  }
  return l;
}

std::string join(const std::vector<Literal>& lits, const char* prefix, bool& first) {
  std::string out;
  for (const auto& l : lits) {
    if (!first) out += ", ";
    first = false;
    out += prefix + to_string(l);
  }
  return out;
}

}  // namespace

bool is_variable(std::string_view identifier) {
  return !identifier.empty() && (std::isupper(static_cast<unsigned char>(identifier[0])) || identifier[0] == '_');
}

bool SchemaRule::same_rule(const SchemaRule& other) const {
  return name == other.name && head == other.head && seminormal == other.seminormal &&
         sorted(pos_body) == sorted(other.pos_body) && sorted(weak_body) == sorted(other.weak_body);
}

SchemaProgram parse_program(std::string_view text) {
  SchemaProgram program = Parser(text).program();
  std::map<RuleName, const SchemaRule*> names;
  for (const auto& r : program.rules) {
    check_named_rule(r);
    if (!r.name) continue;
    auto [it, inserted] = names.emplace(*r.name, &r);
    if (!inserted && !it->second->same_rule(r))
      throw DuplicateName("name " + to_string(*r.name) + " already used at line " +
                              std::to_string(it->second->location.line),
                          r.location);
  }
  return program;
}

Literal parse_literal(std::string_view text) { return Parser(text).single_literal(); }

SchemaRule expand_seminormal(SchemaRule r) {
  if (!r.seminormal) return r;
  r.seminormal = false;
  Literal c = complement(r.head);
  if (std::find(r.weak_body.begin(), r.weak_body.end(), c) == r.weak_body.end()) r.weak_body.push_back(std::move(c));
  return r;
}

std::set<std::string> collect_constants(const SchemaProgram& program) {
  std::set<std::string> out = program.declared_constants;
  for (const auto& r : program.rules) for_each_term(r, [&](const auto& t) { scan(t, &out, nullptr); });
  return out;
}

std::vector<SchemaRule> instantiate(const SchemaRule& r, const std::set<std::string>& constants) {
  std::vector<std::string> vars;
  for_each_term(r, [&](const auto& t) { scan(t, nullptr, &vars); });
  if (vars.empty()) return {r};
  if (constants.empty())
    throw UnboundVariable("no constants to instantiate variable " + vars.front(), r.location);

  const std::vector<std::string> domain(constants.begin(), constants.end());
  std::vector<std::size_t> choice(vars.size(), 0);
  std::vector<SchemaRule> out;
  for (;;) {
    Substitution s;
    for (std::size_t i = 0; i < vars.size(); ++i) s[vars[i]] = domain[choice[i]];
    SchemaRule g = r;
    if (g.name) g.name = substitute(*g.name, s);
    g.head = substitute(g.head, s);
    for (auto& l : g.pos_body) l = substitute(l, s);
    for (auto& l : g.weak_body) l = substitute(l, s);
    out.push_back(std::move(g));

    std::size_t k = vars.size();
    while (k > 0 && ++choice[k - 1] == domain.size()) choice[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

PrioritizedProgram ground(const std::vector<SchemaRule>& schemas, const std::set<std::string>& constants) {
  std::vector<Rule> rules;
  std::map<RuleName, std::pair<Rule, SourceLocation>> names;
  for (const auto& schema : schemas) {
    check_named_rule(schema);
    for (auto& g : instantiate(expand_seminormal(schema), constants)) {
      Rule rule = make_rule(g.head, g.pos_body, g.weak_body, g.name);
      if (rule.name) {
        auto [it, inserted] = names.emplace(*rule.name, std::pair{rule, g.location});
        if (!inserted && it->second.first != rule)
          throw DuplicateName("ground name " + to_string(*rule.name) + " is shared with the rule at line " +
                                  std::to_string(it->second.second.line),
                              g.location);
      }
      rules.push_back(std::move(rule));
    }
  }
  return PrioritizedProgram::build(std::move(rules));
}

PrioritizedProgram load_program(std::string_view text) {
  const SchemaProgram program = parse_program(text);
  return ground(program.rules, collect_constants(program));
}

std::string to_string(const SchemaRule& r) {
  std::string out;
  if (r.name) out += to_string(*r.name) + ": ";
  out += to_string(r.head);
  if (r.seminormal || !r.pos_body.empty() || !r.weak_body.empty()) {
    out += r.seminormal ? " <=" : " <-";
    bool first = true;
    std::string body = join(r.pos_body, "", first);
    body += join(r.weak_body, "not ", first);
    if (!body.empty()) out += " " + body;
  }
  out += '.';
  return out;
}

std::string to_string(const SchemaProgram& p) {
  std::string out;
  if (!p.declared_constants.empty()) {
    out += "#constants ";
    bool first = true;
    for (const auto& c : p.declared_constants) {
      if (!first) out += ", ";
      first = false;
      out += c;
    }
    out += ".\n";
  }
  for (const auto& r : p.rules) out += to_string(r) + "\n";
  return out;
}

}  // namespace plp
