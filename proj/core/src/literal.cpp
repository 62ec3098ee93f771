#include "plp/literal.hpp"

#include <algorithm>

namespace plp {

namespace {

void normalize(std::vector<Literal>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join_args(const std::string& functor, const std::vector<std::string>& args) {
  std::string out = functor;
  if (args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ',';
    out += args[i];
  }
  out += ')';
  return out;
}

}  // namespace

Literal make_atom(std::string predicate, std::vector<std::string> args) {
  return Literal{OrdinaryAtom{std::move(predicate), std::move(args)}, false};
}

Literal make_pref(RuleName left, RuleName right) {
  return Literal{PrefAtom{std::move(left), std::move(right)}, false};
}

Literal complement(Literal l) {
  l.strong_neg = !l.strong_neg;
  return l;
}

Rule make_rule(Literal head, std::vector<Literal> pos_body, std::vector<Literal> weak_body,
               std::optional<RuleName> name) {
  normalize(pos_body);
  normalize(weak_body);
  return Rule{std::move(name), std::move(head), std::move(pos_body), std::move(weak_body)};
}

Rule mon(const Rule& r) { return Rule{std::nullopt, r.head, r.pos_body, {}}; }

std::string to_string(const RuleName& n) { return join_args(n.functor, n.args); }

std::string to_string(const Literal& l) {
  if (const auto* p = std::get_if<PrefAtom>(&l.atom)) {
    std::string body = to_string(p->left) + " < " + to_string(p->right);
    return l.strong_neg ? "-(" + body + ")" : body;
  }
  const auto& a = std::get<OrdinaryAtom>(l.atom);
  return (l.strong_neg ? "-" : "") + join_args(a.predicate, a.args);
}

std::string to_string(const Rule& r) {
  std::string out;
  if (r.name) out += to_string(*r.name) + ": ";
  out += to_string(r.head);
  if (!r.pos_body.empty() || !r.weak_body.empty()) {
    out += " <- ";
    bool first = true;
    for (const auto& l : r.pos_body) {
      if (!first) out += ", ";
      first = false;
      out += to_string(l);
    }
    for (const auto& l : r.weak_body) {
      if (!first) out += ", ";
      first = false;
      out += "not " + to_string(l);
    }
  }
  out += '.';
  return out;
}

}  // namespace plp
