#include "plp/program.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "plp/errors.hpp"

namespace plp {

ProgramError::ProgramError(const std::string& what, SourceLocation loc)
    : std::runtime_error(loc.line > 0 ? std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + what
                                      : what),
      message_(what),
      loc_(loc) {}

// ---------------------------------------------------------------------------
// Signature

Signature::Signature(std::vector<OrdinaryAtom> atoms, std::vector<RuleName> names)
    : atoms_(std::move(atoms)), names_(std::move(names)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) atom_index_.emplace(atoms_[i], i);
  for (std::size_t i = 0; i < names_.size(); ++i) name_index_.emplace(names_[i], static_cast<NameIndex>(i));
}

std::uint64_t Signature::literal_count() const {
  const std::uint64_t n = names_.size();
  return 2 * (atoms_.size() + n * n);
}

std::optional<NameIndex> Signature::find_name(const RuleName& n) const {
  auto it = name_index_.find(n);
  if (it == name_index_.end()) return std::nullopt;
  return it->second;
}

LitId Signature::pref(NameIndex left, NameIndex right, bool negated) const {
  const std::uint64_t atom = atoms_.size() + std::uint64_t{left} * names_.size() + right;
  return LitId{2 * atom + (negated ? 1 : 0)};
}

std::pair<NameIndex, NameIndex> Signature::pref_names(LitId l) const {
  const std::uint64_t k = l.atom() - atoms_.size();
  return {static_cast<NameIndex>(k / names_.size()), static_cast<NameIndex>(k % names_.size())};
}

std::optional<LitId> Signature::find(const Literal& l) const {
  if (const auto* p = std::get_if<PrefAtom>(&l.atom)) {
    auto left = find_name(p->left);
    auto right = find_name(p->right);
    if (!left || !right) return std::nullopt;
    return pref(*left, *right, l.strong_neg);
  }
  auto it = atom_index_.find(std::get<OrdinaryAtom>(l.atom));
  if (it == atom_index_.end()) return std::nullopt;
  return LitId{2 * it->second + (l.strong_neg ? 1 : 0)};
}

LitId Signature::id(const Literal& l) const {
  auto found = find(l);
  if (!found) throw std::out_of_range("literal not in signature: " + to_string(l));
  return *found;
}

Literal Signature::literal(LitId id) const {
  if (is_pref(id)) {
    auto [left, right] = pref_names(id);
    Literal l = make_pref(names_[left], names_[right]);
    l.strong_neg = id.negated();
    return l;
  }
  return Literal{atoms_[id.atom()], id.negated()};
}

std::string Signature::render(LitId l) const { return to_string(literal(l)); }

// ---------------------------------------------------------------------------
// LiteralSet

LiteralSet::LiteralSet(std::vector<LitId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

LiteralSet LiteralSet::lit() {
  LiteralSet s;
  s.is_lit_ = true;
  return s;
}

bool LiteralSet::contains(LitId l) const {
  return is_lit_ || std::binary_search(members_.begin(), members_.end(), l);
}

std::uint64_t LiteralSet::size(const Signature& sig) const {
  return is_lit_ ? sig.literal_count() : members_.size();
}

bool LiteralSet::subset_of(const LiteralSet& other) const {
  if (other.is_lit_) return true;
  if (is_lit_) return false;
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool LiteralSet::consistent() const {
  if (is_lit_) return false;
  // l and its complement differ only in the lowest bit, so they are adjacent.
  for (std::size_t i = 1; i < members_.size(); ++i)
    if (members_[i - 1].atom() == members_[i].atom()) return false;
  return true;
}

std::vector<NameIndex> LiteralSet::preferred_over(const Signature& sig, NameIndex left) const {
  std::vector<NameIndex> out;
  const auto n = static_cast<NameIndex>(sig.name_count());
  if (n == 0) return out;
  if (is_lit_) {
    for (NameIndex r = 0; r < n; ++r) out.push_back(r);
    return out;
  }
  const LitId lo = sig.pref(left, 0);
  const LitId hi = sig.pref(left, n - 1);
  for (auto it = std::lower_bound(members_.begin(), members_.end(), lo); it != members_.end() && *it <= hi; ++it)
    if (!it->negated()) out.push_back(sig.pref_names(*it).second);
  return out;
}

LiteralSet set_union(const LiteralSet& a, const LiteralSet& b) {
  if (a.is_lit() || b.is_lit()) return LiteralSet::lit();
  std::vector<LitId> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                 std::back_inserter(out));
  return LiteralSet(std::move(out));
}

LiteralSet set_intersection(const LiteralSet& a, const LiteralSet& b) {
  if (a.is_lit()) return b;
  if (b.is_lit()) return a;
  std::vector<LitId> out;
  std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return LiteralSet(std::move(out));
}

bool defeats(const LiteralSet& x, const GroundRule& r) {
  if (r.weak_body.empty()) return false;
  if (x.is_lit()) return true;
  return std::any_of(r.weak_body.begin(), r.weak_body.end(), [&](LitId l) { return x.contains(l); });
}

// ---------------------------------------------------------------------------
// PrioritizedProgram

namespace {

void collect(const Literal& l, std::set<OrdinaryAtom>& atoms, std::set<RuleName>& names) {
  if (const auto* p = std::get_if<PrefAtom>(&l.atom)) {
    names.insert(p->left);
    names.insert(p->right);
  } else {
    atoms.insert(std::get<OrdinaryAtom>(l.atom));
  }
}

std::vector<LitId> intern(const Signature& sig, const std::vector<Literal>& lits) {
  std::vector<LitId> out;
  out.reserve(lits.size());
  for (const auto& l : lits) out.push_back(sig.id(l));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

PrioritizedProgram PrioritizedProgram::build(std::vector<Rule> rules) {
  PrioritizedProgram p;

  std::set<Rule> seen;
  std::map<RuleName, const Rule*> by_name;
  for (auto& r : rules) {
    if (!seen.insert(r).second) continue;
    p.rules_.push_back(std::move(r));
  }
  for (const auto& r : p.rules_) {
    if (!r.name) continue;
    if (r.is_strict()) throw NameOnStrictRule("strict rule may not carry a name: " + to_string(r));
    auto [it, inserted] = by_name.emplace(*r.name, &r);
    if (!inserted)
      throw DuplicateName("name " + to_string(*r.name) + " used by two rules: " + to_string(*it->second) + " and " +
                          to_string(r));
  }

  std::set<OrdinaryAtom> atoms;
  std::set<RuleName> names;
  for (const auto& r : p.rules_) {
    if (r.name) names.insert(*r.name);
    collect(r.head, atoms, names);
    for (const auto& l : r.pos_body) collect(l, atoms, names);
    for (const auto& l : r.weak_body) collect(l, atoms, names);
    p.has_preferences_ = p.has_preferences_ || is_pref(r.head) || std::any_of(r.pos_body.begin(), r.pos_body.end(), is_pref) ||
                         std::any_of(r.weak_body.begin(), r.weak_body.end(), is_pref);
  }
  p.signature_ = Signature({atoms.begin(), atoms.end()}, {names.begin(), names.end()});

  const Signature& sig = p.signature_;
  p.named_rule_.assign(sig.name_count(), std::nullopt);
  p.ground_.reserve(p.rules_.size());
  for (RuleIndex i = 0; i < p.rules_.size(); ++i) {
    const Rule& r = p.rules_[i];
    GroundRule g;
    if (r.name) {
      g.name = *sig.find_name(*r.name);
      p.named_rule_[*g.name] = i;
    }
    g.head = sig.id(r.head);
    g.pos_body = intern(sig, r.pos_body);
    g.weak_body = intern(sig, r.weak_body);
    p.ground_.push_back(std::move(g));
  }

  ClosureIndex& ix = p.index_;
  auto slot_for = [&](LitId l) {
    auto [it, inserted] = ix.slot_of.emplace(l, static_cast<std::uint32_t>(ix.slot_literal.size()));
    if (inserted) {
      ix.slot_literal.push_back(l);
      ix.watchers.emplace_back();
    }
    return it->second;
  };
  auto add = [&](LitId l) {
    slot_for(l);
    slot_for(l.complement());
  };
  for (const auto& g : p.ground_) {
    add(g.head);
    for (LitId l : g.pos_body) add(l);
    for (LitId l : g.weak_body) add(l);
  }
  ix.head_slot.resize(p.ground_.size());
  ix.pos_count.resize(p.ground_.size());
  for (RuleIndex i = 0; i < p.ground_.size(); ++i) {
    const auto& g = p.ground_[i];
    ix.head_slot[i] = ix.slot_of.at(g.head);
    ix.pos_count[i] = static_cast<std::uint32_t>(g.pos_body.size());
    for (LitId l : g.pos_body) ix.watchers[ix.slot_of.at(l)].push_back(i);
  }
  return p;
}

std::optional<RuleIndex> PrioritizedProgram::rule_named(NameIndex n) const {
  return n < named_rule_.size() ? named_rule_[n] : std::nullopt;
}

std::optional<RuleIndex> PrioritizedProgram::rule_named(const RuleName& n) const {
  auto idx = signature_.find_name(n);
  if (!idx) return std::nullopt;
  return rule_named(*idx);
}

std::vector<std::string> PrioritizedProgram::render(const LiteralSet& s) const {
  std::vector<std::string> out;
  if (s.is_lit()) {
    const std::uint64_t n = signature_.literal_count();
    out.reserve(n);
    for (std::uint64_t v = 0; v < n; ++v) out.push_back(signature_.render(LitId{v}));
  } else {
    out.reserve(s.members().size());
    for (LitId l : s.members()) out.push_back(signature_.render(l));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string PrioritizedProgram::rule_label(RuleIndex i) const {
  const Rule& r = rules_[i];
  return r.name ? to_string(*r.name) : to_string(r);
}

}  // namespace plp
