#include "plp/closure.hpp"

#include <algorithm>

namespace plp {

namespace {
constexpr std::uint32_t kNoSlot = ~std::uint32_t{0};
}

// ---------------------------------------------------------------------------
// RuleSet

RuleSet RuleSet::all(std::size_t universe) {
  RuleSet s;
  s.bits_.assign(universe, true);
  s.count_ = universe;
  return s;
}

void RuleSet::insert(RuleIndex r) {
  if (r >= bits_.size()) bits_.resize(r + 1, false);
  if (!bits_[r]) {
    bits_[r] = true;
    ++count_;
  }
}

void RuleSet::erase(RuleIndex r) {
  if (r < bits_.size() && bits_[r]) {
    bits_[r] = false;
    --count_;
  }
}

std::vector<RuleIndex> RuleSet::indices() const {
  std::vector<RuleIndex> out;
  out.reserve(count_);
  for (RuleIndex i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(i);
  return out;
}

bool RuleSet::subset_of(const RuleSet& other) const {
  for (RuleIndex i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(i)) return false;
  return true;
}

RuleSet RuleSet::without(const RuleSet& other) const {
  RuleSet out = *this;
  for (RuleIndex i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.contains(i)) out.erase(i);
  return out;
}

// ---------------------------------------------------------------------------
// ClosureEngine

ClosureEngine::ClosureEngine(const PrioritizedProgram& p)
    : program_(&p),
      rule_epoch_(p.size(), 0),
      remaining_(p.size(), 0),
      slot_epoch_(p.index().slot_literal.size(), 0) {}

void ClosureEngine::start() {
  ++epoch_;
  order_.clear();
  head_ = 0;
  if (!extra_derived_.empty()) extra_derived_.clear();
  if (!succ_.empty()) succ_.clear();
  if (!pred_.empty()) pred_.clear();
}

void ClosureEngine::include(RuleIndex r) {
  if (rule_epoch_[r] == epoch_) return;
  rule_epoch_[r] = epoch_;
  remaining_[r] = program_->index().pos_count[r];
}

void ClosureEngine::run(const RuleSet& rules, const RuleSet* excluded, std::optional<RuleIndex> extra) {
  start();
  const std::size_t n = program_->size();
  for (RuleIndex r = 0; r < n; ++r)
    if (rules.contains(r) && !(excluded && excluded->contains(r))) include(r);
  if (extra) include(*extra);
  close();
}

void ClosureEngine::run(std::span<const RuleIndex> rules) {
  start();
  for (RuleIndex r : rules) include(r);
  close();
}

void ClosureEngine::derive(LitId l) {
  const auto& ix = program_->index();
  if (auto slot = ix.slot(l)) {
    if (slot_epoch_[*slot] == epoch_) return;
    slot_epoch_[*slot] = epoch_;
  } else if (!extra_derived_.insert(l).second) {
    return;
  }
  order_.push_back(l);
}

void ClosureEngine::propagate_pref(LitId l) {
  const Signature& sig = program_->signature();
  const auto [a, b] = sig.pref_names(l);
  succ_[a].push_back(b);
  pred_[b].push_back(a);
  derive(sig.pref(b, a, true));
  if (auto it = succ_.find(b); it != succ_.end())
    for (NameIndex c : it->second) derive(sig.pref(a, c));
  if (auto it = pred_.find(a); it != pred_.end())
    for (NameIndex z : it->second) derive(sig.pref(z, b));
}

void ClosureEngine::close() {
  const auto& ix = program_->index();
  const auto& ground = program_->ground_rules();
  const Signature& sig = program_->signature();
  const std::size_t n = program_->size();
  for (RuleIndex r = 0; r < n; ++r)
    if (rule_epoch_[r] == epoch_ && remaining_[r] == 0) derive(ground[r].head);

  while (head_ < order_.size()) {
    const LitId l = order_[head_++];
    if (auto slot = ix.slot(l)) {
      for (RuleIndex r : ix.watchers[*slot])
        if (rule_epoch_[r] == epoch_ && --remaining_[r] == 0) derive(ground[r].head);
    }
    if (sig.is_pref(l) && !l.negated()) propagate_pref(l);
  }
}

bool ClosureEngine::derived(LitId l) const {
  if (auto slot = program_->index().slot(l)) return slot_epoch_[*slot] == epoch_;
  return extra_derived_.contains(l);
}

bool ClosureEngine::defeats(const GroundRule& r) const {
  return std::any_of(r.weak_body.begin(), r.weak_body.end(), [&](LitId l) { return derived(l); });
}

bool ClosureEngine::consistent() const {
  return std::none_of(order_.begin(), order_.end(), [&](LitId l) { return derived(l.complement()); });
}

LiteralSet ClosureEngine::cl() const { return LiteralSet(order_); }

LiteralSet ClosureEngine::cn() const { return consistent() ? cl() : LiteralSet::lit(); }

// ---------------------------------------------------------------------------

LiteralSet cl(const PrioritizedProgram& p, const RuleSet& rules) {
  ClosureEngine engine(p);
  engine.run(rules);
  return engine.cl();
}

LiteralSet cn(const PrioritizedProgram& p, const RuleSet& rules) {
  ClosureEngine engine(p);
  engine.run(rules);
  return engine.cn();
}

RuleSet reduct(const PrioritizedProgram& p, const LiteralSet& x) {
  RuleSet out(p.size());
  for (RuleIndex r = 0; r < p.size(); ++r)
    if (!defeats(x, p.ground_rule(r))) out.insert(r);
  return out;
}

RuleSet strict_rules(const PrioritizedProgram& p) {
  RuleSet out(p.size());
  for (RuleIndex r = 0; r < p.size(); ++r)
    if (p.ground_rule(r).is_strict()) out.insert(r);
  return out;
}

}  // namespace plp
