#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "plp/parser.hpp"
#include "plp/semantics.hpp"
#include "support/convert.hpp"
#include "support/random_program.hpp"
#include "support/reference.hpp"

using namespace plp;
using testing::from_ref;
using testing::to_ref;

namespace {

PrioritizedProgram fixture(const std::string& name) {
  std::ifstream in(std::string(PLP_FIXTURE_DIR) + "/" + name + ".lp");
  REQUIRE(in);
  std::ostringstream text;
  text << in.rdbuf();
  return load_program(text.str());
}

std::vector<std::string> rendered(const PrioritizedProgram& p, const LiteralSet& s) { return p.render(s); }

using Strings = std::vector<std::string>;

}  // namespace

TEST_CASE("strict closure under the two well-founded operators") {
  const auto p0 = fixture("p0");
  CHECK(gamma(p0, {}).is_lit());
  CHECK(rendered(p0, gamma_star(p0, {})) == Strings{"-a", "a", "b"});
  CHECK(wfs(p0).final.empty());
  CHECK(rendered(p0, wfs_star(p0).final) == Strings{"b"});
}

TEST_CASE("prioritized examples") {
  const auto p1 = fixture("p1");
  CHECK(rendered(p1, wfs_pr(p1).final) == Strings{"-(n1 < n2)", "b", "n2 < n1"});
  CHECK(rendered(p1, gamma_pr(p1, {})) == Strings{"-(n1 < n2)", "b", "n2 < n1"});

  const auto p2 = fixture("p2");
  const LiteralSet s2 = wfs_pr(p2).final;
  CHECK(s2.contains(p2.id(parse_literal("-b"))));
  CHECK_FALSE(s2.contains(p2.id(parse_literal("b"))));

  const auto p3 = fixture("p3");
  CHECK(rendered(p3, wfs_pr(p3).final) == Strings{"-(n1 < n2)", "c", "n2 < n1"});
  CHECK(wfs_star(p3).final.size(p3.signature()) == 2);

  CHECK(wfs_pr(fixture("mutpref")).final.empty());
}

TEST_CASE("legal reasoning") {
  const auto legal = fixture("legal");
  const Strings h{"-fin_statement", "fed_law(sma)", "more_recent(ucc,sma)", "possession", "ship", "state_law(ucc)"};
  CHECK(rendered(legal, wfs_pr(legal).final) == h);

  const auto plus = fixture("legal_plus");
  const auto trace = wfs_pr(plus);
  REQUIRE(trace.steps.size() == 4);
  const LitId meta = plus.id(parse_literal("ls(sma,ucc) < lp(ucc,sma)"));
  const LitId sma_over_ucc = plus.id(parse_literal("sma < ucc"));
  const LitId not_perfected = plus.id(parse_literal("-perfected"));
  CHECK(trace.steps[0].conclusions.contains(meta));
  CHECK_FALSE(trace.steps[0].conclusions.contains(sma_over_ucc));
  CHECK(trace.steps[1].conclusions.contains(sma_over_ucc));
  CHECK_FALSE(trace.steps[1].conclusions.contains(not_perfected));
  CHECK(trace.steps[2].conclusions.contains(not_perfected));
  CHECK(trace.steps[2].conclusions == trace.final);
  CHECK_FALSE(trace.final.contains(plus.id(parse_literal("perfected"))));
}

TEST_CASE("unresolved cycle") {
  const auto c = fixture("cycle4_pref");
  const LiteralSet s = wfs_pr(c).final;
  for (const char* l : {"a", "b", "c", "d"}) CHECK_FALSE(s.contains(c.id(parse_literal(l))));
  CHECK(wfs_pr(fixture("cycle4")).final.empty());
}

TEST_CASE("coherence variant") {
  const auto p = fixture("coherence");
  CHECK(rendered(p, wfs_pr(p).final) == Strings{"-b"});
  CHECK(rendered(p, wfs_pr(p, {Engine::declarative, Coherence::on, {}}).final) == Strings{"-b", "a"});
  CHECK(rendered(p, wfs_pr(p, {Engine::incremental, Coherence::on, {}}).final) == Strings{"-b", "a"});
}

TEST_CASE("dom") {
  // In P1 the preferred rule n2 never defeats n1; in P3 it does.
  const auto p1 = fixture("p1");
  const LiteralSet prefs1 = wfs(p1).final;
  for (RuleIndex r = 0; r < p1.size(); ++r) CHECK(dom(p1, r, prefs1, RuleSet(p1.size())).empty());

  const auto p3 = fixture("p3");
  const RuleIndex n1 = *p3.rule_named(RuleName{"n1", {}});
  const RuleIndex n2 = *p3.rule_named(RuleName{"n2", {}});
  const LiteralSet prefs = wfs(p3).final;
  const RuleSet y(p3.size());
  CHECK(dom(p3, n1, prefs, y).empty());
  CHECK(dom(p3, n2, LiteralSet(), y).empty());
  const RuleSet d = dom(p3, n2, prefs, y);
  CHECK(d.size() == 1);
  CHECK(d.contains(n1));
}

TEST_CASE("agreement with the reference on random programs") {
  testing::RandomProgram gen(41);
  std::mt19937_64 rng(2);
  for (int round = 0; round < 150; ++round) {
    const auto p = PrioritizedProgram::build(gen.next());
    const ref::Program rp(p.rules());
    CHECK(to_ref(p, wfs(p).final) == ref::wfs(rp));
    CHECK(to_ref(p, wfs_star(p).final) == ref::wfs_star(rp));
    CHECK(to_ref(p, wfs_pr(p).final) == ref::wfs_pr(rp));
    CHECK(to_ref(p, wfs_pr(p, {Engine::declarative, Coherence::on, {}}).final) == ref::wfs_pr(rp, true));
    for (int k = 0; k < 3; ++k) {
      const LiteralSet x = testing::random_subset(p, rng);
      const ref::Set rx = to_ref(p, x);
      CHECK(to_ref(safe_pr(p, x)) == ref::safe_pr(rp, rx));
      CHECK(to_ref(p, gamma_star(p, x)) == ref::gamma_star(rp, rx));
      const RuleIndex r = static_cast<RuleIndex>(k % p.size());
      const RuleSet y = reduct(p, x);
      CHECK(to_ref(dom(p, r, x, y)) == ref::dom(rp, r, rx, to_ref(y)));
    }
  }
}

TEST_CASE("operator properties") {
  testing::RandomProgram gen(43);
  std::mt19937_64 rng(4);
  for (int round = 0; round < 200; ++round) {
    const auto p = PrioritizedProgram::build(gen.next());
    const LiteralSet x = testing::random_subset(p, rng, 0.15);
    const LiteralSet y = set_union(x, testing::random_subset(p, rng, 0.15));

    CHECK(gamma(p, y).subset_of(gamma(p, x)));
    CHECK(gamma_star(p, y).subset_of(gamma_star(p, x)));
    CHECK(wfs_operator(p, x).subset_of(wfs_operator(p, y)));
    CHECK(wfs_star_operator(p, x).subset_of(wfs_star_operator(p, y)));
    CHECK(safe_pr(p, x).subset_of(safe_pr(p, y)));
    CHECK(gamma_pr(p, x).subset_of(gamma_pr(p, y)));

    CHECK(wfs_operator(p, x).subset_of(wfs_star_operator(p, x)));
    CHECK(wfs_star_operator(p, x).subset_of(gamma_pr(p, x)));

    for (RuleIndex r = 0; r < p.size(); ++r) {
      const RuleSet small = reduct(p, y);
      const RuleSet large = reduct(p, x);
      CHECK(dom(p, r, x, small).subset_of(dom(p, r, y, small)));
      CHECK(dom(p, r, x, small).subset_of(dom(p, r, x, large)));
    }
  }
}

TEST_CASE("inclusion chain and degeneration") {
  testing::RandomProgram gen(47);
  testing::RandomProgramShape plain;
  plain.preferences = false;
  testing::RandomProgram plain_gen(53, plain);
  for (int round = 0; round < 200; ++round) {
    const auto p = PrioritizedProgram::build(gen.next());
    const LiteralSet a = wfs(p).final, b = wfs_star(p).final, c = wfs_pr(p).final;
    CHECK(a.subset_of(b));
    CHECK(b.subset_of(c));

    const auto q = PrioritizedProgram::build(plain_gen.next());
    REQUIRE_FALSE(q.has_preferences());
    CHECK(wfs_pr(q).final == wfs_star(q).final);
  }
}

TEST_CASE("without strong negation the strengthened semantics is the classical one") {
  testing::RandomProgramShape shape;
  shape.strong_neg = 0.0;
  shape.preferences = false;
  testing::RandomProgram gen(59, shape);
  for (int round = 0; round < 200; ++round) {
    const auto p = PrioritizedProgram::build(gen.next());
    CHECK(wfs_star(p).final == wfs(p).final);
  }
}

TEST_CASE("engines agree, whatever the selection order") {
  testing::RandomProgram gen(61);
  for (int round = 0; round < 150; ++round) {
    const auto p = PrioritizedProgram::build(gen.next());
    const LiteralSet expected = wfs_pr(p).final;
    CHECK(wfs_pr(p, {Engine::incremental, Coherence::off, {}}).final == expected);
    for (std::uint64_t seed = 1; seed <= 5; ++seed)
      CHECK(wfs_pr(p, {Engine::incremental, Coherence::off, seed}).final == expected);
  }
  for (const char* name : {"p0", "p1", "p2", "p3", "tweety", "mutpref", "legal", "legal_plus", "cycle4",
                           "cycle4_pref", "coherence"}) {
    const auto p = fixture(name);
    CHECK_MESSAGE(wfs_pr(p, {Engine::incremental, Coherence::off, {}}).final == wfs_pr(p).final, name);
  }
}

TEST_CASE("incremental trace admits one rule per step") {
  const auto p = fixture("legal_plus");
  const auto trace = wfs_pr(p, {Engine::incremental, Coherence::off, {}});
  for (std::size_t i = 0; i < trace.steps.size(); ++i) CHECK(trace.steps[i].safe_rules.size() == i + 1);
  CHECK(trace.final == wfs_pr(p).final);
}

TEST_CASE("coherence follows the inductive definition") {
  // n1 is safe once its dominated rival n0 is set aside, which also removes
  // the only source of -a4.  Taking both rules makes the result inconsistent.
  const auto p = load_program("n1 < n0.\nn0: -a4 <- not n0 < n1.\nn1: n0 < n1 <- -a4, not -a4.\n");
  const ref::Program rp(p.rules());
  const LiteralSet declarative = wfs_pr(p, {Engine::declarative, Coherence::on, {}}).final;
  CHECK(to_ref(p, declarative) == ref::wfs_pr(rp, true));
  CHECK(declarative.is_lit());
  // One admission at a time never reaches that state.
  CHECK(rendered(p, wfs_pr(p, {Engine::incremental, Coherence::on, {}}).final) ==
        Strings{"-(n0 < n1)", "-a4", "n1 < n0"});
}
