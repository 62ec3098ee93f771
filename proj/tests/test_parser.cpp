#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "plp/errors.hpp"
#include "plp/parser.hpp"
#include "support/random_program.hpp"

using namespace plp;

namespace {

std::vector<std::string> rule_strings(const PrioritizedProgram& p) {
  std::vector<std::string> out;
  for (const auto& r : p.rules()) out.push_back(to_string(r));
  std::sort(out.begin(), out.end());
  return out;
}

template <typename E>
SourceLocation location_of(std::string_view text) {
  try {
    parse_program(text);
  } catch (const E& e) {
    return e.location();
  }
  FAIL("expected an error");
  return {};
}

}  // namespace

TEST_CASE("named rule") {
  const auto prog = parse_program("n1: b <- not c.");
  REQUIRE(prog.rules.size() == 1);
  const auto& r = prog.rules[0];
  CHECK(to_string(*r.name) == "n1");
  CHECK(r.head == make_atom("b"));
  CHECK(r.pos_body.empty());
  CHECK(r.weak_body == std::vector<Literal>{make_atom("c")});
}

TEST_CASE("literal forms") {
  CHECK(parse_literal("-p(a,b)") == complement(make_atom("p", {"a", "b"})));
  const Literal pref = make_pref({"n1", {}}, {"n2", {}});
  CHECK(parse_literal("n1 < n2") == pref);
  CHECK(parse_literal("(n1 < n2)") == pref);
  CHECK(parse_literal("-(n1 < n2)") == complement(pref));
  CHECK(parse_literal("-n1 < n2") == complement(pref));
  CHECK(parse_literal("ls(sma,ucc) < lp(ucc,sma)") ==
        make_pref({"ls", {"sma", "ucc"}}, {"lp", {"ucc", "sma"}}));
}

TEST_CASE("seminormal sugar") {
  auto prog = parse_program("ucc: perfected <= possession.");
  REQUIRE(prog.rules.size() == 1);
  CHECK(prog.rules[0].seminormal);
  CHECK(prog.rules[0].weak_body.empty());
  const auto expanded = expand_seminormal(prog.rules[0]);
  CHECK(expanded.pos_body == std::vector<Literal>{make_atom("possession")});
  CHECK(expanded.weak_body == std::vector<Literal>{complement(make_atom("perfected"))});

  const auto sma = expand_seminormal(parse_program("-perfected <= ship, -fin_statement.").rules[0]);
  CHECK(sma.pos_body.size() == 2);
  CHECK(sma.weak_body == std::vector<Literal>{make_atom("perfected")});

  const auto bare = expand_seminormal(parse_program("a <= .").rules[0]);
  CHECK(bare.pos_body.empty());
  CHECK(bare.weak_body == std::vector<Literal>{complement(make_atom("a"))});

  const auto plain = parse_program("a <- b.").rules[0];
  CHECK(expand_seminormal(plain).weak_body.empty());
}

TEST_CASE("syntax errors carry positions") {
  const auto missing_period = location_of<SyntaxError>("n1: b <- not c");
  CHECK(missing_period.line == 1);
  CHECK(missing_period.column == 15);
  const auto loc = location_of<SyntaxError>("a.\nb <- c,, d.\n");
  CHECK(loc.line == 2);
  CHECK(loc.column == 8);
  CHECK_THROWS_AS(parse_program("a <- not."), SyntaxError);
  CHECK_THROWS_AS(parse_program("not a."), SyntaxError);
  CHECK_THROWS_AS(parse_program("a <- b c."), SyntaxError);
  CHECK_THROWS_AS(parse_program("#nonsense a."), SyntaxError);
  CHECK_THROWS_AS(parse_program("a $ b."), SyntaxError);
}

TEST_CASE("name errors") {
  CHECK(location_of<NameOnStrictRule>("a.\nn1: b <- c.").line == 2);
  CHECK_THROWS_AS(parse_program("n1: a <- not b. n1: c <- not d."), DuplicateName);
  // A repeated identical rule is not a clash.
  CHECK_NOTHROW(parse_program("n1: a <- not b. n1: a <- not b."));
  // Seminormal rules carry a weak precondition once expanded.
  CHECK_NOTHROW(parse_program("n1: a <= b."));
}

TEST_CASE("comments and directives") {
  const auto prog = parse_program("% a comment\n#constants x, y.\np(X) <- q(X). % trailing\n");
  CHECK(prog.rules.size() == 1);
  CHECK(prog.declared_constants == std::set<std::string>{"x", "y"});
  CHECK(collect_constants(prog) == std::set<std::string>{"x", "y"});
  CHECK(load_program("#constants x, y.\np(X) <- q(X).").size() == 2);
}

TEST_CASE("grounding a parameterized name") {
  const auto prog = parse_program("lp(D1,D2): D1 < D2 <= more_recent(D1,D2).\nucc: a <- not b.\nsma: c <- not d.\n");
  const auto constants = collect_constants(prog);
  CHECK(constants == std::set<std::string>{"sma", "ucc"});
  const auto instances = instantiate(prog.rules[0], constants);
  std::vector<std::string> names;
  for (const auto& r : instances) names.push_back(to_string(*r.name));
  CHECK(names == std::vector<std::string>{"lp(sma,sma)", "lp(sma,ucc)", "lp(ucc,sma)", "lp(ucc,ucc)"});
  for (const auto& r : instances) {
    CHECK(r.seminormal);
    const auto& pa = std::get<PrefAtom>(r.head.atom);
    CHECK(pa.left.functor == r.name->args[0]);
    CHECK(pa.right.functor == r.name->args[1]);
  }
}

TEST_CASE("grounding schemata") {
  const auto p = load_program(
      "fly(X) <- bird(X), not -fly(X).\n"
      "-fly(X) <- penguin(X), not fly(X).\n"
      "bird(tweety). penguin(tweety).\n");
  CHECK(rule_strings(p) == std::vector<std::string>{
                               "-fly(tweety) <- penguin(tweety), not fly(tweety).",
                               "bird(tweety).",
                               "fly(tweety) <- bird(tweety), not -fly(tweety).",
                               "penguin(tweety).",
                           });
  // Variable-free programs are unchanged.
  const auto ground_text = "n1: b <- not c. n2: c <- not b. n2 < n1.";
  const auto schema = parse_program(ground_text);
  CHECK(rule_strings(ground(schema.rules, collect_constants(schema))).size() == 3);
}

TEST_CASE("grounding errors") {
  CHECK_THROWS_AS(load_program("p(X) <- q(X)."), UnboundVariable);
  CHECK_THROWS_AS(load_program("#constants a, b.\nn(X): p(X) <- not q. n(a): p(b) <- not q."), DuplicateName);
  // Two instances of one schema collide when the name drops a variable.
  CHECK_THROWS_AS(load_program("#constants a, b.\nn: p(X) <- not q(X)."), DuplicateName);
}

TEST_CASE("grounding is exhaustive and variable-free") {
  const auto prog = parse_program("r(X,Y): p(X) <- q(Y), not s(X,Y).\nq(a). q(b). s(c,a).\n");
  const auto constants = collect_constants(prog);
  const auto p = ground(prog.rules, constants);
  std::size_t named = 0;
  for (const auto& r : p.rules()) {
    if (r.name) ++named;
    for (const auto& id : {r.head}) {
      const auto& atom = std::get<OrdinaryAtom>(id.atom);
      for (const auto& a : atom.args) CHECK_FALSE(is_variable(a));
    }
  }
  CHECK(named == constants.size() * constants.size());
}

TEST_CASE("expansion commutes with instantiation") {
  const auto prog = parse_program("n(X): p(X) <= q(X), -r(X).\n-p(X) <= s(X).\nq(a). s(b).\n");
  const auto constants = collect_constants(prog);
  for (const auto& r : prog.rules) {
    std::vector<std::string> expand_first, ground_first;
    for (const auto& g : instantiate(expand_seminormal(r), constants)) expand_first.push_back(to_string(g));
    for (const auto& g : instantiate(r, constants)) ground_first.push_back(to_string(expand_seminormal(g)));
    CHECK(expand_first == ground_first);
  }
}

TEST_CASE("round trip on the fixtures") {
  for (const char* text : {
           "n1: b <- not c, not -b. n2: -b <- not b. n2 < n1.",
           "ucc: perfected <= possession.\nlp(D1,D2): D1 < D2 <= more_recent(D1,D2).\nls(sma,ucc) < lp(ucc,sma).",
           "n1: n2 < n1 <- not -(n2 < n1).",
           "#constants x.\np(X) <- -q(X), not r.",
       }) {
    const auto once = to_string(parse_program(text));
    CHECK(to_string(parse_program(once)) == once);
  }
}

TEST_CASE("round trip on random programs") {
  testing::RandomProgram gen(99);
  for (int round = 0; round < 300; ++round) {
    const auto rules = gen.next();
    std::string text;
    for (const auto& r : rules) text += to_string(r) + "\n";
    const auto first = to_string(parse_program(text));
    CHECK(to_string(parse_program(first)) == first);
    CHECK(load_program(first).rules() == PrioritizedProgram::build(rules).rules());
  }
}
