#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "luk/model_eval.hpp"
#include "luk/parser.hpp"
#include "luk/printer.hpp"
#include "oracles.hpp"

using namespace luk;

namespace {

Signature pr_sig() {
  Signature s;
  s.add_relation("P", 1);
  s.add_relation("R", 1);
  s.add_relation("S", 2);
  s.add_constant("c");
  return s;
}

FuzzyModel two_point() {
  FuzzyModel m(2);
  m.add_relation("R", 1);
  m.set("R", {0}, TruthValue(1, 3));
  m.set("R", {1}, TruthValue(3, 4));
  return m;
}

Rational oracle_closed(const Formula& f, const FuzzyModel& m) {
  std::map<std::string, int> env;
  return oracle::model_eval(f, m, env);
}

// Relation values within 1/20 of 0 or 1.
FuzzyModel near_crisp(std::mt19937_64& rng, const Signature& sig, int domain) {
  FuzzyModel m = oracle::random_model(rng, sig, domain, 1);
  std::uniform_int_distribution<int> wobble(0, 3);
  for (const auto& [name, k] : sig.relations()) {
    auto& t = m.relation(name);
    for (std::size_t i = 0; i < t.size(); ++i) {
      const TruthValue d(wobble(rng), 60);
      t.set_flat(i, t.flat(i).is_one() ? negation(d) : d);
    }
  }
  return m;
}

}  // namespace

TEST_CASE("quantifier examples") {
  const FuzzyModel m = two_point();
  const Signature sig = m.signature();
  CHECK(eval_closed(parse("forall x. R(x)", sig), m) == TruthValue(1, 3));
  CHECK(eval_closed(parse("exists x. R(x)", sig), m) == TruthValue(3, 4));
  CHECK(eval_closed(parse("~forall x. R(x)", sig), m) == TruthValue(2, 3));
  CHECK(eval_closed(parse("exists x. R(x) & R(x)", sig), m) == TruthValue(1, 2));
  CHECK(eval_closed(parse("R(#1) -> R(#0)", sig), m) == TruthValue(7, 12));
  CHECK(eval_with(parse("R(x)", sig), m, {{"x", 1}}) == TruthValue(3, 4));
  CHECK_THROWS_AS(eval_closed(parse("R(x)", sig), m), SignatureError);
  CHECK_THROWS_AS(eval_with(parse("R(x)", sig), m, {}), ModelError);
  CHECK_THROWS_AS(eval_closed(parse("Z(#0)"), m), ModelError);
}

TEST_CASE("all-half model") {
  const FuzzyModel m = all_half_model(pr_sig(), 3);
  CHECK(eval_closed(parse("forall x. P(x) \\/ ~P(x)", pr_sig()), m) == TruthValue::half());
  CHECK(eval_closed(parse("exists x. S(x,c) |+| S(c,x)", pr_sig()), m) == TruthValue::one());
  CHECK(eval_closed(parse("P(c) & P(c)", pr_sig()), m) == TruthValue::zero());
  CHECK(m.constant("c") == 0);
  CHECK_FALSE(m.is_crisp());
}

TEST_CASE("evaluation matches the rational oracle") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 200; ++i) {
    const Formula f = oracle::random_predicate(rng, 5);
    const FuzzyModel m = oracle::random_model(rng, pr_sig(), 1 + i % 4, 7);
    INFO(print(f));
    const Rational expect = oracle_closed(f, m);
    CHECK(eval_closed(f, m).to_rational() == expect);
    Evaluator ev(m);
    CHECK(ev.closed(f).to_rational() == expect);
    CHECK(ev.closed(f).to_rational() == expect);  // cached path
  }
}

TEST_CASE("crisp models agree with classical truth") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 200; ++i) {
    const Formula f = oracle::random_predicate(rng, 5);
    const FuzzyModel m = oracle::random_model(rng, pr_sig(), 1 + i % 3, 1);
    REQUIRE(m.is_crisp());
    std::map<std::string, int> env;
    const bool truth = oracle::crisp_eval(f, m, env);
    CHECK(eval_closed(f, m) == (truth ? TruthValue::one() : TruthValue::zero()));
  }
}

TEST_CASE("model text round trip") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 20; ++i) {
    const FuzzyModel m = oracle::random_model(rng, pr_sig(), 1 + i % 4, 9);
    std::stringstream ss;
    write_model(ss, m);
    CHECK(read_model(ss) == m);
  }
  std::istringstream in(
      "# comment\n"
      "domain 3\n"
      "const c = 2\n"
      "rel S/2\n"
      "0 1 = 1/2\n"
      "default = 0\n"
      "rel P/1\n"
      "0 = 1\n1 = 0\n2 = 1/3\n");
  const FuzzyModel m = read_model(in);
  CHECK(m.domain_size() == 3);
  CHECK(m.constant("c") == 2);
  CHECK(m.value("S", {0, 1}) == TruthValue::half());
  CHECK(m.value("S", {2, 2}) == TruthValue::zero());
  CHECK(m.value("P", {2}) == TruthValue(1, 3));
}

TEST_CASE("model format errors") {
  auto bad = [](const char* text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_model(in), ModelError);
  };
  bad("rel P/1\n0 = 1\n");                   // no domain
  bad("domain 2\nrel P/1\n0 = 1\n");         // incomplete table
  bad("domain 2\nrel P/1\n0 = 3/2\n1 = 0\n"); // out of range
  bad("domain 2\nrel P/1\n5 = 1\n1 = 0\n");  // element outside domain
  bad("domain 2\nrel P/1\n0 1 = 1\n");       // wrong arity
  bad("domain 2\nconst c = 4\n");
  bad("domain 2\nwhat\n");
  CHECK_THROWS_AS(read_model_file("/nonexistent/model.txt"), ModelError);
}

TEST_CASE("crisp rounding") {
  FuzzyModel m(2);
  m.add_relation("A", 1);
  m.add_relation("B", 1);
  m.set("A", {0}, TruthValue(2, 5));
  m.set("A", {1}, TruthValue(3, 5));
  m.set("B", {0}, TruthValue(1, 7));
  const FuzzyModel r = crisp_round(m, {"B"});
  CHECK(r.value("A", {0}) == TruthValue::zero());
  CHECK(r.value("A", {1}) == TruthValue::one());
  CHECK(r.value("B", {0}) == TruthValue(1, 7));
  CHECK(crisp_round(r, {"B"}) == r);
  m.set("A", {0}, TruthValue::half());
  CHECK_THROWS_AS(crisp_round(m, {}), RoundingError);
  CHECK_NOTHROW(crisp_round(m, {"A"}));
}

TEST_CASE("epsilon examples") {
  const Signature sig = pr_sig();
  const std::vector<Formula> roots{parse("forall x. P(x) \\/ R(x)", sig), parse("exists x. S(x,c)", sig)};
  const auto sources = epsilon_sources(roots, {});
  std::mt19937_64 rng(1);
  FuzzyModel crisp = oracle::random_model(rng, sig, 3, 1);
  CHECK(epsilon_value(crisp, sources) == TruthValue::zero());
  crisp.set("P", {1}, TruthValue(1, 10));
  CHECK(epsilon_value(crisp, sources) == TruthValue(1, 10));
  const auto w = epsilon_witness(crisp, sources);
  CHECK(w.value == TruthValue(1, 10));
  CHECK(w.elements == std::vector<int>{1});
  CHECK(epsilon_value(all_half_model(sig, 2), sources) == TruthValue::half());

  // excluding P removes the atom and the disjunction, keeps the quantifier
  const auto without_p = epsilon_sources(roots, {"P"});
  for (const auto& f : without_p) CHECK((!is_quantifier_free(f) || !mentions_relation(f, {"P"})));
  CHECK(std::find(without_p.begin(), without_p.end(), roots[0]) != without_p.end());
}

TEST_CASE("epsilon formula and sweep agree") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 60; ++i) {
    const std::vector<Formula> roots{oracle::random_predicate(rng, 4), oracle::random_predicate(rng, 4)};
    const auto sources = epsilon_sources(roots, i % 2 ? std::set<std::string>{"R"} : std::set<std::string>{});
    const FuzzyModel m = oracle::random_model(rng, pr_sig(), 1 + i % 3, 6);
    const Formula ef = epsilon_formula(sources);
    CHECK(ef.is_closed());
    CHECK(eval_closed(ef, m) == epsilon_value(m, sources));
    CHECK(oracle_closed(ef, m) == epsilon_value(m, sources).to_rational());
  }
}

TEST_CASE("evaluation report") {
  const FuzzyModel m = two_point();
  const Formula f = parse("forall x. exists y. R(x) & R(y)", m.signature());
  const EvalReport rep = eval_report(f, m);
  CHECK(rep.value == eval_closed(f, m));
  REQUIRE(rep.trace.size() == 2);
  CHECK(rep.trace[0].quantifier == Quantifier::Forall);
  CHECK(rep.trace[0].element == 0);
  CHECK(rep.trace[0].value == rep.value);
  CHECK(rep.trace[1].element == 1);

  std::mt19937_64 rng(53);
  for (int i = 0; i < 100; ++i) {
    const Formula g = oracle::random_predicate(rng, 4);
    const FuzzyModel r = oracle::random_model(rng, pr_sig(), 3, 5);
    const EvalReport er = eval_report(g, r);
    // Re-evaluating the stripped body at the traced elements gives the value.
    Formula body = g;
    std::map<std::string, int> env;
    for (const auto& step : er.trace) {
      REQUIRE(body.kind() == Formula::Kind::Quantified);
      env[step.variable] = step.element;
      body = body.body();
      CHECK(eval_with(body, r, env) == step.value);
    }
    CHECK(er.value == eval_closed(g, r));
  }
}

TEST_CASE("instance enumeration") {
  const FuzzyModel m = all_half_model(pr_sig(), 3);
  std::size_t count = 0;
  for_each_instance(parse("S(x,y)", pr_sig()), m, [&](std::span<const int> a, const TruthValue& v) {
    CHECK(a.size() == 2);
    CHECK(v == TruthValue::half());
    return ++count < 5;
  });
  CHECK(count == 5);
}

TEST_CASE("rounding claim") {
  std::mt19937_64 rng(59);
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    const Signature sig = pr_sig();
    const std::vector<Formula> roots{oracle::random_predicate(rng, 5)};
    const auto tracked = subformulas(roots[0]);
    const FuzzyModel m = near_crisp(rng, sig, 3);
    const TruthValue e = epsilon_value(m, epsilon_sources(roots, {}));
    if (!(e < TruthValue(1, 10))) {
      CHECK_THROWS_AS(check_rounding_claim(m, tracked, {}, e), RoundingError);
      continue;
    }
    const RoundingReport rep = check_rounding_claim(m, tracked, {}, e);
    INFO(print(roots[0]));
    CHECK(rep.ok);
    CHECK(rep.max_difference <= e.to_rational());
    ++checked;
  }
  CHECK(checked > 40);
  CHECK_THROWS_AS(check_rounding_claim(all_half_model(pr_sig(), 2), {}, {}, TruthValue(1, 4)), RoundingError);
}
