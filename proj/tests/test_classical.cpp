#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "luk/half_theorem.hpp"
#include "luk/herbrand.hpp"
#include "luk/infimum.hpp"
#include "luk/model_eval.hpp"
#include "luk/normal_form.hpp"
#include "luk/observation.hpp"
#include "luk/parser.hpp"
#include "luk/prenex.hpp"
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

std::vector<Formula> classical_corpus() {
  std::vector<Formula> out;
  for (const auto& f : oracle::all_formulas({"p", "q"}, 3)) {
    if (is_classical(f)) out.push_back(f);
  }
  return out;
}

}  // namespace

TEST_CASE("normal form examples") {
  const NormalForm nf = to_normal_form(parse("p \\/ (q /\\ ~r)"));
  CHECK(nf.clauses.size() == 2);
  CHECK(to_normal_form(parse("~(p /\\ q)")).clauses.size() == 1);
  CHECK(is_classical_tautology(parse("p \\/ ~p")));
  CHECK(is_classical_tautology(parse("(p /\\ q) \\/ ~p \\/ ~q")));
  CHECK_FALSE(is_classical_tautology(parse("p \\/ q")));
  CHECK_FALSE(is_classical_tautology(parse("p /\\ ~p")));
  CHECK(has_complementary_pair({{"p", false}, {"p", true}}));
  CHECK_FALSE(has_complementary_pair({{"p", false}, {"q", true}}));
  CHECK_THROWS_AS(to_normal_form(parse("p -> q")), std::invalid_argument);
}

TEST_CASE("normal form preserves fuzzy values") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const Formula f = oracle::random_formula(rng, 3, 4, true);
    const NormalForm nf = to_normal_form(f);
    const Formula g = to_formula(nf);
    for (int k = 0; k < 10; ++k) {
      oracle::RationalAssignment a;
      Assignment s;
      for (const char* v : {"p", "q", "r"}) {
        a[v] = oracle::random_unit(rng, 10);
        s[v] = TruthValue::from_rational(a[v]);
      }
      const Rational expect = oracle::eval(f, a);
      CHECK(eval_normal_form(nf, s).to_rational() == expect);
      CHECK(oracle::eval(g, a) == expect);
    }
  }
}

TEST_CASE("classical tautology decision matches truth tables") {
  const auto corpus = classical_corpus();
  CHECK(corpus.size() > 100);
  for (const auto& f : corpus) CHECK(is_classical_tautology(f) == oracle::truth_table_tautology(f));
  std::mt19937_64 rng(67);
  for (int i = 0; i < 500; ++i) {
    const Formula f = oracle::random_formula(rng, 3, 4, true);
    CHECK(is_classical_tautology(f) == oracle::truth_table_tautology(f));
  }
}

TEST_CASE("observation examples") {
  const auto lem = check_observation(parse("p \\/ ~p"));
  CHECK(lem.ok());
  CHECK(lem.tautology);
  CHECK(lem.infimum == TruthValue::half());
  CHECK(lem.at_half == TruthValue::half());
  CHECK(lem.negation_implies == TruthValue::one());
  CHECK(lem.fresh_variable == "p1");

  const auto nt = check_observation(parse("p \\/ q"));
  CHECK(nt.ok());
  CHECK_FALSE(nt.tautology);
  CHECK(nt.infimum == TruthValue::zero());
  CHECK(nt.negation_implies < TruthValue::one());
  CHECK(nt.contradiction_implies < TruthValue::one());

  CHECK(fresh_name({"p", "p1", "q"}) == "p2");
  CHECK(fresh_name({"q"}) == "p");
}

TEST_CASE("observation holds on the classical corpus") {
  for (const auto& f : classical_corpus()) {
    const auto rep = check_observation(f, 20);
    INFO(print(f));
    CHECK(rep.ok());
    CHECK(rep.tautology == oracle::truth_table_tautology(f));
    CHECK(rep.infimum.to_rational() == oracle::grid_min(f, 2).value);
  }
}

TEST_CASE("prenex examples") {
  const Signature s = pr_sig();
  CHECK(print(to_prenex(parse("(forall x. P(x)) \\/ R(c)", s))) == "forall x. P(x) \\/ R(c)");
  CHECK(to_prenex(parse("~exists x. P(x)", s)) == parse("forall x. ~P(x)", s));
  const Formula clash = to_prenex(parse("(forall x. P(x)) /\\ (exists x. R(x))", s));
  const auto [prefix, matrix] = split_prefix(clash);
  REQUIRE(prefix.size() == 2);
  CHECK(prefix[0].second != prefix[1].second);
  CHECK(is_quantifier_free(matrix));
  CHECK_THROWS_AS(to_prenex(parse("(forall x. P(x)) -> R(c)", s)), std::invalid_argument);
}

TEST_CASE("prenex preserves values in every model") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const Formula f = oracle::random_predicate(rng, 5);
    const Formula g = to_prenex(f);
    INFO(print(f));
    INFO(print(g));
    CHECK(is_quantifier_free(split_prefix(g).second));
    for (int k = 0; k < 3; ++k) {
      const FuzzyModel m = oracle::random_model(rng, pr_sig(), 1 + k, 6);
      std::map<std::string, int> e1, e2;
      CHECK(oracle::model_eval(f, m, e1) == oracle::model_eval(g, m, e2));
    }
  }
}

TEST_CASE("skolemize examples") {
  const SkolemForm a = skolemize(parse("forall x. exists y. S(x,y)"));
  CHECK(print(a.matrix) == "S(x,g1(x))");
  CHECK(a.universals == std::vector<std::string>{"x"});
  CHECK(a.signature.function_arity("g1") == 1);

  const SkolemForm b = skolemize(parse("exists y. forall x. S(x,y)"));
  CHECK(b.universals.size() == 2);
  CHECK(print(b.matrix) == "S(x,g1(" + b.universals[0] + "))");

  CHECK_THROWS_AS(skolemize(parse("P(c) /\\ forall x. P(x)")), std::invalid_argument);
}

TEST_CASE("herbrand universe") {
  Signature s;
  s.add_constant("a");
  s.add_function("f", 1);
  CHECK(herbrand_universe(s, 0).size() == 1);
  CHECK(herbrand_universe(s, 2).size() == 3);
  CHECK(herbrand_universe(Signature(), 0).size() == 1);
}

TEST_CASE("herbrand refutation examples") {
  auto refute = [](const char* text, int depth) {
    return herbrand_refute(skolemize(to_prenex(parse(text))), depth);
  };
  const auto r = refute("(forall x. P(x)) /\\ ~P(c)", 2);
  CHECK(r.refuted);
  CHECK(r.depth == 0);
  CHECK(oracle::ground_contradiction(r.certificate));

  // needs the Skolem term at depth 1
  const auto s = refute("(forall x. exists y. S(x,y)) /\\ (forall x. forall y. ~S(x,y))", 3);
  CHECK(s.refuted);
  CHECK(oracle::ground_contradiction(s.certificate));

  CHECK_FALSE(refute("forall x. P(x) \\/ ~P(c)", 2).refuted);
  CHECK_FALSE(refute("exists x. P(x)", 2).refuted);
  CHECK(is_propositional_contradiction({parse("P(c)"), parse("~P(c)")}));
  CHECK_FALSE(is_propositional_contradiction({parse("P(c) \\/ S(c,c)"), parse("~P(c)")}));
}

TEST_CASE("herbrand certificates hold up independently") {
  std::mt19937_64 rng(73);
  int refuted = 0;
  for (int i = 0; i < 150; ++i) {
    const Formula f = oracle::random_predicate(rng, 4);
    const auto r = herbrand_refute(skolemize(to_prenex(f)), 2);
    if (!r.refuted) continue;
    ++refuted;
    INFO(print(f));
    CHECK(oracle::ground_contradiction(r.certificate));
    CHECK_FALSE(oracle::crisp_countermodel(make_not(f), 2));
  }
  CHECK(refuted > 0);
}

TEST_CASE("half theorem examples") {
  const Signature s = pr_sig();
  ModelSampleOptions opt;
  opt.count = 60;
  const auto models = sample_models(s, opt);
  CHECK(models.size() == 60);
  CHECK(models[0].is_crisp());

  const Formula valid = parse("(forall x. P(x)) \\/ exists x. ~P(x)", s);
  const auto v = check_half_theorem(valid, models, 2);
  CHECK(v.ok());
  CHECK(v.valid_at_depth());
  CHECK(v.all_half_value == TruthValue::half());
  CHECK(TruthValue::half() <= v.sampled_min);

  const Formula invalid = parse("forall x. P(x)", s);
  const auto n = check_half_theorem(invalid, models, 2);
  CHECK(n.ok());
  CHECK_FALSE(n.valid_at_depth());
  REQUIRE(n.crisp_countermodel);
  CHECK(eval_closed(invalid, models[*n.crisp_countermodel]) == TruthValue::zero());
  CHECK(n.sampled_min == TruthValue::zero());
}
