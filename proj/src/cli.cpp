#include "luk/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "luk/half_theorem.hpp"
#include "luk/herbrand.hpp"
#include "luk/infimum.hpp"
#include "luk/model_eval.hpp"
#include "luk/mv.hpp"
#include "luk/observation.hpp"
#include "luk/parser.hpp"
#include "luk/part2.hpp"
#include "luk/prenex.hpp"
#include "luk/printer.hpp"
#include "luk/reduction.hpp"

namespace luk {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string formula;
  std::vector<std::string> assignment;
  std::string model;
  std::string cfg = "default";
  std::optional<int> m;
  std::optional<int> n;
  int depth = 2;
  std::string csv;
  std::uint64_t seed = 1;
  std::size_t count = 200;
  bool trace = false;
  std::string suite;
};

Formula parse_cli(const std::string& text) { return parse(text); }

Assignment parse_assignment(const std::vector<std::string>& items) {
  Assignment s;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected NAME=VALUE, got '" + item + "'");
    try {
      s[item.substr(0, eq)] = TruthValue::parse(item.substr(eq + 1));
    } catch (const std::exception& e) {
      throw UsageError("bad value in '" + item + "': " + e.what());
    }
  }
  return s;
}

// ------------------------------------------------------------- subcommands

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.model.empty()) {
    const Formula f = parse_cli(o.formula);
    out << eval_prop(f, parse_assignment(o.assignment)).str() << '\n';
    return kExitPass;
  }
  const FuzzyModel m = read_model_file(o.model);
  const Formula f = parse(o.formula, m.signature());
  if (!f.is_closed()) throw UsageError("formula has free variable '" + f.free_set().front() + "'");
  if (!o.trace) {
    out << eval_closed(f, m).str() << '\n';
    return kExitPass;
  }
  const EvalReport r = eval_report(f, m);
  out << r.value.str() << '\n';
  for (const auto& step : r.trace) {
    out << (step.quantifier == Quantifier::Forall ? "forall " : "exists ") << step.variable << " = #" << step.element
        << " : " << step.value.str() << '\n';
  }
  return kExitPass;
}

int cmd_inf(const Options& o, std::ostream& out) {
  const InfimumResult r = infimum(parse_cli(o.formula));
  out << r.value.str() << '\n';
  out << "witness " << format_assignment(r.witness) << '\n';
  return kExitPass;
}

int cmd_taut(const Options& o, std::ostream& out) {
  const Formula f = parse_cli(o.formula);
  if (is_propositional(f)) {
    const TautologyVerdict v = is_tautology_prop(f);
    if (v.tautology) {
      out << "TAUTOLOGY\ninfimum 1\n";
      return kExitPass;
    }
    out << "NOT-TAUTOLOGY\ninfimum " << v.value.str() << "\nwitness " << format_assignment(v.witness) << '\n';
    return kExitFail;
  }
  const PredicateTautologyVerdict v = is_tautology_pred(f);
  out << (v.tautology ? "TAUTOLOGY" : "NOT-TAUTOLOGY") << '\n';
  out << "skeleton " << print(v.skeleton.formula) << '\n';
  for (const auto& [name, g] : v.skeleton.mapping) out << "  " << name << " := " << print(g) << '\n';
  out << "infimum " << v.verdict.value.str() << '\n';
  if (!v.tautology) out << "witness " << format_assignment(v.verdict.witness) << '\n';
  return v.tautology ? kExitPass : kExitFail;
}

int cmd_classical(const Options& o, std::ostream& out) {
  const Formula f = parse_cli(o.formula);
  if (!is_classical(f)) throw UsageError("formula must use only ~, /\\, \\/ and quantifiers");
  if (is_propositional(f)) {
    const ObservationReport r = check_observation(f, o.count, o.seed);
    out << "tautology " << (r.tautology ? "yes" : "no") << '\n';
    out << "infimum " << r.infimum.str() << '\n';
    out << "witness " << format_assignment(r.witness) << '\n';
    out << "all-1/2 " << r.at_half.str() << '\n';
    out << "~f -> f " << r.negation_implies.str() << '\n';
    out << r.fresh_variable << " /\\ ~" << r.fresh_variable << " -> f " << r.contradiction_implies.str() << '\n';
    for (const auto& msg : r.failures) out << "FAIL " << msg << '\n';
    out << (r.ok() ? "OK" : "FAILED") << '\n';
    return r.ok() ? kExitPass : kExitFail;
  }
  if (!f.is_closed()) throw UsageError("formula has free variable '" + f.free_set().front() + "'");
  ModelSampleOptions opts;
  opts.count = o.count;
  opts.seed = o.seed;
  const auto models = sample_models(infer_signature(f), opts);
  const HalfTheoremReport r = check_half_theorem(f, models, o.depth);
  out << "all-1/2 " << r.all_half_value.str() << '\n';
  out << "valid " << (r.valid_at_depth() ? "confirmed at depth " + std::to_string(r.negation_refutation.depth)
                                          : "not confirmed up to depth " + std::to_string(o.depth))
      << '\n';
  out << "sampled " << models.size() << " models, min " << r.sampled_min.str() << ", max " << r.sampled_max.str()
      << '\n';
  if (r.crisp_countermodel) out << "crisp countermodel #" << *r.crisp_countermodel << '\n';
  for (const auto& msg : r.failures) out << "FAIL " << msg << '\n';
  out << (r.ok() ? "OK" : "FAILED") << '\n';
  return r.ok() ? kExitPass : kExitFail;
}

SkolemForm skolem_of(const Formula& f, Formula& prenex) {
  if (!f.is_closed()) throw UsageError("formula has free variable '" + f.free_set().front() + "'");
  prenex = to_prenex(f);
  return skolemize(prenex, infer_signature(f));
}

int cmd_skolem(const Options& o, std::ostream& out) {
  Formula prenex;
  const SkolemForm sk = skolem_of(parse_cli(o.formula), prenex);
  out << "prenex " << print(prenex) << '\n';
  out << "matrix " << print(sk.matrix) << '\n';
  out << "universals";
  for (const auto& u : sk.universals) out << ' ' << u;
  out << "\nfunctions";
  for (std::size_t i = 0; i < sk.functions.size(); ++i) {
    if (!sk.functions[i].empty()) out << ' ' << sk.functions[i] << '/' << i + 1;
  }
  out << '\n';
  return kExitPass;
}

int cmd_herbrand(const Options& o, std::ostream& out) {
  Formula prenex;
  const SkolemForm sk = skolem_of(parse_cli(o.formula), prenex);
  const HerbrandResult r = herbrand_refute(sk, o.depth);
  if (r.refuted) {
    out << "REFUTED depth " << r.depth << '\n';
    for (const auto& c : r.certificate) out << print(c) << '\n';
    return kExitPass;
  }
  out << "NOT-REFUTED up to depth " << r.depth << (r.truncated ? " (search truncated)" : "") << '\n';
  return kExitFail;
}

int cmd_gen_psi(const Options& o, std::ostream& out) {
  if (!o.m) throw UsageError("gen-psi needs --m");
  const Reduction red(load_config(o.cfg));
  try {
    out << print(red.psi(*o.m).formula()) << '\n';
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitPass;
}

// ------------------------------------------------------------------ verify

int suite_fact(const Options& o, std::ostream& out) {
  const Reduction red(load_config(o.cfg));
  const FactReport r = verify_fact(red);
  for (const auto& c : r.components) {
    out << c.name << ' ' << c.value.str() << '\n';
    if (c.trace) {
      out << "  at " << print(c.trace->formula) << '\n';
      for (const auto& s : c.trace->trace) out << "  " << s.variable << " = #" << s.element << " : " << s.value.str() << '\n';
    }
  }
  out << "epsilon " << r.epsilon.str() << '\n';
  out << "Q-recurrence " << (r.q_recurrence ? "holds" : "FAILS") << '\n';
  if (r.q_recurrence_failure) {
    out << "  at m=" << r.q_recurrence_failure->first << " n=" << r.q_recurrence_failure->second << '\n';
  }
  out << (r.ok() ? "OK" : "FAILED") << '\n';
  return r.ok() ? kExitPass : kExitFail;
}

bool consistent(const ReductionConfig& cfg, const MainClaimResult& r) {
  if (r.in_A) return r.value.is_one();
  return r.value == TruthValue(cfg.f(r.m) - 1, cfg.f(r.m));
}

int suite_mainclaim1(const Options& o, std::ostream& out) {
  const Reduction red(load_config(o.cfg));
  const ReductionConfig& cfg = red.config();
  const FuzzyModel truncation = build_truncation(cfg);
  std::vector<int> ms;
  if (o.m) {
    if (*o.m <= 3 || *o.m > cfg.m_max) throw UsageError("--m must lie in (3, m_max]");
    ms.push_back(*o.m);
  } else {
    for (int m = 4; m <= cfg.m_max; ++m) ms.push_back(m);
  }
  std::vector<MainClaimResult> results;
  bool ok = true;
  for (int m : ms) {
    results.push_back(evaluate_main_claim(red, truncation, m));
    ok = ok && consistent(cfg, results.back());
  }
  for (const auto& r : results) {
    if (!o.m) out << "m=" << r.m << ' ' << (r.in_A ? "A" : "f=" + std::to_string(r.f_m)) << ' ';
    out << r.value.str() << ' ' << r.verdict << '\n';
  }
  if (!o.csv.empty()) {
    std::ofstream csv(o.csv);
    if (!csv) throw UsageError("cannot write '" + o.csv + "'");
    csv << "# luk mainclaim1 csv v1\n";
    csv << "m,f_m,instance_value_num,instance_value_den,verdict\n";
    for (const auto& r : results) {
      csv << r.m << ',' << (r.in_A ? std::string() : std::to_string(r.f_m)) << ',' << r.value.numerator() << ','
          << r.value.denominator() << ',' << r.verdict << '\n';
    }
  }
  return ok ? kExitPass : kExitFail;
}

int suite_part2(const Options& o, std::ostream& out) {
  const Reduction red(load_config(o.cfg));
  const TruthValue delta(1, 10);
  bool ok = true;
  auto report = [&](const std::string& label, const Part2Report& r) {
    out << label << " e=" << r.e.str() << " case=" << r.case_number << (r.trivial ? " trivial" : "")
        << " psi'=" << r.psi_value.str() << ' ' << (r.ok() ? "ok" : "FAILED") << '\n';
    for (const auto& c : r.checks) {
      if (!c.ok()) out << "  " << c.name << ' ' << c.status() << ' ' << c.detail << '\n';
    }
    ok = ok && r.ok();
  };
  if (!o.model.empty()) {
    if (!o.m || !o.n) throw UsageError("part2 on a model file needs --m and --n");
    const FuzzyModel M = read_model_file(o.model);
    std::vector<int> chain;
    for (int i = 2; i <= *o.n; ++i) chain.push_back(i);
    try {
      const Part2Report r = verify_part2_inequalities(red, M, *o.m, *o.n, chain, delta);
      report(o.model, r);
      out << r.summary();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    for (const auto& member : perturbation_family(red.config(), o.seed)) {
      report(member.label, verify_part2_inequalities(red, member.model, member.m, member.n, member.chain, delta));
    }
  }
  out << (ok ? "OK" : "FAILED") << '\n';
  return ok ? kExitPass : kExitFail;
}

int suite_rounding(const Options& o, std::ostream& out) {
  const Reduction red(load_config(o.cfg));
  const auto tracked = red.rounding_tracked();
  const std::set<std::string> keep{sym::kQ, sym::kP};
  bool ok = true;
  for (const auto& member : perturbation_family(red.config(), o.seed)) {
    const TruthValue e = epsilon_value(member.model, red.epsilon_sources());
    const RoundingReport r = check_rounding_claim(member.model, tracked, keep, e);
    out << member.label << " e=" << e.str() << " instances=" << r.instances
        << " max-diff=" << format_rational(r.max_difference) << ' ' << (r.ok ? "ok" : "FAILED") << '\n';
    if (!r.ok) out << "  worst " << print(r.worst) << '\n';
    ok = ok && r.ok;
  }
  out << (ok ? "OK" : "FAILED") << '\n';
  return ok ? kExitPass : kExitFail;
}

Formula random_classical(std::mt19937_64& rng, int vars, int depth) {
  std::uniform_int_distribution<int> var_pick(0, vars - 1);
  std::uniform_int_distribution<int> op_pick(0, 3);
  if (depth == 0) return make_atom("p" + std::to_string(var_pick(rng)));
  switch (op_pick(rng)) {
    case 0: return make_atom("p" + std::to_string(var_pick(rng)));
    case 1: return make_not(random_classical(rng, vars, depth - 1));
    case 2: return make_and(random_classical(rng, vars, depth - 1), random_classical(rng, vars, depth - 1));
    default: return make_or(random_classical(rng, vars, depth - 1), random_classical(rng, vars, depth - 1));
  }
}

int suite_obs423(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<int> vars_pick(1, 4);
  std::uniform_int_distribution<int> depth_pick(1, 4);
  std::size_t tautologies = 0, failed = 0;
  for (std::size_t i = 0; i < o.count; ++i) {
    const Formula f = random_classical(rng, vars_pick(rng), depth_pick(rng));
    const ObservationReport r = check_observation(f, 20, o.seed + i);
    if (r.tautology) ++tautologies;
    if (!r.ok()) {
      ++failed;
      out << "FAIL " << print(f) << '\n';
      for (const auto& msg : r.failures) out << "  " << msg << '\n';
    }
  }
  out << "checked " << o.count << " formulas, " << tautologies << " tautologies, " << failed << " failures\n";
  out << (failed == 0 ? "OK" : "FAILED") << '\n';
  return failed == 0 ? kExitPass : kExitFail;
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.suite == "fact") return suite_fact(o, out);
  if (o.suite == "mainclaim1") return suite_mainclaim1(o, out);
  if (o.suite == "part2") return suite_part2(o, out);
  if (o.suite == "obs423") return suite_obs423(o, out);
  if (o.suite == "rounding") return suite_rounding(o, out);
  throw UsageError("unknown suite '" + o.suite + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Lukasiewicz logic toolkit", "luk"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "value of a formula under an assignment or in a model");
  eval->add_option("formula", o.formula)->required();
  eval->add_option("assignment", o.assignment, "NAME=VALUE pairs for propositional formulas");
  eval->add_option("--model", o.model, "model file");
  eval->add_flag("--trace", o.trace, "print the argmin/argmax chain of the quantifier prefix");

  auto* inf = app.add_subcommand("inf", "exact infimum of a propositional formula");
  inf->add_option("formula", o.formula)->required();

  auto* taut = app.add_subcommand("taut", "decide tautology (propositional, or as a substitution instance)");
  taut->add_option("formula", o.formula)->required();

  auto* classical = app.add_subcommand("classical", "checks for formulas over ~, /\\, \\/ and quantifiers");
  classical->add_option("formula", o.formula)->required();
  classical->add_option("--depth", o.depth, "Herbrand depth")->check(CLI::NonNegativeNumber);
  classical->add_option("--seed", o.seed);
  classical->add_option("--count", o.count, "sampled assignments or models");

  auto* skolem = app.add_subcommand("skolem", "prenex and Skolem form");
  skolem->add_option("formula", o.formula)->required();

  auto* herbrand = app.add_subcommand("herbrand", "refute a closed formula by Herbrand expansion");
  herbrand->add_option("formula", o.formula)->required();
  herbrand->add_option("--depth", o.depth, "term depth bound")->check(CLI::NonNegativeNumber);

  auto* gen_psi = app.add_subcommand("gen-psi", "print psi_m");
  gen_psi->add_option("--m", o.m)->required();
  gen_psi->add_option("--cfg", o.cfg, "config file or 'default'");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", o.suite)
      ->required()
      ->check(CLI::IsMember({"fact", "mainclaim1", "part2", "obs423", "rounding"}));
  verify->add_option("--cfg", o.cfg, "config file or 'default'");
  verify->add_option("--m", o.m);
  verify->add_option("--n", o.n);
  verify->add_option("--model", o.model, "model file (part2)");
  verify->add_option("--csv", o.csv, "CSV output path (mainclaim1)");
  verify->add_option("--seed", o.seed);
  verify->add_option("--count", o.count, "formulas (obs423)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*inf) return cmd_inf(o, out);
    if (*taut) return cmd_taut(o, out);
    if (*classical) return cmd_classical(o, out);
    if (*skolem) return cmd_skolem(o, out);
    if (*herbrand) return cmd_herbrand(o, out);
    if (*gen_psi) return cmd_gen_psi(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const ParseError& e) {
    err << "parse error at byte " << e.position() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ModelError& e) {
    err << "model error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SignatureError& e) {
    err << "signature error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}

}  // namespace luk
