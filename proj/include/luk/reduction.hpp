#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "luk/formula.hpp"
#include "luk/model.hpp"
#include "luk/model_eval.hpp"
#include "luk/truth_value.hpp"

namespace luk {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The relation table R, the set A and the bound function f, plus the
/// sizes of the finite construction.
///
/// Builtin table: R(m,n) iff m is even or n < m, so A is the even numbers
/// and f(m) = m for odd m. Explicit table: the listed pairs (all within
/// [0,N]); A is given by an `A` line or else read off as {m : R(m,N)}, and
/// f(m) = 1 + max{n : R(m,n)}.
struct ReductionConfig {
  enum class Table { EvenOrLt, Explicit };

  /// Numerals Num0..NumN are axiomatized and the R table is coded up to N.
  int N = 24;
  /// Domain size of the standard truncation.
  int k = 50;
  int m_max = 20;
  Table table = Table::EvenOrLt;
  std::set<std::pair<int, int>> pairs;
  std::optional<std::set<int>> a_override;

  bool R(int m, int n) const;
  bool in_A(int m) const;
  /// Throws ConfigError for m in A.
  int f(int m) const;

  /// Throws ConfigError unless 3 < m_max <= N < k and f witnesses its
  /// defining property on the table.
  void validate() const;
};

/// Text format, one directive per line, `#` comments:
///
///     N 24
///     k 50
///     m_max 20
///     R builtin:even-or-lt        (or: R explicit)
///     pair m n                    (explicit tables)
///     A m1 m2 ...                 (optional)
ReductionConfig parse_config(std::istream& in);
/// "default" names the builtin configuration.
ReductionConfig load_config(const std::string& path);

/// Relation names of the construction.
namespace sym {
inline const std::string kLt = "Lt";
inline const std::string kSucc = "Succ";
inline const std::string kAdd = "Add";
inline const std::string kMul = "Mul";
inline const std::string kR = "R";
inline const std::string kQ = "Q";
inline const std::string kP = "P";
inline const std::string kZero = "0";
inline const std::string kOne = "1";
std::string numeral(int j);
}  // namespace sym

/// Arithmetic relations, R, numerals, and the fuzzy Q and P.
Signature reduction_signature(const ReductionConfig& cfg);

/// Conjunction of the crisp axioms: order, successor, Add/Mul base cases,
/// numerals 0..N along successor chains, and the R table as guarded
/// implications.
ClosedFormula build_phi0(const ReductionConfig& cfg);

struct Phi123 {
  ClosedFormula phi1;
  ClosedFormula phi2;
  ClosedFormula phi3;
};
Phi123 build_phi123();

/// Everything built from one configuration.
class Reduction {
 public:
  explicit Reduction(ReductionConfig cfg);

  const ReductionConfig& config() const { return cfg_; }
  const Signature& signature() const { return sig_; }
  const Formula& phi0() const { return phi0_; }
  const Formula& phi1() const { return phi1_; }
  const Formula& phi2() const { return phi2_; }
  const Formula& phi3() const { return phi3_; }
  std::vector<Formula> phis() const { return {phi0_, phi1_, phi2_, phi3_}; }

  /// Subformulas measured by epsilon.
  const std::vector<Formula>& epsilon_sources() const { return sources_; }
  const Formula& epsilon() const { return epsilon_; }

  /// Subformulas of phi0..phi3 other than atoms of Q and P.
  std::vector<Formula> rounding_tracked() const;

  /// Universal closure over x2..xm of
  /// phi0 & phi1 & phi2 & phi3 & chain -> P(xm) |+| 10.eps.
  /// Throws std::invalid_argument unless 3 < m <= m_max.
  ClosedFormula psi(int m) const;
  /// psi(m) with xi := #elements[i-2] for i = 2..m.
  Formula psi_instance(int m, const std::vector<int>& elements) const;
  /// x_i := #i.
  Formula canonical_instance(int m) const;

  /// 0 <- 1 <- x2 <- ... <- xm chain of Succ atoms as a weak conjunction.
  Formula chain(int m) const;

 private:
  ReductionConfig cfg_;
  Signature sig_;
  Formula phi0_, phi1_, phi2_, phi3_;
  std::vector<Formula> sources_;
  Formula epsilon_;
};

/// Free variable x_i of psi_m.
std::string psi_variable(int i);

/// The standard model cut to {0..k-1}: crisp arithmetic, Succ(i,i+1) for
/// i < k-1, Q(m,n) = min(1, m/(n+1)), P(m) = 1 for m in A and 1 - 1/f(m)
/// otherwise.
FuzzyModel build_truncation(const ReductionConfig& cfg, int domain_size);
FuzzyModel build_truncation(const ReductionConfig& cfg);

/// Q and P tables as text, rows m < limit.
std::string format_qp_tables(const FuzzyModel& m, int limit);

struct FactComponent {
  std::string name;
  TruthValue value;
  /// Quantifier trace to an offending instance when value < 1.
  std::optional<EvalReport> trace;
};

struct FactReport {
  std::vector<FactComponent> components;
  TruthValue epsilon;
  /// Q(m+1,n) = min(1, Q(m,n) + Q(1,n)) for all m+1, n < k.
  bool q_recurrence = true;
  std::optional<std::pair<int, int>> q_recurrence_failure;

  bool ok() const;
};

/// Evaluates phi0..phi3 and epsilon on the truncation.
FactReport verify_fact(const Reduction& red, const FuzzyModel& truncation);
FactReport verify_fact(const Reduction& red);

struct MainClaimResult {
  int m = 0;
  bool in_A = false;
  /// f(m) for m outside A, else 0.
  int f_m = 0;
  TruthValue value;
  /// "NOT-VALID" when the instance is below 1, "INSTANCE-ONE" otherwise.
  std::string verdict;
};

/// Canonical psi_m instance on the truncation, for any 3 < m <= m_max.
MainClaimResult evaluate_main_claim(const Reduction& red, const FuzzyModel& truncation, int m);
/// As above but throws std::invalid_argument for m in A.
MainClaimResult verify_mainclaim_part1(const Reduction& red, const FuzzyModel& truncation, int m);

}  // namespace luk
