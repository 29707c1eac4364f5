#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "luk/formula.hpp"
#include "luk/truth_value.hpp"

namespace luk {

class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense table of a k-ary fuzzy relation over a domain of size D.
class RelationTable {
 public:
  RelationTable() = default;
  RelationTable(int arity, int domain_size, TruthValue fill);

  int arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }

  const TruthValue& at(std::span<const int> tuple) const { return values_[index(tuple)]; }
  void set(std::span<const int> tuple, TruthValue v) { values_[index(tuple)] = std::move(v); }

  /// Row-major flat access; tuple (t1..tk) sits at sum t_i D^(k-i).
  const TruthValue& flat(std::size_t i) const { return values_[i]; }
  void set_flat(std::size_t i, TruthValue v) { values_[i] = std::move(v); }
  std::vector<int> tuple_of(std::size_t i) const;

  friend bool operator==(const RelationTable&, const RelationTable&) = default;

 private:
  std::size_t index(std::span<const int> tuple) const;

  int arity_ = 0;
  int domain_ = 1;
  std::vector<TruthValue> values_;
};

/// A finite fuzzy structure. Elements are 0..D-1 and can be named in
/// formulas as `#i`; constants map to elements crisply.
class FuzzyModel {
 public:
  explicit FuzzyModel(int domain_size = 1);

  int domain_size() const { return domain_; }

  void set_constant(const std::string& name, int element);
  int constant(const std::string& name) const;
  const std::map<std::string, int>& constants() const { return constants_; }

  /// Adds a relation with every entry set to `fill`.
  RelationTable& add_relation(const std::string& name, int arity, TruthValue fill = TruthValue::zero());
  bool has_relation(const std::string& name) const { return relations_.count(name) > 0; }
  const RelationTable& relation(const std::string& name) const;
  RelationTable& relation(const std::string& name);
  const std::map<std::string, RelationTable>& relations() const { return relations_; }

  TruthValue value(const std::string& name, std::initializer_list<int> tuple) const;
  void set(const std::string& name, std::initializer_list<int> tuple, TruthValue v);

  Signature signature() const;

  /// True iff every relation value is 0 or 1.
  bool is_crisp() const;

  friend bool operator==(const FuzzyModel&, const FuzzyModel&) = default;

 private:
  int domain_;
  std::map<std::string, int> constants_;
  std::map<std::string, RelationTable> relations_;
};

/// Every relation of `sig` constantly 1/2, constants at element 0.
FuzzyModel all_half_model(const Signature& sig, int domain_size);

/// Line-oriented text format:
///
///     domain N
///     const name = i
///     rel Name/k
///     i1 ... ik = p/q
///     default = p/q
///
/// `#` starts a comment. Every relation table must be total, either listed
/// entry by entry or completed by `default`. Throws ModelError.
FuzzyModel read_model(std::istream& in);
FuzzyModel read_model_file(const std::string& path);
void write_model(std::ostream& out, const FuzzyModel& m);

}  // namespace luk
