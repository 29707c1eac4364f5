#include "luk/model.hpp"

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

namespace luk {

RelationTable::RelationTable(int arity, int domain_size, TruthValue fill) : arity_(arity), domain_(domain_size) {
  if (arity < 0) throw ModelError("negative arity");
  std::size_t n = 1;
  for (int i = 0; i < arity; ++i) n *= static_cast<std::size_t>(domain_size);
  values_.assign(n, fill);
}

std::size_t RelationTable::index(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) throw ModelError("tuple length does not match arity");
  std::size_t i = 0;
  for (int t : tuple) {
    if (t < 0 || t >= domain_) throw ModelError("element " + std::to_string(t) + " outside the domain");
    i = i * static_cast<std::size_t>(domain_) + static_cast<std::size_t>(t);
  }
  return i;
}

std::vector<int> RelationTable::tuple_of(std::size_t i) const {
  std::vector<int> t(static_cast<std::size_t>(arity_));
  for (int j = arity_ - 1; j >= 0; --j) {
    t[static_cast<std::size_t>(j)] = static_cast<int>(i % static_cast<std::size_t>(domain_));
    i /= static_cast<std::size_t>(domain_);
  }
  return t;
}

FuzzyModel::FuzzyModel(int domain_size) : domain_(domain_size) {
  if (domain_size < 1) throw ModelError("domain must be nonempty");
}

void FuzzyModel::set_constant(const std::string& name, int element) {
  if (element < 0 || element >= domain_) throw ModelError("constant '" + name + "' outside the domain");
  if (relations_.count(name)) throw ModelError("'" + name + "' is already a relation");
  constants_[name] = element;
}

int FuzzyModel::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end()) throw ModelError("model has no constant '" + name + "'");
  return it->second;
}

RelationTable& FuzzyModel::add_relation(const std::string& name, int arity, TruthValue fill) {
  if (constants_.count(name)) throw ModelError("'" + name + "' is already a constant");
  auto [it, fresh] = relations_.try_emplace(name, arity, domain_, fill);
  if (!fresh) throw ModelError("relation '" + name + "' declared twice");
  return it->second;
}

const RelationTable& FuzzyModel::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw ModelError("model has no relation '" + name + "'");
  return it->second;
}

RelationTable& FuzzyModel::relation(const std::string& name) {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw ModelError("model has no relation '" + name + "'");
  return it->second;
}

TruthValue FuzzyModel::value(const std::string& name, std::initializer_list<int> tuple) const {
  return relation(name).at(std::span<const int>(tuple.begin(), tuple.size()));
}

void FuzzyModel::set(const std::string& name, std::initializer_list<int> tuple, TruthValue v) {
  relation(name).set(std::span<const int>(tuple.begin(), tuple.size()), std::move(v));
}

Signature FuzzyModel::signature() const {
  Signature sig;
  for (const auto& [name, table] : relations_) sig.add_relation(name, table.arity());
  for (const auto& [name, e] : constants_) sig.add_constant(name);
  return sig;
}

bool FuzzyModel::is_crisp() const {
  for (const auto& [name, table] : relations_) {
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!table.flat(i).is_crisp()) return false;
    }
  }
  return true;
}

FuzzyModel all_half_model(const Signature& sig, int domain_size) {
  FuzzyModel m(domain_size);
  for (const auto& [name, k] : sig.relations()) m.add_relation(name, k, TruthValue::half());
  for (const auto& c : sig.constants()) m.set_constant(c, 0);
  return m;
}

// ---------------------------------------------------------------- text format

namespace {

struct Reader {
  std::istream& in;
  int line_no = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ModelError("line " + std::to_string(line_no) + ": " + msg);
  }

  int parse_int(const std::string& s) const {
    try {
      std::size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) fail("bad integer '" + s + "'");
      return v;
    } catch (const std::logic_error&) {
      fail("bad integer '" + s + "'");
    }
  }

  TruthValue parse_value(const std::string& s) const {
    try {
      return TruthValue::parse(s);
    } catch (const std::exception& e) {
      fail(std::string("bad truth value: ") + e.what());
    }
  }
};

struct Pending {
  std::string name;
  std::vector<bool> set;
  bool has_default = false;
};

void finish(const Reader& r, Pending& p) {
  if (p.name.empty()) return;
  for (std::size_t i = 0; i < p.set.size(); ++i) {
    if (!p.set[i] && !p.has_default) r.fail("relation '" + p.name + "' is not total");
  }
  p = Pending{};
}

}  // namespace

FuzzyModel read_model(std::istream& in) {
  Reader r{in};
  std::string line;
  std::optional<FuzzyModel> model;
  Pending pending;

  while (std::getline(in, line)) {
    ++r.line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> words;
    for (std::string w; ss >> w;) words.push_back(w);
    if (words.empty()) continue;

    if (words[0] == "domain") {
      if (model) r.fail("duplicate domain line");
      if (words.size() != 2) r.fail("expected 'domain N'");
      const int n = r.parse_int(words[1]);
      if (n < 1) r.fail("domain must be nonempty");
      model.emplace(n);
      continue;
    }
    if (!model) r.fail("'domain N' must come first");

    if (words[0] == "const") {
      finish(r, pending);
      if (words.size() != 4 || words[2] != "=") r.fail("expected 'const name = i'");
      try {
        model->set_constant(words[1], r.parse_int(words[3]));
      } catch (const ModelError& e) {
        r.fail(e.what());
      }
      continue;
    }
    if (words[0] == "rel") {
      finish(r, pending);
      if (words.size() != 2) r.fail("expected 'rel Name/k'");
      const auto slash = words[1].rfind('/');
      if (slash == std::string::npos || slash == 0) r.fail("expected 'rel Name/k'");
      const std::string name = words[1].substr(0, slash);
      const int k = r.parse_int(words[1].substr(slash + 1));
      if (k < 0) r.fail("negative arity");
      try {
        auto& table = model->add_relation(name, k);
        pending.name = name;
        pending.set.assign(table.size(), false);
      } catch (const ModelError& e) {
        r.fail(e.what());
      }
      continue;
    }
    if (pending.name.empty()) r.fail("entry outside a 'rel' block");
    auto& table = model->relation(pending.name);
    if (words[0] == "default") {
      if (words.size() != 3 || words[1] != "=") r.fail("expected 'default = p/q'");
      const TruthValue v = r.parse_value(words[2]);
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!pending.set[i]) table.set_flat(i, v);
      }
      pending.has_default = true;
      continue;
    }
    if (words.size() != static_cast<std::size_t>(table.arity()) + 2 || words[words.size() - 2] != "=") {
      r.fail("expected " + std::to_string(table.arity()) + " elements, '=' and a value");
    }
    std::vector<int> tuple;
    for (int i = 0; i < table.arity(); ++i) tuple.push_back(r.parse_int(words[static_cast<std::size_t>(i)]));
    try {
      std::size_t flat = 0;
      for (int t : tuple) {
        if (t < 0 || t >= model->domain_size()) r.fail("element " + std::to_string(t) + " outside the domain");
        flat = flat * static_cast<std::size_t>(model->domain_size()) + static_cast<std::size_t>(t);
      }
      if (pending.set[flat]) r.fail("duplicate entry for relation '" + pending.name + "'");
      table.set_flat(flat, r.parse_value(words.back()));
      pending.set[flat] = true;
    } catch (const ModelError& e) {
      r.fail(e.what());
    }
  }
  if (!model) throw ModelError("empty model file");
  finish(r, pending);
  return std::move(*model);
}

FuzzyModel read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path + "'");
  return read_model(in);
}

void write_model(std::ostream& out, const FuzzyModel& m) {
  out << "domain " << m.domain_size() << '\n';
  for (const auto& [name, e] : m.constants()) out << "const " << name << " = " << e << '\n';
  for (const auto& [name, table] : m.relations()) {
    out << "rel " << name << '/' << table.arity() << '\n';
    for (std::size_t i = 0; i < table.size(); ++i) {
      for (int t : table.tuple_of(i)) out << t << ' ';
      out << "= " << table.flat(i).str() << '\n';
    }
  }
}

}  // namespace luk
