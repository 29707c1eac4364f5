#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

#include "luk/reduction.hpp"

namespace luk {

bool ReductionConfig::R(int m, int n) const {
  if (table == Table::EvenOrLt) return m % 2 == 0 || n < m;
  return pairs.count({m, n}) > 0;
}

bool ReductionConfig::in_A(int m) const {
  if (a_override) return a_override->count(m) > 0;
  if (table == Table::EvenOrLt) return m % 2 == 0;
  return R(m, N);
}

int ReductionConfig::f(int m) const {
  if (in_A(m)) throw ConfigError("f(" + std::to_string(m) + ") is undefined: m is in A");
  if (table == Table::EvenOrLt) return m;
  int top = 0;
  for (int n = 0; n <= N; ++n) {
    if (R(m, n)) top = n + 1;
  }
  return std::max(top, 1);
}

void ReductionConfig::validate() const {
  if (m_max <= 3) throw ConfigError("m_max must exceed 3");
  if (N < m_max) throw ConfigError("table bound N = " + std::to_string(N) + " is below m_max");
  if (k <= N) throw ConfigError("truncation size k must exceed N");
  if (table == Table::Explicit) {
    for (const auto& [m, n] : pairs) {
      if (m < 0 || n < 0 || m > N || n > N) {
        throw ConfigError("pair (" + std::to_string(m) + "," + std::to_string(n) + ") outside [0,N]");
      }
    }
  }
  for (int m = 0; m <= N; ++m) {
    if (in_A(m)) continue;
    const int fm = f(m);
    if (fm < 1) throw ConfigError("f(" + std::to_string(m) + ") must be positive");
    for (int n = fm; n <= N; ++n) {
      if (R(m, n)) {
        throw ConfigError("f(" + std::to_string(m) + ") = " + std::to_string(fm) + " but (" + std::to_string(m) +
                          "," + std::to_string(n) + ") is in R");
      }
    }
  }
}

ReductionConfig parse_config(std::istream& in) {
  ReductionConfig cfg;
  std::string line;
  int line_no = 0;
  bool explicit_seen = false;
  auto fail = [&](const std::string& msg) -> void {
    throw ConfigError("line " + std::to_string(line_no) + ": " + msg);
  };
  auto number = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size()) return v;
    } catch (const std::logic_error&) {
    }
    fail("bad integer '" + s + "'");
    return 0;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<std::string> w;
    for (std::string s; ss >> s;) w.push_back(s);
    if (w.empty()) continue;
    const std::string& key = w[0];
    if (key == "N" || key == "k" || key == "m_max") {
      if (w.size() != 2) fail("expected '" + key + " INT'");
      const int v = number(w[1]);
      (key == "N" ? cfg.N : key == "k" ? cfg.k : cfg.m_max) = v;
    } else if (key == "R") {
      if (w.size() != 2) fail("expected 'R builtin:even-or-lt' or 'R explicit'");
      if (w[1] == "builtin:even-or-lt") {
        cfg.table = ReductionConfig::Table::EvenOrLt;
      } else if (w[1] == "explicit") {
        cfg.table = ReductionConfig::Table::Explicit;
        explicit_seen = true;
      } else {
        fail("unknown table '" + w[1] + "'");
      }
    } else if (key == "pair") {
      if (w.size() != 3) fail("expected 'pair m n'");
      cfg.pairs.insert({number(w[1]), number(w[2])});
    } else if (key == "A") {
      std::set<int> a;
      for (std::size_t i = 1; i < w.size(); ++i) a.insert(number(w[i]));
      cfg.a_override = std::move(a);
    } else {
      fail("unknown directive '" + key + "'");
    }
  }
  if (!cfg.pairs.empty() && !explicit_seen) throw ConfigError("'pair' lines need 'R explicit'");
  cfg.validate();
  return cfg;
}

ReductionConfig load_config(const std::string& path) {
  if (path == "default") {
    ReductionConfig cfg;
    cfg.validate();
    return cfg;
  }
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace luk
