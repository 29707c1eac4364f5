#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "luk/rational.hpp"

namespace luk {

/// coeffs . x <= bound
template <class T>
struct LinearConstraint {
  std::vector<T> coeffs;
  T bound;
};

template <class T>
struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  T value{};
  std::vector<T> x;

  bool optimal() const { return status == Status::Optimal; }
};

/// Minimizes c.x subject to A x <= b and x >= 0 by the two-phase tableau
/// simplex method with Bland's rule. Exact over any ordered field T.
template <class T>
LpResult<T> simplex(const std::vector<T>& c, const std::vector<LinearConstraint<T>>& rows);

/// Linear inequalities over variables confined to the unit box.
template <class T>
class ConstraintSystem {
 public:
  explicit ConstraintSystem(std::size_t variables) : n_(variables) {}

  std::size_t variables() const { return n_; }
  const std::vector<LinearConstraint<T>>& constraints() const { return rows_; }

  void add(std::vector<T> coeffs, T bound);

  /// Minimum of objective . x + constant over the region.
  LpResult<T> minimize(const std::vector<T>& objective, const T& constant = T(0)) const;

  /// A point satisfying every constraint and 0 <= x_i <= 1 strictly, or
  /// nothing if the region has empty interior.
  std::optional<std::vector<T>> interior_point() const;

  /// The lexicographically least point of the region (nothing if empty).
  std::optional<std::vector<T>> lexmin() const;

 private:
  std::vector<LinearConstraint<T>> box_rows() const;

  std::size_t n_;
  std::vector<LinearConstraint<T>> rows_;
};

// ------------------------------------------------------------------------

namespace detail {

template <class T>
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : m_(rows), n_(cols), a_(rows, std::vector<T>(cols + 1, T(0))) {}

  T& at(std::size_t i, std::size_t j) { return a_[i][j]; }
  T& rhs(std::size_t i) { return a_[i][n_]; }

  void pivot(std::size_t r, std::size_t c, std::vector<T>& obj) {
    const T p = a_[r][c];
    for (auto& v : a_[r]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == T(0)) continue;
      const T factor = a_[i][c];
      for (std::size_t j = 0; j <= n_; ++j) {
        if (a_[r][j] != T(0)) a_[i][j] -= factor * a_[r][j];
      }
    }
    if (obj[c] != T(0)) {
      const T factor = obj[c];
      for (std::size_t j = 0; j <= n_; ++j) {
        if (a_[r][j] != T(0)) obj[j] -= factor * a_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Returns false if unbounded. `allowed` masks entering columns.
  bool optimize(std::vector<T>& obj, const std::vector<bool>& allowed) {
    for (;;) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (allowed[j] && obj[j] < T(0)) {
          enter = j;
          break;
        }
      }
      if (enter == n_) return true;
      std::size_t leave = m_;
      T best{};
      for (std::size_t i = 0; i < m_; ++i) {
        if (!(T(0) < a_[i][enter])) continue;
        const T ratio = a_[i][n_] / a_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter, obj);
    }
  }

  void remove_row(std::size_t r) {
    a_.erase(a_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --m_;
  }

  std::size_t rows() const { return m_; }
  std::size_t cols() const { return n_; }
  std::vector<std::size_t> basis_;

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<T>> a_;
};

}  // namespace detail

template <class T>
LpResult<T> simplex(const std::vector<T>& c, const std::vector<LinearConstraint<T>>& rows) {
  const std::size_t n = c.size();
  const std::size_t m = rows.size();
  std::size_t artificial = 0;
  for (const auto& r : rows) {
    if (r.coeffs.size() != n) throw std::invalid_argument("simplex: constraint width mismatch");
    if (r.bound < T(0)) ++artificial;
  }
  const std::size_t cols = n + m + artificial;
  detail::Tableau<T> tab(m, cols);
  tab.basis_.assign(m, 0);
  std::size_t next_art = n + m;
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rows[i].bound < T(0);
    for (std::size_t j = 0; j < n; ++j) tab.at(i, j) = flip ? T(-rows[i].coeffs[j]) : rows[i].coeffs[j];
    tab.at(i, n + i) = flip ? T(-1) : T(1);
    tab.rhs(i) = flip ? T(-rows[i].bound) : rows[i].bound;
    if (flip) {
      tab.at(i, next_art) = T(1);
      tab.basis_[i] = next_art++;
    } else {
      tab.basis_[i] = n + i;
    }
  }

  LpResult<T> result;
  std::vector<bool> allowed(cols, true);
  if (artificial > 0) {
    // Phase 1: minimize the sum of artificials.
    std::vector<T> obj(cols + 1, T(0));
    for (std::size_t j = n + m; j < cols; ++j) obj[j] = T(1);
    for (std::size_t i = 0; i < m; ++i) {
      if (tab.basis_[i] < n + m) continue;
      for (std::size_t j = 0; j <= cols; ++j) {
        if (tab.at(i, j) != T(0)) obj[j] -= tab.at(i, j);
      }
    }
    tab.optimize(obj, allowed);
    if (obj[cols] != T(0)) return result;  // infeasible; obj[cols] holds -(sum of artificials)
    for (std::size_t i = 0; i < tab.rows();) {
      if (tab.basis_[i] < n + m) {
        ++i;
        continue;
      }
      std::size_t col = n + m;
      for (std::size_t j = 0; j < n + m; ++j) {
        if (tab.at(i, j) != T(0)) {
          col = j;
          break;
        }
      }
      if (col == n + m) {
        tab.remove_row(i);
      } else {
        tab.pivot(i, col, obj);
        ++i;
      }
    }
    for (std::size_t j = n + m; j < cols; ++j) allowed[j] = false;
  }

  std::vector<T> obj(cols + 1, T(0));
  for (std::size_t j = 0; j < n; ++j) obj[j] = c[j];
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    const std::size_t b = tab.basis_[i];
    if (b >= n || c[b] == T(0)) continue;
    const T factor = c[b];
    for (std::size_t j = 0; j <= cols; ++j) {
      if (tab.at(i, j) != T(0)) obj[j] -= factor * tab.at(i, j);
    }
  }
  if (!tab.optimize(obj, allowed)) {
    result.status = LpResult<T>::Status::Unbounded;
    return result;
  }
  result.status = LpResult<T>::Status::Optimal;
  result.x.assign(n, T(0));
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    if (tab.basis_[i] < n) result.x[tab.basis_[i]] = tab.rhs(i);
  }
  T value(0);
  for (std::size_t j = 0; j < n; ++j) value += c[j] * result.x[j];
  result.value = value;
  return result;
}

template <class T>
void ConstraintSystem<T>::add(std::vector<T> coeffs, T bound) {
  if (coeffs.size() != n_) throw std::invalid_argument("constraint width mismatch");
  rows_.push_back({std::move(coeffs), std::move(bound)});
}

template <class T>
std::vector<LinearConstraint<T>> ConstraintSystem<T>::box_rows() const {
  std::vector<LinearConstraint<T>> rows = rows_;
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<T> e(n_, T(0));
    e[i] = T(1);
    rows.push_back({std::move(e), T(1)});
  }
  return rows;
}

template <class T>
LpResult<T> ConstraintSystem<T>::minimize(const std::vector<T>& objective, const T& constant) const {
  auto r = simplex(objective, box_rows());
  if (r.optimal()) r.value += constant;
  return r;
}

template <class T>
std::optional<std::vector<T>> ConstraintSystem<T>::interior_point() const {
  // Maximize a common slack t in every inequality, including the box.
  const std::size_t w = n_ + 1;
  std::vector<LinearConstraint<T>> rows;
  auto extend = [&](const std::vector<T>& coeffs, const T& bound) {
    std::vector<T> row(coeffs);
    row.push_back(T(1));
    rows.push_back({std::move(row), bound});
  };
  for (const auto& r : rows_) extend(r.coeffs, r.bound);
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<T> e(n_, T(0));
    e[i] = T(1);
    extend(e, T(1));
    e[i] = T(-1);
    extend(e, T(0));
  }
  std::vector<T> cap(w, T(0));
  cap[n_] = T(1);
  rows.push_back({std::move(cap), T(1)});
  std::vector<T> c(w, T(0));
  c[n_] = T(-1);
  auto r = simplex(c, rows);
  if (!r.optimal() || !(T(0) < r.x[n_])) return std::nullopt;
  r.x.pop_back();
  return r.x;
}

template <class T>
std::optional<std::vector<T>> ConstraintSystem<T>::lexmin() const {
  ConstraintSystem<T> sys = *this;
  std::vector<T> point(n_, T(0));
  for (std::size_t i = 0; i < n_; ++i) {
    std::vector<T> e(n_, T(0));
    e[i] = T(1);
    auto r = sys.minimize(e);
    if (!r.optimal()) return std::nullopt;
    point[i] = r.value;
    std::vector<T> neg(n_, T(0));
    neg[i] = T(-1);
    sys.add(neg, T(-r.value));
    sys.add(e, r.value);
  }
  if (n_ == 0 && !sys.minimize({}).optimal()) return std::nullopt;
  return point;
}

extern template class ConstraintSystem<SmallRational>;
extern template class ConstraintSystem<Rational>;

}  // namespace luk
