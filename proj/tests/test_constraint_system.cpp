#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "luk/constraint_system.hpp"
#include "oracles.hpp"

using namespace luk;

namespace {

std::vector<Rational> ints(std::initializer_list<int> xs) {
  std::vector<Rational> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("simplex examples") {
  // min -x - y  s.t. x + 2y <= 4, 3x + y <= 6
  std::vector<LinearConstraint<Rational>> rows{{ints({1, 2}), 4}, {ints({3, 1}), 6}};
  auto r = simplex(ints({-1, -1}), rows);
  REQUIRE(r.optimal());
  CHECK(r.value == Rational(-14, 5));
  CHECK(r.x == std::vector<Rational>{Rational(8, 5), Rational(6, 5)});

  // a >= row needs phase one: x + y >= 1, min x + 2y
  std::vector<LinearConstraint<Rational>> ge{{ints({-1, -1}), -1}};
  auto g = simplex(ints({1, 2}), ge);
  REQUIRE(g.optimal());
  CHECK(g.value == 1);

  std::vector<LinearConstraint<Rational>> infeasible{{ints({1}), 1}, {ints({-1}), -2}};
  CHECK(simplex(ints({1}), infeasible).status == LpResult<Rational>::Status::Infeasible);

  std::vector<LinearConstraint<Rational>> open{{ints({1, -1}), 1}};
  CHECK(simplex(ints({0, -1}), open).status == LpResult<Rational>::Status::Unbounded);

  CHECK_THROWS_AS(simplex(ints({1, 1}), {{ints({1}), 1}}), std::invalid_argument);
}

TEST_CASE("degenerate problems terminate") {
  // Many constraints through the same vertex.
  std::vector<LinearConstraint<Rational>> rows;
  for (int k = 1; k <= 8; ++k) rows.push_back({ints({k, 9 - k, 1}), 0});
  rows.push_back({ints({1, 1, 1}), 1});
  // every row with nonnegative coefficients and bound 0 pins x = y = z = 0
  auto r = simplex(ints({-1, -1, -1}), rows);
  REQUIRE(r.optimal());
  CHECK(r.value == 0);
  rows.resize(8);
  for (auto& row : rows) row.coeffs[2] = -1;
  rows.push_back({ints({0, 0, 1}), 1});
  auto s = simplex(ints({0, 0, -1}), rows);
  REQUIRE(s.optimal());
  CHECK(s.value == -1);
}

TEST_CASE("simplex agrees with vertex enumeration") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> coef(-4, 4), nvar(1, 3), nrow(1, 4);
  int compared = 0;
  for (int t = 0; t < 300; ++t) {
    const int n = nvar(rng), m = nrow(rng);
    std::vector<Rational> c(n);
    for (auto& v : c) v = coef(rng);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<LinearConstraint<Rational>> rows;
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row(n);
      for (auto& v : row) v = coef(rng);
      const Rational bound = coef(rng);
      a.push_back(row);
      b.push_back(bound);
      rows.push_back({row, bound});
    }
    // Box rows keep the oracle's boundedness assumption.
    for (int i = 0; i < n; ++i) {
      std::vector<Rational> e(n, 0);
      e[i] = 1;
      a.push_back(e);
      b.push_back(3);
      rows.push_back({e, 3});
    }
    const auto expect = oracle::vertex_min(c, a, b);
    const auto got = simplex(c, rows);
    if (!expect) {
      CHECK(got.status == LpResult<Rational>::Status::Infeasible);
      continue;
    }
    REQUIRE(got.optimal());
    CHECK(got.value == *expect);
    for (const auto& row : rows) {
      Rational lhs = 0;
      for (int j = 0; j < n; ++j) lhs += row.coeffs[j] * got.x[j];
      CHECK(lhs <= row.bound);
    }
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("constraint system over the unit box") {
  ConstraintSystem<Rational> sys(2);
  sys.add(ints({1, 1}), 1);  // x + y <= 1
  auto r = sys.minimize(ints({-1, -2}), Rational(3));
  REQUIRE(r.optimal());
  CHECK(r.value == 1);
  CHECK_THROWS_AS(sys.add(ints({1}), 0), std::invalid_argument);

  const auto p = sys.interior_point();
  REQUIRE(p);
  CHECK((*p)[0] + (*p)[1] < 1);
  for (const auto& v : *p) CHECK((0 < v && v < 1));

  CHECK(sys.lexmin() == std::optional<std::vector<Rational>>(std::vector<Rational>{0, 0}));
}

TEST_CASE("lower-dimensional and empty regions") {
  ConstraintSystem<Rational> line(2);
  line.add(ints({1, -1}), 0);
  line.add(ints({-1, 1}), 0);  // x = y
  CHECK_FALSE(line.interior_point());
  CHECK(line.lexmin() == std::optional<std::vector<Rational>>(std::vector<Rational>{0, 0}));

  ConstraintSystem<Rational> lifted(2);
  lifted.add(ints({-2, 0}), -1);  // x >= 1/2
  lifted.add(ints({1, -1}), 0);   // y >= x
  CHECK(lifted.lexmin() == std::optional<std::vector<Rational>>(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));

  ConstraintSystem<Rational> empty(1);
  empty.add(ints({-1}), -2);  // x >= 2 contradicts the box
  CHECK_FALSE(empty.interior_point());
  CHECK_FALSE(empty.lexmin());
  CHECK(empty.minimize(ints({1})).status == LpResult<Rational>::Status::Infeasible);
}

TEST_CASE("small rationals give the same answers") {
  ConstraintSystem<SmallRational> sys(2);
  sys.add({SmallRational(2), SmallRational(3)}, SmallRational(2));
  auto r = sys.minimize({SmallRational(-1), SmallRational(-1)});
  REQUIRE(r.optimal());
  CHECK(r.value == SmallRational(-1));
  ConstraintSystem<Rational> big(2);
  big.add(ints({2, 3}), 2);
  CHECK(to_rational(r.value) == big.minimize(ints({-1, -1})).value);
}
