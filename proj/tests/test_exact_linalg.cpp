#include <random>

#include "doctest.h"
#include "ellcox/errors.hpp"
#include "ellcox/exact_linalg.hpp"
#include "oracles.hpp"

using namespace ellcox;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

oracle::Dense dense(const IntMatrix& m) {
  oracle::Dense d(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) d[i] = m.row(i);
  return d;
}

bool unimodular(const IntMatrix& m) {
  Int d = oracle::laplace_det(dense(m));
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("matrix basics") {
  IntMatrix a = IntMatrix::from_rows({make_vector({1, 2}), make_vector({3, 4})});
  CHECK(a.transpose()(0, 1) == 3);
  CHECK(a * make_vector({1, 1}) == make_vector({3, 7}));
  CHECK((a * IntMatrix::identity(2)) == a);
  CHECK(determinant(a) == -2);
  CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
  CHECK_THROWS_AS(a * IntMatrix(3, 3), DimensionMismatch);
  CHECK(rank(IntMatrix::from_rows({make_vector({1, 2}), make_vector({2, 4})})) == 1);
  CHECK(to_string(make_vector({1, -2, 0})) == "(1,-2,0)");
}

TEST_CASE("determinant agrees with cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + trial % 5;
    IntMatrix m = random_matrix(rng, n, n, 4);
    CHECK(determinant(m) == oracle::laplace_det(dense(m)));
  }
}

TEST_CASE("snf examples") {
  auto id = IntMatrix::identity(3);
  auto r = smith_normal_form(id);
  CHECK(r.U == id);
  CHECK(r.D == id);
  CHECK(r.V == id);

  auto d46 = smith_normal_form(IntMatrix::from_rows({make_vector({4, 0}), make_vector({0, 6})}));
  CHECK(d46.D(0, 0) == 2);
  CHECK(d46.D(1, 1) == 12);

  IntMatrix t = IntMatrix::from_rows({make_vector({1, -1, -1, -1}), make_vector({0, 0, 0, 1}),
                                      make_vector({1, -3, 0, 0}), make_vector({0, 0, 1, -1})});
  // independent: |det| by cofactor expansion
  CHECK(abs(oracle::laplace_det(dense(t))) == 2);
  auto s = smith_normal_form(t);
  CHECK(s.D == IntMatrix::from_rows({make_vector({1, 0, 0, 0}), make_vector({0, 1, 0, 0}),
                                     make_vector({0, 0, 1, 0}), make_vector({0, 0, 0, 2})}));
}

TEST_CASE("snf contract on random matrices") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
    IntMatrix a = random_matrix(rng, r, c, trial % 3 == 0 ? 2 : 9);
    auto s = smith_normal_form(a);
    REQUIRE(s.U * a * s.V == s.D);
    REQUIRE(unimodular(s.U));
    REQUIRE(unimodular(s.V));
    REQUIRE(s.D.is_diagonal());
    std::size_t k = std::min(r, c);
    for (std::size_t i = 0; i < k; ++i) {
      REQUIRE(s.D(i, i) >= 0);
      if (i + 1 < k && s.D(i, i) != 0) REQUIRE(s.D(i + 1, i + 1) % s.D(i, i) == 0);
      if (i + 1 < k && s.D(i, i) == 0) REQUIRE(s.D(i + 1, i + 1) == 0);
    }
    // determinantal divisors: d1*...*dj = gcd of j x j minors
    if (r <= 4 && c <= 4) {
      Int prod = 1;
      for (std::size_t j = 1; j <= k; ++j) {
        prod *= s.D(j - 1, j - 1);
        REQUIRE(prod == oracle::minor_gcd(dense(a), j));
      }
    }
    ++checked;
  }
  CHECK(checked >= 1000);
}

TEST_CASE("snf is deterministic") {
  std::mt19937_64 rng(5);
  IntMatrix a = random_matrix(rng, 4, 5, 7);
  auto s1 = smith_normal_form(a);
  auto s2 = smith_normal_form(a);
  CHECK(s1.U == s2.U);
  CHECK(s1.V == s2.V);
}

TEST_CASE("abelian quotient examples") {
  auto z2 = abelian_quotient(4, {make_vector({1, -1, -1, -1}), make_vector({0, 0, 0, 1})});
  CHECK(z2.rank == 2);
  CHECK(z2.torsion.empty());
  CHECK(z2.to_string() == "Z^2");
  CHECK(abelian_quotient(4, {}).rank == 4);
  auto z3 = abelian_quotient(4, {make_vector({1, -1, -1, -1}), make_vector({0, 0, 0, 1}), make_vector({1, -3, 0, 0}),
                                 make_vector({1, 0, -3, 0})});
  CHECK(z3.rank == 0);
  CHECK(z3.torsion == std::vector<Int>{3});
  CHECK(z3.to_string() == "Z/3Z");
  CHECK(abelian_quotient(2, {make_vector({2, 0})}).to_string() == "Z + Z/2Z");
  CHECK(abelian_quotient(1, {make_vector({1})}).to_string() == "0");
  CHECK_THROWS_AS(abelian_quotient(3, {make_vector({1, 2})}), DimensionMismatch);
}

TEST_CASE("abelian quotient invariant under relation operations") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t amb = 2 + trial % 4, nrel = 1 + trial % 4;
    IntMatrix rel = random_matrix(rng, nrel, amb, 5);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < nrel; ++i) rows.push_back(rel.row(i));
    auto base = abelian_quotient(amb, rows);
    CHECK(base.rank + rank(rows, amb) == amb);

    auto ops = rows;
    std::size_t i = trial % nrel, j = (trial + 1) % nrel;
    const int k = coef(rng);
    if (i != j)
      for (std::size_t c = 0; c < amb; ++c) ops[i][c] += k * ops[j][c];
    std::swap(ops.front(), ops.back());
    CHECK(abelian_quotient(amb, ops) == base);

    auto extended = rows;
    IntVector combo(amb, Int(0));
    for (const auto& r : rows) {
      int k = coef(rng);
      for (std::size_t c = 0; c < amb; ++c) combo[c] += k * r[c];
    }
    extended.push_back(combo);
    CHECK(abelian_quotient(amb, extended) == base);
  }
}

TEST_CASE("strict positive functional examples") {
  auto phi = strict_positive_functional({make_vector({1, 0}), make_vector({0, 1})});
  REQUIRE(phi);
  CHECK(dot(*phi, to_rational(make_vector({1, 0}))) > 0);
  CHECK(dot(*phi, to_rational(make_vector({0, 1}))) > 0);
  CHECK_FALSE(strict_positive_functional({make_vector({1, 0}), make_vector({-1, 0})}));
  CHECK_FALSE(strict_positive_functional({make_vector({0, 0})}));
  CHECK_THROWS_AS(strict_positive_functional({IntVector(9, Int(1))}), TooManyVariables);
}

TEST_CASE("strict positive functional against hull oracle") {
  std::mt19937_64 rng(99);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 600; ++trial) {
    std::size_t d = 1 + trial % 3, count = 1 + (trial / 3) % 5;
    IntMatrix m = random_matrix(rng, count, d, 2);
    std::vector<IntVector> vs;
    for (std::size_t i = 0; i < count; ++i) vs.push_back(m.row(i));
    auto phi = strict_positive_functional(vs);
    bool expect_infeasible = oracle::zero_in_hull(vs);
    REQUIRE(phi.has_value() == !expect_infeasible);
    if (phi) {
      ++feasible;
      for (const auto& v : vs) REQUIRE(dot(*phi, to_rational(v)) > 0);
    } else {
      ++infeasible;
    }
  }
  CHECK(feasible > 50);
  CHECK(infeasible > 50);
}

TEST_CASE("rref and projection") {
  auto basis = canonical_basis({make_vector({2, 4, 0}), make_vector({1, 2, 0}), make_vector({0, 0, 3})}, 3);
  CHECK(basis == std::vector<IntVector>{make_vector({1, 2, 0}), make_vector({0, 0, 1})});
  CHECK(project_orthogonal(make_vector({1, 1}), {make_vector({1, -1})}) == make_vector({1, 1}));
  CHECK(project_orthogonal(make_vector({2, 0}), {make_vector({1, 1})}) == make_vector({1, -1}));
  auto x = solve({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}}, {Rat(1), Rat(1)});
  REQUIRE(x);
  CHECK((*x)[1] == Rat(1, 4));
  CHECK_FALSE(solve({{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, {Rat(1), Rat(1)}));
}
