#include <algorithm>
#include <map>
#include <random>

#include "doctest.h"
#include "ellcox/coxring.hpp"
#include "ellcox/errors.hpp"

using namespace ellcox;

namespace {

const IntVector kW = make_vector({4, -3, -2, -1});

// Small integer functional, positive on every column, found by exhaustive search.
IntVector brute_functional(const IntMatrix& q) {
  const auto cols = q.columns();
  for (long a = 0; a <= 16; ++a)
    for (long b = -4; b <= 4; ++b)
      for (long c = -4; c <= 4; ++c)
        for (long d = -4; d <= 4; ++d) {
          IntVector phi = make_vector({a, b, c, d});
          if (std::all_of(cols.begin(), cols.end(), [&](const IntVector& v) { return dot(phi, v) >= 1; })) return phi;
        }
  return {};
}

// Forward generating-function expansion over the columns, truncated at phi . w.
Int dp_count(const IntMatrix& q, const IntVector& w) {
  IntVector phi = brute_functional(q);
  REQUIRE_FALSE(phi.empty());
  const Int bound = dot(phi, w);
  if (bound < 0) return 0;
  std::map<IntVector, Int> states{{IntVector(q.rows(), Int(0)), Int(1)}};
  for (const auto& col : q.columns()) {
    std::map<IntVector, Int> next;
    for (const auto& [deg, count] : states) {
      IntVector cur = deg;
      while (dot(phi, cur) <= bound) {
        next[cur] += count;
        for (std::size_t i = 0; i < cur.size(); ++i) cur[i] += col[i];
      }
    }
    states = std::move(next);
  }
  auto it = states.find(w);
  return it == states.end() ? Int(0) : it->second;
}

std::vector<IntVector> sample_degrees(const IntMatrix& q, std::mt19937_64& rng, int count) {
  const auto cols = q.columns();
  std::uniform_int_distribution<std::size_t> pick(0, cols.size() - 1);
  std::uniform_int_distribution<int> len(0, 5), small(-4, 3), first(0, 4);
  std::vector<IntVector> out;
  while (static_cast<int>(out.size()) < count) {
    IntVector w(4, Int(0));
    if (out.size() % 3 == 2) {
      w = make_vector({first(rng), small(rng), small(rng), small(rng)});
    } else {
      int k = len(rng);
      for (int i = 0; i < k; ++i) {
        const auto& c = cols[pick(rng)];
        for (std::size_t j = 0; j < 4; ++j) w[j] += c[j];
      }
    }
    if (w[0] <= 4) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("grading matrices") {
  IntMatrix xs = grading_matrix(VarietyType::XS, 3);
  CHECK(xs.cols() == 8);
  CHECK(xs.column(3) == make_vector({1, -3, 0, 0}));
  CHECK(grading_matrix(VarietyType::X3, 3).cols() == 9);
  CHECK(grading_matrix(VarietyType::X3, 5).cols() == 11);
  IntMatrix sss = grading_matrix(VarietyType::XSSS, 3);
  auto cols = sss.columns();
  for (auto c : {make_vector({1, -3, 0, 0}), make_vector({1, 0, -3, 0}), make_vector({1, 0, 0, -3})})
    CHECK(std::find(cols.begin(), cols.end(), c) != cols.end());
  CHECK(sss.column(8) == make_vector({0, 0, 0, 1}));
  CHECK_THROWS_AS(grading_matrix(VarietyType::X12, 3), UnsupportedType);
  CHECK(printed_beta(VarietyType::X3, 3).exponents[2] == std::array<unsigned, 3>{1, 1, 1});
}

TEST_CASE("beta exponents from the grading") {
  for (int n : {3, 4, 5}) {
    CHECK(solve_beta_exponents(grading_matrix(VarietyType::X3, n)) == printed_beta(VarietyType::X3, n));
    CHECK(solve_beta_exponents(grading_matrix(VarietyType::XS, n)) == printed_beta(VarietyType::XS, n));
    BetaMap s2 = solve_beta_exponents(grading_matrix(VarietyType::XS2, n));
    BetaMap p2 = printed_beta(VarietyType::XS2, n);
    for (int k = 0; k < n - 1; ++k) CHECK(s2.exponents[k] == std::array<unsigned, 3>{1, 2, 1});
    for (std::size_t k = n - 1; k < s2.exponents.size(); ++k) CHECK(s2.exponents[k] == p2.exponents[k]);
    BetaMap s4 = solve_beta_exponents(grading_matrix(VarietyType::XSSS, n));
    for (int k = 0; k < n; ++k) CHECK(s4.exponents[k] == std::array<unsigned, 3>{1, 1, 1});
  }
  // every beta image has degree (d, 0, 0, 0)
  for (VarietyType t : kExtremalTypes) {
    IntMatrix q = grading_matrix(t, 4);
    BetaMap b = solve_beta_exponents(q);
    const std::size_t m = q.cols() - 3;
    for (std::size_t k = 0; k < m; ++k) {
      IntVector d = q.column(k);
      for (int j = 0; j < 3; ++j)
        for (std::size_t i = 0; i < 4; ++i) d[i] += q(i, m + j) * b.exponents[k][j];
      CHECK(d[1] == 0);
      CHECK(d[2] == 0);
      CHECK(d[3] == 0);
    }
  }
  IntMatrix bad = IntMatrix::from_columns({make_vector({1, 1, 0, 0}), make_vector({0, 1, -1, 0}), make_vector({0, 0, 1, -1}),
                                           make_vector({0, 0, 0, 1})},
                                          4);
  CHECK_THROWS_AS(solve_beta_exponents(bad), NoCompatibleExponents);
}

TEST_CASE("presentations") {
  auto xs = build_presentation_with_retry(VarietyType::XS, 3, 7);
  REQUIRE(xs.generators.size() == 1);
  CHECK(xs.generators[0].degree == make_vector({3, -3, 0, 0}));
  CHECK(xs.generators[0].extracted == std::array<unsigned, 3>{3, 3, 3});

  auto x3 = build_presentation_with_retry(VarietyType::X3, 3, 7);
  REQUIRE(x3.generators.size() == 2);
  CHECK(x3.generators[0].degree == make_vector({2, -2, -1, 0}));
  CHECK(x3.generators[1].degree == make_vector({3, -3, 0, 0}));

  auto s2 = build_presentation_with_retry(VarietyType::XS2, 3, 7);
  CHECK(s2.generators[0].extracted == std::array<unsigned, 3>{2, 2, 0});
  CHECK(s2.generators[1].degree == make_vector({3, -3, -3, -3}));
  CHECK_FALSE(try_printed_beta(s2).homogeneous);
  CHECK(try_printed_beta(xs).homogeneous);

  auto sss = build_presentation_with_retry(VarietyType::XSSS, 3, 7);
  CHECK(sss.generators[0].extracted == std::array<unsigned, 3>{0, 0, 0});
  CHECK(sss.generators[0].degree == make_vector({1, 0, 0, 0}));

  for (VarietyType t : kExtremalTypes)
    for (int n : {3, 4, 5})
      for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto p = build_presentation_with_retry(t, n, seed);
        for (const auto& g : p.generators) {
          CHECK(homogeneous_degree(g.poly, p.q) == g.degree);
          CHECK(g.extracted == g.printed);
        }
      }
  CHECK_THROWS_AS(build_presentation(VarietyType::X111, 3, 0), UnsupportedType);
}

TEST_CASE("degenerate draws are rejected and retried") {
  bool saw_degenerate = false;
  for (std::uint64_t seed = 0; seed < 200 && !saw_degenerate; ++seed) {
    auto a = random_admissible(VarietyType::XSSS, 3, seed);
    if (genericity_violations(a).empty()) continue;
    saw_degenerate = true;
    CHECK_THROWS_AS(build_presentation(a), DegenerateCoefficients);
    auto p = build_presentation_with_retry(VarietyType::XSSS, 3, seed);
    CHECK(std::any_of(p.repair_notes.begin(), p.repair_notes.end(),
                      [](const std::string& s) { return s.find("skipped") != std::string::npos; }));
  }
  CHECK(saw_degenerate);
}

TEST_CASE("hilbert function basics") {
  for (VarietyType t : kExtremalTypes) CHECK(hilbert_dim(grading_matrix(t, 3), IntVector(4, Int(0))) == 1);
  CHECK(hilbert_dim(grading_matrix(VarietyType::XS, 3), make_vector({1, 0, 0, 0})) == 5);
  CHECK(hilbert_dim(grading_matrix(VarietyType::XS, 3), make_vector({-1, 0, 0, 0})) == 0);
  IntMatrix line = IntMatrix::from_columns({make_vector({1}), make_vector({-1})}, 1);
  CHECK_THROWS_AS(hilbert_dim(line, make_vector({0})), NonPointedGrading);
  // P^2: binomial(d + 2, 2)
  IntMatrix p2 = IntMatrix::from_columns({make_vector({1}), make_vector({1}), make_vector({1})}, 1);
  for (long d = 0; d < 8; ++d) CHECK(hilbert_dim(p2, make_vector({d})) == (d + 1) * (d + 2) / 2);
}

TEST_CASE("hilbert function against the expansion oracle") {
  std::mt19937_64 rng(31);
  for (VarietyType t : kExtremalTypes) {
    IntMatrix q = grading_matrix(t, 3);
    int nonzero = 0;
    for (const auto& w : sample_degrees(q, rng, 24)) {
      Int got = hilbert_dim(q, w);
      REQUIRE(got == dp_count(q, w));
      if (got != 0) ++nonzero;
    }
    CHECK(nonzero >= 10);
    CHECK(hilbert_dim(q, kW) == dp_count(q, kW));
  }
}

TEST_CASE("hilbert function ignores column order") {
  std::mt19937_64 rng(5);
  for (VarietyType t : kExtremalTypes) {
    IntMatrix q = grading_matrix(t, 3);
    auto cols = q.columns();
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(cols.begin(), cols.end(), rng);
      IntMatrix shuffled = IntMatrix::from_columns(cols, 4);
      for (const auto& w : {kW, make_vector({2, -1, 0, 0}), make_vector({3, -2, -1, -1})})
        CHECK(hilbert_dim(shuffled, w) == hilbert_dim(q, w));
    }
  }
}

TEST_CASE("Koszul sums") {
  const std::map<VarietyType, long> ambient = {
      {VarietyType::X3, 66}, {VarietyType::XS, 53}, {VarietyType::XS2, 64}, {VarietyType::XSSS, 75}};
  for (VarietyType t : kExtremalTypes) {
    auto p = build_presentation_with_retry(t, 3, 0);
    KoszulResult k = koszul_quotient_dim(p, kW);
    CHECK(k.ambient == ambient.at(t));
    CHECK(k.terms.size() == (std::size_t{1} << p.generators.size()));
    // alternating sum recomputed with the oracle
    Int expect = 0;
    for (const auto& term : k.terms) expect += term.sign * dp_count(p.q, term.degree);
    CHECK(k.quotient == expect);
    for (std::uint64_t seed = 1; seed <= 10; ++seed)
      CHECK(koszul_quotient_dim(build_presentation_with_retry(t, 3, seed * 101), kW).quotient == k.quotient);
  }
}

TEST_CASE("moving cone of degrees") {
  Cone zero = moving_cone_of_degrees({make_vector({1, 0}), make_vector({0, 1})});
  CHECK(zero.dim() == 0);
  for (VarietyType t : kExtremalTypes) {
    auto cols = grading_matrix(t, 3).columns();
    Cone mov = moving_cone_of_degrees(cols);
    CHECK(mov.dim() == 4);
    CHECK(mov.contains(kW));
    // list semantics: a further copy of an already repeated degree changes nothing
    auto more = cols;
    more.push_back(cols.front());
    CHECK(moving_cone_of_degrees(more) == mov);
  }
  CHECK_THROWS_AS(moving_cone_of_degrees({make_vector({1, 0})}), Error);
}

TEST_CASE("chamber families around W") {
  for (int n : {3, 4}) {
    for (VarietyType t : kExtremalTypes) {
      auto p = build_presentation_with_retry(t, n, 3);
      GitChamberReport r = git_chamber_report(p, kW);
      CHECK(r.two_cones_containing_w.empty());
      CHECK(r.families_match);
      CHECK(r.all_certified);
      CHECK(r.full_dimensional);
    }
    auto xs = git_chamber_report(build_presentation_with_retry(VarietyType::XS, n, 1), kW);
    CHECK(xs.found.size() == static_cast<std::size_t>(n - 1));
    for (const auto& f : xs.found) {
      CHECK(f.indices[1] == static_cast<std::size_t>(n));
      CHECK(f.indices[2] == static_cast<std::size_t>(n + 3));
      Monomial tn3(n + 5, 0);
      tn3[n - 1] = 3;
      CHECK(f.certificate.terms().begin()->first == tn3);
    }
    CHECK(xs.monomial_notes.empty());
    auto sss = git_chamber_report(build_presentation_with_retry(VarietyType::XSSS, n, 1), kW);
    CHECK(sss.found.empty());
    auto x3 = git_chamber_report(build_presentation_with_retry(VarietyType::X3, n, 1), kW);
    CHECK(x3.found.size() == static_cast<std::size_t>(2 * (n - 1) + 1));
    CHECK(x3.monomial_notes.size() == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("restriction to T1 = 0") {
  for (VarietyType t : kExtremalTypes) {
    for (int n : {4, 5}) {
      auto p = build_presentation_with_retry(t, n, 2);
      auto r = restrict_to_hyperplane(p);
      CHECK(r.n == n - 1);
      CHECK(r.q.cols() == p.q.cols() - 1);
      CHECK(r.generator_degrees() == p.generator_degrees());
      CHECK(r.generators.size() == p.generators.size());
    }
    auto p5 = build_presentation_with_retry(t, 5, 4);
    auto twice = restrict_to_hyperplane(restrict_to_hyperplane(p5));
    std::set<std::size_t> keep;
    for (std::size_t i = 2; i < p5.ring->size(); ++i) keep.insert(i);
    for (std::size_t g = 0; g < p5.generators.size(); ++g) {
      MultiPoly direct = restrict_variables(p5.generators[g].poly, keep);
      direct = remove_variable(remove_variable(direct, 0, VariableContext::cox(p5.ring->size() - 4)), 0, twice.ring);
      CHECK(direct == twice.generators[g].poly);
    }
  }
  CHECK_THROWS_AS(restrict_to_hyperplane(build_presentation_with_retry(VarietyType::XS, 3, 0)), Error);
}
