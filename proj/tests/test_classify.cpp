#include <algorithm>
#include <random>

#include "doctest.h"
#include "ellcox/classify.hpp"
#include "ellcox/errors.hpp"

using namespace ellcox;

namespace {

RatVector ratv(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

RatVector unit(std::size_t dim, std::size_t i) {
  RatVector v(dim, Rat(0));
  v[i] = 1;
  return v;
}

CubicHypersurface cubic(const std::string& text, int n) { return CubicHypersurface(parse_poly(text, VariableContext::projective(n + 2))); }

// Random unimodular-ish integer matrix: product of elementary operations, so it is invertible.
std::vector<RatVector> random_change(std::size_t dim, std::mt19937_64& rng) {
  std::vector<RatVector> a(dim, RatVector(dim, Rat(0)));
  for (std::size_t i = 0; i < dim; ++i) a[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, dim - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int step = 0; step < 3 * static_cast<int>(dim); ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    const int k = coef(rng);
    for (std::size_t c = 0; c < dim; ++c) a[i][c] += a[j][c] * k;
  }
  return a;
}

// f o A, and the preimage of a point under A.
CubicHypersurface transform(const CubicHypersurface& y, const std::vector<RatVector>& a) {
  ContextPtr x = y.f.context();
  std::vector<MultiPoly> images;
  for (const auto& row : a) {
    MultiPoly img(x);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) img = img + MultiPoly::variable(x, j) * row[j];
    images.push_back(img);
  }
  return CubicHypersurface(substitute(y.f, images));
}

RatVector preimage(const std::vector<RatVector>& a, const RatVector& p) {
  auto r = solve(a, p);
  REQUIRE(r.has_value());
  return *r;
}

RatVector image_of(const std::vector<RatVector>& a, const RatVector& p) {
  RatVector out;
  for (const auto& row : a) out.push_back(dot(row, p));
  return out;
}

bool proportional(const RatVector& a, const RatVector& b) { return rref({a, b}, a.size()).size() == 1; }

}  // namespace

TEST_CASE("line intersection on the X_SSS normal form") {
  const int n = 3;
  auto inst = normal_form(VarietyType::XSSS, n, 0);
  auto recs = line_intersection(inst.y, inst.line);
  REQUIRE(recs.size() == 3);
  for (const auto& r : recs) CHECK(r.multiplicity == 1);
  const MultiPoly& a4 = inst.coefficients.form("a4");
  Monomial m1(n + 2, 0), m2(n + 2, 0);
  m1[n] = 1;
  m2[n + 1] = 1;
  // a4 restricted to the line: alpha u + beta v vanishes at (beta : -alpha)
  const Rat alpha = a4.coefficient(m1), beta = a4.coefficient(m2);
  RatVector third(n + 2, Rat(0));
  third[n] = beta;
  third[n + 1] = -alpha;
  std::vector<RatVector> expect{unit(n + 2, n), unit(n + 2, n + 1), third};
  for (const auto& e : expect)
    CHECK(std::any_of(recs.begin(), recs.end(), [&](const auto& r) { return proportional(r.point, e); }));
}

TEST_CASE("Fermat cubic") {
  auto y = cubic("x1^3 + x2^3 + x3^3 + x4^3 + x5^3", 3);
  // this line lies on the cubic
  CHECK_THROWS_AS(line_intersection(y, ProjLine(ratv({1, -1, 0, 0, 0}), ratv({0, 0, 1, -1, 0}))), LineContainedInY);
  ProjLine l(ratv({1, -1, 0, 0, 0}), ratv({0, 0, 1, 0, 0}));
  auto recs = line_intersection(y, l);
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].multiplicity == 3);
  CHECK(recs[0].point == ratv({1, -1, 0, 0, 0}));
  CHECK(is_smooth_at(y, ratv({1, -1, 0, 0, 0})));
  CHECK(is_star_point(y, ratv({1, -1, 0, 0, 0})));
  CHECK(classify(y, l).type == VarietyType::XS);
  CHECK_THROWS_AS(is_star_point(y, ratv({1, 0, 0, 0, 0})), PointNotOnHypersurface);
}

TEST_CASE("errors") {
  auto sing = cubic("x1^3 + x2^3 + x3^3", 3);
  CHECK_FALSE(is_smooth_at(sing, ratv({0, 0, 0, 1, 0})));
  CHECK_THROWS_AS(local_form(sing, ratv({0, 0, 0, 1, 0})), SingularPoint);
  auto irr = cubic("x1^3 - 2*x1*x2^2 + x3^3 + x4^3 + x5^3", 3);
  CHECK_THROWS_AS(line_intersection(irr, ProjLine(unit(5, 0), unit(5, 1))), IrrationalIntersection);
  CHECK_THROWS_AS(ProjLine(ratv({1, 2, 0, 0, 0}), ratv({2, 4, 0, 0, 0})), Error);
  CHECK_THROWS_AS(CubicHypersurface(parse_poly("x1^2", VariableContext::projective(5))), Error);
  CHECK_THROWS_AS(classify(sing, ProjLine(unit(5, 3), unit(5, 0))), SingularPoint);
}

TEST_CASE("local form reconstructs the cubic") {
  std::mt19937_64 rng(11);
  for (VarietyType t : kAllTypes) {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      auto inst = normal_form(t, 3, seed);
      auto change = random_change(5, rng);
      CubicHypersurface y = seed % 2 ? transform(inst.y, change) : inst.y;
      std::vector<RatVector> points;
      for (const auto& r : line_intersection(inst.y, inst.line))
        points.push_back(seed % 2 ? preimage(change, r.point) : r.point);
      for (const auto& p : points) {
        LocalForm lf = local_form(y, p);
        const std::size_t dim = p.size();
        CHECK(lf.columns.back() == p);
        ContextPtr yc = lf.a.context();
        std::vector<MultiPoly> images(dim, MultiPoly(yc));
        for (std::size_t j = 0; j < dim; ++j)
          for (std::size_t i = 0; i < dim; ++i)
            if (lf.columns[j][i] != 0) images[i] = images[i] + MultiPoly::variable(yc, j) * lf.columns[j][i];
        MultiPoly g = substitute(y.f, images);
        MultiPoly rebuilt = MultiPoly::variable(yc, dim - 2) * lf.a + MultiPoly::variable(yc, dim - 1) * lf.b + lf.c;
        CHECK(rebuilt == g);
        CHECK_FALSE(lf.b.involves(dim - 2));
        CHECK_FALSE(lf.b.involves(dim - 1));
        CHECK_FALSE(lf.c.involves(dim - 2));
        CHECK_FALSE(lf.c.involves(dim - 1));
        CHECK(rref(lf.columns, dim).size() == dim);
      }
    }
  }
}

TEST_CASE("classification round trip") {
  for (VarietyType t : kAllTypes) {
    for (int n : {3, 4}) {
      for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto inst = normal_form(t, n, seed);
        Classification c = classify(inst.y, inst.line);
        REQUIRE_MESSAGE(c.type == t, type_name(t) << " n=" << n << " seed=" << seed);
        int total = 0;
        for (const auto& r : c.records) total += r.multiplicity;
        CHECK(total == 3);
      }
    }
  }
}

TEST_CASE("normal forms") {
  auto a = normal_form(VarietyType::XS, 4, 9);
  auto b = normal_form(VarietyType::XS, 4, 9);
  CHECK(a.y.f == b.y.f);
  CHECK(a.line.p == unit(6, 3));
  CHECK(a.line.q == unit(6, 5));
  auto s = normal_form(VarietyType::XSSS, 3, 2);
  CHECK(s.line.p == unit(5, 3));
  // every term of T4*T5*a4 + b4 is divisible by x4*x5 or lives in x1..x3
  for (const auto& [m, c] : s.y.f.terms()) CHECK(((m[3] > 0 && m[4] > 0) || (m[3] == 0 && m[4] == 0)));
  auto x111 = normal_form(VarietyType::X111, 3, 1);
  for (const auto& r : line_intersection(x111.y, x111.line)) CHECK_FALSE(is_star_point(x111.y, r.point));
}

TEST_CASE("star collinearity on X_SSS") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = seed % 2 ? 4 : 3;
    auto inst = normal_form(VarietyType::XSSS, n, seed);
    auto a = random_change(n + 2, rng);
    auto y = transform(inst.y, a);
    std::vector<RatVector> stars;
    for (const auto& r : line_intersection(inst.y, inst.line)) {
      RatVector p = preimage(a, r.point);
      REQUIRE(is_star_point(y, p));
      stars.push_back(p);
    }
    REQUIRE(stars.size() == 3);
    // the line through two star points meets Y in a third star point
    for (std::size_t i = 0; i < 3; ++i) {
      auto recs = line_intersection(y, ProjLine(stars[i], stars[(i + 1) % 3]));
      REQUIRE(recs.size() == 3);
      for (const auto& r : recs) CHECK(is_star_point(y, r.point));
      auto third = std::find_if(recs.begin(), recs.end(), [&](const auto& r) {
        return !proportional(r.point, stars[i]) && !proportional(r.point, stars[(i + 1) % 3]);
      });
      REQUIRE(third != recs.end());
      CHECK(proportional(third->point, stars[(i + 2) % 3]));
    }
    CHECK(classify(y, ProjLine(stars[0], stars[1])).type == VarietyType::XSSS);
  }
}

TEST_CASE("multiplicity patterns of constructed cubics") {
  // g(x1, x2) with prescribed roots on the line x3 = x4 = x5 = 0, plus terms vanishing on it
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> small(-4, 4);
  ContextPtr x = VariableContext::projective(5);
  const std::vector<std::vector<int>> patterns{{1, 1, 1}, {2, 1}, {3}};
  for (int trial = 0; trial < 60; ++trial) {
    const auto& pattern = patterns[trial % 3];
    MultiPoly g = MultiPoly::constant(x, 1);
    std::vector<std::pair<int, int>> used;
    for (int mult : pattern) {
      int r, s;
      do {
        r = small(rng);
        s = small(rng);
      } while ((r == 0 && s == 0) ||
               std::any_of(used.begin(), used.end(), [&](const auto& q) { return q.first * s == q.second * r; }));
      used.push_back({r, s});
      // vanishes at (u : v) = (r : s)
      MultiPoly lin = MultiPoly::variable(x, 0) * Rat(s) - MultiPoly::variable(x, 1) * Rat(r);
      g = g * lin.pow(mult);
    }
    MultiPoly f = g;
    for (const Monomial& m : monomials_of_degree(5, {0, 1, 2, 3, 4}, 3))
      if (m[2] + m[3] + m[4] > 0) f.add_term(m, Rat(small(rng)));
    CubicHypersurface y(f);
    auto a = random_change(5, rng);
    auto yt = transform(y, a);
    ProjLine l(preimage(a, unit(5, 0)), preimage(a, unit(5, 1)));
    auto recs = line_intersection(yt, l);
    std::vector<int> got;
    int total = 0;
    for (const auto& r : recs) {
      got.push_back(r.multiplicity);
      total += r.multiplicity;
      // smoothness is invariant under the change of coordinates
      CHECK(is_smooth_at(yt, r.point) == is_smooth_at(y, image_of(a, r.point)));
    }
    CHECK(total == 3);
    CHECK(got == pattern);
  }
}

TEST_CASE("classifier input") {
  auto inst = normal_form(VarietyType::XS2, 3, 5);
  std::string text = format_classifier_input(3, inst.y, inst.line);
  ClassifierInput in = parse_classifier_input(text);
  CHECK(in.n == 3);
  CHECK(in.y.f == inst.y.f);
  CHECK(in.line.p == inst.line.p);
  CHECK(classify(in.y, in.line).type == VarietyType::XS2);

  ClassifierInput f = parse_classifier_input("# Fermat\nn = 3\ncubic: x1^3+x2^3+x3^3+x4^3+x5^3\nline: 1,-1,0,0,0 ; 0,0,1/2,0,0\n");
  CHECK(f.line.q[2] == Rat(1, 2));
  CHECK_THROWS_AS(parse_classifier_input("cubic: x1^3\nline: 1,0,0,0,0 ; 0,1,0,0,0\n"), ParseError);
  CHECK_THROWS_AS(parse_classifier_input("n = 3\ncubic: x1^3 + y\nline: 1,0,0,0,0 ; 0,1,0,0,0\n"), UnknownVariable);
  CHECK_THROWS_AS(parse_classifier_input("n = 3\ncubic: x1^2\nline: 1,0,0,0,0 ; 0,1,0,0,0\n"), ParseError);
  CHECK_THROWS_AS(parse_classifier_input("n = 3\ncubic: x1^3\nline: 1,0,0,0 ; 0,1,0,0,0\n"), ParseError);
  CHECK_THROWS_AS(parse_classifier_input("n = 3\ncubic: x1^3\nline: 1,0,0,0,0 ; 2,0,0,0,0\n"), ParseError);
  CHECK_THROWS_AS(parse_classifier_input("n = 3\ncubic: x1^3\nline: 1,0,0,0,0 ; 0,a,0,0,0\n"), ParseError);
}
