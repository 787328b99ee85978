#include "ellcox/checks.hpp"

#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "ellcox/classify.hpp"
#include "ellcox/cones.hpp"
#include "ellcox/coxring.hpp"
#include "ellcox/errors.hpp"
#include "ellcox/polynom.hpp"
#include "ellcox/varieties.hpp"

namespace ellcox {

namespace {

const IntVector kW = make_vector({4, -3, -2, -1});

std::string family_name(VarietyType t) {
  switch (cone_family(t)) {
    case ConeFamily::Triple:
      return "X_3/X_S";
    case ConeFamily::DoubleSimple:
      return "X_12/X_S2";
    case ConeFamily::ThreeSimple:
      return "X_111/X_S11/X_SSS";
  }
  return "";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string vectors_string(const std::vector<IntVector>& vs) {
  std::vector<std::string> parts;
  for (const auto& v : vs) parts.push_back(to_string(v));
  return join(parts);
}

std::string index_set(const std::vector<std::size_t>& idx) {
  std::vector<std::string> parts;
  for (auto i : idx) parts.push_back(std::to_string(i));
  return "{" + join(parts, ",") + "}";
}

std::string triple_string(const std::array<unsigned, 3>& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
}

std::string fraction(long ok, long total) { return std::to_string(ok) + "/" + std::to_string(total); }

bool is_flop_type(VarietyType t) { return t == VarietyType::X3 || t == VarietyType::XS2; }

const std::map<VarietyType, std::string> kKoszulTable = {
    {VarietyType::X3, "66"}, {VarietyType::XS, "53"}, {VarietyType::XS2, "64"}, {VarietyType::XSSS, "75"}};

// Coordinate changes built from elementary operations, hence invertible.
std::vector<RatVector> random_change(std::size_t dim, SeededRng& rng) {
  std::vector<RatVector> a(dim, RatVector(dim, Rat(0)));
  for (std::size_t i = 0; i < dim; ++i) a[i][i] = 1;
  for (std::size_t step = 0; step < 3 * dim; ++step) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dim) - 1));
    if (i == j) continue;
    const long k = rng.uniform(-3, 3);
    for (std::size_t c = 0; c < dim; ++c) a[i][c] += a[j][c] * k;
  }
  return a;
}

// f(A x)
CubicHypersurface pull_back(const CubicHypersurface& y, const std::vector<RatVector>& a) {
  const ContextPtr& x = y.f.context();
  std::vector<MultiPoly> images;
  for (const auto& row : a) {
    MultiPoly img(x);
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) img = img + MultiPoly::variable(x, j) * row[j];
    images.push_back(img);
  }
  return CubicHypersurface(substitute(y.f, images));
}

bool proportional(const RatVector& a, const RatVector& b) { return rref({a, b}, a.size()).size() == 1; }

void k_subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    k_subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// gcd of the k x k minors
Int minor_gcd(const IntMatrix& a, std::size_t k) {
  std::vector<std::vector<std::size_t>> rows, cols;
  std::vector<std::size_t> cur;
  k_subsets(a.rows(), k, 0, cur, rows);
  k_subsets(a.cols(), k, 0, cur, cols);
  Int g = 0;
  for (const auto& r : rows)
    for (const auto& c : cols) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), determinant(m).get_mpz_t());
    }
  return g;
}

// Coefficient of x^w in prod_j 1 / (1 - x^{q_j}), expanded column by column and truncated
// by an integral functional that is positive on every column.
Int expansion_count(const IntMatrix& q, const IntVector& w) {
  auto phi_rat = strict_positive_functional(q.columns());
  if (!phi_rat) throw NonPointedGrading("expansion oracle: grading is not pointed");
  const IntVector phi = primitive_integer(*phi_rat);
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

Report verify_type(VarietyType t, int n, std::uint64_t seed) {
  Report r;
  r.append(check_mordell_weil(t));
  r.append(check_nef_duality(t));
  r.append(check_flops(t));
  r.append(check_w(t));
  if (is_extremal(t)) {
    r.append(check_presentation(t, n, seed));
    if (n == 3) r.append(check_koszul(t, seed));
    r.append(check_git_chamber(t, n, seed));
    if (n > 3) r.append(check_restriction(t, n, seed));
  }
  r.append(check_round_trip(t, n, seed, 50));
  return r;
}

}  // namespace

Report check_mordell_weil(VarietyType t) {
  Report r;
  r.compare("mordell_weil", printed_mordell_weil(t), mordell_weil(t).to_string(), "Mordell-Weil table, " + type_symbol(t));
  return r;
}

Report check_nef_duality(VarietyType t) {
  Report r;
  NefCheck c = check_nef(t);
  r.check("nef_duality", c.equal, c.printed.to_string(), c.computed.to_string(), "nef cone generators, " + family_name(t));
  return r;
}

Report check_flops(VarietyType t) {
  Report r;
  if (!is_flop_type(t)) return r;
  const std::string anchor = "flop of " + type_symbol(t);
  FlopAction f = flop_action(t);
  r.check("flop_involution", f.M * f.M == IntMatrix::identity(4), "M^2 = I", (f.M * f.M).to_string(), anchor);
  r.check("flop_core_involution", f.rank2_core * f.rank2_core == IntMatrix::identity(2), "core^2 = I",
          (f.rank2_core * f.rank2_core).to_string(), anchor);
  Cone image = map(nef_cone(t), f.M);
  std::vector<IntVector> curves;
  for (const auto& c : flopped_chamber_curves(t)) curves.push_back(twist(c));
  Cone expected = dual(Cone::from_generators(4, curves));
  r.check("flopped_nef_chamber", equals(image, expected), expected.to_string(), image.to_string(), anchor);
  return r;
}

Report check_w(VarietyType t) {
  Report r;
  const std::string anchor = "W very ample, " + type_symbol(t);
  WCheck w = check_w_ample(t);
  std::vector<std::string> values;
  for (const auto& v : w.pairings) values.push_back(v.get_str());
  r.check("w_pairings_positive", w.interior, "all > 0", join(values), anchor);
  r.check("w_nef_decomposition", w.decomposition, "F + (H-E1-E2) + (H-E1) + H, summands nef",
          w.decomposition ? "F + (H-E1-E2) + (H-E1) + H, summands nef" : "decomposition fails", anchor);
  if (is_extremal(t)) {
    Cone mov = moving_cone_of_degrees(grading_matrix(t, 3).columns());
    r.check("w_in_moving_cone_of_degrees", mov.contains(kW), "contained", mov.contains(kW) ? "contained" : "not contained",
            "W in Mov(R_n), " + type_symbol(t));
  }
  return r;
}

Report check_presentation(VarietyType t, int n, std::uint64_t seed) {
  Report r;
  const std::string anchor = "Cox ring grading, " + type_symbol(t);
  IntMatrix q = grading_matrix(t, n);
  BetaMap printed = printed_beta(t, n);
  BetaMap solved;
  try {
    solved = solve_beta_exponents(q);
  } catch (const NoCompatibleExponents& e) {
    r.check("beta_solver", false, "unique nonnegative integral exponents", e.what(), anchor);
    return r;
  }
  std::vector<std::string> ps, ss;
  for (std::size_t k = 0; k < printed.exponents.size(); ++k) {
    ps.push_back(triple_string(printed.exponents[k]));
    ss.push_back(triple_string(solved.exponents[k]));
  }
  r.check("beta_solver", true, "unique nonnegative integral exponents", join(ss), anchor);
  if (t == VarietyType::X3 || t == VarietyType::XS) {
    r.compare("beta_tabulated_reproduced", join(ps), join(ss), "beta homomorphism, " + type_symbol(t));
  } else {
    r.info("beta_tabulated", join(ps), "beta homomorphism, " + type_symbol(t));
  }

  CoxPresentation p = build_presentation_with_retry(t, n, seed);
  for (const auto& note : p.repair_notes) r.note(note);
  if (!(printed == solved)) {
    PrintedBetaOutcome o = try_printed_beta(p);
    r.info("beta_tabulated_outcome", o.homogeneous ? "generators homogeneous" : join(o.messages, "; "));
  }
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    const CoxGenerator& g = p.generators[i];
    const std::string tag = "generator_" + std::to_string(i + 1);
    std::string deg;
    bool homogeneous = true;
    try {
      deg = to_string(homogeneous_degree(g.poly, p.q));
    } catch (const InhomogeneousGenerator& e) {
      homogeneous = false;
      deg = e.what();
    }
    r.check(tag + "_homogeneous", homogeneous, "homogeneous", homogeneous ? "homogeneous of degree " + deg : deg, anchor);
    r.compare(tag + "_extracted_s_monomial", triple_string(g.printed), triple_string(g.extracted),
              "generator denominators, " + type_symbol(t));
    if (t == VarietyType::XS) {
      r.compare(tag + "_degree", "(3,-3,0,0)", to_string(g.degree), anchor);
    } else {
      r.info(tag + "_degree", to_string(g.degree));
    }
    r.info(tag, "beta(" + g.label + ") = " + g.poly.to_string());
  }
  return r;
}

Report check_koszul(VarietyType t, std::uint64_t seed, int seed_count) {
  Report r;
  const std::string anchor = "Koszul dimensions at W, " + type_symbol(t);
  CoxPresentation p = build_presentation_with_retry(t, 3, seed);
  KoszulResult k = koszul_quotient_dim(p, kW);
  r.compare("koszul_dim_at_W", kKoszulTable.at(t), k.quotient.get_str(), anchor);
  std::vector<std::string> terms;
  for (const auto& term : k.terms)
    terms.push_back(std::string(term.sign > 0 ? "+" : "-") + term.dim.get_str() + " " + to_string(term.degree));
  r.info("koszul_terms", join(terms, " "));
  r.info("ambient_dim_at_W", k.ambient.get_str());
  if (t == VarietyType::XS2) {
    PrintedBetaOutcome o = try_printed_beta(p);
    r.info("koszul_with_tabulated_beta",
           o.homogeneous ? "generators homogeneous" : "generators not homogeneous, no Koszul value: " + join(o.messages, "; "));
  }
  bool same = true;
  std::vector<std::string> values;
  for (int i = 0; i < seed_count; ++i) {
    Int v = koszul_quotient_dim(build_presentation_with_retry(t, 3, seed + i), kW).quotient;
    values.push_back(v.get_str());
    same = same && v == k.quotient;
  }
  r.check("koszul_seed_independence", same, "identical over " + std::to_string(seed_count) + " seeds", join(values), anchor);
  return r;
}

Report check_git_chamber(VarietyType t, int n, std::uint64_t seed) {
  Report r;
  const std::string anchor = "GIT chamber of W, " + type_symbol(t);
  const std::string tag = "n" + std::to_string(n) + "_";
  CoxPresentation p = build_presentation_with_retry(t, n, seed);
  GitChamberReport g = git_chamber_report(p, kW);
  std::vector<std::string> twos;
  for (const auto& s : g.two_cones_containing_w) twos.push_back(index_set(s));
  r.check(tag + "no_2_cone_contains_W", twos.empty(), "none", twos.empty() ? "none" : join(twos), anchor);
  std::vector<std::string> found, expected;
  for (const auto& f : g.found)
    found.push_back(index_set(f.indices) +
                    (f.certified ? " f" + std::to_string(f.generator) + "^I = " + f.certificate.to_string() : " uncertified"));
  for (const auto& e : g.expected) expected.push_back(index_set(e.indices));
  r.check(tag + "families_match_table", g.families_match, expected.empty() ? "none" : join(expected),
          found.empty() ? "none" : join(found), anchor);
  r.check(tag + "all_certified", g.all_certified, "every family carries a monomial", g.all_certified ? "yes" : "no", anchor);
  r.check(tag + "lambda_W_full_dimensional", g.full_dimensional, "full-dimensional",
          g.full_dimensional ? "full-dimensional" : "not established", anchor);
  for (const auto& m : g.monomial_notes) r.note(m);
  return r;
}

Report check_restriction(VarietyType t, int n, std::uint64_t seed) {
  Report r;
  const std::string anchor = "restriction to T1 = 0, " + type_symbol(t);
  const std::string tag = "restrict_n" + std::to_string(n);
  CoxPresentation p = build_presentation_with_retry(t, n, seed);
  try {
    CoxPresentation s = restrict_to_hyperplane(p);
    r.compare(tag + "_degrees", vectors_string(p.generator_degrees()), vectors_string(s.generator_degrees()), anchor);
    r.compare(tag + "_columns", std::to_string(p.q.cols() - 1), std::to_string(s.q.cols()), anchor);
  } catch (const StructuralMismatch& e) {
    r.check(tag + "_structure", false, "presentation for n - 1", e.what(), anchor);
  }
  return r;
}

Report check_round_trip(VarietyType t, int n, std::uint64_t seed, int count) {
  Report r;
  long ok = 0;
  std::vector<std::string> failures;
  for (int i = 0; i < count; ++i) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    try {
      NormalFormInstance inst = normal_form(t, n, s);
      for (const auto& note : inst.coefficients.notes)
        if (note.find("skipped") != std::string::npos) r.note("round trip " + type_symbol(t) + " n=" + std::to_string(n) + ": " + note);
      Classification c = classify(inst.y, inst.line);
      if (c.type == t) {
        ++ok;
      } else {
        failures.push_back("seed " + std::to_string(s) + " gave " + type_symbol(c.type));
      }
    } catch (const Error& e) {
      failures.push_back("seed " + std::to_string(s) + ": " + e.what());
    }
  }
  std::string actual = fraction(ok, count);
  if (!failures.empty()) actual += " (" + join(failures, "; ") + ")";
  r.check("round_trip_n" + std::to_string(n), ok == count, fraction(count, count), actual,
          "normal form of " + type_symbol(t));
  return r;
}

Report check_star_collinearity(std::uint64_t seed, int count) {
  Report r;
  long ok = 0;
  SeededRng rng(seed ^ 0x5eed5eedULL);
  for (int i = 0; i < count; ++i) {
    const int n = i % 2 ? 4 : 3;
    try {
      NormalFormInstance inst = normal_form(VarietyType::XSSS, n, seed + static_cast<std::uint64_t>(i));
      auto a = random_change(static_cast<std::size_t>(n) + 2, rng);
      CubicHypersurface y = pull_back(inst.y, a);
      std::vector<RatVector> stars;
      for (const auto& rec : line_intersection(inst.y, inst.line)) stars.push_back(*solve(a, rec.point));
      bool good = stars.size() == 3;
      for (std::size_t j = 0; good && j < 3; ++j) {
        good = is_star_point(y, stars[j]);
        auto recs = line_intersection(y, ProjLine(stars[j], stars[(j + 1) % 3]));
        bool third = false;
        for (const auto& rec : recs)
          if (proportional(rec.point, stars[(j + 2) % 3])) third = is_star_point(y, rec.point);
        good = good && third && recs.size() == 3;
      }
      ok += good;
    } catch (const Error&) {
    }
  }
  r.check("star_collinearity", ok == count, fraction(count, count), fraction(ok, count), "three collinear star points, X_SSS");
  return r;
}

Report check_snf_contract(std::uint64_t seed, int count) {
  Report r;
  SeededRng rng(seed ^ 0x534e46ULL);
  long ok = 0;
  std::string first_failure;
  for (int trial = 0; trial < count; ++trial) {
    const auto rows = static_cast<std::size_t>(rng.uniform(1, 5)), cols = static_cast<std::size_t>(rng.uniform(1, 5));
    IntMatrix a(rows, cols);
    const long spread = trial % 4 == 0 ? 2 : 9;
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a(i, j) = rng.uniform(-spread, spread);
    // some rank-deficient inputs
    if (trial % 5 == 0 && rows > 1)
      for (std::size_t j = 0; j < cols; ++j) a(rows - 1, j) = a(0, j) * 2;
    SNFResult s = smith_normal_form(a);
    bool good = s.U * a * s.V == s.D;
    good = good && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
    const std::size_t m = std::min(rows, cols);
    for (std::size_t i = 0; good && i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        if (i != j && s.D(i, j) != 0) good = false;
    Int prod = 1;
    for (std::size_t i = 0; good && i < m; ++i) {
      if (s.D(i, i) < 0) good = false;
      if (i + 1 < m && s.D(i, i) == 0 && s.D(i + 1, i + 1) != 0) good = false;
      if (i + 1 < m && s.D(i, i) != 0 && s.D(i + 1, i + 1) % s.D(i, i) != 0) good = false;
      prod *= s.D(i, i);
      if (good && minor_gcd(a, i + 1) != abs(prod)) good = false;
    }
    if (good) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = a.to_string();
    }
  }
  r.check("smith_normal_form_contract", ok == count, fraction(count, count),
          fraction(ok, count) + (first_failure.empty() ? "" : ", first failure " + first_failure), "Smith normal form");
  return r;
}

Report check_hilbert_oracle(VarietyType t, std::uint64_t seed, int count) {
  Report r;
  IntMatrix q = grading_matrix(t, 3);
  auto cols = q.columns();
  SeededRng rng(seed ^ 0x48696cULL);
  long ok = 0, nonzero = 0;
  std::string first_failure;
  int drawn = 0;
  while (drawn < count) {
    IntVector w(4, Int(0));
    if (drawn % 3 == 2) {
      w = make_vector({rng.uniform(0, 4), rng.uniform(-4, 3), rng.uniform(-4, 3), rng.uniform(-4, 3)});
    } else {
      const long k = rng.uniform(0, 5);
      for (long i = 0; i < k; ++i) {
        const auto& c = cols[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(cols.size()) - 1))];
        for (std::size_t j = 0; j < 4; ++j) w[j] += c[j];
      }
    }
    if (w[0] > 4) continue;
    ++drawn;
    const Int got = hilbert_dim(q, w), want = expansion_count(q, w);
    if (got == want) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = to_string(w) + ": " + got.get_str() + " vs " + want.get_str();
    }
    if (want != 0) ++nonzero;
  }
  r.check("hilbert_vs_expansion", ok == count, fraction(count, count),
          fraction(ok, count) + " (" + std::to_string(nonzero) + " nonzero)" +
              (first_failure.empty() ? "" : ", first failure " + first_failure),
          "multigraded Hilbert function, " + type_symbol(t));
  return r;
}

Report check_cone_biduality() {
  Report r;
  std::vector<std::pair<std::string, Cone>> corpus;
  for (VarietyType t : kAllTypes) {
    NefCheck c = check_nef(t);
    corpus.push_back({"nef " + type_symbol(t), c.printed});
    std::vector<IntVector> curves;
    for (const auto& m : mori_generators(t)) curves.push_back(twist(m));
    corpus.push_back({"mori " + type_symbol(t), Cone::from_generators(4, curves)});
  }
  for (VarietyType t : {VarietyType::X3, VarietyType::XS2}) {
    auto chambers = moving_cone(t);
    corpus.push_back({"flopped chamber " + type_symbol(t), chambers[1]});
    ChamberGeometry g = chamber_geometry(t);
    corpus.push_back({"chamber wall " + type_symbol(t), g.wall});
    corpus.push_back({"chamber hull " + type_symbol(t), g.hull});
  }
  for (VarietyType t : kExtremalTypes) {
    auto cols = grading_matrix(t, 3).columns();
    corpus.push_back({"Mov of degrees " + type_symbol(t), moving_cone_of_degrees(cols)});
    corpus.push_back({"degree cone " + type_symbol(t), Cone::from_generators(4, cols)});
    auto found = git_chamber_report(build_presentation_with_retry(t, 3, 0), kW).found;
    for (const auto& f : found) {
      std::vector<IntVector> gens;
      for (auto i : f.indices) gens.push_back(cols[i - 1]);
      corpus.push_back({"cone " + index_set(f.indices) + " " + type_symbol(t), Cone::from_generators(4, gens)});
    }
  }
  long ok = 0;
  std::vector<std::string> bad;
  for (const auto& [name, c] : corpus) {
    Cone dd = dual(dual(c));
    if (dd == c && equals(dd, c)) {
      ++ok;
    } else {
      bad.push_back(name);
    }
  }
  const long total = static_cast<long>(corpus.size());
  r.check("cone_biduality", ok == total, fraction(total, total), fraction(ok, total) + (bad.empty() ? "" : " failing: " + join(bad)),
          "cone duality");
  return r;
}

std::string criterion_title(int k) {
  static const std::vector<std::string> titles = {
      "Mordell-Weil table",
      "nef duality",
      "flop checks",
      "grading consistency",
      "Koszul dimensions",
      "W checks",
      "GIT chamber script",
      "classification round trip",
      "restriction",
      "oracle suites",
  };
  if (k < 1 || k > kCriteria) throw Error("no acceptance criterion " + std::to_string(k));
  return titles[static_cast<std::size_t>(k - 1)];
}

Report acceptance_criterion(int k) {
  Report r;
  r.command = "acceptance";
  r.target = "AC" + std::to_string(k);
  (void)criterion_title(k);
  switch (k) {
    case 1:
      for (VarietyType t : kAllTypes) r.append(check_mordell_weil(t), type_name(t) + "/");
      break;
    case 2:
      for (VarietyType t : kAllTypes) r.append(check_nef_duality(t), type_name(t) + "/");
      break;
    case 3:
      for (VarietyType t : {VarietyType::X3, VarietyType::XS2}) r.append(check_flops(t), type_name(t) + "/");
      break;
    case 4:
      for (VarietyType t : kExtremalTypes) r.append(check_presentation(t, 3, 0), type_name(t) + "/");
      break;
    case 5:
      for (VarietyType t : kExtremalTypes) r.append(check_koszul(t, 0, 10), type_name(t) + "/");
      break;
    case 6:
      for (VarietyType t : kExtremalTypes) r.append(check_w(t), type_name(t) + "/");
      break;
    case 7:
      for (int n : {3, 4})
        for (VarietyType t : kExtremalTypes) r.append(check_git_chamber(t, n, 0), type_name(t) + "/");
      break;
    case 8:
      for (int n : {3, 4})
        for (VarietyType t : kAllTypes) r.append(check_round_trip(t, n, 0, 50), type_name(t) + "/");
      r.append(check_star_collinearity(0, 50));
      break;
    case 9:
      for (int n : {4, 5})
        for (VarietyType t : kExtremalTypes) r.append(check_restriction(t, n, 0), type_name(t) + "/");
      break;
    case 10:
      r.append(check_snf_contract(0, 1000));
      for (VarietyType t : kExtremalTypes) r.append(check_hilbert_oracle(t, 0, 20), type_name(t) + "/");
      r.append(check_cone_biduality());
      break;
  }
  return r;
}

Report cmd_catalog() {
  Report r;
  r.command = "catalog";
  for (VarietyType t : kAllTypes) {
    r.info(type_name(t) + "/symbol", type_symbol(t) + (is_extremal(t) ? ", extremal" : ""), "type table");
    r.compare(type_name(t) + "/mordell_weil", printed_mordell_weil(t), mordell_weil(t).to_string(),
              "Mordell-Weil table, " + type_symbol(t));
  }
  return r;
}

Report cmd_mw(VarietyType t) {
  Report r = check_mordell_weil(t);
  r.command = "mw";
  r.target = type_name(t);
  r.info("vertical_lattice", vectors_string(vertical_lattice(t)));
  return r;
}

Report cmd_cones(VarietyType t) {
  Report r;
  r.command = "cones";
  r.target = type_name(t);
  r.info("mori_generators", vectors_string(mori_generators(t)), "Mori cone, " + family_name(t));
  r.info("nef_generators", vectors_string(printed_nef_generators(t)), "nef cone generators, " + family_name(t));
  r.append(check_nef_duality(t));
  r.append(check_flops(t));
  r.append(check_w(t));
  if (is_extremal(t)) {
    auto chambers = moving_cone(t);
    for (std::size_t i = 0; i < chambers.size(); ++i) r.info("moving_cone_chamber_" + std::to_string(i + 1), chambers[i].to_string());
  }
  return r;
}

Report cmd_coxring(VarietyType t, int n, std::uint64_t seed) {
  Report r;
  r.command = "coxring";
  r.target = type_name(t);
  r.n = n;
  r.seed = seed;
  r.info("grading_columns", vectors_string(grading_matrix(t, n).columns()), "Cox ring grading, " + type_symbol(t));
  r.append(check_presentation(t, n, seed));
  return r;
}

Report cmd_hilbert(VarietyType t, int n, const IntVector& degree) {
  if (degree.size() != 4) throw DimensionMismatch("degree must have four entries");
  Report r;
  r.command = "hilbert";
  r.target = type_name(t);
  r.n = n;
  r.info("hilbert_dim " + to_string(degree), hilbert_dim(grading_matrix(t, n), degree).get_str(),
         "Cox ring grading, " + type_symbol(t));
  return r;
}

Report cmd_classify(const std::string& input_path) {
  std::ifstream in(input_path);
  if (!in) throw std::runtime_error("cannot read " + input_path);
  std::stringstream buf;
  buf << in.rdbuf();
  ClassifierInput input = parse_classifier_input(buf.str());
  Report r;
  r.command = "classify";
  r.target = input_path;
  r.n = input.n;
  try {
    Classification c = classify(input.y, input.line);
    for (std::size_t i = 0; i < c.records.size(); ++i) {
      const auto& rec = c.records[i];
      r.info("point_" + std::to_string(i + 1),
             point_to_string(rec.point) + " multiplicity " + std::to_string(rec.multiplicity) + (rec.smooth ? ", smooth" : ", singular") +
                 (rec.is_star ? ", star point" : ", not a star point"));
    }
    r.info("type", type_symbol(c.type), "type table");
    for (std::size_t i = 0; i < c.notes.size(); ++i) r.info("note_" + std::to_string(i + 1), c.notes[i]);
  } catch (const Error& e) {
    r.check("classification", false, "a type", e.what(), "");
  }
  return r;
}

Report cmd_verify(const std::string& target, int n, std::uint64_t seed) {
  Report r;
  r.command = "verify";
  r.target = target;
  r.n = n;
  r.seed = seed;
  if (target != "all") {
    r.append(verify_type(parse_type(target), n, seed));
    return r;
  }
  for (VarietyType t : kAllTypes) r.append(verify_type(t, n, seed), type_name(t) + "/");

  // Criteria that fix n or span several types.
  for (int m : {3, 4}) {
    if (m == n) continue;
    for (VarietyType t : kExtremalTypes) r.append(check_git_chamber(t, m, seed), type_name(t) + "/");
    for (VarietyType t : kAllTypes) r.append(check_round_trip(t, m, seed, 50), type_name(t) + "/");
  }
  for (int m : {4, 5}) {
    if (m == n) continue;
    for (VarietyType t : kExtremalTypes) r.append(check_restriction(t, m, seed), type_name(t) + "/");
  }
  if (n != 3)
    for (VarietyType t : kExtremalTypes) r.append(check_koszul(t, seed), type_name(t) + "/");
  r.append(check_star_collinearity(seed, 50), "suite/");
  r.append(check_snf_contract(seed, 1000), "suite/");
  for (VarietyType t : kExtremalTypes) r.append(check_hilbert_oracle(t, seed, 20), "suite/" + type_name(t) + "/");
  r.append(check_cone_biduality(), "suite/");
  return r;
}

}  // namespace ellcox
