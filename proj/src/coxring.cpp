#include "ellcox/coxring.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ellcox/errors.hpp"
#include "ellcox/varieties.hpp"

namespace ellcox {

namespace {

using Triple = std::array<unsigned, 3>;

void require_extremal(VarietyType t, int n) {
  if (!is_extremal(t)) throw UnsupportedType("no Cox ring presentation is tabulated for " + type_symbol(t));
  if (n < 3) throw Error("n must be at least 3");
}

std::string triple_string(const Triple& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + ")";
}

std::string s_monomial_string(const Triple& e) {
  std::string out;
  for (int i = 0; i < 3; ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += "S" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

std::size_t t_variable_count(VarietyType t, int n) {
  require_extremal(t, n);
  return t == VarietyType::XS ? n + 2 : n + 3;
}

IntMatrix grading_matrix(VarietyType t, int n) {
  require_extremal(t, n);
  std::vector<IntVector> cols;
  const std::size_t block = t == VarietyType::XSSS ? n : n - 1;
  for (std::size_t k = 0; k < block; ++k) cols.push_back(make_vector({1, -1, -1, -1}));
  auto add = [&](std::initializer_list<std::initializer_list<long>> more) {
    for (auto c : more) cols.push_back(make_vector(c));
  };
  switch (t) {
    case VarietyType::X3:
      add({{1, -1, 0, 0}, {1, -2, -1, 0}, {1, 0, 0, 0}, {2, -3, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}});
      break;
    case VarietyType::XS:
      add({{1, -1, 0, 0}, {1, -3, 0, 0}, {1, 0, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}});
      break;
    case VarietyType::XS2:
      add({{1, -2, 0, -1}, {1, 0, 0, -3}, {1, -1, 0, 0}, {2, -3, -3, 0}, {0, 1, -1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
      break;
    case VarietyType::XSSS:
      add({{1, -3, 0, 0}, {1, 0, -3, 0}, {1, 0, 0, -3}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
      break;
    default: break;
  }
  return IntMatrix::from_columns(cols, 4);
}

BetaMap printed_beta(VarietyType t, int n) {
  require_extremal(t, n);
  BetaMap b;
  for (int k = 1; k < n; ++k) b.exponents.push_back({1, 2, 3});
  switch (t) {
    case VarietyType::X3: b.exponents.insert(b.exponents.end(), {{1, 1, 1}, {2, 3, 3}, {0, 0, 0}, {3, 3, 3}}); break;
    case VarietyType::XS: b.exponents.insert(b.exponents.end(), {{1, 1, 1}, {3, 3, 3}, {0, 0, 0}}); break;
    case VarietyType::XS2: b.exponents.insert(b.exponents.end(), {{2, 2, 1}, {0, 0, 3}, {1, 1, 0}, {3, 6, 0}}); break;
    case VarietyType::XSSS: b.exponents.insert(b.exponents.end(), {{1, 2, 3}, {3, 0, 0}, {0, 3, 0}, {0, 0, 3}}); break;
    default: break;
  }
  return b;
}

BetaMap solve_beta_exponents(const IntMatrix& q) {
  if (q.rows() != 4 || q.cols() < 4) throw DimensionMismatch("solve_beta_exponents: expected a 4 x (m + 3) grading matrix");
  const std::size_t m = q.cols() - 3;
  // rows 2..4 of the S-columns; row 1 of an S-column must vanish
  std::vector<RatVector> s(3, RatVector(3));
  for (std::size_t j = 0; j < 3; ++j) {
    if (q(0, m + j) != 0) throw NoCompatibleExponents("S" + std::to_string(j + 1) + " has nonzero first degree");
    for (std::size_t i = 0; i < 3; ++i) s[i][j] = q(i + 1, m + j);
  }
  BetaMap b;
  for (std::size_t k = 0; k < m; ++k) {
    RatVector rhs(3);
    for (std::size_t i = 0; i < 3; ++i) rhs[i] = -q(i + 1, k);
    auto e = solve(s, rhs);
    if (!e) throw NoCompatibleExponents("S-columns of the grading matrix are linearly dependent");
    Triple out{};
    for (std::size_t i = 0; i < 3; ++i) {
      const Rat& x = (*e)[i];
      if (x.get_den() != 1 || x < 0)
        throw NoCompatibleExponents("T" + std::to_string(k + 1) + ": exponent of S" + std::to_string(i + 1) + " would be " +
                                    x.get_str());
      out[i] = static_cast<unsigned>(x.get_num().get_ui());
    }
    b.exponents.push_back(out);
  }
  return b;
}

std::vector<std::array<unsigned, 3>> printed_denominators(VarietyType t) {
  switch (t) {
    case VarietyType::X3: return {{2, 3, 3}, {3, 3, 3}};
    case VarietyType::XS: return {{3, 3, 3}};
    case VarietyType::XS2: return {{2, 2, 0}, {3, 6, 3}};
    case VarietyType::XSSS: return {{0, 0, 0}, {3, 3, 3}};
    default: throw UnsupportedType("no Cox ring presentation is tabulated for " + type_symbol(t));
  }
}

std::vector<IntVector> CoxPresentation::generator_degrees() const {
  std::vector<IntVector> out;
  for (const auto& g : generators) out.push_back(g.degree);
  return out;
}

namespace {

struct RawGenerator {
  std::string label;
  MultiPoly poly;
};

std::vector<RawGenerator> raw_generators(const CoefficientAssignment& a, const ContextPtr& ring) {
  const int n = a.n;
  std::vector<std::size_t> identity(a.ring->size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i;
  auto F = [&](const std::string& name) { return rename(a.form(name), ring, identity); };
  auto T = [&](int j) { return MultiPoly::variable(ring, j - 1); };
  switch (a.type) {
    case VarietyType::X3:
      return {{"T_{n+3} - T_{n+1} a1 - b'", T(n + 3) - T(n + 1) * F("a1") - F("b'")},
              {"T_{n+2} T_{n+3} + T_{n+1} a' + b1", T(n + 2) * T(n + 3) + T(n + 1) * F("a'") + F("b1")}};
    case VarietyType::XS:
      return {{"T_{n+1} a2 + b2", T(n + 1) * F("a2") + F("b2")}};
    case VarietyType::XS2:
      return {{"T_{n+3} - a3", T(n + 3) - F("a3")}, {"T_{n+1} T_{n+3} + b3", T(n + 1) * T(n + 3) + F("b3")}};
    case VarietyType::XSSS:
      return {{"T_{n+3} - a4", T(n + 3) - F("a4")},
              {"T_{n+1} T_{n+2} T_{n+3} + b4", T(n + 1) * T(n + 2) * T(n + 3) + F("b4")}};
    default: throw UnsupportedType("no Cox ring presentation is tabulated for " + type_symbol(a.type));
  }
}

Triple s_part(const Monomial& m, const VariableContext& ctx) {
  return {m[ctx.s_index(0)], m[ctx.s_index(1)], m[ctx.s_index(2)]};
}

void note_beta_repairs(CoxPresentation& p) {
  BetaMap printed = printed_beta(p.type, p.n);
  std::map<std::pair<Triple, Triple>, std::vector<std::string>> diffs;
  for (std::size_t k = 0; k < printed.exponents.size(); ++k)
    if (printed.exponents[k] != p.beta.exponents[k])
      diffs[{printed.exponents[k], p.beta.exponents[k]}].push_back(p.ring->name(k));
  for (const auto& [pair, names] : diffs) {
    std::string vars;
    for (const auto& v : names) vars += (vars.empty() ? "" : ",") + v;
    p.repair_notes.push_back("beta exponents for " + vars + ": tabulated " + triple_string(pair.first) +
                             ", degree-compatible " + triple_string(pair.second) + " used");
  }
}

}  // namespace

CoxPresentation build_presentation(const CoefficientAssignment& coefficients) {
  require_extremal(coefficients.type, coefficients.n);
  auto bad = genericity_violations(coefficients);
  if (!bad.empty())
    throw DegenerateCoefficients(type_symbol(coefficients.type) + " seed " + std::to_string(coefficients.seed) + ": " +
                                 bad.front());
  CoxPresentation p;
  p.type = coefficients.type;
  p.n = coefficients.n;
  p.coefficients = coefficients;
  p.ring = VariableContext::cox(t_variable_count(p.type, p.n));
  p.q = grading_matrix(p.type, p.n);
  p.beta = solve_beta_exponents(p.q);
  p.repair_notes = coefficients.notes;
  note_beta_repairs(p);
  if (p.type == VarietyType::XS2)
    p.repair_notes.push_back("second generator taken as T_{n+1} T_{n+3} + b3, matching the sign of the cubic T_{n+1} a3 + b3");

  auto printed = printed_denominators(p.type);
  auto raws = raw_generators(coefficients, p.ring);
  for (std::size_t i = 0; i < raws.size(); ++i) {
    CoxGenerator g{raws[i].label, raws[i].poly, MultiPoly(p.ring), {}, printed[i], {}};
    auto [divided, gcd] = s_gcd_divide(substitute_beta(raws[i].poly, p.beta));
    g.poly = divided;
    g.extracted = s_part(gcd, *p.ring);
    g.degree = homogeneous_degree(g.poly, p.q);
    if (g.extracted != g.printed)
      p.repair_notes.push_back("generator " + std::to_string(i + 1) + ": extracted S-monomial " +
                               s_monomial_string(g.extracted) + ", tabulated " + s_monomial_string(g.printed));
    p.generators.push_back(std::move(g));
  }
  return p;
}

CoxPresentation build_presentation(VarietyType t, int n, std::uint64_t seed) {
  require_extremal(t, n);
  return build_presentation(random_admissible(t, n, seed));
}

CoxPresentation build_presentation_with_retry(VarietyType t, int n, std::uint64_t seed) {
  require_extremal(t, n);
  return build_presentation(random_generic(t, n, seed));
}

PrintedBetaOutcome try_printed_beta(const CoxPresentation& p) {
  PrintedBetaOutcome out;
  BetaMap printed = printed_beta(p.type, p.n);
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    auto [divided, gcd] = s_gcd_divide(substitute_beta(p.generators[i].before_beta, printed));
    try {
      IntVector d = homogeneous_degree(divided, p.q);
      out.messages.push_back("generator " + std::to_string(i + 1) + ": homogeneous of degree " + to_string(d));
    } catch (const InhomogeneousGenerator& e) {
      out.homogeneous = false;
      out.messages.push_back("generator " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Hilbert function

namespace {

class MonomialCounter {
 public:
  MonomialCounter(const IntMatrix& q, IntVector phi) : phi_(std::move(phi)) {
    for (std::size_t j = 0; j < q.cols(); ++j) {
      cols_.push_back(q.column(j));
      cost_.push_back(dot(phi_, cols_.back()));
    }
  }

  Int count(const IntVector& w) { return rec(0, w); }

 private:
  Int rec(std::size_t j, const IntVector& rem) {
    const Int budget = dot(phi_, rem);
    if (budget < 0) return 0;
    if (j == cols_.size()) return is_zero(rem) ? Int(1) : Int(0);
    auto key = std::make_pair(j, rem);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Int total = 0;
    IntVector cur = rem;
    for (Int spent = 0; spent <= budget; spent += cost_[j]) {
      total += rec(j + 1, cur);
      for (std::size_t i = 0; i < cur.size(); ++i) cur[i] -= cols_[j][i];
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

  IntVector phi_;
  std::vector<IntVector> cols_;
  std::vector<Int> cost_;
  std::map<std::pair<std::size_t, IntVector>, Int> memo_;
};

}  // namespace

Int hilbert_dim(const IntMatrix& q, const IntVector& w) {
  if (w.size() != q.rows()) throw DimensionMismatch("hilbert_dim: degree length differs from grading rows");
  auto phi = strict_positive_functional(q.columns());
  if (!phi) throw NonPointedGrading("grading columns admit no strictly positive functional");
  MonomialCounter counter(q, primitive_integer(*phi));
  return counter.count(w);
}

KoszulResult koszul_quotient_dim(const CoxPresentation& p, const IntVector& w) {
  auto degs = p.generator_degrees();
  KoszulResult r;
  // all subsets of generators, sign (-1)^size
  const std::size_t k = degs.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    IntVector d = w;
    int sign = 1;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) {
        sign = -sign;
        for (std::size_t c = 0; c < d.size(); ++c) d[c] -= degs[i][c];
      }
    r.terms.push_back({d, sign, hilbert_dim(p.q, d)});
  }
  r.ambient = r.terms.front().dim;
  r.quotient = 0;
  for (const auto& t : r.terms) r.quotient += t.sign * t.dim;
  return r;
}

// ---------------------------------------------------------------------------
// Cones of degrees

Cone moving_cone_of_degrees(const std::vector<IntVector>& degrees) {
  if (degrees.size() < 2) throw Error("moving_cone_of_degrees: need at least two degrees");
  const std::size_t dim = degrees.front().size();
  std::optional<Cone> acc;
  for (std::size_t skip = 0; skip < degrees.size(); ++skip) {
    std::vector<IntVector> rest;
    for (std::size_t i = 0; i < degrees.size(); ++i)
      if (i != skip) rest.push_back(degrees[i]);
    Cone c = Cone::from_generators(dim, rest);
    acc = acc ? intersect(*acc, c) : c;
  }
  return *acc;
}

std::vector<ExpectedFamily> expected_chamber_families(VarietyType t, int n) {
  const std::size_t m = t_variable_count(t, n);
  const std::size_t arity = m + 3;
  auto mono = [&](std::initializer_list<std::pair<std::size_t, unsigned>> f) {
    Monomial out(arity, 0);
    for (auto [idx, e] : f) out[idx - 1] += e;
    return out;
  };
  auto sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const std::size_t N = n;
  std::vector<ExpectedFamily> out;
  switch (t) {
    case VarietyType::X3:
      for (std::size_t i = 1; i < N; ++i) out.push_back({sorted({i, N + 1, N + 2}), 1, mono({{N + 1, 1}, {N + 2, 2}})});
      for (std::size_t i = 1; i < N; ++i) out.push_back({sorted({i, N, N + 4}), 2, mono({{N, 3}})});
      out.push_back({{N + 3, N + 4, N + 5}, 1, mono({{N + 3, 1}, {N + 4, 1}})});
      break;
    case VarietyType::XS:
      for (std::size_t i = 1; i < N; ++i) out.push_back({sorted({i, N, N + 3}), 1, mono({{N, 3}})});
      break;
    case VarietyType::XS2:
      for (std::size_t i = 1; i < N; ++i) out.push_back({sorted({i, N + 2, N + 4}), 1, mono({{N + 2, 2}})});
      out.push_back({{N, N + 2, N + 4}, 1, mono({{N + 2, 2}})});
      break;
    default: break;
  }
  return out;
}

GitChamberReport git_chamber_report(const CoxPresentation& p, const IntVector& w) {
  GitChamberReport r;
  const auto cols = p.q.columns();
  const std::size_t r_count = cols.size();

  for (std::size_t a = 0; a < r_count; ++a)
    for (std::size_t b = a + 1; b < r_count; ++b)
      if (Cone::from_generators(4, {cols[a], cols[b]}).contains(w)) r.two_cones_containing_w.push_back({a + 1, b + 1});

  r.expected = expected_chamber_families(p.type, p.n);
  std::map<std::vector<std::size_t>, const ExpectedFamily*> expected_by_set;
  for (const auto& e : r.expected) expected_by_set[e.indices] = &e;

  for (std::size_t a = 0; a < r_count; ++a)
    for (std::size_t b = a + 1; b < r_count; ++b)
      for (std::size_t c = b + 1; c < r_count; ++c) {
        Cone cone = Cone::from_generators(4, {cols[a], cols[b], cols[c]});
        if (!cone.contains(w, Containment::RelativeInterior)) continue;
        ChamberFamily f{{a + 1, b + 1, c + 1}, false, 0, MultiPoly(p.ring)};
        const std::set<std::size_t> keep = {a, b, c};
        auto it = expected_by_set.find(f.indices);
        const std::size_t preferred = it == expected_by_set.end() ? 0 : it->second->generator;
        for (std::size_t g = 0; g < p.generators.size(); ++g) {
          MultiPoly restricted = restrict_variables(p.generators[g].poly, keep);
          if (!restricted.is_monomial()) continue;
          if (!f.certified || g + 1 == preferred) {
            f.certified = true;
            f.generator = g + 1;
            f.certificate = restricted;
          }
        }
        r.found.push_back(std::move(f));
      }

  std::set<std::vector<std::size_t>> found_sets, expected_sets;
  for (const auto& f : r.found) found_sets.insert(f.indices);
  for (const auto& e : r.expected) expected_sets.insert(e.indices);
  r.families_match = found_sets == expected_sets;

  r.all_certified = std::all_of(r.found.begin(), r.found.end(), [](const ChamberFamily& f) { return f.certified; });
  for (const auto& f : r.found) {
    auto it = expected_by_set.find(f.indices);
    if (it == expected_by_set.end() || !f.certified) continue;
    const ExpectedFamily& e = *it->second;
    const Monomial& got = f.certificate.terms().begin()->first;
    std::string where = "{";
    for (std::size_t i = 0; i < f.indices.size(); ++i) where += (i ? "," : "") + std::to_string(f.indices[i]);
    where += "}";
    if (got != e.monomial || f.generator != e.generator)
      r.monomial_notes.push_back("I=" + where + ": tabulated f" + std::to_string(e.generator) + "^I = " +
                                 monomial_to_string(e.monomial, *p.ring) + ", computed f" + std::to_string(f.generator) +
                                 "^I = " + f.certificate.to_string());
  }
  r.full_dimensional = r.two_cones_containing_w.empty() && r.all_certified;
  return r;
}

// ---------------------------------------------------------------------------
// Restriction to T1 = 0

CoxPresentation restrict_to_hyperplane(const CoxPresentation& p) {
  if (p.n <= 3) throw Error("restrict_to_hyperplane: n must exceed 3");
  CoxPresentation r;
  r.type = p.type;
  r.n = p.n - 1;
  r.ring = VariableContext::cox(t_variable_count(r.type, r.n));
  r.q = p.q.without_column(0);
  r.beta = BetaMap{{p.beta.exponents.begin() + 1, p.beta.exponents.end()}};
  r.coefficients = drop_first_variable(p.coefficients);
  r.repair_notes = p.repair_notes;

  std::set<std::size_t> keep;
  for (std::size_t i = 1; i < p.ring->size(); ++i) keep.insert(i);
  for (const auto& g : p.generators) {
    CoxGenerator h = g;
    h.before_beta = remove_variable(restrict_variables(g.before_beta, keep), 0, r.ring);
    h.poly = remove_variable(restrict_variables(g.poly, keep), 0, r.ring);
    if (h.poly.is_zero()) throw StructuralMismatch("generator vanishes on T1 = 0");
    h.degree = homogeneous_degree(h.poly, r.q);
    if (h.degree != g.degree)
      throw StructuralMismatch("generator degree changed from " + to_string(g.degree) + " to " + to_string(h.degree));
    r.generators.push_back(std::move(h));
  }

  if (!(r.q == grading_matrix(r.type, r.n)))
    throw StructuralMismatch("grading matrix after deleting T1 differs from the one for n = " + std::to_string(r.n));
  CoxPresentation direct = build_presentation(r.coefficients);
  if (!(direct.beta == r.beta)) throw StructuralMismatch("beta exponents differ from those for n = " + std::to_string(r.n));
  if (direct.generators.size() != r.generators.size()) throw StructuralMismatch("generator count differs");
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    if (!(direct.generators[i].poly == r.generators[i].poly))
      throw StructuralMismatch("generator " + std::to_string(i + 1) + " differs from the presentation built for n = " +
                               std::to_string(r.n));
    if (direct.generators[i].degree != r.generators[i].degree)
      throw StructuralMismatch("generator " + std::to_string(i + 1) + " degree differs");
  }
  return r;
}

}  // namespace ellcox
