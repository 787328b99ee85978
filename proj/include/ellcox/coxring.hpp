#pragma once

// Cox-ring presentations of the four extremal types with concrete coefficients,
// multigraded Hilbert functions, and the chamber checks around W.
//
// Variables are T1..Tm followed by S1, S2, S3, where m = n + 3 (n + 2 for XS).
// Index sets in reports are 1-based over that list, so S_i has index m + i.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ellcox/cones.hpp"
#include "ellcox/errors.hpp"
#include "ellcox/exact_linalg.hpp"
#include "ellcox/polynom.hpp"
#include "ellcox/variety_type.hpp"

namespace ellcox {

/// Number of T-variables m.
std::size_t t_variable_count(VarietyType t, int n);
/// 4 x (m + 3); the block of (1,-1,-1,-1) columns is expanded for the given n.
IntMatrix grading_matrix(VarietyType t, int n);
/// Exponent triples as tabulated.
BetaMap printed_beta(VarietyType t, int n);
/// Solves deg(T) + sum_i e_i deg(S_i) = (d, 0, 0, 0) for each T-variable, d its first-row entry.
/// Throws NoCompatibleExponents if some e_i is negative or fractional.
BetaMap solve_beta_exponents(const IntMatrix& q);
/// Tabulated S-monomial divided out of each generator, as exponent triples.
std::vector<std::array<unsigned, 3>> printed_denominators(VarietyType t);

struct CoxGenerator {
  std::string label;  // the expression beta is applied to, e.g. "T_{n+1} a2 + b2"
  MultiPoly before_beta;
  MultiPoly poly;  // after beta and S-gcd extraction
  std::array<unsigned, 3> extracted{};
  std::array<unsigned, 3> printed{};
  IntVector degree;
};

struct CoxPresentation {
  VarietyType type = VarietyType::XS;
  int n = 3;
  ContextPtr ring;
  IntMatrix q;
  BetaMap beta;
  std::vector<CoxGenerator> generators;
  CoefficientAssignment coefficients;
  std::vector<std::string> repair_notes;

  std::vector<IntVector> generator_degrees() const;
  /// 0-based index of T_j.
  std::size_t t_index(std::size_t j) const { return j - 1; }
  std::size_t s_index(std::size_t i) const { return ring->s_index(i - 1); }
};

/// Uses the solver's beta. Throws DegenerateCoefficients if the assignment violates a genericity
/// condition and InhomogeneousGenerator if a generator is not homogeneous.
CoxPresentation build_presentation(const CoefficientAssignment& coefficients);
CoxPresentation build_presentation(VarietyType t, int n, std::uint64_t seed);
/// As above, retrying later seeds on degenerate draws; retries are listed in repair_notes.
CoxPresentation build_presentation_with_retry(VarietyType t, int n, std::uint64_t seed);

/// Outcome of running the tabulated beta through the same construction.
struct PrintedBetaOutcome {
  bool homogeneous = true;
  std::vector<std::string> messages;
};
PrintedBetaOutcome try_printed_beta(const CoxPresentation& p);

/// Number of monomials x >= 0 with q x = w. Throws NonPointedGrading if the columns admit no
/// strictly positive functional.
Int hilbert_dim(const IntMatrix& q, const IntVector& w);

struct KoszulTerm {
  IntVector degree;
  int sign = 1;
  Int dim;
};
struct KoszulResult {
  std::vector<KoszulTerm> terms;  // first term is the ambient degree w itself
  Int ambient;
  Int quotient;
};
/// dim A_w minus the shifted terms of the Koszul complex on the generators.
KoszulResult koszul_quotient_dim(const CoxPresentation& p, const IntVector& w);

/// Intersection of the cones generated by all but one of the degrees (r >= 2).
Cone moving_cone_of_degrees(const std::vector<IntVector>& degrees);

struct ChamberFamily {
  std::vector<std::size_t> indices;  // 1-based
  bool certified = false;
  std::size_t generator = 0;  // 1-based; 0 when uncertified
  MultiPoly certificate;
};
struct ExpectedFamily {
  std::vector<std::size_t> indices;
  std::size_t generator;
  Monomial monomial;
};
struct GitChamberReport {
  std::vector<std::vector<std::size_t>> two_cones_containing_w;
  std::vector<ChamberFamily> found;
  std::vector<ExpectedFamily> expected;
  bool families_match = false;
  std::vector<std::string> monomial_notes;  // tabulated monomial differs from the computed one
  bool all_certified = false;
  bool full_dimensional = false;
};
std::vector<ExpectedFamily> expected_chamber_families(VarietyType t, int n);
GitChamberReport git_chamber_report(const CoxPresentation& p, const IntVector& w);

/// Sets T1 = 0 and drops its column. Checks the result against the presentation built
/// directly for n - 1 from the specialised coefficients; StructuralMismatch otherwise.
CoxPresentation restrict_to_hyperplane(const CoxPresentation& p);

}  // namespace ellcox
