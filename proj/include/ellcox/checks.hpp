#pragma once

// Checks against the tabulated data, property suites, and the command front ends built on them.
// Every function returns a Report whose record order is fixed.

#include <cstdint>
#include <string>
#include <vector>

#include "ellcox/exact_linalg.hpp"
#include "ellcox/report.hpp"
#include "ellcox/variety_type.hpp"

namespace ellcox {

Report check_mordell_weil(VarietyType t);
Report check_nef_duality(VarietyType t);
/// X3 and XS2 only; other types give an empty report.
Report check_flops(VarietyType t);
/// Pairings of W with the Mori generators, the four-term nef decomposition and, for the
/// extremal types, membership in the moving cone of the Cox-ring degrees.
Report check_w(VarietyType t);
/// Beta exponents, homogeneity, extracted S-monomials and generator degrees.
Report check_presentation(VarietyType t, int n, std::uint64_t seed);
/// At n = 3 and W, over seed .. seed + seed_count - 1.
Report check_koszul(VarietyType t, std::uint64_t seed, int seed_count = 10);
Report check_git_chamber(VarietyType t, int n, std::uint64_t seed);
Report check_restriction(VarietyType t, int n, std::uint64_t seed);
Report check_round_trip(VarietyType t, int n, std::uint64_t seed, int count);
Report check_star_collinearity(std::uint64_t seed, int count);
Report check_snf_contract(std::uint64_t seed, int count);
/// hilbert_dim against a generating-function expansion on `count` degrees with first entry <= 4.
Report check_hilbert_oracle(VarietyType t, std::uint64_t seed, int count);
Report check_cone_biduality();

/// Number of acceptance criteria and their one-line titles.
inline constexpr int kCriteria = 10;
std::string criterion_title(int k);
/// Runs criterion k (1-based).
Report acceptance_criterion(int k);

Report cmd_catalog();
Report cmd_mw(VarietyType t);
Report cmd_cones(VarietyType t);
Report cmd_coxring(VarietyType t, int n, std::uint64_t seed);
Report cmd_hilbert(VarietyType t, int n, const IntVector& degree);
/// Throws ParseError or std::runtime_error for unreadable input.
Report cmd_classify(const std::string& input_path);
/// target is a type name or "all".
Report cmd_verify(const std::string& target, int n, std::uint64_t seed);

}  // namespace ellcox
