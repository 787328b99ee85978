#pragma once

// Sparse multivariate polynomials over Q.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellcox/exact_linalg.hpp"
#include "ellcox/variety_type.hpp"

namespace ellcox {

/// Variable names of a polynomial ring. S-variables are flagged so the beta and gcd
/// operations can find them.
class VariableContext {
 public:
  VariableContext(std::vector<std::string> names, std::vector<bool> s_flags);

  /// T1..Tm, S1, S2, S3.
  static std::shared_ptr<const VariableContext> cox(std::size_t t_count);
  /// T1..Tm with no S-variables.
  static std::shared_ptr<const VariableContext> t_only(std::size_t t_count);
  /// prefix1..prefixk, e.g. x1..x5.
  static std::shared_ptr<const VariableContext> projective(std::size_t k, const std::string& prefix = "x");

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool is_s(std::size_t i) const { return s_flags_.at(i); }
  std::size_t s_count() const;
  /// Index of S_{j+1}; throws if absent.
  std::size_t s_index(std::size_t j) const;

  bool operator==(const VariableContext& o) const { return names_ == o.names_ && s_flags_ == o.s_flags_; }

 private:
  std::vector<std::string> names_;
  std::vector<bool> s_flags_;
};
using ContextPtr = std::shared_ptr<const VariableContext>;

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);
/// Graded lexicographic, larger monomials first.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};
std::string monomial_to_string(const Monomial& m, const VariableContext& ctx);

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonomialOrder>;

  explicit MultiPoly(ContextPtr ctx);
  static MultiPoly constant(ContextPtr ctx, const Rat& c);
  static MultiPoly variable(ContextPtr ctx, std::size_t i);
  static MultiPoly monomial(ContextPtr ctx, Monomial m, const Rat& c = 1);

  const ContextPtr& context() const { return ctx_; }
  const TermMap& terms() const { return terms_; }
  std::size_t arity() const { return ctx_->size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rat coefficient(const Monomial& m) const;
  /// Adds c * m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rat& c);
  /// Largest total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// All terms share one total degree (true for zero).
  bool is_form() const;
  bool involves(std::size_t var) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator*(const Rat& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const;

  Rat evaluate(const RatVector& point) const;
  MultiPoly derivative(std::size_t var) const;

  std::string to_string() const;

 private:
  void require_same_ring(const MultiPoly& o) const;

  ContextPtr ctx_;
  TermMap terms_;
};

/// Grammar: terms joined by + or -; a term is *-separated factors, each an integer, a
/// fraction p/q or a variable with optional ^exponent. Whitespace is ignored.
MultiPoly parse_poly(std::string_view text, const ContextPtr& ctx);

IntVector monomial_degree(const Monomial& m, const IntMatrix& q);
/// Common degree of all terms; throws InhomogeneousGenerator with two witnesses.
IntVector homogeneous_degree(const MultiPoly& p, const IntMatrix& q);

/// Per T-variable, the exponents of S1, S2, S3 it is multiplied by.
struct BetaMap {
  std::vector<std::array<unsigned, 3>> exponents;
  bool operator==(const BetaMap&) const = default;
};
/// Multiplies each T in each monomial by its S-monomial. S-variables are left alone.
MultiPoly substitute_beta(const MultiPoly& p, const BetaMap& beta);
/// (p / g, g) with g the componentwise minimum of the S-parts of the terms.
std::pair<MultiPoly, Monomial> s_gcd_divide(const MultiPoly& p);

/// Sets every variable outside `keep` to zero.
MultiPoly restrict_variables(const MultiPoly& p, const std::set<std::size_t>& keep);
/// Replaces variable i by images[i]; all images must live in one ring.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images);
/// Moves variable i to index mapping[i] of `target`.
MultiPoly rename(const MultiPoly& p, const ContextPtr& target, const std::vector<std::size_t>& mapping);
/// Deletes a variable that does not occur in p and shifts later indices down.
MultiPoly remove_variable(const MultiPoly& p, std::size_t var, const ContextPtr& target);

/// All monomials of total degree d supported on `vars`, in decreasing graded-lex order.
std::vector<Monomial> monomials_of_degree(std::size_t arity, const std::vector<std::size_t>& vars, unsigned d);

/// The only source of randomness: a seeded mt19937_64.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  /// p/q with p in [-9, 9], q in {1, 2, 3}.
  Rat small_rational();
  Rat nonzero_small_rational();
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Concrete coefficient forms for one normal-form equation, in the ring T1..T_{n+2}.
/// Names: a', b', a1, b1 (X3); a2, b2 (XS); a3, b3 (XS2); a4, b4 (XSSS); a5, b5, c5 (X12);
/// a6, b6 (XS11); a7, b7, c7 (X111).
struct CoefficientAssignment {
  VarietyType type = VarietyType::X3;
  int n = 3;
  std::uint64_t seed = 0;
  ContextPtr ring;
  std::map<std::string, MultiPoly> forms;
  std::vector<std::string> notes;

  const MultiPoly& form(const std::string& name) const;
};

/// Deterministic in (type, n, seed). Enforces the tabulated zero/nonzero conditions.
CoefficientAssignment random_admissible(VarietyType type, int n, std::uint64_t seed);
/// Extra genericity conditions the downstream constructions rely on; empty if all hold.
std::vector<std::string> genericity_violations(const CoefficientAssignment& a);
/// First seed >= seed whose draw has no genericity violations; skipped seeds are noted.
CoefficientAssignment random_generic(VarietyType type, int n, std::uint64_t seed, int max_attempts = 64);
/// Sets T1 = 0 and renumbers, giving an assignment for n - 1.
CoefficientAssignment drop_first_variable(const CoefficientAssignment& a);

}  // namespace ellcox
