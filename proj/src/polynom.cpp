#include "ellcox/polynom.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "ellcox/errors.hpp"

namespace ellcox {

// ---------------------------------------------------------------------------
// Contexts

VariableContext::VariableContext(std::vector<std::string> names, std::vector<bool> s_flags)
    : names_(std::move(names)), s_flags_(std::move(s_flags)) {
  if (s_flags_.empty()) s_flags_.assign(names_.size(), false);
  if (s_flags_.size() != names_.size()) throw DimensionMismatch("VariableContext: one flag per variable expected");
}

std::shared_ptr<const VariableContext> VariableContext::cox(std::size_t t_count) {
  std::vector<std::string> names;
  std::vector<bool> flags;
  for (std::size_t i = 1; i <= t_count; ++i) {
    names.push_back("T" + std::to_string(i));
    flags.push_back(false);
  }
  for (int j = 1; j <= 3; ++j) {
    names.push_back("S" + std::to_string(j));
    flags.push_back(true);
  }
  return std::make_shared<const VariableContext>(std::move(names), std::move(flags));
}

std::shared_ptr<const VariableContext> VariableContext::t_only(std::size_t t_count) {
  return projective(t_count, "T");
}

std::shared_ptr<const VariableContext> VariableContext::projective(std::size_t k, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back(prefix + std::to_string(i));
  return std::make_shared<const VariableContext>(std::move(names), std::vector<bool>(k, false));
}

std::optional<std::size_t> VariableContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableContext::s_count() const {
  return static_cast<std::size_t>(std::count(s_flags_.begin(), s_flags_.end(), true));
}

std::size_t VariableContext::s_index(std::size_t j) const {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (s_flags_[i] && seen++ == j) return i;
  throw Error("ring has no S" + std::to_string(j + 1));
}

// ---------------------------------------------------------------------------
// Monomials

unsigned total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

std::string monomial_to_string(const Monomial& m, const VariableContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw Error("MultiPoly: null variable context");
}

MultiPoly MultiPoly::constant(ContextPtr ctx, const Rat& c) {
  MultiPoly p(std::move(ctx));
  p.add_term(Monomial(p.arity(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(ContextPtr ctx, std::size_t i) {
  MultiPoly p(std::move(ctx));
  Monomial m(p.arity(), 0);
  m.at(i) = 1;
  p.add_term(m, 1);
  return p;
}

MultiPoly MultiPoly::monomial(ContextPtr ctx, Monomial m, const Rat& c) {
  MultiPoly p(std::move(ctx));
  if (m.size() != p.arity()) throw DimensionMismatch("MultiPoly::monomial: exponent vector length differs from ring arity");
  p.add_term(m, c);
  return p;
}

Rat MultiPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void MultiPoly::add_term(const Monomial& m, const Rat& c) {
  if (m.size() != arity()) throw DimensionMismatch("MultiPoly: exponent vector length differs from ring arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(ellcox::total_degree(m)));
  return d;
}

bool MultiPoly::is_form() const {
  if (terms_.empty()) return true;
  unsigned d = ellcox::total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (ellcox::total_degree(m) != d) return false;
  return true;
}

bool MultiPoly::involves(std::size_t var) const {
  for (const auto& [m, c] : terms_)
    if (m.at(var) != 0) return true;
  return false;
}

void MultiPoly::require_same_ring(const MultiPoly& o) const {
  if (ctx_ != o.ctx_ && !(*ctx_ == *o.ctx_)) throw DimensionMismatch("MultiPoly: operands live in different rings");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_ring(o);
  MultiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_ring(o);
  MultiPoly r(ctx_);
  Monomial prod(arity());
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = ma[i] + mb[i];
      r.add_term(prod, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
  MultiPoly r(ctx_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [m, v] : r.terms_) v *= c;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(ctx_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  return *ctx_ == *o.ctx_ && terms_ == o.terms_;
}

Rat MultiPoly::evaluate(const RatVector& point) const {
  if (point.size() != arity()) throw DimensionMismatch("MultiPoly::evaluate: point length differs from ring arity");
  Rat total = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

MultiPoly MultiPoly::derivative(std::size_t var) const {
  MultiPoly r(ctx_);
  for (const auto& [m, c] : terms_) {
    if (m.at(var) == 0) continue;
    Monomial d = m;
    --d[var];
    r.add_term(d, c * m[var]);
  }
  return r;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rat a = abs(c);
    const bool constant_term = ellcox::total_degree(m) == 0;
    if (constant_term) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + '*';
      out += monomial_to_string(m, *ctx_);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

  MultiPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    MultiPoly result(ctx_);
    bool first = true;
    while (true) {
      skip_ws();
      Rat sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = -1;
        ++pos_;
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      auto [m, c] = parse_term();
      result.add_term(m, sign * c);
      skip_ws();
      if (pos_ == text_.size()) break;
    }
    return result;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::pair<Monomial, Rat> parse_term() {
    Monomial m(ctx_->size(), 0);
    Rat c = 1;
    while (true) {
      skip_ws();
      parse_factor(m, c);
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {m, c};
  }

  Int parse_integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    return Int(std::string(text_.substr(start, pos_ - start)));
  }

  void parse_factor(Monomial& m, Rat& c) {
    skip_ws();
    const char ch = peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      Int num = parse_integer();
      skip_ws();
      Int den = 1;
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        den = parse_integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Rat value(num, den);
      value.canonicalize();
      c *= value;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ctx_->index_of(name);
      if (!idx) throw UnknownVariable("unknown variable '" + name + "' at position " + std::to_string(start));
      unsigned e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t at = pos_;
        Int big = parse_integer();
        if (!big.fits_uint_p()) throw ParseError("exponent too large", at);
        e = static_cast<unsigned>(big.get_ui());
      }
      m[*idx] += e;
      return;
    }
    if (ch == '\0') throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + ch + "'", pos_);
  }

  std::string_view text_;
  const ContextPtr& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const ContextPtr& ctx) {
  return Parser(text, ctx).parse();
}

// ---------------------------------------------------------------------------
// Degrees

IntVector monomial_degree(const Monomial& m, const IntMatrix& q) {
  if (q.cols() != m.size()) throw DimensionMismatch("monomial_degree: grading matrix columns differ from ring arity");
  IntVector deg(q.rows(), Int(0));
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] != 0)
      for (std::size_t i = 0; i < q.rows(); ++i) deg[i] += q(i, j) * m[j];
  return deg;
}

IntVector homogeneous_degree(const MultiPoly& p, const IntMatrix& q) {
  if (p.is_zero()) throw Error("homogeneous_degree: zero polynomial has no degree");
  const auto& first = p.terms().begin()->first;
  IntVector d = monomial_degree(first, q);
  for (const auto& [m, c] : p.terms()) {
    IntVector e = monomial_degree(m, q);
    if (e != d) {
      const auto& ctx = *p.context();
      throw InhomogeneousGenerator("inhomogeneous polynomial: " + monomial_to_string(first, ctx) + " has degree " +
                                   to_string(d) + " but " + monomial_to_string(m, ctx) + " has degree " + to_string(e));
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Substitutions

MultiPoly substitute_beta(const MultiPoly& p, const BetaMap& beta) {
  const auto& ctx = *p.context();
  if (ctx.s_count() != 3) throw Error("substitute_beta: ring needs S1, S2, S3");
  const std::size_t s[3] = {ctx.s_index(0), ctx.s_index(1), ctx.s_index(2)};
  std::vector<std::size_t> t_vars;
  for (std::size_t i = 0; i < ctx.size(); ++i)
    if (!ctx.is_s(i)) t_vars.push_back(i);
  if (t_vars.size() != beta.exponents.size())
    throw DimensionMismatch("substitute_beta: one exponent triple per T-variable expected");
  MultiPoly r(p.context());
  for (const auto& [m, c] : p.terms()) {
    Monomial out = m;
    for (std::size_t k = 0; k < t_vars.size(); ++k)
      for (int j = 0; j < 3; ++j) out[s[j]] += m[t_vars[k]] * beta.exponents[k][j];
    r.add_term(out, c);
  }
  return r;
}

std::pair<MultiPoly, Monomial> s_gcd_divide(const MultiPoly& p) {
  if (p.is_zero()) throw Error("s_gcd_divide: zero polynomial");
  const auto& ctx = *p.context();
  Monomial g(p.arity(), 0);
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!ctx.is_s(i)) continue;
      g[i] = first ? m[i] : std::min(g[i], m[i]);
    }
    first = false;
  }
  MultiPoly q(p.context());
  for (const auto& [m, c] : p.terms()) {
    Monomial d = m;
    for (std::size_t i = 0; i < d.size(); ++i) d[i] -= g[i];
    q.add_term(d, c);
  }
  return {q, g};
}

MultiPoly restrict_variables(const MultiPoly& p, const std::set<std::size_t>& keep) {
  MultiPoly r(p.context());
  for (const auto& [m, c] : p.terms()) {
    bool survives = true;
    for (std::size_t i = 0; i < m.size() && survives; ++i)
      if (m[i] != 0 && !keep.contains(i)) survives = false;
    if (survives) r.add_term(m, c);
  }
  return r;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (images.size() != p.arity()) throw DimensionMismatch("substitute: one image per variable expected");
  if (images.empty()) throw Error("substitute: empty ring");
  const ContextPtr& target = images.front().context();
  // powers are cached per variable since the same ones recur
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };
  MultiPoly r(target);
  for (const auto& [m, c] : p.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) t = t * power(i, m[i]);
    r = r + t;
  }
  return r;
}

MultiPoly rename(const MultiPoly& p, const ContextPtr& target, const std::vector<std::size_t>& mapping) {
  if (mapping.size() != p.arity()) throw DimensionMismatch("rename: one target index per variable expected");
  MultiPoly r(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial out(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] != 0) out.at(mapping[i]) += m[i];
    r.add_term(out, c);
  }
  return r;
}

MultiPoly remove_variable(const MultiPoly& p, std::size_t var, const ContextPtr& target) {
  if (target->size() + 1 != p.arity()) throw DimensionMismatch("remove_variable: target ring must have one variable less");
  if (p.involves(var)) throw Error("remove_variable: variable " + p.context()->name(var) + " still occurs");
  std::vector<std::size_t> mapping(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) mapping[i] = i < var ? i : (i == var ? 0 : i - 1);
  return rename(p, target, mapping);
}

std::vector<Monomial> monomials_of_degree(std::size_t arity, const std::vector<std::size_t>& vars, unsigned d) {
  std::vector<Monomial> out;
  Monomial cur(arity, 0);
  auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
    if (k + 1 == vars.size()) {
      cur[vars[k]] = left;
      out.push_back(cur);
      cur[vars[k]] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[vars[k]] = e;
      self(self, k + 1, left - e);
    }
    cur[vars[k]] = 0;
  };
  if (vars.empty()) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

// ---------------------------------------------------------------------------
// Random coefficients

Rat SeededRng::small_rational() {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 3);
  int p = num(engine_);
  int q = den(engine_);
  Rat r(p, q);
  r.canonicalize();
  return r;
}

long SeededRng::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

Rat SeededRng::nonzero_small_rational() {
  std::uniform_int_distribution<int> num(1, 9), den(1, 3), sign(0, 1);
  int p = num(engine_);
  int q = den(engine_);
  if (sign(engine_)) p = -p;
  Rat r(p, q);
  r.canonicalize();
  return r;
}

const MultiPoly& CoefficientAssignment::form(const std::string& name) const {
  auto it = forms.find(name);
  if (it == forms.end()) throw Error("no coefficient form named " + name + " for " + type_symbol(type));
  return it->second;
}

namespace {

std::vector<std::size_t> first_vars(std::size_t k) {
  std::vector<std::size_t> v(k);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

Monomial mono(std::size_t arity, std::initializer_list<std::pair<std::size_t, unsigned>> factors) {
  Monomial m(arity, 0);
  for (auto [i, e] : factors) m.at(i) += e;
  return m;
}

struct FormRules {
  std::set<Monomial> zero;
  std::set<Monomial> nonzero;
};

MultiPoly draw_form(SeededRng& rng, const ContextPtr& ring, const std::vector<std::size_t>& vars, unsigned degree,
                    const FormRules& rules = {}) {
  MultiPoly p(ring);
  for (const Monomial& m : monomials_of_degree(ring->size(), vars, degree)) {
    if (rules.zero.contains(m)) continue;
    p.add_term(m, rules.nonzero.contains(m) ? rng.nonzero_small_rational() : rng.small_rational());
  }
  return p;
}

// c (T_{n+1} - r1 T_{n+2})(T_{n+1} - r2 T_{n+2}) plus random terms meeting T1..Tn.
MultiPoly split_quadric(SeededRng& rng, const ContextPtr& ring, int n) {
  const std::size_t u = n, v = n + 1;
  Rat c = rng.nonzero_small_rational();
  Rat r1 = rng.nonzero_small_rational();
  Rat r2 = rng.nonzero_small_rational();
  while (r2 == r1) r2 = rng.nonzero_small_rational();
  MultiPoly tu = MultiPoly::variable(ring, u), tv = MultiPoly::variable(ring, v);
  MultiPoly p = (tu - tv * r1) * (tu - tv * r2) * c;
  for (const Monomial& m : monomials_of_degree(ring->size(), first_vars(n + 2), 2)) {
    if (m[u] + m[v] == 2) continue;
    p.add_term(m, rng.small_rational());
  }
  return p;
}

}  // namespace

CoefficientAssignment random_admissible(VarietyType type, int n, std::uint64_t seed) {
  if (n < 3) throw Error("random_admissible: n must be at least 3");
  CoefficientAssignment a;
  a.type = type;
  a.n = n;
  a.seed = seed;
  a.ring = VariableContext::t_only(n + 2);
  const std::size_t arity = n + 2;
  // 0-based indices of T_n, T_{n+1}, T_{n+2}
  const std::size_t tn = n - 1, tn1 = n, tn2 = n + 1;
  SeededRng rng(seed);
  const auto& R = a.ring;

  switch (type) {
    case VarietyType::X3:
      a.forms.emplace("a'", draw_form(rng, R, first_vars(n + 1), 2));
      a.forms.emplace("a1", draw_form(rng, R, first_vars(n + 2), 1));
      a.forms.emplace("b'", draw_form(rng, R, first_vars(n), 2, {{mono(arity, {{tn, 2}})}, {}}));
      a.forms.emplace("b1", draw_form(rng, R, first_vars(n), 3, {{}, {mono(arity, {{tn, 3}})}}));
      break;
    case VarietyType::XS:
      a.forms.emplace("a2", draw_form(rng, R, first_vars(n + 2), 2));
      a.forms.emplace("b2", draw_form(rng, R, first_vars(n), 3, {{}, {mono(arity, {{tn, 3}})}}));
      break;
    case VarietyType::XS2: {
      FormRules rules;
      rules.zero.insert(mono(arity, {{tn1, 2}}));
      rules.zero.insert(mono(arity, {{tn1, 1}, {tn2, 1}}));
      for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(n); ++k) rules.zero.insert(mono(arity, {{k, 1}, {tn1, 1}}));
      rules.nonzero.insert(mono(arity, {{tn, 1}, {tn1, 1}}));
      a.forms.emplace("a3", draw_form(rng, R, first_vars(n + 2), 2, rules));
      a.forms.emplace("b3", draw_form(rng, R, first_vars(n), 3));
      a.notes.push_back("a3: coefficients of T_k*T_{n+1} (k<n) set to zero and of T_n*T_{n+1} drawn nonzero, "
                        "so the tangent hyperplane at the double point is T_n = 0");
      break;
    }
    case VarietyType::XSSS:
      a.forms.emplace("a4", draw_form(rng, R, first_vars(n + 2), 1));
      a.forms.emplace("b4", draw_form(rng, R, first_vars(n), 3));
      break;
    case VarietyType::X12:
      a.forms.emplace("a5", draw_form(rng, R, first_vars(n + 2), 2));
      a.forms.emplace("b5", draw_form(rng, R, first_vars(n), 2));
      a.forms.emplace("c5", draw_form(rng, R, first_vars(n), 3));
      break;
    case VarietyType::XS11:
      a.forms.emplace("a6", split_quadric(rng, R, n));
      a.forms.emplace("b6", draw_form(rng, R, first_vars(n), 3));
      a.notes.push_back("a6 restricted to the line is drawn as a product of two distinct rational linear factors");
      break;
    case VarietyType::X111:
      a.forms.emplace("a7", split_quadric(rng, R, n));
      a.forms.emplace("b7", draw_form(rng, R, first_vars(n), 2));
      a.forms.emplace("c7", draw_form(rng, R, first_vars(n), 3));
      a.notes.push_back("a7 restricted to the line is drawn as a product of two distinct rational linear factors");
      break;
  }
  return a;
}

std::vector<std::string> genericity_violations(const CoefficientAssignment& a) {
  std::vector<std::string> out;
  const std::size_t arity = a.n + 2;
  const std::size_t tn = a.n - 1, tn1 = a.n, tn2 = a.n + 1;
  auto need = [&](const std::string& form, const Monomial& m, const std::string& what) {
    if (a.form(form).coefficient(m) == 0) out.push_back("coefficient of " + what + " in " + form + " is zero");
  };
  auto need_nonzero_form = [&](const std::string& form) {
    if (a.form(form).is_zero()) out.push_back(form + " is the zero polynomial");
  };
  switch (a.type) {
    case VarietyType::X3:
      need("a1", mono(arity, {{tn2, 1}}), "T_{n+2}");
      need_nonzero_form("b'");
      break;
    case VarietyType::XS:
      need("a2", mono(arity, {{tn2, 2}}), "T_{n+2}^2");
      break;
    case VarietyType::XS2:
      need("a3", mono(arity, {{tn2, 2}}), "T_{n+2}^2");
      break;
    case VarietyType::XSSS:
      need("a4", mono(arity, {{tn1, 1}}), "T_{n+1}");
      need("a4", mono(arity, {{tn2, 1}}), "T_{n+2}");
      break;
    case VarietyType::X12:
      need("a5", mono(arity, {{tn2, 2}}), "T_{n+2}^2");
      need("b5", mono(arity, {{tn, 2}}), "T_n^2");
      break;
    case VarietyType::XS11:
      break;
    case VarietyType::X111:
      need_nonzero_form("b7");
      break;
  }
  return out;
}

CoefficientAssignment random_generic(VarietyType type, int n, std::uint64_t seed, int max_attempts) {
  std::vector<std::string> skipped;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    CoefficientAssignment a = random_admissible(type, n, s);
    auto bad = genericity_violations(a);
    if (bad.empty()) {
      for (auto& note : skipped) a.notes.push_back(std::move(note));
      return a;
    }
    skipped.push_back("seed " + std::to_string(s) + " skipped: " + bad.front());
  }
  throw DegenerateCoefficients("no generic coefficients for " + type_symbol(type) + " within " +
                               std::to_string(max_attempts) + " seeds from " + std::to_string(seed));
}

CoefficientAssignment drop_first_variable(const CoefficientAssignment& a) {
  if (a.n <= 3) throw Error("drop_first_variable: n must exceed 3");
  CoefficientAssignment out;
  out.type = a.type;
  out.n = a.n - 1;
  out.seed = a.seed;
  out.ring = VariableContext::t_only(out.n + 2);
  out.notes = a.notes;
  std::set<std::size_t> keep;
  for (std::size_t i = 1; i < a.ring->size(); ++i) keep.insert(i);
  for (const auto& [name, f] : a.forms)
    out.forms.emplace(name, remove_variable(restrict_variables(f, keep), 0, out.ring));
  return out;
}

}  // namespace ellcox
