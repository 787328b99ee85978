#include "ellcox/classify.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "ellcox/errors.hpp"

namespace ellcox {

namespace {

// Univariate polynomials over Q, coefficient of t^i at index i, no trailing zeros.
using Upoly = std::vector<Rat>;

void trim(Upoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Upoly& p) { return static_cast<int>(p.size()) - 1; }

Upoly derivative(const Upoly& p) {
  Upoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

Upoly sub(Upoly a, const Upoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// (quotient, remainder)
std::pair<Upoly, Upoly> divmod(Upoly a, const Upoly& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  Upoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const Rat c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    trim(a);
  }
  trim(q);
  return {q, a};
}

Upoly monic(Upoly p) {
  const Rat lead = p.back();
  for (Rat& c : p) c /= lead;
  return p;
}

Upoly gcd(Upoly a, Upoly b) {
  while (!b.empty()) {
    Upoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : monic(a);
}

Upoly exact_div(const Upoly& a, const Upoly& b) { return divmod(a, b).first; }

// Yun's square-free decomposition: factors[i] has the roots of multiplicity i + 1.
std::vector<Upoly> squarefree(const Upoly& h) {
  std::vector<Upoly> factors;
  if (degree(h) < 1) return factors;
  Upoly b = derivative(h);
  Upoly c = gcd(h, b);
  Upoly w = exact_div(h, c);
  Upoly y = exact_div(b, c);
  Upoly z = sub(y, derivative(w));
  while (degree(w) > 0) {
    Upoly g = gcd(w, z);
    factors.push_back(g);
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = sub(y, derivative(w));
  }
  return factors;
}

std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<Int> out;
  for (Int d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  return out;
}

Rat eval(const Upoly& p, const Rat& t) {
  Rat r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * t + *it;
  return r;
}

std::optional<Rat> rational_sqrt(const Rat& x) {
  if (x < 0) return std::nullopt;
  Int num = x.get_num(), den = x.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0 || mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

// Roots of a square-free polynomial of degree <= 3; nullopt if some root is irrational.
std::optional<std::vector<Rat>> rational_roots(Upoly p) {
  std::vector<Rat> roots;
  p = monic(p);
  if (degree(p) == 3) {
    // Rational root theorem on the integer multiple.
    Int l = 1;
    for (const Rat& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> ip;
    for (const Rat& c : p) ip.push_back(Int(c * l));
    std::optional<Rat> found;
    if (ip[0] == 0) {
      found = Rat(0);
    } else {
      for (const Int& a : divisors(ip[0])) {
        for (const Int& b : divisors(ip[3])) {
          for (int s : {1, -1}) {
            Rat t(a * s, b);
            t.canonicalize();
            if (eval(p, t) == 0) found = t;
          }
          if (found) break;
        }
        if (found) break;
      }
    }
    if (!found) return std::nullopt;
    roots.push_back(*found);
    p = exact_div(p, Upoly{-*found, Rat(1)});
  }
  if (degree(p) == 2) {
    auto s = rational_sqrt(p[1] * p[1] - 4 * p[0]);
    if (!s) return std::nullopt;
    roots.push_back((-p[1] + *s) / 2);
    roots.push_back((-p[1] - *s) / 2);
  } else if (degree(p) == 1) {
    roots.push_back(-p[0]);
  }
  return roots;
}

RatVector gradient_at(const MultiPoly& f, const RatVector& p) {
  RatVector g;
  for (std::size_t i = 0; i < f.arity(); ++i) g.push_back(f.derivative(i).evaluate(p));
  return g;
}

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

void require_on(const CubicHypersurface& y, const RatVector& p) {
  if (p.size() != y.ambient_vars()) throw DimensionMismatch("point has the wrong number of coordinates");
  if (is_zero_vector(p)) throw Error("the zero vector is not a projective point");
  if (y.f.evaluate(p) != 0) throw PointNotOnHypersurface("point " + point_to_string(p) + " is not on Y");
}

Rat parse_rational(std::string s, std::size_t offset) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw ParseError("empty coordinate", offset);
  Rat r;
  if (r.set_str(s, 10) != 0 || r.get_den() == 0) throw ParseError("not a rational number: " + s, offset);
  r.canonicalize();
  return r;
}

}  // namespace

CubicHypersurface::CubicHypersurface(MultiPoly poly) : f(std::move(poly)) {
  if (f.is_zero()) throw Error("cubic hypersurface: zero polynomial");
  if (!f.is_form() || f.total_degree() != 3) throw Error("cubic hypersurface: polynomial is not a cubic form");
}

ProjLine::ProjLine(RatVector a, RatVector b) : p(std::move(a)), q(std::move(b)) {
  if (p.size() != q.size()) throw DimensionMismatch("line: points of different lengths");
  if (rref({p, q}, p.size()).size() != 2) throw Error("line: points are proportional");
}

RatVector ProjLine::at(const Rat& u, const Rat& v) const {
  RatVector r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = u * p[i] + v * q[i];
  return r;
}

RatVector normalize_point(RatVector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Rat& x) { return x != 0; });
  if (it == v.end()) return v;
  const Rat lead = *it;
  for (Rat& x : v) x /= lead;
  return v;
}

std::string point_to_string(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ":" : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::vector<IntersectionRecord> line_intersection(const CubicHypersurface& y, const ProjLine& l) {
  if (l.p.size() != y.ambient_vars()) throw DimensionMismatch("line and hypersurface live in different spaces");
  ContextPtr uv = VariableContext::projective(2, "u");
  MultiPoly u = MultiPoly::variable(uv, 0), v = MultiPoly::variable(uv, 1);
  std::vector<MultiPoly> images;
  for (std::size_t i = 0; i < l.p.size(); ++i) images.push_back(u * l.p[i] + v * l.q[i]);
  MultiPoly g = substitute(y.f, images);
  if (g.is_zero()) throw LineContainedInY("the line lies on Y");

  // h(t) = g(t, 1); the point u P (v = 0) absorbs the missing degree.
  Upoly h(4, Rat(0));
  for (const auto& [m, c] : g.terms()) h[m[0]] = c;
  trim(h);

  std::vector<IntersectionRecord> out;
  if (degree(h) < 3) out.push_back({normalize_point(l.p), 3 - degree(h)});
  const auto factors = squarefree(h);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (degree(factors[i]) < 1) continue;
    auto roots = rational_roots(factors[i]);
    if (!roots) throw IrrationalIntersection("L meets Y in points that are not rational");
    for (const Rat& t : *roots) out.push_back({normalize_point(l.at(t, 1)), static_cast<int>(i + 1)});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.multiplicity > b.multiplicity; });
  return out;
}

bool is_smooth_at(const CubicHypersurface& y, const RatVector& p) {
  require_on(y, p);
  return !is_zero_vector(gradient_at(y.f, p));
}

LocalForm local_form(const CubicHypersurface& y, const RatVector& p) {
  require_on(y, p);
  const RatVector h = gradient_at(y.f, p);
  if (is_zero_vector(h)) throw SingularPoint("Y is singular at " + point_to_string(p));
  const std::size_t dim = p.size();
  std::size_t k = dim;
  for (std::size_t i = 0; i < dim; ++i)
    if (h[i] != 0) k = i;

  // Tangent directions h_k e_i - h_i e_k, taken greedily while independent of p.
  std::vector<RatVector> chosen;
  std::vector<RatVector> span{p};
  for (std::size_t i = 0; i < dim && chosen.size() + 2 < dim; ++i) {
    if (i == k) continue;
    RatVector d(dim, Rat(0));
    d[i] = h[k];
    d[k] -= h[i];
    span.push_back(d);
    if (rref(span, dim).size() == span.size()) {
      chosen.push_back(d);
    } else {
      span.pop_back();
    }
  }
  RatVector ek(dim, Rat(0));
  ek[k] = 1;
  chosen.push_back(ek);
  chosen.push_back(p);

  ContextPtr yctx = VariableContext::projective(dim, "y");
  std::vector<MultiPoly> images(dim, MultiPoly(yctx));
  for (std::size_t j = 0; j < dim; ++j) {
    MultiPoly yj = MultiPoly::variable(yctx, j);
    for (std::size_t i = 0; i < dim; ++i)
      if (chosen[j][i] != 0) images[i] = images[i] + yj * chosen[j][i];
  }
  MultiPoly g = substitute(y.f, images);

  LocalForm lf{chosen, MultiPoly(yctx), MultiPoly(yctx), MultiPoly(yctx)};
  const std::size_t t = dim - 2, last = dim - 1;
  for (const auto& [m, c] : g.terms()) {
    Monomial r = m;
    if (m[t] > 0) {
      --r[t];
      lf.a.add_term(r, c);
    } else if (m[last] == 1) {
      r[last] = 0;
      lf.b.add_term(r, c);
    } else if (m[last] == 0) {
      lf.c.add_term(r, c);
    } else {
      throw Error("local_form: tangent hyperplane not in the expected position");
    }
  }
  return lf;
}

bool is_star_point(const CubicHypersurface& y, const RatVector& p) { return local_form(y, p).b.is_zero(); }

Classification classify(const CubicHypersurface& y, const ProjLine& l) {
  Classification out;
  out.records = line_intersection(y, l);
  int stars = 0;
  for (auto& r : out.records) {
    r.smooth = is_smooth_at(y, r.point);
    if (!r.smooth) throw SingularPoint("Y is singular at the intersection point " + point_to_string(r.point));
    r.is_star = is_star_point(y, r.point);
    stars += r.is_star;
  }
  out.notes.push_back("smoothness of Y is checked at the points of L meeting Y only");

  const auto& rec = out.records;
  std::string pattern;
  for (const auto& r : rec) pattern += std::to_string(r.multiplicity);
  if (rec.size() == 1) {
    out.type = rec[0].is_star ? VarietyType::XS : VarietyType::X3;
  } else if (rec.size() == 2) {
    out.notes.push_back(
        "pattern (2,1): a star point at the simple intersection and none at the tangency gives X_S2, "
        "no star point gives X_12; this mapping is read off the normal forms");
    if (!rec[0].is_star && rec[1].is_star) {
      out.type = VarietyType::XS2;
    } else if (stars == 0) {
      out.type = VarietyType::X12;
    } else {
      throw InconsistentStarPattern("pattern (2,1) with a star point at the tangency point");
    }
  } else {
    if (stars == 2) throw InconsistentStarPattern("two of three collinear intersection points are star points");
    out.type = stars == 0 ? VarietyType::X111 : stars == 1 ? VarietyType::XS11 : VarietyType::XSSS;
  }
  return out;
}

NormalFormInstance normal_form(VarietyType t, int n, std::uint64_t seed) {
  CoefficientAssignment a = random_generic(t, n, seed);
  const ContextPtr& R = a.ring;
  const MultiPoly tn1 = MultiPoly::variable(R, n), tn2 = MultiPoly::variable(R, n + 1);
  MultiPoly f(R);
  switch (t) {
    case VarietyType::X3:
      f = tn1 * (a.form("a'") + tn2 * a.form("a1")) + tn2 * a.form("b'") + a.form("b1");
      break;
    case VarietyType::XS:
      f = tn1 * a.form("a2") + a.form("b2");
      break;
    case VarietyType::XS2:
      f = tn1 * a.form("a3") + a.form("b3");
      break;
    case VarietyType::XSSS:
      f = tn1 * tn2 * a.form("a4") + a.form("b4");
      break;
    case VarietyType::X12:
      f = tn1 * a.form("a5") + tn2 * a.form("b5") + a.form("c5");
      break;
    case VarietyType::XS11:
      f = tn1 * a.form("a6") + a.form("b6");
      break;
    case VarietyType::X111:
      f = tn1 * a.form("a7") + tn2 * a.form("b7") + a.form("c7");
      break;
  }
  ContextPtr x = VariableContext::projective(n + 2);
  std::vector<std::size_t> same(n + 2);
  for (std::size_t i = 0; i < same.size(); ++i) same[i] = i;
  f = rename(f, x, same);

  // X_3, X_S, X_12: T1 = ... = T_{n-1} = T_{n+1} = 0; the others: T1 = ... = T_n = 0.
  const bool first = t == VarietyType::X3 || t == VarietyType::XS || t == VarietyType::X12;
  RatVector p(n + 2, Rat(0)), q(n + 2, Rat(0));
  p[first ? n - 1 : n] = 1;
  q[n + 1] = 1;
  return {CubicHypersurface(std::move(f)), ProjLine(std::move(p), std::move(q)), std::move(a)};
}

ClassifierInput parse_classifier_input(std::string_view text) {
  std::optional<int> n;
  std::optional<std::string> cubic, line;
  std::size_t cubic_at = 0, line_at = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string raw(text.substr(pos, end - pos));
    const std::size_t start = pos;
    pos = end + 1;
    std::size_t b = raw.find_first_not_of(" \t\r");
    if (b == std::string::npos || raw[b] == '#') continue;
    std::string s = raw.substr(b);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    auto rest = [&](std::size_t prefix) { return s.substr(prefix); };
    if (s.rfind("n", 0) == 0 && s.find('=') != std::string::npos && !n) {
      std::string v = s.substr(s.find('=') + 1);
      try {
        std::size_t used = 0;
        int value = std::stoi(v, &used);
        if (v.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("trailing");
        n = value;
      } catch (const std::exception&) {
        throw ParseError("n must be an integer", start + b);
      }
    } else if (s.rfind("cubic:", 0) == 0) {
      cubic = rest(6);
      cubic_at = start + b + 6;
    } else if (s.rfind("line:", 0) == 0) {
      line = rest(5);
      line_at = start + b + 5;
    } else {
      throw ParseError("expected 'n =', 'cubic:' or 'line:'", start + b);
    }
  }
  if (!n) throw ParseError("missing 'n = <int>' line", 0);
  if (*n < 3) throw ParseError("n must be at least 3", 0);
  if (!cubic) throw ParseError("missing 'cubic:' line", text.size());
  if (!line) throw ParseError("missing 'line:' line", text.size());

  ContextPtr x = VariableContext::projective(*n + 2);
  MultiPoly f(x);
  try {
    f = parse_poly(*cubic, x);
  } catch (const ParseError& e) {
    throw ParseError(std::string("cubic: ") + e.what(), cubic_at + e.position());
  }
  if (f.is_zero() || !f.is_form() || f.total_degree() != 3) throw ParseError("cubic: not a cubic form", cubic_at);

  const std::size_t semi = line->find(';');
  if (semi == std::string::npos) throw ParseError("line: expected '<point> ; <point>'", line_at);
  auto parse_point = [&](const std::string& s, std::size_t offset) {
    RatVector pt;
    std::size_t from = 0;
    while (true) {
      std::size_t comma = s.find(',', from);
      pt.push_back(parse_rational(s.substr(from, comma == std::string::npos ? std::string::npos : comma - from), offset + from));
      if (comma == std::string::npos) break;
      from = comma + 1;
    }
    if (pt.size() != static_cast<std::size_t>(*n + 2))
      throw ParseError("line: a point needs " + std::to_string(*n + 2) + " coordinates", offset);
    return pt;
  };
  RatVector p = parse_point(line->substr(0, semi), line_at);
  RatVector q = parse_point(line->substr(semi + 1), line_at + semi + 1);
  if (rref({p, q}, p.size()).size() != 2) throw ParseError("line: the two points are proportional", line_at);
  return {*n, CubicHypersurface(std::move(f)), ProjLine(std::move(p), std::move(q))};
}

std::string format_classifier_input(int n, const CubicHypersurface& y, const ProjLine& l) {
  auto point = [](const RatVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
    return s;
  };
  return "n = " + std::to_string(n) + "\ncubic: " + y.f.to_string() + "\nline: " + point(l.p) + " ; " + point(l.q) + "\n";
}

}  // namespace ellcox
