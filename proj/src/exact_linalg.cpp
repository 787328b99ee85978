#include "ellcox/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "ellcox/errors.hpp"

namespace ellcox {

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot: length mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

Int content(const IntVector& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  return g;
}

IntVector primitive(IntVector v) {
  Int g = content(v);
  if (g > 1) {
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }
  return v;
}

IntVector primitive_integer(const RatVector& v) {
  Int l = 1;
  for (const Rat& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    Rat scaled = x * l;
    out.push_back(scaled.get_num());
  }
  return primitive(std::move(out));
}

RatVector to_rational(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (const Int& x : v) out.emplace_back(x);
  return out;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DimensionMismatch("IntMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t height) {
  IntMatrix m(height, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != height) throw DimensionMismatch("IntMatrix::from_columns: bad column length");
    for (std::size_t r = 0; r < height; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Int& IntMatrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return (*this)(r, c);
}

const Int& IntMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("IntMatrix::at");
  return (*this)(r, c);
}

IntVector IntMatrix::row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("IntMatrix::row");
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  if (c >= cols_) throw std::out_of_range("IntMatrix::column");
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::columns() const {
  std::vector<IntVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("IntMatrix product: inner dimensions differ");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("IntMatrix * vector: length mismatch");
  IntVector out(rows_, Int(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && (*this)(r, c) != 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix IntMatrix::without_column(std::size_t drop) const {
  if (drop >= cols_) throw std::out_of_range("IntMatrix::without_column");
  IntMatrix out(rows_, cols_ - 1);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0, k = 0; c < cols_; ++c)
      if (c != drop) out(r, k++) = (*this)(r, c);
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << (*this)(r, c);
    }
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Determinant, rank, echelon forms

Int determinant(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant: matrix is not square");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<RatVector> rref(const std::vector<RatVector>& rows, std::size_t width) {
  std::vector<RatVector> m = rows;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < width && lead_row < m.size(); ++col) {
    std::size_t pivot = lead_row;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[lead_row]);
    Rat inv = 1 / m[lead_row][col];
    for (Rat& x : m[lead_row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == lead_row || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t c = 0; c < width; ++c) m[r][c] -= f * m[lead_row][c];
    }
    ++lead_row;
  }
  m.resize(lead_row);
  return m;
}

std::vector<IntVector> canonical_basis(const std::vector<IntVector>& rows, std::size_t width) {
  std::vector<RatVector> rat;
  rat.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != width) throw DimensionMismatch("canonical_basis: row length");
    rat.push_back(to_rational(r));
  }
  std::vector<IntVector> out;
  for (const auto& r : rref(rat, width)) out.push_back(primitive_integer(r));
  return out;
}

std::size_t rank(const std::vector<IntVector>& rows, std::size_t width) {
  if (rows.empty()) return 0;
  // Fraction-free elimination on a copy.
  std::vector<IntVector> m = rows;
  std::size_t r = 0;
  for (std::size_t col = 0; col < width && r < m.size(); ++col) {
    std::size_t pivot = r;
    while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][col] == 0) continue;
      Int a = m[r][col];
      Int b = m[i][col];
      for (std::size_t c = col; c < width; ++c) m[i][c] = m[i][c] * a - m[r][c] * b;
      m[i] = primitive(std::move(m[i]));
    }
    ++r;
  }
  return r;
}

std::size_t rank(const IntMatrix& a) {
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back(a.row(r));
  return rank(rows, a.cols());
}

std::optional<RatVector> solve(const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw DimensionMismatch("solve: rhs length");
  std::vector<RatVector> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("solve: matrix is not square");
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  RatVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = m[i][n] / m[i][i];
  return x;
}

IntVector project_orthogonal(const IntVector& v, const std::vector<IntVector>& basis) {
  if (basis.empty()) return primitive(v);
  const std::size_t k = basis.size();
  std::vector<RatVector> gram(k, RatVector(k));
  RatVector rhs(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) gram[i][j] = Rat(dot(basis[i], basis[j]));
    rhs[i] = Rat(dot(basis[i], v));
  }
  auto coeffs = solve(gram, rhs);
  if (!coeffs) throw Error("project_orthogonal: basis is linearly dependent");
  RatVector out = to_rational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < out.size(); ++c) out[c] -= (*coeffs)[i] * Rat(basis[i][c]);
  return primitive_integer(out);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

std::optional<Pivot> find_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Pivot> best;
  Int best_abs;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      if (d(r, c) == 0) continue;
      Int a = abs(d(r, c));
      if (!best || a < best_abs) {
        best = Pivot{r, c};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw Error("smith_normal_form: empty matrix");
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t steps = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    bool exhausted = false;
    while (true) {
      auto piv = find_pivot(d, t);
      if (!piv) {
        exhausted = true;
        break;
      }
      d.swap_rows(t, piv->row);
      u.swap_rows(t, piv->row);
      d.swap_cols(t, piv->col);
      v.swap_cols(t, piv->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);  // truncating division
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide the remaining block.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < d.rows() && !offender; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (d(i, j) % d(t, t) != 0) {
            offender = i;
            break;
          }
      if (!offender) break;
      d.add_row_multiple(t, *offender, 1);
      u.add_row_multiple(t, *offender, 1);
    }
    if (exhausted) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

// ---------------------------------------------------------------------------
// Abelian quotients

std::string GroupInvariants::to_string() const {
  std::vector<std::string> parts;
  if (rank == 1) parts.emplace_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  for (const Int& t : torsion) parts.push_back("Z/" + t.get_str() + "Z");
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

GroupInvariants abelian_quotient(std::size_t ambient_rank, const std::vector<IntVector>& relations) {
  if (ambient_rank == 0) throw Error("abelian_quotient: ambient rank must be positive");
  for (const auto& r : relations)
    if (r.size() != ambient_rank) throw DimensionMismatch("abelian_quotient: relation length differs from ambient rank");
  GroupInvariants g;
  if (relations.empty()) {
    g.rank = ambient_rank;
    return g;
  }
  SNFResult snf = smith_normal_form(IntMatrix::from_rows(relations));
  std::size_t nonzero = 0;
  const std::size_t diag = std::min(snf.D.rows(), snf.D.cols());
  for (std::size_t i = 0; i < diag; ++i) {
    const Int& di = snf.D(i, i);
    if (di == 0) continue;
    ++nonzero;
    if (di > 1) g.torsion.push_back(di);
  }
  g.rank = ambient_rank - nonzero;
  return g;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin feasibility

namespace {

// a . x >= b
struct Constraint {
  RatVector a;
  Rat b;
  bool operator<(const Constraint& o) const {
    if (a != o.a) return a < o.a;
    return b < o.b;
  }
  bool operator==(const Constraint& o) const = default;
};

// Scales so the last nonzero coefficient has absolute value one, keeping the direction.
Constraint normalized(Constraint c) {
  for (std::size_t i = c.a.size(); i-- > 0;) {
    if (c.a[i] != 0) {
      Rat s = abs(c.a[i]);
      for (Rat& x : c.a) x /= s;
      c.b /= s;
      break;
    }
  }
  return c;
}

std::vector<Constraint> deduplicate(std::vector<Constraint> cs) {
  for (auto& c : cs) c = normalized(std::move(c));
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return cs;
}

}  // namespace

std::optional<RatVector> strict_positive_functional(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) throw Error("strict_positive_functional: no vectors given");
  const std::size_t d = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != d) throw DimensionMismatch("strict_positive_functional: vectors differ in length");
  if (d > 8) throw TooManyVariables("strict_positive_functional: at most 8 coordinates supported, got " + std::to_string(d));

  // phi . v > 0 for all v is equivalent (by scaling) to phi . v >= 1.
  std::vector<Constraint> current;
  for (const auto& v : vectors) current.push_back({to_rational(v), Rat(1)});
  current = deduplicate(std::move(current));

  // stages[k] holds the system in the variables 0 .. d-1-k.
  std::vector<std::vector<Constraint>> stages;
  for (std::size_t var = d; var-- > 0;) {
    stages.push_back(current);
    std::vector<Constraint> pos, neg, next;
    for (const auto& c : current) {
      if (c.a[var] > 0)
        pos.push_back(c);
      else if (c.a[var] < 0)
        neg.push_back(c);
      else
        next.push_back(c);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        Rat sp = 1 / p.a[var];
        Rat sq = -1 / q.a[var];
        Constraint comb{RatVector(d), p.b * sp + q.b * sq};
        for (std::size_t i = 0; i < d; ++i) comb.a[i] = p.a[i] * sp + q.a[i] * sq;
        comb.a[var] = 0;
        next.push_back(std::move(comb));
      }
    current = deduplicate(std::move(next));
  }
  for (const auto& c : current)
    if (c.b > 0) return std::nullopt;  // 0 >= b violated

  RatVector x(d, Rat(0));
  for (std::size_t var = 0; var < d; ++var) {
    const auto& system = stages[d - 1 - var];
    std::optional<Rat> lo, hi;
    for (const auto& c : system) {
      if (c.a[var] == 0) continue;
      Rat rest = c.b;
      for (std::size_t j = 0; j < var; ++j) rest -= c.a[j] * x[j];
      Rat bound = rest / c.a[var];
      if (c.a[var] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    Rat value = 0;
    if (lo && hi) {
      Int up;
      mpz_cdiv_q(up.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      value = (Rat(up) <= *hi) ? Rat(up) : *lo;
    } else if (lo) {
      Int up;
      mpz_cdiv_q(up.get_mpz_t(), lo->get_num_mpz_t(), lo->get_den_mpz_t());
      value = Rat(up);
    } else if (hi) {
      Int down;
      mpz_fdiv_q(down.get_mpz_t(), hi->get_num_mpz_t(), hi->get_den_mpz_t());
      value = Rat(down);
    }
    x[var] = value;
  }
  return x;
}

}  // namespace ellcox
