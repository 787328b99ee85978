#include "ellcox/cones.hpp"

#include <algorithm>
#include <sstream>

#include "ellcox/errors.hpp"

namespace ellcox {

namespace {

IntVector unit_vector(std::size_t dim, std::size_t i) {
  IntVector e(dim, Int(0));
  e[i] = 1;
  return e;
}

IntVector combine(const Int& s, const IntVector& x, const Int& t, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] - t * y[i];
  return primitive(std::move(out));
}

IntVector negated(IntVector v) {
  for (Int& x : v) x = -x;
  return v;
}

void check_dim(std::size_t dim, const std::vector<IntVector>& vs, const char* where) {
  for (const auto& v : vs)
    if (v.size() != dim) throw DimensionMismatch(std::string(where) + ": vector length differs from ambient dimension");
}

// Canonical form of a set of directions modulo a subspace.
std::vector<IntVector> canonical_directions(const std::vector<IntVector>& vs, const std::vector<IntVector>& modulo) {
  std::vector<IntVector> out;
  for (const auto& v : vs) {
    IntVector p = project_orthogonal(v, modulo);
    if (!is_zero(p)) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

GeneratorSet solve_inequalities(std::size_t dim, const std::vector<IntVector>& rows) {
  check_dim(dim, rows, "solve_inequalities");
  GeneratorSet g;
  for (std::size_t i = 0; i < dim; ++i) g.lineality.push_back(unit_vector(dim, i));

  std::vector<IntVector> processed;
  for (const IntVector& a : rows) {
    if (is_zero(a)) continue;

    // Case 1: the inequality cuts the lineality space.
    auto it = std::find_if(g.lineality.begin(), g.lineality.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
    if (it != g.lineality.end()) {
      IntVector l0 = *it;
      g.lineality.erase(it);
      Int al0 = dot(a, l0);
      if (al0 < 0) {
        l0 = negated(std::move(l0));
        al0 = -al0;
      }
      for (auto& l : g.lineality) l = combine(al0, l, dot(a, l), l0);
      for (auto& r : g.rays) r = combine(al0, r, dot(a, r), l0);
      g.rays.push_back(primitive(l0));
      processed.push_back(a);
      continue;
    }

    // Case 2: lineality lies in the hyperplane; double description step.
    const std::size_t prev_rank = rank(processed, dim);
    std::vector<IntVector> pos, neg, next;
    std::vector<Int> pos_val, neg_val;
    for (auto& r : g.rays) {
      Int v = dot(a, r);
      if (v > 0) {
        pos.push_back(r);
        pos_val.push_back(v);
      } else if (v < 0) {
        neg.push_back(r);
        neg_val.push_back(v);
      } else {
        next.push_back(r);
      }
    }
    for (std::size_t i = 0; i < pos.size(); ++i) {
      for (std::size_t j = 0; j < neg.size(); ++j) {
        // Algebraic adjacency: the common tight constraints cut out a 2-face.
        std::vector<IntVector> tight;
        for (const auto& c : processed)
          if (dot(c, pos[i]) == 0 && dot(c, neg[j]) == 0) tight.push_back(c);
        if (prev_rank < 2 || rank(tight, dim) != prev_rank - 2) continue;
        next.push_back(combine(pos_val[i], neg[j], neg_val[j], pos[i]));
      }
    }
    next.insert(next.end(), pos.begin(), pos.end());
    g.rays = std::move(next);
    processed.push_back(a);
  }
  return g;
}

Cone::Cone(std::size_t ambient_dim, GeneratorSet primal, GeneratorSet dual) : ambient_dim_(ambient_dim) {
  lineality_ = canonical_basis(primal.lineality, ambient_dim);
  equations_ = canonical_basis(dual.lineality, ambient_dim);
  rays_ = canonical_directions(primal.rays, lineality_);
  facets_ = canonical_directions(dual.rays, equations_);
}

Cone Cone::from_generators(std::size_t ambient_dim, const std::vector<IntVector>& generators) {
  if (ambient_dim == 0) throw Error("Cone: ambient dimension must be positive");
  check_dim(ambient_dim, generators, "Cone::from_generators");
  GeneratorSet dual_set = solve_inequalities(ambient_dim, generators);
  std::vector<IntVector> rows = dual_set.rays;
  for (const auto& l : dual_set.lineality) {
    rows.push_back(l);
    rows.push_back(negated(l));
  }
  GeneratorSet primal = solve_inequalities(ambient_dim, rows);
  return Cone(ambient_dim, std::move(primal), std::move(dual_set));
}

Cone Cone::from_inequalities(std::size_t ambient_dim, const std::vector<IntVector>& normals,
                             const std::vector<IntVector>& equations) {
  if (ambient_dim == 0) throw Error("Cone: ambient dimension must be positive");
  check_dim(ambient_dim, normals, "Cone::from_inequalities");
  check_dim(ambient_dim, equations, "Cone::from_inequalities");
  std::vector<IntVector> rows = normals;
  for (const auto& e : equations) {
    rows.push_back(e);
    rows.push_back(negated(e));
  }
  GeneratorSet primal = solve_inequalities(ambient_dim, rows);
  std::vector<IntVector> gens = primal.rays;
  for (const auto& l : primal.lineality) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  GeneratorSet dual_set = solve_inequalities(ambient_dim, gens);
  return Cone(ambient_dim, std::move(primal), std::move(dual_set));
}

std::vector<IntVector> Cone::generators() const {
  std::vector<IntVector> gens = rays_;
  for (const auto& l : lineality_) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  return gens;
}

bool Cone::contains(const IntVector& v, Containment mode) const {
  if (v.size() != ambient_dim_) throw DimensionMismatch("Cone::contains: vector length differs from ambient dimension");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_) {
    Int value = dot(f, v);
    if (value < 0) return false;
    if (mode == Containment::RelativeInterior && value == 0) return false;
  }
  return true;
}

bool Cone::contains(const Cone& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionMismatch("Cone::contains: ambient dimensions differ");
  for (const auto& g : other.generators())
    if (!contains(g)) return false;
  return true;
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "cone(";
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    if (i) os << ", ";
    os << ellcox::to_string(rays_[i]);
  }
  os << ')';
  if (!lineality_.empty()) {
    os << " + span(";
    for (std::size_t i = 0; i < lineality_.size(); ++i) {
      if (i) os << ", ";
      os << ellcox::to_string(lineality_[i]);
    }
    os << ')';
  }
  return os.str();
}

Cone dual(const Cone& c) {
  // The dual's generators are the facet normals and +-equations of c.
  std::vector<IntVector> gens = c.facets();
  for (const auto& e : c.equations()) {
    gens.push_back(e);
    gens.push_back(negated(e));
  }
  return Cone::from_generators(c.ambient_dim(), gens);
}

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("intersect: ambient dimensions differ");
  std::vector<IntVector> normals = a.facets();
  normals.insert(normals.end(), b.facets().begin(), b.facets().end());
  std::vector<IntVector> equations = a.equations();
  equations.insert(equations.end(), b.equations().begin(), b.equations().end());
  return Cone::from_inequalities(a.ambient_dim(), normals, equations);
}

bool equals(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  return a.contains(b) && b.contains(a);
}

Cone map(const Cone& c, const IntMatrix& m) {
  if (m.cols() != c.ambient_dim()) throw DimensionMismatch("map: matrix columns differ from the cone's ambient dimension");
  std::vector<IntVector> images;
  for (const auto& g : c.generators()) images.push_back(m * g);
  return Cone::from_generators(m.rows(), images);
}

Cone hull_union(const Cone& a, const Cone& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("hull_union: ambient dimensions differ");
  std::vector<IntVector> gens = a.generators();
  auto more = b.generators();
  gens.insert(gens.end(), more.begin(), more.end());
  return Cone::from_generators(a.ambient_dim(), gens);
}

}  // namespace ellcox
