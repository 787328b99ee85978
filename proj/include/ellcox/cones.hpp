#pragma once

// Rational polyhedral cones with both generator and facet representations.
//
// A cone is L + cone(R) where L is its lineality space. Both representations are
// computed eagerly with the double description method and stored canonically:
//  - lineality and equations as primitive rows of a reduced echelon basis,
//  - rays projected onto the orthogonal complement of L, primitive, sorted,
//  - facets projected onto the linear span of the cone, primitive, sorted.
// The cone is {x : f.x >= 0 for f in facets, e.x = 0 for e in equations}.

#include <cstddef>
#include <string>
#include <vector>

#include "ellcox/exact_linalg.hpp"

namespace ellcox {

enum class Containment {
  Closed,            // all inequalities >= 0
  RelativeInterior,  // strict on every facet, equations hold
};

/// Generators of {y : a.y >= 0 for every row a}: extreme rays modulo the lineality space.
struct GeneratorSet {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};
GeneratorSet solve_inequalities(std::size_t ambient_dim, const std::vector<IntVector>& rows);

class Cone {
 public:
  static Cone from_generators(std::size_t ambient_dim, const std::vector<IntVector>& generators);
  static Cone from_inequalities(std::size_t ambient_dim, const std::vector<IntVector>& normals,
                                const std::vector<IntVector>& equations = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<IntVector>& lineality() const { return lineality_; }
  const std::vector<IntVector>& facets() const { return facets_; }
  const std::vector<IntVector>& equations() const { return equations_; }

  /// rays plus +-lineality; generates the cone.
  std::vector<IntVector> generators() const;
  /// Dimension of the linear span.
  std::size_t dim() const { return ambient_dim_ - equations_.size(); }
  bool is_pointed() const { return lineality_.empty(); }

  bool contains(const IntVector& v, Containment mode = Containment::Closed) const;
  bool contains(const Cone& other) const;

  bool operator==(const Cone& other) const = default;
  std::string to_string() const;

 private:
  Cone(std::size_t ambient_dim, GeneratorSet primal, GeneratorSet dual);

  std::size_t ambient_dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

/// {y : y.x >= 0 for all x in c}.
Cone dual(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);
/// Mutual containment.
bool equals(const Cone& a, const Cone& b);
/// Image of c under v -> m v.
Cone map(const Cone& c, const IntMatrix& m);
/// Cone generated by the generators of both.
Cone hull_union(const Cone& a, const Cone& b);

}  // namespace ellcox
