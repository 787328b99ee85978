#pragma once

// Cubic hypersurfaces with a line: intersection multiplicities, star points and the
// seven-type classification. Points are homogeneous rational coordinate vectors.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ellcox/exact_linalg.hpp"
#include "ellcox/polynom.hpp"
#include "ellcox/variety_type.hpp"

namespace ellcox {

struct CubicHypersurface {
  MultiPoly f;

  /// Checks that f is a nonzero cubic form.
  explicit CubicHypersurface(MultiPoly f);
  std::size_t ambient_vars() const { return f.arity(); }
};

struct ProjLine {
  RatVector p, q;

  /// Throws if the points are proportional or of different lengths.
  ProjLine(RatVector p, RatVector q);
  RatVector at(const Rat& u, const Rat& v) const;
};

struct IntersectionRecord {
  RatVector point;
  int multiplicity = 1;
  bool is_star = false;
  bool smooth = true;
};

/// F(M y) = y_{N-1} a + y_N b + c in the coordinates y = M^{-1} x, with p = (0:...:0:1)
/// and the tangent hyperplane y_{N-1} = 0. b and c do not involve y_{N-1}, y_N.
struct LocalForm {
  std::vector<RatVector> columns;  // columns of M
  MultiPoly a, b, c;
};

/// Scales v so that its first nonzero entry is 1.
RatVector normalize_point(RatVector v);
std::string point_to_string(const RatVector& v);

/// Points of L meet Y with multiplicities; is_star and smooth are left at their defaults.
/// Throws LineContainedInY or IrrationalIntersection.
std::vector<IntersectionRecord> line_intersection(const CubicHypersurface& y, const ProjLine& l);

/// Throws PointNotOnHypersurface when f(p) != 0.
bool is_smooth_at(const CubicHypersurface& y, const RatVector& p);
/// Throws PointNotOnHypersurface or SingularPoint.
LocalForm local_form(const CubicHypersurface& y, const RatVector& p);
bool is_star_point(const CubicHypersurface& y, const RatVector& p);

struct Classification {
  VarietyType type = VarietyType::X111;
  std::vector<IntersectionRecord> records;  // by decreasing multiplicity
  std::vector<std::string> notes;
};

/// Throws SingularPoint, IrrationalIntersection, LineContainedInY or InconsistentStarPattern.
Classification classify(const CubicHypersurface& y, const ProjLine& l);

struct NormalFormInstance {
  CubicHypersurface y;
  ProjLine line;
  CoefficientAssignment coefficients;
};

/// The tabulated equation for the type in x1..x_{n+2}, with coefficients from random_generic.
NormalFormInstance normal_form(VarietyType t, int n, std::uint64_t seed);

struct ClassifierInput {
  int n = 3;
  CubicHypersurface y;
  ProjLine line;
};

/// Three lines: "n = <int>", "cubic: <polynomial in x1..x{n+2}>", "line: <point> ; <point>",
/// points as comma-separated rationals. Blank lines and lines starting with # are skipped.
ClassifierInput parse_classifier_input(std::string_view text);
std::string format_classifier_input(int n, const CubicHypersurface& y, const ProjLine& l);

}  // namespace ellcox
