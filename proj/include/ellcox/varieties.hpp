#pragma once

// Picard-lattice data of the seven types: pairing, Mori and nef cones, Mordell-Weil
// groups, flops and moving cones.
//
// Divisor classes use the basis (H, E1, E2, E3), curve classes (h, e1, e2, e3).

#include <optional>
#include <string>
#include <vector>

#include "ellcox/cones.hpp"
#include "ellcox/exact_linalg.hpp"
#include "ellcox/variety_type.hpp"

namespace ellcox {

using DivisorClass = IntVector;
using CurveClass = IntVector;

/// a*b - a1*b1 - a2*b2 - a3*b3
Int pairing(const DivisorClass& d, const CurveClass& c);
/// diag(1, -1, -1, -1) c; pairing(d, c) == dot(d, twist(c)).
IntVector twist(const CurveClass& c);

/// F = H - E1 - E2 - E3
DivisorClass fiber_divisor();
/// W = 4H - 3E1 - 2E2 - E3
DivisorClass w_class();

std::vector<CurveClass> mori_generators(VarietyType t);
/// Columns of the tabulated nef matrix for the type's family (4, 6 or 8 columns).
std::vector<DivisorClass> printed_nef_generators(VarietyType t);

struct NefCheck {
  Cone computed;  // dual of the twisted Mori generators
  Cone printed;
  bool equal = false;
};
NefCheck check_nef(VarietyType t);
/// The computed nef cone; throws ReferenceMismatch if it differs from the tabulated one.
Cone nef_cone(VarietyType t);

/// (1 - n)(H - E1 - E2 - E3); n >= 3.
DivisorClass canonical_class(int n);

std::vector<DivisorClass> vertical_lattice(VarietyType t);
GroupInvariants mordell_weil(VarietyType t);
/// Tabulated group in GroupInvariants::to_string notation.
std::string printed_mordell_weil(VarietyType t);

struct FlopAction {
  IntMatrix M;           // acts on divisor classes as column vectors
  IntMatrix rank2_core;  // [[2, 1], [-3, -2]] on (H, E1)
};
/// X3 and XS2 only; throws UnsupportedType otherwise.
FlopAction flop_action(VarietyType t);
/// Curve classes whose dual cone is the flopped nef chamber.
std::vector<CurveClass> flopped_chamber_curves(VarietyType t);

/// [Nef] for XS, XSSS; [Nef, M Nef] for X3, XS2 after checking M Nef against the dual of
/// flopped_chamber_curves (ReferenceMismatch otherwise). UnsupportedType for other types.
std::vector<Cone> moving_cone(VarietyType t);

struct WCheck {
  std::vector<Int> pairings;  // with each Mori generator
  bool interior = false;
  std::optional<CurveClass> offending;
  bool decomposition = false;  // W = F + (H-E1-E2) + (H-E1) + H with every summand nef
};
WCheck check_w_ample(VarietyType t);

struct ChamberGeometry {
  Cone wall;  // Nef and its flop image intersected
  Cone hull;
  bool rays_in_hull = false;
};
/// X3 and XS2 only.
ChamberGeometry chamber_geometry(VarietyType t);

}  // namespace ellcox
