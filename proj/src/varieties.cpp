#include "ellcox/varieties.hpp"

#include "ellcox/errors.hpp"

namespace ellcox {

namespace {

std::vector<IntVector> vectors(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> out;
  for (auto r : rows) out.push_back(make_vector(r));
  return out;
}

std::vector<IntVector> twisted(const std::vector<CurveClass>& cs) {
  std::vector<IntVector> out;
  for (const auto& c : cs) out.push_back(twist(c));
  return out;
}

void require_length(const IntVector& v, const char* what) {
  if (v.size() != 4) throw DimensionMismatch(std::string(what) + ": classes have four coordinates");
}

}  // namespace

Int pairing(const DivisorClass& d, const CurveClass& c) {
  require_length(d, "pairing");
  require_length(c, "pairing");
  return d[0] * c[0] - d[1] * c[1] - d[2] * c[2] - d[3] * c[3];
}

IntVector twist(const CurveClass& c) {
  require_length(c, "twist");
  return {c[0], -c[1], -c[2], -c[3]};
}

DivisorClass fiber_divisor() { return make_vector({1, -1, -1, -1}); }
DivisorClass w_class() { return make_vector({4, -3, -2, -1}); }

std::vector<CurveClass> mori_generators(VarietyType t) {
  switch (cone_family(t)) {
    case ConeFamily::Triple:
      return vectors({{0, 1, -1, 0}, {0, 0, 1, -1}, {1, -1, 0, 0}, {0, 0, 0, 1}});
    case ConeFamily::DoubleSimple:
      return vectors({{0, 1, -1, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, -1, 0, 0}, {1, 0, 0, -1}});
    case ConeFamily::ThreeSimple:
      return vectors({{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, -1, 0, 0}, {1, 0, -1, 0}, {1, 0, 0, -1}});
  }
  throw Error("unknown cone family");
}

std::vector<DivisorClass> printed_nef_generators(VarietyType t) {
  switch (cone_family(t)) {
    case ConeFamily::Triple:
      return vectors({{1, -1, -1, -1}, {1, -1, -1, 0}, {1, -1, 0, 0}, {1, 0, 0, 0}});
    case ConeFamily::DoubleSimple:
      return vectors({{1, -1, -1, -1}, {1, -1, -1, 0}, {1, -1, 0, 0}, {1, 0, 0, 0}, {1, -1, 0, -1}, {1, 0, 0, -1}});
    case ConeFamily::ThreeSimple:
      return vectors({{1, -1, -1, -1},
                      {1, -1, -1, 0},
                      {1, -1, 0, 0},
                      {1, 0, 0, 0},
                      {1, -1, 0, -1},
                      {1, 0, 0, -1},
                      {1, 0, -1, -1},
                      {1, 0, -1, 0}});
  }
  throw Error("unknown cone family");
}

NefCheck check_nef(VarietyType t) {
  Cone mori = Cone::from_generators(4, twisted(mori_generators(t)));
  NefCheck check{dual(mori), Cone::from_generators(4, printed_nef_generators(t)), false};
  check.equal = equals(check.computed, check.printed);
  return check;
}

Cone nef_cone(VarietyType t) {
  NefCheck c = check_nef(t);
  if (!c.equal)
    throw ReferenceMismatch("nef cone of " + type_symbol(t) + ": computed " + c.computed.to_string() + ", tabulated " +
                            c.printed.to_string());
  return c.computed;
}

DivisorClass canonical_class(int n) {
  if (n < 3) throw Error("canonical_class: n must be at least 3");
  IntVector f = fiber_divisor();
  for (auto& x : f) x *= (1 - n);
  return f;
}

std::vector<DivisorClass> vertical_lattice(VarietyType t) {
  auto gens = vectors({{1, -1, -1, -1}, {0, 0, 0, 1}});
  auto add = [&](std::initializer_list<std::initializer_list<long>> more) {
    for (auto r : more) gens.push_back(make_vector(r));
  };
  switch (t) {
    case VarietyType::X111: break;
    case VarietyType::XS11: add({{1, -3, 0, 0}}); break;
    case VarietyType::XSSS: add({{1, -3, 0, 0}, {1, 0, -3, 0}}); break;
    case VarietyType::X12: add({{0, 1, -1, 0}}); break;
    case VarietyType::X3:
    case VarietyType::XS: add({{0, 1, -1, 0}, {0, 0, 1, -1}}); break;
    case VarietyType::XS2: add({{1, -3, 0, 0}, {0, 0, 1, -1}}); break;
  }
  return gens;
}

GroupInvariants mordell_weil(VarietyType t) {
  return abelian_quotient(4, vertical_lattice(t));
}

std::string printed_mordell_weil(VarietyType t) {
  switch (t) {
    case VarietyType::X3:
    case VarietyType::XS: return "0";
    case VarietyType::XS2: return "Z/2Z";
    case VarietyType::XSSS: return "Z/3Z";
    case VarietyType::X12:
    case VarietyType::XS11: return "Z";
    case VarietyType::X111: return "Z^2";
  }
  throw Error("unknown variety type");
}

FlopAction flop_action(VarietyType t) {
  IntMatrix core = IntMatrix::from_rows(vectors({{2, 1}, {-3, -2}}));
  if (t == VarietyType::X3)
    return {IntMatrix::from_rows(vectors({{2, 1, 0, 0}, {-3, -2, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})), core};
  if (t == VarietyType::XS2)
    return {IntMatrix::from_rows(vectors({{2, 1, 0, 0}, {-3, -2, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}})), core};
  throw UnsupportedType("no flop is tabulated for " + type_symbol(t));
}

std::vector<CurveClass> flopped_chamber_curves(VarietyType t) {
  if (t == VarietyType::X3) return vectors({{0, 0, 1, -1}, {0, 0, 0, 1}, {3, -2, -1, 0}, {-1, 1, 0, 0}});
  if (t == VarietyType::XS2)
    return vectors({{0, 0, 1, 0}, {0, 0, 0, 1}, {2, -1, -1, 0}, {3, -2, 0, -1}, {-1, 1, 0, 0}});
  throw UnsupportedType("no flopped chamber is tabulated for " + type_symbol(t));
}

std::vector<Cone> moving_cone(VarietyType t) {
  if (t == VarietyType::XS || t == VarietyType::XSSS) return {nef_cone(t)};
  if (t != VarietyType::X3 && t != VarietyType::XS2)
    throw UnsupportedType("moving cone is only tabulated for the extremal types, not " + type_symbol(t));
  Cone nef = nef_cone(t);
  Cone image = map(nef, flop_action(t).M);
  Cone expected = dual(Cone::from_generators(4, twisted(flopped_chamber_curves(t))));
  if (!equals(image, expected))
    throw ReferenceMismatch("flopped nef chamber of " + type_symbol(t) + ": computed " + image.to_string() +
                            ", expected " + expected.to_string());
  return {nef, image};
}

WCheck check_w_ample(VarietyType t) {
  WCheck out;
  const DivisorClass w = w_class();
  out.interior = true;
  for (const auto& c : mori_generators(t)) {
    Int v = pairing(w, c);
    out.pairings.push_back(v);
    if (v <= 0 && out.interior) {
      out.interior = false;
      out.offending = c;
    }
  }
  const std::vector<DivisorClass> summands = vectors({{1, -1, -1, -1}, {1, -1, -1, 0}, {1, -1, 0, 0}, {1, 0, 0, 0}});
  IntVector sum(4, Int(0));
  for (const auto& s : summands)
    for (std::size_t i = 0; i < 4; ++i) sum[i] += s[i];
  Cone nef = Cone::from_generators(4, printed_nef_generators(t));
  out.decomposition = sum == w;
  for (const auto& s : summands) out.decomposition = out.decomposition && nef.contains(s);
  return out;
}

ChamberGeometry chamber_geometry(VarietyType t) {
  auto chambers = moving_cone(t);
  if (chambers.size() != 2) throw UnsupportedType("chamber geometry needs two chambers; " + type_symbol(t) + " has one");
  ChamberGeometry g{intersect(chambers[0], chambers[1]), hull_union(chambers[0], chambers[1]), true};
  for (const auto& c : chambers)
    for (const auto& r : c.rays()) g.rays_in_hull = g.rays_in_hull && g.hull.contains(r);
  return g;
}

}  // namespace ellcox
