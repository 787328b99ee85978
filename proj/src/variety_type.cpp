#include "ellcox/variety_type.hpp"

#include "ellcox/errors.hpp"

namespace ellcox {

std::string type_name(VarietyType t) {
  switch (t) {
    case VarietyType::X3: return "X3";
    case VarietyType::XS: return "XS";
    case VarietyType::XS2: return "XS2";
    case VarietyType::XSSS: return "XSSS";
    case VarietyType::X12: return "X12";
    case VarietyType::XS11: return "XS11";
    case VarietyType::X111: return "X111";
  }
  throw Error("unknown variety type");
}

std::string type_symbol(VarietyType t) {
  std::string name = type_name(t);
  return "X_" + name.substr(1);
}

VarietyType parse_type(std::string_view s) {
  for (VarietyType t : kAllTypes)
    if (s == type_name(t) || s == type_symbol(t)) return t;
  throw Error("unknown variety type '" + std::string(s) + "' (expected one of X3, XS, XS2, XSSS, X12, XS11, X111)");
}

bool is_extremal(VarietyType t) {
  return t == VarietyType::X3 || t == VarietyType::XS || t == VarietyType::XS2 || t == VarietyType::XSSS;
}

ConeFamily cone_family(VarietyType t) {
  switch (t) {
    case VarietyType::X3:
    case VarietyType::XS: return ConeFamily::Triple;
    case VarietyType::XS2:
    case VarietyType::X12: return ConeFamily::DoubleSimple;
    default: return ConeFamily::ThreeSimple;
  }
}

}  // namespace ellcox
