#pragma once

#include <array>
#include <string>
#include <string_view>

namespace ellcox {

enum class VarietyType { X3, XS, XS2, XSSS, X12, XS11, X111 };

inline constexpr std::array<VarietyType, 7> kAllTypes = {VarietyType::X3,  VarietyType::XS,   VarietyType::XS2,
                                                         VarietyType::XSSS, VarietyType::X12, VarietyType::XS11,
                                                         VarietyType::X111};
inline constexpr std::array<VarietyType, 4> kExtremalTypes = {VarietyType::X3, VarietyType::XS, VarietyType::XS2,
                                                              VarietyType::XSSS};

/// Command-line name: "X3", "XS", ...
std::string type_name(VarietyType t);
/// Subscripted symbol: "X_3", "X_S", "X_S2", ...
std::string type_symbol(VarietyType t);
/// Accepts either form; throws Error on anything else.
VarietyType parse_type(std::string_view s);
bool is_extremal(VarietyType t);

/// The three cone families share their nef cones.
enum class ConeFamily { Triple, DoubleSimple, ThreeSimple };
ConeFamily cone_family(VarietyType t);

}  // namespace ellcox
