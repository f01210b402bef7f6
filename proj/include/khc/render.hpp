#pragma once

#include "khc/system.hpp"

#include <string>

namespace khc {

enum class RenderFormat { Table, Json };

/// "a/b" with a root-of-unity alias appended when the denominator divides
/// 6: 1, -1, phi (= exp(2 pi i/3)), phibar, -phi, -phibar.
std::string angle_display(const Angle& a);

/// Table format: one row per Hodge level with h^p, one column per nonzero
/// local block family, and delta^p; the infinity data on its own line.
std::string render(const HodgeSystem& s, RenderFormat format);
std::string render(const MonodromySystem& s, RenderFormat format);
std::string render(const Value& v, RenderFormat format);

}  // namespace khc
