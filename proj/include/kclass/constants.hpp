#pragma once

namespace kclass {

/// Global constant bounding gamma(T) over all non-abelian simple T.
inline constexpr double kC2 = 1.954;

/// gamma(T) stays below this for every simple T other than A5 and PSL3(4).
inline constexpr double kGammaGeneric = 1.613;
inline constexpr double kGammaAlt5 = 1.727;
inline constexpr double kGammaPsl34 = 1.954;

/// Tolerance for "the computed gamma reproduces a rounded-up table value".
inline constexpr double kSharpnessTolerance = 1e-3;

}  // namespace kclass
