#pragma once

namespace likert {

inline constexpr const char* kVersion = "0.1.0";

// Identifier recorded in report metadata so a run can be reproduced from the
// report alone. Bump the suffix if the generator or the draw-to-double
// conversion ever changes.
inline constexpr const char* kRngAlgorithm = "splitmix64-v1";

} // namespace likert
