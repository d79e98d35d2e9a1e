#pragma once

// Reference values printed by cantor4_oracle_dump (tests/support), which uses
// only the naive implementations in oracles.hpp.

namespace frozen {

// S_{4^K}(e_0) for p = q = 1/sqrt2, K = 1..8.
inline constexpr double kPqUnitTrace[8] = {1, 1, 1, 1, 1, 1, 1, 1};

// h_4(-1/2) for rho = -1.
inline constexpr double kRhoMinusOneH4AtMinusHalf = 0.49998362943164781;

// S_{4^8}(e_1) for rho = -1.
inline constexpr double kRhoMinusOneE1AtK8 = 0.49999992395717208;

}  // namespace frozen
