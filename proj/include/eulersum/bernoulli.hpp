#pragma once

#include "eulersum/rational.hpp"

namespace eulersum {

// Bernoulli number B_n with B_1 = -1/2.
Rational bernoulli(int n);

// Value of the Euler polynomial E_j at 0:
// E_0(0) = 1, E_j(0) = -2 (2^(j+1) - 1) B_(j+1) / (j+1).
Rational euler_polynomial_at_zero(int j);

}  // namespace eulersum
