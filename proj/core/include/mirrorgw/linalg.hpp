#pragma once

#include <vector>

#include "mirrorgw/rational.hpp"

namespace mgw {

using QMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
    std::vector<Rational> x;  // a particular solution (free variables set to zero)
    int rank = 0;
    bool consistent = false;
    bool unique = false;
};

// Solves A x = b exactly by Gauss-Jordan elimination.
LinearSolution solve_linear(QMatrix a, std::vector<Rational> b);

}  // namespace mgw
