#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "mirrorgw/equivariant.hpp"

namespace mgw {

class ReconstructionError : public std::runtime_error {
public:
    ReconstructionError(int i, int d, const std::string& what)
        : std::runtime_error(what + " (" + (i >= 0 ? "fixed point " + std::to_string(i + 1) + ", " : "") + "degree " +
                             std::to_string(d) + ")"),
          i_(i), d_(d) {}
    // -1 when the failure is not tied to one fixed point
    int fixed_point() const { return i_; }
    int degree() const { return d_; }

private:
    int i_, d_;
};

// Prescribed polynomial part of Z(h, alpha_i, u) in each degree, indexed [i][d].
struct ReconstructionSeed {
    std::vector<std::vector<QPoly>> part;

    static ReconstructionSeed zero(int n, int max_degree);
    static ReconstructionSeed from_series(const FixedPointSeries& z, int max_degree);
    ReconstructionSeed& operator+=(const ReconstructionSeed& o);
};

using NBound = std::function<int(int d)>;
NBound default_n_bound(int n);  // d -> d + n + 2

// Rebuilds the unique C-recursive Z satisfying the polynomiality condition with y
// whose polynomial parts are the seed.
FixedPointSeries reconstruct(const FixedPointSeries& y, const AlphaSpec& spec, const ReconstructionSeed& seed,
                             const NBound& n_bound, int max_degree);

}  // namespace mgw
