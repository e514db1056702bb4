#pragma once

#include <string>
#include <vector>

#include "mirrorgw/alpha_spec.hpp"
#include "mirrorgw/equivariant.hpp"

namespace mgw {

struct SuiteOptions {
    int max_degree = 3;
    int oracle_degree = 2;  // localization sums are only run up to this degree
    bool mutate = false;    // feed a series with an injected pole to each suite
};

// recursion, mpc, transforms, identities, reconstruction, oracle, psi
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

// The series every pole-injection mutant is built from, with the pole placed at
// h = 1 + alpha_2 - alpha_1 in degree 1 at the first fixed point.
FixedPointSeries inject_default_pole(const FixedPointSeries& z, const AlphaSpec& spec);

// A second generic weight vector for the same (n, a, max_degree), distinct from spec.
AlphaSpec alternate_spec(const AlphaSpec& spec);

// The five admissible transforms with fixed sample data, plus the Y-side multiplication.
std::vector<Transform> sample_transforms(int u_order);

// Runs the named suites in order; the equivariant model is built once when needed.
std::vector<Report> run_suites(const std::vector<std::string>& names, const AlphaSpec& spec,
                               const SuiteOptions& options);
// Same, reusing an already built model.
std::vector<Report> run_suites(const std::vector<std::string>& names, const EquivariantModel& model,
                               const SuiteOptions& options);

}  // namespace mgw
