#pragma once

#include <vector>

#include "mirrorgw/poly.hpp"
#include "mirrorgw/ratfn.hpp"

namespace mgw {

// Polynomial in a second variable (Omega) with coefficients in Q(h).
using OmegaPoly = Poly<RatFn>;

// Unique polynomial of Omega-degree <= L-1 through (nodes[l], values[l]).
// Nodes are polynomials in h of degree at most one, pairwise distinct.
OmegaPoly lagrange_interpolate(const std::vector<QPoly>& nodes, const std::vector<RatFn>& values);

// Evaluate an Omega-polynomial at Omega = node(h).
RatFn eval_omega(const OmegaPoly& p, const QPoly& node);

// E(h, Omega) -> E(-h, Omega + shift*h)
OmegaPoly reflect_and_shift(const OmegaPoly& p, const Rational& shift);

}  // namespace mgw
