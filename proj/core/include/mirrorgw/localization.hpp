#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mirrorgw/alpha_spec.hpp"
#include "mirrorgw/equivariant.hpp"
#include "mirrorgw/ratfn.hpp"

namespace mgw {

// Torus-fixed locus of stable maps: a tree with vertex labels in [0, n), positive
// edge degrees and marked points attached to vertices.
struct DecoratedTree {
    std::vector<int> label;                 // mu(v)
    std::vector<std::pair<int, int>> edges;
    std::vector<int> degree;                // per edge
    std::vector<int> marks;                 // vertex carrying mark j
    int automorphisms = 1;

    int vertex_count() const { return static_cast<int>(label.size()); }
    int total_degree() const;
    // canonical string of the tree rooted at the vertex of mark 1
    std::string canonical() const;
    std::string describe() const;
};

// Order of the group of vertex permutations preserving labels, degrees and marks.
int count_automorphisms(const DecoratedTree& t);

// One representative per isomorphism class, with automorphism counts filled in.
std::vector<DecoratedTree> enumerate_trees(int n, int d, int m, int max_degree = 3);

// (k-3)! / prod a_j! when sum a_j = k - 3, else 0
Rational psi_integral(const std::vector<int>& exponents);
// Same integral by repeated use of the string equation.
Rational psi_integral_by_string_equation(const std::vector<int>& exponents);

struct Insertion {
    enum class Class { fixed_point, x_power };
    enum class Descendant { power, propagator };
    Class cls = Class::x_power;
    int index = 0;  // fixed point i or power of x
    Descendant descendant = Descendant::power;
    int beta = 0;   // psi exponent for Descendant::power

    static Insertion fixed_point(int i, Descendant desc = Descendant::power, int beta = 0) {
        return {Class::fixed_point, i, desc, beta};
    }
    static Insertion x_power(int p, Descendant desc = Descendant::power, int beta = 0) {
        return {Class::x_power, p, desc, beta};
    }
};

struct TwistMode {
    enum class Kind { full, prime, double_prime };
    Kind kind = Kind::full;
    int mark = -1;  // mark whose evaluation is quotiented out by the prime modes

    static TwistMode V0() { return {Kind::full, -1}; }
    static TwistMode V0_prime(int mark = 0) { return {Kind::prime, mark}; }
    static TwistMode V0_double_prime(int mark = 1) { return {Kind::double_prime, mark}; }
};

// Fixed-locus integrand of one tree, as a function of the propagator variable h.
RatFn graph_contribution(const DecoratedTree& t, const std::vector<Insertion>& ins, TwistMode twist,
                         const AlphaSpec& spec);

// [u^d] Z_p(h, alpha_i, u): mark 1 carries phi_i with a propagator, mark 2 x^{p+1}.
RatFn oracle_zp(const AlphaSpec& spec, int p, int i, int d);
FixedPointSeries oracle_zp_series(const AlphaSpec& spec, int p, int max_degree);

// <tau_{a1} H^{b1}, tau_{a2} H^{b2}>_d twisted by the full bundle
Rational oracle_two_point(const AlphaSpec& spec, int d, int a1, int b1, int a2, int b2);

}  // namespace mgw
