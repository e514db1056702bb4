#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mirrorgw/alpha_spec.hpp"
#include "mirrorgw/hypergeometric.hpp"
#include "mirrorgw/interpolate.hpp"
#include "mirrorgw/ratfn.hpp"
#include "mirrorgw/series.hpp"

namespace mgw {

using RSeries = Series<RatFn>;

// Evaluations Z(h, alpha_i, v) at every fixed point, as series in v with Q(h) coefficients.
class FixedPointSeries {
public:
    FixedPointSeries(int n, int u_order, Var var = Var::u);
    explicit FixedPointSeries(std::vector<RSeries> points);

    int n() const { return static_cast<int>(p_.size()); }
    int u_order() const { return p_.front().order(); }
    Var var() const { return p_.front().var(); }
    const RSeries& point(int i) const { return p_.at(static_cast<size_t>(i)); }
    RSeries& point(int i) { return p_.at(static_cast<size_t>(i)); }
    const RatFn& coeff(int i, int d) const { return point(i)[d]; }
    RatFn& coeff(int i, int d) { return point(i)[d]; }

    FixedPointSeries truncated(int order) const;
    FixedPointSeries with_var(Var v) const;
    FixedPointSeries& operator+=(const FixedPointSeries& o);
    FixedPointSeries& operator-=(const FixedPointSeries& o);
    friend FixedPointSeries operator+(FixedPointSeries a, const FixedPointSeries& b) { return a += b; }
    friend FixedPointSeries operator-(FixedPointSeries a, const FixedPointSeries& b) { return a -= b; }
    bool is_zero() const;
    friend bool operator==(const FixedPointSeries& a, const FixedPointSeries& b) { return a.p_ == b.p_; }

private:
    std::vector<RSeries> p_;
};

struct Failure {
    int i = -1;  // fixed point, -1 when not tied to one
    int d = -1;
    std::string detail;
};

struct Report {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Failure> failures;
    bool passed() const { return failures.empty(); }
    void absorb(const Report& other, const std::string& prefix);
};

// Equivariant Y-type series in q: Y_minus_1, R/I_0 (Y_unit) or alpha_i R/I_0 (Y).
FixedPointSeries equivariant_Y(const AlphaSpec& spec, int u_order, YVariant variant);

// C_i^j(d)
Rational recursion_coeff(const AlphaSpec& spec, int i, int j, int d);

// Removes the recursion pole terms from every coefficient and requires the
// remainders to be Laurent polynomials in h.
Report check_recursive(const FixedPointSeries& z, const AlphaSpec& spec, int max_degree);

// Adds eps * v^d / (h - pole) at fixed point i.
FixedPointSeries inject_pole(const FixedPointSeries& z, int i, int d, const Rational& pole, const Rational& eps);

// F_{d,q}: the z^q/q! coefficient of the u^d part of Phi_{Y,Z}.
RatFn phi_moment(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec, int d, int q);

// Coefficients of u^d z^q in Phi_{Y,Z}, indexed [d][q].
std::vector<std::vector<RatFn>> phi_series(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec,
                                           int u_order, int z_order);

// Q_d(h, alpha_i) = prod_{r=1}^{d} prod_k (alpha_i - alpha_k + r h)
QPoly q_factor(const AlphaSpec& spec, int i, int d);

// E_{Y,Z;d}(h, Omega) for d = 0..max_degree
std::vector<OmegaPoly> E_family(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec,
                                int max_degree);

// R_s^d for s = 0..count-1: w-expansion of prod_{r=0}^{d} prod_k (1 - (alpha_k + r h) w)^{-1}
std::vector<QPoly> residue_weights(const AlphaSpec& spec, int d, int count);

enum class MpcMode { interpolation, z_expansion };

// In z_expansion mode the f_{d,s} are solved from the Phi moments, compared with
// the interpolated E, and the two modes are required to agree.
Report check_mpc(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec, int max_degree,
                 MpcMode mode);

enum class TransformKind { derivative, mul_u_poly, mul_h_poly, exp_f_over_h, mirror };

struct Transform {
    TransformKind kind = TransformKind::derivative;
    QSeries u_series{Var::u, 0};  // f for mul_u_poly and exp_f_over_h, g for mirror
    QPoly h_poly;                 // f for mul_h_poly
    bool on_y = false;            // mul_u_poly: multiply Y instead of Z
    std::string name() const;
};

std::pair<FixedPointSeries, FixedPointSeries> apply_transform(const Transform& t, const FixedPointSeries& y,
                                                              const FixedPointSeries& z, const AlphaSpec& spec);

// Coefficients C^{(r)}_{p-1,1} (r = 0..p) recovered at step p of the ladder.
struct TildeCEntry {
    int p = 0;
    std::vector<QSeries> c;
    int rank = 0;
    int equations = 0;
};

struct EquivariantLadder {
    std::vector<FixedPointSeries> y;  // Y_p at index p + 1, p = -1..n-1, series in q
    std::vector<TildeCEntry> ledger;  // steps p = 1..n-1
    MirrorMap map;                    // g = C^{(0)}, shift = C^{(1)} of step 1
    const FixedPointSeries& Y(int p) const { return y.at(static_cast<size_t>(p + 1)); }
};

EquivariantLadder build_equivariant_ladder(const AlphaSpec& spec, int u_order);
std::pair<FixedPointSeries, std::vector<TildeCEntry>> build_Yp_equivariant(int p, const AlphaSpec& spec,
                                                                           int u_order);

FixedPointSeries mirror_transform_equivariant(const FixedPointSeries& zq, const AlphaSpec& spec,
                                              const MirrorMap& map);

// All equivariant series of one (spec, u_order) computation.
class EquivariantModel {
public:
    EquivariantModel(AlphaSpec spec, int u_order);

    const AlphaSpec& spec() const { return spec_; }
    int u_order() const { return u_order_; }
    const EquivariantLadder& ladder() const { return ladder_; }
    const FixedPointSeries& y_unit() const { return y_unit_; }
    const FixedPointSeries& y_minus_1() const { return ladder_.Y(-1); }
    const FixedPointSeries& z(int p) const { return z_.at(static_cast<size_t>(p + 1)); }
    const FixedPointSeries& z_onepoint() const { return z_one_; }

private:
    AlphaSpec spec_;
    int u_order_;
    EquivariantLadder ladder_;
    FixedPointSeries y_unit_;
    std::vector<FixedPointSeries> z_;
    FixedPointSeries z_one_;
};

enum class IdentityKind { symmetric_sum, ztilde_swap, mod_h_inverse, z0_relation, e_symmetry };
const char* identity_name(IdentityKind k);

Report check_identity(IdentityKind kind, const EquivariantModel& model, int max_degree);

// True iff sum_s left[s](h1) right[s](h2) vanishes identically.
bool separated_sum_is_zero(const std::vector<std::pair<RatFn, RatFn>>& terms);

}  // namespace mgw
