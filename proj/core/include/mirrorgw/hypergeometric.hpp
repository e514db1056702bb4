#pragma once

#include <vector>

#include "mirrorgw/laurent.hpp"
#include "mirrorgw/series.hpp"
#include "mirrorgw/tpoly_series.hpp"

namespace mgw {

// Degree-a hypersurface in P^(n-1): requires 1 <= a <= n.
void validate_geometry(int n, int a);

// Hypergeometric ladder I_{p,q}(t), 0 <= p <= q <= p_max.
class HGTable {
public:
    HGTable(int n, int a, int p_max, int u_order, std::vector<std::vector<TPolySeries>> rows);

    int n() const { return n_; }
    int a() const { return a_; }
    int p_max() const { return p_max_; }
    int u_order() const { return u_order_; }
    const TPolySeries& I(int p, int q) const;
    // I_{p,p} as a plain q-series
    QSeries diagonal(int p) const;

private:
    int n_, a_, p_max_, u_order_;
    std::vector<std::vector<TPolySeries>> rows_;  // rows_[p][q - p]
};

HGTable build_I_table(int n, int a, int p_max, int u_order);

// e^{(t-T)x/h} e^{-shift/h} relates the q- and u-expansions; g = T - t.
// shift is the x-free part, nonzero non-equivariantly only when n - a = 1.
struct MirrorMap {
    QSeries g;
    QSeries shift;
};

MirrorMap mirror_map(const HGTable& table);

WindowCap default_window_cap(int n, int a, int u_order);

// sum_d v^d sum_{k<n} x^k (Laurent polynomial in h), x^n = 0. The variable v is
// q before the mirror transform and u after it.
class MirrorSeries {
public:
    MirrorSeries(int n, int a, int u_order, Var var = Var::q);

    int n() const { return n_; }
    int a() const { return a_; }
    int u_order() const { return u_order_; }
    Var var() const { return var_; }
    const WindowCap& cap() const { return cap_; }
    void set_cap(WindowCap cap) { cap_ = cap; }

    const LaurentWindow& at(int d, int k) const;
    LaurentWindow& at(int d, int k);
    Rational coeff(int d, int k, int e) const { return at(d, k).coeff(e); }

    MirrorSeries times_x() const;
    MirrorSeries times_h_euler() const;  // h * d/dt, q = e^t
    MirrorSeries times_series(const QSeries& f) const;
    MirrorSeries scaled(const Rational& f) const;
    MirrorSeries compose(const QSeries& phi) const;  // v -> phi(u)
    MirrorSeries exp() const;                         // needs vanishing v^0 term
    MirrorSeries mod_h_inverse() const;               // keep h-exponents >= 0
    MirrorSeries with_var(Var v) const;

    MirrorSeries& operator+=(const MirrorSeries& o);
    MirrorSeries& operator-=(const MirrorSeries& o);
    friend MirrorSeries operator+(MirrorSeries a, const MirrorSeries& b) { return a += b; }
    friend MirrorSeries operator-(MirrorSeries a, const MirrorSeries& b) { return a -= b; }
    friend MirrorSeries operator*(const MirrorSeries& a, const MirrorSeries& b);

    bool is_zero() const;
    void check_cap() const;
    friend bool operator==(const MirrorSeries& a, const MirrorSeries& b);

private:
    void check_compatible(const MirrorSeries& o) const;
    int n_, a_, u_order_;
    Var var_;
    WindowCap cap_;
    std::vector<std::vector<LaurentWindow>> c_;
};

enum class YVariant {
    Y,          // x * R / I_0 with u^0 coefficient x
    Y_minus_1,  // the series with numerator prod_{r=0}^{ad-1}
    Y_unit,     // R / I_0 with u^0 coefficient 1
};

MirrorSeries build_Y(int n, int a, int u_order, YVariant variant);

// p-fold ladder M -> I_{k,k}^{-1} (x + h d/dt) M for k = 1..p
MirrorSeries Dp_apply(int p, const HGTable& table, const MirrorSeries& m);

}  // namespace mgw
