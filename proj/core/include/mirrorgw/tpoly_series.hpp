#pragma once

#include "mirrorgw/poly.hpp"
#include "mirrorgw/series.hpp"

namespace mgw {

// Series in q = e^t whose coefficients are polynomials in t. The t-degree of the
// q^d coefficient is bounded by d + cap.
class TPolySeries {
public:
    TPolySeries() : s_(Var::q, 0), cap_(0) {}
    TPolySeries(Series<QPoly> s, int cap);
    static TPolySeries from_pure(const QSeries& s);

    const Series<QPoly>& series() const { return s_; }
    int order() const { return s_.order(); }
    int cap() const { return cap_; }
    const QPoly& operator[](int d) const { return s_[d]; }
    int t_degree() const;  // largest t-degree among coefficients, -1 for zero
    bool is_pure() const { return t_degree() <= 0; }
    QSeries pure_part() const;  // t^0 coefficients; throws unless is_pure()

    TPolySeries times(const QSeries& f) const;
    bool operator==(const TPolySeries& o) const { return s_ == o.s_; }

private:
    Series<QPoly> s_;
    int cap_;
};

// d/dt with q = e^t: p_d(t) q^d -> (p_d'(t) + d p_d(t)) q^d
TPolySeries dt_derivative(const TPolySeries& f);

}  // namespace mgw
