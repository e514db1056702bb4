#include <doctest.h>

#include "mirrorgw/hypergeometric.hpp"
#include "mirrorgw/series.hpp"
#include "mirrorgw/tpoly_series.hpp"

using namespace mgw;

namespace {

QSeries make(Var v, int order, std::vector<Rational> c) { return QSeries(v, order, std::move(c)); }

QSeries quintic_I0(int order) {
    QSeries s(Var::q, order);
    for (int d = 0; d <= order; ++d) {
        Rational den = Rational::factorial(static_cast<unsigned>(d)).pow(5);
        s[d] = Rational::factorial(static_cast<unsigned>(5 * d)) / den;
    }
    return s;
}

// phi * exp(g(phi)) evaluated as a u-series
QSeries round_trip(const QSeries& g, const QSeries& phi) {
    QSeries inner = compose(g.truncated(phi.order()), phi);
    return phi * exp(inner);
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("reciprocal, exp and log") {
    QSeries one_plus_q = make(Var::q, 3, {1, 1});
    CHECK(recip(one_plus_q) == make(Var::q, 3, {1, -1, 1, -1}));
    CHECK(exp(log(one_plus_q)) == one_plus_q);
    CHECK_THROWS_AS(recip(make(Var::q, 3, {0, 1})), SeriesError);
    CHECK_THROWS_AS(exp(make(Var::q, 3, {1, 1})), SeriesError);
}

TEST_CASE("I0 times its reciprocal is one") {
    QSeries i0 = quintic_I0(3);
    CHECK(i0[1] == Rational(120));
    CHECK(i0[2] == Rational(113400));
    CHECK(i0 * recip(i0) == make(Var::q, 3, {1}));
}

TEST_CASE("truncation follows the smaller order and variables must agree") {
    QSeries a = make(Var::q, 5, {1, 2, 3});
    QSeries b = make(Var::q, 2, {1, 1});
    CHECK((a * b).order() == 2);
    CHECK_THROWS_AS(a + make(Var::u, 5, {1}), SeriesError);
    CHECK_THROWS_AS(a.truncated(6), SeriesError);
}

TEST_CASE("series reversion") {
    SUBCASE("g = 0 gives the identity") {
        QSeries phi = series_revert(QSeries(Var::q, 4));
        CHECK(phi == make(Var::u, 4, {0, 1}));
    }
    SUBCASE("g = c q") {
        const Rational c(3, 2);
        QSeries phi = series_revert(make(Var::q, 4, {0, c}));
        CHECK(phi[1] == Rational(1));
        CHECK(phi[2] == -c);
        CHECK(phi[3] == Rational(3, 2) * c * c);
        CHECK(round_trip(make(Var::q, 4, {0, c}), phi) == make(Var::u, 4, {0, 1}));
    }
    SUBCASE("quintic mirror map") {
        HGTable t = build_I_table(5, 5, 1, 4);
        QSeries g = mirror_map(t).g;
        QSeries phi = series_revert(g);
        CHECK(round_trip(g, phi) == make(Var::u, 4, {0, 1}));
    }
}

TEST_CASE("w-derivative coefficients") {
    CHECK(dw_coeff(make(Var::w, 3, {1, 2}), 0) == Rational(1));
    CHECK(dw_coeff(make(Var::w, 3, {1, 2}), 1) == Rational(2));
    CHECK(dw_coeff(recip(make(Var::w, 3, {1, -1})), 2) == Rational(1));
    CHECK_THROWS_AS(dw_coeff(make(Var::w, 3, {1}), 4), SeriesError);
}

TEST_CASE("t-derivative with q = e^t") {
    auto t_poly = [](std::vector<Rational> c) { return QPoly(std::move(c)); };
    Series<QPoly> s(Var::q, 2);
    s[0] = t_poly({0, 1});  // t
    CHECK(dt_derivative(TPolySeries(s, 1))[0] == t_poly({1}));

    Series<QPoly> tq(Var::q, 2);
    tq[1] = t_poly({0, 1});  // t q
    CHECK(dt_derivative(TPolySeries(tq, 1))[1] == t_poly({1, 1}));

    Series<QPoly> q2(Var::q, 2);
    q2[2] = t_poly({1});
    CHECK(dt_derivative(TPolySeries(q2, 0))[2] == t_poly({2}));

    Series<QPoly> too_high(Var::q, 1);
    too_high[0] = t_poly({0, 0, 1});
    CHECK_THROWS_AS(TPolySeries(too_high, 1), SeriesError);
}

}
