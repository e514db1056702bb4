#include <doctest.h>

#include "mirrorgw/hypergeometric.hpp"
#include "mirrorgw/mirror_engine.hpp"

using namespace mgw;

namespace {

QPoly t_poly(std::vector<Rational> c) { return QPoly(std::move(c)); }

bool same_coefficients(const MirrorSeries& a, const MirrorSeries& b) {
    if (a.n() != b.n() || a.u_order() != b.u_order()) return false;
    for (int d = 0; d <= a.u_order(); ++d)
        for (int k = 0; k < a.n(); ++k)
            if (!(a.at(d, k) == b.at(d, k))) return false;
    return true;
}

// x^k as a series with no positive-degree terms
MirrorSeries x_power(int n, int a, int u_order, int k, Var v) {
    MirrorSeries m(n, a, u_order, v);
    if (k < n) m.at(0, k) = LaurentWindow::monomial(0, Rational(1));
    return m;
}

}  // namespace

TEST_SUITE("hypergeometric") {

TEST_CASE("quintic I-table coefficients") {
    HGTable t = build_I_table(5, 5, 1, 3);
    CHECK(t.diagonal(0)[0] == Rational(1));
    CHECK(t.diagonal(0)[1] == Rational(120));
    CHECK(t.diagonal(0)[2] == Rational(113400));
    // I_{0,1} = t I_0 + 770 q + ...
    CHECK(t.I(0, 1)[0] == t_poly({0, 1}));
    CHECK(t.I(0, 1)[1] == t_poly({770, 120}));
}

TEST_CASE("n - a >= 2 has a trivial table start") {
    HGTable t = build_I_table(7, 5, 1, 3);
    CHECK(t.I(0, 0).is_pure());
    CHECK(t.diagonal(0) == QSeries::constant(Var::q, 3, Rational(1)));
    for (int d = 1; d <= 3; ++d) CHECK(t.I(0, 1)[d].is_zero());
    CHECK(t.I(0, 1)[0] == t_poly({0, 1}));
    MirrorMap m = mirror_map(t);
    CHECK(is_zero(m.g));
    CHECK(is_zero(m.shift));
}

TEST_CASE("mirror map of the quintic") {
    MirrorMap m = mirror_map(build_I_table(5, 5, 1, 3));
    CHECK(m.g[0] == Rational(0));
    CHECK(m.g[1] == Rational(770));
    CHECK(is_zero(m.shift));
}

TEST_CASE("the x-free shift appears only for n - a = 1") {
    MirrorMap m = mirror_map(build_I_table(4, 3, 1, 3));
    CHECK(m.g[0] == Rational(0));
    CHECK_FALSE(is_zero(m.shift));
    CHECK(m.shift[0] == Rational(0));
}

TEST_CASE("Y variants at degree zero") {
    for (int n : {2, 3, 5}) {
        MirrorSeries y = build_Y(n, n, 2, YVariant::Y);
        MirrorSeries y1 = build_Y(n, n, 2, YVariant::Y_minus_1);
        MirrorSeries yu = build_Y(n, n, 2, YVariant::Y_unit);
        for (int k = 0; k < n; ++k) {
            CHECK(y.at(0, k) == (k == 1 ? LaurentWindow::monomial(0, Rational(1)) : LaurentWindow()));
            CHECK(y1.at(0, k) == (k == 0 ? LaurentWindow::monomial(0, Rational(1)) : LaurentWindow()));
            CHECK(yu.at(0, k) == (k == 0 ? LaurentWindow::monomial(0, Rational(1)) : LaurentWindow()));
        }
        CHECK(same_coefficients(yu.times_x(), y));
    }
}

TEST_CASE("n = a = 2 Y_minus_1 in degree one is 2x/h") {
    MirrorSeries y1 = build_Y(2, 2, 1, YVariant::Y_minus_1);
    CHECK(y1.at(1, 0).is_zero());
    CHECK(y1.at(1, 1) == LaurentWindow::monomial(-1, Rational(2)));
}

TEST_CASE("the ladder operator") {
    HGTable t = build_I_table(5, 5, 4, 3);
    MirrorSeries y = build_Y(5, 5, 3, YVariant::Y);
    CHECK(same_coefficients(Dp_apply(0, t, y), y));
    MirrorSeries d1 = Dp_apply(1, t, y);
    for (int k = 0; k < 5; ++k)
        CHECK(d1.at(0, k) == (k == 2 ? LaurentWindow::monomial(0, Rational(1)) : LaurentWindow()));
}

TEST_CASE("generic ladder agrees with repeated D for a = n") {
    for (int n : {3, 4, 5}) {
        HGTable t = build_I_table(n, n, n - 1, 3);
        auto ladder = build_Y_ladder(n, n, 3, t);
        MirrorSeries y = build_Y(n, n, 3, YVariant::Y);
        CHECK(same_coefficients(ladder[0], build_Y(n, n, 3, YVariant::Y_minus_1)));
        for (int p = 0; p < n; ++p) CHECK(same_coefficients(ladder[static_cast<size_t>(p + 1)], Dp_apply(p, t, y)));
    }
}

TEST_CASE("Z_p is x^{p+1} modulo 1/h") {
    const int u = 4;
    for (auto [n, a] : {std::pair{5, 5}, std::pair{5, 4}, std::pair{6, 4}, std::pair{4, 4}}) {
        MirrorEngine e(n, a, u);
        for (int p = -1; p < n; ++p)
            CHECK(same_coefficients(e.z(p).mod_h_inverse(), x_power(n, a, u, p + 1, Var::u)));
    }
}

TEST_CASE("Z relations") {
    MirrorEngine e(5, 5, 4);
    CHECK(same_coefficients(e.z(0), e.z_onepoint().times_x()));
    CHECK(e.z(4).is_zero());
    CHECK(e.z(-1).at(0, 0) == LaurentWindow::monomial(0, Rational(1)));
    MirrorEngine trivial(7, 5, 3);
    CHECK(same_coefficients(trivial.z_onepoint(), build_Y(7, 5, 3, YVariant::Y_unit).with_var(Var::u)));
}

TEST_CASE("mirror transform with zero map is the identity") {
    MirrorSeries y = build_Y(4, 4, 3, YVariant::Y_unit);
    MirrorMap zero{QSeries(Var::q, 3), QSeries(Var::q, 3)};
    CHECK(same_coefficients(mirror_transform(y, zero), y));
}

TEST_CASE("geometry validation") {
    CHECK_THROWS_AS(validate_geometry(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(validate_geometry(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(build_I_table(5, 0, 1, 3), std::invalid_argument);
}

}
