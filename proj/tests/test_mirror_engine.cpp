#include <doctest.h>

#include "mirrorgw/mirror_engine.hpp"

using namespace mgw;

namespace {

const char* const septic_table[] = {
    "1707797",
    "510787745643",
    "222548537108926490",
    "113635631482486991647224",
    "63340724462384110502639024265",
    "37325795060717360046547665187418254",
    "22857028298936684292245509537579343818647",
    "14395953469762596243721601709186933042635134584",
    "9263611884884554518268724722981763557936573405648178",
    "6062677702410680024315392235188823274104219383883410807999",
};

}  // namespace

TEST_SUITE("mirror_engine") {

TEST_CASE("BPS counts through two codimension-two subspaces of the degree-7 fivefold") {
    MirrorEngine e(7, 7, 10);
    BPSTable t = e.bps(10, 0, 2, 0, 2);
    REQUIRE(t.entries.size() == 10);
    for (int d = 1; d <= 10; ++d) {
        CAPTURE(d);
        CHECK(t.entries[static_cast<size_t>(d - 1)].bps == Rational::parse(septic_table[d - 1]));
    }
    CHECK(t.all_integral());
    // GW_1 is itself the first count; GW_2 = n_2 + n_1 / 2
    CHECK(t.entries[0].gw == t.entries[0].bps);
    CHECK(t.entries[1].gw == t.entries[1].bps + t.entries[0].bps / Rational(2));
    CHECK(t.entries[2].gw == t.entries[2].bps + t.entries[0].bps / Rational(3));
}

TEST_CASE("quintic two-point numbers carry the genus-zero instanton numbers") {
    // <H, H>_d = sum_{k | d} (d/k)^2 n_{d/k} / k
    const long quintic[] = {2875, 609250, 317206375, 242467530000};
    MirrorEngine e(5, 5, 4);
    BPSTable t = e.bps(4, 0, 1, 0, 1);
    for (int d = 1; d <= 4; ++d)
        CHECK(t.entries[static_cast<size_t>(d - 1)].bps == Rational(quintic[d - 1]) * Rational(d * d));
}

TEST_CASE("multiple-cover transform") {
    std::map<int, Rational> gw = {{1, Rational(5)}, {2, Rational(15, 2)}, {3, Rational(1)}, {4, Rational(7)}};
    BPSTable t = bps_transform(gw, 4);
    CHECK(t.entries[0].bps == Rational(5));
    CHECK(t.entries[1].bps == Rational(5));
    CHECK(t.entries[2].bps == Rational(1) - Rational(5, 3));
    CHECK(t.entries[3].bps == Rational(7) - Rational(5, 2) - Rational(5, 4));
    CHECK_THROWS(bps_transform({{1, Rational(1)}}, 2));
}

TEST_CASE("integrality for every dimension-correct H-insertion pair") {
    for (int n = 5; n <= 9; ++n) {
        MirrorEngine e(n, n, 12);
        for (int b1 = 0; b1 <= n - 3; ++b1) {
            CAPTURE(n);
            CAPTURE(b1);
            CHECK(e.bps(12, 0, b1, 0, n - 3 - b1).all_integral());
        }
    }
}

TEST_CASE("two-point series is symmetric under the swap") {
    for (auto [n, a] : {std::pair{5, 5}, std::pair{4, 3}, std::pair{6, 4}}) CHECK(z_two_point(n, a, 4).is_swap_symmetric());
}

TEST_CASE("extraction bounds and the dimension filter") {
    MirrorEngine e(7, 7, 3);
    CHECK(dimension_ok(7, 7, {1, 0, 2, 0, 2}));
    CHECK_FALSE(dimension_ok(7, 7, {1, 0, 1, 0, 2}));
    GwValue zero = e.invariant({1, 0, 1, 0, 2});
    CHECK(zero.value == Rational(0));
    CHECK(zero.reason == "dimension");
    CHECK(e.invariant({1, 0, 2, 0, 2}).value == Rational(1707797));
    CHECK(e.invariant({1, 0, 2, 0, 2}).reason.empty());
    CHECK_THROWS_AS(e.invariant({4, 0, 2, 0, 2}), std::out_of_range);
    CHECK_THROWS_AS(e.invariant({1, 0, 7, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(e.invariant({1, -1, 2, 0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(e.bps(2, 0, 1, 0, 1), std::invalid_argument);
}

TEST_CASE("descendant insertions obey the swap") {
    MirrorEngine e(6, 5, 3);
    for (int d = 1; d <= 3; ++d)
        for (int a1 = 0; a1 <= 3 + d; ++a1)
            for (int b1 = 0; b1 < 6; ++b1)
                for (int b2 = 0; b2 < 6; ++b2) {
                    int a2 = 3 + d - a1 - b1 - b2;
                    if (a2 < 0) continue;
                    CHECK(e.invariant({d, a1, b1, a2, b2}).value == e.invariant({d, a2, b2, a1, b1}).value);
                }
}

TEST_CASE("thread count does not change results") {
    MirrorEngine one(7, 7, 6, 1), four(7, 7, 6, 4);
    for (int d = 1; d <= 6; ++d)
        for (int k1 = 0; k1 < 7; ++k1)
            for (int k2 = 0; k2 < 7; ++k2) CHECK(one.two_point().at(d, k1, k2) == four.two_point().at(d, k1, k2));
}

}
