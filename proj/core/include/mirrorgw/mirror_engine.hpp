#pragma once

#include <map>
#include <string>
#include <vector>

#include "mirrorgw/hypergeometric.hpp"
#include "mirrorgw/laurent.hpp"

namespace mgw {

// Multiply by exp(-(g(q) x + shift(q))/h) and substitute q = revert(g)(u).
MirrorSeries mirror_transform(const MirrorSeries& m, const MirrorMap& map);

// Y_p for p = -1..n-1 (index p + 1), all in q. For a = n the ladder is
// D^p applied to Y; otherwise the corrected ladder with coefficients read off
// the h^{-1} terms of the previous step.
std::vector<MirrorSeries> build_Y_ladder(int n, int a, int u_order, const HGTable& table);

// Two-point series: stores the quotient by (h1 + h2) for d >= 1.
class TwoPointSeries {
public:
    TwoPointSeries(int n, int a, int u_order);

    int n() const { return n_; }
    int a() const { return a_; }
    int u_order() const { return u_order_; }
    const BiLaurent& at(int d, int k1, int k2) const;
    BiLaurent& at(int d, int k1, int k2);
    bool is_swap_symmetric() const;

private:
    size_t index(int d, int k1, int k2) const;
    int n_, a_, u_order_;
    std::vector<BiLaurent> c_;
};

// <tau_{a1} H^{b1}, tau_{a2} H^{b2}>_d
struct InvariantKey {
    int d = 1;
    int a1 = 0, b1 = 0;
    int a2 = 0, b2 = 0;
    friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

bool dimension_ok(int n, int a, const InvariantKey& key);

struct GwValue {
    Rational value;
    std::string reason;  // empty for a computed value, "dimension" for a structural zero
};

GwValue extract_gw(const TwoPointSeries& z, const InvariantKey& key);

struct BPSEntry {
    int d;
    Rational gw;
    Rational bps;
};

struct BPSTable {
    int n = 0, a = 0;
    int a1 = 0, b1 = 0, a2 = 0, b2 = 0;
    std::vector<BPSEntry> entries;
    bool all_integral() const;
};

// n_d = GW_d - sum_{k | d, k >= 2} n_{d/k} / k
BPSTable bps_transform(const std::map<int, Rational>& gw, int d_max);

// (h1 + h2)^{-1} a sum_{p=0}^{n-1} Z_p(h1, x1) Z_{n-2-p}(h2, x2), degrees >= 1;
// z holds Z_p at index p + 1.
TwoPointSeries assemble_two_point(const std::vector<MirrorSeries>& z, int threads = 1);

// Caches every series of one (n, a, u_order) computation.
class MirrorEngine {
public:
    MirrorEngine(int n, int a, int u_order, int threads = 1);

    int n() const { return n_; }
    int a() const { return a_; }
    int u_order() const { return u_order_; }
    const HGTable& table() const { return table_; }
    const MirrorMap& map() const { return map_; }

    const MirrorSeries& y(int p) const;  // Y_p in q, p in [-1, n-1]
    const MirrorSeries& z(int p) const;  // Z_p in u, p in [-1, n-1]
    const MirrorSeries& z_onepoint() const { return z_one_; }
    const TwoPointSeries& two_point() const { return two_point_; }

    GwValue invariant(const InvariantKey& key) const;
    BPSTable bps(int d_max, int a1, int b1, int a2, int b2) const;

private:
    int n_, a_, u_order_, threads_;
    HGTable table_;
    MirrorMap map_;
    std::vector<MirrorSeries> y_;
    std::vector<MirrorSeries> z_;
    MirrorSeries z_one_;
    TwoPointSeries two_point_;
};

MirrorSeries z_p_series(int p, int n, int a, int u_order);
MirrorSeries z_onepoint(int n, int a, int u_order);
TwoPointSeries z_two_point(int n, int a, int u_order);

}  // namespace mgw
