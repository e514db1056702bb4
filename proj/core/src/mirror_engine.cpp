#include "mirrorgw/mirror_engine.hpp"

#include <stdexcept>
#include <string>

#include "mirrorgw/parallel.hpp"

namespace mgw {

MirrorSeries mirror_transform(const MirrorSeries& m, const MirrorMap& map) {
    int order = std::min({m.u_order(), map.g.order(), map.shift.order()});
    MirrorSeries exponent(m.n(), m.a(), order, m.var());
    exponent.set_cap(m.cap());
    for (int d = 1; d <= order; ++d) {
        if (!map.shift[d].is_zero()) exponent.at(d, 0) = LaurentWindow::monomial(-1, -map.shift[d]);
        if (m.n() > 1 && !map.g[d].is_zero()) exponent.at(d, 1) = LaurentWindow::monomial(-1, -map.g[d]);
    }
    MirrorSeries conjugated = exponent.exp() * m;
    return conjugated.compose(series_revert(map.g.truncated(order)));
}

std::vector<MirrorSeries> build_Y_ladder(int n, int a, int u_order, const HGTable& table) {
    if (table.n() != n || table.a() != a || table.u_order() < u_order || table.p_max() < n - 1)
        throw std::invalid_argument("hypergeometric table does not cover the ladder");
    std::vector<MirrorSeries> y;
    y.push_back(build_Y(n, a, u_order, YVariant::Y_minus_1));
    const MirrorSeries& ym1 = y.front();
    y.push_back((ym1.times_x() + ym1.times_h_euler()).times_series(recip(table.diagonal(0).truncated(u_order))));
    if (a == n) {
        for (int p = 1; p < n; ++p) y.push_back(Dp_apply(p, table, y[1]));
        return y;
    }
    for (int p = 1; p < n; ++p) {
        const MirrorSeries& prev = y[static_cast<size_t>(p)];
        std::vector<QSeries> dc;
        for (int r = 0; r <= p; ++r) {
            QSeries c(Var::q, u_order);
            int k = p + 1 - r;
            if (k < n)
                for (int d = 0; d <= u_order; ++d) c[d] = prev.coeff(d, k, -1) * Rational(d);
            dc.push_back(std::move(c));
        }
        QSeries norm = dc[0];
        norm[0] += Rational(1);
        MirrorSeries w = prev.times_x() + prev.times_h_euler();
        for (int r = 1; r <= p; ++r) w -= y[static_cast<size_t>(p - r + 1)].times_series(dc[static_cast<size_t>(r)]);
        y.push_back(w.times_series(recip(norm)));
    }
    return y;
}

TwoPointSeries::TwoPointSeries(int n, int a, int u_order)
    : n_(n), a_(a), u_order_(u_order), c_(static_cast<size_t>(u_order) * static_cast<size_t>(n * n)) {
    validate_geometry(n, a);
}

size_t TwoPointSeries::index(int d, int k1, int k2) const {
    if (d < 1 || d > u_order_ || k1 < 0 || k1 >= n_ || k2 < 0 || k2 >= n_)
        throw std::out_of_range("two-point coefficient index out of range");
    return (static_cast<size_t>(d - 1) * static_cast<size_t>(n_) + static_cast<size_t>(k1)) * static_cast<size_t>(n_) +
           static_cast<size_t>(k2);
}

const BiLaurent& TwoPointSeries::at(int d, int k1, int k2) const { return c_[index(d, k1, k2)]; }
BiLaurent& TwoPointSeries::at(int d, int k1, int k2) { return c_[index(d, k1, k2)]; }

bool TwoPointSeries::is_swap_symmetric() const {
    for (int d = 1; d <= u_order_; ++d)
        for (int k1 = 0; k1 < n_; ++k1)
            for (int k2 = 0; k2 < n_; ++k2)
                if (!(at(d, k1, k2) == at(d, k2, k1).swapped())) return false;
    return true;
}

TwoPointSeries assemble_two_point(const std::vector<MirrorSeries>& z, int threads) {
    if (z.empty()) throw std::invalid_argument("no Z_p series supplied");
    int n = z.front().n();
    int a = z.front().a();
    if (static_cast<int>(z.size()) != n + 1) throw std::invalid_argument("need Z_p for p = -1..n-1");
    int order = z.front().u_order();
    for (const auto& s : z) order = std::min(order, s.u_order());
    TwoPointSeries out(n, a, order);
    parallel_for(order, threads, [&](int idx) {
        int d = idx + 1;
        for (int k1 = 0; k1 < n; ++k1)
            for (int k2 = 0; k2 < n; ++k2) {
                BiLaurent sum;
                for (int p = 0; p < n; ++p) {
                    const MirrorSeries& left = z[static_cast<size_t>(p + 1)];
                    const MirrorSeries& right = z[static_cast<size_t>(n - 1 - p)];
                    for (int d1 = 0; d1 <= d; ++d1) {
                        const LaurentWindow& l = left.at(d1, k1);
                        const LaurentWindow& r = right.at(d - d1, k2);
                        if (l.is_zero() || r.is_zero()) continue;
                        for (int e1 = l.lo(); e1 <= l.hi(); ++e1) {
                            Rational c1 = l.coeff(e1);
                            if (c1.is_zero()) continue;
                            c1 *= Rational(a);
                            for (int e2 = r.lo(); e2 <= r.hi(); ++e2) sum.add_term(e1, e2, c1 * r.coeff(e2));
                        }
                    }
                }
                try {
                    out.at(d, k1, k2) = sum.divided_by_sum();
                } catch (const DivisibilityError& e) {
                    throw DivisibilityError("degree " + std::to_string(d) + " coefficient x1^" + std::to_string(k1) +
                                            " x2^" + std::to_string(k2) + ": " + e.what());
                }
            }
    });
    return out;
}

bool dimension_ok(int n, int a, const InvariantKey& key) {
    return key.a1 + key.b1 + key.a2 + key.b2 == n - 3 + (n - a) * key.d;
}

GwValue extract_gw(const TwoPointSeries& z, const InvariantKey& key) {
    int n = z.n();
    if (key.d < 1 || key.d > z.u_order()) throw std::out_of_range("degree outside the computed range");
    if (key.a1 < 0 || key.a2 < 0 || key.b1 < 0 || key.b2 < 0 || key.b1 >= n || key.b2 >= n)
        throw std::invalid_argument("insertion exponents out of range");
    if (!dimension_ok(n, z.a(), key)) return {Rational(0), "dimension"};
    const BiLaurent& c = z.at(key.d, n - 1 - key.b1, n - 1 - key.b2);
    return {c.coeff(-1 - key.a1, -1 - key.a2), ""};
}

bool BPSTable::all_integral() const {
    for (const auto& e : entries)
        if (!e.bps.is_integer()) return false;
    return true;
}

BPSTable bps_transform(const std::map<int, Rational>& gw, int d_max) {
    BPSTable t;
    std::map<int, Rational> bps;
    for (int d = 1; d <= d_max; ++d) {
        auto it = gw.find(d);
        if (it == gw.end()) throw std::invalid_argument("missing GW value in degree " + std::to_string(d));
        Rational v = it->second;
        for (int k = 2; k <= d; ++k)
            if (d % k == 0) v -= bps[d / k] / Rational(k);
        bps[d] = v;
        t.entries.push_back({d, it->second, v});
    }
    return t;
}

namespace {

std::vector<MirrorSeries> transform_all(const std::vector<MirrorSeries>& y, const MirrorMap& map, int threads) {
    std::vector<MirrorSeries> z(y.size(), MirrorSeries(y.front().n(), y.front().a(), 0));
    parallel_for(static_cast<int>(y.size()), threads,
                 [&](int k) { z[static_cast<size_t>(k)] = mirror_transform(y[static_cast<size_t>(k)], map); });
    return z;
}

}  // namespace

MirrorEngine::MirrorEngine(int n, int a, int u_order, int threads)
    : n_(n), a_(a), u_order_(u_order), threads_(threads),
      table_(build_I_table(n, a, std::max(n - 1, 1), u_order)),
      map_(mirror_map(table_)),
      y_(build_Y_ladder(n, a, u_order, table_)),
      z_(transform_all(y_, map_, threads)),
      z_one_(mirror_transform(build_Y(n, a, u_order, YVariant::Y_unit), map_)),
      two_point_(assemble_two_point(z_, threads)) {}

const MirrorSeries& MirrorEngine::y(int p) const {
    if (p < -1 || p >= n_) throw std::out_of_range("p must lie in [-1, n-1]");
    return y_[static_cast<size_t>(p + 1)];
}

const MirrorSeries& MirrorEngine::z(int p) const {
    if (p < -1 || p >= n_) throw std::out_of_range("p must lie in [-1, n-1]");
    return z_[static_cast<size_t>(p + 1)];
}

GwValue MirrorEngine::invariant(const InvariantKey& key) const { return extract_gw(two_point_, key); }

BPSTable MirrorEngine::bps(int d_max, int a1, int b1, int a2, int b2) const {
    if (d_max > u_order_) throw std::out_of_range("d_max exceeds the engine's u_order");
    std::map<int, Rational> gw;
    for (int d = 1; d <= d_max; ++d) {
        GwValue v = invariant({d, a1, b1, a2, b2});
        if (!v.reason.empty()) throw std::invalid_argument("insertions fail the dimension condition");
        gw[d] = v.value;
    }
    BPSTable t = bps_transform(gw, d_max);
    t.n = n_;
    t.a = a_;
    t.a1 = a1;
    t.b1 = b1;
    t.a2 = a2;
    t.b2 = b2;
    return t;
}

MirrorSeries z_p_series(int p, int n, int a, int u_order) {
    validate_geometry(n, a);
    if (p < -1 || p >= n) throw std::out_of_range("p must lie in [-1, n-1]");
    HGTable table = build_I_table(n, a, std::max(n - 1, 1), u_order);
    auto y = build_Y_ladder(n, a, u_order, table);
    return mirror_transform(y[static_cast<size_t>(p + 1)], mirror_map(table));
}

MirrorSeries z_onepoint(int n, int a, int u_order) {
    HGTable table = build_I_table(n, a, 1, u_order);
    return mirror_transform(build_Y(n, a, u_order, YVariant::Y_unit), mirror_map(table));
}

TwoPointSeries z_two_point(int n, int a, int u_order) { return MirrorEngine(n, a, u_order).two_point(); }

}  // namespace mgw
