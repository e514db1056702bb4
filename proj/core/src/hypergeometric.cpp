#include "mirrorgw/hypergeometric.hpp"

#include <stdexcept>
#include <string>

namespace mgw {

void validate_geometry(int n, int a) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (a < 1 || a > n) throw std::invalid_argument("hypersurface degree a must satisfy 1 <= a <= n");
}

HGTable::HGTable(int n, int a, int p_max, int u_order, std::vector<std::vector<TPolySeries>> rows)
    : n_(n), a_(a), p_max_(p_max), u_order_(u_order), rows_(std::move(rows)) {}

const TPolySeries& HGTable::I(int p, int q) const {
    if (p < 0 || q < p || q > p_max_) throw std::out_of_range("I_{p,q} outside the table");
    return rows_[static_cast<size_t>(p)][static_cast<size_t>(q - p)];
}

QSeries HGTable::diagonal(int p) const { return I(p, p).pure_part(); }

namespace {

// w^{shift} prod_{r=first}^{first+ad-1} (a w + r) / prod_{r=1}^{d} (w + r)^n  to w^order
QSeries hypergeometric_factor(int n, int a, int d, int first, int shift, int order) {
    QSeries f = QSeries::constant(Var::w, order, Rational(1));
    for (int r = first; r < first + a * d; ++r) f = f * QSeries(Var::w, order, {Rational(r), Rational(a)});
    for (int r = 1; r <= d; ++r) {
        QSeries inv = recip(QSeries(Var::w, order, {Rational(r), Rational(1)}));
        for (int k = 0; k < n; ++k) f = f * inv;
    }
    QSeries out(Var::w, order);
    for (int k = shift; k <= order; ++k) out[k] = f[k - shift];
    return out;
}

}  // namespace

HGTable build_I_table(int n, int a, int p_max, int u_order) {
    validate_geometry(n, a);
    if (p_max < 0 || u_order < 0) throw std::invalid_argument("p_max and u_order must be nonnegative");

    // sum_q I_{0,q} w^q = e^{wt} sum_d e^{dt} F_d(w)
    std::vector<QSeries> factors;
    for (int d = 0; d <= u_order; ++d) factors.push_back(hypergeometric_factor(n, a, d, 1, (n - a) * d, p_max));

    std::vector<std::vector<TPolySeries>> rows(static_cast<size_t>(p_max) + 1);
    for (int q = 0; q <= p_max; ++q) {
        Series<QPoly> s(Var::q, u_order);
        for (int d = 0; d <= u_order; ++d) {
            std::vector<Rational> tc(static_cast<size_t>(q) + 1);
            for (int j = 0; j <= q; ++j) tc[static_cast<size_t>(j)] = factors[static_cast<size_t>(d)][q - j] / Rational::factorial(static_cast<unsigned>(j));
            s[d] = QPoly(std::move(tc));
        }
        rows[0].emplace_back(std::move(s), q);
    }
    for (int p = 1; p <= p_max; ++p) {
        const TPolySeries& prev_diag = rows[static_cast<size_t>(p - 1)][0];
        if (!prev_diag.is_pure() || !prev_diag[0].coeff(0).is_one())
            throw std::logic_error("diagonal I_{" + std::to_string(p - 1) + "," + std::to_string(p - 1) +
                                   "} is not a unit q-series");
        QSeries inv = recip(prev_diag.pure_part());
        for (int q = p; q <= p_max; ++q) {
            const TPolySeries& above = rows[static_cast<size_t>(p - 1)][static_cast<size_t>(q - p + 1)];
            rows[static_cast<size_t>(p)].push_back(dt_derivative(above.times(inv)));
        }
    }
    const TPolySeries& last = rows[static_cast<size_t>(p_max)][0];
    if (!last.is_pure() || !last[0].coeff(0).is_one())
        throw std::logic_error("diagonal I_{p_max,p_max} is not a unit q-series");
    return HGTable(n, a, p_max, u_order, std::move(rows));
}

MirrorMap mirror_map(const HGTable& table) {
    if (table.p_max() < 1) throw std::invalid_argument("mirror map needs I_{0,1}");
    TPolySeries ratio = table.I(0, 1).times(recip(table.diagonal(0)));
    Series<QPoly> s = ratio.series();
    s[0] -= QPoly::monomial(1, Rational(1));
    TPolySeries rest(s, 1);
    if (!rest.is_pure()) throw std::logic_error("I_{0,1}/I_{0,0} - t retains t-dependence");
    QSeries part = rest.pure_part();
    int order = table.u_order();
    MirrorMap m{QSeries(Var::q, order), QSeries(Var::q, order)};
    int excess = table.n() - table.a();
    // The q^d coefficient of I_{0,1} multiplies x^{1 - excess*d} h^{-1}.
    for (int d = 0; d <= order; ++d) {
        if (part[d].is_zero()) continue;
        if (excess * d == 0) m.g[d] = part[d];
        else if (excess * d == 1) m.shift[d] = part[d];
        else throw std::logic_error("I_{0,1} has a term of impossible x-degree");
    }
    return m;
}

WindowCap default_window_cap(int n, int a, int u_order) {
    return WindowCap{-((n - a + 1) * u_order + n + 2), n + 2};
}

MirrorSeries::MirrorSeries(int n, int a, int u_order, Var var)
    : n_(n), a_(a), u_order_(u_order), var_(var), cap_(default_window_cap(n, a, u_order)),
      c_(static_cast<size_t>(u_order) + 1, std::vector<LaurentWindow>(static_cast<size_t>(n))) {
    validate_geometry(n, a);
    if (u_order < 0) throw std::invalid_argument("negative u_order");
}

const LaurentWindow& MirrorSeries::at(int d, int k) const { return c_.at(static_cast<size_t>(d)).at(static_cast<size_t>(k)); }
LaurentWindow& MirrorSeries::at(int d, int k) { return c_.at(static_cast<size_t>(d)).at(static_cast<size_t>(k)); }

void MirrorSeries::check_compatible(const MirrorSeries& o) const {
    if (n_ != o.n_ || a_ != o.a_) throw std::invalid_argument("mirror series of different geometries");
    if (var_ != o.var_) throw SeriesError("mirror series variable mismatch");
}

MirrorSeries MirrorSeries::times_x() const {
    MirrorSeries r(n_, a_, u_order_, var_);
    r.cap_ = cap_;
    for (int d = 0; d <= u_order_; ++d)
        for (int k = 0; k + 1 < n_; ++k) r.at(d, k + 1) = at(d, k);
    return r;
}

MirrorSeries MirrorSeries::times_h_euler() const {
    MirrorSeries r(n_, a_, u_order_, var_);
    r.cap_ = cap_;
    for (int d = 1; d <= u_order_; ++d)
        for (int k = 0; k < n_; ++k) r.at(d, k) = at(d, k).shifted(1).scaled(Rational(d));
    r.check_cap();
    return r;
}

MirrorSeries MirrorSeries::times_series(const QSeries& f) const {
    int order = std::min(u_order_, f.order());
    MirrorSeries r(n_, a_, order, var_);
    r.cap_ = cap_;
    for (int d = 0; d <= order; ++d)
        for (int j = 0; j <= d; ++j) {
            if (f[j].is_zero()) continue;
            for (int k = 0; k < n_; ++k)
                if (!at(d - j, k).is_zero()) r.at(d, k) += at(d - j, k).scaled(f[j]);
        }
    return r;
}

MirrorSeries MirrorSeries::scaled(const Rational& f) const {
    MirrorSeries r = *this;
    for (auto& row : r.c_)
        for (auto& w : row) w = w.scaled(f);
    return r;
}

MirrorSeries MirrorSeries::compose(const QSeries& phi) const {
    if (!phi[0].is_zero()) throw SeriesError("substitution series must vanish at 0");
    int order = std::min(u_order_, phi.order());
    MirrorSeries r(n_, a_, order, phi.var());
    r.cap_ = cap_;
    QSeries power = QSeries::constant(phi.var(), order, Rational(1));
    QSeries base = phi.truncated(order);
    for (int d = 0; d <= order; ++d) {
        for (int e = d; e <= order; ++e) {
            if (power[e].is_zero()) continue;
            for (int k = 0; k < n_; ++k)
                if (!at(d, k).is_zero()) r.at(e, k) += at(d, k).scaled(power[e]);
        }
        if (d < order) power = power * base;
    }
    return r;
}

MirrorSeries MirrorSeries::exp() const {
    for (int k = 0; k < n_; ++k)
        if (!at(0, k).is_zero()) throw SeriesError("exp of a mirror series needs a vanishing degree-0 term");
    MirrorSeries result(n_, a_, u_order_, var_);
    result.cap_ = cap_;
    result.at(0, 0) = LaurentWindow::monomial(0, Rational(1));
    MirrorSeries power = result;
    // Every factor raises the v-degree, so u_order + 1 terms suffice.
    for (int j = 1; j <= u_order_; ++j) {
        power = (power * *this).scaled(Rational(1, j));
        if (power.is_zero()) break;
        result += power;
    }
    result.check_cap();
    return result;
}

MirrorSeries MirrorSeries::mod_h_inverse() const {
    MirrorSeries r(n_, a_, u_order_, var_);
    r.cap_ = cap_;
    for (int d = 0; d <= u_order_; ++d)
        for (int k = 0; k < n_; ++k) {
            const LaurentWindow& w = at(d, k);
            for (int e = std::max(0, w.lo()); e <= w.hi(); ++e) r.at(d, k).add_term(e, w.coeff(e));
        }
    return r;
}

MirrorSeries MirrorSeries::with_var(Var v) const {
    MirrorSeries r = *this;
    r.var_ = v;
    return r;
}

MirrorSeries& MirrorSeries::operator+=(const MirrorSeries& o) {
    check_compatible(o);
    if (o.u_order_ < u_order_) {
        u_order_ = o.u_order_;
        c_.resize(static_cast<size_t>(u_order_) + 1);
    }
    for (int d = 0; d <= u_order_; ++d)
        for (int k = 0; k < n_; ++k) at(d, k) += o.at(d, k);
    return *this;
}

MirrorSeries& MirrorSeries::operator-=(const MirrorSeries& o) { return *this += o.scaled(Rational(-1)); }

MirrorSeries operator*(const MirrorSeries& a, const MirrorSeries& b) {
    a.check_compatible(b);
    int order = std::min(a.u_order_, b.u_order_);
    MirrorSeries r(a.n_, a.a_, order, a.var_);
    r.cap_ = a.cap_;
    for (int d1 = 0; d1 <= order; ++d1)
        for (int k1 = 0; k1 < a.n_; ++k1) {
            const LaurentWindow& x = a.at(d1, k1);
            if (x.is_zero()) continue;
            for (int d2 = 0; d1 + d2 <= order; ++d2)
                for (int k2 = 0; k1 + k2 < a.n_; ++k2) {
                    const LaurentWindow& y = b.at(d2, k2);
                    if (!y.is_zero()) r.at(d1 + d2, k1 + k2) += x * y;
                }
        }
    r.check_cap();
    return r;
}

bool MirrorSeries::is_zero() const {
    for (const auto& row : c_)
        for (const auto& w : row)
            if (!w.is_zero()) return false;
    return true;
}

void MirrorSeries::check_cap() const {
    for (const auto& row : c_)
        for (const auto& w : row) w.check_cap(cap_);
}

bool operator==(const MirrorSeries& a, const MirrorSeries& b) {
    return a.n_ == b.n_ && a.a_ == b.a_ && a.u_order_ == b.u_order_ && a.var_ == b.var_ && a.c_ == b.c_;
}

MirrorSeries build_Y(int n, int a, int u_order, YVariant variant) {
    validate_geometry(n, a);
    MirrorSeries m(n, a, u_order, Var::q);
    bool minus_one = variant == YVariant::Y_minus_1;
    // Non-equivariant: the q^d term is h^{(a-n)d} G_d(x/h), expanded mod x^n.
    for (int d = 0; d <= u_order; ++d) {
        QSeries g = hypergeometric_factor(n, a, d, minus_one ? 0 : 1, 0, n - 1);
        for (int k = 0; k < n; ++k)
            if (!g[k].is_zero()) m.at(d, k) = LaurentWindow::monomial(-k + (a - n) * d, g[k]);
    }
    if (minus_one) {
        m.check_cap();
        return m;
    }
    HGTable table = build_I_table(n, a, 0, u_order);
    MirrorSeries unit = m.times_series(recip(table.diagonal(0)));
    if (variant == YVariant::Y_unit) return unit;
    return unit.times_x();
}

MirrorSeries Dp_apply(int p, const HGTable& table, const MirrorSeries& m) {
    if (p < 0) throw std::invalid_argument("negative ladder depth");
    if (p > table.p_max()) throw std::out_of_range("ladder depth exceeds the table's p_max");
    MirrorSeries cur = m;
    for (int k = 1; k <= p; ++k) cur = (cur.times_x() + cur.times_h_euler()).times_series(recip(table.diagonal(k)));
    return cur;
}

}  // namespace mgw
