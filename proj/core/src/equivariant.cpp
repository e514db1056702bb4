#include "mirrorgw/equivariant.hpp"

#include <stdexcept>

#include "mirrorgw/linalg.hpp"

namespace mgw {

namespace {

RSeries lift(const QSeries& s, Var var) {
    RSeries r(var, s.order());
    for (int d = 0; d <= s.order(); ++d) r[d] = RatFn(s[d]);
    return r;
}

QPoly lin(const Rational& c0, const Rational& c1) { return QPoly::linear(c0, c1); }

RatFn over_h(const Rational& c) { return RatFn::monomial(-1, c); }

// (alpha + d h) S_d for every d
RSeries euler_shift(const RSeries& s, const Rational& alpha) {
    RSeries r(s.var(), s.order());
    for (int d = 0; d <= s.order(); ++d)
        if (!s[d].is_zero()) r[d] = s[d] * RatFn(lin(alpha, Rational(d)));
    return r;
}

std::string pole_detail(const RatFn& rem) {
    QPoly off = rem.off_origin_denominator();
    if (off.degree() == 1) return "pole at h = " + (-off.coeff(0) / off.coeff(1)).str();
    return "non-Laurent denominator " + poly_str(off);
}

}  // namespace

FixedPointSeries::FixedPointSeries(int n, int u_order, Var var)
    : p_(static_cast<size_t>(n), RSeries(var, u_order)) {
    if (n < 1) throw std::invalid_argument("fixed-point series needs n >= 1");
}

FixedPointSeries::FixedPointSeries(std::vector<RSeries> points) : p_(std::move(points)) {
    if (p_.empty()) throw std::invalid_argument("fixed-point series needs n >= 1");
}

FixedPointSeries FixedPointSeries::truncated(int order) const {
    std::vector<RSeries> t;
    for (const auto& s : p_) t.push_back(s.truncated(order));
    return FixedPointSeries(std::move(t));
}

FixedPointSeries FixedPointSeries::with_var(Var v) const {
    std::vector<RSeries> t;
    for (const auto& s : p_) t.emplace_back(v, s.order(), s.coeffs());
    return FixedPointSeries(std::move(t));
}

FixedPointSeries& FixedPointSeries::operator+=(const FixedPointSeries& o) {
    if (o.n() != n()) throw std::invalid_argument("fixed-point series of different n");
    for (int i = 0; i < n(); ++i) point(i) = point(i) + o.point(i);
    return *this;
}

FixedPointSeries& FixedPointSeries::operator-=(const FixedPointSeries& o) {
    if (o.n() != n()) throw std::invalid_argument("fixed-point series of different n");
    for (int i = 0; i < n(); ++i) point(i) = point(i) - o.point(i);
    return *this;
}

bool FixedPointSeries::is_zero() const {
    for (const auto& s : p_)
        if (!mgw::is_zero(s)) return false;
    return true;
}

void Report::absorb(const Report& other, const std::string& prefix) {
    for (const auto& f : other.failures) failures.push_back({f.i, f.d, prefix + ": " + f.detail});
}

FixedPointSeries equivariant_Y(const AlphaSpec& spec, int u_order, YVariant variant) {
    const int n = spec.n();
    const int a = spec.a();
    FixedPointSeries out(n, u_order, Var::q);
    bool minus_one = variant == YVariant::Y_minus_1;
    QSeries i0inv = recip(build_I_table(n, a, 0, u_order).diagonal(0));
    for (int i = 0; i < n; ++i) {
        const Rational& x = spec[i];
        RSeries s(Var::q, u_order);
        for (int d = 0; d <= u_order; ++d) {
            QPoly num(Rational(1));
            int first = minus_one ? 0 : 1;
            for (int r = first; r < first + a * d; ++r) num = num * lin(Rational(a) * x, Rational(r));
            QPoly den(Rational(1));
            for (int r = 1; r <= d; ++r)
                for (int k = 0; k < n; ++k) den = den * lin(x - spec[k], Rational(r));
            s[d] = RatFn(num, den);
        }
        if (!minus_one) {
            s = s * lift(i0inv, Var::q);
            if (variant == YVariant::Y)
                for (int d = 0; d <= u_order; ++d) s[d] = s[d] * RatFn(x);
        }
        out.point(i) = std::move(s);
    }
    return out;
}

Rational recursion_coeff(const AlphaSpec& spec, int i, int j, int d) {
    if (i == j) throw std::invalid_argument("recursion coefficient needs i != j");
    if (d < 1) throw std::invalid_argument("recursion coefficient needs d >= 1");
    const int a = spec.a();
    Rational omega = (spec[j] - spec[i]) / Rational(d);
    Rational num(1);
    for (int r = 0; r < a * d; ++r) num *= Rational(a) * spec[i] + Rational(r) * omega;
    Rational den(d);
    for (int r = 1; r <= d; ++r)
        for (int k = 0; k < spec.n(); ++k) {
            if (r == d && k == j) continue;
            Rational f = spec[i] - spec[k] + Rational(r) * omega;
            if (f.is_zero()) throw ResonanceError("recursion coefficient denominator vanishes");
            den *= f;
        }
    return num / den;
}

Report check_recursive(const FixedPointSeries& z, const AlphaSpec& spec, int max_degree) {
    Report rep{"recursion", {{"n", std::to_string(spec.n())}, {"alpha", spec.str()},
                             {"D", std::to_string(max_degree)}}, {}};
    const int n = spec.n();
    if (z.n() != n) throw std::invalid_argument("series and weights disagree on n");
    int top = std::min(max_degree, z.u_order());
    for (int i = 0; i < n; ++i)
        for (int d = 0; d <= top; ++d) {
            RatFn rem = z.coeff(i, d);
            for (int d0 = 1; d0 <= d; ++d0)
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    Rational c = (spec[j] - spec[i]) / Rational(d0);
                    Rational value = z.coeff(j, d - d0).eval(c);
                    if (value.is_zero()) continue;
                    rem -= RatFn(QPoly(recursion_coeff(spec, i, j, d0) * value), lin(-c, Rational(1)));
                }
            if (!rem.is_laurent_in_h()) rep.failures.push_back({i, d, pole_detail(rem)});
        }
    return rep;
}

FixedPointSeries inject_pole(const FixedPointSeries& z, int i, int d, const Rational& pole, const Rational& eps) {
    FixedPointSeries out = z;
    out.coeff(i, d) += RatFn(QPoly(eps), lin(-pole, Rational(1)));
    return out;
}

RatFn phi_moment(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec, int d, int q) {
    RatFn total;
    for (int i = 0; i < spec.n(); ++i) {
        RatFn acc;
        for (int dy = 0; dy <= d; ++dy) {
            const RatFn& yc = y.coeff(i, dy);
            const RatFn& zc = z.coeff(i, d - dy);
            if (yc.is_zero() || zc.is_zero()) continue;
            QPoly node = lin(spec[i], Rational(dy));
            QPoly power(Rational(1));
            for (int k = 0; k < q; ++k) power = power * node;
            acc += RatFn(power) * yc * zc.reflected();
        }
        total += acc * RatFn(spec.tangent_product(i).inverse());
    }
    return total;
}

std::vector<std::vector<RatFn>> phi_series(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec,
                                           int u_order, int z_order) {
    std::vector<std::vector<RatFn>> out(static_cast<size_t>(u_order) + 1);
    for (int d = 0; d <= u_order; ++d)
        for (int q = 0; q <= z_order; ++q)
            out[static_cast<size_t>(d)].push_back(phi_moment(y, z, spec, d, q) *
                                                  RatFn(Rational::factorial(static_cast<unsigned>(q)).inverse()));
    return out;
}

QPoly q_factor(const AlphaSpec& spec, int i, int d) {
    QPoly p(Rational(1));
    for (int r = 1; r <= d; ++r)
        for (int k = 0; k < spec.n(); ++k) p = p * lin(spec[i] - spec[k], Rational(r));
    return p;
}

std::vector<OmegaPoly> E_family(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec,
                                int max_degree) {
    const int n = spec.n();
    std::vector<OmegaPoly> out;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<QPoly> nodes;
        std::vector<RatFn> values;
        for (int dy = 0; dy <= d; ++dy)
            for (int i = 0; i < n; ++i) {
                nodes.push_back(lin(spec[i], Rational(dy)));
                RatFn ny = RatFn(q_factor(spec, i, dy)) * y.coeff(i, dy);
                RatFn nz = (RatFn(q_factor(spec, i, d - dy)) * z.coeff(i, d - dy)).reflected();
                values.push_back(ny * nz);
            }
        out.push_back(lagrange_interpolate(nodes, values));
    }
    return out;
}

std::vector<QPoly> residue_weights(const AlphaSpec& spec, int d, int count) {
    std::vector<QPoly> h(static_cast<size_t>(count));
    if (count == 0) return h;
    h[0] = QPoly(Rational(1));
    for (int r = 0; r <= d; ++r)
        for (int k = 0; k < spec.n(); ++k) {
            QPoly c = lin(spec[k], Rational(r));
            for (size_t s = 1; s < h.size(); ++s) h[s] += c * h[s - 1];
        }
    return h;
}

Report check_mpc(const FixedPointSeries& y, const FixedPointSeries& z, const AlphaSpec& spec, int max_degree,
                 MpcMode mode) {
    Report rep{mode == MpcMode::interpolation ? "mpc_interpolation" : "mpc_z_expansion",
               {{"n", std::to_string(spec.n())}, {"alpha", spec.str()}, {"D", std::to_string(max_degree)}},
               {}};
    int top = std::min({max_degree, y.u_order(), z.u_order()});
    std::vector<OmegaPoly> e = E_family(y, z, spec, top);
    for (int d = 0; d <= top; ++d) {
        const OmegaPoly& ed = e[static_cast<size_t>(d)];
        int bad_s = -1;
        for (int s = 0; s <= ed.degree(); ++s)
            if (!ed.coeff(s).is_polynomial()) {
                bad_s = s;
                break;
            }
        if (mode == MpcMode::interpolation) {
            if (bad_s >= 0)
                rep.failures.push_back({-1, d, "E coefficient of Omega^" + std::to_string(bad_s) +
                                                   " has denominator " + poly_str(ed.coeff(bad_s).den())});
            continue;
        }
        const int L = (d + 1) * spec.n();
        std::vector<QPoly> rw = residue_weights(spec, d, L);
        std::vector<RatFn> f(static_cast<size_t>(L));
        int bad_q = -1;
        RatFn bad_moment;
        for (int s = L - 1; s >= 0; --s) {
            int q = L - 1 - s;
            RatFn moment = phi_moment(y, z, spec, d, q);
            if (bad_q < 0 && !moment.is_polynomial()) {
                bad_q = q;
                bad_moment = moment;
            }
            RatFn v = moment;
            for (int s2 = s + 1; s2 < L; ++s2)
                if (!f[static_cast<size_t>(s2)].is_zero())
                    v -= RatFn(rw[static_cast<size_t>(s2 - s)]) * f[static_cast<size_t>(s2)];
            f[static_cast<size_t>(s)] = v;
            if (!(v == ed.coeff(s)))
                throw std::logic_error("moment reconstruction of E disagrees with interpolation at d=" +
                                       std::to_string(d) + ", s=" + std::to_string(s));
        }
        if ((bad_q < 0) != (bad_s < 0))
            throw std::logic_error("MPC checker modes disagree at d=" + std::to_string(d));
        if (bad_q >= 0)
            rep.failures.push_back({-1, d, "Phi moment z^" + std::to_string(bad_q) + " has denominator " +
                                               poly_str(bad_moment.den())});
    }
    return rep;
}

std::string Transform::name() const {
    switch (kind) {
        case TransformKind::derivative: return "derivative";
        case TransformKind::mul_u_poly: return on_y ? "mul_u_poly(Y)" : "mul_u_poly(Z)";
        case TransformKind::mul_h_poly: return "mul_h_poly";
        case TransformKind::exp_f_over_h: return "exp_f_over_h";
        case TransformKind::mirror: return "mirror";
    }
    return "?";
}

std::pair<FixedPointSeries, FixedPointSeries> apply_transform(const Transform& t, const FixedPointSeries& y,
                                                              const FixedPointSeries& z, const AlphaSpec& spec) {
    if (y.n() != spec.n() || z.n() != spec.n()) throw std::invalid_argument("series and weights disagree on n");
    FixedPointSeries y2 = y;
    FixedPointSeries z2 = z;
    const int n = spec.n();
    switch (t.kind) {
        case TransformKind::derivative:
            for (int i = 0; i < n; ++i) z2.point(i) = euler_shift(z.point(i), spec[i]);
            break;
        case TransformKind::mul_u_poly: {
            FixedPointSeries& target = t.on_y ? y2 : z2;
            for (int i = 0; i < n; ++i) target.point(i) = target.point(i) * lift(t.u_series, target.var());
            break;
        }
        case TransformKind::mul_h_poly:
            if (t.h_poly.is_zero()) throw std::invalid_argument("mul_h_poly needs a nonzero polynomial");
            for (int i = 0; i < n; ++i)
                for (int d = 0; d <= z2.u_order(); ++d) z2.coeff(i, d) = z2.coeff(i, d) * RatFn(t.h_poly);
            break;
        case TransformKind::exp_f_over_h: {
            if (!t.u_series[0].is_zero()) throw std::invalid_argument("exp_f_over_h needs f(0) = 0");
            auto factor = [&](Var v) {
                RSeries e(v, t.u_series.order());
                for (int d = 1; d <= t.u_series.order(); ++d) e[d] = over_h(t.u_series[d]);
                return exp(e);
            };
            for (int i = 0; i < n; ++i) {
                y2.point(i) = y2.point(i) * factor(y2.var());
                z2.point(i) = z2.point(i) * factor(z2.var());
            }
            break;
        }
        case TransformKind::mirror: {
            const QSeries& g = t.u_series;
            if (!g[0].is_zero()) throw std::invalid_argument("mirror transform needs g(0) = 0");
            auto act = [&](const RSeries& s, const Rational& alpha) {
                QSeries eg = exp(g);
                QSeries inner(s.var(), g.order());
                for (int d = 1; d <= g.order(); ++d) inner[d] = eg[d - 1];
                RSeries pre(s.var(), g.order());
                for (int d = 1; d <= g.order(); ++d) pre[d] = over_h(alpha * g[d]);
                return exp(pre) * compose(s, inner);
            };
            for (int i = 0; i < n; ++i) {
                y2.point(i) = act(y.point(i), spec[i]);
                z2.point(i) = act(z.point(i), spec[i]);
            }
            break;
        }
    }
    return {std::move(y2), std::move(z2)};
}

namespace {

struct Step {
    FixedPointSeries y;
    TildeCEntry entry;
};

}  // namespace

EquivariantLadder build_equivariant_ladder(const AlphaSpec& spec, int u_order) {
    const int n = spec.n();
    const int a = spec.a();
    if (n < 2) throw std::invalid_argument("the equivariant ladder needs n >= 2");
    HGTable table = build_I_table(n, a, std::max(n - 1, 1), u_order);
    EquivariantLadder lad;
    lad.y.push_back(equivariant_Y(spec, u_order, YVariant::Y_minus_1));
    {
        RSeries i0inv = lift(recip(table.diagonal(0)), Var::q);
        FixedPointSeries y0(n, u_order, Var::q);
        for (int i = 0; i < n; ++i) y0.point(i) = i0inv * euler_shift(lad.y[0].point(i), spec[i]);
        lad.y.push_back(std::move(y0));
    }
    for (int p = 1; p < n; ++p) {
        const FixedPointSeries& prev = lad.y[static_cast<size_t>(p)];
        TildeCEntry entry;
        entry.p = p;
        entry.equations = n;
        entry.c.assign(static_cast<size_t>(p) + 1, QSeries(Var::q, u_order));
        entry.rank = p + 1;
        for (int d = 0; d <= u_order; ++d) {
            QMatrix m;
            std::vector<Rational> b;
            for (int i = 0; i < n; ++i) {
                std::vector<Rational> row;
                for (int r = 0; r <= p; ++r) row.push_back(spec[i].pow(p + 1 - r));
                m.push_back(std::move(row));
                b.push_back(prev.coeff(i, d).coeff_at_infinity(-1));
            }
            LinearSolution sol = solve_linear(std::move(m), std::move(b));
            if (!sol.consistent)
                throw std::logic_error("ladder step " + std::to_string(p) + ", degree " + std::to_string(d) +
                                       ": h^{-1} coefficients are not a polynomial of degree p+1 in alpha");
            if (!sol.unique) throw std::logic_error("ladder step " + std::to_string(p) + ": singular system");
            entry.rank = std::min(entry.rank, sol.rank);
            for (int r = 0; r <= p; ++r) entry.c[static_cast<size_t>(r)][d] = sol.x[static_cast<size_t>(r)];
        }
        std::vector<QSeries> dc;
        for (const auto& c : entry.c) {
            QSeries t(Var::q, u_order);
            for (int d = 0; d <= u_order; ++d) t[d] = c[d] * Rational(d);
            dc.push_back(std::move(t));
        }
        QSeries norm = dc[0];
        norm[0] += Rational(1);
        if (a == n && !(norm == table.diagonal(p).truncated(u_order)))
            throw std::logic_error("ladder normalizer differs from I_{p,p} at p=" + std::to_string(p));
        RSeries norm_inv = lift(recip(norm), Var::q);
        FixedPointSeries yp(n, u_order, Var::q);
        for (int i = 0; i < n; ++i) {
            RSeries w = euler_shift(prev.point(i), spec[i]);
            for (int r = 1; r <= p; ++r)
                w = w - lift(dc[static_cast<size_t>(r)], Var::q) * lad.y[static_cast<size_t>(p - r + 1)].point(i);
            yp.point(i) = norm_inv * w;
        }
        lad.y.push_back(std::move(yp));
        lad.ledger.push_back(std::move(entry));
    }
    lad.map.g = lad.ledger.front().c[0];
    lad.map.shift = lad.ledger.front().c[1];
    return lad;
}

std::pair<FixedPointSeries, std::vector<TildeCEntry>> build_Yp_equivariant(int p, const AlphaSpec& spec,
                                                                           int u_order) {
    if (p < -1 || p >= spec.n()) throw std::out_of_range("p must lie in [-1, n-1]");
    EquivariantLadder lad = build_equivariant_ladder(spec, u_order);
    std::vector<TildeCEntry> used(lad.ledger.begin(), lad.ledger.begin() + std::max(p, 0));
    return {lad.Y(p), std::move(used)};
}

FixedPointSeries mirror_transform_equivariant(const FixedPointSeries& zq, const AlphaSpec& spec,
                                              const MirrorMap& map) {
    int order = std::min({zq.u_order(), map.g.order(), map.shift.order()});
    QSeries phi = series_revert(map.g.truncated(order));
    std::vector<RSeries> out;
    for (int i = 0; i < zq.n(); ++i) {
        RSeries e(zq.var(), order);
        for (int d = 1; d <= order; ++d) e[d] = over_h(-(map.g[d] * spec[i] + map.shift[d]));
        out.push_back(compose(exp(e) * zq.point(i).truncated(order), phi));
    }
    return FixedPointSeries(std::move(out));
}

EquivariantModel::EquivariantModel(AlphaSpec spec, int u_order)
    : spec_(std::move(spec)), u_order_(u_order), ladder_(build_equivariant_ladder(spec_, u_order)),
      y_unit_(equivariant_Y(spec_, u_order, YVariant::Y_unit)), z_one_(mirror_transform_equivariant(y_unit_, spec_, ladder_.map)) {
    for (const auto& y : ladder_.y) z_.push_back(mirror_transform_equivariant(y, spec_, ladder_.map));
}

const char* identity_name(IdentityKind k) {
    switch (k) {
        case IdentityKind::symmetric_sum: return "symmetric_sum";
        case IdentityKind::ztilde_swap: return "ztilde_swap";
        case IdentityKind::mod_h_inverse: return "mod_h_inverse";
        case IdentityKind::z0_relation: return "z0_relation";
        case IdentityKind::e_symmetry: return "e_symmetry";
    }
    return "?";
}

bool separated_sum_is_zero(const std::vector<std::pair<RatFn, RatFn>>& terms) {
    // Over a common denominator in h2, each power of h2 must carry a vanishing h1-combination.
    QPoly common(Rational(1));
    for (const auto& [l, r] : terms)
        if (!l.is_zero() && !r.is_zero()) common = exact_quotient(common * r.den(), gcd(common, r.den()));
    std::map<int, RatFn> by_power;
    for (const auto& [l, r] : terms) {
        if (l.is_zero() || r.is_zero()) continue;
        QPoly num = r.num() * exact_quotient(common, r.den());
        for (int k = 0; k <= num.degree(); ++k)
            if (!num.coeff(k).is_zero()) by_power[k] += l * RatFn(num.coeff(k));
    }
    for (const auto& [k, v] : by_power)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

Report identity_report(IdentityKind kind, const EquivariantModel& m, int max_degree) {
    return {identity_name(kind),
            {{"n", std::to_string(m.spec().n())}, {"a", std::to_string(m.spec().a())}, {"alpha", m.spec().str()},
             {"D", std::to_string(max_degree)}},
            {}};
}

}  // namespace

Report check_identity(IdentityKind kind, const EquivariantModel& m, int max_degree) {
    Report rep = identity_report(kind, m, max_degree);
    const AlphaSpec& spec = m.spec();
    const int n = spec.n();
    int top = std::min(max_degree, m.u_order());
    switch (kind) {
        case IdentityKind::symmetric_sum:
            for (int i = 0; i < n; ++i)
                for (int d = 0; d <= top; ++d) {
                    RatFn acc;
                    for (int r = 0; r <= n; ++r) {
                        Rational c = spec.sigma()[static_cast<size_t>(r)] * Rational(r % 2 ? -1 : 1);
                        acc += RatFn(c) * m.z(n - 1 - r).coeff(i, d);
                    }
                    if (!acc.is_zero()) rep.failures.push_back({i, d, "sum equals " + acc.str()});
                }
            break;
        case IdentityKind::mod_h_inverse:
            for (int p = -1; p < n; ++p)
                for (int i = 0; i < n; ++i)
                    for (int d = 0; d <= top; ++d) {
                        QPoly part = m.z(p).coeff(i, d).polynomial_part();
                        QPoly want = d == 0 ? QPoly(spec[i].pow(p + 1)) : QPoly();
                        if (!(part == want))
                            rep.failures.push_back({i, d, "Z_" + std::to_string(p) + " mod h^{-1} is " + poly_str(part)});
                    }
            break;
        case IdentityKind::z0_relation:
            for (int i = 0; i < n; ++i)
                for (int d = 0; d <= top; ++d)
                    if (!(m.z(0).coeff(i, d) == m.z_onepoint().coeff(i, d) * RatFn(spec[i])))
                        rep.failures.push_back({i, d, "Z_0 differs from x Z"});
            break;
        case IdentityKind::e_symmetry: {
            struct Pair {
                const FixedPointSeries* y;
                const FixedPointSeries* z;
                const char* label;
            };
            std::vector<Pair> pairs = {{&m.y_unit(), &m.y_minus_1(), "(Y, Y_-1)"},
                                       {&m.z_onepoint(), &m.z(-1), "(Z, Z_-1)"},
                                       {&m.z_onepoint(), &m.z(0), "(Z, Z_0)"}};
            for (const auto& pr : pairs) {
                auto eyz = E_family(*pr.y, *pr.z, spec, top);
                auto ezy = E_family(*pr.z, *pr.y, spec, top);
                for (int d = 0; d <= top; ++d)
                    if (!(ezy[static_cast<size_t>(d)] ==
                          reflect_and_shift(eyz[static_cast<size_t>(d)], Rational(-d))))
                        rep.failures.push_back({-1, d, std::string("E-symmetry fails for ") + pr.label});
            }
            break;
        }
        case IdentityKind::ztilde_swap: {
            // G_p^{(j)} = sum_{q + r = n - 1 - p} (-1)^r sigma_r Z_{q-1}(alpha_j)
            auto g_series = [&](int p, int j) {
                RSeries g(Var::u, top);
                for (int r = 0; r <= n - 1 - p; ++r) {
                    int q = n - 1 - p - r;
                    Rational c = spec.sigma()[static_cast<size_t>(r)] * Rational(r % 2 ? -1 : 1);
                    const RSeries& zq = m.z(q - 1).point(j);
                    for (int d = 0; d <= top; ++d) g[d] += RatFn(c) * zq[d];
                }
                return g;
            };
            std::vector<std::vector<RSeries>> g(static_cast<size_t>(n));
            for (int p = 0; p < n; ++p)
                for (int j = 0; j < n; ++j) g[static_cast<size_t>(p)].push_back(g_series(p, j));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int d = 0; d <= top; ++d) {
                        std::vector<std::pair<RatFn, RatFn>> terms;
                        for (int p = 0; p < n; ++p)
                            for (int d1 = 0; d1 <= d; ++d1) {
                                const auto& gp = g[static_cast<size_t>(p)];
                                terms.emplace_back(m.z(p).coeff(i, d1), gp[static_cast<size_t>(j)][d - d1]);
                                terms.emplace_back(-gp[static_cast<size_t>(i)][d1], m.z(p).coeff(j, d - d1));
                            }
                        if (!separated_sum_is_zero(terms))
                            rep.failures.push_back({i, d, "swap asymmetry against fixed point " + std::to_string(j + 1)});
                    }
            break;
        }
    }
    return rep;
}

}  // namespace mgw
