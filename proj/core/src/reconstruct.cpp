#include "mirrorgw/reconstruct.hpp"

#include "mirrorgw/linalg.hpp"

namespace mgw {

ReconstructionSeed ReconstructionSeed::zero(int n, int max_degree) {
    return {std::vector<std::vector<QPoly>>(static_cast<size_t>(n), std::vector<QPoly>(static_cast<size_t>(max_degree) + 1))};
}

ReconstructionSeed ReconstructionSeed::from_series(const FixedPointSeries& z, int max_degree) {
    ReconstructionSeed s = zero(z.n(), max_degree);
    for (int i = 0; i < z.n(); ++i)
        for (int d = 0; d <= max_degree; ++d) s.part[static_cast<size_t>(i)][static_cast<size_t>(d)] = z.coeff(i, d).polynomial_part();
    return s;
}

ReconstructionSeed& ReconstructionSeed::operator+=(const ReconstructionSeed& o) {
    if (o.part.size() != part.size()) throw std::invalid_argument("seeds of different n");
    for (size_t i = 0; i < part.size(); ++i) {
        if (o.part[i].size() != part[i].size()) throw std::invalid_argument("seeds of different degree range");
        for (size_t d = 0; d < part[i].size(); ++d) part[i][d] += o.part[i][d];
    }
    return *this;
}

NBound default_n_bound(int n) {
    return [n](int d) { return d + n + 2; };
}

namespace {

// lowest h-exponent of a nonzero Laurent element
int laurent_low(const RatFn& f) {
    const auto& c = f.num().coeffs();
    int k = 0;
    while (c[static_cast<size_t>(k)].is_zero()) ++k;
    return k - f.den().degree();
}

}  // namespace

FixedPointSeries reconstruct(const FixedPointSeries& y, const AlphaSpec& spec, const ReconstructionSeed& seed,
                             const NBound& n_bound, int max_degree) {
    const int n = spec.n();
    if (y.n() != n) throw std::invalid_argument("series and weights disagree on n");
    if (y.u_order() < max_degree) throw std::invalid_argument("Y is truncated below the requested degree");
    if (static_cast<int>(seed.part.size()) != n) throw std::invalid_argument("seed has the wrong number of fixed points");
    for (const auto& row : seed.part)
        if (static_cast<int>(row.size()) <= max_degree) throw std::invalid_argument("seed does not cover every degree");
    std::vector<Rational> f0;
    for (int i = 0; i < n; ++i) {
        const RatFn& c = y.coeff(i, 0);
        if (!c.is_constant() || c.is_zero()) throw ReconstructionError(i, 0, "Y(h, alpha_i, 0) must be a nonzero constant");
        f0.push_back(c.constant_value());
    }

    FixedPointSeries z(n, max_degree, y.var());
    for (int d = 0; d <= max_degree; ++d) {
        for (int i = 0; i < n; ++i) {
            RatFn k = RatFn(seed.part[static_cast<size_t>(i)][static_cast<size_t>(d)]);
            for (int d0 = 1; d0 <= d; ++d0)
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    Rational c = (spec[j] - spec[i]) / Rational(d0);
                    Rational value = z.coeff(j, d - d0).eval(c);
                    if (value.is_zero()) continue;
                    k += RatFn(QPoly(recursion_coeff(spec, i, j, d0) * value), QPoly::linear(-c, Rational(1)));
                }
            z.coeff(i, d) = k;
        }

        const int bound = n_bound(d);
        if (bound < 0) throw ReconstructionError(-1, d, "negative tail bound");
        const int nodes = (d + 1) * n;
        std::vector<RatFn> known;
        int depth = bound;
        for (int q = 0; q < nodes; ++q) {
            RatFn f = phi_moment(z, y, spec, d, q);
            if (!f.is_laurent_in_h())
                throw ReconstructionError(-1, d, "seed not realizable: moment z^" + std::to_string(q) + " has poles off h = 0");
            if (!f.is_zero()) depth = std::max(depth, -laurent_low(f));
            known.push_back(std::move(f));
        }
        if (bound == 0) {
            for (const auto& f : known)
                if (!f.is_polynomial()) throw ReconstructionError(-1, d, "inconsistent system with empty tail");
            continue;
        }

        // unknown z_{i,r}, r = 1..bound, at column i * bound + (r - 1)
        QMatrix a;
        std::vector<Rational> b;
        for (int q = 0; q < nodes; ++q)
            for (int m = 1; m <= depth; ++m) {
                std::vector<Rational> row(static_cast<size_t>(n * bound));
                for (int i = 0; i < n; ++i) {
                    Rational w = f0[static_cast<size_t>(i)] / spec.tangent_product(i);
                    for (int r = m; r <= bound && r - m <= q; ++r) {
                        int e = r - m;
                        Rational c = w * Rational::binomial(static_cast<unsigned>(q), static_cast<unsigned>(e)) *
                                     spec[i].pow(q - e) * Rational(d).pow(e);
                        row[static_cast<size_t>(i * bound + r - 1)] = c;
                    }
                }
                a.push_back(std::move(row));
                b.push_back(known[static_cast<size_t>(q)].is_zero() ? Rational(0)
                                                                    : -known[static_cast<size_t>(q)].laurent_coeff(-m));
            }
        LinearSolution sol = solve_linear(std::move(a), std::move(b));
        if (!sol.consistent) throw ReconstructionError(-1, d, "inconsistent system: tail bound too small or seed not realizable");
        if (!sol.unique) throw ReconstructionError(-1, d, "underdetermined system");
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> tail(static_cast<size_t>(bound) + 1);
            for (int r = 1; r <= bound; ++r) tail[static_cast<size_t>(bound - r)] = sol.x[static_cast<size_t>(i * bound + r - 1)];
            z.coeff(i, d) += RatFn::laurent(-bound, tail);
        }
    }
    return z;
}

}  // namespace mgw
