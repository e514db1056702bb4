#include "mirrorgw/interpolate.hpp"

#include <stdexcept>

namespace mgw {

OmegaPoly lagrange_interpolate(const std::vector<QPoly>& nodes, const std::vector<RatFn>& values) {
    const size_t L = nodes.size();
    if (values.size() != L) throw std::invalid_argument("interpolation: node/value length mismatch");
    if (L == 0) return {};
    for (const auto& nd : nodes)
        if (nd.degree() > 1) throw std::invalid_argument("interpolation node of h-degree above one");

    // M(Omega) = prod_m (Omega - node_m), coefficients in Q[h], highest index L.
    std::vector<QPoly> m(L + 1);
    m[0] = QPoly(Rational(1));
    for (size_t idx = 0; idx < L; ++idx) {
        std::vector<QPoly> next(L + 1);
        for (size_t k = 0; k <= idx; ++k) {
            next[k + 1] += m[k];
            next[k] -= m[k] * nodes[idx];
        }
        m = std::move(next);
    }

    std::vector<RatFn> out(L);
    for (size_t l = 0; l < L; ++l) {
        QPoly denom(Rational(1));
        for (size_t j = 0; j < L; ++j) {
            if (j == l) continue;
            QPoly diff = nodes[l] - nodes[j];
            if (diff.is_zero()) throw std::invalid_argument("interpolation: repeated node");
            denom = denom * diff;
        }
        if (values[l].is_zero()) continue;
        RatFn scale = values[l] / RatFn(denom);
        // M / (Omega - node_l) by synthetic division
        std::vector<QPoly> b(L);
        b[L - 1] = m[L];
        for (size_t k = L - 1; k >= 1; --k) b[k - 1] = m[k] + nodes[l] * b[k];
        for (size_t k = 0; k < L; ++k)
            if (!b[k].is_zero()) out[k] += scale * RatFn(b[k]);
    }
    return OmegaPoly(std::move(out));
}

RatFn eval_omega(const OmegaPoly& p, const QPoly& node) {
    RatFn x(node);
    RatFn acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

OmegaPoly reflect_and_shift(const OmegaPoly& p, const Rational& shift) {
    std::vector<RatFn> c;
    c.reserve(p.coeffs().size());
    for (const auto& e : p.coeffs()) c.push_back(e.reflected());
    return OmegaPoly(std::move(c)).shifted(RatFn::monomial(1, shift));
}

}  // namespace mgw
