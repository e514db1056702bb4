#include "mirrorgw/alpha_spec.hpp"

#include <sstream>

namespace mgw {

namespace {

std::string weight_name(int i) { return "alpha_" + std::to_string(i + 1); }

}  // namespace

std::optional<std::string> find_resonance(const std::vector<Rational>& alpha, [[maybe_unused]] int a, int max_degree) {
    const int n = static_cast<int>(alpha.size());
    if (n == 0) return "empty weight list";
    for (int i = 0; i < n; ++i) {
        if (alpha[static_cast<size_t>(i)].is_zero()) return weight_name(i) + " = 0 makes a*alpha_i vanish";
        for (int j = i + 1; j < n; ++j)
            if (alpha[static_cast<size_t>(i)] == alpha[static_cast<size_t>(j)])
                return weight_name(i) + " = " + weight_name(j);
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const Rational& ai = alpha[static_cast<size_t>(i)];
            const Rational& aj = alpha[static_cast<size_t>(j)];
            for (int d = 1; d <= max_degree; ++d) {
                Rational omega = (aj - ai) / Rational(d);
                // recursion coefficient denominators
                for (int r = 1; r <= d; ++r)
                    for (int k = 0; k < n; ++k) {
                        if (k == i || k == j) continue;
                        if ((ai - alpha[static_cast<size_t>(k)] + Rational(r) * omega).is_zero())
                            return "alpha_i - alpha_k + r(alpha_j - alpha_i)/d = 0 at i=" + std::to_string(i + 1) +
                                   " j=" + std::to_string(j + 1) + " k=" + std::to_string(k + 1) +
                                   " r=" + std::to_string(r) + " d=" + std::to_string(d);
                    }
                // pole positions seen from the neighbouring fixed point
                for (int k = 0; k < n; ++k) {
                    if (k == j) continue;
                    for (int d2 = 1; d + d2 <= max_degree; ++d2)
                        if (omega == (alpha[static_cast<size_t>(k)] - aj) / Rational(d2))
                            return "(alpha_j - alpha_i)/d = (alpha_k - alpha_j)/d' at i=" + std::to_string(i + 1) +
                                   " j=" + std::to_string(j + 1) + " k=" + std::to_string(k + 1) +
                                   " d=" + std::to_string(d) + " d'=" + std::to_string(d2);
                }
            }
        }
    return std::nullopt;
}

AlphaSpec::AlphaSpec(std::vector<Rational> alpha, int a, int max_degree)
    : alpha_(std::move(alpha)), a_(a), max_degree_(max_degree) {
    if (a < 1 || a > n()) throw std::invalid_argument("hypersurface degree a must satisfy 1 <= a <= n");
    if (max_degree < 0) throw std::invalid_argument("negative degree range");
    if (auto why = find_resonance(alpha_, a, max_degree)) throw ResonanceError("resonant weights: " + *why);
    // prod_k (1 + alpha_k s) gives sigma_r
    sigma_.assign(alpha_.size() + 1, Rational(0));
    sigma_[0] = Rational(1);
    for (size_t k = 0; k < alpha_.size(); ++k)
        for (size_t r = k + 1; r >= 1; --r) sigma_[r] += sigma_[r - 1] * alpha_[k];
    for (int i = 0; i < n(); ++i) {
        Rational t(1);
        for (int k = 0; k < n(); ++k)
            if (k != i) t *= alpha_[static_cast<size_t>(i)] - alpha_[static_cast<size_t>(k)];
        tangent_.push_back(t);
    }
}

AlphaSpec AlphaSpec::default_for(int n, int a, int max_degree) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<std::vector<long>> candidates;
    std::vector<long> natural;
    for (int i = 1; i <= n; ++i) natural.push_back(i);
    candidates.push_back(natural);
    // spread-out primes, then cubes as a last resort
    std::vector<long> primes = {2, 5, 11, 17, 29, 41, 59, 79, 101, 127, 157, 191};
    std::vector<long> cubes;
    for (int i = 1; i <= n; ++i) cubes.push_back(static_cast<long>(i) * i * i + 1);
    if (n <= static_cast<int>(primes.size())) candidates.emplace_back(primes.begin(), primes.begin() + n);
    candidates.push_back(cubes);
    for (const auto& c : candidates) {
        std::vector<Rational> alpha;
        for (long v : c) alpha.emplace_back(v);
        if (!find_resonance(alpha, a, max_degree)) return AlphaSpec(std::move(alpha), a, max_degree);
    }
    throw ResonanceError("no default weight choice is generic for this degree range");
}

AlphaSpec AlphaSpec::parse(const std::string& csv, int a, int max_degree) {
    std::vector<Rational> alpha;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) alpha.push_back(Rational::parse(item));
    return AlphaSpec(std::move(alpha), a, max_degree);
}

std::string AlphaSpec::str() const {
    std::string s = "(";
    for (size_t k = 0; k < alpha_.size(); ++k) {
        if (k) s += ",";
        s += alpha_[k].is_integer() ? alpha_[k].num().get_str() : alpha_[k].str();
    }
    return s + ")";
}

}  // namespace mgw
