#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mirrorgw/rational.hpp"

namespace mgw {

namespace detail {
template <class T>
bool coeff_is_zero(const T& x) {
    return is_zero(x);
}
}  // namespace detail

// Dense univariate polynomial, lowest degree first. The stored list never ends
// in a zero coefficient; the zero polynomial has no coefficients.
template <class R>
class Poly {
public:
    Poly() = default;
    Poly(R c) {
        if (!detail::coeff_is_zero(c)) c_.push_back(std::move(c));
    }
    explicit Poly(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Poly monomial(int k, R c) {
        std::vector<R> v(static_cast<size_t>(k) + 1);
        v[static_cast<size_t>(k)] = std::move(c);
        return Poly(std::move(v));
    }
    // c0 + c1*X
    static Poly linear(R c0, R c1) { return Poly(std::vector<R>{std::move(c0), std::move(c1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(int k) const {
        if (k < 0 || k > degree()) return R{};
        return c_[static_cast<size_t>(k)];
    }
    const R& leading() const {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    template <class X>
    X eval(const X& x) const {
        X acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + X(*it);
        return acc;
    }

    Poly derivative() const {
        std::vector<R> v;
        for (size_t k = 1; k < c_.size(); ++k) v.push_back(c_[k] * R(Rational(static_cast<long>(k))));
        return Poly(std::move(v));
    }

    // p(X) -> p(X + s)
    Poly shifted(const R& s) const {
        Poly acc;
        Poly lin = linear(s, R(Rational(1)));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + Poly(*it);
        return acc;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<R> v(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (detail::coeff_is_zero(a.c_[i])) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(v));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const R& s) const {
        if (detail::coeff_is_zero(s)) return {};
        Poly r = *this;
        for (auto& x : r.c_) x *= s;
        return r;
    }

    // Euclidean division over a field: *this = q*d + r with deg r < deg d.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        if (degree() < d.degree()) return {Poly{}, *this};
        std::vector<R> rem = c_;
        std::vector<R> quo(static_cast<size_t>(degree() - d.degree() + 1));
        R lead_inv = R(Rational(1)) / d.leading();
        for (int k = degree(); k >= d.degree(); --k) {
            R& top = rem[static_cast<size_t>(k)];
            if (detail::coeff_is_zero(top)) continue;
            R f = top * lead_inv;
            int shift = k - d.degree();
            for (int j = 0; j <= d.degree(); ++j)
                rem[static_cast<size_t>(shift + j)] -= f * d.c_[static_cast<size_t>(j)];
            quo[static_cast<size_t>(shift)] = std::move(f);
        }
        rem.resize(static_cast<size_t>(d.degree()));
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    Poly monic() const {
        if (is_zero()) return {};
        return scaled(R(Rational(1)) / leading());
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
    }
    std::vector<R> c_;
};

template <class R>
bool is_zero(const Poly<R>& p) {
    return p.is_zero();
}

using QPoly = Poly<Rational>;

// Monic gcd over Q; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);

// Quotient of an exact division; throws if the remainder is nonzero.
QPoly exact_quotient(const QPoly& a, const QPoly& b);

}  // namespace mgw
