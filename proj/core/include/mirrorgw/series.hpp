#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorgw/rational.hpp"

namespace mgw {

enum class Var { u, q, z, w, t };

const char* var_name(Var v);

class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Power series in one formal variable, truncated after the term of exponent `order`.
// Binary operations return the smaller of the two orders.
template <class R>
class Series {
public:
    Series() : Series(Var::u, 0) {}
    Series(Var var, int order) : var_(var), order_(order), c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw SeriesError("negative truncation order");
    }
    Series(Var var, int order, std::vector<R> coeffs) : Series(var, order) {
        if (coeffs.size() > c_.size()) coeffs.resize(c_.size());
        std::move(coeffs.begin(), coeffs.end(), c_.begin());
    }
    static Series constant(Var var, int order, R c) {
        Series s(var, order);
        s.c_[0] = std::move(c);
        return s;
    }
    static Series variable(Var var, int order) {
        Series s(var, order);
        if (order >= 1) s.c_[1] = R(Rational(1));
        return s;
    }

    Var var() const { return var_; }
    int order() const { return order_; }
    const std::vector<R>& coeffs() const { return c_; }
    const R& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
    R& operator[](int k) { return c_.at(static_cast<size_t>(k)); }
    R coeff(int k) const {
        if (k < 0 || k > order_) return R{};
        return c_[static_cast<size_t>(k)];
    }

    Series truncated(int order) const {
        if (order > order_) throw SeriesError("cannot raise truncation order");
        Series s(var_, order);
        std::copy(c_.begin(), c_.begin() + order + 1, s.c_.begin());
        return s;
    }

    Series& operator+=(const Series& o) {
        check(o);
        shrink(o.order_);
        for (int k = 0; k <= order_; ++k) c_[static_cast<size_t>(k)] += o.c_[static_cast<size_t>(k)];
        return *this;
    }
    Series& operator-=(const Series& o) {
        check(o);
        shrink(o.order_);
        for (int k = 0; k <= order_; ++k) c_[static_cast<size_t>(k)] -= o.c_[static_cast<size_t>(k)];
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series operator-() const {
        Series s = *this;
        for (auto& x : s.c_) x = -x;
        return s;
    }
    friend Series operator*(const Series& a, const Series& b) {
        a.check(b);
        int ord = std::min(a.order_, b.order_);
        Series s(a.var_, ord);
        for (int i = 0; i <= ord; ++i) {
            const R& ai = a.c_[static_cast<size_t>(i)];
            if (is_zero(ai)) continue;
            for (int j = 0; i + j <= ord; ++j) s.c_[static_cast<size_t>(i + j)] += ai * b.c_[static_cast<size_t>(j)];
        }
        return s;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }
    Series scaled(const R& f) const {
        Series s = *this;
        for (auto& x : s.c_) x *= f;
        return s;
    }

    // coefficient k multiplied by k: the action of d/dt when the variable is e^t
    Series euler_derivative() const {
        Series s = *this;
        for (int k = 0; k <= order_; ++k) s.c_[static_cast<size_t>(k)] *= R(Rational(k));
        return s;
    }

    bool operator==(const Series& o) const { return var_ == o.var_ && order_ == o.order_ && c_ == o.c_; }

private:
    void check(const Series& o) const {
        if (var_ != o.var_)
            throw SeriesError(std::string("series variable mismatch: ") + var_name(var_) + " vs " + var_name(o.var_));
    }
    void shrink(int order) {
        if (order < order_) {
            order_ = order;
            c_.resize(static_cast<size_t>(order) + 1);
        }
    }

    Var var_;
    int order_;
    std::vector<R> c_;
};

template <class R>
Series<R> recip(const Series<R>& s) {
    if (is_zero(s[0])) throw SeriesError("reciprocal of a series with non-invertible constant term");
    Series<R> r(s.var(), s.order());
    R inv0 = R(Rational(1)) / s[0];
    r[0] = inv0;
    for (int d = 1; d <= s.order(); ++d) {
        R acc{};
        for (int j = 1; j <= d; ++j) {
            if (is_zero(s[j])) continue;
            acc += s[j] * r[d - j];
        }
        r[d] = -(acc * inv0);
    }
    return r;
}

template <class R>
Series<R> exp(const Series<R>& s) {
    if (!is_zero(s[0])) throw SeriesError("exp of a series with nonzero constant term");
    Series<R> e(s.var(), s.order());
    e[0] = R(Rational(1));
    for (int d = 1; d <= s.order(); ++d) {
        R acc{};
        for (int j = 1; j <= d; ++j) {
            if (is_zero(s[j])) continue;
            acc += s[j] * e[d - j] * R(Rational(j));
        }
        e[d] = acc * R(Rational(1, d));
    }
    return e;
}

template <class R>
Series<R> log(const Series<R>& s) {
    if (!(s[0] == R(Rational(1)))) throw SeriesError("log of a series whose constant term is not 1");
    // log s = integral of s'/s
    Series<R> ds(s.var(), s.order());
    for (int k = 1; k <= s.order(); ++k) ds[k - 1] = s[k] * R(Rational(k));
    Series<R> q = ds * recip(s);
    Series<R> out(s.var(), s.order());
    for (int k = 1; k <= s.order(); ++k) out[k] = q[k - 1] * R(Rational(1, k));
    return out;
}

// s(inner(v)); inner must have zero constant term. The result is in inner's variable.
template <class R, class S>
Series<R> compose(const Series<R>& s, const Series<S>& inner) {
    if (!is_zero(inner[0])) throw SeriesError("composition with an inner series of nonzero constant term");
    int ord = std::min(s.order(), inner.order());
    Series<R> out(inner.var(), ord);
    Series<S> power = Series<S>::constant(inner.var(), ord, S(Rational(1)));
    Series<S> in = inner.truncated(ord);
    for (int d = 0; d <= ord; ++d) {
        if (!is_zero(s[d])) {
            for (int e = d; e <= ord; ++e) {
                if (is_zero(power[e])) continue;
                out[e] += s[d] * R(power[e]);
            }
        }
        if (d < ord) power = power * in;
    }
    return out;
}

template <class R>
bool is_zero(const Series<R>& s) {
    for (const auto& c : s.coeffs())
        if (!is_zero(c)) return false;
    return true;
}

enum class SeriesOp { add, mul, recip, exp, log };

template <class R>
Series<R> series_arith(const Series<R>& lhs, const std::optional<Series<R>>& rhs, SeriesOp op) {
    switch (op) {
        case SeriesOp::add:
        case SeriesOp::mul:
            if (!rhs) throw SeriesError("binary series operation without a right operand");
            return op == SeriesOp::add ? lhs + *rhs : lhs * *rhs;
        case SeriesOp::recip: return recip(lhs);
        case SeriesOp::exp: return exp(lhs);
        case SeriesOp::log: return log(lhs);
    }
    throw SeriesError("unknown series operation");
}

using QSeries = Series<Rational>;

// Returns phi with phi(0) = 0, phi'(0) = 1 and phi * exp(g(phi)) = u to the order of g.
QSeries series_revert(const QSeries& g);

// Coefficient of w^s, i.e. (1/s!) (d/dw)^s f at w = 0.
template <class R>
R dw_coeff(const Series<R>& f, int s) {
    if (s < 0 || s > f.order()) throw SeriesError("derivative order exceeds truncation order");
    return f[s];
}

}  // namespace mgw
