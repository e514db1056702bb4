#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mirrorgw/rational.hpp"

namespace mgw {

class WindowOverflow : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// Allowed range of h-exponents for a computation.
struct WindowCap {
    int lo;
    int hi;
    bool admits(int e) const { return e >= lo && e <= hi; }
};

// Finite Laurent polynomial in h: coefficients for exponents lo..hi.
class LaurentWindow {
public:
    LaurentWindow() = default;
    LaurentWindow(int lo, std::vector<Rational> coeffs);
    static LaurentWindow monomial(int e, Rational c);

    bool is_zero() const { return c_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
    Rational coeff(int e) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    LaurentWindow& operator+=(const LaurentWindow& o);
    LaurentWindow& operator-=(const LaurentWindow& o);
    friend LaurentWindow operator+(LaurentWindow a, const LaurentWindow& b) { return a += b; }
    friend LaurentWindow operator-(LaurentWindow a, const LaurentWindow& b) { return a -= b; }
    friend LaurentWindow operator*(const LaurentWindow& a, const LaurentWindow& b);
    LaurentWindow scaled(const Rational& f) const;
    LaurentWindow shifted(int by) const;  // multiply by h^by
    // multiply by (c0 + c1 h)
    LaurentWindow times_linear(const Rational& c0, const Rational& c1) const;
    void add_term(int e, const Rational& c);

    void check_cap(const WindowCap& cap) const;

    friend bool operator==(const LaurentWindow& a, const LaurentWindow& b) { return a.lo_ == b.lo_ && a.c_ == b.c_; }

private:
    void trim();
    int lo_ = 0;
    std::vector<Rational> c_;
};

inline bool is_zero(const LaurentWindow& w) { return w.is_zero(); }

// Laurent polynomial in (h1, h2), stored sparsely.
class BiLaurent {
public:
    using Key = std::pair<int, int>;
    void add_term(int e1, int e2, const Rational& c);
    Rational coeff(int e1, int e2) const;
    const std::map<Key, Rational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    // Exact quotient by (h1 + h2); throws if the division leaves a remainder.
    BiLaurent divided_by_sum() const;
    BiLaurent times_sum() const;
    BiLaurent swapped() const;

    friend bool operator==(const BiLaurent& a, const BiLaurent& b) { return a.t_ == b.t_; }

private:
    std::map<Key, Rational> t_;
};

class DivisibilityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace mgw
