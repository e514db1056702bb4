#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mirrorgw/poly.hpp"

namespace mgw {

// Element of Q(h): num/den with gcd(num, den) = 1 and den monic.
class RatFn {
public:
    RatFn() : den_(Rational(1)) {}
    RatFn(long c) : RatFn(Rational(c)) {}
    RatFn(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFn(QPoly p) : num_(std::move(p)), den_(Rational(1)) {}
    RatFn(QPoly num, QPoly den);

    static RatFn h() { return RatFn(QPoly::monomial(1, Rational(1))); }
    // c * h^e for any integer e
    static RatFn monomial(int e, const Rational& c);
    // sum_k coeffs[k] * h^(lo + k)
    static RatFn laurent(int lo, const std::vector<Rational>& coeffs);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    bool is_polynomial() const { return den_.degree() == 0; }
    // den is a pure power of h
    bool is_laurent_in_h() const;
    // order of the pole/zero at infinity: deg num - deg den
    int degree_at_infinity() const { return num_.degree() - den_.degree(); }

    Rational constant_value() const;
    Rational eval(const Rational& x) const;
    RatFn reflected() const;  // h -> -h
    RatFn substitute_affine(const Rational& c0, const Rational& c1) const;  // h -> c0 + c1*h

    QPoly polynomial_part() const;
    // coefficients of h^e for e = top .. min_exp in the expansion at h = infinity,
    // returned lowest exponent first together with that exponent
    std::vector<Rational> expand_at_infinity(int min_exp, int* lo_out) const;
    Rational coeff_at_infinity(int e) const;
    // For Laurent elements only: coefficient of h^e.
    Rational laurent_coeff(int e) const;
    // Pole part of the denominator after removing powers of h.
    QPoly off_origin_denominator() const;

    RatFn inverse() const;

    RatFn& operator+=(const RatFn& o);
    RatFn& operator-=(const RatFn& o);
    RatFn& operator*=(const RatFn& o);
    RatFn& operator/=(const RatFn& o) { return *this *= o.inverse(); }
    friend RatFn operator+(RatFn a, const RatFn& b) { return a += b; }
    friend RatFn operator-(RatFn a, const RatFn& b) { return a -= b; }
    friend RatFn operator*(RatFn a, const RatFn& b) { return a *= b; }
    friend RatFn operator/(RatFn a, const RatFn& b) { return a /= b; }
    RatFn operator-() const;

    friend bool operator==(const RatFn& a, const RatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFn& f);

private:
    void normalize();
    QPoly num_;
    QPoly den_;
};

inline bool is_zero(const RatFn& f) { return f.is_zero(); }

inline bool ratfn_is_polynomial(const RatFn& f) { return f.is_polynomial(); }
inline bool ratfn_laurent_in_h(const RatFn& f) { return f.is_laurent_in_h(); }

std::string poly_str(const QPoly& p, const char* var = "h");

}  // namespace mgw
