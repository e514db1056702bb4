#include "mirrorgw/ratfn.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mgw {

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

QPoly exact_quotient(const QPoly& a, const QPoly& b) {
    auto [q, r] = a.divmod(b);
    if (!r.is_zero()) throw std::logic_error("polynomial division is not exact");
    return q;
}

namespace {

bool is_one(const QPoly& p) { return p.degree() == 0 && p.coeff(0).is_one(); }

// Number of leading zero coefficients, i.e. the h-adic valuation.
int valuation(const QPoly& p) {
    int v = 0;
    while (v <= p.degree() && p.coeff(v).is_zero()) ++v;
    return v;
}

}  // namespace

RatFn::RatFn(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

RatFn RatFn::monomial(int e, const Rational& c) {
    if (e >= 0) return RatFn(QPoly::monomial(e, c));
    RatFn r;
    r.num_ = QPoly(c);
    r.den_ = QPoly::monomial(-e, Rational(1));
    if (c.is_zero()) r.den_ = QPoly(Rational(1));
    return r;
}

RatFn RatFn::laurent(int lo, const std::vector<Rational>& coeffs) {
    if (lo >= 0) {
        std::vector<Rational> v(static_cast<size_t>(lo), Rational(0));
        v.insert(v.end(), coeffs.begin(), coeffs.end());
        return RatFn(QPoly(std::move(v)));
    }
    return RatFn(QPoly(coeffs), QPoly::monomial(-lo, Rational(1)));
}

void RatFn::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(Rational(1));
        return;
    }
    if (den_.degree() > 0) {
        QPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    const Rational& lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RatFn::is_laurent_in_h() const {
    for (int k = 0; k < den_.degree(); ++k)
        if (!den_.coeff(k).is_zero()) return false;
    return true;
}

Rational RatFn::constant_value() const {
    if (!is_constant()) throw std::domain_error("rational function is not constant");
    return num_.coeff(0);
}

Rational RatFn::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d.is_zero()) throw std::domain_error("evaluation at a pole h = " + x.str());
    return num_.eval(x) / d;
}

namespace {
QPoly reflect(const QPoly& p) {
    std::vector<Rational> v = p.coeffs();
    for (size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return QPoly(std::move(v));
}
}  // namespace

RatFn RatFn::reflected() const {
    RatFn r;
    r.num_ = reflect(num_);
    r.den_ = reflect(den_);
    if (r.den_.degree() % 2 == 1) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RatFn RatFn::substitute_affine(const Rational& c0, const Rational& c1) const {
    QPoly lin = QPoly::linear(c0, c1);
    auto compose = [&](const QPoly& p) {
        QPoly acc;
        for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + QPoly(*it);
        return acc;
    };
    return RatFn(compose(num_), compose(den_));
}

QPoly RatFn::polynomial_part() const { return num_.divmod(den_).first; }

std::vector<Rational> RatFn::expand_at_infinity(int min_exp, int* lo_out) const {
    // num * h^K = Q * den + R with deg R < deg den, so the quotient lists every
    // coefficient of h^e with e >= -K exactly.
    int k = min_exp < 0 ? -min_exp : 0;
    QPoly shifted = num_ * QPoly::monomial(k, Rational(1));
    QPoly q = shifted.divmod(den_).first;
    int lo = min_exp;
    std::vector<Rational> out;
    for (int e = lo; e <= q.degree() - k; ++e) out.push_back(q.coeff(e + k));
    if (lo_out) *lo_out = lo;
    return out;
}

Rational RatFn::coeff_at_infinity(int e) const {
    if (e > degree_at_infinity()) return Rational(0);
    int lo = 0;
    auto v = expand_at_infinity(e, &lo);
    return v.empty() ? Rational(0) : v.front();
}

Rational RatFn::laurent_coeff(int e) const {
    if (!is_laurent_in_h()) throw std::domain_error("not a Laurent polynomial in h");
    int shift = den_.degree();
    return num_.coeff(e + shift);
}

QPoly RatFn::off_origin_denominator() const {
    int v = valuation(den_);
    if (v == 0) return den_;
    std::vector<Rational> c(den_.coeffs().begin() + v, den_.coeffs().end());
    return QPoly(std::move(c));
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    RatFn r;
    r.num_ = den_;
    r.den_ = num_;
    const Rational& lead = r.den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        r.num_ = r.num_.scaled(inv);
        r.den_ = r.den_.scaled(inv);
    }
    return r;
}

RatFn& RatFn::operator+=(const RatFn& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (den_.degree() > 0) normalize();
        else if (num_.is_zero()) den_ = QPoly(Rational(1));
        return *this;
    }
    if (is_one(o.den_)) {
        num_ += o.num_ * den_;
        return *this;
    }
    if (is_one(den_)) {
        num_ = num_ * o.den_ + o.num_;
        den_ = o.den_;
        return *this;
    }
    QPoly g = gcd(den_, o.den_);
    if (g.degree() == 0) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = QPoly(Rational(1));
        return *this;
    }
    QPoly d1 = exact_quotient(den_, g);
    QPoly d2 = exact_quotient(o.den_, g);
    num_ = num_ * d2 + o.num_ * d1;
    den_ = den_ * d2;
    if (num_.is_zero()) {
        den_ = QPoly(Rational(1));
        return *this;
    }
    QPoly h = gcd(num_, g);
    if (h.degree() > 0) {
        num_ = exact_quotient(num_, h);
        den_ = exact_quotient(den_, h);
    }
    return *this;
}

RatFn& RatFn::operator-=(const RatFn& o) { return *this += -o; }

RatFn& RatFn::operator*=(const RatFn& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RatFn();
    QPoly n2 = o.num_;
    QPoly d2 = o.den_;
    if (d2.degree() > 0 && num_.degree() > 0) {
        QPoly g = gcd(num_, d2);
        if (g.degree() > 0) {
            num_ = exact_quotient(num_, g);
            d2 = exact_quotient(d2, g);
        }
    }
    if (den_.degree() > 0 && n2.degree() > 0) {
        QPoly g = gcd(n2, den_);
        if (g.degree() > 0) {
            n2 = exact_quotient(n2, g);
            den_ = exact_quotient(den_, g);
        }
    }
    num_ = num_ * n2;
    den_ = den_ * d2;
    const Rational& lead = den_.leading();
    if (!lead.is_one()) {
        Rational inv = lead.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
    return *this;
}

RatFn RatFn::operator-() const {
    RatFn r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string poly_str(const QPoly& p, const char* var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational& c = p.coeffs()[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        Rational a = c.sign() < 0 ? -c : c;
        if (k == 0 || !a.is_one()) os << a;
        if (k > 0) {
            if (!a.is_one()) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

std::string RatFn::str() const {
    if (is_polynomial()) return poly_str(num_.scaled(den_.coeff(0).inverse()));
    return "(" + poly_str(num_) + ")/(" + poly_str(den_) + ")";
}

std::ostream& operator<<(std::ostream& os, const RatFn& f) { return os << f.str(); }

}  // namespace mgw
