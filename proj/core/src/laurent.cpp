#include "mirrorgw/laurent.hpp"
#include "mirrorgw/tpoly_series.hpp"

#include <string>

namespace mgw {

LaurentWindow::LaurentWindow(int lo, std::vector<Rational> coeffs) : lo_(lo), c_(std::move(coeffs)) { trim(); }

LaurentWindow LaurentWindow::monomial(int e, Rational c) { return LaurentWindow(e, {std::move(c)}); }

void LaurentWindow::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    size_t skip = 0;
    while (skip < c_.size() && c_[skip].is_zero()) ++skip;
    if (skip) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(skip));
        lo_ += static_cast<int>(skip);
    }
    if (c_.empty()) lo_ = 0;
}

Rational LaurentWindow::coeff(int e) const {
    if (c_.empty() || e < lo_ || e > hi()) return Rational(0);
    return c_[static_cast<size_t>(e - lo_)];
}

void LaurentWindow::add_term(int e, const Rational& c) {
    if (c.is_zero()) return;
    if (c_.empty()) {
        lo_ = e;
        c_.push_back(c);
        return;
    }
    if (e < lo_) {
        c_.insert(c_.begin(), static_cast<size_t>(lo_ - e), Rational(0));
        lo_ = e;
    } else if (e > hi()) {
        c_.resize(static_cast<size_t>(e - lo_ + 1));
    }
    c_[static_cast<size_t>(e - lo_)] += c;
    trim();
}

LaurentWindow& LaurentWindow::operator+=(const LaurentWindow& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    int lo = std::min(lo_, o.lo_);
    int hi_ = std::max(hi(), o.hi());
    std::vector<Rational> v(static_cast<size_t>(hi_ - lo + 1));
    for (size_t k = 0; k < c_.size(); ++k) v[static_cast<size_t>(lo_ - lo) + k] = c_[k];
    for (size_t k = 0; k < o.c_.size(); ++k) v[static_cast<size_t>(o.lo_ - lo) + k] += o.c_[k];
    lo_ = lo;
    c_ = std::move(v);
    trim();
    return *this;
}

LaurentWindow& LaurentWindow::operator-=(const LaurentWindow& o) { return *this += o.scaled(Rational(-1)); }

LaurentWindow operator*(const LaurentWindow& a, const LaurentWindow& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentWindow(a.lo_ + b.lo_, std::move(v));
}

LaurentWindow LaurentWindow::scaled(const Rational& f) const {
    if (f.is_zero()) return {};
    LaurentWindow r = *this;
    for (auto& x : r.c_) x *= f;
    return r;
}

LaurentWindow LaurentWindow::shifted(int by) const {
    LaurentWindow r = *this;
    if (!r.is_zero()) r.lo_ += by;
    return r;
}

LaurentWindow LaurentWindow::times_linear(const Rational& c0, const Rational& c1) const {
    return scaled(c0) + shifted(1).scaled(c1);
}

void LaurentWindow::check_cap(const WindowCap& cap) const {
    if (is_zero()) return;
    if (lo_ < cap.lo || hi() > cap.hi)
        throw WindowOverflow("h-exponent window [" + std::to_string(lo_) + ", " + std::to_string(hi()) +
                             "] exceeds cap [" + std::to_string(cap.lo) + ", " + std::to_string(cap.hi) + "]");
}

void BiLaurent::add_term(int e1, int e2, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace({e1, e2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

Rational BiLaurent::coeff(int e1, int e2) const {
    auto it = t_.find({e1, e2});
    return it == t_.end() ? Rational(0) : it->second;
}

BiLaurent BiLaurent::divided_by_sum() const {
    // Each total degree is divided separately; within one, run synthetic
    // division in h1 from the top exponent down.
    std::map<int, std::map<int, Rational>> by_total;
    for (const auto& [k, c] : t_) by_total[k.first + k.second][k.first] = c;
    BiLaurent q;
    for (const auto& [total, row] : by_total) {
        int top = row.rbegin()->first;
        int bottom = row.begin()->first;
        Rational carry(0);  // quotient coefficient at h1^(e-1)
        for (int e = top; e >= bottom; --e) {
            auto it = row.find(e);
            Rational c = it == row.end() ? Rational(0) : it->second;
            Rational next = c - carry;
            if (e == bottom) {
                if (!next.is_zero())
                    throw DivisibilityError("not divisible by (h1 + h2) in total degree " + std::to_string(total));
                break;
            }
            q.add_term(e - 1, total - e, next);
            carry = next;
        }
    }
    return q;
}

BiLaurent BiLaurent::times_sum() const {
    BiLaurent r;
    for (const auto& [k, c] : t_) {
        r.add_term(k.first + 1, k.second, c);
        r.add_term(k.first, k.second + 1, c);
    }
    return r;
}

BiLaurent BiLaurent::swapped() const {
    BiLaurent r;
    for (const auto& [k, c] : t_) r.t_.emplace(Key{k.second, k.first}, c);
    return r;
}

TPolySeries::TPolySeries(Series<QPoly> s, int cap) : s_(std::move(s)), cap_(cap) {
    for (int d = 0; d <= s_.order(); ++d)
        if (s_[d].degree() > d + cap_)
            throw SeriesError("t-degree of q^" + std::to_string(d) + " coefficient exceeds its cap");
}

TPolySeries TPolySeries::from_pure(const QSeries& s) {
    Series<QPoly> p(Var::q, s.order());
    for (int d = 0; d <= s.order(); ++d) p[d] = QPoly(s[d]);
    return TPolySeries(std::move(p), 0);
}

int TPolySeries::t_degree() const {
    int deg = -1;
    for (const auto& c : s_.coeffs()) deg = std::max(deg, c.degree());
    return deg;
}

QSeries TPolySeries::pure_part() const {
    if (!is_pure()) throw SeriesError("series still depends on t");
    QSeries r(Var::q, s_.order());
    for (int d = 0; d <= s_.order(); ++d) r[d] = s_[d].coeff(0);
    return r;
}

TPolySeries TPolySeries::times(const QSeries& f) const {
    Series<QPoly> lifted(Var::q, f.order());
    for (int d = 0; d <= f.order(); ++d) lifted[d] = QPoly(f[d]);
    return TPolySeries(s_ * lifted, cap_);
}

TPolySeries dt_derivative(const TPolySeries& f) {
    Series<QPoly> out(Var::q, f.order());
    for (int d = 0; d <= f.order(); ++d) out[d] = f[d].derivative() + f[d].scaled(Rational(d));
    return TPolySeries(std::move(out), f.cap());
}

}  // namespace mgw
