#include "pdet/laurent_series.hpp"

#include <algorithm>

#include "pdet/errors.hpp"

namespace pdet {

LaurentSeries LaurentSeries::zero(long end) {
    LaurentSeries s;
    s.val_ = end;
    s.end_ = end;
    return s;
}

LaurentSeries::LaurentSeries(long valuation, std::vector<Rational> coeffs)
    : val_(valuation), end_(valuation + static_cast<long>(coeffs.size())),
      c_(std::move(coeffs)) {
    normalize();
}

LaurentSeries LaurentSeries::from_trunc(const TruncSeries& s) {
    return LaurentSeries(0, s.coeffs());
}

LaurentSeries LaurentSeries::constant(const Rational& c, long end) {
    if (end < 1) throw InputError("constant needs window end >= 1");
    std::vector<Rational> v(end);
    v[0] = c;
    return LaurentSeries(0, std::move(v));
}

void LaurentSeries::normalize() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = end_;
    } else if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + lead);
        val_ += static_cast<long>(lead);
    }
}

const Rational& LaurentSeries::coeff(long e) const {
    static const Rational zero_r;
    if (e >= end_)
        throw InputError("coefficient beyond the known window");
    if (e < val_) return zero_r;
    return c_[e - val_];
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& a : r.c_) a = -a;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    long end = std::min(a.end_, b.end_);
    long start = std::min(std::min(a.val_, b.val_), end);
    if (start >= end) return LaurentSeries::zero(end);
    std::vector<Rational> v(end - start);
    for (long e = start; e < end; ++e) {
        Rational s;
        if (e >= a.val_ && e < a.end_) s += a.c_[e - a.val_];
        if (e >= b.val_ && e < b.end_) s += b.c_[e - b.val_];
        v[e - start] = s;
    }
    return LaurentSeries(start, std::move(v));
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    long end = std::min(a.end_ + b.val_, b.end_ + a.val_);
    if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(end);
    long start = a.val_ + b.val_;
    if (start >= end) return LaurentSeries::zero(end);
    std::vector<Rational> v(end - start);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        long ea = a.val_ + static_cast<long>(i);
        for (size_t j = 0; j < b.c_.size(); ++j) {
            long e = ea + b.val_ + static_cast<long>(j);
            if (e >= end) break;
            if (b.c_[j].is_zero()) continue;
            v[e - start] += a.c_[i] * b.c_[j];
        }
    }
    return LaurentSeries(start, std::move(v));
}

LaurentSeries LaurentSeries::scale(const Rational& s) const {
    if (s.is_zero()) return zero(end_);
    LaurentSeries r = *this;
    for (auto& a : r.c_) a = a * s;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::inv() const {
    if (is_zero())
        throw InputError("Laurent series is zero (or vanishes within its window): not invertible");
    // t^v u with u a unit; 1/(t^v u) = t^{-v} u^{-1}
    TruncSeries u{std::vector<Rational>(c_)};
    TruncSeries ui = series_inv(u);
    return LaurentSeries(-val_, ui.coeffs());
}

LaurentSeries LaurentSeries::mul_tpow(long j) const {
    if (is_zero()) return zero(end_ + j);
    LaurentSeries r = *this;
    r.val_ += j;
    r.end_ += j;
    return r;
}

LaurentSeries LaurentSeries::restrict_end(long new_end) const {
    if (new_end > end_)
        throw InputError("cannot extend a Laurent window");
    if (new_end <= val_) return zero(new_end);
    LaurentSeries r = *this;
    r.c_.resize(new_end - val_);
    r.end_ = new_end;
    r.normalize();
    return r;
}

bool LaurentSeries::agrees_through(const LaurentSeries& o, long e) const {
    if (!known_through(e) || !o.known_through(e)) return false;
    long start = std::min(val_, o.val_);
    for (long i = start; i <= e; ++i) {
        Rational x = (i >= val_ && i < end_) ? c_[i - val_] : Rational();
        Rational y = (i >= o.val_ && i < o.end_) ? o.c_[i - o.val_] : Rational();
        if (!(x == y)) return false;
    }
    return true;
}

TruncSeries LaurentSeries::to_trunc() const {
    if (end_ < 1) throw InputError("window too small for a truncated series");
    if (!is_zero() && val_ < 0)
        throw InputError("Laurent series with a pole cannot become a TruncSeries");
    std::vector<Rational> v(end_);
    for (size_t i = 0; i < c_.size(); ++i) v[val_ + static_cast<long>(i)] = c_[i];
    return TruncSeries(std::move(v));
}

std::string LaurentSeries::str() const {
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        long e = val_ + static_cast<long>(i);
        if (!out.empty()) out += " + ";
        if (e == 0) out += c_[i].str();
        else out += c_[i].str() + "*t^" + std::to_string(e);
    }
    if (out.empty()) out = "0";
    out += " + O(t^" + std::to_string(end_) + ")";
    return out;
}

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    return a * b.inv();
}

} // namespace pdet
