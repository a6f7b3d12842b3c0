#include "pdet/trunc_series.hpp"

#include <algorithm>

#include "pdet/errors.hpp"

namespace pdet {

TruncSeries::TruncSeries(int order) {
    if (order < 1) throw InputError("truncation order must be >= 1");
    c_.assign(order, Rational());
}

TruncSeries::TruncSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw InputError("truncation order must be >= 1");
}

TruncSeries::TruncSeries(const Rational& constant, int order) : TruncSeries(order) {
    c_[0] = constant;
}

TruncSeries TruncSeries::monomial(const Rational& c, int deg, int order) {
    TruncSeries s(order);
    if (deg < order) s.c_[deg] = c;
    return s;
}

const Rational& TruncSeries::coeff(int i) const {
    static const Rational zero;
    if (i < 0 || i >= order()) return zero;
    return c_[i];
}

bool TruncSeries::is_zero() const {
    for (const auto& a : c_)
        if (!a.is_zero()) return false;
    return true;
}

int TruncSeries::valuation() const {
    for (int i = 0; i < order(); ++i)
        if (!c_[i].is_zero()) return i;
    return order();
}

TruncSeries TruncSeries::truncate(int new_order) const {
    if (new_order < 1) throw InputError("truncation order must be >= 1");
    if (new_order > order())
        throw InputError("cannot extend a truncated series");
    return TruncSeries(std::vector<Rational>(c_.begin(), c_.begin() + new_order));
}

bool TruncSeries::agrees_through(const TruncSeries& o, int deg) const {
    if (deg >= order() || deg >= o.order()) return false;
    for (int i = 0; i <= deg; ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

TruncSeries TruncSeries::operator-() const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(-a);
    return TruncSeries(std::move(v));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    int k = std::min(a.order(), b.order());
    std::vector<Rational> v(k);
    for (int i = 0; i < k; ++i) v[i] = a.c_[i] + b.c_[i];
    return TruncSeries(std::move(v));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    int k = std::min(a.order(), b.order());
    std::vector<Rational> v(k);
    for (int i = 0; i < k; ++i) v[i] = a.c_[i] - b.c_[i];
    return TruncSeries(std::move(v));
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    int k = std::min(a.order(), b.order());
    std::vector<Rational> v(k);
    for (int i = 0; i < k; ++i) {
        if (a.c_[i].is_zero()) continue;
        for (int j = 0; i + j < k; ++j) {
            if (b.c_[j].is_zero()) continue;
            v[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::scale(const Rational& s) const {
    std::vector<Rational> v;
    v.reserve(c_.size());
    for (const auto& a : c_) v.push_back(a * s);
    return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::mul_tpow(int j) const {
    if (j < 0) return div_tpow(-j);
    std::vector<Rational> v(c_.size());
    for (int i = 0; i + j < order(); ++i) v[i + j] = c_[i];
    return TruncSeries(std::move(v));
}

TruncSeries TruncSeries::div_tpow(int j) const {
    if (j == 0) return *this;
    if (j < 0) return mul_tpow(-j);
    if (j >= order()) throw InputError("t-power division exhausts the precision");
    for (int i = 0; i < j; ++i)
        if (!c_[i].is_zero())
            throw InputError("series not divisible by t^" + std::to_string(j));
    return TruncSeries(std::vector<Rational>(c_.begin() + j, c_.end()));
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    return a.c_ == b.c_;
}

std::string TruncSeries::str(const std::string& var) const {
    std::string out;
    for (int i = 0; i < order(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) out += c_[i].str();
        else {
            out += c_[i].str() + "*" + var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    if (out.empty()) out = "0";
    out += " + O(" + var + "^" + std::to_string(order()) + ")";
    return out;
}

TruncSeries series_inv(const TruncSeries& s) {
    if (s.constant_term().is_zero())
        throw InputError("series with zero constant term is not a unit");
    int k = s.order();
    Rational c0inv = s.constant_term().inv();
    std::vector<Rational> v(k);
    v[0] = c0inv;
    for (int i = 1; i < k; ++i) {
        Rational acc;
        for (int j = 1; j <= i; ++j) acc += s.coeff(j) * v[i - j];
        v[i] = -(acc * c0inv);
    }
    return TruncSeries(std::move(v));
}

TruncSeries series_log(const TruncSeries& s) {
    if (!s.constant_term().is_one())
        throw InputError("series_log needs constant term 1");
    int k = s.order();
    TruncSeries u = s - TruncSeries(Rational(1), k); // valuation >= 1
    TruncSeries acc(k), power(Rational(1), k);
    for (int j = 1; j < k; ++j) {
        power *= u;
        if (power.is_zero()) break;
        acc += power.scale(Rational(j % 2 == 1 ? 1 : -1, j));
    }
    return acc;
}

TruncSeries series_exp(const TruncSeries& s) {
    if (!s.constant_term().is_zero())
        throw InputError("series_exp needs constant term 0");
    int k = s.order();
    TruncSeries acc(Rational(1), k), power(Rational(1), k);
    Rational factorial(1);
    for (int j = 1; j < k; ++j) {
        power *= s;
        if (power.is_zero()) break;
        factorial *= Rational(j);
        acc += power.scale(factorial.inv());
    }
    return acc;
}

TruncSeries series_sqrt(const TruncSeries& s) {
    if (s.is_zero()) return s;
    int val = s.valuation();
    if (val % 2 != 0)
        throw InputError("series of odd valuation has no square root");
    TruncSeries u = s.div_tpow(val); // order K - val
    auto r0 = u.constant_term().exact_sqrt();
    if (!r0 || r0->is_zero())
        throw InputError("leading coefficient is not a rational square");
    int k = u.order();
    std::vector<Rational> r(k);
    r[0] = *r0;
    Rational half_inv = (Rational(2) * r[0]).inv();
    for (int i = 1; i < k; ++i) {
        Rational acc;
        for (int j = 1; j < i; ++j) acc += r[j] * r[i - j];
        r[i] = (u.coeff(i) - acc) * half_inv;
    }
    // result = t^{val/2} * r, order K - val/2
    int half = val / 2;
    std::vector<Rational> out(k + half);
    for (int i = 0; i < k; ++i) out[i + half] = r[i];
    return TruncSeries(std::move(out));
}

} // namespace pdet
