#include "pdet/eps_poly.hpp"

#include <algorithm>

#include "pdet/errors.hpp"

namespace pdet {

EpsPoly::EpsPoly(int eps_bound, int t_order) : bound_(eps_bound), k_(t_order) {
    if (eps_bound < 0) throw InputError("eps bound must be >= 0");
    if (t_order < 1) throw InputError("truncation order must be >= 1");
}

EpsPoly::EpsPoly(std::vector<TruncSeries> coeffs, int eps_bound)
    : q_(std::move(coeffs)), bound_(eps_bound) {
    if (q_.empty()) throw InputError("EpsPoly needs at least one coefficient");
    if (static_cast<int>(q_.size()) > bound_ + 1)
        q_.resize(bound_ + 1);
    k_ = q_.front().order();
    for (const auto& c : q_) k_ = std::min(k_, c.order());
    align();
}

void EpsPoly::align() {
    for (auto& c : q_)
        if (c.order() != k_) c = c.truncate(k_);
    while (!q_.empty() && q_.back().is_zero()) q_.pop_back();
}

EpsPoly EpsPoly::constant(const TruncSeries& c, int eps_bound) {
    return EpsPoly(std::vector<TruncSeries>{c}, eps_bound);
}

EpsPoly EpsPoly::constant(const Rational& c, int eps_bound, int t_order) {
    return EpsPoly(std::vector<TruncSeries>{TruncSeries(c, t_order)}, eps_bound);
}

EpsPoly EpsPoly::monomial(const TruncSeries& c, int d, int eps_bound) {
    if (d > eps_bound) return EpsPoly(eps_bound, c.order());
    std::vector<TruncSeries> v(d + 1, TruncSeries(c.order()));
    v[d] = c;
    return EpsPoly(std::move(v), eps_bound);
}

int EpsPoly::degree() const { return static_cast<int>(q_.size()) - 1; }

TruncSeries EpsPoly::coeff(int j) const {
    if (j < 0 || j >= static_cast<int>(q_.size())) return TruncSeries(k_);
    return q_[j];
}

bool EpsPoly::is_zero() const { return q_.empty(); }

EpsPoly EpsPoly::operator-() const {
    EpsPoly r = *this;
    for (auto& c : r.q_) c = -c;
    return r;
}

EpsPoly operator+(const EpsPoly& a, const EpsPoly& b) {
    int bound = std::min(a.bound_, b.bound_);
    int k = std::min(a.k_, b.k_);
    std::vector<TruncSeries> v(std::max(a.q_.size(), b.q_.size()), TruncSeries(k));
    if (static_cast<int>(v.size()) > bound + 1) v.resize(bound + 1);
    for (size_t j = 0; j < v.size(); ++j) {
        TruncSeries s(k);
        if (j < a.q_.size()) s += a.q_[j];
        if (j < b.q_.size()) s += b.q_[j];
        v[j] = s;
    }
    if (v.empty()) return EpsPoly(bound, k);
    return EpsPoly(std::move(v), bound);
}

EpsPoly operator-(const EpsPoly& a, const EpsPoly& b) { return a + (-b); }

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
    int bound = std::min(a.bound_, b.bound_);
    int k = std::min(a.k_, b.k_);
    if (a.is_zero() || b.is_zero()) return EpsPoly(bound, k);
    int deg = std::min(a.degree() + b.degree(), bound);
    if (deg < 0) return EpsPoly(bound, k);
    std::vector<TruncSeries> v(deg + 1, TruncSeries(k));
    for (int i = 0; i <= a.degree(); ++i) {
        if (a.q_[i].is_zero()) continue;
        for (int j = 0; j <= b.degree() && i + j <= deg; ++j) {
            if (b.q_[j].is_zero()) continue;
            v[i + j] += a.q_[i] * b.q_[j];
        }
    }
    return EpsPoly(std::move(v), bound);
}

EpsPoly EpsPoly::scale(const TruncSeries& s) const {
    EpsPoly r = *this;
    r.k_ = std::min(k_, s.order());
    for (auto& c : r.q_) c = c * s;
    r.align();
    return r;
}

EpsPoly EpsPoly::scale(const Rational& s) const {
    EpsPoly r = *this;
    for (auto& c : r.q_) c = c.scale(s);
    r.align();
    return r;
}

EpsPoly EpsPoly::truncate_t(int new_order) const {
    EpsPoly r = *this;
    r.k_ = new_order;
    for (auto& c : r.q_) c = c.truncate(new_order);
    r.align();
    return r;
}

EpsPoly EpsPoly::with_bound(int new_bound) const {
    EpsPoly r(new_bound, k_);
    r.q_ = q_;
    if (static_cast<int>(r.q_.size()) > new_bound + 1) r.q_.resize(new_bound + 1);
    r.align();
    return r;
}

TruncSeries EpsPoly::eval(const Rational& value) const {
    TruncSeries acc(k_);
    for (auto it = q_.rbegin(); it != q_.rend(); ++it)
        acc = acc.scale(value) + *it;
    return acc;
}

EpsPoly EpsPoly::shift_eps(long c) const {
    if (is_zero() || c == 0) return *this;
    int d = degree();
    // binomial table up to degree d
    std::vector<std::vector<Rational>> binom(d + 1, std::vector<Rational>(d + 1));
    for (int r = 0; r <= d; ++r) {
        binom[r][0] = Rational(1);
        for (int s = 1; s <= r; ++s)
            binom[r][s] = binom[r - 1][s - 1] + ((s <= r - 1) ? binom[r - 1][s] : Rational());
    }
    Rational cr(c);
    std::vector<TruncSeries> v(d + 1, TruncSeries(k_));
    for (int r = 0; r <= d; ++r) {
        if (q_[r].is_zero()) continue;
        Rational p(1); // c^{r-s} built downward
        for (int s = r; s >= 0; --s) {
            v[s] += q_[r].scale(binom[r][s] * p);
            p *= cr;
        }
    }
    return EpsPoly(std::move(v), bound_);
}

EpsPoly EpsPoly::inverse() const {
    if (is_zero() || coeff(0).constant_term().is_zero())
        throw InputError("EpsPoly is not a unit");
    TruncSeries d0 = series_inv(q_[0]);
    std::vector<TruncSeries> v(bound_ + 1, TruncSeries(k_));
    v[0] = d0;
    for (int j = 1; j <= bound_; ++j) {
        TruncSeries acc(k_);
        for (int i = 1; i <= std::min(j, degree()); ++i)
            acc += q_[i] * v[j - i];
        v[j] = -(acc * d0);
    }
    return EpsPoly(std::move(v), bound_);
}

bool operator==(const EpsPoly& a, const EpsPoly& b) {
    return a.k_ == b.k_ && a.q_ == b.q_;
}

bool EpsPoly::agrees_through(const EpsPoly& o, int eps_deg, int t_deg) const {
    if (t_deg >= k_ || t_deg >= o.k_) return false;
    for (int j = 0; j <= eps_deg; ++j)
        for (int i = 0; i <= t_deg; ++i)
            if (coeff(j).coeff(i) != o.coeff(j).coeff(i)) return false;
    return true;
}

std::string EpsPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t j = 0; j < q_.size(); ++j) {
        if (q_[j].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + q_[j].str() + ")";
        if (j == 1) out += "*eps";
        else if (j > 1) out += "*eps^" + std::to_string(j);
    }
    return out;
}

} // namespace pdet
