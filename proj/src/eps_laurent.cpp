#include "pdet/eps_laurent.hpp"

#include <algorithm>

#include "pdet/errors.hpp"

namespace pdet {

EpsLaurent::EpsLaurent(int pole_cap, int upper, int t_order)
    : pole_(pole_cap), upper_(upper), k_(t_order),
      t_(pole_cap + upper + 1, TruncSeries(t_order)) {
    if (pole_cap < 0 || upper < 0)
        throw InputError("EpsLaurent box must contain eps^0");
}

EpsLaurent EpsLaurent::from_poly(const EpsPoly& p, int pole_cap) {
    return from_poly_shifted(p, 0, pole_cap);
}

EpsLaurent EpsLaurent::from_poly_shifted(const EpsPoly& p, int shift, int pole_cap) {
    int upper = std::max(0, p.degree() - shift);
    EpsLaurent f(pole_cap, upper, p.t_order());
    for (int j = 0; j <= p.degree(); ++j) {
        int e = j - shift;
        if (e < -pole_cap || e > upper) continue;
        f.set_coeff(e, p.coeff(j));
    }
    return f;
}

TruncSeries EpsLaurent::coeff(int e) const {
    if (e < -pole_ || e > upper_) return TruncSeries(k_);
    return t_[e + pole_];
}

void EpsLaurent::set_coeff(int e, const TruncSeries& s) {
    if (e < -pole_ || e > upper_)
        throw InputError("exponent outside the EpsLaurent box");
    t_[e + pole_] = s.order() == k_ ? s : s.truncate(k_);
}

bool EpsLaurent::is_zero() const {
    for (const auto& s : t_)
        if (!s.is_zero()) return false;
    return true;
}

EpsLaurent EpsLaurent::operator-() const {
    EpsLaurent r = *this;
    for (auto& s : r.t_) s = -s;
    return r;
}

EpsLaurent operator+(const EpsLaurent& a, const EpsLaurent& b) {
    int pole = std::max(a.pole_, b.pole_);
    int upper = std::max(a.upper_, b.upper_);
    EpsLaurent r(pole, upper, std::min(a.k_, b.k_));
    for (int e = -pole; e <= upper; ++e)
        r.set_coeff(e, a.coeff(e).truncate(r.k_) + b.coeff(e).truncate(r.k_));
    return r;
}

EpsLaurent operator-(const EpsLaurent& a, const EpsLaurent& b) { return a + (-b); }

EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b) {
    int pole = std::max(a.pole_, b.pole_);
    int upper = std::max(a.upper_, b.upper_);
    EpsLaurent r(pole, upper, std::min(a.k_, b.k_));
    for (int i = -a.pole_; i <= a.upper_; ++i) {
        TruncSeries ai = a.coeff(i);
        if (ai.is_zero()) continue;
        ai = ai.truncate(r.k_);
        for (int j = -b.pole_; j <= b.upper_; ++j) {
            int e = i + j;
            if (e < -pole || e > upper) continue;
            TruncSeries bj = b.coeff(j);
            if (bj.is_zero()) continue;
            r.t_[e + pole] += ai * bj.truncate(r.k_);
        }
    }
    return r;
}

EpsLaurent EpsLaurent::scale(const Rational& s) const {
    EpsLaurent r = *this;
    for (auto& c : r.t_) c = c.scale(s);
    return r;
}

EpsLaurent EpsLaurent::resize(int pole_cap, int upper) const {
    EpsLaurent r(pole_cap, upper, k_);
    for (int e = -pole_cap; e <= upper; ++e)
        if (e >= -pole_ && e <= upper_) r.set_coeff(e, coeff(e));
    return r;
}

EpsLaurent EpsLaurent::principal_part() const {
    EpsLaurent r(pole_, 0, k_);
    for (int e = -pole_; e < 0; ++e) r.set_coeff(e, coeff(e));
    return r;
}

EpsPoly EpsLaurent::poly_part() const {
    std::vector<TruncSeries> v;
    for (int e = 0; e <= upper_; ++e) v.push_back(coeff(e));
    if (v.empty()) return EpsPoly(upper_, k_);
    return EpsPoly(std::move(v), std::max(upper_, 0));
}

bool operator==(const EpsLaurent& a, const EpsLaurent& b) {
    if (a.k_ != b.k_) return false;
    int pole = std::max(a.pole_, b.pole_);
    int upper = std::max(a.upper_, b.upper_);
    for (int e = -pole; e <= upper; ++e)
        if (!(a.coeff(e) == b.coeff(e))) return false;
    return true;
}

std::string EpsLaurent::str() const {
    std::string out;
    for (int e = -pole_; e <= upper_; ++e) {
        TruncSeries c = coeff(e);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        if (e != 0) out += "*eps^" + std::to_string(e);
    }
    return out.empty() ? "0" : out;
}

std::pair<EpsLaurent, EpsPoly> eps_split(const EpsLaurent& f) {
    return {f.principal_part(), f.poly_part()};
}

namespace {

EpsLaurent power_sum(const EpsLaurent& f, bool exponential) {
    EpsLaurent acc(f.pole_cap(), f.upper(), f.t_order());
    if (exponential) acc.set_coeff(0, TruncSeries(Rational(1), f.t_order()));
    EpsLaurent power = acc; // running f^k, seeded with 1 below
    if (!exponential) {
        power = EpsLaurent(f.pole_cap(), f.upper(), f.t_order());
        power.set_coeff(0, TruncSeries(Rational(1), f.t_order()));
    }
    Rational factorial(1);
    const int hard_cap = 4 * (f.t_order() + f.pole_cap() + f.upper()) + 16;
    for (int k = 1; k <= hard_cap; ++k) {
        power = power * f;
        if (power.is_zero()) return acc;
        if (exponential) {
            factorial *= Rational(k);
            acc = acc + power.scale(factorial.inv());
        } else {
            acc = acc + power.scale(Rational(k % 2 == 1 ? 1 : -1, k));
        }
    }
    throw MathError("eps-Laurent power sum did not terminate within the bound; "
                    "input is not small in the (t, eps)-adic sense");
}

} // namespace

EpsLaurent eps_exp(const EpsLaurent& f) { return power_sum(f, true); }

EpsLaurent eps_log1p(const EpsLaurent& f_minus_1) { return power_sum(f_minus_1, false); }

} // namespace pdet
