#ifndef PDET_TRUNC_SERIES_HPP
#define PDET_TRUNC_SERIES_HPP

#include <string>
#include <vector>

#include "pdet/rational.hpp"

namespace pdet {

/// Power series in t over Q truncated at order K: exactly the coefficients
/// of t^0 .. t^{K-1} are stored. Arithmetic carries the min of the
/// operands' orders, the computational stand-in for I-adic completion.
class TruncSeries {
public:
    explicit TruncSeries(int order = 1);
    explicit TruncSeries(std::vector<Rational> coeffs);
    TruncSeries(const Rational& constant, int order);

    static TruncSeries monomial(const Rational& c, int deg, int order);

    int order() const { return static_cast<int>(c_.size()); }
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    const Rational& constant_term() const { return c_.front(); }

    bool is_zero() const;
    /// Index of first nonzero coefficient; order() when the series is zero.
    int valuation() const;

    TruncSeries truncate(int new_order) const;
    bool agrees_through(const TruncSeries& o, int deg) const;

    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries& operator+=(const TruncSeries& o) { return *this = *this + o; }
    TruncSeries& operator-=(const TruncSeries& o) { return *this = *this - o; }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }

    TruncSeries scale(const Rational& s) const;
    /// Multiply by t^j, keeping the order (top coefficients fall off).
    TruncSeries mul_tpow(int j) const;
    /// Divide by t^j; requires the low coefficients to vanish. The result
    /// has order K - j (the honest remaining precision).
    TruncSeries div_tpow(int j) const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b);
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
};

/// Multiplicative inverse; requires a nonzero constant term.
TruncSeries series_inv(const TruncSeries& s);

/// log s = sum_{k>=1} (-1)^{k-1} (s-1)^k / k; requires constant term 1.
TruncSeries series_log(const TruncSeries& s);

/// exp s = sum s^k / k!; requires constant term 0.
TruncSeries series_exp(const TruncSeries& s);

/// Square root of s = t^{2v} u with u(0) a nonzero rational square.
/// Leading coefficient of the result is positive; the result has order
/// K - v. The zero series maps to itself.
TruncSeries series_sqrt(const TruncSeries& s);

} // namespace pdet

#endif
