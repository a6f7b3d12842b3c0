#ifndef PDET_LAURENT_SERIES_HPP
#define PDET_LAURENT_SERIES_HPP

#include <string>
#include <vector>

#include "pdet/rational.hpp"
#include "pdet/trunc_series.hpp"

namespace pdet {

/// Finite Laurent expansion in t with an explicit precision window: the
/// coefficients of t^v .. t^{end-1} are known exactly (v may be negative).
/// Arithmetic computes the correct window of the result, so precision
/// loss from division by non-units of positive valuation is tracked
/// rather than silently ignored.
class LaurentSeries {
public:
    /// Zero known through t^{end-1}.
    static LaurentSeries zero(long end);
    LaurentSeries(long valuation, std::vector<Rational> coeffs);
    static LaurentSeries from_trunc(const TruncSeries& s);
    static LaurentSeries constant(const Rational& c, long end);

    long valuation() const { return val_; } // window start (leading coeff nonzero unless zero series)
    long end() const { return end_; }       // first unknown exponent
    bool is_zero() const { return c_.empty(); }
    bool known_through(long e) const { return end_ > e; }

    /// Coefficient of t^e; exponents below the window are exactly zero,
    /// asking beyond the window throws.
    const Rational& coeff(long e) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries scale(const Rational& s) const;
    LaurentSeries inv() const;
    LaurentSeries mul_tpow(long j) const;
    LaurentSeries restrict_end(long new_end) const;

    bool agrees_through(const LaurentSeries& o, long e) const;

    /// Requires valuation >= 0 and end >= 1; yields order = end.
    TruncSeries to_trunc() const;

    std::string str() const;

private:
    LaurentSeries() : val_(0), end_(0) {}
    void normalize();

    long val_, end_;
    std::vector<Rational> c_; // c_[i] = coeff of t^{val_+i}, size end_-val_ (0 if zero)
};

LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b);

} // namespace pdet

#endif
