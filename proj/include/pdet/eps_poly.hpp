#ifndef PDET_EPS_POLY_HPP
#define PDET_EPS_POLY_HPP

#include <string>
#include <vector>

#include "pdet/trunc_series.hpp"

namespace pdet {

/// Effectively "no truncation in eps"; actual degrees stay small.
inline constexpr int kEpsUnbounded = 1 << 20;

/// Polynomial in eps with TruncSeries coefficients, eps-degree capped at
/// eps_bound. All coefficients share one truncation order; mixed-order
/// operands are aligned to the smaller order.
class EpsPoly {
public:
    EpsPoly() : EpsPoly(0, 1) {}
    /// Zero polynomial at the given (E, K).
    EpsPoly(int eps_bound, int t_order);
    EpsPoly(std::vector<TruncSeries> coeffs, int eps_bound);

    static EpsPoly constant(const TruncSeries& c, int eps_bound);
    static EpsPoly constant(const Rational& c, int eps_bound, int t_order);
    /// c * eps^d
    static EpsPoly monomial(const TruncSeries& c, int d, int eps_bound);

    int eps_bound() const { return bound_; }
    int t_order() const { return k_; }
    int degree() const; // actual degree, -1 for zero
    TruncSeries coeff(int j) const;
    bool is_zero() const;

    EpsPoly operator-() const;
    friend EpsPoly operator+(const EpsPoly& a, const EpsPoly& b);
    friend EpsPoly operator-(const EpsPoly& a, const EpsPoly& b);
    friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
    EpsPoly& operator+=(const EpsPoly& o) { return *this = *this + o; }
    EpsPoly& operator-=(const EpsPoly& o) { return *this = *this - o; }
    EpsPoly& operator*=(const EpsPoly& o) { return *this = *this * o; }

    EpsPoly scale(const TruncSeries& s) const;
    EpsPoly scale(const Rational& s) const;
    EpsPoly truncate_t(int new_order) const;
    EpsPoly with_bound(int new_bound) const;

    /// Substitute eps -> value.
    TruncSeries eval(const Rational& value) const;
    /// Taylor shift eps -> eps + c.
    EpsPoly shift_eps(long c) const;
    /// Multiplicative inverse as an eps-power series through eps^bound;
    /// needs coeff(0) to be a unit TruncSeries.
    EpsPoly inverse() const;

    friend bool operator==(const EpsPoly& a, const EpsPoly& b);
    friend bool operator!=(const EpsPoly& a, const EpsPoly& b) { return !(a == b); }
    bool agrees_through(const EpsPoly& o, int eps_deg, int t_deg) const;

    std::string str() const;

private:
    void align();

    std::vector<TruncSeries> q_; // q_[j] = coefficient of eps^j; may hold trailing zeros
    int bound_;
    int k_;
};

} // namespace pdet

#endif
