#ifndef PDET_EPS_LAURENT_HPP
#define PDET_EPS_LAURENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "pdet/eps_poly.hpp"
#include "pdet/trunc_series.hpp"

namespace pdet {

/// Finite Laurent expansion in eps over TruncSeries: terms eps^{-pole_cap}
/// .. eps^{upper}, products truncated to that box. Poles deeper than the
/// cap are dropped; callers size the cap so that dropped terms are zero
/// within the t-truncation.
class EpsLaurent {
public:
    EpsLaurent(int pole_cap, int upper, int t_order);
    static EpsLaurent from_poly(const EpsPoly& p, int pole_cap);
    /// p / eps^shift
    static EpsLaurent from_poly_shifted(const EpsPoly& p, int shift, int pole_cap);

    int pole_cap() const { return pole_; }
    int upper() const { return upper_; }
    int t_order() const { return k_; }

    TruncSeries coeff(int e) const; // exponent e in [-pole_cap, upper]
    void set_coeff(int e, const TruncSeries& s);
    bool is_zero() const;

    EpsLaurent operator-() const;
    friend EpsLaurent operator+(const EpsLaurent& a, const EpsLaurent& b);
    friend EpsLaurent operator-(const EpsLaurent& a, const EpsLaurent& b);
    friend EpsLaurent operator*(const EpsLaurent& a, const EpsLaurent& b);

    EpsLaurent scale(const Rational& s) const;
    EpsLaurent resize(int pole_cap, int upper) const;

    /// Principal part (exponents < 0).
    EpsLaurent principal_part() const;
    /// Polynomial part (exponents >= 0).
    EpsPoly poly_part() const;

    friend bool operator==(const EpsLaurent& a, const EpsLaurent& b);
    friend bool operator!=(const EpsLaurent& a, const EpsLaurent& b) { return !(a == b); }

    std::string str() const;

private:
    int pole_, upper_, k_;
    std::vector<TruncSeries> t_; // t_[i] = coeff of eps^{i - pole_}
};

/// L_{<0} f and L_{>=0} f; the two summands reproduce f exactly.
std::pair<EpsLaurent, EpsPoly> eps_split(const EpsLaurent& f);

/// sum_k f^k / k! for f small in the (t, eps)-adic sense: the running
/// power must vanish within the truncation box after finitely many steps.
EpsLaurent eps_exp(const EpsLaurent& f);

/// sum_k (-1)^{k-1} (f-1)^k / k, same convergence requirement on f-1.
EpsLaurent eps_log1p(const EpsLaurent& f_minus_1);

} // namespace pdet

#endif
