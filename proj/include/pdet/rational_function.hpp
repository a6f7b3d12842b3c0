#ifndef PDET_RATIONAL_FUNCTION_HPP
#define PDET_RATIONAL_FUNCTION_HPP

#include <complex>
#include <string>
#include <utility>

#include "pdet/dense_poly.hpp"
#include "pdet/poly_det.hpp"
#include "pdet/trunc_series.hpp"

namespace pdet {

using QPoly = DensePoly<Rational>;

/// num(t)/den(t), kept in a canonical integer form: both polynomials have
/// coprime integer coefficients and the lowest nonzero coefficient of den
/// is positive.
class RationalFunction {
public:
    RationalFunction(); // zero
    RationalFunction(QPoly num, QPoly den);
    explicit RationalFunction(const Rational& c);
    static RationalFunction one();
    static RationalFunction t(); // the variable itself

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool den_invertible_at_origin() const { return !den_.coeff(0).is_zero(); }
    /// num(0)/den(0); requires den(0) != 0.
    Rational constant_term() const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    RationalFunction pow(long e) const;

    /// Series expansion to order K; requires den(0) != 0.
    TruncSeries expand(int order) const;

    /// Reduce both polynomials mod p; requires p prime and den(0) nonzero mod p.
    std::pair<FpPoly, FpPoly> reduce_mod(long long p) const;

    std::complex<double> eval(std::complex<double> t) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const;

private:
    void canonicalize();

    QPoly num_, den_;
};

/// Parses expressions like "-(1+t)", "(3*t^2-1)/2", "1/(1-t)" over
/// integer literals and the variable t, with + - * / ^ and parentheses.
RationalFunction parse_rational_function(const std::string& text);

} // namespace pdet

#endif
