#ifndef PDET_RATIONAL_HPP
#define PDET_RATIONAL_HPP

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>

#include "pdet/errors.hpp"

namespace pdet {

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator, so equal values have identical representation.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { normalize(); }
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { normalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { normalize(); }

    static Rational from_string(const std::string& s) {
        try {
            mpq_class q(s, 10);
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw InputError("cannot parse rational: '" + s + "'");
        }
    }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_), tag{}); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InputError("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    Rational inv() const {
        if (is_zero()) throw InputError("inverse of zero rational");
        return Rational(mpq_class(1) / q_, tag{});
    }

    Rational abs() const { return Rational(mpq_class(::abs(q_)), tag{}); }

    Rational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        return Rational(mpq_class(n, d), tag{});
    }

    /// Exact square root if both numerator and denominator are perfect
    /// squares; the result is non-negative.
    std::optional<Rational> exact_sqrt() const {
        if (sign() < 0) return std::nullopt;
        if (!mpz_perfect_square_p(num().get_mpz_t()) ||
            !mpz_perfect_square_p(den().get_mpz_t()))
            return std::nullopt;
        mpz_class n, d;
        mpz_sqrt(n.get_mpz_t(), num().get_mpz_t());
        mpz_sqrt(d.get_mpz_t(), den().get_mpz_t());
        return Rational(mpq_class(n, d), tag{});
    }

    double to_double() const { return q_.get_d(); }

    /// Always "num/den", used by the bit-exact series serialization.
    std::string frac_str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// Human form: omits "/1" for integers.
    std::string str() const {
        return is_integer() ? q_.get_num().get_str() : frac_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    struct tag {};
    Rational(mpq_class q, tag) : q_(std::move(q)) {} // already canonical

    void normalize() {
        if (q_.get_den() == 0) throw InputError("rational with zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

} // namespace pdet

#endif
