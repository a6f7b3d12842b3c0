#ifndef PDET_PRIME_FIELD_HPP
#define PDET_PRIME_FIELD_HPP

#include <cstdint>
#include <ostream>
#include <string>

#include "pdet/errors.hpp"
#include "pdet/rational.hpp"

namespace pdet {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Element of Z/pZ. The modulus travels with the element and is checked
/// whenever two elements combine, so several primes can be in flight at
/// once.
class PrimeFieldElem {
public:
    PrimeFieldElem() : r_(0), p_(0) {} // zero of unspecified modulus
    PrimeFieldElem(long long value, long long p) : p_(p) {
        if (p < 2) throw InputError("prime field modulus must be >= 2");
        r_ = value % p;
        if (r_ < 0) r_ += p;
    }

    static PrimeFieldElem from_rational(const Rational& q, long long p) {
        unsigned long up = static_cast<unsigned long>(p);
        long long n = static_cast<long long>(mpz_fdiv_ui(q.num().get_mpz_t(), up));
        long long d = static_cast<long long>(mpz_fdiv_ui(q.den().get_mpz_t(), up));
        if (d == 0)
            throw InputError("denominator divisible by " + std::to_string(p));
        return PrimeFieldElem(n, p) / PrimeFieldElem(d, p);
    }

    long long residue() const { return r_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }

    PrimeFieldElem zero_like() const { return p_ ? PrimeFieldElem(0, p_) : PrimeFieldElem(); }
    PrimeFieldElem one_like() const {
        if (p_ == 0) throw InputError("prime-field one needs a modulus");
        return PrimeFieldElem(1, p_);
    }

    PrimeFieldElem operator-() const {
        return p_ ? PrimeFieldElem(p_ - r_, p_) : *this;
    }

    friend PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        long long p = join(a, b);
        return p ? PrimeFieldElem(a.r_ + b.r_, p) : PrimeFieldElem();
    }
    friend PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        long long p = join(a, b);
        return p ? PrimeFieldElem(a.r_ - b.r_ + p, p) : PrimeFieldElem();
    }
    friend PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        long long p = join(a, b);
        return p ? PrimeFieldElem(mulmod(a.r_, b.r_, p), p) : PrimeFieldElem();
    }
    friend PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return a * b.inv();
    }

    PrimeFieldElem& operator+=(const PrimeFieldElem& o) { return *this = *this + o; }
    PrimeFieldElem& operator-=(const PrimeFieldElem& o) { return *this = *this - o; }
    PrimeFieldElem& operator*=(const PrimeFieldElem& o) { return *this = *this * o; }

    PrimeFieldElem inv() const {
        if (p_ == 0 || r_ == 0) throw InputError("inverse of zero in prime field");
        long long t = 0, nt = 1, r = p_, nr = r_;
        while (nr != 0) {
            long long q = r / nr;
            long long tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw InputError("non-invertible element: modulus not prime");
        if (t < 0) t += p_;
        return PrimeFieldElem(t, p_);
    }

    PrimeFieldElem pow(long long e) const {
        if (e < 0) return inv().pow(-e);
        PrimeFieldElem base = *this, acc(1, p_ ? p_ : 2);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        if (a.p_ == 0 || b.p_ == 0) return a.r_ == 0 && b.r_ == 0; // both zero
        return join(a, b) && a.r_ == b.r_;
    }
    friend bool operator!=(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        return !(a == b);
    }

    std::string str() const { return std::to_string(r_); }
    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& e) {
        return os << e.r_;
    }

private:
    static long long join(const PrimeFieldElem& a, const PrimeFieldElem& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_)
            throw InputError("mixed prime-field moduli: " + std::to_string(a.p_) +
                             " vs " + std::to_string(b.p_));
        return a.p_;
    }
    static long long mulmod(long long a, long long b, long long p) {
        return static_cast<long long>((static_cast<__int128>(a) * b) % p);
    }

    long long r_, p_;
};

} // namespace pdet

#endif
