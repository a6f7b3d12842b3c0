#ifndef PDET_DENSE_POLY_HPP
#define PDET_DENSE_POLY_HPP

#include <string>
#include <vector>

#include "pdet/errors.hpp"
#include "pdet/prime_field.hpp"
#include "pdet/rational.hpp"

namespace pdet {

/// Dense univariate polynomial, lowest degree first, trailing coefficient
/// nonzero unless the polynomial is zero. T is Rational or PrimeFieldElem.
template <class T>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    explicit DensePoly(T constant) : c_{std::move(constant)} { trim(); }

    static DensePoly monomial(const T& coeff, int deg) {
        std::vector<T> v(deg + 1, coeff.zero_like());
        v[deg] = coeff;
        return DensePoly(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // zero -> -1
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero_elem();
        return c_[i];
    }

    T eval(const T& x) const {
        T acc = zero_elem();
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    DensePoly operator-() const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(-a);
        return DensePoly(std::move(v));
    }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<T> v(std::max(a.c_.size(), b.c_.size()),
                         a.c_.empty() ? b.zero_elem() : a.zero_elem());
        for (size_t i = 0; i < a.c_.size(); ++i) v[i] = v[i] + a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) v[i] = v[i] + b.c_[i];
        return DensePoly(std::move(v));
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) {
        return a + (-b);
    }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        std::vector<T> v(a.c_.size() + b.c_.size() - 1, a.zero_elem());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] = v[i + j] + a.c_[i] * b.c_[j];
        return DensePoly(std::move(v));
    }

    DensePoly scale(const T& s) const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& a : c_) v.push_back(a * s);
        return DensePoly(std::move(v));
    }

    /// Exact division; throws MathError when the remainder is nonzero.
    DensePoly divexact(const DensePoly& d) const {
        if (d.is_zero()) throw InputError("polynomial division by zero");
        if (is_zero()) return DensePoly();
        if (degree() < d.degree())
            throw MathError("inexact polynomial division");
        std::vector<T> rem = c_;
        std::vector<T> q(degree() - d.degree() + 1, zero_elem());
        for (int k = degree() - d.degree(); k >= 0; --k) {
            T factor = rem[k + d.degree()] / d.c_.back();
            q[k] = factor;
            for (int i = 0; i <= d.degree(); ++i)
                rem[k + i] = rem[k + i] - factor * d.c_[i];
        }
        for (const auto& r : rem)
            if (!r.is_zero()) throw MathError("inexact polynomial division");
        return DensePoly(std::move(q));
    }

    /// Substitute t -> t^e (used for the mod-p Frobenius c(t)^p = c(t^p)).
    DensePoly substitute_tpow(int e) const {
        if (is_zero()) return DensePoly();
        std::vector<T> v(static_cast<size_t>(degree()) * e + 1, zero_elem());
        for (size_t i = 0; i < c_.size(); ++i) v[i * e] = c_[i];
        return DensePoly(std::move(v));
    }

    friend bool operator==(const DensePoly& a, const DensePoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    /// "4*t^2 + 4*t^3" style, ascending degree, "0" for the zero polynomial.
    std::string str(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!out.empty()) out += " + ";
            if (i == 0) {
                out += c_[i].str();
            } else {
                out += c_[i].str() + "*" + var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out.empty() ? "0" : out;
    }

private:
    T zero_elem() const { return c_.empty() ? T().zero_like() : c_.front().zero_like(); }

    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<T> c_;
};

} // namespace pdet

#endif
