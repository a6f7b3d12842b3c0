#include "pdet/poly_det.hpp"

#include <utility>

namespace pdet {

namespace {

long long common_modulus(const std::vector<std::vector<FpPoly>>& m) {
    long long p = 0;
    for (const auto& row : m)
        for (const auto& e : row)
            for (const auto& c : e.coeffs()) {
                if (c.modulus() == 0) continue;
                if (p == 0) p = c.modulus();
                else if (p != c.modulus())
                    throw InputError("determinant over mixed moduli");
            }
    if (p == 0) throw InputError("determinant needs at least one typed entry");
    return p;
}

FpPoly remainder(FpPoly a, const FpPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        PrimeFieldElem f = a.coeff(a.degree()) / b.coeff(b.degree());
        a = a - FpPoly::monomial(f, a.degree() - b.degree()) * b;
    }
    return a;
}

} // namespace

FpPoly poly_bareiss_det(std::vector<std::vector<FpPoly>> m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw InputError("determinant of non-square matrix");
    long long p = common_modulus(m);
    if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    if (n == 0) return FpPoly(PrimeFieldElem(1, p));

    FpPoly prev(PrimeFieldElem(1, p));
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return FpPoly(); // zero column, singular
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).divexact(prev);
            m[i][k] = FpPoly();
        }
        prev = m[k][k];
    }
    FpPoly det = m[n - 1][n - 1];
    if (sign < 0) det = -det;
    return det;
}

FpPoly poly_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.scale(a.coeff(a.degree()).inv()); // monic
}

FpPoly poly_lcm(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly();
    return (a * b).divexact(poly_gcd(a, b));
}

} // namespace pdet
