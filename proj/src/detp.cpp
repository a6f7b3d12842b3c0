#include "pdet/detp.hpp"

#include <map>
#include <vector>

#include "pdet/errors.hpp"

namespace pdet {

namespace {

PrimeFieldElem falling_factorial(long j, int k, long long p) {
    PrimeFieldElem v(1, p);
    for (int i = 0; i < k; ++i) v *= PrimeFieldElem(j - i, p);
    return v;
}

} // namespace

FpPoly detp(const DiffOperator& op, long long p) {
    if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");

    // reduce every coefficient and collect the common denominator Q(t)
    std::map<std::pair<long, int>, std::pair<FpPoly, FpPoly>> red;
    FpPoly q_common(PrimeFieldElem(1, p));
    for (const auto& [key, rf] : op.coeffs()) {
        if (rf.is_zero()) continue;
        auto nd = [&]() {
            try {
                return rf.reduce_mod(p);
            } catch (const InputError&) {
                throw InputError("bad prime " + std::to_string(p) +
                                 ": divides a coefficient denominator at t=0");
            }
        }();
        q_common = poly_lcm(q_common, nd.second);
        red.emplace(key, std::move(nd));
    }
    auto pre = [&]() {
        try {
            return op.prefactor().reduce_mod(p);
        } catch (const InputError&) {
            throw InputError("bad prime " + std::to_string(p) +
                             ": divides the prefactor denominator at t=0");
        }
    }();

    // p x p matrix of Q(t) * b_{ij}(0) over F_p[t]; entries stay polynomial.
    const long n = p;
    std::vector<std::vector<FpPoly>> m(n, std::vector<FpPoly>(n));
    for (long j = 0; j < n; ++j) {
        for (long i = 0; i < n; ++i) {
            if (j - i > op.max_pert_degree()) continue;
            FpPoly entry;
            for (int k = 0; k <= op.max_pert_degree(); ++k) {
                auto it = red.find({k + i - j, k});
                if (it == red.end()) continue;
                PrimeFieldElem ff = falling_factorial(j, k, p);
                if (ff.is_zero()) continue;
                entry = entry + it->second.first.scale(ff) * q_common.divexact(it->second.second);
            }
            if (i == j) {
                PrimeFieldElem diag(1, p);
                for (long lk : op.exponents()) diag *= PrimeFieldElem(i - lk, p);
                entry = entry + q_common.scale(diag);
            }
            m[i][j] = std::move(entry);
        }
    }

    FpPoly det_cleared = poly_bareiss_det(std::move(m)); // = Q(t)^p det B_{0,p-1}(0)

    // restore: result = c(t)^p det B = (num_c(t^p) / (den_c(t^p) Q(t^p))) det_cleared
    FpPoly numerator = det_cleared * pre.first.substitute_tpow(static_cast<int>(p));
    FpPoly denominator = pre.second.substitute_tpow(static_cast<int>(p)) *
                         q_common.substitute_tpow(static_cast<int>(p));
    try {
        return numerator.divexact(denominator);
    } catch (const MathError&) {
        throw InputError("p-determinant is not a polynomial over F_p[t]; "
                         "the prefactor does not clear the coefficient denominators");
    }
}

} // namespace pdet
