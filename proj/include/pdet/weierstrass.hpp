#ifndef PDET_WEIERSTRASS_HPP
#define PDET_WEIERSTRASS_HPP

#include <vector>

#include "pdet/eps_poly.hpp"
#include "pdet/trunc_series.hpp"

namespace pdet {

/// Result of the factorization q = (eps^n - w_1 eps^{n-1} + ... + (-1)^n w_n) q_inv
/// with every w_i vanishing at t = 0 and q_inv a unit power series in eps.
struct WeierstrassData {
    std::vector<TruncSeries> w; // w_1 .. w_n
    EpsPoly q_inv;

    /// eps^n - w_1 eps^{n-1} + ... + (-1)^n w_n
    EpsPoly w_poly(int eps_bound) const;
};

/// Both require q_0..q_{n-1} to vanish at t=0 and q_n(0) = 1 (callers
/// divide by the unit constant of q_n mod t first; see regdet).

/// Log/exp splitting: w = eps^n exp(L_{<0} log(q/eps^n)), q_inv from the
/// complementary part.
WeierstrassData weierstrass_split(const EpsPoly& q, int n, int K);

/// Depth-by-depth iteration: K rounds of back-substitution for the
/// q_inv coefficients followed by a triangular solve for w.
WeierstrassData weierstrass_iterative(const EpsPoly& q, int n, int K);

} // namespace pdet

#endif
