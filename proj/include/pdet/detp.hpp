#ifndef PDET_DETP_HPP
#define PDET_DETP_HPP

#include "pdet/diff_operator.hpp"
#include "pdet/poly_det.hpp"

namespace pdet {

/// Exact p-determinant: determinant over (Z/p)[t] of the p x p matrix of
/// the operator on 1, x, ..., x^{p-1} (eps = 0), including the prefactor,
/// which enters as c(t)^p = c(t^p) mod p. Requires p prime and not
/// dividing any denominator constant term. The combination must be a
/// polynomial (denominators introduced by the coefficients have to be
/// cleared by the prefactor), otherwise an error is raised.
FpPoly detp(const DiffOperator& op, long long p);

} // namespace pdet

#endif
