#ifndef PDET_MONODROMY_HPP
#define PDET_MONODROMY_HPP

#include <complex>
#include <vector>

#include "pdet/diff_operator.hpp"
#include "pdet/laurent_series.hpp"
#include "pdet/trunc_series.hpp"

namespace pdet {

/// The exponent series lambda(t) = t/2 + t^2/24 + ... of the intro Heun
/// operator, solved from the two-branch continued-fraction equation by
/// Newton iteration over Laurent series in t. Certified by recomputing at
/// depth+2 and comparing through t^{K-1}.
LaurentSeries lambda_heun(int K);

/// lambda_heun squared as a power series: h(t), coefficients through t^{K-1}.
TruncSeries h_series(int K);

/// Elliptic closed form: sum_k ((2k)!^2 / (2^{4k} k!^4)) t^k.
TruncSeries lambda_elliptic(int K);

struct MonodromyResult {
    std::vector<std::complex<double>> eigenvalues; // sorted by (re, im)
    std::complex<double> det;
    double radius = 0;
    long steps = 0;
    double est_error = 0;
};

/// Numeric monodromy of D g = 0 around |x| = radius at a fixed parameter
/// value: integrates the companion fundamental system and returns the
/// eigenvalues of the holonomy matrix. Step count doubles until two
/// consecutive runs agree within tol.
MonodromyResult monodromy_numeric(const DiffOperator& op, std::complex<double> t_value,
                                  double radius, double tol);

} // namespace pdet

#endif
