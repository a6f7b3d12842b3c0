#ifndef PDET_POLY_DET_HPP
#define PDET_POLY_DET_HPP

#include <vector>

#include "pdet/dense_poly.hpp"
#include "pdet/prime_field.hpp"

namespace pdet {

using FpPoly = DensePoly<PrimeFieldElem>;

/// Fraction-free (Bareiss) determinant of a square matrix over F_p[t].
/// All entries must share one modulus; every intermediate division is
/// exact because F_p[t] is an integral domain.
FpPoly poly_bareiss_det(std::vector<std::vector<FpPoly>> m);

FpPoly poly_gcd(FpPoly a, FpPoly b);
FpPoly poly_lcm(const FpPoly& a, const FpPoly& b);

} // namespace pdet

#endif
