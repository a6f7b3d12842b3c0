#ifndef PDET_WINDOW_DET_HPP
#define PDET_WINDOW_DET_HPP

#include <vector>

#include "pdet/diff_operator.hpp"
#include "pdet/eps_poly.hpp"

namespace pdet {

struct WindowDet {
    long a, b;
    EpsPoly value;
};

/// det B_{a,b}(eps) truncated to (E, K). Dispatches to a banded minor
/// recurrence when the lower bandwidth is <= 1, otherwise to the
/// two-phase elimination below.
WindowDet window_det(const DiffOperator& op, long a, long b, int E, int K);

/// Generic route: unit rows (those with i not in {l_1..l_n}) are removed
/// by forward elimination with exact division in the truncated local
/// ring; the remaining core block goes through Berkowitz. Exposed
/// separately so tests can cross-check the two routes.
WindowDet window_det_elimination(const DiffOperator& op, long a, long b, int E, int K);

/// Division-free determinant over the EpsPoly ring (Berkowitz).
EpsPoly berkowitz_det(const std::vector<std::vector<EpsPoly>>& mat, int E, int K);

} // namespace pdet

#endif
