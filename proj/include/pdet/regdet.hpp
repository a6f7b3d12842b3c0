#ifndef PDET_REGDET_HPP
#define PDET_REGDET_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdet/diff_operator.hpp"
#include "pdet/eps_laurent.hpp"
#include "pdet/eps_poly.hpp"
#include "pdet/weierstrass.hpp"

namespace pdet {

/// num(eps) / prod_c (eps - c)^{m_c}: rational function of eps with
/// TruncSeries coefficients and integer poles, kept factored.
struct RationalFunctionEps {
    EpsPoly num;
    std::map<long, int> poles; // c -> multiplicity

    /// Factors an explicit denominator with rational coefficients into
    /// integer roots; a residual non-constant factor is an unsupported pole.
    static RationalFunctionEps from_denominator(EpsPoly num, const QPoly& den);

    RationalFunctionEps mul(const RationalFunctionEps& o, int eps_bound) const;
};

/// T_eps: kills the polynomial part and re-centers every principal part,
/// 1/(eps-c)^j -> 1/eps^j. Exact partial fractions.
EpsLaurent t_eps(const RationalFunctionEps& f, int pole_cap);

struct StabilizationReport {
    std::vector<std::pair<long, long>> windows;          // (M, N) per attempt
    std::vector<std::vector<TruncSeries>> snapshots;     // w_1..w_n per attempt
    bool converged = false;
    int eps_bound = 0;
    int t_order = 0;
    long certified_order = 0; // t-orders 0..certified_order-1 are stabilized

    std::string to_json() const;
};

struct WPolyResult {
    WeierstrassData data;
    StabilizationReport report;

    EpsPoly w_poly() const { return data.w_poly(static_cast<int>(data.w.size())); }
};

/// Weierstrass polynomial of det B_{-M,N}(eps) for growing symmetric
/// windows until two consecutive snapshots agree through t^{K-1}.
WPolyResult regularized_wpoly(const DiffOperator& op, int K,
                              std::optional<int> eps_bound_override = std::nullopt);

/// L(D) = (-1)^n w(0) = w_n.
TruncSeries ldet(const DiffOperator& op, int K,
                 std::optional<int> eps_bound_override = std::nullopt);

/// Independent route: w(eps) = eps^n exp T_eps lim tr(log A_{-N,-b} -
/// log A_{-N,-b-1}), evaluated through the cycle-sum expansion of the
/// trace difference. Cross-check scale only (n <= 3, K <= 6).
EpsPoly w_via_trace(const DiffOperator& op, int K, std::optional<long> b = std::nullopt);

} // namespace pdet

#endif
