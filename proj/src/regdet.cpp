#include "pdet/regdet.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "pdet/errors.hpp"
#include "pdet/series_io.hpp"
#include "pdet/window_det.hpp"

namespace pdet {

RationalFunctionEps RationalFunctionEps::from_denominator(EpsPoly num, const QPoly& den) {
    if (den.is_zero()) throw InputError("zero denominator");
    RationalFunctionEps f{std::move(num), {}};
    QPoly rest = den;
    // peel integer roots; the root of a linear factor a*eps+b is -b/a
    bool progress = true;
    while (rest.degree() > 0 && progress) {
        progress = false;
        // candidate integer roots divide rest(0)/lead; try small shifts around 0
        for (long c = -1024; c <= 1024 && rest.degree() > 0; ++c) {
            if (!rest.eval(Rational(c)).is_zero()) continue;
            std::vector<Rational> lin{Rational(-c), Rational(1)};
            rest = rest.divexact(QPoly(lin));
            f.poles[c] += 1;
            progress = true;
            break;
        }
    }
    if (rest.degree() > 0)
        throw InputError("unsupported pole: denominator has a non-integer root");
    // leftover constant folds into the numerator
    f.num = f.num.scale(rest.coeff(0).inv());
    return f;
}

RationalFunctionEps RationalFunctionEps::mul(const RationalFunctionEps& o, int eps_bound) const {
    RationalFunctionEps r{(num.with_bound(eps_bound) * o.num.with_bound(eps_bound)), poles};
    for (const auto& [c, m] : o.poles) r.poles[c] += m;
    return r;
}

EpsLaurent t_eps(const RationalFunctionEps& f, int pole_cap) {
    const int K = f.num.t_order();
    EpsLaurent out(pole_cap, 0, K);
    if (f.num.is_zero()) return out;

    for (const auto& [c, mult] : f.poles) {
        // delta-expansion of f*(eps-c)^mult at eps = c + delta, through delta^{mult-1}
        const int need = mult; // coefficients delta^0 .. delta^{mult-1}
        EpsPoly g = f.num.shift_eps(c).with_bound(std::max(f.num.eps_bound(), need));
        for (const auto& [c2, m2] : f.poles) {
            if (c2 == c) continue;
            // 1/((c-c2) + delta)^{m2} as a delta-series through delta^{need-1}
            Rational d0(c - c2);
            Rational d0inv = d0.inv();
            std::vector<TruncSeries> inv_lin(need, TruncSeries(K));
            Rational pw = d0inv;
            for (int s = 0; s < need; ++s) {
                inv_lin[s] = TruncSeries((s % 2 == 0) ? pw : -pw, K);
                pw = pw * d0inv;
            }
            EpsPoly base(std::move(inv_lin), need - 1 < 0 ? 0 : need - 1);
            EpsPoly pw_poly = EpsPoly::constant(Rational(1), need - 1 < 0 ? 0 : need - 1, K);
            for (int rep = 0; rep < m2; ++rep) pw_poly *= base;
            g = g.with_bound(need - 1 < 0 ? 0 : need - 1) * pw_poly;
        }
        g = g.with_bound(need - 1 < 0 ? 0 : need - 1);
        // principal part: coefficient of 1/(eps-c)^j is [delta^{mult-j}] g
        for (int j = 1; j <= mult && j <= pole_cap; ++j) {
            TruncSeries gamma = g.coeff(mult - j);
            if (gamma.is_zero()) continue;
            out.set_coeff(-j, out.coeff(-j) + gamma);
        }
    }
    return out;
}

namespace {

// q_n has a nonzero integer-ish constant k0 once the window covers every
// exponent; Lemma 5 wants q_n = 1 mod t, so divide the unit constant out
// and fold it back into q_inv afterwards.
WeierstrassData normalized_weierstrass(const EpsPoly& q, int n, int K) {
    Rational k0 = q.coeff(n).constant_term();
    if (k0.is_zero())
        throw MathError("window determinant has no unit eps^n coefficient; "
                        "grow the window beyond the exponents first");
    WeierstrassData wd = weierstrass_iterative(q.scale(k0.inv()), n, K);
    wd.q_inv = wd.q_inv.scale(k0);
    return wd;
}

} // namespace

std::string StabilizationReport::to_json() const {
    nlohmann::json j;
    j["converged"] = converged;
    j["eps_bound"] = eps_bound;
    j["t_order"] = t_order;
    j["certified_order"] = certified_order;
    nlohmann::json wins = nlohmann::json::array();
    for (const auto& [m, n] : windows) wins.push_back({{"M", m}, {"N", n}});
    j["windows"] = wins;
    if (!snapshots.empty()) {
        nlohmann::json snap = nlohmann::json::array();
        for (const auto& s : snapshots.back()) {
            nlohmann::json coeffs = nlohmann::json::array();
            for (const auto& c : s.coeffs()) coeffs.push_back(c.frac_str());
            snap.push_back(coeffs);
        }
        j["final_w"] = snap;
    }
    return j.dump();
}

WPolyResult regularized_wpoly(const DiffOperator& op, int K,
                              std::optional<int> eps_bound_override) {
    if (K < 1) throw InputError("t-order K must be >= 1");
    const int n = op.order();
    const int m = op.max_pert_degree();
    const int E = eps_bound_override.value_or(n * (K + 1));
    const long lmax = op.max_abs_exponent();

    const long start = lmax + n + 2;
    const long step = std::max(2, m);
    const long safety = static_cast<long>(K) * m * (m + 1) + lmax + n + 4;

    WPolyResult result;
    result.report.eps_bound = E;
    result.report.t_order = K;

    std::optional<WeierstrassData> prev;
    for (long M = start; M <= safety; M += step) {
        EpsPoly q = window_det(op, -M, M, E, K).value;
        WeierstrassData wd = normalized_weierstrass(q, n, K);
        result.report.windows.emplace_back(M, M);
        result.report.snapshots.push_back(wd.w);
        if (prev && prev->w == wd.w) {
            result.data = std::move(wd);
            result.report.converged = true;
            result.report.certified_order = K;
            return result;
        }
        prev = std::move(wd);
    }
    throw MathError("window determinants did not stabilize within the safety bound "
                    "M = N = " + std::to_string(safety) +
                    "; the smallness constraint is likely breached");
}

TruncSeries ldet(const DiffOperator& op, int K, std::optional<int> eps_bound_override) {
    WPolyResult r = regularized_wpoly(op, K, eps_bound_override);
    // L(D) = (-1)^n w(0) = w_n
    return r.data.w.back();
}

namespace {

struct CycleContext {
    const DiffOperator* op;
    long b;
    int K;
    int kcap;
    int max_up;   // largest j - i step (upper bandwidth)
    int max_down; // largest i - j step (lower bandwidth)
    bool allow_diag;
    EpsLaurent* acc;  // accumulates the pole coefficients s_1..s_n of T_eps(...)
    int out_pole_cap; // n
    bool bound_breach = false;

    bool step_ok(long i, long j) const {
        return j - i <= max_up && i - j <= max_down && (i != j || allow_diag);
    }

    // A-bar entry at (i, j): b_ij(eps)/prod_k(j+eps-l_k), minus 1 on the
    // diagonal, i.e. numerator b_ij - b0_jj over the same denominator.
    RationalFunctionEps abar(long i, long j) const {
        EpsPoly num = op->matrix_entry(i, j, kEpsUnbounded, K);
        if (i == j) num -= op->diagonal_symbol(i, kEpsUnbounded, K);
        RationalFunctionEps f{num, {}};
        for (long lk : op->exponents()) f.poles[lk - j] += 1;
        return f;
    }
};

// Depth-first enumeration of cycles (i_1 .. i_k): all indices <= -b, max
// exactly -b, consecutive steps inside the band, closing step admissible.
// 'prod' multiplies the k-1 entries along the open path; 'smalls' counts
// its factors with row <= column (each lies in (t)). A cycle contributes
// (-1)^{k-1}/k times the T_eps image of its full product.
void enumerate_cycles(CycleContext& ctx, std::vector<long>& path,
                      const RationalFunctionEps& prod, int smalls, bool touched) {
    const int k = static_cast<int>(path.size());
    const long cur = path.back();
    const long first = path.front();

    if (touched && ctx.step_ok(cur, first)) {
        int closing_small = (cur <= first) ? 1 : 0;
        if (smalls + closing_small < ctx.K) { // otherwise zero mod t^K
            RationalFunctionEps cycle = prod.mul(ctx.abar(cur, first), kEpsUnbounded);
            EpsLaurent contrib = t_eps(cycle, ctx.out_pole_cap);
            *ctx.acc = *ctx.acc + contrib.scale(Rational((k % 2 == 1) ? 1 : -1, k));
        }
    }

    if (k == ctx.kcap) {
        if (smalls + 1 < ctx.K) ctx.bound_breach = true;
        return;
    }

    for (long step = -ctx.max_down; step <= ctx.max_up; ++step) {
        if (step == 0 && !ctx.allow_diag) continue;
        long nxt = cur + step;
        if (nxt > -ctx.b) continue;
        int add_small = (cur <= nxt) ? 1 : 0;
        if (smalls + add_small >= ctx.K) continue; // product already 0 mod t^K
        // must still be able to return to the start and, if -b is not yet
        // visited, to climb up to it
        const long capacity = ctx.kcap - k; // appended steps plus the closing one
        if (first - nxt > capacity * ctx.max_up) continue;
        if (nxt - first > capacity * ctx.max_down) continue;
        if (!touched && nxt != -ctx.b && -ctx.b - nxt > (capacity - 1) * ctx.max_up)
            continue;

        RationalFunctionEps ext = prod.mul(ctx.abar(cur, nxt), kEpsUnbounded);
        path.push_back(nxt);
        enumerate_cycles(ctx, path, ext, smalls + add_small, touched || nxt == -ctx.b);
        path.pop_back();
    }
}

} // namespace

EpsPoly w_via_trace(const DiffOperator& op, int K, std::optional<long> b_opt) {
    const int n = op.order();
    if (n > 3 || K > 6)
        throw InputError("w_via_trace is a cross-check: needs n <= 3 and K <= 6");
    const long lmax = op.max_abs_exponent();
    const long b = b_opt.value_or(lmax + 1);
    if (b <= lmax)
        throw InputError("w_via_trace needs b > max |l_i|");

    CycleContext ctx;
    ctx.op = &op;
    ctx.b = b;
    ctx.K = K;
    ctx.kcap = K * (op.max_pert_degree() + 1);
    ctx.max_up = op.upper_bandwidth();
    ctx.max_down = op.lower_bandwidth();
    ctx.allow_diag = op.has_diagonal_perturbation();
    ctx.out_pole_cap = n;
    EpsLaurent acc(n, 0, K);
    ctx.acc = &acc;

    const RationalFunctionEps unit{EpsPoly::constant(Rational(1), kEpsUnbounded, K), {}};
    // i_1 must reach -b by up-steps within the cap; the 'touched' flag
    // enforces max = -b exactly.
    const long deepest = -b - static_cast<long>(ctx.kcap - 1) * std::max(ctx.max_up, 0);
    for (long i1 = -b; i1 >= deepest; --i1) {
        std::vector<long> path{i1};
        enumerate_cycles(ctx, path, unit, 0, i1 == -b);
        if (ctx.max_up == 0) break; // only i_1 = -b can ever touch -b
    }

    // w = eps^n exp(S) restricted to the box [-n, 0]
    EpsLaurent exps = eps_exp(acc);
    std::vector<TruncSeries> w(n + 1, TruncSeries(K));
    for (int r = 0; r <= n; ++r) w[r] = exps.coeff(r - n);
    if (ctx.bound_breach)
        throw MathError("cycle cap exceeded without I-power exhaustion");
    return EpsPoly(std::move(w), n);
}

} // namespace pdet
