#include "pdet/monodromy.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "pdet/errors.hpp"

namespace pdet {

namespace {

// forward-mode dual over Laurent series, for d/dlambda of the continued
// fraction
struct Dual {
    LaurentSeries v, d;

    static Dual constant(const Rational& c, long wp) {
        return {LaurentSeries::constant(c, wp), LaurentSeries::zero(wp)};
    }
    static Dual variable(const LaurentSeries& lam, long wp) {
        return {lam, LaurentSeries::constant(Rational(1), wp)};
    }
};

Dual operator+(const Dual& a, const Dual& b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(const Dual& a, const Dual& b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(const Dual& a, const Dual& b) {
    return {a.v * b.v, a.d * b.v + a.v * b.d};
}
Dual operator/(const Dual& a, const Dual& b) {
    LaurentSeries bi = b.v.inv();
    LaurentSeries q = a.v * bi;
    return {q, (a.d - q * b.d) * bi};
}

Dual shift(const Dual& a, long c, long wp) {
    return a + Dual::constant(Rational(c), wp);
}

// One branch of the continued fraction: 1 - u f_1 / (1 - u f_2 / (...)),
// with f_j = (lam + top - j + 1)^2 / ((lam + top - j)(lam + top - j + 2))
// for the first branch (top = 2) and f_j = (lam + 2 - j)^2 /
// ((lam + 1 - j)(lam + 3 - j)) for the second.
Dual cf_branch(const Dual& lam, const LaurentSeries& u, int depth, bool second, long wp) {
    Dual b = Dual::constant(Rational(1), wp);
    for (int j = depth; j >= 1; --j) {
        long center = second ? (2 - j) : (j + 1);
        Dual numf = shift(lam, center, wp);
        Dual f = numf * numf /
                 (shift(lam, center - 1, wp) * shift(lam, center + 1, wp));
        Dual uf{u * f.v, u * f.d};
        b = Dual::constant(Rational(1), wp) - uf / b;
    }
    return b;
}

Dual cf_equation(const Dual& lam, const LaurentSeries& u, int depth, long wp) {
    return cf_branch(lam, u, depth, false, wp) + cf_branch(lam, u, depth, true, wp) -
           Dual::constant(Rational(1), wp);
}

LaurentSeries solve_heun_depth(int K, int depth) {
    // each Newton step costs a couple of orders of window to the 1/lambda
    // divisions, hence the generous margin
    const long wp = 2 * K + 12;
    // u = t/(t+1)^2
    RationalFunction u_rf = RationalFunction::t() /
                            ((RationalFunction::t() + RationalFunction::one()) *
                             (RationalFunction::t() + RationalFunction::one()));
    LaurentSeries u = LaurentSeries::from_trunc(u_rf.expand(static_cast<int>(wp)));

    std::vector<Rational> seed(wp - 1);
    seed[0] = Rational(1, 2);
    LaurentSeries lam(1, std::move(seed));

    long last_val = 0;
    for (int iter = 0; iter < 64; ++iter) {
        Dual f = cf_equation(Dual::variable(lam, lam.end()), u, depth, lam.end());
        LaurentSeries corr = f.v / f.d;
        if (corr.is_zero() || corr.valuation() > K) break;
        if (iter > 0 && corr.valuation() <= last_val)
            throw MathError("heun solver: Newton stagnated at t-valuation " +
                            std::to_string(corr.valuation()));
        last_val = corr.valuation();
        lam = lam - corr;
        if (!lam.known_through(K))
            throw MathError("heun solver: precision window collapsed");
    }
    // lam is certified through t^{K-1}, so the residual must vanish through
    // t^{K-1}; the coefficient at t^K may legitimately survive
    Dual residual = cf_equation(Dual::variable(lam, lam.end()), u, depth, lam.end());
    for (long e = residual.v.valuation(); e <= std::min<long>(K - 1, residual.v.end() - 1); ++e)
        if (!residual.v.coeff(e).is_zero())
            throw MathError("heun solver: Newton failed to converge");
    return lam.restrict_end(K);
}

} // namespace

LaurentSeries lambda_heun(int K) {
    if (K < 2) throw InputError("lambda_heun needs K >= 2");
    const int depth = K + 2;
    LaurentSeries a = solve_heun_depth(K, depth);
    LaurentSeries b = solve_heun_depth(K, depth + 2);
    if (!a.agrees_through(b, K - 1))
        throw MathError("heun solver: depth " + std::to_string(depth) + " and " +
                        std::to_string(depth + 2) + " disagree; raise the depth");
    return a;
}

TruncSeries h_series(int K) {
    LaurentSeries lam = lambda_heun(K);
    TruncSeries l = lam.to_trunc();
    return (l * l).truncate(K);
}

TruncSeries lambda_elliptic(int K) {
    if (K < 1) throw InputError("lambda_elliptic needs K >= 1");
    std::vector<Rational> c(K);
    c[0] = Rational(1);
    for (int k = 1; k < K; ++k)
        c[k] = c[k - 1] * Rational((2 * k - 1) * (2 * k - 1), 4 * k * k);
    return TruncSeries(std::move(c));
}

// ---------------------------------------------------------------------------
// numeric monodromy

namespace {

using Cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// x-coefficient polynomials A_0..A_n of the full operator (prefactor
// dropped: it scales the equation, not the solution space)
std::vector<std::vector<Cplx>> scalar_ode_coeffs(const DiffOperator& op, Cplx t_value) {
    const int n = op.order();
    // principal part (x d/dx - l_1)...(x d/dx - l_n): vector over k of
    // polynomials in x with rational coefficients
    std::vector<QPoly> principal{QPoly(Rational(1))};
    for (long l : op.exponents()) {
        std::vector<QPoly> next(principal.size() + 1);
        for (size_t k = 0; k < principal.size(); ++k) {
            const QPoly& pk = principal[k];
            // (x d/dx - l)(P x^? d^k) contributes x P' - l P at order k and x P at k+1
            QPoly xp_deriv;
            for (int d = 1; d <= pk.degree(); ++d)
                xp_deriv = xp_deriv + QPoly::monomial(pk.coeff(d) * Rational(d), d);
            next[k] = next[k] + xp_deriv - pk.scale(Rational(l));
            next[k + 1] = next[k + 1] + QPoly::monomial(Rational(1), 1) * pk;
        }
        principal = std::move(next);
    }

    int max_i = 0;
    for (const auto& [key, rf] : op.coeffs())
        if (!rf.is_zero()) max_i = std::max(max_i, static_cast<int>(key.first));
    int deg = max_i;
    for (const auto& p : principal) deg = std::max(deg, p.degree());

    std::vector<std::vector<Cplx>> a(n + 1, std::vector<Cplx>(deg + 1, Cplx(0)));
    for (int k = 0; k <= n; ++k)
        for (int d = 0; d <= principal[k].degree(); ++d)
            a[k][d] += Cplx(principal[k].coeff(d).to_double());
    for (const auto& [key, rf] : op.coeffs()) {
        auto [i, k] = key;
        if (rf.is_zero()) continue;
        if (k > n)
            throw InputError("numeric monodromy needs m <= n (operator order preserved)");
        a[k][i] += rf.eval(t_value);
    }
    return a;
}

Cplx eval_poly(const std::vector<Cplx>& p, Cplx x) {
    Cplx acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

CMatrix companion(const std::vector<std::vector<Cplx>>& a, Cplx x) {
    const int n = static_cast<int>(a.size()) - 1;
    CMatrix m = CMatrix::Zero(n, n);
    Cplx lead = eval_poly(a[n], x);
    for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = 1.0;
    for (int k = 0; k < n; ++k) m(n - 1, k) = -eval_poly(a[k], x) / lead;
    return m;
}

std::vector<Cplx> eigen_sorted(const CMatrix& m) {
    Eigen::ComplexEigenSolver<CMatrix> es(m);
    std::vector<Cplx> ev(es.eigenvalues().data(),
                         es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(ev.begin(), ev.end(), [](Cplx a, Cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return ev;
}

CMatrix integrate_loop(const std::vector<std::vector<Cplx>>& a, double radius, long steps) {
    const int n = static_cast<int>(a.size()) - 1;
    const double h = 2.0 * M_PI / static_cast<double>(steps);
    const Cplx I(0, 1);
    CMatrix y = CMatrix::Identity(n, n);
    auto rhs = [&](double theta, const CMatrix& v) -> CMatrix {
        Cplx x = radius * std::exp(I * theta);
        return (I * x) * (companion(a, x) * v);
    };
    const Cplx half(h / 2, 0), full(h, 0), sixth(h / 6, 0), two(2, 0);
    for (long s = 0; s < steps; ++s) {
        double th = s * h;
        CMatrix k1 = rhs(th, y);
        CMatrix k2 = rhs(th + h / 2, y + half * k1);
        CMatrix k3 = rhs(th + h / 2, y + half * k2);
        CMatrix k4 = rhs(th + h, y + full * k3);
        y = y + sixth * (k1 + two * k2 + two * k3 + k4);
    }
    return y;
}

} // namespace

MonodromyResult monodromy_numeric(const DiffOperator& op, Cplx t_value,
                                  double radius, double tol) {
    if (tol <= 0) throw InputError("tolerance must be positive");
    if (!(std::abs(t_value) < radius && radius < 1))
        throw InputError("need |t| < radius < 1 for the loop geometry");

    auto a = scalar_ode_coeffs(op, t_value);
    const int n = op.order();

    // the symbol must not vanish on the loop
    double min_sym = 1e300, max_sym = 0;
    for (int s = 0; s < 128; ++s) {
        Cplx x = radius * std::exp(Cplx(0, 2 * M_PI * s / 128.0));
        double v = std::abs(eval_poly(a[n], x));
        min_sym = std::min(min_sym, v);
        max_sym = std::max(max_sym, v);
    }
    if (min_sym < 1e-9 * std::max(1.0, max_sym))
        throw InputError("bad contour: the symbol vanishes on the loop");

    MonodromyResult res;
    res.radius = radius;
    std::vector<Cplx> prev;
    for (long steps = 512; steps <= (1l << 22); steps *= 2) {
        CMatrix holonomy = integrate_loop(a, radius, steps);
        std::vector<Cplx> ev = eigen_sorted(holonomy);
        if (!prev.empty()) {
            double diff = 0;
            for (size_t i = 0; i < ev.size(); ++i)
                diff = std::max(diff, std::abs(ev[i] - prev[i]));
            if (diff < tol) {
                res.eigenvalues = ev;
                res.det = holonomy.determinant();
                res.steps = steps;
                res.est_error = diff;
                return res;
            }
        }
        prev = std::move(ev);
    }
    throw MathError("numeric monodromy: step halving failed to reach the tolerance");
}

} // namespace pdet
