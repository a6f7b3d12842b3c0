#include "pdet/weierstrass.hpp"

#include <algorithm>

#include "pdet/eps_laurent.hpp"
#include "pdet/errors.hpp"

namespace pdet {

namespace {

void check_ready(const EpsPoly& q, int n, int K) {
    if (n < 1) throw InputError("weierstrass: pole order n must be >= 1");
    if (K < 1 || K > q.t_order())
        throw InputError("weierstrass: bad truncation order");
    for (int j = 0; j < n; ++j)
        if (!q.coeff(j).constant_term().is_zero())
            throw InputError("not weierstrass-ready: q_" + std::to_string(j) +
                             " has a nonzero constant term");
    if (!q.coeff(n).constant_term().is_one())
        throw InputError("not weierstrass-ready: q_n must be 1 mod t "
                         "(divide by its unit constant first)");
}

} // namespace

EpsPoly WeierstrassData::w_poly(int eps_bound) const {
    const int n = static_cast<int>(w.size());
    const int K = n > 0 ? w[0].order() : 1;
    std::vector<TruncSeries> c(n + 1, TruncSeries(K));
    c[n] = TruncSeries(Rational(1), K);
    for (int r = 1; r <= n; ++r)
        c[n - r] = (r % 2 == 1) ? -w[r - 1] : w[r - 1];
    return EpsPoly(std::move(c), eps_bound);
}

WeierstrassData weierstrass_split(const EpsPoly& q, int n, int K) {
    check_ready(q, n, K);
    const int E = q.eps_bound();
    const EpsPoly qk = q.truncate_t(K);

    // f = q/eps^n - 1 in a box wide enough that truncation loses nothing:
    // a pole deeper than n(K-1) costs t^K to create, and a term climbing
    // above E + n(K-1) costs t^K to descend back to eps^E (every descent
    // rides a pole coefficient, which is small). q is an exact polynomial,
    // so zero-extending the upper side is exact.
    const int pole_cap = n * (K - 1) + 1;
    const int upper_cap = std::max(E, qk.degree() - n) + n * (K - 1) + 1;
    EpsLaurent f = EpsLaurent::from_poly_shifted(qk, n, pole_cap);
    f = f.resize(pole_cap, upper_cap);
    f.set_coeff(0, f.coeff(0) - TruncSeries(Rational(1), K));

    EpsLaurent logf = eps_log1p(f);
    auto [neg, pos] = eps_split(logf);

    // q_-(eps) = exp(L_{<0} log f): a polynomial in 1/eps of degree <= n
    // with constant term 1 (anything deeper must vanish mod t^K).
    EpsLaurent qminus = eps_exp(neg);
    if (!(qminus.coeff(0) == TruncSeries(Rational(1), K)))
        throw MathError("weierstrass split: q_- constant term is not 1");
    for (int e = n + 1; e <= qminus.pole_cap(); ++e)
        if (!qminus.coeff(-e).is_zero())
            throw MathError("weierstrass split: q_- has a pole deeper than n");

    WeierstrassData out;
    out.w.reserve(n);
    for (int r = 1; r <= n; ++r) {
        TruncSeries s = qminus.coeff(-r);
        out.w.push_back((r % 2 == 1) ? -s : s);
        if (!out.w.back().constant_term().is_zero())
            throw MathError("weierstrass split: w coefficient not small");
    }

    // q_inv = q_+ = exp(L_{>=0} log f), restricted to eps-degree E
    EpsLaurent pos_l(0, E, K);
    for (int e = 0; e <= std::min(pos.degree(), E); ++e)
        pos_l.set_coeff(e, pos.coeff(e));
    out.q_inv = eps_exp(pos_l).poly_part().with_bound(E);
    return out;
}

WeierstrassData weierstrass_iterative(const EpsPoly& q, int n, int K) {
    check_ready(q, n, K);
    const int E = q.eps_bound();
    const EpsPoly qk = q.truncate_t(K);

    // unknowns: v_0..v_E (q_inv) and W_0..W_{n-1}, the low coefficients of
    // the Weierstrass polynomial; W_s = (-1)^{n-s} w_{n-s}
    std::vector<TruncSeries> v(E + 1, TruncSeries(K));
    std::vector<TruncSeries> W(n, TruncSeries(K));
    for (int j = 0; j <= E; ++j) v[j] = qk.coeff(n + j);

    for (int round = 0; round < K; ++round) {
        // v_j = q_{n+j} + sum_{r=1..n} (-1)^{r-1} w_r v_{j+r},
        // written through W: w_r = (-1)^r W_{n-r}
        std::vector<TruncSeries> nv(E + 1, TruncSeries(K));
        for (int j = 0; j <= E; ++j) {
            TruncSeries acc = qk.coeff(n + j);
            for (int r = 1; r <= n; ++r) {
                if (j + r > E) break;
                acc -= W[n - r] * v[j + r];
            }
            nv[j] = acc;
        }
        v = std::move(nv);

        // triangular solve: q_s = sum_{r=0..s} W_r v_{s-r}, s = 0..n-1
        TruncSeries v0inv = series_inv(v[0]);
        for (int s = 0; s < n; ++s) {
            TruncSeries acc = qk.coeff(s);
            for (int r = 0; r < s; ++r) acc -= W[r] * v[s - r];
            W[s] = acc * v0inv;
        }
    }

    WeierstrassData out;
    out.w.reserve(n);
    for (int r = 1; r <= n; ++r) {
        // W_{n-r} = (-1)^r w_r  =>  w_r = (-1)^r W_{n-r}
        out.w.push_back((r % 2 == 0) ? W[n - r] : -W[n - r]);
        if (!out.w.back().constant_term().is_zero())
            throw MathError("weierstrass iterative: w coefficient not small");
    }
    out.q_inv = EpsPoly(std::move(v), E);
    return out;
}

} // namespace pdet
