#include "pdet/window_det.hpp"

#include <algorithm>
#include <set>

#include "pdet/errors.hpp"

namespace pdet {

namespace {

// Determinant of a banded matrix with lower bandwidth <= 1 by the
// Hessenberg minor recurrence: with d_r the leading principal r x r minor,
//   d_r = sum_{j} (-1)^{r-j} H[j][r] (prod_{i=j..r-1} H[i+1][i]) d_{j-1},
// only j >= r - upper_bandwidth contribute. No divisions, so eps- and
// t-truncation are harmless (products only raise degrees).
EpsPoly hessenberg_det(const DiffOperator& op, long a, long b, int E, int K) {
    const long s = b - a + 1;
    const int ubw = op.upper_bandwidth();
    std::vector<EpsPoly> minors; // minors[r] = d_r, r = 0..s
    minors.reserve(s + 1);
    minors.push_back(EpsPoly::constant(Rational(1), E, K));
    for (long r = 1; r <= s; ++r) {
        EpsPoly acc(E, K);
        EpsPoly subprod = EpsPoly::constant(Rational(1), E, K);
        for (long j = r; j >= std::max<long>(1, r - ubw); --j) {
            // subprod = prod of subdiagonal entries H[i+1][i], i = j..r-1
            EpsPoly hj = op.matrix_entry(a + j - 1, a + r - 1, E, K);
            if (!hj.is_zero()) {
                EpsPoly term = hj * subprod * minors[j - 1];
                if ((r - j) % 2 == 1) term = -term;
                acc += term;
            }
            if (j > 1) {
                EpsPoly sub = op.matrix_entry(a + j - 1, a + j - 2, E, K);
                if (sub.is_zero()) break; // chain broken: lower terms vanish
                subprod *= sub;
            }
        }
        minors.push_back(acc);
    }
    return minors[s];
}

} // namespace

EpsPoly berkowitz_det(const std::vector<std::vector<EpsPoly>>& mat, int E, int K) {
    const size_t n = mat.size();
    const EpsPoly one = EpsPoly::constant(Rational(1), E, K);
    if (n == 0) return one;
    for (const auto& row : mat)
        if (row.size() != n) throw InputError("Berkowitz needs a square matrix");

    // V holds the characteristic polynomial of the leading r x r block,
    // coefficients from the leading lambda power down.
    std::vector<EpsPoly> V{one, -mat[0][0]};
    for (size_t r = 2; r <= n; ++r) {
        // Toeplitz column: 1, -d, -RC, -RMC, ..., -R M^{r-2} C with
        // M the (r-1)x(r-1) block, R the row, C the column, d the corner.
        std::vector<EpsPoly> col;
        col.push_back(one);
        col.push_back(-mat[r - 1][r - 1]);
        std::vector<EpsPoly> w(r - 1, EpsPoly(E, K)); // M^i C
        for (size_t i = 0; i < r - 1; ++i) w[i] = mat[i][r - 1];
        for (size_t step = 0; step + 1 < r; ++step) {
            EpsPoly rc(E, K);
            for (size_t i = 0; i < r - 1; ++i) rc += mat[r - 1][i] * w[i];
            col.push_back(-rc);
            if (step + 2 < r) {
                std::vector<EpsPoly> w2(r - 1, EpsPoly(E, K));
                for (size_t i = 0; i < r - 1; ++i)
                    for (size_t l = 0; l < r - 1; ++l)
                        w2[i] += mat[i][l] * w[l];
                w = std::move(w2);
            }
        }
        std::vector<EpsPoly> nv(r + 1, EpsPoly(E, K));
        for (size_t i = 0; i < V.size(); ++i)
            for (size_t j = 0; j < col.size() && i + j <= r; ++j)
                nv[i + j] += V[i] * col[j];
        V = std::move(nv);
    }
    // char(0) = det(-A) = (-1)^n det A
    EpsPoly det = V.back();
    if (n % 2 == 1) det = -det;
    return det;
}

WindowDet window_det_elimination(const DiffOperator& op, long a, long b, int E, int K) {
    if (a > b) throw InputError("window_det needs a <= b");
    const long s = b - a + 1;
    std::set<long> core(op.exponents().begin(), op.exponents().end());

    std::vector<std::vector<EpsPoly>> m(s, std::vector<EpsPoly>(s, EpsPoly(E, K)));
    for (long i = 0; i < s; ++i)
        for (long j = 0; j < s; ++j)
            m[i][j] = op.matrix_entry(a + i, a + j, E, K);

    EpsPoly det = EpsPoly::constant(Rational(1), E, K);
    std::vector<bool> done(s, false);
    for (long r = 0; r < s; ++r) {
        if (core.count(a + r)) continue; // core rows stay for the Berkowitz phase
        const EpsPoly& pivot = m[r][r];
        if (pivot.coeff(0).constant_term().is_zero())
            throw MathError("unit-row pivot is not a unit; smallness constraint violated");
        EpsPoly inv = pivot.inverse();
        for (long i = 0; i < s; ++i) {
            if (i == r || done[i]) continue;
            if (m[i][r].is_zero()) continue;
            EpsPoly mult = m[i][r] * inv;
            for (long j = 0; j < s; ++j) {
                if (j == r || done[j] || m[r][j].is_zero()) continue;
                m[i][j] -= mult * m[r][j];
            }
            m[i][r] = EpsPoly(E, K);
        }
        det *= pivot;
        done[r] = true;
    }

    std::vector<long> core_rows;
    for (long r = 0; r < s; ++r)
        if (!done[r]) core_rows.push_back(r);
    if (!core_rows.empty()) {
        std::vector<std::vector<EpsPoly>> cm(core_rows.size(),
                                             std::vector<EpsPoly>(core_rows.size(), EpsPoly(E, K)));
        for (size_t i = 0; i < core_rows.size(); ++i)
            for (size_t j = 0; j < core_rows.size(); ++j)
                cm[i][j] = m[core_rows[i]][core_rows[j]];
        det *= berkowitz_det(cm, E, K);
    }
    return WindowDet{a, b, det};
}

WindowDet window_det(const DiffOperator& op, long a, long b, int E, int K) {
    if (a > b) throw InputError("window_det needs a <= b");
    if (op.lower_bandwidth() <= 1)
        return WindowDet{a, b, hessenberg_det(op, a, b, E, K)};
    return window_det_elimination(op, a, b, E, K);
}

} // namespace pdet
