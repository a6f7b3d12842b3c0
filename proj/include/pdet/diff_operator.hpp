#ifndef PDET_DIFF_OPERATOR_HPP
#define PDET_DIFF_OPERATOR_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "pdet/eps_poly.hpp"
#include "pdet/rational_function.hpp"

namespace pdet {

/// Operator (x d/dx - l_1) ... (x d/dx - l_n) + sum t_{i,k} x^i (d/dx)^k,
/// with the parameters t_{i,k} specialized to rational functions of t.
/// Entries with i <= k must vanish at t = 0 (the smallness constraint).
/// An optional prefactor c(t) with c(0) != 0 scales the whole operator;
/// the banded matrix and everything derived from it describe the
/// canonical part only, while detp accounts for the prefactor.
class DiffOperator {
public:
    DiffOperator(int n, std::vector<long> l, int m,
                 std::map<std::pair<long, int>, RationalFunction> coeffs,
                 RationalFunction prefactor = RationalFunction::one());

    int order() const { return n_; }
    const std::vector<long>& exponents() const { return l_; }
    int max_pert_degree() const { return m_; }
    const std::map<std::pair<long, int>, RationalFunction>& coeffs() const { return coeffs_; }
    const RationalFunction& prefactor() const { return prefactor_; }

    long max_abs_exponent() const;
    /// Nonzero entries live at column - row <= upper_bandwidth() and
    /// row - column <= lower_bandwidth().
    int upper_bandwidth() const { return upper_bw_; }
    int lower_bandwidth() const { return lower_bw_; }
    bool has_diagonal_perturbation() const { return has_diag_; }

    /// Same operator with the prefactor multiplied by extra.
    DiffOperator with_prefactor(const RationalFunction& extra) const;

    /// Canonical JSON serialization; the byte string is the cache identity.
    std::string canonical_json() const;

    /// b_{ij}(eps) truncated to (E, K). Zero when j - i > m. Memoized.
    EpsPoly matrix_entry(long i, long j, int E, int K) const;

    /// The unperturbed diagonal prod_k (i + eps - l_k).
    EpsPoly diagonal_symbol(long i, int E, int K) const;

private:
    void validate() const;

    int n_;
    std::vector<long> l_;
    int m_;
    std::map<std::pair<long, int>, RationalFunction> coeffs_;
    RationalFunction prefactor_;
    int upper_bw_ = 0, lower_bw_ = 0;
    bool has_diag_ = false;

    struct MemoKey {
        long i, j;
        int e, k;
        auto operator<=>(const MemoKey&) const = default;
    };
    // copies of an operator share the entry memo (the value is immutable)
    struct Memo {
        std::mutex mutex;
        std::map<MemoKey, EpsPoly> entries;
    };
    std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

DiffOperator parse_operator(const std::string& json_text);
DiffOperator parse_operator_file(const std::string& path);

} // namespace pdet

#endif
