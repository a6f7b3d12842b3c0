#ifndef PDET_VERIFY_HPP
#define PDET_VERIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pdet/cache.hpp"
#include "pdet/diff_operator.hpp"
#include "pdet/trunc_series.hpp"

namespace pdet {

struct CongruenceReport {
    long long p = 0;
    int compared_order = 0; // K' = min(K, ceil(p/2))
    enum class CoeffStatus { match, mismatch, denominator_blocked, bonus_match, bonus_mismatch };
    std::vector<CoeffStatus> coeff_status; // per t-degree, detp-side length
    bool pass = false;
    bool skipped = false;
    bool informational = false; // p = 2 forced runs are reported, never gate
    std::string skip_reason;
    double elapsed_seconds = 0;

    std::string to_json() const;
};

struct VerifyOptions {
    bool force_p2 = false; // run p = 2 informationally
    std::optional<std::string> cache_dir;
};

/// Per prime: detp(D, p) against c(0) * (ldet of the canonical part mod p),
/// compared through t^{K'-1}. Matching coefficients beyond K' are counted
/// as bonus matches. Primes are processed concurrently, output sorted.
std::vector<CongruenceReport> verify_congruence(const DiffOperator& op,
                                                std::vector<long long> primes, int K,
                                                const VerifyOptions& opts = {});

// conjectured denominator valuations of the h-series coefficients
long long alpha2_formula(int n);
long long alpha_p_formula(long long p, int n);

struct DenominatorProfile {
    struct Entry {
        int index = 0;
        int sign = 0;
        int conjectured_sign = 0;        // 0 when not conjectured (n < 6)
        std::map<long long, long long> actual;      // p -> ord_p(denominator)
        std::map<long long, long long> conjectured; // p <= n
        mpz_class leftover;  // denominator part coprime to all p <= n (1 if conjecture holds)
        mpz_class residual;  // b_n = |numerator|
        bool residual_coprime = true;
        bool exception_flagged = false; // alpha_3(n), n in {6,7,8}
        bool conjecture_holds = false;
    };
    std::vector<Entry> entries;

    bool all_hold_with_exceptions() const;
    std::string to_json() const;
};

/// Factors each denominator of series (from index start on) and compares
/// with the conjectured alpha_p(n) and sign pattern; the documented
/// alpha_3 exceptions at n = 6, 7, 8 are flagged, not failed.
DenominatorProfile denominator_profile(const TruncSeries& series, int start);

/// ldet through the cache when one is configured.
TruncSeries cached_ldet(const DiffOperator& op, int K,
                        const std::optional<std::string>& cache_dir);

} // namespace pdet

#endif
