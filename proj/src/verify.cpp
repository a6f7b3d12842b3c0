#include "pdet/verify.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include <json.hpp>

#include "pdet/detp.hpp"
#include "pdet/errors.hpp"
#include "pdet/regdet.hpp"

namespace pdet {

namespace {

const char* status_name(CongruenceReport::CoeffStatus s) {
    switch (s) {
        case CongruenceReport::CoeffStatus::match: return "match";
        case CongruenceReport::CoeffStatus::mismatch: return "mismatch";
        case CongruenceReport::CoeffStatus::denominator_blocked: return "denominator-blocked";
        case CongruenceReport::CoeffStatus::bonus_match: return "bonus-match";
        case CongruenceReport::CoeffStatus::bonus_mismatch: return "bonus-unmatched";
    }
    return "?";
}

std::string admissibility_problem(const DiffOperator& op, long long p) {
    if (!is_prime(p)) return "not prime";
    for (const auto& [key, rf] : op.coeffs()) {
        if (rf.is_zero()) continue;
        mpz_class d0 = rf.den().coeff(0).num(); // canonical: integer coefficients
        if (mpz_divisible_ui_p(d0.get_mpz_t(), p))
            return "p divides den(0) of t_{" + std::to_string(key.first) + "," +
                   std::to_string(key.second) + "}";
    }
    mpz_class pd = op.prefactor().den().coeff(0).num();
    if (mpz_divisible_ui_p(pd.get_mpz_t(), p)) return "p divides the prefactor den(0)";
    return "";
}

CongruenceReport check_one_prime(const DiffOperator& op, long long p, int K,
                                 const TruncSeries& lseries) {
    auto t0 = std::chrono::steady_clock::now();
    CongruenceReport rep;
    rep.p = p;
    rep.compared_order = static_cast<int>(std::min<long long>(K, (p + 1) / 2));

    FpPoly lhs = detp(op, p);
    PrimeFieldElem c0 = PrimeFieldElem::from_rational(op.prefactor().constant_term(), p);

    bool ok = true;
    for (long long i = 0; i < p; ++i) {
        bool within = i < rep.compared_order;
        PrimeFieldElem want = lhs.coeff(static_cast<int>(i));
        if (i >= lseries.order()) break;
        const Rational& c = lseries.coeff(static_cast<int>(i));
        if (mpz_divisible_ui_p(c.den().get_mpz_t(), p)) {
            rep.coeff_status.push_back(CongruenceReport::CoeffStatus::denominator_blocked);
            if (within) ok = false; // a Theorem-3 falsifier inside the proven range
            continue;
        }
        PrimeFieldElem got = PrimeFieldElem::from_rational(c, p) * c0;
        bool eq = got == want;
        if (within) {
            rep.coeff_status.push_back(eq ? CongruenceReport::CoeffStatus::match
                                          : CongruenceReport::CoeffStatus::mismatch);
            ok = ok && eq;
        } else {
            rep.coeff_status.push_back(eq ? CongruenceReport::CoeffStatus::bonus_match
                                          : CongruenceReport::CoeffStatus::bonus_mismatch);
        }
    }
    rep.pass = ok;
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace

std::string CongruenceReport::to_json() const {
    nlohmann::json j;
    j["p"] = p;
    j["compared_order"] = compared_order;
    j["pass"] = pass;
    j["skipped"] = skipped;
    j["informational"] = informational;
    if (skipped) j["skip_reason"] = skip_reason;
    nlohmann::json st = nlohmann::json::array();
    for (auto s : coeff_status) st.push_back(status_name(s));
    j["coefficients"] = st;
    return j.dump();
}

TruncSeries cached_ldet(const DiffOperator& op, int K,
                        const std::optional<std::string>& cache_dir) {
    if (!cache_dir) return ldet(op, K);
    CoefficientCache cache(*cache_dir);
    CoefficientCache::Key key{fnv1a64_hex(op.canonical_json()), "ldet", K};
    if (auto hit = cache.load(key)) return *hit;
    TruncSeries s = ldet(op, K);
    cache.store(key, s);
    return s;
}

std::vector<CongruenceReport> verify_congruence(const DiffOperator& op,
                                                std::vector<long long> primes, int K,
                                                const VerifyOptions& opts) {
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    TruncSeries lseries = cached_ldet(op, K, opts.cache_dir);

    std::vector<CongruenceReport> reports(primes.size());
    std::vector<std::future<void>> tasks;
    for (size_t idx = 0; idx < primes.size(); ++idx) {
        long long p = primes[idx];
        CongruenceReport* slot = &reports[idx];
        tasks.push_back(std::async(std::launch::async, [&op, p, K, &lseries, &opts, slot] {
            if (p == 2 && !opts.force_p2) {
                slot->p = p;
                slot->skipped = true;
                slot->skip_reason = "p = 2 excluded by default (needs p > 2)";
                return;
            }
            std::string problem = admissibility_problem(op, p);
            if (!problem.empty()) {
                slot->p = p;
                slot->skipped = true;
                slot->skip_reason = problem;
                return;
            }
            try {
                *slot = check_one_prime(op, p, K, lseries);
            } catch (const InputError& err) {
                slot->p = p;
                slot->skipped = true;
                slot->skip_reason = err.what();
                return;
            }
            if (p == 2) slot->informational = true;
        }));
    }
    for (auto& t : tasks) t.get();
    return reports;
}

long long alpha2_formula(int n) {
    // ord_2(2^{n-1} n!)
    long long v = n - 1;
    for (long long q = 2; q <= n; q *= 2) v += n / q;
    return v;
}

long long alpha_p_formula(long long p, int n) {
    // max_{k>=1} k(n+1-p^k); terms with p^k > n+1 are negative and the
    // k=1 term is >= 0 for p <= n, so only p^k <= n+1 matters
    long long best = 0, pk = p;
    for (long long k = 1; pk <= n + 1; ++k) {
        best = std::max(best, k * (n + 1 - pk));
        pk *= p;
    }
    return best;
}

bool DenominatorProfile::all_hold_with_exceptions() const {
    for (const auto& e : entries)
        if (!e.conjecture_holds && !e.exception_flagged) return false;
    return true;
}

std::string DenominatorProfile::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json j;
        j["n"] = e.index;
        j["sign"] = e.sign;
        if (e.conjectured_sign != 0) j["conjectured_sign"] = e.conjectured_sign;
        nlohmann::json act = nlohmann::json::object(), con = nlohmann::json::object();
        for (const auto& [p, v] : e.actual) act[std::to_string(p)] = v;
        for (const auto& [p, v] : e.conjectured) con[std::to_string(p)] = v;
        j["actual"] = act;
        j["conjectured"] = con;
        j["leftover"] = e.leftover.get_str();
        j["residual"] = e.residual.get_str();
        j["residual_coprime"] = e.residual_coprime;
        j["exception_flagged"] = e.exception_flagged;
        j["conjecture_holds"] = e.conjecture_holds;
        arr.push_back(j);
    }
    return arr.dump();
}

DenominatorProfile denominator_profile(const TruncSeries& series, int start) {
    DenominatorProfile prof;
    for (int n = start; n < series.order(); ++n) {
        const Rational& c = series.coeff(n);
        DenominatorProfile::Entry e;
        e.index = n;
        e.sign = c.sign();
        e.conjectured_sign = (n >= 6) ? (n % 2 == 0 ? 1 : -1) : 0;
        e.residual = abs(c.num());

        mpz_class den = c.den();
        std::vector<long long> mismatched_primes;
        for (long long p = 2; p <= n; ++p) {
            if (!is_prime(p)) continue;
            long long v = 0;
            while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
                mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
                ++v;
            }
            e.actual[p] = v;
            long long want = (p == 2) ? alpha2_formula(n) : alpha_p_formula(p, n);
            e.conjectured[p] = want;
            if (v != want) mismatched_primes.push_back(p);
            if (mpz_divisible_ui_p(e.residual.get_mpz_t(), p)) e.residual_coprime = false;
        }
        e.leftover = den; // anything here is a denominator prime > n
        bool sign_ok = (e.conjectured_sign == 0) || (e.sign == e.conjectured_sign);
        bool rest_ok = e.leftover == 1 && e.residual_coprime && sign_ok;
        e.conjecture_holds = mismatched_primes.empty() && rest_ok;
        // the paper documents alpha_3 deviations at exactly n = 6, 7, 8
        e.exception_flagged = !e.conjecture_holds && rest_ok &&
                              (n == 6 || n == 7 || n == 8) &&
                              mismatched_primes == std::vector<long long>{3};
        prof.entries.push_back(std::move(e));
    }
    return prof;
}

} // namespace pdet
