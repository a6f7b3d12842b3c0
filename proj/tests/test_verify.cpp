#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "pdet/diff_operator.hpp"
#include "pdet/monodromy.hpp"
#include "pdet/regdet.hpp"
#include "pdet/verify.hpp"
#include "test_util.hpp"

using namespace pdet;
using pdet_test::data_file;

namespace {

DiffOperator intro() {
    return parse_operator_file(data_file("operators/d0.json"))
        .with_prefactor(parse_rational_function("-(1+t)"));
}

DiffOperator d1() {
    return parse_operator_file(data_file("operators/d1neg.json"))
        .with_prefactor(RationalFunction(Rational(-1)));
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("pdet_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

} // namespace

TEST_CASE("verify_congruence: intro operator passes for 5, 7, 11, 13 at K=7") {
    auto reports = verify_congruence(intro(), {5, 7, 11, 13}, 7);
    REQUIRE(reports.size() == 4);
    for (const auto& r : reports) {
        CAPTURE(r.p);
        CHECK(!r.skipped);
        CHECK(r.pass);
        CHECK(r.compared_order == std::min<long long>(7, (r.p + 1) / 2));
    }
}

TEST_CASE("verify_congruence: unperturbed operator passes with both sides zero") {
    DiffOperator op = parse_operator_file(data_file("operators/unperturbed.json"));
    auto reports = verify_congruence(op, {3, 5, 7}, 4);
    for (const auto& r : reports) {
        CHECK(r.pass);
        for (auto s : r.coeff_status)
            CHECK(s != CongruenceReport::CoeffStatus::mismatch);
    }
}

TEST_CASE("verify_congruence: D1 passes for 11 and 13 at K=6") {
    auto reports = verify_congruence(d1(), {11, 13}, 6);
    for (const auto& r : reports) {
        CAPTURE(r.p);
        CHECK(r.pass);
    }
    // and the ldet side is literally -(lambda_elliptic - 1)^2
    TruncSeries l = ldet(parse_operator_file(data_file("operators/d1neg.json")), 6);
    TruncSeries lam = lambda_elliptic(6);
    TruncSeries diff = lam - TruncSeries(Rational(1), 6);
    CHECK(-l == diff * diff);
}

TEST_CASE("verify_congruence: p=2 excluded by default, informational when forced") {
    DiffOperator op = parse_operator_file(data_file("operators/unperturbed.json"));
    auto reports = verify_congruence(op, {2, 5}, 3);
    CHECK(reports[0].p == 2);
    CHECK(reports[0].skipped);
    CHECK(reports[0].skip_reason.find("p = 2") != std::string::npos);

    VerifyOptions opts;
    opts.force_p2 = true;
    auto forced = verify_congruence(op, {2}, 3, opts);
    CHECK(!forced[0].skipped);
    CHECK(forced[0].informational);
}

TEST_CASE("verify_congruence: inadmissible primes are skipped with reasons") {
    auto reports = verify_congruence(d1(), {4, 3}, 3);
    CHECK(reports[0].p == 3);
    CHECK(!reports[0].skipped); // 3 is fine for D1
    CHECK(reports[1].p == 4);
    CHECK(reports[1].skipped);
    CHECK(reports[1].skip_reason == "not prime");

    // a prime dividing a coefficient denominator at t=0
    auto rep2 = verify_congruence(d1(), {2}, 3, VerifyOptions{.force_p2 = true});
    CHECK(rep2[0].skipped);
    CHECK(rep2[0].skip_reason.find("den(0)") != std::string::npos);
}

TEST_CASE("cross-pipeline equality: -ldet(D0) = lambda_heun^2 exactly") {
    const int K = 6;
    TruncSeries l = ldet(parse_operator_file(data_file("operators/d0.json")), K);
    CHECK(-l == h_series(K));
}

TEST_CASE("denominator profile: conjectured formulas at n = 20") {
    CHECK(alpha2_formula(20) == 37); // ord_2(2^19 20!) = 19 + 18
    CHECK(alpha_p_formula(7, 20) == 14);
    CHECK(alpha_p_formula(3, 20) == 24);
    CHECK(alpha_p_formula(5, 20) == 16);
    CHECK(alpha_p_formula(11, 20) == 10);
    CHECK(alpha_p_formula(13, 20) == 8);
    CHECK(alpha_p_formula(17, 20) == 4);
    CHECK(alpha_p_formula(19, 20) == 2);
}

TEST_CASE("denominator profile of h through t^12: conjecture holds, alpha_3 exceptions flagged") {
    TruncSeries h = h_series(13);
    DenominatorProfile prof = denominator_profile(h, 2);
    CHECK(prof.all_hold_with_exceptions());
    for (const auto& e : prof.entries) {
        CAPTURE(e.index);
        if (e.index == 6 || e.index == 7 || e.index == 8) {
            CHECK(e.exception_flagged);
            CHECK(!e.conjecture_holds);
            CHECK(e.actual.at(3) != e.conjectured.at(3));
        } else {
            CHECK(e.conjecture_holds);
        }
        if (e.index >= 6) CHECK(e.sign == (e.index % 2 == 0 ? 1 : -1));
        CHECK(e.leftover == 1);
        CHECK(e.residual_coprime);
    }
}

TEST_CASE("cache round-trips and is consulted before recomputation") {
    TempDir tmp;
    CoefficientCache cache(tmp.path.string());
    TruncSeries s(std::vector<Rational>{Rational(1, 3), Rational(-7, 2), Rational(0)});
    CoefficientCache::Key key{"abc123", "ldet", 3};
    CHECK(!cache.load(key).has_value());
    cache.store(key, s);
    auto back = cache.load(key);
    REQUIRE(back.has_value());
    CHECK(*back == s);
    // no temporary litter
    for (const auto& e : std::filesystem::directory_iterator(tmp.path))
        CHECK(e.path().string().find(".tmp.") == std::string::npos);
    // wrong key fields miss
    CHECK(!cache.load({"abc123", "ldet", 4}).has_value());
    CHECK(!cache.load({"abc124", "ldet", 3}).has_value());

    // cached_ldet consults the cache: a poisoned entry comes back verbatim,
    // proving hits never recompute
    DiffOperator op = parse_operator_file(data_file("operators/unperturbed.json"));
    CoefficientCache::Key op_key{fnv1a64_hex(op.canonical_json()), "ldet", 3};
    TruncSeries poison(std::vector<Rational>{Rational(9), Rational(9), Rational(9)});
    cache.store(op_key, poison);
    CHECK(cached_ldet(op, 3, tmp.path.string()) == poison);
    // and a cold cache computes then stores
    TempDir tmp2;
    TruncSeries fresh = cached_ldet(op, 3, tmp2.path.string());
    CHECK(fresh.is_zero());
    CoefficientCache cache2(tmp2.path.string());
    CHECK(cache2.load(op_key).has_value());
}

TEST_CASE("congruence report JSON is well formed") {
    auto reports = verify_congruence(intro(), {5}, 3);
    std::string j = reports[0].to_json();
    CHECK(j.find("\"p\":5") != std::string::npos);
    CHECK(j.find("\"pass\":true") != std::string::npos);
    CHECK(j.find("match") != std::string::npos);
}
