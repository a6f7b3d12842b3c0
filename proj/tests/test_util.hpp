#ifndef PDET_TESTS_UTIL_HPP
#define PDET_TESTS_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "pdet/rational.hpp"
#include "pdet/trunc_series.hpp"

namespace pdet_test {

inline std::string data_file(const std::string& rel) {
    return std::string(PDET_DATA_DIR) + "/" + rel;
}

// deterministic small rationals for property tests
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) {
        return std::uniform_int_distribution<long>(lo, hi)(gen_);
    }

    pdet::Rational rational(long max_abs = 9, long max_den = 5) {
        return pdet::Rational(integer(-max_abs, max_abs), integer(1, max_den));
    }

    pdet::TruncSeries series(int order, bool zero_constant = false) {
        std::vector<pdet::Rational> c(order);
        for (int i = 0; i < order; ++i) c[i] = rational();
        if (zero_constant) c[0] = pdet::Rational();
        return pdet::TruncSeries(std::move(c));
    }

    pdet::TruncSeries unit_series(int order) {
        auto s = series(order);
        std::vector<pdet::Rational> c = s.coeffs();
        c[0] = pdet::Rational(integer(0, 1) ? 1 : -1);
        return pdet::TruncSeries(std::move(c));
    }

private:
    std::mt19937_64 gen_;
};

} // namespace pdet_test

#endif
