#include "pdet/diff_operator.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pdet/errors.hpp"

namespace pdet {

DiffOperator::DiffOperator(int n, std::vector<long> l, int m,
                           std::map<std::pair<long, int>, RationalFunction> coeffs,
                           RationalFunction prefactor)
    : n_(n), l_(std::move(l)), m_(m), coeffs_(std::move(coeffs)),
      prefactor_(std::move(prefactor)) {
    validate();
    for (const auto& [key, rf] : coeffs_) {
        auto [i, k] = key;
        upper_bw_ = std::max(upper_bw_, static_cast<int>(k - i));
        lower_bw_ = std::max(lower_bw_, static_cast<int>(i - k));
        if (i == k && !rf.is_zero()) has_diag_ = true;
    }
}

void DiffOperator::validate() const {
    if (n_ < 1) throw InputError("operator order n must be >= 1");
    if (m_ < 0) throw InputError("max perturbation degree m must be >= 0");
    if (static_cast<int>(l_.size()) != n_)
        throw InputError("exponent list length must equal n");
    if (!std::is_sorted(l_.begin(), l_.end()))
        throw InputError("exponent list must be sorted ascending");
    for (const auto& [key, rf] : coeffs_) {
        auto [i, k] = key;
        std::string name = "t_{" + std::to_string(i) + "," + std::to_string(k) + "}";
        if (i < 0) throw InputError(name + ": x-power must be >= 0");
        if (k < 0 || k > m_)
            throw InputError(name + ": derivative order exceeds m (arity)");
        if (!rf.den_invertible_at_origin())
            throw InputError(name + ": denominator not invertible at t=0");
        if (i <= k && !rf.constant_term().is_zero())
            throw InputError(name + ": smallness violation, constant term " +
                             rf.constant_term().str() + " != 0 for i <= k");
    }
    if (!prefactor_.den_invertible_at_origin())
        throw InputError("prefactor: denominator not invertible at t=0");
    if (prefactor_.constant_term().is_zero())
        throw InputError("prefactor must satisfy c(0) != 0");
}

long DiffOperator::max_abs_exponent() const {
    long m = 0;
    for (long v : l_) m = std::max(m, std::labs(v));
    return m;
}

DiffOperator DiffOperator::with_prefactor(const RationalFunction& extra) const {
    return DiffOperator(n_, l_, m_, coeffs_, prefactor_ * extra);
}

namespace {

nlohmann::json poly_to_json(const QPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : p.coeffs()) {
        // canonical form has integer coefficients
        if (c.den() == 1 && c.num().fits_slong_p())
            arr.push_back(c.num().get_si());
        else
            arr.push_back(c.num().get_str());
    }
    return arr;
}

QPoly poly_from_json(const nlohmann::json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + ": polynomial must be an array");
    std::vector<Rational> c;
    for (const auto& e : j) {
        if (e.is_number_integer())
            c.push_back(Rational(static_cast<long>(e.get<long long>())));
        else if (e.is_string())
            c.push_back(Rational::from_string(e.get<std::string>()));
        else
            throw InputError(what + ": polynomial entries must be integers");
    }
    return QPoly(std::move(c));
}

} // namespace

std::string DiffOperator::canonical_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["l"] = l_;
    j["m"] = m_;
    j["prefactor"] = {{"num", poly_to_json(prefactor_.num())},
                      {"den", poly_to_json(prefactor_.den())}};
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& [key, rf] : coeffs_) {
        if (rf.is_zero()) continue;
        coeffs.push_back({{"i", key.first},
                          {"k", key.second},
                          {"num", poly_to_json(rf.num())},
                          {"den", poly_to_json(rf.den())}});
    }
    j["coeffs"] = coeffs;
    return j.dump();
}

DiffOperator parse_operator(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("operator file is not valid JSON: ") + e.what());
    }
    try {
        int n = j.at("n").get<int>();
        std::vector<long> l = j.at("l").get<std::vector<long>>();
        int m = j.at("m").get<int>();
        RationalFunction prefactor = RationalFunction::one();
        if (j.contains("prefactor")) {
            const auto& p = j.at("prefactor");
            prefactor = RationalFunction(poly_from_json(p.at("num"), "prefactor num"),
                                         poly_from_json(p.at("den"), "prefactor den"));
        }
        std::map<std::pair<long, int>, RationalFunction> coeffs;
        for (const auto& e : j.at("coeffs")) {
            long i = e.at("i").get<long>();
            int k = e.at("k").get<int>();
            auto key = std::make_pair(i, k);
            if (coeffs.count(key))
                throw InputError("duplicate coefficient entry t_{" + std::to_string(i) +
                                 "," + std::to_string(k) + "}");
            coeffs.emplace(key, RationalFunction(poly_from_json(e.at("num"), "coeff num"),
                                                 poly_from_json(e.at("den"), "coeff den")));
        }
        return DiffOperator(n, std::move(l), m, std::move(coeffs), std::move(prefactor));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("operator file: ") + e.what());
    }
}

DiffOperator parse_operator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open operator file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_operator(ss.str());
}

EpsPoly DiffOperator::diagonal_symbol(long i, int E, int K) const {
    EpsPoly prod = EpsPoly::constant(Rational(1), E, K);
    for (long lk : l_) {
        std::vector<TruncSeries> lin{TruncSeries(Rational(i - lk), K),
                                     TruncSeries(Rational(1), K)};
        prod *= EpsPoly(std::move(lin), E);
    }
    return prod;
}

EpsPoly DiffOperator::matrix_entry(long i, long j, int E, int K) const {
    {
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto it = memo_->entries.find(MemoKey{i, j, E, K});
        if (it != memo_->entries.end()) return it->second;
    }

    EpsPoly entry(E, K);
    if (j - i <= m_) {
        // falling factorials (j+eps)(j+eps-1)...(j+eps-k+1), built incrementally
        EpsPoly ff = EpsPoly::constant(Rational(1), E, K);
        for (int k = 0; k <= m_; ++k) {
            if (k > 0) {
                std::vector<TruncSeries> lin{TruncSeries(Rational(j - k + 1), K),
                                             TruncSeries(Rational(1), K)};
                ff *= EpsPoly(std::move(lin), E);
            }
            auto it = coeffs_.find({k + i - j, k});
            if (it == coeffs_.end() || (k + i - j) < 0) continue;
            entry += ff.scale(it->second.expand(K));
        }
        if (i == j) entry += diagonal_symbol(i, E, K);
    }

    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->entries.emplace(MemoKey{i, j, E, K}, entry);
    return entry;
}

} // namespace pdet
