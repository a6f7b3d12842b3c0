#include "pdet/series_io.hpp"

#include <sstream>
#include <vector>

#include "pdet/errors.hpp"

namespace pdet {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

long header_value(const std::string& line, const std::string& key) {
    if (line.rfind(key + " ", 0) != 0)
        throw InputError("series header: expected '" + key + " <int>', got '" + line + "'");
    try {
        return std::stol(line.substr(key.size() + 1));
    } catch (const std::exception&) {
        throw InputError("series header: bad integer in '" + line + "'");
    }
}

} // namespace

std::string series_to_text(const TruncSeries& s) {
    std::ostringstream out;
    out << "order " << s.order() << "\n";
    for (int i = 0; i < s.order(); ++i) out << s.coeff(i).frac_str() << "\n";
    return out.str();
}

std::string series_to_text(const LaurentSeries& s) {
    std::ostringstream out;
    out << "valuation " << s.valuation() << "\n";
    out << "order " << s.end() << "\n";
    for (long e = s.valuation(); e < s.end(); ++e)
        out << s.coeff(e).frac_str() << "\n";
    return out.str();
}

TruncSeries parse_trunc_series(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw InputError("empty series text");
    long k = header_value(lines[0], "order");
    if (k < 1) throw InputError("series order must be >= 1");
    if (static_cast<long>(lines.size()) != k + 1)
        throw InputError("series text: expected " + std::to_string(k) +
                         " coefficients, got " + std::to_string(lines.size() - 1));
    std::vector<Rational> c;
    c.reserve(k);
    for (long i = 1; i <= k; ++i) c.push_back(Rational::from_string(lines[i]));
    return TruncSeries(std::move(c));
}

LaurentSeries parse_laurent_series(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.size() < 2) throw InputError("laurent series text needs two header lines");
    long v = header_value(lines[0], "valuation");
    long end = header_value(lines[1], "order");
    if (end < v) throw InputError("laurent series: order precedes valuation");
    if (static_cast<long>(lines.size()) != end - v + 2)
        throw InputError("laurent series text: wrong coefficient count");
    std::vector<Rational> c;
    c.reserve(end - v);
    for (size_t i = 2; i < lines.size(); ++i) c.push_back(Rational::from_string(lines[i]));
    if (c.empty()) return LaurentSeries::zero(end);
    return LaurentSeries(v, std::move(c));
}

} // namespace pdet
