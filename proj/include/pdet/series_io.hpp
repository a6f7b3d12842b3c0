#ifndef PDET_SERIES_IO_HPP
#define PDET_SERIES_IO_HPP

#include <string>

#include "pdet/laurent_series.hpp"
#include "pdet/trunc_series.hpp"

namespace pdet {

// Text format, one exact rational "a/b" per line, preceded by a header:
//
//   order K            |   valuation v
//   c0                 |   order K
//   ...                |   coefficients of t^v .. t^{K-1}
//
// Lines starting with '#' are comments and are skipped on parse.
// Round-trips are bit-exact.

std::string series_to_text(const TruncSeries& s);
std::string series_to_text(const LaurentSeries& s);

TruncSeries parse_trunc_series(const std::string& text);
LaurentSeries parse_laurent_series(const std::string& text);

} // namespace pdet

#endif
