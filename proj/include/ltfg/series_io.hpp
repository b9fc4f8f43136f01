#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ltfg/series.hpp"

namespace ltfg {

// Text form of a series: one term per line,
//   e1 e2 ... ev : valuation unit
// in ascending graded-lexicographic monomial order. The unit is printed as
// its balanced representative modulo p^precision.
void write_series(std::ostream& os, const Series& s);
std::string to_text(const Series& s);

// Parses term lines into a series with the given shape; blank lines and
// lines starting with '#' are skipped. Units are read at `precision`.
Series parse_series(std::string_view text, int prime, int nvars, int degree_cap, int precision = kDefaultPrecision);

// Named sections: a "[name]" line followed by that series' term lines.
// Used for pairs ("[0]", "[1]") and whole groups.
using NamedSeries = std::vector<std::pair<std::string, const Series*>>;
void write_sections(std::ostream& os, const NamedSeries& sections);
std::map<std::string, std::string> split_sections(std::string_view text);

void write_pair(std::ostream& os, const SeriesPair& pair);
SeriesPair parse_pair(std::string_view text, int prime, int nvars, int degree_cap, int precision = kDefaultPrecision);

}  // namespace ltfg
