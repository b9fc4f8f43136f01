#include "ltfg/series_io.hpp"

#include <ostream>
#include <sstream>

#include "ltfg/error.hpp"

namespace ltfg {

void write_series(std::ostream& os, const Series& s) {
  for (const auto& [m, c] : s.terms()) {
    for (int i = 0; i < s.nvars(); ++i) os << m.exponent(i) << ' ';
    os << ": " << c.valuation() << ' ' << c.balanced_unit().get_str() << '\n';
  }
}

std::string to_text(const Series& s) {
  std::ostringstream os;
  write_series(os, s);
  return os.str();
}

Series parse_series(std::string_view text, int prime, int nvars, int degree_cap, int precision) {
  Series s(prime, nvars, degree_cap, precision);
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::parse_error, "series line " + std::to_string(line_no) + ": missing ':'");
    std::istringstream lhs(line.substr(0, colon));
    std::vector<int> e;
    int x = 0;
    while (lhs >> x) e.push_back(x);
    if (!lhs.eof() || static_cast<int>(e.size()) != nvars)
      throw Error(Errc::parse_error, "series line " + std::to_string(line_no) + ": expected " +
                                         std::to_string(nvars) + " exponents");
    int degree = 0;
    for (int v : e) {
      if (v < 0 || v > kMaxExponent)
        throw Error(Errc::parse_error, "series line " + std::to_string(line_no) + ": exponent out of range");
      degree += v;
    }
    if (degree > degree_cap)
      throw Error(Errc::parse_error, "series line " + std::to_string(line_no) + ": term degree exceeds the cap " +
                                         std::to_string(degree_cap));
    std::istringstream rhs(line.substr(colon + 1));
    int valuation = 0;
    std::string unit;
    if (!(rhs >> valuation >> unit))
      throw Error(Errc::parse_error, "series line " + std::to_string(line_no) + ": expected 'valuation unit'");
    mpz_class u;
    if (u.set_str(unit, 10) != 0) throw Error(Errc::parse_error, "series line " + std::to_string(line_no) + ": bad unit");
    try {
      s.add_term(Monomial(std::span<const int>(e)), PadicScalar::from_parts(prime, valuation, u, precision));
    } catch (const Error& err) {
      throw Error(Errc::parse_error, "series line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return s;
}

void write_sections(std::ostream& os, const NamedSeries& sections) {
  for (const auto& [name, series] : sections) {
    os << '[' << name << "]\n";
    write_series(os, *series);
  }
}

std::map<std::string, std::string> split_sections(std::string_view text) {
  std::map<std::string, std::string> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::string* current = nullptr;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '[') {
      const auto close = line.find(']');
      if (close == std::string::npos) throw Error(Errc::parse_error, "unterminated section header: " + line);
      current = &out[line.substr(1, close - 1)];
      continue;
    }
    if (current != nullptr) *current += line + '\n';
  }
  return out;
}

void write_pair(std::ostream& os, const SeriesPair& pair) {
  write_sections(os, {{"0", &pair.first()}, {"1", &pair.second()}});
}

SeriesPair parse_pair(std::string_view text, int prime, int nvars, int degree_cap, int precision) {
  const auto sections = split_sections(text);
  const auto a = sections.find("0");
  const auto b = sections.find("1");
  if (a == sections.end() || b == sections.end()) throw Error(Errc::parse_error, "pair text needs sections [0] and [1]");
  return {parse_series(a->second, prime, nvars, degree_cap, precision),
          parse_series(b->second, prime, nvars, degree_cap, precision)};
}

}  // namespace ltfg
