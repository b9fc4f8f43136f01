#include "ltfg/report_json.hpp"

#include <ostream>
#include <sstream>

#include "ltfg/error.hpp"
#include "ltfg/series_io.hpp"

namespace ltfg {

namespace {

Json monomial_json(Monomial m, int nvars) {
  Json out = Json::array();
  for (int i = 0; i < nvars; ++i) out.push_back(m.exponent(i));
  return out;
}

const char* kGroupSections[] = {"logarithm.0", "exponential.0", "group_law.0",
                                "logarithm.1", "exponential.1", "group_law.1"};

}  // namespace

Json to_json(const TermViolation& v) {
  int nvars = 2;
  for (int i = 2; i < kMaxVariables; ++i)
    if (v.monomial.exponent(i) != 0) nvars = i + 1;
  return Json{{"component", v.component},
              {"monomial", monomial_json(v.monomial, nvars)},
              {"check", v.check},
              {"value", v.value.to_string()}};
}

Json to_json(const std::optional<TermViolation>& v) { return v ? to_json(*v) : Json(nullptr); }

Json to_json(const std::vector<TermViolation>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

Json to_json(const Vertex& v) {
  return Json{{"xi1", v.xi1.to_string()}, {"xi2", v.xi2.to_string()}, {"eta", v.eta.to_string()}};
}

Json to_json(const Point& pt) { return Json{{"xi1", pt.first.to_string()}, {"xi2", pt.second.to_string()}}; }

Json to_json(const TieLocus& l) {
  auto bound = [](const std::optional<Rational>& t) { return t ? Json(t->to_string()) : Json(nullptr); };
  return Json{{"pair", {to_string(l.first), to_string(l.second)}},
              {"equation", {{"a", l.a.to_string()}, {"b", l.b.to_string()}, {"rhs", l.rhs.to_string()}}},
              {"kind", l.kind()},
              {"base", to_json(l.base)},
              {"direction", to_json(l.direction)},
              {"t_min", bound(l.t_min)},
              {"t_max", bound(l.t_max)}};
}

Json torsion_json(int p, HeightPair heights, const ValuationProfile& profile, const std::string& method) {
  return Json{{"p", p},
              {"h1", heights.h1},
              {"h2", heights.h2},
              {"n", profile.level},
              {"v_xi", profile.v_xi.to_string()},
              {"v_eta", profile.v_eta.to_string()},
              {"method", method},
              {"hypothesis_status", hypothesis_status(p, heights)}};
}

Json to_json(const PTorsionReport& r, std::size_t enumerate_limit) {
  Json points = Json::array();
  for (const auto& s : r.enumerate(enumerate_limit))
    points.push_back({{"zeta_h_exponent", s.zeta_h_exponent},
                      {"zeta_h2_index", s.zeta_h2_index},
                      {"p_power_xi", s.p_power_xi.to_string()},
                      {"p_power_eta", s.p_power_eta.to_string()},
                      {"valuations_balance", s.valuations_balance},
                      {"cancels_exactly", s.cancels_exactly}});
  return Json{{"p", r.prime},
              {"h1", r.heights.h1},
              {"h2", r.heights.h2},
              {"a", r.a.to_string()},
              {"b", r.b.to_string()},
              {"xi_equation_balanced", r.xi_equation_balanced},
              {"eta_equation_balanced", r.eta_equation_balanced},
              {"minus_one_exponent", r.minus_one_exponent.to_string()},
              {"minus_one_exponent_balances", r.minus_one_exponent_balances},
              {"family_size", r.family_size.get_str()},
              {"exact_members", r.exact_members ? Json(r.exact_members->get_str()) : Json(nullptr)},
              {"total_count", r.total_count.get_str()},
              {"hypothesis_status", hypothesis_status(r.prime, r.heights)},
              {"notes", r.notes},
              {"points", points}};
}

Json to_json(const RamificationReport& r) {
  Json out{{"p", r.prime}, {"h1", r.heights.h1}, {"h2", r.heights.h2}, {"claim", r.claim}};
  if (r.claim) {
    out["degree"] = r.degree.get_str();
    out["totally_ramified"] = r.totally_ramified;
    out["witness_gcd"] = {r.witness_gcd[0].get_str(), r.witness_gcd[1].get_str()};
  }
  out["diagnostic"] = r.diagnostic;
  return out;
}

std::string ramification_csv(const std::vector<RamificationReport>& rows) {
  std::ostringstream out;
  out << "p,h1,h2,claim,degree,totally_ramified,witness1,witness2,diagnostic\n";
  for (const auto& r : rows) {
    out << r.prime << ',' << r.heights.h1 << ',' << r.heights.h2 << ',' << (r.claim ? "true" : "false") << ',';
    if (r.claim)
      out << r.degree.get_str() << ',' << (r.totally_ramified ? "true" : "false") << ',' << r.witness_gcd[0].get_str()
          << ',' << r.witness_gcd[1].get_str();
    else
      out << ",,,";
    out << ",\"" << r.diagnostic << "\"\n";
  }
  return out.str();
}

void write_group(std::ostream& os, const LubinTateGroup& group) {
  const Json header{{"p", group.prime},
                    {"h1", group.heights.h1},
                    {"h2", group.heights.h2},
                    {"D", group.degree},
                    {"N", group.precision}};
  os << header.dump() << '\n';
  write_sections(os, {{"logarithm.0", &group.logarithm.first()},
                      {"logarithm.1", &group.logarithm.second()},
                      {"exponential.0", &group.exponential.first()},
                      {"exponential.1", &group.exponential.second()},
                      {"group_law.0", &group.group_law.first()},
                      {"group_law.1", &group.group_law.second()}});
}

LubinTateGroup read_group(const std::string& text) {
  const auto newline = text.find('\n');
  Json header;
  try {
    header = Json::parse(text.substr(0, newline));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("group header: ") + e.what());
  }
  for (const char* key : {"p", "h1", "h2", "D", "N"})
    if (!header.contains(key) || !header[key].is_number_integer())
      throw Error(Errc::parse_error, std::string("group header lacks integer field \"") + key + "\"");
  const int p = header["p"], d = header["D"], n = header["N"];
  const HeightPair heights = make_heights(header["h1"], header["h2"]);
  const auto sections = split_sections(newline == std::string::npos ? "" : text.substr(newline + 1));
  for (const char* name : kGroupSections)
    if (!sections.contains(name)) throw Error(Errc::parse_error, std::string("group file lacks section [") + name + "]");
  auto series = [&](const std::string& name, int nvars) { return parse_series(sections.at(name), p, nvars, d, n); };
  return LubinTateGroup{p,
                        heights,
                        d,
                        n,
                        {series("logarithm.0", 2), series("logarithm.1", 2)},
                        {series("exponential.0", 2), series("exponential.1", 2)},
                        {series("group_law.0", 4), series("group_law.1", 4)}};
}

}  // namespace ltfg
