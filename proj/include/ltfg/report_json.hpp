#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ltfg/copolygon.hpp"
#include "ltfg/lubin_tate.hpp"
#include "ltfg/torsion.hpp"

namespace ltfg {

using Json = nlohmann::ordered_json;

// Rationals are always written "num/den", integers included.
Json to_json(const TermViolation& v);
Json to_json(const std::optional<TermViolation>& v);
Json to_json(const std::vector<TermViolation>& vs);

// Exactly {"xi1", "xi2", "eta"}.
Json to_json(const Vertex& v);
Json to_json(const TieLocus& l);
Json to_json(const Point& pt);

// {p, h1, h2, n, v_xi, v_eta, method, hypothesis_status}
Json torsion_json(int p, HeightPair heights, const ValuationProfile& profile, const std::string& method);
Json to_json(const PTorsionReport& r, std::size_t enumerate_limit = 8);
Json to_json(const RamificationReport& r);

// Header p,h1,h2,claim,degree,totally_ramified,witness1,witness2,diagnostic.
std::string ramification_csv(const std::vector<RamificationReport>& rows);

// A JSON header line {p, h1, h2, D, N} followed by the sections
// logarithm.0/1, exponential.0/1 and group_law.0/1.
void write_group(std::ostream& os, const LubinTateGroup& group);
LubinTateGroup read_group(const std::string& text);

}  // namespace ltfg
