// Command-line front end for the ltfg library.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ltfg/copolygon.hpp"
#include "ltfg/error.hpp"
#include "ltfg/fixtures.hpp"
#include "ltfg/lubin_tate.hpp"
#include "ltfg/report_json.hpp"
#include "ltfg/series_io.hpp"
#include "ltfg/svg.hpp"
#include "ltfg/torsion.hpp"
#include "ltfg/unramified.hpp"

namespace {

using namespace ltfg;

constexpr int kExitVerification = 1;
constexpr int kExitConfig = 2;
constexpr int kExitDomain = 3;

struct RunConfig {
  int p = 2;
  int h1 = 2;
  int h2 = 3;
  int degree = 8;
  int precision = kDefaultPrecision;
  int level = 1;
  int assoc_degree = 0;  // 0: same as degree
  int unramified_degree = 0;
  std::string multiplier = "2";
  std::string fixture;
  std::string support;
  std::string method = "closed_form";
  std::string box;
  std::string svg_path;
  std::string json_path;
  std::string out_path;
  std::string csv_path;
};

int default_precision() {
  const char* env = std::getenv("LTFG_PRECISION");
  if (!env || !*env) return kDefaultPrecision;
  char* end = nullptr;
  const long n = std::strtol(env, &end, 10);
  if (*end != '\0' || n < 1 || n > 100000)
    throw Error(Errc::invalid_argument, std::string("LTFG_PRECISION must be a positive integer, got \"") + env + "\"");
  return static_cast<int>(n);
}

HeightPair validate(const RunConfig& c) {
  if (!is_prime(c.p)) throw Error(Errc::invalid_argument, "p must be prime, got " + std::to_string(c.p));
  if (c.degree < 1) throw Error(Errc::invalid_argument, "D must be at least 1");
  if (c.degree > kMaxExponent) throw Error(Errc::invalid_argument, "D must be at most " + std::to_string(kMaxExponent));
  if (c.precision < 1) throw Error(Errc::invalid_argument, "N must be at least 1");
  return make_heights(c.h1, c.h2);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::invalid_argument, "cannot open \"" + path + "\" for writing");
  f << text;
  if (!f) throw Error(Errc::invalid_argument, "failed writing \"" + path + "\"");
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(Errc::invalid_argument, "cannot open \"" + path + "\"");
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Series text goes to --out when given, otherwise to stdout ahead of the report.
void emit(const RunConfig& c, const std::string& series_text, const Json& report) {
  if (!series_text.empty()) {
    if (c.out_path.empty())
      std::cout << series_text;
    else
      write_file(c.out_path, series_text);
  }
  if (c.json_path.empty())
    std::cout << report.dump(2) << '\n';
  else
    write_file(c.json_path, report.dump(2) + "\n");
}

Json base_report(const std::string& command, const RunConfig& c) {
  return Json{{"command", command}, {"p", c.p}, {"h1", c.h1}, {"h2", c.h2}, {"D", c.degree}, {"N", c.precision}};
}

int cmd_log(const RunConfig& c) {
  const HeightPair heights = validate(c);
  const SeriesPair log = build_logarithm(c.p, heights, c.degree, c.precision);
  const auto violations = verify_logarithm_recursion(log, c.p, heights);
  std::ostringstream text;
  write_pair(text, log);
  Json report = base_report("log", c);
  report["recursion"] = violations.empty() ? "pass" : "fail";
  report["violations"] = to_json(violations);
  emit(c, text.str(), report);
  return violations.empty() ? 0 : kExitVerification;
}

int cmd_group(const RunConfig& c) {
  const HeightPair heights = validate(c);
  const LubinTateGroup g = build_group(c.p, heights, c.degree, c.precision);
  std::ostringstream text;
  write_group(text, g);
  Json report = base_report("group", c);
  report["terms"] = {{"logarithm", {g.logarithm.first().size(), g.logarithm.second().size()}},
                     {"exponential", {g.exponential.first().size(), g.exponential.second().size()}},
                     {"group_law", {g.group_law.first().size(), g.group_law.second().size()}}};
  report["integral"] = g.group_law.is_integral();
  emit(c, text.str(), report);
  return 0;
}

int cmd_mult(const RunConfig& c) {
  const HeightPair heights = validate(c);
  mpz_class a;
  if (a.set_str(c.multiplier, 10) != 0)
    throw Error(Errc::invalid_argument, "multiplier must be an integer, got \"" + c.multiplier + "\"");
  const LubinTateGroup g = build_group(c.p, heights, c.degree, c.precision);
  const SeriesPair m = multiplication(PadicScalar::from_integer(c.p, a, c.precision), g);
  std::ostringstream text;
  write_pair(text, m);
  Json report = base_report("mult", c);
  report["a"] = a.get_str();
  report["integrality"] = to_json(check_integrality(m, "integrality"));
  emit(c, text.str(), report);
  return 0;
}

SvgOptions parse_box(const std::string& box) {
  SvgOptions o;
  if (box.empty()) return o;
  std::vector<Rational> v;
  std::stringstream in(box);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(Rational::parse(part));
  if (v.size() != 4) throw Error(Errc::invalid_argument, "--box expects xmin,xmax,ymin,ymax");
  o.xmin = v[0];
  o.xmax = v[1];
  o.ymin = v[2];
  o.ymax = v[3];
  return o;
}

int cmd_copolygon(const RunConfig& c) {
  if (c.fixture.empty() == c.support.empty())
    throw Error(Errc::invalid_argument, "give exactly one of --fixture and --support");
  const std::vector<Copolygon> cs = c.fixture.empty() ? std::vector{parse_support(read_file(c.support)).copolygon}
                                                      : fixtures::copolygon_fixture(c.fixture);
  const SvgOptions box = parse_box(c.box);
  Json report{{"command", "copolygon"}};
  if (!c.fixture.empty()) report["fixture"] = c.fixture;
  Json items = Json::array();
  for (const auto& cp : cs) {
    Json functionals = Json::array();
    for (const auto& f : cp.functionals()) functionals.push_back(to_string(f));
    Json vs = Json::array();
    Json support = Json::array();
    for (const auto& v : vertices(cp)) {
      vs.push_back(to_json(v));
      Json s = Json::array();
      for (const auto& f : v.supporting) s.push_back(to_string(f));
      support.push_back(s);
    }
    Json ties = Json::array();
    for (const auto& l : tie_locus(cp)) ties.push_back(to_json(l));
    items.push_back({{"functionals", functionals}, {"vertices", vs}, {"vertex_support", support}, {"tie_loci", ties}});
  }
  report["copolygons"] = items;
  if (cs.size() == 1) report["vertices"] = items[0]["vertices"];
  if (cs.size() == 2) {
    Json pts = Json::array();
    for (const auto& pt : intersect_tie_loci(cs[0], cs[1])) pts.push_back(to_json(pt));
    report["intersections"] = pts;
  }
  if (!c.svg_path.empty()) write_file(c.svg_path, emit_svg(cs, box));
  emit(c, "", report);
  return 0;
}

int cmd_torsion(const RunConfig& c) {
  const HeightPair heights = validate(c);
  if (c.level < 1) throw Error(Errc::invalid_argument, "-n must be at least 1");
  if (c.method != "closed_form" && c.method != "minplus")
    throw Error(Errc::invalid_argument, "--method must be closed_form or minplus");
  const ValuationProfile closed = torsion_valuations(c.p, heights, c.level);
  const ValuationProfile profile =
      c.method == "minplus" ? torsion_valuations_via_minplus(c.p, heights, c.level) : closed;
  Json report = torsion_json(c.p, heights, profile, c.method);
  if (c.method == "minplus") report["agrees_with_closed_form"] = profile == closed;
  report["count_p_torsion"] = count_p_torsion(c.p, heights).get_str();
  report["p_torsion"] = to_json(p_torsion_points(c.p, heights));
  report["ramification"] = to_json(ramification_report(c.p, heights));
  if (!c.csv_path.empty()) {
    std::vector<RamificationReport> rows;
    for (int p : {3, 5, 7})
      for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b)
          if (std::gcd(a, b) == 1) rows.push_back(ramification_report(p, {a, b}));
    write_file(c.csv_path, ramification_csv(rows));
  }
  emit(c, "", report);
  return 0;
}

int cmd_verify(const RunConfig& c) {
  const HeightPair heights = validate(c);
  const int assoc = c.assoc_degree > 0 ? std::min(c.assoc_degree, c.degree) : c.degree;
  const LubinTateGroup g = build_group(c.p, heights, c.degree, c.precision);
  Json checks = Json::object();
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, Json detail) {
    checks[name] = {{"status", pass ? "pass" : "fail"}, {"detail", std::move(detail)}};
    ok = ok && pass;
  };

  const auto rec = verify_logarithm_recursion(g.logarithm, c.p, heights);
  record("recursion", rec.empty(), to_json(rec));
  for (const auto& [name, v] : {std::pair{"identity", check_identity(g)},
                                std::pair{"commutativity", check_commutativity(g)},
                                std::pair{"associativity", check_associativity(g, assoc)},
                                std::pair{"additivity", check_additivity(g)},
                                std::pair{"integrality", check_integrality(g.group_law, "integrality")}})
    record(name, !v.has_value(), to_json(v));

  if (c.fixture == "appendixB45") {
    if (heights.h1 != 4 || heights.h2 != 5)
      throw Error(Errc::invalid_argument, "the appendixB45 candidate needs --h1 4 --h2 5");
    const SeriesPair candidate = fixtures::appendix_b45(c.p, c.precision);
    const auto v = check_p_congruences(candidate, c.p, heights);
    record("candidate_congruences", v.empty(), to_json(v));
  } else if (!c.fixture.empty()) {
    throw Error(Errc::invalid_argument, "verify accepts only --fixture appendixB45");
  }

  const CongruenceReport cong = verify_p_congruences(g);
  record("congruences", cong.ok(), to_json(cong.violations));

  Json gaps = Json::array();
  bool gaps_ok = true;
  if (c.degree >= 2) {
    for (const auto& [m, n] : {std::pair{2, 1}, std::pair{3, 1}, std::pair{3, 2}}) {
      const auto gap = cauchy_gap(g, m, n);
      const bool pass = !gap || *gap >= n + 1;
      gaps_ok = gaps_ok && pass;
      gaps.push_back({{"m", m}, {"n", n}, {"gap", gap ? Json(*gap) : Json("inf")}, {"bound", n + 1}});
    }
  }
  record("cauchy_gaps", gaps_ok, gaps);

  if (c.unramified_degree > 0) {
    const auto ring = UnramifiedRing::create(c.p, c.unramified_degree, c.precision);
    const auto gen = residue::multiplicative_generator(ring->modulus(), c.p);
    const GammaEndomorphism ge = gamma_endomorphism(teichmuller(*ring, gen), g);
    record("gamma_endomorphism", ge.verified,
           Json{{"checked_terms", ge.checked_terms}, {"gamma", ge.gamma1.to_string()}, {"mismatch", ge.mismatch}});
  }

  Json report = base_report("verify", c);
  report["D_assoc"] = assoc;
  const HeightResult height = height_of(g);
  report["height"] = height.height ? Json(*height.height) : Json(nullptr);
  report["height_diagnostic"] = height.diagnostic;
  report["checks"] = checks;
  report["result"] = ok ? "pass" : "fail";
  emit(c, "", report);
  return ok ? 0 : kExitVerification;
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::invalid_argument:
    case Errc::parse_error:
      return kExitConfig;
    default:
      return kExitDomain;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-dimensional Lubin-Tate formal groups over Z_p"};
  app.require_subcommand(1);
  RunConfig cfg;
  try {
    cfg.precision = default_precision();
  } catch (const Error& e) {
    std::cerr << "error " << code_name(e.code()) << ": " << e.what() << '\n';
    return kExitConfig;
  }

  auto group_flags = [&](CLI::App* sub) {
    sub->add_option("-p", cfg.p, "prime");
    sub->add_option("--h1", cfg.h1, "first height");
    sub->add_option("--h2", cfg.h2, "second height");
    sub->add_option("-D", cfg.degree, "truncation degree");
    sub->add_option("-N", cfg.precision, "p-adic precision (default from LTFG_PRECISION)");
    sub->add_option("--json", cfg.json_path, "write the JSON report here instead of stdout");
  };

  auto* log = app.add_subcommand("log", "logarithm and its recursion check");
  group_flags(log);
  log->add_option("--out", cfg.out_path, "series output file");
  auto* group = app.add_subcommand("group", "logarithm, exponential and group law");
  group_flags(group);
  group->add_option("--out", cfg.out_path, "group file");
  auto* mult = app.add_subcommand("mult", "multiplication-by-a endomorphism");
  group_flags(mult);
  mult->add_option("-a", cfg.multiplier, "integer multiplier");
  mult->add_option("--out", cfg.out_path, "series output file");
  auto* copolygon = app.add_subcommand("copolygon", "Newton copolygon vertices, tie loci and SVG");
  copolygon->add_option("--fixture", cfg.fixture, "ex1, dyn23 or appendixB45");
  copolygon->add_option("--support", cfg.support, "support file");
  copolygon->add_option("--svg", cfg.svg_path, "SVG output file");
  copolygon->add_option("--box", cfg.box, "plot window xmin,xmax,ymin,ymax");
  copolygon->add_option("--json", cfg.json_path, "write the JSON report here instead of stdout");
  auto* torsion = app.add_subcommand("torsion", "torsion valuations and ramification");
  group_flags(torsion);
  torsion->add_option("-n", cfg.level, "torsion level");
  torsion->add_option("--method", cfg.method, "closed_form or minplus");
  torsion->add_option("--csv", cfg.csv_path, "ramification sweep CSV");
  auto* verify = app.add_subcommand("verify", "run the invariant suite");
  group_flags(verify);
  verify->add_option("--assoc-degree", cfg.assoc_degree, "truncation for the associativity check");
  verify->add_option("--unramified", cfg.unramified_degree, "degree of the unramified ring for the gamma check");
  verify->add_option("--fixture", cfg.fixture, "appendixB45 to check its candidate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error " << code_name(Errc::invalid_argument) << ": " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (*log) return cmd_log(cfg);
    if (*group) return cmd_group(cfg);
    if (*mult) return cmd_mult(cfg);
    if (*copolygon) return cmd_copolygon(cfg);
    if (*torsion) return cmd_torsion(cfg);
    return cmd_verify(cfg);
  } catch (const Error& e) {
    std::cerr << "error " << code_name(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error E_INTERNAL: " << e.what() << '\n';
    return kExitDomain;
  }
}
