// agcb: dimension tables, distance bounds, reference-table reproduction and the
// code-lab audit for two-point codes. Exit codes: 0 pass, 1 mismatch or
// violation, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agcb/codelab.hpp"
#include "agcb/floorbounds.hpp"
#include "agcb/orderbounds.hpp"
#include "agcb/reproduce.hpp"
#include "agcb/selftest.hpp"
#include "agcb/tables.hpp"

namespace fs = std::filesystem;
using namespace agcb;

namespace {

constexpr const char* kCacheEnv = "AGCB_CACHE_DIR";

struct RunConfig {
  std::string curve = "suzuki8";
  std::string format = "md";
  std::string cache_dir;
  bool beelen_full_s = false;

  std::string echo() const {
    return "curve=" + curve + " format=" + format + " beelen_full_S=" + (beelen_full_s ? "1" : "0") +
           " cache_dir=" + (cache_dir.empty() ? "-" : cache_dir);
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

CurvePreset preset(const std::string& id) {
  try {
    return CurvePreset::from_id(id);
  } catch (const std::exception&) {
    throw UsageError("unknown curve id '" + id + "'");
  }
}

void header(const RunConfig& cfg, std::ostream& os) {
  if (cfg.format == "md") os << "<!-- agcb " << cfg.echo() << " -->\n";
  if (cfg.format == "csv") os << "# agcb " << cfg.echo() << "\n";
}

nlohmann::json config_json(const RunConfig& cfg) {
  return {{"curve", cfg.curve},
          {"format", cfg.format},
          {"beelen_full_S", cfg.beelen_full_s},
          {"cache_dir", cfg.cache_dir.empty() ? nlohmann::json(nullptr) : nlohmann::json(cfg.cache_dir)}};
}

fs::path cache_path(const RunConfig& cfg) { return fs::path(cfg.cache_dir) / (cfg.curve + ".json"); }

// Loads the cached table when present and valid, else builds (and caches).
DimensionTable obtain_table(const RunConfig& cfg) {
  if (!cfg.cache_dir.empty() && fs::exists(cache_path(cfg))) {
    try {
      return DimensionTable::load(cache_path(cfg).string());
    } catch (const CacheError& e) {
      std::cerr << "agcb: ignoring cache " << cache_path(cfg) << ": " << e.what() << "\n";
    }
  }
  const FunctionFieldKernel kernel(preset(cfg.curve));
  DimensionTable t = build_dimension_table(kernel);
  if (!cfg.cache_dir.empty()) {
    fs::create_directories(cfg.cache_dir);
    t.save(cache_path(cfg).string());
  }
  return t;
}

int cmd_selftest(const RunConfig& cfg) {
  const FunctionFieldKernel kernel(preset(cfg.curve));
  const auto suites = run_selftest(kernel);
  bool ok = true;
  for (const auto& s : suites) ok = ok && s.pass;
  const int g = kernel.genus();
  if (cfg.format == "json") {
    nlohmann::json j{{"config", config_json(cfg)},
                     {"genus", g},
                     {"torsion", kernel.torsion_order()},
                     {"canonical", TwoPointDivisor{2 * g - 2, 0}.to_string()},
                     {"status", ok ? "PASS" : "FAIL"}};
    for (const auto& s : suites) j["suites"].push_back({{"name", s.name}, {"pass", s.pass}, {"detail", s.detail}});
    std::cout << j.dump(2) << "\n";
  } else {
    header(cfg, std::cout);
    std::cout << cfg.curve << ": g=" << g << ", e=" << kernel.torsion_order()
              << ", K=" << TwoPointDivisor{2 * g - 2, 0}.to_string() << "\n";
    for (const auto& s : suites)
      std::cout << (cfg.format == "csv" ? "" : "- ") << s.name << (cfg.format == "csv" ? "," : ": ")
                << (s.pass ? "PASS" : "FAIL") << (cfg.format == "csv" ? "," : " (") << s.detail
                << (cfg.format == "csv" ? "" : ")") << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_table_build(const RunConfig& cfg, const std::string& out, const std::string& csv) {
  const FunctionFieldKernel kernel(preset(cfg.curve));
  const DimensionTable t = build_dimension_table(kernel);
  std::string target = out;
  if (target.empty() && !cfg.cache_dir.empty()) {
    fs::create_directories(cfg.cache_dir);
    target = cache_path(cfg).string();
  }
  if (!target.empty()) t.save(target);
  if (!csv.empty()) {
    std::ofstream os(csv);
    if (!os) throw std::runtime_error("cannot write " + csv);
    t.write_csv(os);
  }
  const auto& w = t.window();
  std::ostringstream sum;
  sum << std::hex << t.checksum();
  if (cfg.format == "json") {
    std::cout << nlohmann::json{{"config", config_json(cfg)},
                                {"genus", t.genus()},
                                {"torsion", t.torsion_order()},
                                {"window", {w.a_lo, w.a_hi, w.b_lo, w.b_hi}},
                                {"checksum", sum.str()},
                                {"written", target.empty() ? nlohmann::json(nullptr) : nlohmann::json(target)}}
                     .dump(2)
              << "\n";
  } else {
    header(cfg, std::cout);
    std::cout << cfg.curve << ": window a in [" << w.a_lo << "," << w.a_hi << "], b in [" << w.b_lo << "," << w.b_hi
              << "], checksum " << sum.str() << (target.empty() ? "" : ", written to " + target) << "\n";
  }
  return 0;
}

std::vector<std::string> split_names(const std::string& list) {
  if (list == "all") return bound_names();
  std::vector<std::string> names;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.rfind("d_", 0) != 0) item = "d_" + item;
    if (std::find(bound_names().begin(), bound_names().end(), item) == bound_names().end())
      throw UsageError("unknown bound '" + item + "'");
    names.push_back(item);
  }
  return names;
}

std::string witness_string(const BoundReport& r) {
  std::string s;
  if (r.witness) {
    s = "A=" + r.witness->A.to_string() + " B=" + r.witness->B.to_string() + " Z=" + r.witness->Z.to_string();
    if (r.witness->A_prime) s += " A'=" + r.witness->A_prime->to_string();
    if (r.witness->B_prime) s += " B'=" + r.witness->B_prime->to_string();
  }
  if (r.lambda) s += (s.empty() ? "" : " ") + std::string("lambda=") + r.lambda->to_string();
  if (r.path) s += (s.empty() ? "" : " ") + std::string("path=") + *r.path;
  return s;
}

int cmd_bounds(const RunConfig& cfg, const std::string& g_text, const std::string& list) {
  TwoPointDivisor G;
  try {
    G = TwoPointDivisor::parse(g_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("cannot parse G: ") + e.what());
  }
  const auto names = split_names(list);
  const DimensionTable t = obtain_table(cfg);
  OrderBoundEngine engine(t, cfg.beelen_full_s);
  const TwoPointDivisor C = G - t.canonical();
  const bool degenerate = t.l(-C) != 0;
  std::vector<BoundReport> reports;
  if (!degenerate)
    for (const auto& n : names) reports.push_back(compute_bound(engine, n, C));

  if (cfg.format == "json") {
    nlohmann::json j{{"config", config_json(cfg)}, {"G", G.to_string()}, {"C", C.to_string()}};
    if (degenerate) j["note"] = "n/a (Gamma* out of scope)";
    j["bounds"] = nlohmann::json::array();
    for (const auto& r : reports) j["bounds"].push_back(r.to_json());
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  header(cfg, std::cout);
  if (degenerate) {
    std::cout << "G=" << G.to_string() << " C=" << C.to_string() << ": n/a (Γ* out of scope)\n";
    return 0;
  }
  if (cfg.format == "csv") {
    std::cout << "G,C,bound,value,avoid_set,witness\n";
    for (const auto& r : reports)
      std::cout << G.to_string() << ',' << C.to_string() << ',' << r.name << ',' << r.value << ','
                << '"' << r.avoid_set.to_string() << '"' << ',' << witness_string(r) << "\n";
  } else {
    std::cout << "G = " << G.to_string() << ", C = G - K = " << C.to_string() << "\n\n";
    std::cout << "| bound | value | avoid set | witness |\n| --- | ---: | --- | --- |\n";
    for (const auto& r : reports)
      std::cout << "| " << r.name << " | " << r.value << " | " << r.avoid_set.to_string() << " | "
                << witness_string(r) << " |\n";
  }
  return 0;
}

int cmd_reproduce(RunConfig cfg, int id, bool stretch) {
  if (stretch) {
    std::cerr << "agcb: the suzuki32 block of table 6 is not available in this build\n";
    return 2;
  }
  cfg.curve = "suzuki8";
  const DimensionTable t = obtain_table(cfg);
  OrderBoundEngine engine(t, cfg.beelen_full_s);
  const TableResult res = reproduce_table(id, engine);
  if (cfg.format == "json") {
    nlohmann::json j = res.to_json();
    j["config"] = config_json(cfg);
    std::cout << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    header(cfg, std::cout);
    std::cout << res.to_csv();
    for (const auto& m : res.mismatches)
      std::cout << "# MISMATCH " << m.row << " / " << m.column << ": expected " << m.expected << ", got " << m.got
                << "\n";
    std::cout << "# Table " << id << ": " << (res.pass() ? "PASS" : "FAIL") << "\n";
  } else {
    header(cfg, std::cout);
    std::cout << res.to_markdown();
  }
  return res.pass() ? 0 : 1;
}

int cmd_audit(const RunConfig& cfg, int max_degc, const std::string& out) {
  // Exact distances are only within budget on the small Hermitian curves.
  if (cfg.curve != "hermitian2" && cfg.curve != "hermitian3")
    throw UsageError("audit supports hermitian2 and hermitian3, not '" + cfg.curve + "'");
  const FunctionFieldKernel kernel(preset(cfg.curve));
  const AuditReport rep = audit_bounds(kernel, max_degc);
  std::ostringstream csv;
  csv << "# agcb audit " << cfg.echo() << " max_degc=" << max_degc << " csv_version=1\n";
  rep.write_csv(csv);
  if (!out.empty()) {
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot write " + out);
    os << csv.str();
  }
  if (cfg.format == "json") {
    nlohmann::json j{{"config", config_json(cfg)},
                     {"max_degc", max_degc},
                     {"rows", rep.rows.size()},
                     {"violations", rep.violation_count()},
                     {"skipped", rep.skipped_count()},
                     {"d_B_not_exact", rep.d_B_mismatch_count()}};
    std::cout << j.dump(2) << "\n";
  } else {
    if (out.empty()) std::cout << csv.str();
    std::cout << (cfg.format == "csv" ? "# " : "") << cfg.curve << ", 0 < deg C <= " << max_degc << ": "
              << rep.rows.size() << " codes, " << rep.violation_count() << " violations, " << rep.skipped_count()
              << " skipped(budget), d_B exact on " << rep.rows.size() - rep.skipped_count() - rep.d_B_mismatch_count()
              << " of " << rep.rows.size() - rep.skipped_count() << "\n";
  }
  return rep.violation_count() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum distance bounds for two-point algebraic geometry codes"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  if (const char* env = std::getenv(kCacheEnv)) cfg.cache_dir = env;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"md", "csv", "json"}));
  app.add_option("--cache-dir", cfg.cache_dir, std::string("Dimension table cache (default $") + kCacheEnv + ")");
  app.add_flag("--beelen-full-s", cfg.beelen_full_s, "Beelen labels with S = {P,Q} instead of the edge point");

  auto* selftest = app.add_subcommand("selftest", "Kernel and table invariant suites");
  selftest->add_option("--curve", cfg.curve, "Curve id");

  auto* table = app.add_subcommand("table", "Dimension tables");
  table->require_subcommand(1);
  auto* build = table->add_subcommand("build", "Build (and cache) the dimension table");
  std::string out, csv;
  build->add_option("--curve", cfg.curve, "Curve id");
  build->add_option("--out", out, "JSON output path (default: cache dir)");
  build->add_option("--csv", csv, "Also write a,b,l rows as CSV");

  auto* bounds = app.add_subcommand("bounds", "All bounds for one code C_Omega(D, G)");
  std::string g_text, list = "all";
  bounds->add_option("--curve", cfg.curve, "Curve id");
  bounds->add_option("--G", g_text, "G as aP+bQ, relative to K = (2g-2)P")->required();
  bounds->add_option("--bounds", list, "all, or a comma list such as B,ABZ,DK");

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a reference table and diff it");
  int table_id = 0;
  bool stretch = false;
  reproduce->add_option("table", table_id, "Table number")->required()->check(CLI::Range(1, 6));
  reproduce->add_flag("--stretch", stretch)->group("");

  auto* audit = app.add_subcommand("audit", "Check every bound against brute-forced distances");
  int max_degc = 6;
  std::string audit_out;
  audit->add_option("--curve", cfg.curve, "hermitian2 or hermitian3")->required();
  audit->add_option("--max-degc", max_degc, "Largest deg C audited");
  audit->add_option("--out", audit_out, "CSV report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*selftest) return cmd_selftest(cfg);
    if (*build) return cmd_table_build(cfg, out, csv);
    if (*bounds) return cmd_bounds(cfg, g_text, list);
    if (*reproduce) return cmd_reproduce(cfg, table_id, stretch);
    if (*audit) return cmd_audit(cfg, max_degc, audit_out);
  } catch (const UsageError& e) {
    std::cerr << "agcb: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "agcb: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
