// Command-line front end: enumeration, verification and dessin export as
// reproducible batch runs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dessins/classify.hpp"
#include "dessins/dessin.hpp"
#include "dessins/errors.hpp"

namespace {

using dessins::CountReport;
using dessins::Family;
using dessins::GroupSpec;
using dessins::SpecReport;
using nlohmann::json;

constexpr std::int64_t kDefaultMaxOrder = 729;  // 3^6

std::string family_name(Family f) {
  switch (f) {
    case Family::M1: return "M1";
    case Family::M2: return "M2";
    case Family::M3: return "M3";
    case Family::Cyclic: return "cyclic";
  }
  return {};
}

json spec_json(const GroupSpec& s) {
  json j;
  j["family"] = family_name(s.family);
  j["p"] = s.p;
  j["d"] = s.d;
  j["e"] = s.e;
  if (s.f >= 0) j["f"] = s.f;
  if (s.h >= 0) j["h"] = s.h;
  j["order"] = s.order;
  return j;
}

std::string opt_int(int v) { return v >= 0 ? std::to_string(v) : ""; }

json row_json(const SpecReport& r) {
  json j;
  j["spec"] = spec_json(r.spec);
  j["pairs"] = r.pair_count;
  j["auts"] = r.aut_count;
  j["nu"] = r.nu;
  j["nu_formula"] = r.nu_formula;
  if (r.orbit_count >= 0) j["orbits"] = r.orbit_count;
  if (r.symmetric_orbits >= 0) j["symmetric"] = r.symmetric_orbits;
  j["match"] = r.match;
  return j;
}

// Fixed CSV columns, one row per spec.
constexpr const char* kCsvHeader = "p,d,e,family,f,h,pairs,auts,nu,nu_formula,match";

std::string row_csv(const SpecReport& r) {
  std::ostringstream os;
  os << r.spec.p << ',' << r.spec.d << ',' << r.spec.e << ',' << family_name(r.spec.family)
     << ',' << opt_int(r.spec.f) << ',' << opt_int(r.spec.h) << ',' << r.pair_count << ','
     << r.aut_count << ',' << r.nu << ',' << r.nu_formula << ','
     << (r.match ? "true" : "false");
  return os.str();
}

struct RunConfig {
  std::int64_t p = 3;
  int d = 0;
  int e = 1;
  std::string format = "text";
  std::string out;
  int parallel = 1;
  std::int64_t max_order = kDefaultMaxOrder;
  bool slow = false;
  bool oracle = false;
  bool adjacency = false;
  int max_de = 4;  // table sweep bound on d+e
};

int check_config(const RunConfig& cfg, bool need_de) {
  if (!dessins::is_odd_prime(cfg.p)) {
    std::cerr << "error: --p must be an odd prime\n";
    return 2;
  }
  if (need_de) {
    if (cfg.d < 0 || cfg.d > cfg.e) {
      std::cerr << "error: need 0 <= d <= e\n";
      return 2;
    }
    std::int64_t order = 1;
    for (int k = 0; k < cfg.d + cfg.e; ++k) order *= cfg.p;
    if (order > cfg.max_order && !cfg.slow) {
      std::cerr << "error: p^(d+e) = " << order << " exceeds the safety bound "
                << cfg.max_order << " (raise --max-order or pass --slow)\n";
      return 2;
    }
  }
  return 0;
}

int emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty() || cfg.out == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream f(cfg.out);
  if (!f) {
    std::cerr << "error: cannot open " << cfg.out << "\n";
    return 2;
  }
  f << text;
  return 0;
}

int run_specs(const RunConfig& cfg) {
  const auto specs = dessins::enumerate_specs(cfg.p, cfg.d, cfg.e);
  std::ostringstream os;
  if (cfg.format == "json") {
    json j = json::array();
    for (const auto& s : specs) j.push_back(spec_json(s));
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "p,d,e,family,f,h\n";
    for (const auto& s : specs)
      os << s.p << ',' << s.d << ',' << s.e << ',' << family_name(s.family) << ','
         << opt_int(s.f) << ',' << opt_int(s.h) << "\n";
  } else {
    for (const auto& s : specs) os << s.name() << "  order " << s.order << "\n";
  }
  return emit(cfg, os.str());
}

std::string report_text(const CountReport& r) {
  std::ostringstream os;
  os << "K(p^" << r.d << ", p^" << r.e << "), p = " << r.p << "\n";
  for (const auto& row : r.rows) {
    os << "  " << row.spec.name() << ": pairs " << row.pair_count << ", auts "
       << row.aut_count << ", nu " << row.nu << " (formula " << row.nu_formula << ")";
    if (row.symmetric_orbits >= 0) os << ", symmetric " << row.symmetric_orbits;
    os << (row.match ? "" : "  MISMATCH") << "\n";
  }
  os << "  nu total " << r.nu_total;
  if (r.symmetric_total >= 0) os << ", symmetric " << r.symmetric_total;
  os << ", reciprocal-pair classes " << r.reciprocal_classes << ", expected "
     << r.theorem_value << "\n";
  os << "  match: " << (r.match ? "true" : "false") << "\n";
  return os.str();
}

json report_json(const CountReport& r) {
  json j;
  j["p"] = r.p;
  j["d"] = r.d;
  j["e"] = r.e;
  j["rows"] = json::array();
  for (const auto& row : r.rows) j["rows"].push_back(row_json(row));
  j["nu_total"] = r.nu_total;
  if (r.symmetric_total >= 0) j["symmetric_total"] = r.symmetric_total;
  j["reciprocal_classes"] = r.reciprocal_classes;
  j["theorem_value"] = r.theorem_value;
  j["match"] = r.match;
  return j;
}

int run_verify(const RunConfig& cfg, bool strict_exit) {
  dessins::VerifyOptions options;
  options.use_oracle = cfg.oracle;
  const CountReport report = dessins::verify(cfg.p, cfg.d, cfg.e, options);
  std::ostringstream os;
  if (cfg.format == "json") {
    os << report_json(report).dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << kCsvHeader << "\n";
    for (const auto& row : report.rows) os << row_csv(row) << "\n";
  } else {
    os << report_text(report);
  }
  const int rc = emit(cfg, os.str());
  if (rc != 0) return rc;
  return strict_exit && !report.match ? 1 : 0;
}

int run_dessin(const RunConfig& cfg) {
  json out = json::array();
  for (const GroupSpec& spec : dessins::enumerate_specs(cfg.p, cfg.d, cfg.e)) {
    for (const auto& orbit : dessins::orbit_partition(spec)) {
      const dessins::Dessin d =
          dessins::build_dessin(spec, dessins::unpack_pair(spec, orbit.front()));
      out.push_back(json::parse(dessins::to_json(d, cfg.adjacency)));
    }
  }
  return emit(cfg, out.dump(2) + "\n");
}

int run_table(const RunConfig& cfg) {
  std::ostringstream os;
  const bool csv = cfg.format == "csv";
  json rows = json::array();
  if (csv) os << "p,d,e,nu,verified\n";
  for (int de = 0; de <= cfg.max_de; ++de) {
    for (int d = 0; 2 * d <= de; ++d) {
      const int e = de - d;
      if (e == 0 && d == 0 && de != 0) continue;
      const std::int64_t nu = dessins::theorem_formula(cfg.p, d, e);
      std::int64_t order = 1;
      for (int k = 0; k < d + e; ++k) order *= cfg.p;
      std::string verified = "skipped";
      if (order <= cfg.max_order) {
        dessins::VerifyOptions options;
        options.use_oracle = cfg.oracle;
        const CountReport r = dessins::verify(cfg.p, d, e, options);
        if (!r.match) {
          std::cerr << "verification mismatch at (d,e) = (" << d << "," << e << ")\n";
          return 1;
        }
        verified = "true";
      }
      if (cfg.format == "json") {
        rows.push_back({{"d", d}, {"e", e}, {"nu", nu}, {"verified", verified}});
      } else if (csv) {
        os << cfg.p << ',' << d << ',' << e << ',' << nu << ',' << verified << "\n";
      } else {
        os << "d=" << d << " e=" << e << "  nu=" << nu << "  verified=" << verified << "\n";
      }
    }
  }
  if (cfg.format == "json") os << rows.dump(2) << "\n";
  return emit(cfg, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Census of complete regular dessins of odd prime power order"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("DESSIN_MAX_ORDER")) cfg.max_order = std::atoll(env);

  auto add_common = [&](CLI::App* cmd, bool with_de) {
    cmd->add_option("--p", cfg.p, "odd prime p");
    if (with_de) {
      cmd->add_option("--d", cfg.d, "exponent d (0 <= d <= e)");
      cmd->add_option("--e", cfg.e, "exponent e");
    }
    cmd->add_option("--format", cfg.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", cfg.out, "output path (default: stdout)");
    cmd->add_option("--parallel", cfg.parallel, "worker count (output is identical for any value)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-order", cfg.max_order, "safety bound on |G| = p^(d+e)");
    cmd->add_flag("--slow", cfg.slow, "allow runs past the safety bound");
  };

  CLI::App* specs = app.add_subcommand("specs", "list the group specs for (p, d, e)");
  add_common(specs, true);

  CLI::App* count = app.add_subcommand("count", "per-spec pair/aut/nu counts");
  add_common(count, true);
  count->add_flag("--oracle", cfg.oracle, "use brute-force definitional predicates");

  CLI::App* verify = app.add_subcommand("verify", "verify the census for (p, d, e)");
  add_common(verify, true);
  verify->add_flag("--oracle", cfg.oracle, "use brute-force definitional predicates");

  CLI::App* dessin = app.add_subcommand("dessin", "export one dessin per isomorphism class");
  add_common(dessin, true);
  dessin->add_flag("--adjacency", cfg.adjacency, "include edge -> vertex id maps");

  CLI::App* table = app.add_subcommand("table", "sweep a (d, e) grid of class counts");
  add_common(table, false);
  table->add_option("--max-de", cfg.max_de, "largest d+e in the sweep");
  table->add_flag("--oracle", cfg.oracle, "use brute-force definitional predicates");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return 2;
  }

  try {
    if (specs->parsed()) {
      if (int rc = check_config(cfg, true)) return rc;
      return run_specs(cfg);
    }
    if (count->parsed() || verify->parsed()) {
      if (int rc = check_config(cfg, true)) return rc;
      return run_verify(cfg, verify->parsed());
    }
    if (dessin->parsed()) {
      if (int rc = check_config(cfg, true)) return rc;
      return run_dessin(cfg);
    }
    if (int rc = check_config(cfg, false)) return rc;
    return run_table(cfg);
  } catch (const dessins::falsification_error& err) {
    std::cerr << "falsification: " << err.what() << "\n";
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  }
}
