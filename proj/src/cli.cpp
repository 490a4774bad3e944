#include "fsplit/cli.hpp"

#include <chrono>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fsplit/api.hpp"

namespace fsplit {

namespace {

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

std::string cell(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void print_rows(std::ostream& out, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c + 1 == r.size()) {
        out << r[c] << "\n";
      } else {
        out << std::left << std::setw(static_cast<int>(width[c])) << r[c] << "  ";
      }
    }
  };
  line(header);
  for (const auto& r : rows) line(r);
}

std::vector<std::string> report_row(const Json& r) {
  return {cell(r["e"]), cell(r["q"]), cell(r["lambda"]), cell(r["dim"]), cell(r["alpha"]), cell(r["s_e"]),
          cell(r["a_e"])};
}

const std::vector<std::string> kReportHeader{"e", "q", "lambda", "dim", "alpha", "s_e", "a_e"};

void print_table(std::ostream& out, const Json& doc) {
  out << "ring: char " << cell(doc["ring"]["char"]) << ", ideal " << cell(doc["ring"]["ideal"]) << "\n";
  if (doc.contains("report")) {
    if (doc.contains("socle")) out << "socle generator: " << cell(doc["socle"]) << "\n";
    print_rows(out, kReportHeader, {report_row(doc["report"])});
  }
  if (doc.contains("signature")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : doc["signature"]["reports"]) rows.push_back(report_row(r));
    print_rows(out, kReportHeader, rows);
    out << "tail range [" << cell(doc["signature"]["tail_min"]) << ", " << cell(doc["signature"]["tail_max"])
        << "], positive: " << (doc["signature"]["positive"].get<bool>() ? "yes" : "no") << "\n";
  }
  if (doc.contains("scan")) {
    const auto& scan = doc["scan"];
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < scan["values"].size(); ++i) {
      const auto& v = scan["values"][i];
      rows.push_back({cell(v["prime"]["name"]), cell(v["report"]["s_e"]), cell(v["report"]["dim"]),
                      cell(v["report"]["alpha"]), cell(scan["kunz_sums"][i])});
    }
    print_rows(out, {"prime", "s_e", "dim", "alpha", "dim+alpha"}, rows);
    rows.clear();
    for (const auto& t : scan["thresholds"])
      rows.push_back({cell(t["r"]), t["above_closed"].get<bool>() ? "closed" : "NOT closed",
                      t["at_least_closed"].get<bool>() ? "closed" : "NOT closed"});
    print_rows(out, {"r", "{s_e > r}", "{s_e >= r}"}, rows);
    for (const auto& m : doc["monotonicity"])
      out << "chain " << cell(m["chain"]) << ": " << (m["holds"].get<bool>() ? "monotone" : "NOT monotone") << "\n";
    if (!doc["kunz"].is_null())
      out << "dim+alpha constant: " << (doc["kunz"]["holds"].get<bool>() ? "yes" : "no") << "\n";
    out << "verdict: " << (doc["pass"].get<bool>() ? "pass" : "fail") << "\n";
  }
  if (doc.contains("error")) out << "stopped early: " << cell(doc["error"]["message"]) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius splitting numbers of quotients of polynomial rings over F_p and F_p(t...)", "fsplit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json";
  bool no_timestamp = false;
  bool use_oracle = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--no-timestamp", no_timestamp, "Omit the timestamp field from JSON output");
  app.add_flag("--oracle", use_oracle)->group("");

  std::string file;
  std::optional<unsigned> e, e_max;
  auto* se = app.add_subcommand("se", "Normalized splitting numbers s_e");
  se->add_option("file", file, "Ring specification file")->required();
  auto* e_opt = se->add_option("--e", e, "Frobenius exponent");
  auto* emax_opt = se->add_option("--emax", e_max, "Compute s_0 .. s_emax");
  e_opt->excludes(emax_opt);

  std::optional<std::string> primes;
  std::vector<std::string> chains;
  std::string thresholds = "0,1/2,1";
  unsigned probe_e = 1;
  auto* probe = app.add_subcommand("probe", "Splitting numbers at coordinate primes");
  probe->add_option("file", file, "Ring specification file")->required();
  probe->add_option("--primes", primes, "Primes as 'x | x,z | NAME'");
  probe->add_option("--chain", chains, "Extra chain 'x | x,z' to test for monotonicity");
  probe->add_option("--e", probe_e, "Frobenius exponent");
  probe->add_option("--thresholds", thresholds, "Comma separated rationals");

  std::optional<std::string> sop, socle;
  unsigned gor_e = 1;
  auto* gor = app.add_subcommand("gorenstein", "Splitting numbers through a socle generator");
  gor->add_option("file", file, "Ring specification file")->required();
  gor->add_option("--sop", sop, "System of parameters, comma separated");
  gor->add_option("--socle", socle, "Socle generator to use");
  gor->add_option("--e", gor_e, "Frobenius exponent");

  std::vector<std::string> argv_storage{"fsplit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? 0 : 1;
  }
  if (se->parsed() && !e && !e_max) {
    err << "fsplit se: one of --e or --emax is required\n";
    return 1;
  }

  RingSpec spec;
  auto emit = [&](Json doc) {
    if (format == "table") {
      print_table(out, doc);
      return;
    }
    if (!no_timestamp) doc["timestamp"] = utc_timestamp();
    out << doc.dump(2) << "\n";
  };
  try {
    CommandOptions options;
    options.compute = ComputeOptions::from_environment();
    options.oracle = use_oracle;
    spec = load_ring_spec(file);
    if (se->parsed()) {
      emit(e ? run_se(spec, *e, options) : run_signature(spec, *e_max, options));
    } else if (probe->parsed()) {
      emit(run_probe(spec, primes, chains, probe_e, parse_thresholds(thresholds), options));
    } else {
      emit(run_gorenstein(spec, sop, socle, gor_e, options));
    }
    return 0;
  } catch (const SignatureCostGuard& ex) {
    emit(partial_signature(spec, ex));
    err << "fsplit: " << ex.what() << "\n";
    return exit_code_for(ex.kind());
  } catch (const Error& ex) {
    err << "fsplit: " << ex.what() << "\n";
    return exit_code_for(ex.kind());
  }
}

}  // namespace fsplit
