#include "shear/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <variant>

#include "shear/counterexample.hpp"
#include "shear/errors.hpp"
#include "shear/format.hpp"
#include "shear/growth.hpp"
#include "shear/series_io.hpp"
#include "shear/starlike.hpp"

namespace shear::cli {

namespace {

using Cell = std::variant<std::monostate, double, long long, bool, std::string>;

// One report: header comments, a column list, rows, trailing comments.
struct Table {
  std::string title;
  std::string digest;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::string> trailer;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& c) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(long long x) const { return std::to_string(x); }
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(const std::string& s) const { return csv_escape(s); }
  };
  return std::visit(Visitor{}, c);
}

nlohmann::ordered_json json_cell(const Cell& c) {
  struct Visitor {
    nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
    nlohmann::ordered_json operator()(double x) const {
      if (std::isfinite(x)) return x;
      return format_real(x);
    }
    nlohmann::ordered_json operator()(long long x) const { return x; }
    nlohmann::ordered_json operator()(bool b) const { return b; }
    nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, c);
}

void write_table(const Table& t, const std::string& format, std::ostream& os) {
  if (format == "json") {
    nlohmann::ordered_json doc;
    doc["report"] = t.title;
    doc["config_digest"] = t.digest;
    doc["columns"] = t.columns;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
      nlohmann::ordered_json obj;
      for (std::size_t i = 0; i < t.columns.size(); ++i) obj[t.columns[i]] = json_cell(row[i]);
      rows.push_back(std::move(obj));
    }
    doc["rows"] = std::move(rows);
    doc["comments"] = t.trailer;
    os << doc.dump(2) << '\n';
    return;
  }
  os << "# " << t.title << '\n';
  os << "# config_digest: " << t.digest << '\n';
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << '\n';
  }
  for (const auto& line : t.trailer) os << "# " << line << '\n';
}

ShearingMap load_map(const RunConfig& c) {
  if (!c.builtin.empty() && !c.input_path.empty()) throw ConfigError("use either --input or --builtin, not both");
  if (!c.builtin.empty()) {
    if (c.builtin != "counterexample") throw ConfigError("unknown builtin '" + c.builtin + "'");
    return counterexample_map();
  }
  if (c.input_path.empty()) throw ConfigError("this subcommand needs --input PATH or --builtin counterexample");
  return ShearingMap::from_series(load_series_spec(c.input_path));
}

std::vector<BallPoint> ball_probes(const RunConfig& c) {
  const auto values = parse_complex_list(c.probes);
  if (values.size() % 2 != 0) throw ConfigError("--probe lists ball points as z1;z2 pairs; got an odd count");
  std::vector<BallPoint> out;
  for (std::size_t i = 0; i < values.size(); i += 2) out.emplace_back(values[i], values[i + 1]);
  return out;
}

SamplerConfig sampler_from(const RunConfig& c) {
  if (!(c.radius > 0.0 && c.radius < 1.0)) throw ConfigError("--radius must lie in (0,1)");
  SamplerConfig s;
  s.radius = c.radius;
  s.radial = c.radial > 0 ? c.radial : 32;
  s.splits = c.splits;
  s.phases = c.phases;
  s.random = c.samples;
  s.seed = c.seed;
  s.probes = ball_probes(c);
  s.threads = c.threads;
  return s;
}

Cell certificate_degree(const Certificate& cert) {
  if (cert.degree) return static_cast<long long>(*cert.degree);
  return std::monostate{};
}

Table certificate_table(const RunConfig& c, const std::vector<Certificate>& certs) {
  Table t{"shearcheck " + c.subcommand, c.digest(), {"kind", "status", "degree", "margin", "s0_member"}, {}, {}};
  for (const Certificate& cert : certs) {
    t.rows.push_back({to_string(cert.kind), to_string(cert.status), certificate_degree(cert), cert.margin, cert.s0_member});
  }
  return t;
}

void require_coefficients(const ShearingMap& f) {
  if (f.coefficients() == nullptr) {
    throw UnsupportedRepresentation(f.g().describe() +
                                    " is closed-form; coefficient criteria need a series spec (--input)");
  }
}

Table scan_table(const RunConfig& c, const ScanReport& r) {
  Table t{"shearcheck " + c.subcommand,
          c.digest(),
          {"scan", "extremum", "extremum_sign", "extremum_log_abs", "witness_z1_re", "witness_z1_im", "witness_z2_re",
           "witness_z2_im", "witness_alpha", "samples", "threshold", "violation", "config_digest"},
          {},
          {}};
  Cell alpha = std::monostate{};
  if (r.witness_alpha) alpha = *r.witness_alpha;
  t.rows.push_back({r.scan, r.extremum.value(), static_cast<long long>(r.extremum.sign()), r.extremum.log_abs(),
                    r.witness.z1().real(), r.witness.z1().imag(), r.witness.z2().real(), r.witness.z2().imag(), alpha,
                    static_cast<long long>(r.samples), r.threshold, r.violation, r.config_digest});
  if (c.subcommand == "eq1-scan") t.trailer.push_back("necessary-condition check only");
  return t;
}

void write_trace(const std::string& path, const std::vector<TraceRow>& rows) {
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write trace file '" + path + "'");
  os << "s,t,phase1,phase2,value\n";
  for (const TraceRow& r : rows) {
    os << format_real(r.s) << ',' << format_real(r.t) << ',' << format_real(r.phase1) << ',' << format_real(r.phase2)
       << ',' << format_real(r.value) << '\n';
  }
}

struct Outcome {
  Table table;
  int status = kOk;
};

Outcome dispatch(const RunConfig& c) {
  const std::string& cmd = c.subcommand;
  if (cmd == "certify" || cmd == "embed") {
    const ShearingMap f = load_map(c);
    require_coefficients(f);
    if (cmd == "embed") return {certificate_table(c, {embed_certificate(f, c.n_max)})};
    return {certificate_table(c, {starlike_certificate(f), starshapelike_certificate(f), embed_certificate(f, c.n_max)})};
  }
  if (cmd == "starlike-scan" || cmd == "eq1-scan") {
    const ShearingMap f = load_map(c);
    const SamplerConfig sampler = sampler_from(c);
    std::vector<TraceRow> trace;
    std::vector<TraceRow>* sink = c.trace_path.empty() ? nullptr : &trace;
    ScanReport report;
    if (cmd == "starlike-scan") {
      report = starlike_scan(f, sampler, sink);
    } else {
      const std::vector<double> alphas = c.alpha.empty() ? default_alpha_grid() : parse_grid(c.alpha, 10);
      report = eq1_scan(f, alphas, sampler, sink);
    }
    if (sink) write_trace(c.trace_path, trace);
    return {scan_table(c, report), report.violation ? kViolation : kOk};
  }
  if (cmd == "growth-scan") {
    const ShearingMap f = load_map(c);
    require_coefficients(f);
    const std::vector<double> grid = c.grid.empty() ? parse_grid("0.1:0.9:9", 9) : parse_grid(c.grid, 9);
    const GrowthScanConfig gc{c.angular, c.radial > 0 ? c.radial : 256, c.threads};
    Table t{"shearcheck growth-scan", c.digest(), {"r", "sup_norm", "bound", "conforms"}, {}, {}};
    bool all = true;
    for (const GrowthRecord& rec : growth_conformance_scan(f, grid, gc)) {
      t.rows.push_back({rec.r, rec.sampled_sup_norm, rec.bound_value, rec.conforms});
      all = all && rec.conforms;
    }
    return {std::move(t), all ? kOk : kViolation};
  }
  if (cmd == "counterexample") {
    if (!c.input_path.empty() || (!c.builtin.empty() && c.builtin != "counterexample")) {
      throw ConfigError("the counterexample subcommand runs on the builtin map only");
    }
    const std::vector<double> grid = c.grid.empty() ? default_divergence_grid() : parse_grid(c.grid, 40);
    const DivergenceScan scan = divergence_scan(grid, c.c_report);
    Table t{"shearcheck counterexample",
            c.digest(),
            {"r", "opnorm", "lower_bound", "simplified_bound", "ratio", "ceiling"},
            {},
            {}};
    for (const DivergenceRecord& rec : scan.records) {
      t.rows.push_back({rec.r, rec.opnorm, rec.lower_bound, rec.simplified_bound, rec.ratio, rec.ceiling});
    }
    t.trailer.push_back("verdict: " + to_string(scan.verdict) + " (C_report=" + format_real(scan.c_report) +
                        ", ratio_increasing=" + (scan.ratio_increasing ? "true" : "false") + ")");
    return {std::move(t)};
  }
  if (cmd == "eval") {
    const ShearingMap f = load_map(c);
    const std::vector<BallPoint> points = ball_probes(c);
    if (points.empty()) throw ConfigError("eval needs at least one --probe z1;z2 pair");
    Table t{"shearcheck eval",
            c.digest(),
            {"z1_re", "z1_im", "z2_re", "z2_im", "f1_re", "f1_im", "f2_re", "f2_im", "dg_re", "dg_im", "opnorm",
             "starlike_quantity"},
            {},
            {}};
    for (const BallPoint& z : points) {
      const ComplexPair w = shear_eval(f, z);
      const Jacobian2 j = shear_jacobian(f, z);
      t.rows.push_back({z.z1().real(), z.z1().imag(), z.z2().real(), z.z2().imag(), w[0].real(), w[0].imag(),
                        w[1].real(), w[1].imag(), j.a12.real(), j.a12.imag(), shear_opnorm(f, z),
                        starlike_quantity(f, z)});
    }
    return {std::move(t)};
  }
  throw ConfigError("unknown subcommand '" + cmd + "'");
}

}  // namespace

std::string RunConfig::digest() const {
  std::string d = "cmd=" + subcommand;
  if (!input_path.empty()) d += ";input=" + input_path;
  if (!builtin.empty()) d += ";builtin=" + builtin;
  d += ";radius=" + format_real(radius) + ";grid=" + grid + ";alpha=" + alpha + ";radial=" + std::to_string(radial) +
       ";splits=" + std::to_string(splits) + ";phases=" + std::to_string(phases) +
       ";samples=" + std::to_string(samples) + ";angular=" + std::to_string(angular) +
       ";seed=" + std::to_string(seed) + ";probes=" + probes + ";c_report=" + format_real(c_report) +
       ";n_max=" + std::to_string(n_max) + ";format=" + format;
  return d;
}

std::vector<double> parse_grid(const std::string& text, int default_count) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() < 2 || parts.size() > 3) throw ConfigError("grid must look like A:B or A:B:N, got '" + text + "'");
  double a = 0.0, b = 0.0;
  int n = default_count;
  try {
    std::size_t used = 0;
    a = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument("trailing");
    b = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument("trailing");
    if (parts.size() == 3) {
      n = std::stoi(parts[2], &used);
      if (used != parts[2].size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::exception&) {
    throw ConfigError("grid must look like A:B or A:B:N, got '" + text + "'");
  }
  if (n < 1) throw ConfigError("grid point count must be >= 1");
  if (n == 1) return {a};
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(i == n - 1 ? b : a + (b - a) * i / (n - 1));
  return out;
}

std::vector<std::complex<double>> parse_complex_list(const std::string& text) {
  std::vector<std::complex<double>> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ';');) {
    const auto comma = item.find(',');
    try {
      if (comma == std::string::npos) throw std::invalid_argument("no comma");
      std::size_t used = 0;
      const std::string re_s = item.substr(0, comma);
      const std::string im_s = item.substr(comma + 1);
      const double re = std::stod(re_s, &used);
      if (used != re_s.size()) throw std::invalid_argument("trailing");
      const double im = std::stod(im_s, &used);
      if (used != im_s.size()) throw std::invalid_argument("trailing");
      out.emplace_back(re, im);
    } catch (const std::exception&) {
      throw ConfigError("probe entries must look like re,im; got '" + item + "'");
    }
  }
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "csv" && config.format != "json") throw ConfigError("--format must be csv or json");
    if (config.threads < 1) throw ConfigError("--threads must be >= 1");
    Outcome outcome = dispatch(config);
    if (config.out_path.empty()) {
      write_table(outcome.table, config.format, out);
    } else {
      std::ofstream os(config.out_path);
      if (!os) throw ConfigError("cannot write '" + config.out_path + "'");
      write_table(outcome.table, config.format, os);
    }
    return outcome.status;
  } catch (const UnsupportedRepresentation& e) {
    err << "error: unsupported representation: " << e.what() << '\n';
  } catch (const NotCertifiedError& e) {
    err << "error: refused: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Shearing-map verification: coefficient certificates, geometric scans, counterexample growth"};
  app.require_subcommand(1);
  RunConfig c;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"certify", "starlike, starshapelike and embedding certificates from coefficients"},
      {"embed", "minimal Loewner-embedding degree N"},
      {"starlike-scan", "sampled minimum of Re<[df]^-1 f, z> over the ball"},
      {"eq1-scan", "sampled starlike-image inequality (necessary condition)"},
      {"growth-scan", "sup ||df|| against (1+sqrt r)^2/(1-r)^3 for certified shears"},
      {"counterexample", "divergence of ||df(0,r)||(1-r)^3 for the builtin counterexample"},
      {"eval", "evaluate f, g' and the starlike functional at probe points"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", c.input_path, "series-spec JSON file");
    sub->add_option("--builtin", c.builtin, "builtin map name (counterexample)");
    sub->add_option("--radius", c.radius, "scan radius in (0,1)");
    sub->add_option("--grid", c.grid, "r-grid A:B[:N]");
    sub->add_option("--alpha", c.alpha, "alpha grid A:B[:N] for eq1-scan");
    sub->add_option("--radial", c.radial, "radial sample count");
    sub->add_option("--splits", c.splits, "|z2|^2 split count");
    sub->add_option("--phases", c.phases, "phase count per coordinate");
    sub->add_option("--samples", c.samples, "seeded random sample count");
    sub->add_option("--angular", c.angular, "angular sample count (growth-scan)");
    sub->add_option("--seed", c.seed, "random seed");
    sub->add_option("--probe", c.probes, "probe list re,im[;re,im...]; ball points take two entries");
    sub->add_option("--c-report", c.c_report, "constant C for the divergence verdict");
    sub->add_option("--n-max", c.n_max, "largest embedding degree searched");
    sub->add_option("--out", c.out_path, "report path (default stdout)");
    sub->add_option("--trace", c.trace_path, "per-sample trace CSV (scans)");
    sub->add_option("--format", c.format, "csv or json");
    sub->add_option("--threads", c.threads, "evaluation threads (does not change results)");
    sub->callback([&c, name] { c.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return run(c, out, err);
}

}  // namespace shear::cli
