#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "entpot/boundaries.hpp"
#include "entpot/channels.hpp"
#include "entpot/error.hpp"
#include "entpot/measures.hpp"
#include "entpot/potentials.hpp"
#include "entpot/scan.hpp"

namespace entpot::cli {

std::string format_cell(const Cell& cell) {
  if (const auto* b = std::get_if<bool>(&cell)) return *b ? "true" : "false";
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  char buf[40];
  const double v = std::get<double>(cell);
  std::snprintf(buf, sizeof buf, "%.12g", v == 0.0 ? 0.0 : v);  // no "-0"
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_cell(row[c]);
    out << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(line);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!line.empty() && line.back() == sep) parts.emplace_back();
  return parts;
}

}  // namespace

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  if (!std::getline(in, line)) return table;
  table.columns = split(line, ',');
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Cell> row;
    for (auto& s : split(line, ',')) row.emplace_back(std::move(s));
    table.rows.push_back(std::move(row));
  }
  return table;
}

nlohmann::json table_json(const Table& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (std::size_t c = 0; c < row.size(); ++c) {
      const Cell& cell = row[c];
      if (const auto* b = std::get_if<bool>(&cell)) {
        obj[table.columns[c]] = *b;
      } else if (const auto* s = std::get_if<std::string>(&cell)) {
        obj[table.columns[c]] = *s;
      } else if (const auto* i = std::get_if<long long>(&cell)) {
        obj[table.columns[c]] = *i;
      } else {
        obj[table.columns[c]] = std::stod(format_cell(cell));
      }
    }
    rows.push_back(std::move(obj));
  }
  return {{"columns", table.columns}, {"rows", rows}};
}

namespace {

struct Common {
  std::string format = "csv";
  std::string out_path;
  double ree_tol = 1e-9;
  std::uint64_t seed = 7;
  bool no_timestamp = false;
};

struct StateFlags {
  std::string family;
  std::optional<double> p, q, x, phi, n, theta_deg;
  std::vector<double> lambda;
};

struct PipelineFlags {
  std::optional<double> theta_deg;
  std::vector<double> pdc;
  std::vector<double> adc;
};

struct Result {
  Table table;
  nlohmann::json summary;        // optional extra JSON content
  std::string stderr_summary;    // printed alongside CSV output
  bool converged = true;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out_path, "Output file (default stdout)");
  sub->add_option("--ree-tol", c.ree_tol, "REE solver tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--seed", c.seed, "Random seed");
  sub->add_flag("--no-timestamp", c.no_timestamp, "Emit produced_at as null");
}

void add_pipeline(CLI::App* sub, PipelineFlags& f) {
  sub->add_option("--theta-deg", f.theta_deg, "Beam-splitter angle in degrees (90 = balanced)");
  sub->add_option("--pdc", f.pdc, "Phase damping kappa1,kappa2")->delimiter(',')->expected(2);
  sub->add_option("--adc", f.adc, "Amplitude damping gamma1,gamma2")->delimiter(',')->expected(2);
}

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

BeamSplitterConfig splitter(const std::optional<double>& theta_deg) {
  return theta_deg ? BeamSplitterConfig::from_theta(deg_to_rad(*theta_deg))
                   : BeamSplitterConfig::balanced();
}

SingleQubitState qubit(const StateFlags& s) {
  return SingleQubitState(s.p.value_or(0.0), std::polar(s.x.value_or(0.0), s.phi.value_or(0.0)));
}

double need(const std::optional<double>& v, const char* flag, const std::string& family) {
  if (!v) throw CLI::ValidationError(flag, "required for --family " + family);
  return *v;
}

TwoQubitState build_state(const StateFlags& s) {
  const std::string& f = s.family;
  if (f == "pure") return psi_q_state(need(s.q, "--q", f));
  if (f == "horodecki") return horodecki_state(need(s.p, "--p", f));
  if (f == "gh") return generalized_horodecki({need(s.p, "--p", f), need(s.q, "--q", f)});
  if (f == "werner") return werner(need(s.n, "--n", f));
  if (f == "bell") {
    if (s.lambda.size() != 4) throw CLI::ValidationError("--lambda", "needs four weights");
    return bell_diagonal({{s.lambda[0], s.lambda[1], s.lambda[2], s.lambda[3]}});
  }
  need(s.p, "--p", f);
  return tunable_bs_output(qubit(s), splitter(s.theta_deg));
}

Result cmd_measures(const StateFlags& s, const Common& c) {
  const TwoQubitState rho = build_state(s);
  ReeOptions opt;
  opt.tol = c.ree_tol;
  const ReeResult r = ree_numerical(rho, opt);
  const double conc = concurrence(rho);
  Result res;
  res.table.columns = {"negativity", "concurrence", "eof", "ree", "ree_converged",
                       "ree_iterations", "ree_step_norm"};
  res.table.rows.push_back({negativity(rho), conc, eof(conc), r.value, r.converged,
                            static_cast<long long>(r.iterations), r.final_step_norm});
  res.converged = r.converged;
  return res;
}

Result cmd_potentials(const StateFlags& s, const PipelineFlags& pf, const Common& c) {
  GeneralizedPipeline pipe;
  pipe.bs = splitter(pf.theta_deg);
  if (!pf.pdc.empty()) pipe.pdc = PhaseDampingParams{pf.pdc[0], pf.pdc[1]};
  if (!pf.adc.empty()) pipe.adc = AmplitudeDampingParams{pf.adc[0], pf.adc[1]};
  ReeOptions opt;
  opt.tol = c.ree_tol;
  const PotentialTriple t = generalized_potentials(qubit(s), pipe, opt);
  Result res;
  res.table.columns = {"np", "cp", "reep", "converged"};
  res.table.rows.push_back({t.np, t.cp, t.reep, t.converged});
  res.converged = t.converged;
  return res;
}

Result cmd_curve(const std::string& kind, const std::string& plane, int n, double family_p,
                 const Common& c) {
  ReeOptions opt;
  opt.tol = c.ree_tol;
  const BoundaryCurve curve =
      boundary_curve(parse_curve_kind(kind), n, parse_measure_plane(plane), family_p, opt);
  Result res;
  res.table.columns = {"abscissa", "ordinate", "param1", "param2"};
  for (const auto& s : curve.samples) {
    res.table.rows.push_back({s.abscissa, s.ordinate, s.param1, s.param2});
  }
  res.summary = {{"abscissa_label", curve.abscissa_label},
                 {"ordinate_label", curve.ordinate_label}};
  return res;
}

Result cmd_special_points(double tol, const Common& c) {
  ReeOptions opt;
  opt.tol = c.ree_tol;
  const SpecialPoints sp = special_points(tol, opt);
  Result res;
  res.table.columns = {"n1", "e1", "n2", "e2", "n3", "e3"};
  res.table.rows.push_back({sp.n1, sp.e1, sp.n2, sp.e2, sp.n3, sp.e3});
  return res;
}

Result cmd_scan(std::size_t n, int envelope_samples, bool containment, unsigned threads,
                const Common& c) {
  ScanConfig cfg;
  cfg.n_states = n;
  cfg.seed = c.seed;
  cfg.ree_tol = c.ree_tol;
  cfg.threads = threads;
  const ScanResult scan = run_scan(cfg);

  Result res;
  res.table.columns = {"p", "x_abs", "phi", "np", "cp", "reep", "converged"};
  for (const auto& r : scan.records) {
    res.table.rows.push_back({r.p, r.x_abs, r.phi, r.potentials.np, r.potentials.cp,
                              r.potentials.reep, r.potentials.converged});
  }
  res.summary["failures"] = scan.failures;
  res.summary["phase_checks"] = scan.phase_checks;
  res.summary["phase_mismatches"] = scan.phase_mismatches;
  res.summary["phase_max_deviation"] = scan.phase_max_deviation;
  std::ostringstream text;
  text << "records " << scan.records.size() << ", solver failures " << scan.failures
       << ", phase checks " << scan.phase_checks << " (mismatches " << scan.phase_mismatches
       << ")\n";

  if (containment) {
    ReeOptions opt;
    opt.tol = c.ree_tol;
    const BoundaryCurve z =
        boundary_curve(CurveKind::RhoZ, envelope_samples, MeasurePlane::ReeN, 0.8, opt, threads);
    const ContainmentReport rep = containment_report(scan.records, z, 1e-5, opt, threads);
    nlohmann::json planes = nlohmann::json::object();
    for (const auto* p : {&rep.nc, &rep.ree_c, &rep.ree_n}) {
      planes[to_string(p->plane)] = {{"max_excess", p->max_excess},
                                     {"violations", p->violations}};
      text << to_string(p->plane) << ": " << p->violations.size()
           << " violations, max excess " << format_cell(p->max_excess) << "\n";
    }
    res.summary["containment"] = {{"tolerance", rep.tolerance},
                                  {"planes", planes},
                                  {"bell_gap", rep.bell_gap},
                                  {"exact_checks", rep.exact_checks},
                                  {"ok", rep.ok()}};
    text << "bell gap " << format_cell(rep.bell_gap) << ", exact envelope checks "
         << rep.exact_checks << "\n";
  }
  res.stderr_summary = text.str();
  res.converged = scan.failures == 0;
  return res;
}

Result cmd_channel(double q, const PipelineFlags& pf, const Common& c) {
  if (pf.pdc.empty() == pf.adc.empty()) {
    throw CLI::ValidationError("channel", "give exactly one of --pdc or --adc");
  }
  const bool phase = !pf.pdc.empty();
  const auto& k = phase ? pf.pdc : pf.adc;
  const TwoQubitState in = psi_q_state(q);
  TwoQubitState kraus = phase ? apply_phase_damping(in, {k[0], k[1]})
                              : apply_amplitude_damping(in, {k[0], k[1]});
  const TwoQubitState closed = phase ? pdc_on_pure(q, k[0], k[1]) : adc_on_pure(q, k[0], k[1]).state;
  const double deviation = (kraus.matrix() - closed.matrix()).cwiseAbs().maxCoeff();

  ReeOptions opt;
  opt.tol = c.ree_tol;
  const ReeResult r_in = ree_numerical(in, opt);
  const ReeResult r_out = ree_numerical(kraus, opt);
  Result res;
  res.table.columns = {"q", "channel", "c1", "c2", "n_in", "c_in", "ree_in",
                       "n_out", "c_out", "ree_out", "closed_form_deviation"};
  res.table.rows.push_back({q, std::string(phase ? "pdc" : "adc"), k[0], k[1], negativity(in),
                            concurrence(in), r_in.value, negativity(kraus), concurrence(kraus),
                            r_out.value, deviation});
  res.converged = r_in.converged && r_out.converged;
  return res;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json given_parameters(const CLI::App* sub) {
  nlohmann::json params = nlohmann::json::object();
  for (const CLI::Option* opt : sub->get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help") continue;
    std::string key = opt->get_name();
    if (key.rfind("--", 0) == 0) key = key.substr(2);
    const auto& values = opt->results();
    std::string joined;
    for (std::size_t i = 0; i < values.size(); ++i) joined += (i ? "," : "") + values[i];
    params[key] = opt->get_type_size() == 0 ? nlohmann::json(true) : nlohmann::json(joined);
  }
  return params;
}

void emit(std::ostream& out, std::ostream& err, const Common& c, const std::string& command,
          const CLI::App* sub, const Result& res) {
  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) throw CLI::ValidationError("--out", "cannot open " + c.out_path);
    sink = &file;
  }
  if (c.format == "json") {
    nlohmann::json payload = table_json(res.table);
    if (!res.summary.is_null()) payload["summary"] = res.summary;
    nlohmann::json env = {{"schema_version", kSchemaVersion},
                          {"command", command},
                          {"parameters", given_parameters(sub)},
                          {"produced_at", c.no_timestamp ? nlohmann::json() : nlohmann::json(utc_now())},
                          {"payload", payload}};
    *sink << env.dump(2) << '\n';
  } else {
    write_csv(*sink, res.table);
    err << res.stderr_summary;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement potentials of single-qubit optical states", "entpot"};
  app.require_subcommand(1);

  Common common;
  StateFlags state;
  PipelineFlags pipe;

  auto* measures = app.add_subcommand("measures", "N, C, E_F and E_R of a two-qubit state");
  add_common(measures, common);
  measures->add_option("--family", state.family, "State family")
      ->required()
      ->check(CLI::IsMember({"pure", "horodecki", "gh", "bell", "werner", "bs-output"}));
  measures->add_option("--p", state.p, "Mixing parameter");
  measures->add_option("--q", state.q, "Balance parameter");
  measures->add_option("--x", state.x, "Coherence magnitude (bs-output)");
  measures->add_option("--phi", state.phi, "Coherence phase (bs-output)");
  measures->add_option("--n", state.n, "Negativity (werner)");
  measures->add_option("--lambda", state.lambda, "Bell weights a,b,c,d")->delimiter(',')->expected(4);
  measures->add_option("--theta-deg", state.theta_deg, "Beam-splitter angle (bs-output)");

  auto* potentials = app.add_subcommand("potentials", "NP, CP and REEP of a single-qubit state");
  add_common(potentials, common);
  potentials->add_option("--p", state.p, "Mixing parameter")->required();
  potentials->add_option("--x", state.x, "Coherence magnitude");
  potentials->add_option("--phi", state.phi, "Coherence phase");
  add_pipeline(potentials, pipe);

  std::string kind, plane;
  int samples = 101;
  double family_p = 0.8;
  auto* curve = app.add_subcommand("curve", "Sample a boundary family");
  add_common(curve, common);
  curve->add_option("--kind", kind, "pure|horodecki|bell_diagonal|rho_A|rho_Z|gh_fixed_p")
      ->required();
  curve->add_option("--plane", plane, "n-c|ree-c|ree-n")->required();
  curve->add_option("--n", samples, "Number of samples")->check(CLI::Range(2, 1000000));
  curve->add_option("--p", family_p, "Fixed p for gh_fixed_p");

  double sp_tol = 1e-4;
  auto* special = app.add_subcommand("special-points", "Crossing and merging points");
  add_common(special, common);
  special->add_option("--tol", sp_tol, "Bisection width in N")->check(CLI::PositiveNumber);

  std::size_t scan_n = 1500;
  int envelope_samples = 201;
  bool no_containment = false;
  unsigned threads = 0;
  auto* scan = app.add_subcommand("scan", "Monte-Carlo scan of single-qubit states");
  add_common(scan, common);
  scan->add_option("--n", scan_n, "Number of states")->check(CLI::PositiveNumber);
  scan->add_option("--envelope-samples", envelope_samples, "Envelope curve samples")
      ->check(CLI::Range(2, 100000));
  scan->add_flag("--no-containment", no_containment, "Skip the containment report");
  scan->add_option("--threads", threads, "Worker threads (0 = all cores)");

  double channel_q = 0.5;
  auto* channel = app.add_subcommand("channel", "Damping of sqrt(q)|01> + sqrt(1-q)|10>");
  add_common(channel, common);
  channel->add_option("--q", channel_q, "Balance parameter");
  channel->add_option("--pdc", pipe.pdc, "Phase damping kappa1,kappa2")->delimiter(',')->expected(2);
  channel->add_option("--adc", pipe.adc, "Amplitude damping gamma1,gamma2")
      ->delimiter(',')
      ->expected(2);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Result res;
    CLI::App* sub = nullptr;
    std::string command;
    if (measures->parsed()) {
      sub = measures;
      res = cmd_measures(state, common);
    } else if (potentials->parsed()) {
      sub = potentials;
      res = cmd_potentials(state, pipe, common);
    } else if (curve->parsed()) {
      sub = curve;
      res = cmd_curve(kind, plane, samples, family_p, common);
    } else if (special->parsed()) {
      sub = special;
      res = cmd_special_points(sp_tol, common);
    } else if (scan->parsed()) {
      sub = scan;
      res = cmd_scan(scan_n, envelope_samples, !no_containment, threads, common);
    } else {
      sub = channel;
      res = cmd_channel(channel_q, pipe, common);
    }
    emit(out, err, common, sub->get_name(), sub, res);
    if (!res.converged) {
      err << "warning: REE solver did not converge\n";
      return kNotConverged;
    }
    return kOk;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const entpot::Error& e) {
    err << "error: " << e.what() << '\n';
    const bool numerical = e.code() == ErrorCode::NotConverged ||
                           e.code() == ErrorCode::RootNotBracketed ||
                           e.code() == ErrorCode::SingularState;
    return numerical ? kNotConverged : kUsage;
  }
}

}  // namespace entpot::cli
