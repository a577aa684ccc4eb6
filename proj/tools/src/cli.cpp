#include "bosent/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "bosent/fock_oracle.hpp"
#include "bosent/oscillator_pair.hpp"

namespace bosent::cli {

namespace {

using json = nlohmann::json;

ComplexVector parse_row(const json& j, const char* key, std::size_t index) {
  const std::string where = fmt::format("rows[{}].{}", index, key);
  if (!j.contains(key) || !j.at(key).is_array())
    throw ParseError(where + " must be an array of [re, im] pairs");
  ComplexVector out;
  for (const auto& e : j.at(key)) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
      throw ParseError(where + " entries must be [re, im] number pairs");
    out.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return out;
}

json encode_row(const ComplexVector& v) {
  json a = json::array();
  for (const auto& z : v) a.push_back({z.real(), z.imag()});
  return a;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Library errors split into bad input (1) and physics-domain failures (2).
int report_error(const std::exception& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const StructuralError*>(&e) ||
      dynamic_cast<const ResourceError*>(&e))
    return kUsage;
  if (dynamic_cast<const bosent::Error*>(&e)) return kPhysics;
  return kUsage;
}

int cmd_validate(const std::string& path, double tol, std::ostream& out) {
  const SystemFile sys = parse_system(read_file(path));
  const ValidationReport report = validate_rows(sys.rows, tol);
  for (const auto& c : report.checks) {
    out << fmt::format("{:<20} residual {:<12.6g} {}\n", c.name, std::abs(c.residual),
                       c.passed ? "pass" : "FAIL");
  }
  out << fmt::format("tolerance {:g}: {}\n", tol, report.passed() ? "valid" : "invalid");
  return report.passed() ? kSuccess : kPhysics;
}

int cmd_entangle(const PairParams& p, std::ostream& out) {
  const auto e = evaluate_pair(p.omega(), p.temperature());
  out << fmt::format(R"({{"omega": {}, "temperature": {}, "delta_squared": {}, "Delta": {}, "entanglement_ebits": {}}})",
                     format_real(p.omega()), format_real(p.temperature().value()),
                     format_real(e.delta_squared), format_real(e.formation.delta),
                     format_real(e.formation.ebits))
      << '\n';
  return kSuccess;
}

struct SweepArgs {
  double omega_min = 1.0, omega_max = 5.0;
  std::size_t omega_steps = 2;
  double t_min = 0.0, t_max = 2.0;
  std::size_t t_steps = 2;
  std::string out;
  unsigned jobs = 1;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  const auto omegas = linspace(a.omega_min, a.omega_max, a.omega_steps);
  const auto temps = linspace(a.t_min, a.t_max, a.t_steps);
  const auto rows = sweep(omegas, temps, a.jobs);

  std::string text = "omega,temperature,delta_squared,entanglement_ebits\n";
  for (const auto& r : rows) {
    text += fmt::format("{},{},{},{}\n", format_real(r.omega), format_real(r.temperature),
                        format_real(r.delta_squared), format_real(r.entanglement_ebits));
  }
  std::ofstream file(a.out, std::ios::binary | std::ios::trunc);
  if (!file) throw ParseError("cannot write " + a.out);
  file << text;
  file.close();
  if (!file) throw ParseError("write to " + a.out + " failed");
  out << fmt::format("wrote {} rows to {}\n", rows.size(), a.out);
  return kSuccess;
}

FockCutoff parse_cutoff(const std::string& s, const ModeSpectrum& freqs, Temperature t) {
  if (s == "auto") return FockCutoff::automatic(freqs, t);
  int n = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
  if (ec != std::errc{} || ptr != s.data() + s.size() || n < 1)
    throw ParseError("--cutoff must be a positive integer or 'auto', got '" + s + "'");
  if (n > FockCutoff::kMaxLevel)
    throw ParseError(fmt::format("--cutoff {} exceeds the limit {}", n, FockCutoff::kMaxLevel));
  return FockCutoff(n);
}

int cmd_oracle_check(double omega, double t, const std::string& cutoff_arg, std::ostream& out) {
  const Temperature temp(t);
  const auto sys = build_pair(PairParams::from_omega(omega, temp));
  const FockCutoff cutoff = parse_cutoff(cutoff_arg, sys.spectrum, temp);

  const auto exact = pair_covariance(sys.rows, sys.spectrum, temp);
  const auto oracle = oracle_pair_covariance(sys.rows, sys.spectrum, temp, cutoff);
  const double diff = oracle.covariance.max_abs_difference(exact);
  // both routes round independently
  const double slack = 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, exact.n1);
  const bool ok = diff <= oracle.error_bound + slack;

  out << fmt::format("cutoff {}\n", cutoff.nmax());
  out << fmt::format("max discrepancy {:.6e}\n", diff);
  out << fmt::format("error bound {:.6e}\n", oracle.error_bound);
  out << fmt::format("structure residual {:.3e}\n", oracle.structure_residual);
  out << (ok ? "within bound\n" : "EXCEEDS bound\n");
  return ok ? kSuccess : kPhysics;
}

} // namespace

std::string format_real(double v) { return fmt::format("{:.17g}", v); }

SystemFile parse_system(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed system file: ") + e.what());
  }
  if (!j.is_object() || !j.contains("omegas") || !j.at("omegas").is_array())
    throw ParseError("system file needs an 'omegas' array");
  std::vector<double> omegas;
  for (const auto& w : j.at("omegas")) {
    if (!w.is_number()) throw ParseError("'omegas' entries must be numbers");
    omegas.push_back(w.get<double>());
  }
  if (!j.contains("rows") || !j.at("rows").is_array() || j.at("rows").size() != 2)
    throw ParseError("system file needs exactly two 'rows'");

  TransformRows rows;
  rows.s_k = parse_row(j["rows"][0], "S", 0);
  rows.t_k = parse_row(j["rows"][0], "T", 0);
  rows.s_l = parse_row(j["rows"][1], "S", 1);
  rows.t_l = parse_row(j["rows"][1], "T", 1);
  for (const auto* r : {&rows.s_k, &rows.t_k, &rows.s_l, &rows.t_l}) {
    if (r->size() != omegas.size())
      throw ParseError(fmt::format("row length {} does not match {} frequencies", r->size(),
                                   omegas.size()));
  }
  try {
    return {ModeSpectrum(std::move(omegas)), std::move(rows)};
  } catch (const bosent::Error& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_system(const ModeSpectrum& spectrum, const TransformRows& rows) {
  json j;
  j["omegas"] = std::vector<double>(spectrum.frequencies().begin(), spectrum.frequencies().end());
  j["rows"] = json::array({json{{"S", encode_row(rows.s_k)}, {"T", encode_row(rows.t_k)}},
                           json{{"S", encode_row(rows.s_l)}, {"T", encode_row(rows.t_l)}}});
  return j.dump(2) + '\n';
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Thermal entanglement of coupled bosonic modes", "bosent"};
  app.require_subcommand(1);

  std::string path;
  double tol = kDefaultRowTolerance;
  auto* validate = app.add_subcommand("validate", "Check the commutation relations of a system file");
  validate->add_option("file", path, "System file (JSON)")->required();
  validate->add_option("--tol", tol, "Residual tolerance")->check(CLI::PositiveNumber);

  double omega = 0.0, omega0 = 0.0, temperature = 0.0;
  auto* entangle = app.add_subcommand("entangle", "Entanglement of the coupled oscillator pair");
  auto* opt_omega = entangle->add_option("--omega", omega, "Normal-mode frequency ratio");
  auto* opt_omega0 = entangle->add_option("--omega0", omega0, "Coupling frequency");
  entangle->add_option("--temperature", temperature, "Temperature")->required();

  double t_omega = 0.0, t_tol = 1e-8;
  auto* threshold = app.add_subcommand("threshold", "Temperature above which entanglement vanishes");
  threshold->add_option("--omega", t_omega, "Normal-mode frequency ratio")->required();
  threshold->add_option("--tol", t_tol, "Bisection tolerance");

  SweepArgs sw;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate entanglement over an (omega, T) grid");
  sweep_cmd->add_option("--omega-min", sw.omega_min)->required();
  sweep_cmd->add_option("--omega-max", sw.omega_max)->required();
  sweep_cmd->add_option("--omega-steps", sw.omega_steps)->required();
  sweep_cmd->add_option("--t-min", sw.t_min)->required();
  sweep_cmd->add_option("--t-max", sw.t_max)->required();
  sweep_cmd->add_option("--t-steps", sw.t_steps)->required();
  sweep_cmd->add_option("--out", sw.out, "CSV output path")->required();
  sweep_cmd->add_option("--jobs", sw.jobs, "Worker threads")->check(CLI::PositiveNumber);

  double o_omega = 0.0, o_temp = 0.0;
  std::string cutoff = "auto";
  auto* oracle = app.add_subcommand("oracle-check", "Compare the covariance with a truncated-Fock evaluation");
  oracle->add_option("--omega", o_omega)->required();
  oracle->add_option("--temperature", o_temp)->required();
  oracle->add_option("--cutoff", cutoff, "Fock levels per mode, or 'auto'");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*validate) return cmd_validate(path, tol, out);
    if (*entangle) {
      if (opt_omega->count() + opt_omega0->count() != 1) {
        err << "error: entangle needs exactly one of --omega and --omega0\n";
        return kUsage;
      }
      const Temperature t(temperature);
      return cmd_entangle(*opt_omega ? PairParams::from_omega(omega, t)
                                     : PairParams::from_omega0(omega0, t),
                          out);
    }
    if (*threshold) {
      out << fmt::format("{:.12g}\n", threshold_temperature(t_omega, t_tol));
      return kSuccess;
    }
    if (*sweep_cmd) return cmd_sweep(sw, out);
    if (*oracle) return cmd_oracle_check(o_omega, o_temp, cutoff, out);
  } catch (const std::exception& e) {
    return report_error(e, err);
  }
  return kUsage;
}

} // namespace bosent::cli
