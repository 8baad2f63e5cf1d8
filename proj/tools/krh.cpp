// krh: Kirkwood-Rihaczek phase-space slices of hydrogen states.

#include "krh/export.hpp"
#include "krh/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <array>
#include <cmath>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

using namespace krh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StateArgs {
  int n = 1;
  int l = 0;
  int m = 0;
  double z = 1.0;

  void add_to(CLI::App* app) {
    app->add_option("--n", n, "principal quantum number")->capture_default_str();
    app->add_option("--l", l, "orbital quantum number")->capture_default_str();
    app->add_option("--m", m, "magnetic quantum number")->capture_default_str();
    app->add_option("--z", z, "nuclear charge")->capture_default_str();
  }
};

struct OutputArgs {
  std::string out;
  std::string format = "csv";
  bool reproducible = false;

  void add_to(CLI::App* app, const std::vector<std::string>& formats) {
    app->add_option("--out", out, "output file (default: stdout)");
    app->add_option("--format", format, "output format")->check(CLI::IsMember(formats))->capture_default_str();
    app->add_flag("--reproducible", reproducible, "omit the creation timestamp");
  }

  ExportOptions options() const { return {reproducible}; }

  template <class Writer> void emit(Writer&& writer) const {
    if (out.empty()) {
      writer(std::cout);
      std::cout.flush();
    } else {
      write_file(out, writer);
    }
  }
};

struct SliceArgs {
  StateArgs state;
  std::optional<double> theta, phi, theta_p, phi_p;
  std::optional<double> r_min, r_max, p_min, p_max;
  int n_r = 256;
  int n_p = 256;
  std::string quantity = "abs";
  std::string convention = "marginal_exact";
  bool paper_scale = false;

  void add_to(CLI::App* app, bool with_quantity) {
    state.add_to(app);
    app->add_option("--theta", theta, "position polar angle (default pi/2)");
    app->add_option("--phi", phi, "position azimuth (default 0)");
    app->add_option("--theta-p", theta_p, "momentum polar angle (default pi/2)");
    app->add_option("--phi-p", phi_p, "momentum azimuth (default 0)");
    app->add_option("--rmin", r_min, "lower radius (default 0)");
    app->add_option("--rmax", r_max, "upper radius (default 5n^2/z)");
    app->add_option("--pmin", p_min, "lower momentum (default 0)");
    app->add_option("--pmax", p_max, "upper momentum (default 4z/n)");
    app->add_option("--nr", n_r, "radial nodes")->capture_default_str();
    app->add_option("--np", n_p, "momentum nodes")->capture_default_str();
    if (with_quantity)
      app->add_option("--quantity", quantity, "re, im, abs, abs2 or complex")->capture_default_str();
    app->add_option("--convention", convention, "marginal_exact or paper_figure")->capture_default_str();
    app->add_flag("--paper-scale", paper_scale, "multiply values by (2pi)^3");
  }

  bool explicit_angles() const { return theta || phi || theta_p || phi_p; }

  SliceSpec spec() const {
    const QuantumNumbers qn(state.n, state.l, state.m);
    const NuclearCharge z(state.z);
    SliceSpec s = SliceSpec::defaults_for(qn, z);
    s.angles.theta = theta.value_or(s.angles.theta);
    s.angles.phi = phi.value_or(s.angles.phi);
    s.angles.theta_p = theta_p.value_or(s.angles.theta_p);
    s.angles.phi_p = phi_p.value_or(s.angles.phi_p);
    s.r_min = r_min.value_or(s.r_min);
    s.r_max = r_max.value_or(s.r_max);
    s.p_min = p_min.value_or(s.p_min);
    s.p_max = p_max.value_or(s.p_max);
    s.n_r = n_r;
    s.n_p = n_p;
    s.quantity = parse_quantity(quantity);
    s.convention = parse_convention(convention);
    s.paper_scale = paper_scale;
    s.validate();

    if (!explicit_angles() && slice_angular_weight(s) < 1e-12) {
      const auto a = suggested_angles(qn);
      std::ostringstream msg;
      msg << qn.label() << " vanishes identically at the default angles theta=theta_p=pi/2; rerun with e.g. "
          << "--theta " << format_double(a.theta) << " --theta-p " << format_double(a.theta_p)
          << " (explicit angles are accepted even if the slice is zero)";
      throw UsageError(msg.str());
    }
    return s;
  }
};

void print_warnings(const SliceResult& slice) {
  for (const auto& w : slice.warnings) std::cerr << "warning: " << w << '\n';
}

int run_kr_slice(const SliceArgs& args, const OutputArgs& output) {
  const auto slice = sample_slice(args.spec());
  print_warnings(slice);
  const auto format = parse_format(output.format);
  output.emit([&](std::ostream& out) {
    if (format == ExportFormat::Csv)
      write_slice_csv(out, slice, output.options());
    else
      write_slice_json(out, slice, output.options());
  });
  return kExitOk;
}

int run_extrema(const SliceArgs& args, const OutputArgs& output, bool refine) {
  const auto slice = sample_slice(args.spec());
  print_warnings(slice);
  ExtremaOptions options;
  options.analytic_refine = refine;
  const auto extrema = find_extrema(slice, options);
  const auto format = parse_format(output.format);
  output.emit([&](std::ostream& out) {
    if (format == ExportFormat::Csv)
      write_extrema_csv(out, slice, extrema, output.options());
    else
      write_extrema_json(out, slice, extrema, output.options());
  });
  return kExitOk;
}

struct WavefnArgs {
  StateArgs state;
  double theta = kPi / 2;
  double phi = 0.0;
  std::optional<double> r_max, p_max;
  int points = 201;
};

int run_wavefn(const WavefnArgs& args, const OutputArgs& output) {
  const QuantumNumbers qn(args.state.n, args.state.l, args.state.m);
  const NuclearCharge z(args.state.z);
  const int n = qn.n();
  const double r_max = args.r_max.value_or(5.0 * n * n / z.value());
  const double p_max = args.p_max.value_or(4.0 * z.value() / n);
  if (args.points < 2) throw UsageError("--points must be at least 2");
  if (!(r_max > 0.0) || !(p_max > 0.0)) throw UsageError("--rmax and --pmax must be positive");

  std::vector<std::array<double, 8>> rows;
  rows.reserve(args.points);
  for (int i = 0; i < args.points; ++i) {
    const double r = r_max * i / (args.points - 1);
    const double p = p_max * i / (args.points - 1);
    const Complex psi = psi_position(qn, z, {r, args.theta, args.phi});
    const Complex psit = psi_momentum(qn, z, {p, args.theta, args.phi});
    rows.push_back({r, radial_position(qn, z, r), p, radial_momentum(qn, z, p), psi.real(), psi.imag(),
                    psit.real(), psit.imag()});
  }
  static constexpr std::array<const char*, 8> columns{"r", "R", "p", "F", "psi_re", "psi_im", "psit_re", "psit_im"};

  Metadata md;
  md.emplace_back("tool", std::string(kToolVersion));
  md.emplace_back("state", qn.label());
  md.emplace_back("z", format_double(z.value()));
  md.emplace_back("theta", format_double(args.theta));
  md.emplace_back("phi", format_double(args.phi));

  const auto format = parse_format(output.format);
  output.emit([&](std::ostream& out) {
    if (format == ExportFormat::Csv) {
      for (const auto& [k, v] : md) out << "# " << k << '=' << v << '\n';
      for (std::size_t c = 0; c < columns.size(); ++c) out << (c ? "," : "") << columns[c];
      out << '\n';
      for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_double(row[c]);
        out << '\n';
      }
    } else {
      nlohmann::ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["kind"] = "wavefunction";
      for (const auto& [k, v] : md) doc["metadata"][k] = v;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        auto col = nlohmann::ordered_json::array();
        for (const auto& row : rows) col.push_back(row[c]);
        doc[columns[c]] = std::move(col);
      }
      out << doc.dump(1) << '\n';
    }
  });
  return kExitOk;
}

struct OneDArgs {
  std::string input;
  std::optional<double> q_min, q_max;
  double p_min = -5.0;
  double p_max = 5.0;
  int n_q = 101;
  int n_p = 101;
  bool dual_grid = false;
};

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

int run_one_d(const OneDArgs& args, const OutputArgs& output, bool wigner) {
  const auto psi = TabulatedWavefunction1D::load_csv(args.input);
  const double q_min = args.q_min.value_or(psi.q_min());
  const double q_max = args.q_max.value_or(psi.q_max());
  if (args.n_q < 1 || args.n_p < 1) throw UsageError("--nq and --np must be positive");
  if (!psi.contains(q_min) || !psi.contains(q_max))
    throw UsageError("q range lies outside the tabulated support [" + format_double(psi.q_min()) + ", " +
                     format_double(psi.q_max()) + "]");
  const auto qs = linspace(q_min, q_max, args.n_q);
  const auto ps = args.dual_grid ? (wigner ? wigner_dual_momentum_grid(psi) : kr_dual_momentum_grid(psi))
                                 : linspace(args.p_min, args.p_max, args.n_p);

  Metadata md;
  md.emplace_back("tool", std::string(kToolVersion));
  md.emplace_back("distribution", wigner ? "wigner" : "kirkwood_rihaczek");
  md.emplace_back("input", args.input);
  md.emplace_back("samples", std::to_string(psi.size()));
  md.emplace_back("spacing", format_double(psi.spacing()));
  md.emplace_back("p_grid", args.dual_grid ? "dual" : "uniform");

  const auto format = parse_format(output.format);
  output.emit([&](std::ostream& out) {
    if (format == ExportFormat::Csv) {
      for (const auto& [k, v] : md) out << "# " << k << '=' << v << '\n';
      out << (wigner ? "q,p,value\n" : "q,p,re,im\n");
      for (double q : qs) {
        for (double p : ps) {
          out << format_double(q) << ',' << format_double(p) << ',';
          if (wigner) {
            out << format_double(wigner_1d(psi, q, p)) << '\n';
          } else {
            const Complex k = kr_1d(psi, q, p);
            out << format_double(k.real()) << ',' << format_double(k.imag()) << '\n';
          }
        }
      }
    } else {
      nlohmann::ordered_json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["kind"] = wigner ? "wigner_1d" : "kr_1d";
      for (const auto& [k, v] : md) doc["metadata"][k] = v;
      doc["q"] = qs;
      doc["p"] = ps;
      auto re = nlohmann::ordered_json::array();
      auto im = nlohmann::ordered_json::array();
      for (double q : qs) {
        auto row_re = nlohmann::ordered_json::array();
        auto row_im = nlohmann::ordered_json::array();
        for (double p : ps) {
          if (wigner) {
            row_re.push_back(wigner_1d(psi, q, p));
          } else {
            const Complex k = kr_1d(psi, q, p);
            row_re.push_back(k.real());
            row_im.push_back(k.imag());
          }
        }
        re.push_back(std::move(row_re));
        if (!wigner) im.push_back(std::move(row_im));
      }
      doc["values"] = std::move(re);
      if (!wigner) doc["imag"] = std::move(im);
      out << doc.dump(1) << '\n';
    }
  });
  return kExitOk;
}

std::map<std::string, std::string> parse_overrides(const std::vector<std::string>& items) {
  std::map<std::string, std::string> out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + item + "'");
    out[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return out;
}

int run_verify_command(int n_max, const std::vector<std::string>& overrides, const OutputArgs& output) {
  VerifyOptions options;
  options.n_max = n_max;
  try {
    options.tolerances.apply(parse_overrides(overrides));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (n_max < 1 || n_max > 10) throw UsageError("--n-max must lie in [1, 10]");

  const auto report = run_verify(options);
  output.emit([&](std::ostream& out) {
    if (output.format == "text")
      write_report_text(out, report);
    else if (output.format == "csv")
      write_report_csv(out, report, output.options());
    else
      write_report_json(out, report, output.options());
  });
  if (!output.out.empty()) std::cerr << report.checks().size() << " checks, " << report.failures() << " failed\n";
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kirkwood-Rihaczek phase-space distribution of hydrogen states"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  WavefnArgs wavefn;
  OutputArgs wavefn_out;
  auto* wavefn_cmd = app.add_subcommand("wavefn", "tabulate R_nl, F_nl, psi and its momentum transform");
  wavefn.state.add_to(wavefn_cmd);
  wavefn_cmd->add_option("--theta", wavefn.theta, "polar angle for psi")->capture_default_str();
  wavefn_cmd->add_option("--phi", wavefn.phi, "azimuth for psi")->capture_default_str();
  wavefn_cmd->add_option("--rmax", wavefn.r_max, "upper radius (default 5n^2/z)");
  wavefn_cmd->add_option("--pmax", wavefn.p_max, "upper momentum (default 4z/n)");
  wavefn_cmd->add_option("--points", wavefn.points, "samples per axis")->capture_default_str();
  wavefn_out.add_to(wavefn_cmd, {"csv", "json"});

  SliceArgs slice;
  OutputArgs slice_out;
  auto* slice_cmd = app.add_subcommand("kr-slice", "sample an (r, p) cross-section of K");
  slice.add_to(slice_cmd, true);
  slice_out.add_to(slice_cmd, {"csv", "json"});

  SliceArgs extrema;
  OutputArgs extrema_out;
  bool refine = false;
  auto* extrema_cmd = app.add_subcommand("extrema", "locate the maxima of |K| on a cross-section");
  extrema.add_to(extrema_cmd, false);
  extrema_cmd->add_flag("--refine", refine, "polish locations against the analytic |K|");
  extrema_out.add_to(extrema_cmd, {"csv", "json"});

  int n_max = 3;
  std::vector<std::string> overrides;
  OutputArgs verify_out;
  verify_out.format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "run the quadrature verification suite");
  verify_cmd->add_option("--n-max", n_max, "largest principal quantum number")->capture_default_str();
  verify_cmd->add_option("--tolerance-overrides", overrides, "key=value, e.g. marginal=1e-7");
  verify_out.add_to(verify_cmd, {"text", "csv", "json"});

  OneDArgs kr1d, wig1d;
  OutputArgs kr1d_out, wig1d_out;
  const auto add_one_d = [](CLI::App* cmd, OneDArgs& a, OutputArgs& o) {
    cmd->add_option("--input", a.input, "tabulated state, CSV columns q,re,im")->required();
    cmd->add_option("--qmin", a.q_min, "lower q (default: support start)");
    cmd->add_option("--qmax", a.q_max, "upper q (default: support end)");
    cmd->add_option("--pmin", a.p_min, "lower p")->capture_default_str();
    cmd->add_option("--pmax", a.p_max, "upper p")->capture_default_str();
    cmd->add_option("--nq", a.n_q, "q samples")->capture_default_str();
    cmd->add_option("--np", a.n_p, "p samples")->capture_default_str();
    cmd->add_flag("--dual-grid", a.dual_grid, "use the momentum grid dual to the tabulation");
    o.add_to(cmd, {"csv", "json"});
  };
  auto* kr1d_cmd = app.add_subcommand("kr1d", "one-dimensional K-R distribution of a tabulated state");
  add_one_d(kr1d_cmd, kr1d, kr1d_out);
  auto* wig1d_cmd = app.add_subcommand("wigner1d", "one-dimensional Wigner function of a tabulated state");
  add_one_d(wig1d_cmd, wig1d, wig1d_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*wavefn_cmd) return run_wavefn(wavefn, wavefn_out);
    if (*slice_cmd) return run_kr_slice(slice, slice_out);
    if (*extrema_cmd) return run_extrema(extrema, extrema_out, refine);
    if (*verify_cmd) return run_verify_command(n_max, overrides, verify_out);
    if (*kr1d_cmd) return run_one_d(kr1d, kr1d_out, false);
    if (*wig1d_cmd) return run_one_d(wig1d, wig1d_out, true);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
