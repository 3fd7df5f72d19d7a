#include "diffortho/cli.hpp"

#include "diffortho/serialize.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace diffortho {

namespace {

namespace fs = std::filesystem;

struct RunConfig {
  unsigned precision = kDefaultPrecisionBits;
  std::string case_name;
  std::string alpha = "0";
  std::string rho = "1";
  std::string spec_file;
  std::vector<std::size_t> degrees;
  std::string zeta;
  std::string out_dir = ".";
  std::uint64_t seed = 1;

  // subcommand specific
  std::vector<std::string> points;
  std::vector<double> window;
  double step = 0.02;
  bool derivative = false;
  std::vector<double> field_window;
  double field_step = 0.1;
};

unsigned env_precision() {
  if (const char* s = std::getenv(kPrecisionEnv)) {
    char* end = nullptr;
    unsigned long v = std::strtoul(s, &end, 10);
    if (end == s || *end != '\0') throw Error(ErrorCode::Shape, std::string(kPrecisionEnv) + " is not an integer");
    return static_cast<unsigned>(v);
  }
  return kDefaultPrecisionBits;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  return parts;
}

MeasureSpec load_spec(const RunConfig& cfg) {
  if (!cfg.spec_file.empty()) {
    std::ifstream in(cfg.spec_file);
    if (!in) throw Error(ErrorCode::Shape, "cannot read " + cfg.spec_file);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_spec_json(ss.str());
  }
  if (cfg.case_name.empty()) throw Error(ErrorCode::Shape, "--case or --spec is required");
  std::vector<ExtScalar> rho;
  for (const auto& part : split(cfg.rho, ',')) rho.push_back(parse_scalar(part));
  MeasureSpec spec = make_spec(parse_case(cfg.case_name, parse_scalar(cfg.alpha)), rho);
  validate_spec(spec);
  return spec;
}

std::vector<std::size_t> degrees(const RunConfig& cfg, const MeasureSpec& spec) {
  if (cfg.degrees.empty()) throw Error(ErrorCode::Shape, "--n is required");
  for (std::size_t n : cfg.degrees) {
    if (n <= spec.m()) throw Error(ErrorCode::Shape, "degree " + std::to_string(n) + " must exceed deg rho");
  }
  return cfg.degrees;
}

std::optional<ExtComplex> zeta_of(const RunConfig& cfg) {
  if (cfg.zeta.empty()) return std::nullopt;
  return parse_complex(cfg.zeta);
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& content, std::ostream& out) {
  fs::path p = fs::path(cfg.out_dir) / name;
  write_atomic(p, content);
  out << "wrote " << p.string() << "\n";
}

DiffOrthoPoly build(const MeasureSpec& spec, std::size_t n, const std::optional<ExtComplex>& zeta) {
  if (!zeta) return qhat(spec, n);
  // zeta is given in normalised coordinates; the root of Q_n sits at c_n zeta.
  return q_with_root(spec, n, *zeta * scaling_constant(spec.basis, n));
}

void run_construct(const RunConfig& cfg, std::ostream& out) {
  const MeasureSpec spec = load_spec(cfg);
  const auto zeta = zeta_of(cfg);
  for (std::size_t n : degrees(cfg, spec)) {
    const DiffOrthoPoly d = build(spec, n, zeta);
    emit(cfg, (zeta ? "q_" : "qhat_") + std::to_string(n) + ".json", poly_json(d), out);
  }
}

void run_verify(const RunConfig& cfg, std::ostream& out) {
  const MeasureSpec spec = load_spec(cfg);
  const auto ns = degrees(cfg, spec);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  std::ostringstream os;
  os << "check,n,k,value\n";
  ExtScalar worst_eigen = 0, worst_diff = 0;
  for (std::size_t n : ns) {
    const DiffOrthoPoly d = qhat(spec, n);
    const auto diff = diff_orthogonality_residuals(d, n - 1);
    for (std::size_t k = 0; k < diff.size(); ++k) {
      os << "diff_orthogonality," << n << ',' << k << ',' << to_decimal(diff[k]) << '\n';
      worst_diff = std::max(worst_diff, diff[k]);
    }
    const ExtScalar eig = eigen_residual(d);
    worst_eigen = std::max(worst_eigen, eig);
    os << "eigen_identity," << n << ",," << to_decimal(eig) << '\n';

    // Pointwise check of L[Qhat_n] = lambda_n P_n at seeded random points.
    const BasisPoly lq = apply_operator(spec.basis, d.qhat);
    const ExtScalar lambda(classical_constants(spec.basis, n).lambda);
    const ExtScalar cn = scaling_constant(spec.basis, n);
    for (std::size_t k = 0; k < 3; ++k) {
      double t = unit(rng);
      ExtScalar x = spec.basis.is_laguerre() ? ExtScalar((t + 1) / 2) * cn : ExtScalar(t) * cn;
      ExtScalar lhs = eval_clenshaw(lq, x);
      ExtScalar rhs = lambda * eval_clenshaw(d.pn, x);
      ExtScalar denom = max(abs(lhs), abs(rhs));
      os << "pointwise," << n << ',' << k << ',' << to_decimal(denom == 0 ? ExtScalar(0) : abs(lhs - rhs) / denom)
         << '\n';
    }

    const auto quasi = quasi_orthogonality_residuals(spec, n);
    for (std::size_t k = 0; k < quasi.size(); ++k) {
      os << "quasi_orthogonality," << n << ',' << k << ',' << to_decimal(quasi[k]) << '\n';
    }
  }
  for (const auto& row : coeff_growth_report(spec, ns)) {
    os << "coeff_growth," << row.n << ',' << row.k << ',' << to_decimal(row.ratio) << '\n';
  }
  emit(cfg, "verify.csv", os.str(), out);
  out << "max eigen residual " << worst_eigen.str(3) << ", max diff-orthogonality residual " << worst_diff.str(3)
      << "\n";
}

void run_zeros(const RunConfig& cfg, std::ostream& out) {
  const MeasureSpec spec = load_spec(cfg);
  const auto zeta = zeta_of(cfg);
  std::ostringstream stats;
  stats << "n,real_count,real_in_support,max_imag,min_real_gap,largest_abs,ks\n";
  for (std::size_t n : degrees(cfg, spec)) {
    const DiffOrthoPoly d = build(spec, n, zeta);
    const ExtScalar cn = scaling_constant(spec.basis, n);
    ZeroCloud raw = cfg.derivative ? roots(derivative_in_basis(d.qhat)) : roots(d.qhat, d.q_const);
    raw.n = n;
    const ZeroCloud zc = normalized(raw, cn);
    const ZeroStats st = zero_stats(raw, spec.basis);
    const double ks = ks_distance(zc, LimitDensity{spec.basis});
    std::ostringstream ksdig;
    ksdig.precision(17);
    ksdig << ks;
    stats << n << ',' << st.real_count << ',' << st.real_in_support << ',' << to_decimal(st.max_imag) << ','
          << to_decimal(st.min_real_gap) << ',' << to_decimal(st.largest_abs) << ',' << ksdig.str() << '\n';
    emit(cfg, (cfg.derivative ? "crit_" : "zeros_") + std::to_string(n) + ".csv", zeros_csv(zc), out);
    out << "n=" << n << " real " << st.real_count << "/" << raw.zeros.size() << " ks " << ks << "\n";
  }
  emit(cfg, cfg.derivative ? "crit_stats.csv" : "zeros_stats.csv", stats.str(), out);
}

std::vector<ExtComplex> parse_points(const RunConfig& cfg) {
  if (cfg.points.empty()) throw Error(ErrorCode::Shape, "--z is required");
  std::vector<ExtComplex> zs;
  for (const auto& s : cfg.points) zs.push_back(parse_complex(s));
  return zs;
}

void run_asympt(const RunConfig& cfg, std::ostream& out) {
  const MeasureSpec spec = load_spec(cfg);
  const auto ns = degrees(cfg, spec);
  const auto zs = parse_points(cfg);
  emit(cfg, "nth_root.csv", nth_root_csv(nth_root_report(spec, zs, ns)), out);
  emit(cfg, "ratio.csv", ratio_csv(ratio_report(spec, zs, ns, zeta_of(cfg))), out);
}

Window window_of(const std::vector<double>& w) {
  if (w.size() != 4) throw Error(ErrorCode::Shape, "window needs xmin,xmax,ymin,ymax");
  if (!(w[0] < w[1] && w[2] < w[3])) throw Error(ErrorCode::Shape, "empty window");
  return {w[0], w[1], w[2], w[3]};
}

void run_curve(const RunConfig& cfg, std::ostream& out) {
  if (cfg.case_name.empty()) throw Error(ErrorCode::Shape, "--case is required");
  const Case c = parse_case(cfg.case_name, parse_scalar(cfg.alpha));
  const auto zeta = zeta_of(cfg);
  if (!zeta) throw Error(ErrorCode::Shape, "--zeta is required");
  if (!(cfg.step > 0)) throw Error(ErrorCode::Shape, "--step must be positive");
  const Window w = cfg.window.empty() ? default_window(c, *zeta) : window_of(cfg.window);
  const LevelCurve curve = trace_level_curve(c, *zeta, w, cfg.step);

  // Independent membership pass over the emitted vertices.
  const double target = log_capital_psi(c, zeta->to_complex());
  double worst = 0;
  for (const auto& line : curve.polylines) {
    for (const auto& v : line) worst = std::max(worst, std::abs(log_capital_psi(c, v) - target));
  }
  if (!(worst <= curve.tolerance)) throw Error(ErrorCode::Internal, "curve vertex fails the level tolerance");
  emit(cfg, "curve.csv", curve_csv(curve), out);
  out << curve.polylines.size() << " polylines, " << curve.vertex_count() << " vertices, max |G| " << worst
      << " <= " << curve.tolerance << "\n";
}

void run_flow(const RunConfig& cfg, std::ostream& out) {
  const MeasureSpec spec = load_spec(cfg);
  for (std::size_t n : degrees(cfg, spec)) {
    const StagnationReport rep = stagnation_verify(spec, n);
    std::ostringstream os;
    os << "index,x_re,x_im,residual,recovery_distance\n";
    for (std::size_t k = 0; k < rep.pn_zeros.size(); ++k) {
      os << k << ',' << to_decimal(rep.pn_zeros[k].re) << ',' << to_decimal(rep.pn_zeros[k].im) << ','
         << to_decimal(rep.residuals[k]) << ',' << to_decimal(rep.recovery_distance[k]) << '\n';
    }
    emit(cfg, "stagnation_" + std::to_string(n) + ".csv", os.str(), out);
    emit(cfg, "flow_" + std::to_string(n) + ".json", flow_json(rep.system), out);
    if (!cfg.field_window.empty()) {
      const Window w = window_of(cfg.field_window);
      emit(cfg, "field_" + std::to_string(n) + ".csv",
           field_csv(sample_field(rep.system, w.xmin, w.xmax, w.ymin, w.ymax, cfg.field_step)), out);
    }
    out << "n=" << n << " max residual " << rep.max_residual.str(3) << ", recovered " << rep.recovered << "/"
        << rep.pn_zeros.size() << ", max distance " << rep.max_recovery_distance.str(3) << "\n";
  }
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Measure:
    case ErrorCode::Shape:
    case ErrorCode::Basis:
    case ErrorCode::Branch:
    case ErrorCode::Region:
      return kExitInput;
    case ErrorCode::NoConv:
    case ErrorCode::Eig:
    case ErrorCode::Singular:
    case ErrorCode::Range:
    case ErrorCode::Empty:
    case ErrorCode::Collide:
    case ErrorCode::Pole:
    case ErrorCode::Degenerate:
      return kExitNumeric;
    case ErrorCode::Internal:
      return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Differentially orthogonal polynomials for Laguerre and Hermite operators", "diffortho"};
  app.require_subcommand(1);

  std::optional<unsigned> precision;
  auto common = [&](CLI::App* sub, bool needs_spec) {
    sub->add_option("--precision", precision, "working precision in bits (default $" + std::string(kPrecisionEnv) +
                                                  " or 256)");
    sub->add_option("--out", cfg.out_dir, "output directory");
    sub->add_option("--case", cfg.case_name, "laguerre | hermite");
    sub->add_option("--alpha", cfg.alpha, "Laguerre parameter (> -1)");
    if (needs_spec) {
      sub->add_option("--rho", cfg.rho, "rho coefficients low to high, comma separated");
      sub->add_option("--spec", cfg.spec_file, "measure spec JSON file");
      sub->add_option("--n", cfg.degrees, "degrees")->delimiter(',');
      sub->add_option("--seed", cfg.seed, "seed for random test points");
    }
    sub->add_option("--zeta", cfg.zeta, "root of Q_n in normalised coordinates (z / c_n), as a+bi");
  };

  auto* construct = app.add_subcommand("construct", "emit Qhat_n (or Q_n with --zeta) as JSON");
  common(construct, true);
  auto* verify = app.add_subcommand("verify", "residual tables for the defining identities");
  common(verify, true);
  auto* zeros = app.add_subcommand("zeros", "zeros, statistics and KS distance");
  common(zeros, true);
  zeros->add_flag("--derivative", cfg.derivative, "zeros of Qhat_n' instead");
  auto* asympt = app.add_subcommand("asympt", "nth-root and ratio tables");
  common(asympt, true);
  asympt->add_option("--z", cfg.points, "normalised test points")->delimiter(',');
  auto* curve = app.add_subcommand("curve", "level curve E(zeta) as polylines");
  common(curve, false);
  curve->add_option("--window", cfg.window, "xmin,xmax,ymin,ymax")->delimiter(',')->expected(4);
  curve->add_option("--step", cfg.step, "grid step");
  auto* flow = app.add_subcommand("flow", "stagnation points of the flow at the zeros of Qhat_n");
  common(flow, true);
  flow->add_option("--field-window", cfg.field_window, "xmin,xmax,ymin,ymax for field samples")
      ->delimiter(',')
      ->expected(4);
  flow->add_option("--field-step", cfg.field_step, "field grid step");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: E_SHAPE: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    cfg.precision = precision ? *precision : env_precision();
    if (cfg.precision < 64) throw Error(ErrorCode::Shape, "precision must be at least 64 bits");
    PrecisionGuard guard(cfg.precision);
    if (*construct) run_construct(cfg, out);
    else if (*verify) run_verify(cfg, out);
    else if (*zeros) run_zeros(cfg, out);
    else if (*asympt) run_asympt(cfg, out);
    else if (*curve) run_curve(cfg, out);
    else if (*flow) run_flow(cfg, out);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    err << "error: E_INTERNAL: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace diffortho
