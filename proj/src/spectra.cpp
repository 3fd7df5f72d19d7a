#include "diffortho/spectra.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace diffortho {

namespace mp = boost::multiprecision;

namespace {

using cd = std::complex<double>;

// Diagonal similarity scaling (radix 2) so rows and columns have comparable norms.
template <class Mat>
void balance(Mat& a) {
  const Eigen::Index n = a.rows();
  bool done = false;
  for (int sweep = 0; sweep < 100 && !done; ++sweep) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      const double s = c + r;
      double f = 1, g = r / 2;
      while (c < g) {
        f *= 2;
        c *= 4;
      }
      g = r * 2;
      while (c > g) {
        f /= 2;
        c /= 4;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

struct Problem {
  const BasisPoly& p;
  ExtComplex shift;
  ExtScalar scale;  // zeros are sought as z = scale * u

  ExtComplex value(const ExtComplex& z) const { return eval_clenshaw(p, z) - shift; }
};

// Eigenvalues (in u = z / scale) of the comrade matrix in orthonormal scaling.
std::vector<cd> comrade_seeds(const Problem& pr) {
  const BasisPoly& p = pr.p;
  const std::size_t n = p.degree();
  const auto nn = static_cast<Eigen::Index>(n);
  const double c = pr.scale.convert_to<double>();
  // row_j = (d_j / d_n) sqrt(tau_j / tau_n), scaled by sqrt(b_n) / c
  std::vector<cd> row(n);
  ExtScalar ratio(1);
  const ExtScalar bn = classical_recurrence(p.basis, n).second;
  const ExtScalar factor = mp::sqrt(bn) / pr.scale;
  for (std::size_t j = n; j-- > 0;) {
    ratio /= mp::sqrt(classical_recurrence(p.basis, j + 1).second);
    ExtComplex dj(p.coeffs[j]);
    if (j == 0) dj -= pr.shift;
    row[j] = (dj / p.coeffs[n] * ExtScalar(ratio * factor)).to_complex();
  }
  const bool complex_case = pr.shift.im != 0;
  auto fill = [&](auto& m) {
    for (std::size_t k = 0; k < n; ++k) {
      const auto [a, b] = classical_recurrence_double(p.basis, k);
      m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = a / c;
      if (k + 1 < n) {
        const double off = std::sqrt(classical_recurrence_double(p.basis, k + 1).second) / c;
        m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k + 1)) = off;
        m(static_cast<Eigen::Index>(k + 1), static_cast<Eigen::Index>(k)) = off;
      }
    }
  };
  std::vector<cd> out;
  if (complex_case) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(nn, nn);
    fill(m);
    for (std::size_t j = 0; j < n; ++j) m(nn - 1, static_cast<Eigen::Index>(j)) -= row[j];
    balance(m);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::Eig, "comrade eigen-solve failed");
    for (Eigen::Index i = 0; i < nn; ++i) out.push_back(es.eigenvalues()(i));
  } else {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(nn, nn);
    fill(m);
    for (std::size_t j = 0; j < n; ++j) m(nn - 1, static_cast<Eigen::Index>(j)) -= row[j].real();
    balance(m);
    Eigen::EigenSolver<Eigen::MatrixXd> es(m, false);
    if (es.info() != Eigen::Success) throw Error(ErrorCode::Eig, "comrade eigen-solve failed");
    for (Eigen::Index i = 0; i < nn; ++i) out.push_back(es.eigenvalues()(i));
  }
  return out;
}

bool newton(const Problem& pr, ExtComplex& z) {
  const ExtScalar tol = precision_tolerance(10);
  for (int it = 0; it < 40; ++it) {
    Jet2 j = eval_with_derivatives(pr.p, z);
    j.value -= pr.shift;
    if (j.d1.re == 0 && j.d1.im == 0) return j.value.re == 0 && j.value.im == 0;
    const ExtComplex dz = j.value / j.d1;
    z -= dz;
    if (abs(dz) <= tol * std::max(ExtScalar(1), abs(z))) return true;
  }
  return false;
}

bool verified(const Problem& pr, const std::vector<ExtComplex>& zs) {
  const ExtScalar res_tol = precision_fraction(2);
  const ExtScalar gap_tol = precision_fraction(4);
  const std::size_t n = pr.p.degree();
  for (const auto& z : zs) {
    if (!is_finite(z)) return false;
    const auto l = basis_values(pr.p.basis, n, z);
    // Scale by the running max of |L_j(z)|: at a zero of L_n itself the
    // plain sum |d_k L_k(z)| would vanish with the value.
    ExtScalar s = abs(pr.shift), running = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      running = std::max(running, abs(l[k]));
      s += mp::abs(pr.p.coeffs[k]) * running;
    }
    ExtComplex v;
    for (std::size_t k = 0; k <= n; ++k) v += l[k] * pr.p.coeffs[k];
    v -= pr.shift;
    if (abs(v) > res_tol * s) return false;
  }
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j)
      if (abs(zs[i] - zs[j]) <= gap_tol * std::max(ExtScalar(1), abs(zs[i]))) return false;
  return true;
}

std::vector<cd> aberth_double(const Problem& pr, std::vector<cd> u) {
  const double c = pr.scale.convert_to<double>();
  const auto e = scaled_coefficients(pr.p, pr.shift, pr.scale);
  const std::size_t n = u.size();
  for (int it = 0; it < 500; ++it) {
    double worst = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cd d;
      const cd v = eval_scaled_double(pr.p.basis, e, c, u[i], &d);
      if (d == cd(0)) continue;
      const cd ratio = v / d;
      cd sum = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) sum += 1.0 / (u[i] - u[j]);
      const cd w = ratio / (1.0 - ratio * sum);
      if (std::isfinite(w.real()) && std::isfinite(w.imag())) {
        u[i] -= w;
        worst = std::max(worst, std::abs(w) / std::max(1.0, std::abs(u[i])));
      }
    }
    if (worst <= 1e-14) break;
  }
  return u;
}

bool aberth_ext(const Problem& pr, std::vector<ExtComplex>& z) {
  const ExtScalar tol = precision_tolerance(10);
  const std::size_t n = z.size();
  for (int it = 0; it < 200; ++it) {
    ExtScalar worst(0);
    for (std::size_t i = 0; i < n; ++i) {
      Jet2 j = eval_with_derivatives(pr.p, z[i]);
      j.value -= pr.shift;
      if (j.d1.re == 0 && j.d1.im == 0) continue;
      const ExtComplex ratio = j.value / j.d1;
      ExtComplex sum;
      for (std::size_t k = 0; k < n; ++k)
        if (k != i) sum += ExtComplex(1) / (z[i] - z[k]);
      const ExtComplex w = ratio / (ExtComplex(1) - ratio * sum);
      z[i] -= w;
      worst = std::max(worst, ExtScalar(abs(w) / std::max(ExtScalar(1), abs(z[i]))));
    }
    if (worst <= tol) return true;
  }
  return false;
}

std::vector<ExtComplex> polish_all(const Problem& pr, const std::vector<cd>& seeds) {
  std::vector<ExtComplex> zs;
  for (const auto& u : seeds) {
    ExtComplex z = ExtComplex::from(u) * pr.scale;
    newton(pr, z);
    zs.push_back(std::move(z));
  }
  return zs;
}

// Seeds spread along the image of a circle |w| = R under the inverse exterior
// map of the contracted support, with R chosen so that |p| there matches the
// shift. Zeros of p - shift for a large shift cluster along such a curve.
std::vector<cd> level_seeds(const Problem& pr) {
  const std::size_t n = pr.p.degree();
  const double c = pr.scale.convert_to<double>();
  const bool lag = pr.p.basis.is_laguerre();
  auto inverse_map = [lag](cd w) { return lag ? (w + 1.0) * (w + 1.0) / (4.0 * w) : (w + 1.0 / w) / 2.0; };
  const auto e = scaled_coefficients(pr.p, ExtComplex(), pr.scale);
  const double target = (ExtScalar(mp::log(std::max(abs(pr.shift), pow2(-1000)))) -
                         ExtScalar(mp::log(mp::abs(pr.p.coeffs[n]) * mp::pow(pr.scale, static_cast<long>(n)))))
                            .convert_to<double>();
  double lo = 1.0, hi = 1e6;
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    const double v = std::log(std::abs(eval_scaled_double(pr.p.basis, e, c, inverse_map(cd(mid, 0)), nullptr)));
    if (!std::isfinite(v) || v > target)
      hi = mid;
    else
      lo = mid;
  }
  const double pi = 3.14159265358979323846;
  std::vector<cd> seeds;
  for (std::size_t k = 0; k < n; ++k)
    seeds.push_back(inverse_map(std::polar(hi, 2 * pi * (static_cast<double>(k) + 0.5) / static_cast<double>(n))));
  return seeds;
}

std::vector<cd> circle_seeds(std::size_t n) {
  const double pi = 3.14159265358979323846;
  std::vector<cd> seeds;
  for (std::size_t k = 0; k < n; ++k)
    seeds.push_back(std::polar(1.1, 2 * pi * (static_cast<double>(k) + 0.25) / static_cast<double>(n)));
  return seeds;
}

}  // namespace

ZeroCloud roots(const BasisPoly& p, const ExtComplex& shift) {
  const std::size_t n = p.degree();
  if (n == 0) throw Error(ErrorCode::Shape, "roots needs degree >= 1");
  if (p.coeffs[n] == 0) throw Error(ErrorCode::Shape, "leading coefficient is zero");
  const ExtScalar scale = std::max(ExtScalar(1), scaling_constant(p.basis, n));
  Problem pr{p, shift, scale};

  std::vector<ExtComplex> zs;
  bool ok = false;
  auto attempt = [&](auto&& make_seeds) {
    if (ok) return;
    try {
      auto candidate = polish_all(pr, aberth_double(pr, make_seeds()));
      if (verified(pr, candidate)) ok = true;
      if (ok || zs.empty()) zs = std::move(candidate);
    } catch (const Error&) {
      // Fall through to the next strategy.
    }
  };
  attempt([&] { return comrade_seeds(pr); });
  if (shift.re != 0 || shift.im != 0) attempt([&] { return level_seeds(pr); });
  attempt([&] { return circle_seeds(n); });
  if (!ok && zs.size() == n) {
    try {
      ok = aberth_ext(pr, zs) && verified(pr, zs);
    } catch (const Error&) {
      ok = false;
    }
  }
  if (!ok) throw Error(ErrorCode::Eig, "root refinement failed for degree " + std::to_string(n));

  std::sort(zs.begin(), zs.end(), [](const ExtComplex& a, const ExtComplex& b) {
    return a.re < b.re || (a.re == b.re && a.im < b.im);
  });
  ZeroCloud zc;
  zc.zeros = std::move(zs);
  zc.n = n;
  zc.c_n = scaling_constant(p.basis, n);
  return zc;
}

ZeroCloud normalized(const ZeroCloud& zc, const ExtScalar& c) {
  ZeroCloud out = zc;
  for (auto& z : out.zeros) z /= c;
  out.c_n = c;
  out.normalized = true;
  return out;
}

bool is_real_zero(const ExtComplex& z) {
  return mp::abs(z.im) <= precision_fraction(4) * std::max(ExtScalar(1), abs(z));
}

ZeroStats zero_stats(const ZeroCloud& zc, const Case& c) {
  ZeroStats s;
  std::vector<ExtScalar> reals;
  for (const auto& z : zc.zeros) {
    const ExtScalar ai = mp::abs(z.im);
    if (ai > s.max_imag) s.max_imag = ai;
    const ExtScalar az = abs(z);
    if (az > s.largest_abs) s.largest_abs = az;
    if (!is_real_zero(z)) continue;
    ++s.real_count;
    reals.push_back(z.re);
    const ExtScalar eps = precision_fraction(4) * std::max(ExtScalar(1), az);
    if (!c.is_laguerre() || z.re >= -eps) ++s.real_in_support;
  }
  std::sort(reals.begin(), reals.end());
  for (std::size_t k = 1; k < reals.size(); ++k) {
    const ExtScalar gap = reals[k] - reals[k - 1];
    if (k == 1 || gap < s.min_real_gap) s.min_real_gap = gap;
  }
  return s;
}

double LimitDensity::cdf(double t) const {
  const double pi = 3.14159265358979323846;
  if (basis.is_laguerre()) {
    if (t <= 0) return 0;
    if (t >= 1) return 1;
    return (2 / pi) * (std::sqrt(t * (1 - t)) + std::asin(std::sqrt(t)));
  }
  if (t <= -1) return 0;
  if (t >= 1) return 1;
  return 0.5 + (t * std::sqrt(1 - t * t) + std::asin(t)) / pi;
}

double LimitDensity::density(double t) const {
  const double pi = 3.14159265358979323846;
  if (basis.is_laguerre()) return (t > 0 && t < 1) ? (2 / pi) * std::sqrt((1 - t) / t) : 0.0;
  return (t > -1 && t < 1) ? (2 / pi) * std::sqrt(1 - t * t) : 0.0;
}

std::vector<ExtScalar> real_parts(const ZeroCloud& zc) {
  std::vector<ExtScalar> r;
  for (const auto& z : zc.zeros) r.push_back(z.re);
  std::sort(r.begin(), r.end());
  return r;
}

double ks_distance(const ZeroCloud& zc, const LimitDensity& ld) {
  std::vector<double> t;
  for (const auto& z : zc.zeros) t.push_back(z.re.convert_to<double>());
  std::sort(t.begin(), t.end());
  const double n = static_cast<double>(t.size());
  double d = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double f = ld.cdf(t[i]);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}

bool interlace_check(const std::vector<ExtScalar>& crit, const std::vector<ExtScalar>& zeros) {
  if (zeros.empty() || crit.size() + 1 != zeros.size())
    throw Error(ErrorCode::Shape, "interlacing needs exactly one fewer critical point than zeros");
  for (std::size_t i = 0; i < crit.size(); ++i)
    if (!(zeros[i] < crit[i] && crit[i] < zeros[i + 1])) return false;
  return true;
}

}  // namespace diffortho
