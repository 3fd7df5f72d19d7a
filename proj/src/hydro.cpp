#include "diffortho/hydro.hpp"

#include "diffortho/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace diffortho {

namespace {

ExtScalar gap_floor() { return precision_fraction(2); }

ExtScalar alpha_of(const Case& c) { return c.family == Family::Laguerre ? c.alpha : ExtScalar(0); }

// Coefficient of 1/(z - w_i) in V'. A point of zero residue (w = 0, f = 0 in a
// symmetric Hermite system) is a removable singularity of V', not a pole.
ExtComplex residue(const FlowSystem& sys, std::size_t i) {
  const ExtComplex& w = sys.points[i];
  const ExtComplex& f = sys.strengths[i];
  if (sys.basis.family == Family::Laguerre) return ExtComplex(ExtScalar(1) + alpha_of(sys.basis)) - w + f * w;
  return f / ExtScalar(2) - w;
}

bool is_pole(const FlowSystem& sys, std::size_t i) {
  const ExtComplex& w = sys.points[i];
  ExtScalar size = 1 + abs(w) + abs(sys.strengths[i]) * (1 + abs(w));
  return abs(residue(sys, i)) > gap_floor() * size;
}

bool near(const ExtComplex& z, const ExtComplex& w) {
  return abs(z - w) <= gap_floor() * std::max(ExtScalar(1), abs(w));
}

void check_pole(const FlowSystem& sys, const ExtComplex& z) {
  for (std::size_t i = 0; i < sys.points.size(); ++i) {
    if (near(z, sys.points[i]) && is_pole(sys, i)) {
      throw Error(ErrorCode::Pole, "evaluation point within the gap floor of a singularity");
    }
  }
}

}  // namespace

std::vector<ExtComplex> f_values(const std::vector<ExtComplex>& points) {
  const std::size_t n = points.size();
  const ExtScalar floor = gap_floor();
  std::vector<ExtComplex> f(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ExtComplex d = points[i] - points[j];
      if (abs(d) <= floor) throw Error(ErrorCode::Collide, "two flow singularities coincide");
      ExtComplex inv = ExtComplex(2) / d;
      f[i] += inv;
      f[j] -= inv;
    }
  }
  return f;
}

FlowSystem make_flow_system(const Case& c, const std::vector<ExtComplex>& points) {
  return {c, points, f_values(points)};
}

FlowValue potential_and_velocity(const FlowSystem& sys, const ExtComplex& z) {
  check_pole(sys, z);
  FlowValue out;
  out.scale = 0;
  const std::size_t n = sys.points.size();
  if (sys.basis.family == Family::Laguerre) {
    const ExtScalar a1 = ExtScalar(1) + alpha_of(sys.basis);
    for (std::size_t i = 0; i < n; ++i) {
      const ExtComplex& w = sys.points[i];
      const ExtComplex& f = sys.strengths[i];
      ExtComplex d = z - w;
      ExtComplex c1 = ExtComplex(a1) - w;
      if (near(z, w)) {  // removable: only the regular parts survive
        out.potential += -z + z * f;
        out.velocity += ExtComplex(-1) + f;
        out.scale += 1 + abs(f);
        continue;
      }
      ExtComplex lg = log(d);
      out.potential += -z + c1 * lg + (z + w * lg) * f;
      ExtComplex t1 = c1 / d;
      ExtComplex t2 = f * (ExtComplex(1) + w / d);
      out.velocity += ExtComplex(-1) + t1 + t2;
      out.scale += 1 + abs(t1) + abs(t2);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const ExtComplex& w = sys.points[i];
      ExtComplex c1 = sys.strengths[i] / ExtScalar(2) - w;
      ExtComplex d = z - w;
      if (near(z, w)) {
        out.potential += -z;
        out.velocity += ExtComplex(-1);
        out.scale += 1;
        continue;
      }
      out.potential += -z + c1 * log(d);
      ExtComplex t1 = c1 / d;
      out.velocity += ExtComplex(-1) + t1;
      out.scale += 1 + abs(t1);
    }
  }
  return out;
}

std::pair<ExtComplex, ExtComplex> velocity_and_slope(const FlowSystem& sys, const ExtComplex& z) {
  check_pole(sys, z);
  ExtComplex v, s;
  const std::size_t n = sys.points.size();
  const bool lag = sys.basis.family == Family::Laguerre;
  const ExtScalar a1 = ExtScalar(1) + alpha_of(sys.basis);
  for (std::size_t i = 0; i < n; ++i) {
    const ExtComplex& w = sys.points[i];
    const ExtComplex& f = sys.strengths[i];
    if (near(z, w)) {
      v += lag ? ExtComplex(-1) + f : ExtComplex(-1);
      continue;
    }
    ExtComplex inv = ExtComplex(1) / (z - w);
    ExtComplex inv2 = inv * inv;
    if (lag) {
      ExtComplex c1 = ExtComplex(a1) - w;
      v += ExtComplex(-1) + c1 * inv + f * (ExtComplex(1) + w * inv);
      s -= (c1 + f * w) * inv2;
    } else {
      ExtComplex c1 = f / ExtScalar(2) - w;
      v += ExtComplex(-1) + c1 * inv;
      s -= c1 * inv2;
    }
  }
  return {v, s};
}

StagnationReport stagnation_verify(const MeasureSpec& spec, std::size_t n, bool exclude_shared) {
  if (spec.m() < 1) throw Error(ErrorCode::Shape, "stagnation check needs deg rho >= 1");
  DiffOrthoPoly d = qhat(spec, n);
  StagnationReport rep;
  rep.n = n;
  rep.system = make_flow_system(spec.basis, roots(d.qhat).zeros);
  rep.pn_zeros = roots(d.pn).zeros;

  std::vector<ExtComplex> distinct;
  for (const auto& x : rep.pn_zeros) {
    bool shared = false;
    for (const auto& w : rep.system.points) shared = shared || near(x, w);
    if (!shared) {
      distinct.push_back(x);
    } else if (exclude_shared) {
      rep.shared_zeros.push_back(x);
    } else {
      throw Error(ErrorCode::Degenerate, "a zero of P_n coincides with a zero of Qhat_n");
    }
  }
  rep.pn_zeros = std::move(distinct);

  rep.max_residual = 0;
  rep.max_recovery_distance = 0;
  const ExtScalar tol = precision_tolerance(40);
  for (const auto& x : rep.pn_zeros) {
    FlowValue fv = potential_and_velocity(rep.system, x);
    ExtScalar r = abs(fv.velocity) / fv.scale;
    rep.residuals.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);

    // Newton on V' from a relative perturbation. Zeros of P_n sit close to
    // poles, so a step is halved until |V'| decreases. An unconverged seed is
    // recorded, not raised.
    ExtComplex z = x * ExtScalar(1.001);
    if (abs(x) == 0) z = ExtComplex(ExtScalar(1e-3));
    bool converged = false;
    try {
      auto [v, s] = velocity_and_slope(rep.system, z);
      for (int it = 0; it < 60 && !converged; ++it) {
        if (abs(s) == 0) break;
        ExtComplex step = v / s;
        const ExtScalar vnorm = abs(v);
        bool accepted = false;
        for (int half = 0; half < 40; ++half) {
          ExtComplex trial = z - step;
          try {
            auto next = velocity_and_slope(rep.system, trial);
            if (is_finite(next.first) && abs(next.first) < vnorm) {
              z = trial;
              v = next.first;
              s = next.second;
              accepted = true;
              break;
            }
          } catch (const Error& e) {
            if (e.code() != ErrorCode::Pole) throw;
          }
          step /= ExtScalar(2);
        }
        if (abs(step) <= tol * std::max(ExtScalar(1), abs(z))) converged = true;
        if (!accepted) break;
      }
    } catch (const Error&) {
      converged = false;
    }
    if (converged) {
      ExtScalar dist = abs(z - x);
      rep.recovery_distance.push_back(dist);
      rep.max_recovery_distance = std::max(rep.max_recovery_distance, dist);
      ++rep.recovered;
    } else {
      rep.recovery_distance.push_back(ExtScalar(-1));
    }
  }
  return rep;
}

std::vector<FieldSample> sample_field(const FlowSystem& sys, double xmin, double xmax, double ymin, double ymax,
                                      double step) {
  if (!(step > 0) || !(xmax >= xmin) || !(ymax >= ymin)) throw Error(ErrorCode::Shape, "bad sampling grid");
  const auto nx = static_cast<std::size_t>(std::floor((xmax - xmin) / step + 1e-9)) + 1;
  const auto ny = static_cast<std::size_t>(std::floor((ymax - ymin) / step + 1e-9)) + 1;
  std::vector<FieldSample> out;
  out.reserve(nx * ny);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      FieldSample s;
      s.re = ExtScalar(xmin + static_cast<double>(i) * step);
      s.im = ExtScalar(ymin + static_cast<double>(j) * step);
      try {
        FlowValue fv = potential_and_velocity(sys, ExtComplex(s.re, s.im));
        s.u = fv.velocity.re;
        s.v = -fv.velocity.im;
        s.psi = fv.potential.im;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::Pole) throw;
        s.masked = true;
      }
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace diffortho
