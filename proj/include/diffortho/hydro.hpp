#pragma once

// Planar flow generated by point singularities placed at the zeros w_i of
// Qhat_n. With strengths f_i = R''(w_i)/R'(w_i), R = prod (z - w_i), the
// velocity field vanishes exactly at the zeros of P_n.

#include "diffortho/construct.hpp"

#include <complex>
#include <string>
#include <vector>

namespace diffortho {

struct FlowSystem {
  Case basis;
  std::vector<ExtComplex> points;
  std::vector<ExtComplex> strengths;
};

/// f_i = 2 sum_{j != i} 1/(w_i - w_j). Throws Error(Collide) for points
/// closer than 2^-(B/2).
std::vector<ExtComplex> f_values(const std::vector<ExtComplex>& points);

FlowSystem make_flow_system(const Case& c, const std::vector<ExtComplex>& points);

struct FlowValue {
  ExtComplex potential;  // principal logarithms; jumps across branch cuts
  ExtComplex velocity;   // dV/dz, single valued
  ExtScalar scale;       // sum of magnitudes of the velocity terms
};

/// Throws Error(Pole) within 2^-(B/2) of a singularity of nonzero residue.
FlowValue potential_and_velocity(const FlowSystem& sys, const ExtComplex& z);
/// Velocity and its z-derivative (for Newton on stagnation points).
std::pair<ExtComplex, ExtComplex> velocity_and_slope(const FlowSystem& sys, const ExtComplex& z);

struct StagnationReport {
  std::size_t n = 0;
  FlowSystem system;
  std::vector<ExtComplex> pn_zeros;
  std::vector<ExtScalar> residuals;          // |V'(x_k)| / scale
  ExtScalar max_residual{0};
  std::vector<ExtScalar> recovery_distance;  // |Newton limit - x_k|; negative when not converged
  ExtScalar max_recovery_distance{0};
  std::size_t recovered = 0;
  std::vector<ExtComplex> shared_zeros;  // only with exclude_shared
};

/// Throws Error(Degenerate) if a zero of P_n coincides with a zero of Qhat_n,
/// unless exclude_shared is set; shared zeros are then listed separately and
/// left out of pn_zeros (V' = lambda_n P_n / Qhat_n does not vanish there).
StagnationReport stagnation_verify(const MeasureSpec& spec, std::size_t n, bool exclude_shared = false);

struct FieldSample {
  ExtScalar re, im;
  bool masked = false;
  ExtScalar u, v;  // conj(V') = u + i v
  ExtScalar psi;   // stream function Im V
};

std::vector<FieldSample> sample_field(const FlowSystem& sys, double xmin, double xmax, double ymin, double ymax,
                                      double step);

}  // namespace diffortho
