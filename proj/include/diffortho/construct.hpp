#pragma once

// Differentially orthogonal polynomials: Qhat_n with L[Qhat_n] = lambda_n P_n,
// the normalised family Q_n = Qhat_n - Qhat_n(zeta), and the residual checks
// for the identities they satisfy.

#include "diffortho/measures.hpp"

#include <optional>
#include <vector>

namespace diffortho {

struct DiffOrthoPoly {
  MeasureSpec spec;
  std::size_t n = 0;
  BasisPoly qhat;  // monic, degree n
  BasisPoly pn;    // monic orthogonal polynomial of mu it was built from
  std::optional<ExtComplex> zeta;
  ExtComplex q_const;  // Qhat_n(zeta) when zeta is present, otherwise 0

  /// Q_n(z) = Qhat_n(z) - q_const.
  ExtComplex eval_q(const ExtComplex& z) const;
};

DiffOrthoPoly qhat(const MeasureSpec& spec, std::size_t n);
DiffOrthoPoly q_with_root(const MeasureSpec& spec, std::size_t n, const ExtComplex& zeta);

/// r_k = <L[Q_n], x^k>_mu / (||L[Q_n]||_mu ||x^k||_mu), k = 0..kmax.
std::vector<ExtScalar> diff_orthogonality_residuals(const DiffOrthoPoly& d, std::size_t kmax);

/// Deviation of L[Qhat_n] from lambda_n P_n, coefficient-wise in orthonormal
/// scaling relative to ||lambda_n P_n||_w.
ExtScalar eigen_residual(const DiffOrthoPoly& d);

/// <P_n, x^k>_w / (||P_n||_w ||x^k||_w) for k = 0..n-m.
std::vector<ExtScalar> quasi_orthogonality_residuals(const MeasureSpec& spec, std::size_t n);

struct CoeffGrowthRow {
  std::size_t n = 0;
  std::size_t k = 0;
  ExtScalar abs_b;
  ExtScalar ratio;  // |b_{n,n-k}| / n^k (Laguerre) or / n^{k/2} (Hermite)
};

std::vector<CoeffGrowthRow> coeff_growth_report(const MeasureSpec& spec, const std::vector<std::size_t>& n_list);

}  // namespace diffortho
