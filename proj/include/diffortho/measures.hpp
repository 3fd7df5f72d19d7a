#pragma once

// Measures mu = w / rho with rho a polynomial positive on the support of w,
// inner products against w and mu, and the monic orthogonal polynomials P_n
// of mu.

#include "diffortho/polycore.hpp"

#include <utility>
#include <vector>

namespace diffortho {

struct MeasureSpec {
  Case basis;
  std::vector<ExtScalar> rho;  // monomial coefficients, low to high

  std::size_t m() const { return rho.empty() ? 0 : rho.size() - 1; }
  ExtScalar rho_max() const;  // max_j |rho_j|
};

/// Builds a spec, trimming trailing zero coefficients of rho.
MeasureSpec make_spec(const Case& c, std::vector<ExtScalar> rho);

/// Throws Error(Measure) unless rho_m > 0 and rho has no zero on the support.
void validate_spec(const MeasureSpec& spec);

ExtScalar rho_eval(const MeasureSpec& spec, const ExtScalar& x);
ExtComplex rho_eval(const MeasureSpec& spec, const ExtComplex& z);

/// Roots of rho grouped by multiplicity (after validation).
struct RhoRoot {
  ExtComplex z;
  int multiplicity = 1;
};
std::vector<RhoRoot> rho_roots(const MeasureSpec& spec);

/// <p, q>_w from the coefficients (no quadrature).
ExtScalar inner_w(const BasisPoly& p, const BasisPoly& q);

/// <p, q>_mu = integral of p q / rho dw. Evaluated as the N-node Gauss rule
/// of w applied to p q / rho, for N = N0, 2 N0, ... until two successive
/// values agree; the rule is never formed explicitly (see measures.cpp).
ExtScalar inner_mu(const BasisPoly& p, const BasisPoly& q, const MeasureSpec& spec);

/// Several inner products sharing one convergence loop.
std::vector<ExtScalar> inner_mu_batch(const std::vector<std::pair<BasisPoly, BasisPoly>>& pairs,
                                      const MeasureSpec& spec);

/// Value of the N-node Gauss rule of w applied to p q / rho (single level,
/// no convergence test). Requires N > max degree.
ExtScalar inner_mu_fixed(const BasisPoly& p, const BasisPoly& q, const MeasureSpec& spec, std::size_t nodes);

inline constexpr std::size_t kMaxQuadratureNodes = std::size_t{1} << 15;

/// Monic P_n from the m x m Gram system on L_{n-m}..L_n. Requires n > m.
BasisPoly pn_construct(const MeasureSpec& spec, std::size_t n);

/// Monic P_n by the Stieltjes procedure (recurrence coefficients of mu from
/// inner products of the running polynomials). Independent cross-check.
BasisPoly pn_stieltjes(const MeasureSpec& spec, std::size_t n);

}  // namespace diffortho
