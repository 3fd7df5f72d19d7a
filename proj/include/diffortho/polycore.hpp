#pragma once

// Monic classical Laguerre/Hermite machinery. A BasisPoly stores the
// coefficients d_0..d_n of sum_j d_j L_j where L_j is the monic classical
// polynomial of its basis; the basis carries alpha explicitly so that a
// Laguerre derivative (which lands in the alpha+1 family) cannot be mixed up.

#include "diffortho/numeric.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace diffortho {

enum class Family { Laguerre, Hermite };

struct Case {
  Family family = Family::Hermite;
  ExtScalar alpha{0};  // meaningful for Laguerre only

  static Case laguerre(const ExtScalar& alpha);
  static Case hermite();

  bool is_laguerre() const { return family == Family::Laguerre; }
  /// Same family and (for Laguerre) identical alpha.
  bool same_basis(const Case& other) const;
  std::string name() const;  // "laguerre" / "hermite"

  /// Left end of the contracted support: 0 (Laguerre) or -1 (Hermite).
  double contracted_left() const { return is_laguerre() ? 0.0 : -1.0; }
};

/// Parses "laguerre"/"hermite" (case-insensitive); alpha is ignored for Hermite.
Case parse_case(const std::string& name, const ExtScalar& alpha);

struct BasisPoly {
  Case basis;
  std::vector<ExtScalar> coeffs;  // d_0..d_n

  BasisPoly() = default;
  BasisPoly(Case c, std::vector<ExtScalar> d);

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool is_monic() const { return !coeffs.empty() && coeffs.back() == 1; }
  const ExtScalar& operator[](std::size_t j) const { return coeffs[j]; }
};

/// The monic classical polynomial L_n of the given basis.
BasisPoly basis_element(const Case& c, std::size_t n);
BasisPoly zero_poly(const Case& c);

/// Monic three-term recurrence L_{k+1} = (x - a_k) L_k - b_k L_{k-1}.
std::pair<ExtScalar, ExtScalar> classical_recurrence(const Case& c, std::size_t k);
std::pair<double, double> classical_recurrence_double(const Case& c, std::size_t k);

struct ClassicalConstants {
  ExtScalar tau;     // squared norm of L_n
  long lambda = 0;   // eigenvalue of the differential operator
  ExtScalar c_n;     // scaling constant (zero for n = 0)
};

ClassicalConstants classical_constants(const Case& c, std::size_t n);
/// tau_0..tau_n computed as running products (no gamma overflow).
std::vector<ExtScalar> classical_norms(const Case& c, std::size_t n);
/// Total mass of the classical weight: Gamma(alpha+1) or sqrt(pi).
ExtScalar weight_mass(const Case& c);
/// c_n as double-friendly scaling: 4n or sqrt(2n).
ExtScalar scaling_constant(const Case& c, std::size_t n);

// ---------------------------------------------------------------------------
// Evaluation

ExtScalar eval_clenshaw(const BasisPoly& p, const ExtScalar& x);
ExtComplex eval_clenshaw(const BasisPoly& p, const ExtComplex& z);

struct Jet2 {
  ExtComplex value, d1, d2;
};
/// Value, first and second derivative by differentiated Clenshaw.
Jet2 eval_with_derivatives(const BasisPoly& p, const ExtComplex& z);

/// p(c*u) / c^n evaluated in double without overflow; coefficients are
/// pre-scaled by the caller via scaled_coefficients().
std::vector<std::complex<double>> scaled_coefficients(const BasisPoly& p, const ExtComplex& shift,
                                                      const ExtScalar& c);
std::complex<double> eval_scaled_double(const Case& c_case, const std::vector<std::complex<double>>& e,
                                        double scale, std::complex<double> u, std::complex<double>* deriv);

/// L_0(z)..L_n(z) by forward recurrence.
std::vector<ExtComplex> basis_values(const Case& c, std::size_t n, const ExtComplex& z);
std::vector<ExtScalar> basis_values(const Case& c, std::size_t n, const ExtScalar& x);

// ---------------------------------------------------------------------------
// Algebra

/// d/dx in basis form: Hermite H_n' = n H_{n-1}; Laguerre (L_n^a)' = n L_{n-1}^{a+1}.
BasisPoly derivative_in_basis(const BasisPoly& p);

/// Laguerre: x p'' + (1+alpha-x) p'; Hermite: p''/2 - x p'. Computed from the
/// shifted-basis derivatives sampled at Gauss nodes and projected back, so
/// it does not rely on the eigen-relation it is used to check.
BasisPoly apply_operator(const Case& c, const BasisPoly& p);

BasisPoly multiply_by_x(const BasisPoly& p);
BasisPoly add(const BasisPoly& p, const BasisPoly& q);
BasisPoly scale(const BasisPoly& p, const ExtScalar& s);
/// x^k expanded in the basis (exact recurrence arithmetic).
BasisPoly monomial_in_basis(const Case& c, std::size_t k);

/// Monomial coefficients (low to high) of a basis polynomial; only for small degrees.
std::vector<ExtScalar> to_monomial(const BasisPoly& p);

/// max_j |p_j - q_j| sqrt(tau_j) / ||q||_w (coefficient deviation in orthonormal scaling).
ExtScalar relative_basis_deviation(const BasisPoly& p, const BasisPoly& q);
/// ||p||_w from the coefficients.
ExtScalar w_norm(const BasisPoly& p);

}  // namespace diffortho
