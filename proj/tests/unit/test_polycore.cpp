#include "diffortho/polycore.hpp"

#include "support.hpp"

using namespace diffortho;
using diffortho::testing::close;

namespace {
const Case kL0 = Case::laguerre(ExtScalar(0));
const Case kH = Case::hermite();
}  // namespace

TEST_CASE("case parsing") {
  CHECK(parse_case("Laguerre", ExtScalar("0.5")).alpha == ExtScalar("0.5"));
  CHECK(parse_case("hermite", ExtScalar(7)).family == Family::Hermite);
  CHECK_THROWS_AS(parse_case("jacobi", ExtScalar(0)), Error);
  CHECK_THROWS_AS(Case::laguerre(ExtScalar(-1)), Error);
}

TEST_CASE("low degree monic polynomials") {
  const ExtScalar tol = precision_tolerance(8);
  ExtScalar x("0.7");
  // L_3 (alpha = 0, monic) = x^3 - 9x^2 + 18x - 6
  CHECK(close(eval_clenshaw(basis_element(kL0, 3), x), x * x * x - 9 * x * x + 18 * x - 6, tol));
  // monic H_4 = x^4 - 3x^2 + 3/4
  CHECK(close(eval_clenshaw(basis_element(kH, 4), x), x * x * x * x - 3 * x * x + ExtScalar("0.75"), tol));
  auto mono = to_monomial(basis_element(kH, 4));
  CHECK(mono[0] == ExtScalar("0.75"));
  CHECK(mono[2] == -3);
}

TEST_CASE("recurrence coefficients and norms") {
  auto [a, b] = classical_recurrence(Case::laguerre(ExtScalar("0.5")), 3);
  CHECK(a == ExtScalar("7.5"));
  CHECK(b == ExtScalar("10.5"));
  auto [ha, hb] = classical_recurrence(kH, 4);
  CHECK(ha == 0);
  CHECK(hb == 2);
  // tau_n = n! Gamma(n+alpha+1) (Laguerre), sqrt(pi) n!/2^n (Hermite)
  auto tl = classical_norms(kL0, 4);
  CHECK(close(tl[4], ExtScalar(576), precision_tolerance(8)));
  auto th = classical_norms(kH, 3);
  CHECK(close(th[3], sqrt(pi_value()) * 6 / 8, precision_tolerance(8)));
  CHECK(classical_constants(kH, 7).lambda == -7);
  CHECK(classical_constants(kL0, 7).lambda == -7);
  CHECK(scaling_constant(kL0, 10) == 40);
}

TEST_CASE("operator eigen-relation on the basis") {
  for (const Case& c : {kL0, Case::laguerre(ExtScalar("0.5")), kH}) {
    for (std::size_t n : {1u, 5u, 12u}) {
      BasisPoly l = basis_element(c, n);
      BasisPoly lhs = apply_operator(c, l);
      BasisPoly rhs = scale(l, ExtScalar(classical_constants(c, n).lambda));
      CHECK(relative_basis_deviation(lhs, rhs) < precision_tolerance(40));
    }
  }
}

TEST_CASE("derivatives agree with differentiated Clenshaw") {
  const ExtScalar tol = precision_tolerance(20);
  for (const Case& c : {kL0, kH}) {
    std::vector<ExtScalar> d;
    for (int k = 0; k <= 9; ++k) d.push_back(ExtScalar(k % 3 - 1) / (k + 1));
    d.back() = 1;
    BasisPoly p(c, d);
    ExtComplex z(ExtScalar("0.4"), ExtScalar("1.1"));
    Jet2 j = eval_with_derivatives(p, z);
    BasisPoly dp = derivative_in_basis(p);
    CHECK(close(eval_clenshaw(dp, z), j.d1, tol));
    CHECK(close(eval_clenshaw(derivative_in_basis(dp), z), j.d2, tol));
  }
}

TEST_CASE("monomials and multiplication by x") {
  const ExtScalar tol = precision_tolerance(8);
  BasisPoly x3 = monomial_in_basis(kL0, 3);
  ExtScalar x("1.3");
  CHECK(close(eval_clenshaw(x3, x), x * x * x, tol));
  BasisPoly xl = multiply_by_x(basis_element(kH, 2));
  CHECK(close(eval_clenshaw(xl, x), x * (x * x - ExtScalar("0.5")), tol));
}

TEST_CASE("w-norm from coefficients") {
  BasisPoly p = add(basis_element(kH, 2), scale(basis_element(kH, 0), ExtScalar(3)));
  // ||H_2||^2 = sqrt(pi)/2, ||3 H_0||^2 = 9 sqrt(pi)
  ExtScalar expect = sqrt(sqrt(pi_value()) / 2 + 9 * sqrt(pi_value()));
  CHECK(close(w_norm(p), expect, precision_tolerance(8)));
}
