#include "diffortho/measures.hpp"
#include "diffortho/quadrature.hpp"

#include "support.hpp"

using namespace diffortho;
using diffortho::testing::close;
using diffortho::testing::X;

namespace {
const Case kL0 = Case::laguerre(ExtScalar(0));
const Case kH = Case::hermite();
MeasureSpec lag_spec() { return make_spec(kL0, {ExtScalar(1), ExtScalar(1)}); }
MeasureSpec her_spec() { return make_spec(kH, {ExtScalar(1), ExtScalar(0), ExtScalar(1)}); }
}  // namespace

TEST_CASE("spec validation") {
  CHECK_NOTHROW(validate_spec(lag_spec()));
  CHECK_NOTHROW(validate_spec(her_spec()));
  auto code_of = [](const MeasureSpec& s) {
    try {
      validate_spec(s);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code_of(make_spec(kL0, {ExtScalar(-1), ExtScalar(1)})) == ErrorCode::Measure);    // zero at 1
  CHECK(code_of(make_spec(kH, {ExtScalar(1), ExtScalar(1)})) == ErrorCode::Measure);      // odd degree
  CHECK(code_of(make_spec(kL0, {ExtScalar(1), ExtScalar(-1)})) == ErrorCode::Measure);    // negative lead
  CHECK(code_of(make_spec(kH, {ExtScalar(-1), ExtScalar(0), ExtScalar(1)})) == ErrorCode::Measure);
  CHECK(make_spec(kL0, {ExtScalar(2), ExtScalar(0), ExtScalar(0)}).m() == 0);
}

TEST_CASE("Gauss rules integrate the classical weight") {
  auto rule = gauss_rule(kH, 20);
  ExtScalar s = integrate(*rule, [](const ExtScalar& x) { return ExtScalar(x * x * x * x); });
  CHECK(close(s, ExtScalar(3) * sqrt(pi_value()) / 4, precision_tolerance(20)));
}

TEST_CASE("inner products reduce to w when rho is constant") {
  MeasureSpec one = make_spec(kL0, {ExtScalar(1)});
  BasisPoly p = basis_element(kL0, 4), q = add(basis_element(kL0, 4), basis_element(kL0, 2));
  CHECK(close(inner_mu(p, q, one), inner_w(p, q), precision_tolerance(30)));
}

TEST_CASE("mass of the Hermite measure with rho = x^2 + 1") {
  // integral of exp(-x^2)/(1+x^2) = pi e erfc(1)
  const ExtScalar expect = X(
      "1.3432934216467351704371235944105897783228295671300368720519555645530258279697277579841335");
  ExtScalar got = inner_mu(basis_element(kH, 0), basis_element(kH, 0), her_spec());
  CHECK(close(got, expect, precision_tolerance(40)));
}

TEST_CASE("rho L_5 is mu-orthogonal to L_7") {
  MeasureSpec s = lag_spec();
  BasisPoly rl5 = add(basis_element(kL0, 5), multiply_by_x(basis_element(kL0, 5)));
  ExtScalar v = inner_mu(rl5, basis_element(kL0, 7), s);
  CHECK(abs(v) < precision_tolerance(40) * w_norm(basis_element(kL0, 7)) * w_norm(rl5));
}

TEST_CASE("fixed-level quadrature matches an explicit Gauss sum") {
  MeasureSpec s = lag_spec();
  BasisPoly p = basis_element(kL0, 5), q = basis_element(kL0, 7);
  auto rule = gauss_rule(kL0, 64);
  ExtScalar explicit_sum = integrate(*rule, [&](const ExtScalar& x) {
    return ExtScalar(eval_clenshaw(p, x) * eval_clenshaw(q, x) / (x + 1));
  });
  ExtScalar fixed = inner_mu_fixed(p, q, s, 64);
  CHECK(close(fixed, explicit_sum, precision_tolerance(40)));
}

TEST_CASE("P_3 for Laguerre rho = x + 1") {
  BasisPoly p3 = pn_construct(lag_spec(), 3);
  CHECK(p3.is_monic());
  CHECK(close(p3[2], X("1.58119526376101210134690772345278753610679900540759108905696380493252231675743599277678864"),
              precision_tolerance(40)));
  CHECK(abs(p3[1]) < precision_tolerance(40));
  CHECK(abs(p3[0]) < precision_tolerance(40));
  auto mono = to_monomial(p3);
  CHECK(close(mono[0], X("-2.8376094724779757973061845530944249277864"), X("1e-38")));
  CHECK(close(mono[1], X("11.675218944955951594612369106188849855572"), X("1e-38")));
  CHECK(close(mono[2], X("-7.4188047362389878986530922765472124638932"), X("1e-38")));
}

TEST_CASE("P_4 for Hermite rho = x^2 + 1") {
  BasisPoly p4 = pn_construct(her_spec(), 4);
  CHECK(close(p4[2], X("0.730166150061264068841310354057879545279284169038808692041878023515110732610405844995335336"),
              precision_tolerance(40)));
  CHECK(abs(p4[3]) < precision_tolerance(40));
  CHECK(abs(p4[0]) < precision_tolerance(40));
}

TEST_CASE("Gram and Stieltjes constructions agree") {
  for (const MeasureSpec& s : {lag_spec(), her_spec(), make_spec(Case::laguerre(X("0.5")), {X("2"), X("3")})}) {
    for (std::size_t n : {3u, 8u, 15u}) {
      BasisPoly a = pn_construct(s, n);
      BasisPoly b = pn_stieltjes(s, n);
      CHECK(relative_basis_deviation(a, b) < precision_fraction(2));
    }
  }
}

TEST_CASE("P_n is mu-orthogonal to lower degrees") {
  MeasureSpec s = her_spec();
  BasisPoly p = pn_construct(s, 9);
  for (std::size_t k = 0; k < 9; ++k) {
    BasisPoly lk = basis_element(kH, k);
    ExtScalar v = inner_mu(p, lk, s);
    CHECK(abs(v) < precision_tolerance(40) * w_norm(p) * w_norm(lk));
  }
}

TEST_CASE("pn_construct needs n > m") { CHECK_THROWS_AS(pn_construct(her_spec(), 2), Error); }
