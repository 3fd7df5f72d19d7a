#include "diffortho/construct.hpp"

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

TEST_CASE("rho = 1 gives back the classical polynomial") {
  for (const Case& c : {kL0, kH}) {
    MeasureSpec one = make_spec(c, {ExtScalar(1)});
    for (std::size_t n : {1u, 7u, 30u}) {
      DiffOrthoPoly d = qhat(one, n);
      CHECK(relative_basis_deviation(d.qhat, basis_element(c, n)) < precision_tolerance(40));
    }
  }
}

TEST_CASE("Qhat_3 for Laguerre rho = x + 1") {
  DiffOrthoPoly d = qhat(lag_spec(), 3);
  CHECK(d.qhat.is_monic());
  // Qhat coefficient of L_{n-k} is b_{n,n-k} n / (n - k)
  const ExtScalar b32 =
      X("1.58119526376101210134690772345278753610679900540759108905696380493252231675743599277678864");
  CHECK(close(d.qhat[2], b32 * 3 / 2, precision_tolerance(40)));
  CHECK(eigen_residual(d) < precision_tolerance(40));
}

TEST_CASE("eigen identity and differential orthogonality") {
  for (const MeasureSpec& s : {lag_spec(), her_spec(), make_spec(Case::laguerre(X("0.5")), {X("1"), X("1")})}) {
    DiffOrthoPoly d = qhat(s, 12);
    CHECK(eigen_residual(d) < precision_tolerance(40));
    for (const auto& r : diff_orthogonality_residuals(d, 11)) CHECK(r < X("1e-30"));
  }
}

TEST_CASE("differential orthogonality fails at k = n") {
  DiffOrthoPoly d = qhat(her_spec(), 8);
  auto r = diff_orthogonality_residuals(d, 8);
  CHECK(r[8] > X("1e-3"));
}

TEST_CASE("Q_n vanishes at its prescribed root") {
  const ExtComplex zeta(X("2.5"), X("0.5"));
  DiffOrthoPoly d = q_with_root(her_spec(), 10, zeta);
  CHECK(d.zeta.has_value());
  CHECK(abs(d.eval_q(zeta)) < precision_tolerance(40) * std::max(ExtScalar(1), abs(d.q_const)));
}

TEST_CASE("quasi-orthogonality below n - m") {
  auto r = quasi_orthogonality_residuals(lag_spec(), 10);
  REQUIRE(r.size() == 10);  // k = 0..n-m
  for (std::size_t k = 0; k + 1 < r.size(); ++k) CHECK(r[k] < X("1e-30"));
  // at k = n - m only the L_{n-m} component of P_n survives
  CHECK(r.back() > X("1e-3"));
}

TEST_CASE("coefficient growth rows") {
  auto rows = coeff_growth_report(her_spec(), {20, 40});
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].k == 1);
  CHECK(rows[0].abs_b < precision_tolerance(40));  // even rho keeps P_n of parity n
  CHECK(rows[1].ratio > 0);
}
