#include "diffortho/construct.hpp"
#include "diffortho/quadrature.hpp"
#include "diffortho/spectra.hpp"

#include "support.hpp"

using namespace diffortho;
using diffortho::testing::close;
using diffortho::testing::X;

namespace {
const Case kL0 = Case::laguerre(ExtScalar(0));
const Case kH = Case::hermite();
}  // namespace

TEST_CASE("zeros of the classical polynomial are the Gauss nodes") {
  for (const Case& c : {kL0, kH}) {
    ZeroCloud zc = roots(basis_element(c, 25));
    auto rule = gauss_rule(c, 25);
    REQUIRE(zc.zeros.size() == 25);
    for (std::size_t k = 0; k < 25; ++k) {
      CHECK(close(zc.zeros[k].re, rule->nodes[k], precision_tolerance(40)));
      CHECK(abs(zc.zeros[k].im) < precision_tolerance(40));
    }
  }
}

TEST_CASE("complex zeros of a shifted polynomial") {
  // H_2 - (-1) = x^2 + 1/2 has zeros +-i/sqrt(2)
  ZeroCloud zc = roots(basis_element(kH, 2), ExtComplex(-1));
  REQUIRE(zc.zeros.size() == 2);
  CHECK(close(abs(zc.zeros[0].im), sqrt(ExtScalar("0.5")), precision_tolerance(20)));
  CHECK(zc.zeros[0].im < zc.zeros[1].im);
}

TEST_CASE("zeros of Qhat_n are real, simple, and interlace") {
  MeasureSpec s = make_spec(kL0, {ExtScalar(1), ExtScalar(1)});
  DiffOrthoPoly d = qhat(s, 20);
  ZeroCloud zq = roots(d.qhat);
  ZeroStats st = zero_stats(zq, kL0);
  CHECK(st.real_count == 20);
  CHECK(st.real_in_support >= 19);
  CHECK(st.max_imag < X("1e-20"));
  CHECK(st.min_real_gap > 0);
  auto crit = real_parts(roots(derivative_in_basis(d.qhat)));
  auto pz = real_parts(roots(d.pn));
  CHECK(interlace_check(crit, pz));
  CHECK_THROWS_AS(interlace_check(pz, pz), Error);
}

TEST_CASE("limit densities") {
  LimitDensity h{kH}, l{kL0};
  CHECK(h.cdf(-1) == doctest::Approx(0));
  CHECK(h.cdf(0) == doctest::Approx(0.5));
  CHECK(h.cdf(1) == doctest::Approx(1));
  CHECK(l.cdf(1) == doctest::Approx(1));
  CHECK(h.density(0) == doctest::Approx(2 / 3.141592653589793));
}

TEST_CASE("KS distance shrinks for the classical Hermite zeros") {
  double d40 = ks_distance(normalized(roots(basis_element(kH, 40)), scaling_constant(kH, 40)), LimitDensity{kH});
  double d80 = ks_distance(normalized(roots(basis_element(kH, 80)), scaling_constant(kH, 80)), LimitDensity{kH});
  CHECK(d80 < d40);
  CHECK(d80 < 0.05);
}

TEST_CASE("interlacing detects violations") {
  std::vector<ExtScalar> z{X("0"), X("1"), X("2")};
  CHECK(interlace_check({X("0.5"), X("1.5")}, z));
  CHECK_FALSE(interlace_check({X("0.5"), X("2.5")}, z));
}
