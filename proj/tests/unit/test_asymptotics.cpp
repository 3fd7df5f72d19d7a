#include "diffortho/asymptotics.hpp"

#include "support.hpp"

#include <cmath>

using namespace diffortho;
using diffortho::testing::close;
using diffortho::testing::X;

namespace {
const Case kL0 = Case::laguerre(ExtScalar(0));
const Case kH = Case::hermite();
MeasureSpec her_spec() { return make_spec(kH, {ExtScalar(1), ExtScalar(0), ExtScalar(1)}); }
}  // namespace

TEST_CASE("conformal maps at z = 2") {
  const ExtScalar tol = precision_tolerance(8);
  MapValues h = conformal_maps(kH, ExtComplex(2));
  CHECK(close(h.phi, ExtComplex(2 + sqrt(ExtScalar(3))), tol));
  CHECK(close(h.psi, ExtComplex(3 + 2 * sqrt(ExtScalar(2))), tol));
  // (1/(2 sqrt e)) (2 + sqrt 3) e^{z/phi}, z/phi = 2(2 - sqrt 3)
  ExtScalar s3 = sqrt(ExtScalar(3));
  ExtScalar expect = (2 + s3) * exp(4 - 2 * s3) / (2 * sqrt(exp(ExtScalar(1))));
  CHECK(close(h.nth_root_limit, expect, tol));
  CHECK(h.nth_root_limit.convert_to<double>() == doctest::Approx(1.93423).epsilon(1e-5));
}

TEST_CASE("branch selection keeps |phi| > 1") {
  MapValues m = conformal_maps(kH, ExtComplex(-2));
  CHECK(close(m.phi, ExtComplex(-2 - sqrt(ExtScalar(3))), precision_tolerance(8)));
  MapValues c = conformal_maps(kH, ExtComplex(X("0.3"), X("-1e-30")));
  CHECK(abs(c.phi) > 1);
}

TEST_CASE("Laguerre limit values") {
  CHECK(conformal_maps(kL0, ExtComplex(-1)).nth_root_limit.convert_to<double>() ==
        doctest::Approx(1.2274).epsilon(1e-4));
  CHECK(conformal_maps(kL0, ExtComplex(3)).nth_root_limit.convert_to<double>() ==
        doctest::Approx(2.73781).epsilon(1e-5));
}

TEST_CASE("maps are undefined on the contracted support") {
  CHECK_THROWS_AS(conformal_maps(kH, ExtComplex(X("0.5"))), Error);
  CHECK_THROWS_AS(conformal_maps(kL0, ExtComplex(X("0.5"))), Error);
  CHECK(on_contracted_support(kL0, ExtComplex(X("1"))));
  CHECK_FALSE(on_contracted_support(kL0, ExtComplex(X("-0.1"))));
}

TEST_CASE("support distances") {
  CHECK(support_distance(kH, {4, 0}) == doctest::Approx(3));
  CHECK(support_sup_distance(kH, {4, 0}) == doctest::Approx(5));
  CHECK(support_distance(kL0, {0.5, 2}) == doctest::Approx(2));
}

TEST_CASE("nth-root report approaches the limit") {
  auto rows = nth_root_report(make_spec(kH, {ExtScalar(1)}), {ExtComplex(2)}, {50, 200});
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].rel_error <= X("0.05"));
  CHECK(rows[1].rel_error < rows[0].rel_error);
  CHECK(rows[0].limit == conformal_maps(kH, ExtComplex(2)).nth_root_limit);
}

TEST_CASE("ratio is exactly one when rho = 1") {
  auto rows = ratio_report(make_spec(kL0, {ExtScalar(1)}), {ExtComplex(-1)}, {30}, std::nullopt);
  CHECK(rows[0].region == Region::All);
  CHECK(rows[0].error < precision_tolerance(40));
}

TEST_CASE("regions relative to E(zeta)") {
  const ExtComplex zeta(4);
  CHECK(classify(kH, ExtComplex(5), zeta) == Region::Outer);
  CHECK(classify(kH, ExtComplex(X("0.5"), X("0.4")), zeta) == Region::Inner);
  CHECK_THROWS_AS(classify(kH, zeta, zeta), Error);
}

TEST_CASE("level curve through zeta") {
  const ExtComplex zeta(4);
  LevelCurve c = trace_level_curve(kH, zeta, default_window(kH, zeta), 0.05);
  CHECK(c.vertex_count() > 50);
  const double target = log_capital_psi(kH, {4, 0});
  for (const auto& line : c.polylines)
    for (const auto& v : line) CHECK(std::abs(log_capital_psi(kH, v) - target) <= c.tolerance);
  CHECK(curve_distance(c, {4, 0}) < 0.05);
  CHECK(c.tolerance == doctest::Approx(1e-3 * std::abs(target)));
}

TEST_CASE("Hermite curve is symmetric under z -> -conj(z)") {
  const ExtComplex zeta(ExtScalar(0), ExtScalar(2));
  LevelCurve c = trace_level_curve(kH, zeta, {-4, 4, -4, 4}, 0.05);
  for (const auto& line : c.polylines)
    for (const auto& v : line) CHECK(curve_distance(c, {-v.real(), v.imag()}) < 0.05);
}

TEST_CASE("Laguerre curve crosses the real axis left of 0") {
  LevelCurve c = trace_level_curve(kL0, ExtComplex(3), default_window(kL0, ExtComplex(3)), 0.05);
  bool left = false;
  for (const auto& line : c.polylines)
    for (const auto& v : line) left = left || (v.real() < 0 && std::abs(v.imag()) < 0.05);
  CHECK(left);
}

TEST_CASE("empty window has no curve") {
  CHECK_THROWS_AS(trace_level_curve(kH, ExtComplex(4), {20, 21, 20, 21}, 0.1), Error);
}

TEST_CASE("zero locus for Hermite rho = x^2 + 1, zeta = 4") {
  const ExtComplex zeta(4);
  LevelCurve c = trace_level_curve(kH, zeta, default_window(kH, zeta), 0.02);
  ZeroLocusReport r = zero_locus_distances(her_spec(), zeta, 60, c);
  CHECK(r.zeros.zeros.size() == 60);
  CHECK(r.within_bound);
  CHECK(r.tube_checked);
  CHECK(r.all_simple);
  CHECK(r.summary < 0.05);
}
