#include "support.hpp"

using namespace diffortho;
using diffortho::testing::close;

TEST_CASE("error names") {
  CHECK(error_name(ErrorCode::Measure) == "E_MEASURE");
  CHECK(error_name(ErrorCode::NoConv) == "E_NOCONV");
  Error e(ErrorCode::Branch, "x");
  CHECK(std::string(e.what()).find("E_BRANCH") != std::string::npos);
}

TEST_CASE("precision guard restores") {
  const unsigned before = precision_bits();
  {
    PrecisionGuard g(128);
    CHECK(precision_bits() == 128);
  }
  CHECK(precision_bits() == before);
  CHECK_THROWS_AS(set_precision_bits(32), Error);
}

TEST_CASE("decimal round trip at working precision") {
  for (const char* s : {"0.1", "-3.25e-40", "1e300", "2"}) {
    ExtScalar x = parse_scalar(s) / 3;
    CHECK(parse_scalar(to_decimal(x)) == x);
  }
  CHECK(parse_scalar(to_decimal(pi_value())) == pi_value());
}

TEST_CASE("malformed numbers") {
  CHECK_THROWS_AS(parse_scalar("1..2"), Error);
  CHECK_THROWS_AS(parse_scalar("abc"), Error);
  CHECK_THROWS_AS(parse_complex(""), Error);
}

TEST_CASE("complex parsing") {
  ExtComplex a = parse_complex("4+0i");
  CHECK(a.re == 4);
  CHECK(a.im == 0);
  ExtComplex b = parse_complex("-1.5e-3-2i");
  CHECK(b.re == parse_scalar("-1.5e-3"));
  CHECK(b.im == -2);
  CHECK(parse_complex("2i").im == 2);
  CHECK(parse_complex("-i").im == -1);
  CHECK(parse_complex("3").re == 3);
}

TEST_CASE("principal branches") {
  const ExtScalar tol = precision_tolerance(8);
  ExtComplex r = sqrt(ExtComplex(ExtScalar(-4)));
  CHECK(close(r, ExtComplex(ExtScalar(0), ExtScalar(2)), tol));
  // just below the cut
  ExtComplex below(ExtScalar(-4), -ExtScalar(0));
  CHECK(sqrt(below).im < 0);
  ExtComplex z(ExtScalar("0.3"), ExtScalar("-1.7"));
  CHECK(close(exp(log(z)), z, tol));
  CHECK(close(sqrt(z) * sqrt(z), z, tol));
  CHECK(close(abs(log(ExtComplex(ExtScalar(-1)))), pi_value(), tol));
}
