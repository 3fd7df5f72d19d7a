#pragma once

// Extended-precision scalar/complex types, error codes and precision control.
// Every numeric kernel in the library works on ExtScalar / ExtComplex; the
// working precision is a process-wide setting (default 256 mantissa bits).

#include <boost/multiprecision/mpfr.hpp>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace diffortho {

using ExtScalar = boost::multiprecision::mpfr_float;

enum class ErrorCode {
  Range,
  Basis,
  Measure,
  Eig,
  NoConv,
  Singular,
  Shape,
  Branch,
  Region,
  Empty,
  Collide,
  Pole,
  Degenerate,
  Internal,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// ---------------------------------------------------------------------------
// Precision

inline constexpr unsigned kDefaultPrecisionBits = 256;

/// Sets the working precision in mantissa bits (>= 64). New ExtScalar values
/// are created with at least this many bits.
void set_precision_bits(unsigned bits);
unsigned precision_bits();

/// Restores the previous working precision on scope exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(unsigned bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  unsigned saved_;
};

/// 2^-(B - slack) for the configured precision B.
ExtScalar precision_tolerance(int slack);
/// 2^-(B / divisor).
ExtScalar precision_fraction(unsigned divisor);
ExtScalar pow2(long exponent);

ExtScalar pi_value();

bool is_finite(const ExtScalar& x);

/// Decimal string with enough digits to round-trip at the working precision.
std::string to_decimal(const ExtScalar& x);
/// Parses a decimal string; throws Error(Shape) on malformed input.
ExtScalar parse_scalar(std::string_view text);

// ---------------------------------------------------------------------------
// Complex numbers over ExtScalar. std::complex is only specified for the
// built-in floating types, so this is a small value type of its own.

struct ExtComplex {
  ExtScalar re{0};
  ExtScalar im{0};

  ExtComplex() = default;
  ExtComplex(ExtScalar real) : re(std::move(real)), im(0) {}  // NOLINT: implicit by design of arithmetic
  ExtComplex(ExtScalar real, ExtScalar imag) : re(std::move(real)), im(std::move(imag)) {}
  ExtComplex(int real) : re(real), im(0) {}  // NOLINT
  ExtComplex(double real) : re(real), im(0) {}  // NOLINT
  static ExtComplex from(std::complex<double> z) { return {ExtScalar(z.real()), ExtScalar(z.imag())}; }

  std::complex<double> to_complex() const {
    return {re.convert_to<double>(), im.convert_to<double>()};
  }

  ExtComplex& operator+=(const ExtComplex& o);
  ExtComplex& operator-=(const ExtComplex& o);
  ExtComplex& operator*=(const ExtComplex& o);
  ExtComplex& operator/=(const ExtComplex& o);
  ExtComplex& operator*=(const ExtScalar& s);
  ExtComplex& operator/=(const ExtScalar& s);
};

ExtComplex operator+(ExtComplex a, const ExtComplex& b);
ExtComplex operator-(ExtComplex a, const ExtComplex& b);
ExtComplex operator*(ExtComplex a, const ExtComplex& b);
ExtComplex operator/(ExtComplex a, const ExtComplex& b);
ExtComplex operator*(ExtComplex a, const ExtScalar& s);
ExtComplex operator*(const ExtScalar& s, ExtComplex a);
ExtComplex operator/(ExtComplex a, const ExtScalar& s);
ExtComplex operator-(const ExtComplex& a);

ExtScalar abs(const ExtComplex& z);
ExtScalar norm(const ExtComplex& z);  // |z|^2
ExtScalar arg(const ExtComplex& z);
ExtComplex conj(const ExtComplex& z);
/// Principal square root (branch cut on the negative real axis).
ExtComplex sqrt(const ExtComplex& z);
/// Principal logarithm.
ExtComplex log(const ExtComplex& z);
ExtComplex exp(const ExtComplex& z);
bool is_finite(const ExtComplex& z);

/// Parses "a+bi", "a-bi", "a", "bi" (with optional spaces removed).
ExtComplex parse_complex(std::string_view text);

}  // namespace diffortho
