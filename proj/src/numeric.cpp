#include "diffortho/numeric.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <regex>

namespace diffortho {

namespace {

std::atomic<unsigned> g_precision_bits{0};

unsigned digits10_for_bits(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

void apply_precision(unsigned bits) {
  ExtScalar::default_precision(digits10_for_bits(bits));
  g_precision_bits.store(bits);
}

struct PrecisionInit {
  PrecisionInit() {
    if (g_precision_bits.load() == 0) apply_precision(kDefaultPrecisionBits);
  }
};
const PrecisionInit g_precision_init;

}  // namespace

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Range: return "E_RANGE";
    case ErrorCode::Basis: return "E_BASIS";
    case ErrorCode::Measure: return "E_MEASURE";
    case ErrorCode::Eig: return "E_EIG";
    case ErrorCode::NoConv: return "E_NOCONV";
    case ErrorCode::Singular: return "E_SINGULAR";
    case ErrorCode::Shape: return "E_SHAPE";
    case ErrorCode::Branch: return "E_BRANCH";
    case ErrorCode::Region: return "E_REGION";
    case ErrorCode::Empty: return "E_EMPTY";
    case ErrorCode::Collide: return "E_COLLIDE";
    case ErrorCode::Pole: return "E_POLE";
    case ErrorCode::Degenerate: return "E_DEGENERATE";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_INTERNAL";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void set_precision_bits(unsigned bits) {
  if (bits < 64) throw Error(ErrorCode::Shape, "precision must be at least 64 bits");
  apply_precision(bits);
}

unsigned precision_bits() {
  unsigned bits = g_precision_bits.load();
  if (bits == 0) {
    apply_precision(kDefaultPrecisionBits);
    bits = kDefaultPrecisionBits;
  }
  return bits;
}

PrecisionGuard::PrecisionGuard(unsigned bits) : saved_(precision_bits()) { set_precision_bits(bits); }
PrecisionGuard::~PrecisionGuard() { apply_precision(saved_); }

ExtScalar pow2(long exponent) {
  ExtScalar one(1);
  return boost::multiprecision::ldexp(one, static_cast<int>(exponent));
}

ExtScalar precision_tolerance(int slack) {
  return pow2(-(static_cast<long>(precision_bits()) - slack));
}

ExtScalar precision_fraction(unsigned divisor) {
  return pow2(-static_cast<long>(precision_bits() / divisor));
}

ExtScalar pi_value() { return boost::math::constants::pi<ExtScalar>(); }

bool is_finite(const ExtScalar& x) { return boost::multiprecision::isfinite(x); }

std::string to_decimal(const ExtScalar& x) {
  const auto bits = mpfr_get_prec(x.backend().data());
  const auto digits = static_cast<std::streamsize>(std::ceil(bits * 0.30102999566398120)) + 2;
  return x.str(digits, std::ios_base::scientific);
}

ExtScalar parse_scalar(std::string_view text) {
  static const std::regex number(R"(^[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?$)");
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (!std::regex_match(s, number)) throw Error(ErrorCode::Shape, "malformed number '" + std::string(text) + "'");
  return ExtScalar(s);
}

// ---------------------------------------------------------------------------

ExtComplex& ExtComplex::operator+=(const ExtComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}
ExtComplex& ExtComplex::operator-=(const ExtComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
ExtComplex& ExtComplex::operator*=(const ExtComplex& o) {
  ExtScalar r = re * o.re - im * o.im;
  ExtScalar i = re * o.im + im * o.re;
  re.swap(r);
  im.swap(i);
  return *this;
}
ExtComplex& ExtComplex::operator/=(const ExtComplex& o) {
  ExtScalar d = o.re * o.re + o.im * o.im;
  ExtScalar r = (re * o.re + im * o.im) / d;
  ExtScalar i = (im * o.re - re * o.im) / d;
  re.swap(r);
  im.swap(i);
  return *this;
}
ExtComplex& ExtComplex::operator*=(const ExtScalar& s) {
  re *= s;
  im *= s;
  return *this;
}
ExtComplex& ExtComplex::operator/=(const ExtScalar& s) {
  re /= s;
  im /= s;
  return *this;
}

ExtComplex operator+(ExtComplex a, const ExtComplex& b) { return a += b; }
ExtComplex operator-(ExtComplex a, const ExtComplex& b) { return a -= b; }
ExtComplex operator*(ExtComplex a, const ExtComplex& b) { return a *= b; }
ExtComplex operator/(ExtComplex a, const ExtComplex& b) { return a /= b; }
ExtComplex operator*(ExtComplex a, const ExtScalar& s) { return a *= s; }
ExtComplex operator*(const ExtScalar& s, ExtComplex a) { return a *= s; }
ExtComplex operator/(ExtComplex a, const ExtScalar& s) { return a /= s; }
ExtComplex operator-(const ExtComplex& a) { return {ExtScalar(-a.re), ExtScalar(-a.im)}; }

ExtScalar norm(const ExtComplex& z) { return z.re * z.re + z.im * z.im; }
ExtScalar abs(const ExtComplex& z) { return boost::multiprecision::sqrt(norm(z)); }
ExtScalar arg(const ExtComplex& z) { return boost::multiprecision::atan2(z.im, z.re); }
ExtComplex conj(const ExtComplex& z) { return {z.re, ExtScalar(-z.im)}; }

ExtComplex sqrt(const ExtComplex& z) {
  using boost::multiprecision::signbit;
  if (z.re == 0 && z.im == 0) return {ExtScalar(0), ExtScalar(z.im)};
  const ExtScalar r = abs(z);
  if (z.re >= 0) {
    ExtScalar t = boost::multiprecision::sqrt((r + z.re) / 2);
    ExtScalar i = z.im / (2 * t);
    return {t, i};
  }
  ExtScalar t = boost::multiprecision::sqrt((r - z.re) / 2);
  ExtScalar re = boost::multiprecision::abs(z.im) / (2 * t);
  if (signbit(z.im)) t = -t;
  return {re, t};
}

ExtComplex log(const ExtComplex& z) { return {ExtScalar(boost::multiprecision::log(abs(z))), arg(z)}; }

ExtComplex exp(const ExtComplex& z) {
  const ExtScalar m = boost::multiprecision::exp(z.re);
  return {ExtScalar(m * boost::multiprecision::cos(z.im)), ExtScalar(m * boost::multiprecision::sin(z.im))};
}

bool is_finite(const ExtComplex& z) { return is_finite(z.re) && is_finite(z.im); }

ExtComplex parse_complex(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw Error(ErrorCode::Shape, "empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_scalar(s), ExtScalar(0)};
  s.pop_back();
  // Split at the last sign that is not an exponent sign and not the leading character.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
  std::string imag_part = split == std::string::npos ? s : s.substr(split);
  if (imag_part.empty() || imag_part == "+") imag_part = "1";
  if (imag_part == "-") imag_part = "-1";
  ExtScalar re = real_part.empty() ? ExtScalar(0) : parse_scalar(real_part);
  return {re, parse_scalar(imag_part)};
}

}  // namespace diffortho
