#include "diffortho/polycore.hpp"

#include "diffortho/quadrature.hpp"

#include <algorithm>
#include <cctype>

namespace diffortho {

namespace mp = boost::multiprecision;

Case Case::laguerre(const ExtScalar& alpha) {
  if (!is_finite(alpha) || alpha <= -1) throw Error(ErrorCode::Shape, "Laguerre parameter must satisfy alpha > -1");
  Case c;
  c.family = Family::Laguerre;
  c.alpha = alpha;
  return c;
}

Case Case::hermite() { return Case{}; }

bool Case::same_basis(const Case& other) const {
  if (family != other.family) return false;
  return family == Family::Hermite || alpha == other.alpha;
}

std::string Case::name() const { return is_laguerre() ? "laguerre" : "hermite"; }

Case parse_case(const std::string& name, const ExtScalar& alpha) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "laguerre") return Case::laguerre(alpha);
  if (lower == "hermite") return Case::hermite();
  throw Error(ErrorCode::Shape, "unknown case '" + name + "' (expected laguerre or hermite)");
}

BasisPoly::BasisPoly(Case c, std::vector<ExtScalar> d) : basis(std::move(c)), coeffs(std::move(d)) {
  if (coeffs.empty()) coeffs.emplace_back(0);
  for (const auto& v : coeffs)
    if (!is_finite(v)) throw Error(ErrorCode::Range, "non-finite basis coefficient");
}

BasisPoly basis_element(const Case& c, std::size_t n) {
  std::vector<ExtScalar> d(n + 1, ExtScalar(0));
  d[n] = 1;
  return {c, std::move(d)};
}

BasisPoly zero_poly(const Case& c) { return {c, {ExtScalar(0)}}; }

std::pair<ExtScalar, ExtScalar> classical_recurrence(const Case& c, std::size_t k) {
  if (c.is_laguerre()) {
    ExtScalar kk(static_cast<unsigned long>(k));
    return {2 * kk + c.alpha + 1, kk * (kk + c.alpha)};
  }
  return {ExtScalar(0), ExtScalar(static_cast<unsigned long>(k)) / 2};
}

std::pair<double, double> classical_recurrence_double(const Case& c, std::size_t k) {
  const double kk = static_cast<double>(k);
  if (c.is_laguerre()) {
    const double a = c.alpha.convert_to<double>();
    return {2 * kk + a + 1, kk * (kk + a)};
  }
  return {0.0, kk / 2};
}

ExtScalar weight_mass(const Case& c) {
  if (c.is_laguerre()) return mp::tgamma(ExtScalar(c.alpha + 1));
  return mp::sqrt(pi_value());
}

std::vector<ExtScalar> classical_norms(const Case& c, std::size_t n) {
  std::vector<ExtScalar> tau;
  tau.reserve(n + 1);
  tau.push_back(weight_mass(c));
  for (std::size_t k = 1; k <= n; ++k) tau.push_back(tau.back() * classical_recurrence(c, k).second);
  return tau;
}

ExtScalar scaling_constant(const Case& c, std::size_t n) {
  ExtScalar nn(static_cast<unsigned long>(n));
  if (c.is_laguerre()) return 4 * nn;
  return mp::sqrt(2 * nn);
}

ClassicalConstants classical_constants(const Case& c, std::size_t n) {
  ClassicalConstants out;
  out.tau = classical_norms(c, n).back();
  out.lambda = -static_cast<long>(n);
  out.c_n = scaling_constant(c, n);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

template <class T>
T clenshaw(const BasisPoly& p, const T& z) {
  const std::size_t n = p.degree();
  T y1(0), y2(0);  // y_{k+1}, y_{k+2}
  for (std::size_t k = n + 1; k-- > 0;) {
    auto [a, b] = classical_recurrence(p.basis, k);
    const ExtScalar b_next = classical_recurrence(p.basis, k + 1).second;
    T y = T(p.coeffs[k]) + (z - T(a)) * y1 - y2 * b_next;
    y2 = std::move(y1);
    y1 = std::move(y);
  }
  if (!is_finite(y1)) throw Error(ErrorCode::Range, "polynomial value overflows the number range");
  return y1;
}

}  // namespace

ExtScalar eval_clenshaw(const BasisPoly& p, const ExtScalar& x) { return clenshaw(p, x); }
ExtComplex eval_clenshaw(const BasisPoly& p, const ExtComplex& z) { return clenshaw(p, z); }

Jet2 eval_with_derivatives(const BasisPoly& p, const ExtComplex& z) {
  const std::size_t n = p.degree();
  ExtComplex y1, y2, d1, d2, s1, s2;  // value, first and second derivative sequences
  for (std::size_t k = n + 1; k-- > 0;) {
    auto [a, b] = classical_recurrence(p.basis, k);
    const ExtScalar b_next = classical_recurrence(p.basis, k + 1).second;
    const ExtComplex t = z - ExtComplex(a);
    ExtComplex s = d1 * ExtScalar(2) + t * s1 - s2 * b_next;
    ExtComplex d = y1 + t * d1 - d2 * b_next;
    ExtComplex y = ExtComplex(p.coeffs[k]) + t * y1 - y2 * b_next;
    s2 = std::move(s1);
    s1 = std::move(s);
    d2 = std::move(d1);
    d1 = std::move(d);
    y2 = std::move(y1);
    y1 = std::move(y);
  }
  if (!is_finite(y1) || !is_finite(d1) || !is_finite(s1))
    throw Error(ErrorCode::Range, "polynomial value overflows the number range");
  return {y1, d1, s1};
}

std::vector<std::complex<double>> scaled_coefficients(const BasisPoly& p, const ExtComplex& shift,
                                                      const ExtScalar& c) {
  const std::size_t n = p.degree();
  std::vector<std::complex<double>> e(n + 1);
  ExtScalar factor(1);  // c^{j-n}
  for (std::size_t j = n + 1; j-- > 0;) {
    ExtComplex d(p.coeffs[j]);
    if (j == 0) d -= shift;
    e[j] = (d * factor).to_complex();
    factor /= c;
  }
  return e;
}

std::complex<double> eval_scaled_double(const Case& c_case, const std::vector<std::complex<double>>& e,
                                        double scale, std::complex<double> u, std::complex<double>* deriv) {
  using cd = std::complex<double>;
  const std::size_t n = e.size() - 1;
  cd y1 = 0, y2 = 0, d1 = 0, d2 = 0;
  for (std::size_t k = n + 1; k-- > 0;) {
    const auto [a, b] = classical_recurrence_double(c_case, k);
    const double b_next = classical_recurrence_double(c_case, k + 1).second / (scale * scale);
    const cd t = u - a / scale;
    cd d = y1 + t * d1 - b_next * d2;
    cd y = e[k] + t * y1 - b_next * y2;
    d2 = d1;
    d1 = d;
    y2 = y1;
    y1 = y;
  }
  if (deriv) *deriv = d1;
  return y1;
}

template <class T>
static std::vector<T> forward_values(const Case& c, std::size_t n, const T& z) {
  std::vector<T> v;
  v.reserve(n + 1);
  v.emplace_back(1);
  if (n == 0) return v;
  v.push_back(z - T(classical_recurrence(c, 0).first));
  for (std::size_t k = 1; k < n; ++k) {
    auto [a, b] = classical_recurrence(c, k);
    v.push_back((z - T(a)) * v[k] - v[k - 1] * b);
  }
  return v;
}

std::vector<ExtComplex> basis_values(const Case& c, std::size_t n, const ExtComplex& z) {
  return forward_values(c, n, z);
}
std::vector<ExtScalar> basis_values(const Case& c, std::size_t n, const ExtScalar& x) {
  return forward_values(c, n, x);
}

// ---------------------------------------------------------------------------

BasisPoly derivative_in_basis(const BasisPoly& p) {
  Case target = p.basis;
  if (target.is_laguerre()) target.alpha = p.basis.alpha + 1;
  const std::size_t n = p.degree();
  if (n == 0) return zero_poly(target);
  std::vector<ExtScalar> r(n);
  for (std::size_t j = 1; j <= n; ++j) r[j - 1] = p.coeffs[j] * static_cast<unsigned long>(j);
  return {target, std::move(r)};
}

BasisPoly apply_operator(const Case& c, const BasisPoly& p) {
  if (!c.same_basis(p.basis)) throw Error(ErrorCode::Basis, "operator and polynomial bases differ");
  const std::size_t n = p.degree();
  if (n == 0) return zero_poly(c);
  const BasisPoly p1 = derivative_in_basis(p);
  const BasisPoly p2 = derivative_in_basis(p1);
  const auto rule = gauss_rule(c, n + 1);
  const auto tau = classical_norms(c, n);
  std::vector<ExtScalar> out(n + 1, ExtScalar(0));
  for (std::size_t k = 0; k < rule->size(); ++k) {
    const ExtScalar& x = rule->nodes[k];
    const ExtScalar v1 = eval_clenshaw(p1, x);
    const ExtScalar v2 = eval_clenshaw(p2, x);
    ExtScalar v = c.is_laguerre() ? ExtScalar(x * v2 + (1 + c.alpha - x) * v1) : ExtScalar(v2 / 2 - x * v1);
    v *= rule->weights[k];
    const auto l = basis_values(c, n, x);
    for (std::size_t j = 0; j <= n; ++j) out[j] += v * l[j];
  }
  for (std::size_t j = 0; j <= n; ++j) out[j] /= tau[j];
  return {c, std::move(out)};
}

BasisPoly multiply_by_x(const BasisPoly& p) {
  const std::size_t n = p.degree();
  std::vector<ExtScalar> r(n + 2, ExtScalar(0));
  for (std::size_t j = 0; j <= n; ++j) {
    if (p.coeffs[j] == 0) continue;
    auto [a, b] = classical_recurrence(p.basis, j);
    r[j + 1] += p.coeffs[j];
    r[j] += a * p.coeffs[j];
    if (j > 0) r[j - 1] += b * p.coeffs[j];
  }
  return {p.basis, std::move(r)};
}

BasisPoly add(const BasisPoly& p, const BasisPoly& q) {
  if (!p.basis.same_basis(q.basis)) throw Error(ErrorCode::Basis, "cannot add polynomials from different bases");
  std::vector<ExtScalar> r(std::max(p.coeffs.size(), q.coeffs.size()), ExtScalar(0));
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) r[j] += p.coeffs[j];
  for (std::size_t j = 0; j < q.coeffs.size(); ++j) r[j] += q.coeffs[j];
  return {p.basis, std::move(r)};
}

BasisPoly scale(const BasisPoly& p, const ExtScalar& s) {
  std::vector<ExtScalar> r(p.coeffs);
  for (auto& v : r) v *= s;
  return {p.basis, std::move(r)};
}

BasisPoly monomial_in_basis(const Case& c, std::size_t k) {
  BasisPoly p = basis_element(c, 0);
  for (std::size_t j = 0; j < k; ++j) p = multiply_by_x(p);
  return p;
}

std::vector<ExtScalar> to_monomial(const BasisPoly& p) {
  const std::size_t n = p.degree();
  std::vector<ExtScalar> prev{ExtScalar(1)}, cur, out(n + 1, ExtScalar(0));
  out[0] += p.coeffs[0];
  std::vector<ExtScalar> before;  // L_{k-1}
  for (std::size_t k = 0; k < n; ++k) {
    auto [a, b] = classical_recurrence(p.basis, k);
    std::vector<ExtScalar> next(prev.size() + 1, ExtScalar(0));
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + 1] += prev[i];
      next[i] -= a * prev[i];
    }
    for (std::size_t i = 0; i < before.size(); ++i) next[i] -= b * before[i];
    before = std::move(prev);
    prev = std::move(next);
    for (std::size_t i = 0; i < prev.size(); ++i) out[i] += p.coeffs[k + 1] * prev[i];
  }
  return out;
}

ExtScalar w_norm(const BasisPoly& p) {
  const auto tau = classical_norms(p.basis, p.degree());
  ExtScalar s(0);
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) s += p.coeffs[j] * p.coeffs[j] * tau[j];
  return mp::sqrt(s);
}

ExtScalar relative_basis_deviation(const BasisPoly& p, const BasisPoly& q) {
  if (!p.basis.same_basis(q.basis)) throw Error(ErrorCode::Basis, "cannot compare polynomials from different bases");
  const std::size_t n = std::max(p.degree(), q.degree());
  const auto tau = classical_norms(p.basis, n);
  ExtScalar worst(0);
  for (std::size_t j = 0; j <= n; ++j) {
    ExtScalar a = j < p.coeffs.size() ? p.coeffs[j] : ExtScalar(0);
    ExtScalar b = j < q.coeffs.size() ? q.coeffs[j] : ExtScalar(0);
    ExtScalar d = mp::abs(a - b) * mp::sqrt(tau[j]);
    if (d > worst) worst = d;
  }
  const ExtScalar ref = w_norm(q);
  return ref > 0 ? ExtScalar(worst / ref) : worst;
}

}  // namespace diffortho
