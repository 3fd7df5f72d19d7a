#include "diffortho/construct.hpp"

namespace diffortho {

namespace mp = boost::multiprecision;

ExtComplex DiffOrthoPoly::eval_q(const ExtComplex& z) const { return eval_clenshaw(qhat, z) - q_const; }

DiffOrthoPoly qhat(const MeasureSpec& spec, std::size_t n) {
  DiffOrthoPoly d;
  d.spec = spec;
  d.n = n;
  d.pn = pn_construct(spec, n);
  // lambda_n / lambda_{n-k} = n / (n-k), kept as an exact rational.
  std::vector<ExtScalar> c(n + 1, ExtScalar(0));
  const std::size_t lo = n - std::min(n, spec.m());
  for (std::size_t j = lo; j <= n; ++j) {
    if (j == 0) {
      // Only reachable when m = n, which pn_construct rejects.
      throw Error(ErrorCode::Internal, "lambda_0 = 0 cannot be divided by");
    }
    c[j] = d.pn.coeffs[j] * static_cast<unsigned long>(n) / static_cast<unsigned long>(j);
  }
  d.qhat = BasisPoly(spec.basis, std::move(c));
  return d;
}

DiffOrthoPoly q_with_root(const MeasureSpec& spec, std::size_t n, const ExtComplex& zeta) {
  DiffOrthoPoly d = qhat(spec, n);
  d.zeta = zeta;
  d.q_const = eval_clenshaw(d.qhat, zeta);
  return d;
}

std::vector<ExtScalar> diff_orthogonality_residuals(const DiffOrthoPoly& d, std::size_t kmax) {
  const BasisPoly lq = apply_operator(d.spec.basis, d.qhat);
  std::vector<std::pair<BasisPoly, BasisPoly>> pairs;
  pairs.emplace_back(lq, lq);
  for (std::size_t k = 0; k <= kmax; ++k) {
    BasisPoly xk = monomial_in_basis(d.spec.basis, k);
    pairs.emplace_back(lq, xk);
    pairs.emplace_back(xk, xk);
  }
  const auto v = inner_mu_batch(pairs, d.spec);
  const ExtScalar norm_lq = mp::sqrt(v[0]);
  std::vector<ExtScalar> out;
  for (std::size_t k = 0; k <= kmax; ++k) {
    const ExtScalar denom = norm_lq * mp::sqrt(v[2 + 2 * k]);
    out.push_back(denom > 0 ? ExtScalar(mp::abs(v[1 + 2 * k]) / denom) : ExtScalar(mp::abs(v[1 + 2 * k])));
  }
  return out;
}

ExtScalar eigen_residual(const DiffOrthoPoly& d) {
  const BasisPoly lq = apply_operator(d.spec.basis, d.qhat);
  const long lambda = classical_constants(d.spec.basis, d.n).lambda;
  return relative_basis_deviation(lq, scale(d.pn, ExtScalar(lambda)));
}

std::vector<ExtScalar> quasi_orthogonality_residuals(const MeasureSpec& spec, std::size_t n) {
  const BasisPoly p = pn_construct(spec, n);
  const ExtScalar np = w_norm(p);
  std::vector<ExtScalar> out;
  for (std::size_t k = 0; k + spec.m() <= n; ++k) {
    const BasisPoly xk = monomial_in_basis(spec.basis, k);
    out.push_back(mp::abs(inner_w(p, xk)) / (np * w_norm(xk)));
  }
  return out;
}

std::vector<CoeffGrowthRow> coeff_growth_report(const MeasureSpec& spec, const std::vector<std::size_t>& n_list) {
  std::vector<CoeffGrowthRow> rows;
  for (std::size_t n : n_list) {
    const BasisPoly p = pn_construct(spec, n);
    const ExtScalar nn(static_cast<unsigned long>(n));
    for (std::size_t k = 1; k <= spec.m(); ++k) {
      CoeffGrowthRow row;
      row.n = n;
      row.k = k;
      row.abs_b = mp::abs(p.coeffs[n - k]);
      const ExtScalar growth = spec.basis.is_laguerre() ? ExtScalar(mp::pow(nn, static_cast<long>(k)))
                                                        : ExtScalar(mp::pow(nn, ExtScalar(k) / 2));
      row.ratio = row.abs_b / growth;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace diffortho
