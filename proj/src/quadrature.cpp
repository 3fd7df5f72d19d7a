#include "diffortho/quadrature.hpp"

#include <Eigen/Eigenvalues>

#include <map>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace diffortho {

namespace mp = boost::multiprecision;

namespace {

using RuleKey = std::tuple<int, std::string, std::size_t, unsigned>;

std::shared_mutex g_rule_mutex;
std::map<RuleKey, std::shared_ptr<const QuadRule>> g_rules;

std::vector<double> seed_nodes(const Case& c, std::size_t n) {
  Eigen::VectorXd diag(n), sub(n > 1 ? n - 1 : 1);
  for (std::size_t k = 0; k < n; ++k) {
    const auto [a, b] = classical_recurrence_double(c, k);
    diag(static_cast<Eigen::Index>(k)) = a;
    if (k > 0) sub(static_cast<Eigen::Index>(k - 1)) = std::sqrt(b);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub.head(static_cast<Eigen::Index>(n - 1)), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::Eig, "tridiagonal eigen-solver did not converge");
  std::vector<double> x(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  return x;
}

// L_n(x) and L_n'(x) by forward recurrence.
void value_and_slope(const Case& c, std::size_t n, const ExtScalar& x, ExtScalar& p, ExtScalar& dp) {
  ExtScalar p0(1), p1 = x - classical_recurrence(c, 0).first;
  ExtScalar d0(0), d1(1);
  for (std::size_t k = 1; k < n; ++k) {
    auto [a, b] = classical_recurrence(c, k);
    ExtScalar t = x - a;
    ExtScalar p2 = t * p1 - b * p0;
    ExtScalar d2 = p1 + t * d1 - b * d0;
    p0.swap(p1);
    p1.swap(p2);
    d0.swap(d1);
    d1.swap(d2);
  }
  p = p1;
  dp = d1;
}

std::shared_ptr<const QuadRule> build_rule(const Case& c, std::size_t n) {
  auto rule = std::make_shared<QuadRule>();
  rule->basis = c;
  const auto seeds = seed_nodes(c, n);
  const ExtScalar tol = precision_tolerance(6);
  for (double s : seeds) {
    ExtScalar x(s), p, dp;
    bool done = false;
    for (int it = 0; it < 40 && !done; ++it) {
      value_and_slope(c, n, x, p, dp);
      if (dp == 0) throw Error(ErrorCode::Eig, "Gauss node refinement hit a critical point");
      ExtScalar dx = p / dp;
      x -= dx;
      done = mp::abs(dx) <= tol * (mp::abs(x) + 1);
    }
    if (!done) throw Error(ErrorCode::Eig, "Gauss node refinement did not converge");
    rule->nodes.push_back(x);
  }
  for (std::size_t k = 1; k < n; ++k)
    if (!(rule->nodes[k] > rule->nodes[k - 1])) throw Error(ErrorCode::Eig, "Gauss nodes collapsed during refinement");

  // w_k = 1 / sum_{j<n} L_j(x_k)^2 / tau_j
  const auto tau = classical_norms(c, n);
  for (const auto& x : rule->nodes) {
    const auto l = basis_values(c, n - 1, x);
    ExtScalar s(0);
    for (std::size_t j = 0; j < n; ++j) s += l[j] * l[j] / tau[j];
    rule->weights.push_back(1 / s);
  }
  return rule;
}

}  // namespace

std::shared_ptr<const QuadRule> gauss_rule(const Case& c, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::Shape, "a Gauss rule needs at least one node");
  RuleKey key{static_cast<int>(c.family), c.is_laguerre() ? to_decimal(c.alpha) : std::string(), n,
              precision_bits()};
  {
    std::shared_lock lock(g_rule_mutex);
    auto it = g_rules.find(key);
    if (it != g_rules.end()) return it->second;
  }
  auto rule = build_rule(c, n);
  std::unique_lock lock(g_rule_mutex);
  auto [it, inserted] = g_rules.emplace(key, std::move(rule));
  return it->second;
}

}  // namespace diffortho
