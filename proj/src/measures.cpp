#include "diffortho/measures.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

// How <p, q>_mu is evaluated.
//
// Let Q_N be the N-node Gauss rule of w and eps_i(z) = Q_N[L_i / (z - x)].
// Because x L_i = L_{i+1} + a_i L_i + b_i L_{i-1} and the rule integrates
// L_i exactly, eps satisfies the same three-term recurrence (with an
// inhomogeneous term mu_0 at i = 0), and eps_N = 0 since L_N vanishes at the
// nodes. Running the recurrence backward from eps_N = 0 therefore gives
// eps_0..eps_{N-1} without forming nodes or weights, and it is the stable
// (minimal) direction. For i >= j and i < N,
//   Q_N[L_i L_j / (z - x)] = L_j(z) eps_i(z),
// since (L_j(x) - L_j(z)) / (x - z) has degree j-1 < i. Writing 1/rho as
// partial fractions over its roots z_l turns Q_N[p q / rho] into a finite sum
// of those terms; roots of multiplicity r are handled with truncated Taylor
// series in z (derivatives of 1/(z - x)). The result is exactly the N-node
// Gauss value, so node doubling behaves as it would with explicit rules.

namespace diffortho {

namespace mp = boost::multiprecision;

namespace {

using Series = std::vector<ExtComplex>;  // truncated Taylor coefficients in t

Series series_mul(const Series& a, const Series& b) {
  const std::size_t r = a.size();
  Series c(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; i + j < r; ++j) c[i + j] += a[i] * b[j];
  return c;
}

Series series_inv(const Series& a) {
  const std::size_t r = a.size();
  Series c(r);
  const ExtComplex inv0 = ExtComplex(1) / a[0];
  c[0] = inv0;
  for (std::size_t k = 1; k < r; ++k) {
    ExtComplex s;
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * c[k - j];
    c[k] = -(s * inv0);
  }
  return c;
}

ExtComplex horner(const std::vector<ExtScalar>& c, const ExtComplex& z) {
  ExtComplex v;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + ExtComplex(c[k]);
  return v;
}

std::vector<ExtScalar> poly_derivative(const std::vector<ExtScalar>& c) {
  std::vector<ExtScalar> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * static_cast<unsigned long>(k));
  if (d.empty()) d.emplace_back(0);
  return d;
}

ExtScalar poly_scale(const std::vector<ExtScalar>& c, const ExtScalar& r) {
  ExtScalar s(0), p(1);
  for (const auto& v : c) {
    s += mp::abs(v) * p;
    p *= r;
  }
  return s;
}

bool newton_polish(const std::vector<ExtScalar>& c, ExtComplex& z) {
  const auto dc = poly_derivative(c);
  const ExtScalar tol = precision_tolerance(8);
  for (int it = 0; it < 200; ++it) {
    const ExtComplex d = horner(dc, z);
    if (d.re == 0 && d.im == 0) return horner(c, z).re == 0 && horner(c, z).im == 0;
    const ExtComplex dz = horner(c, z) / d;
    z -= dz;
    if (abs(dz) <= tol * (abs(z) + 1)) return true;
  }
  return false;
}

struct RootGroup {
  ExtComplex z;
  int multiplicity = 1;
};

// Roots of a real polynomial given by monomial coefficients (degree >= 1):
// double companion seeds, clustering for repeated roots, Newton polishing.
std::vector<RootGroup> polynomial_roots(const std::vector<ExtScalar>& c) {
  const std::size_t m = c.size() - 1;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  const ExtScalar lead = c[m];
  for (std::size_t i = 0; i < m; ++i) {
    comp(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(m - 1)) = ExtScalar(-c[i] / lead).convert_to<double>();
    if (i + 1 < m) comp(static_cast<Eigen::Index>(i + 1), static_cast<Eigen::Index>(i)) = 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  if (es.info() != Eigen::Success) throw Error(ErrorCode::Eig, "companion eigen-solve for rho failed");
  std::vector<std::complex<double>> seeds;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) seeds.push_back(es.eigenvalues()(i));

  std::vector<bool> used(seeds.size(), false);
  std::vector<RootGroup> out;
  const ExtScalar accept = precision_fraction(2);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (used[i]) continue;
    std::vector<std::size_t> members{i};
    used[i] = true;
    for (std::size_t j = i + 1; j < seeds.size(); ++j) {
      if (!used[j] && std::abs(seeds[j] - seeds[i]) <= 1e-4 * std::max(1.0, std::abs(seeds[i]))) {
        members.push_back(j);
        used[j] = true;
      }
    }
    std::complex<double> centre = 0;
    for (auto k : members) centre += seeds[k];
    centre /= static_cast<double>(members.size());
    const int r = static_cast<int>(members.size());

    bool grouped = false;
    if (r > 1) {
      // A genuine r-fold root is a simple root of rho^{(r-1)} where the lower derivatives vanish.
      std::vector<std::vector<ExtScalar>> ders{c};
      for (int k = 1; k < r; ++k) ders.push_back(poly_derivative(ders.back()));
      ExtComplex z = ExtComplex::from(centre);
      if (newton_polish(ders[static_cast<std::size_t>(r - 1)], z)) {
        grouped = true;
        for (int k = 0; k + 1 < r && grouped; ++k) {
          const auto& d = ders[static_cast<std::size_t>(k)];
          grouped = abs(horner(d, z)) <= accept * poly_scale(d, abs(z));
        }
        if (grouped) out.push_back({z, r});
      }
    }
    if (!grouped) {
      for (auto k : members) {
        ExtComplex z = ExtComplex::from(seeds[k]);
        if (!newton_polish(c, z)) throw Error(ErrorCode::Measure, "roots of rho could not be resolved");
        out.push_back({z, 1});
      }
    }
  }
  // Separate roots must stay separate after polishing.
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = i + 1; j < out.size(); ++j)
      if (abs(out[i].z - out[j].z) <= precision_fraction(4) * (abs(out[i].z) + 1))
        throw Error(ErrorCode::Measure, "nearly repeated roots of rho cannot be resolved at this precision");
  return out;
}

struct RepRoot {
  ExtComplex z;
  int r = 1;
  ExtScalar weight{1};          // 1 for a real root, 2 for a conjugate pair
  std::vector<ExtComplex> A;  // A[s-1]: coefficient of (x - z)^{-s} in 1/rho
};

struct EpsLevel {
  std::size_t depth = 0;                 // eps stored for i = 0..depth
  std::vector<std::vector<Series>> eps;  // [rep][i]
};

struct BasisLevel {
  std::size_t depth = 0;
  std::vector<std::vector<Series>> values;  // [rep][j] = L_j(z + t)
};

class MeasureModel {
 public:
  Case basis;
  std::vector<ExtScalar> rho;
  ExtScalar mu0;
  std::vector<RhoRoot> roots;
  std::vector<RepRoot> reps;

  std::shared_ptr<const EpsLevel> eps_level(std::size_t nodes, std::size_t depth);
  std::shared_ptr<const BasisLevel> basis_level(std::size_t depth);

 private:
  std::shared_mutex mutex_;
  std::map<std::size_t, std::shared_ptr<const EpsLevel>> eps_;
  std::shared_ptr<const BasisLevel> basis_;
};

std::shared_ptr<const EpsLevel> MeasureModel::eps_level(std::size_t nodes, std::size_t depth) {
  {
    std::shared_lock lock(mutex_);
    auto it = eps_.find(nodes);
    if (it != eps_.end() && it->second->depth >= depth) return it->second;
  }
  auto level = std::make_shared<EpsLevel>();
  level->depth = depth;
  for (const auto& rep : reps) {
    const std::size_t r = static_cast<std::size_t>(rep.r);
    std::vector<Series> stored(depth + 1, Series(r));
    Series next(r), cur(r), prev(r);  // eps~_{k+1}, eps~_k, eps~_{k-1}
    cur[0] = ExtComplex(1);
    if (nodes - 1 <= depth) stored[nodes - 1] = cur;
    for (std::size_t k = nodes - 1; k >= 1; --k) {
      auto [a, b] = classical_recurrence(basis, k);
      const ExtComplex za = rep.z - ExtComplex(a);
      for (std::size_t t = 0; t < r; ++t) {
        ExtComplex v = za * cur[t] - next[t];
        if (t > 0) v += cur[t - 1];
        prev[t] = v / b;
      }
      if (k - 1 <= depth) stored[k - 1] = prev;
      std::swap(next, cur);
      std::swap(cur, prev);
    }
    // cur = eps~_0, next = eps~_1; fix the scale from the i = 0 equation.
    Series den(r);
    const ExtComplex za0 = rep.z - ExtComplex(classical_recurrence(basis, 0).first);
    for (std::size_t t = 0; t < r; ++t) {
      den[t] = za0 * cur[t] - next[t];
      if (t > 0) den[t] += cur[t - 1];
    }
    Series s = series_inv(den);
    for (auto& v : s) v *= mu0;
    for (auto& e : stored) e = series_mul(s, e);
    level->eps.push_back(std::move(stored));
  }
  std::unique_lock lock(mutex_);
  auto& slot = eps_[nodes];
  if (!slot || slot->depth < depth) slot = level;
  return slot;
}

std::shared_ptr<const BasisLevel> MeasureModel::basis_level(std::size_t depth) {
  {
    std::shared_lock lock(mutex_);
    if (basis_ && basis_->depth >= depth) return basis_;
  }
  auto level = std::make_shared<BasisLevel>();
  level->depth = depth;
  for (const auto& rep : reps) {
    const std::size_t r = static_cast<std::size_t>(rep.r);
    std::vector<Series> v(depth + 1, Series(r));
    v[0][0] = ExtComplex(1);
    for (std::size_t j = 0; j < depth; ++j) {
      auto [a, b] = classical_recurrence(basis, j);
      const ExtComplex za = rep.z - ExtComplex(a);
      for (std::size_t t = 0; t < r; ++t) {
        ExtComplex x = za * v[j][t];
        if (t > 0) x += v[j][t - 1];
        if (j > 0) x -= v[j - 1][t] * b;
        v[j + 1][t] = x;
      }
    }
    level->values.push_back(std::move(v));
  }
  std::unique_lock lock(mutex_);
  if (!basis_ || basis_->depth < depth) basis_ = level;
  return basis_;
}

std::string model_key(const MeasureSpec& spec) {
  std::string key = spec.basis.name() + "|" + (spec.basis.is_laguerre() ? to_decimal(spec.basis.alpha) : "");
  for (const auto& v : spec.rho) key += "|" + to_decimal(v);
  key += "|" + std::to_string(precision_bits());
  return key;
}

std::shared_ptr<MeasureModel> build_model(const MeasureSpec& spec) {
  if (spec.rho.empty()) throw Error(ErrorCode::Measure, "rho has no coefficients");
  for (const auto& v : spec.rho)
    if (!is_finite(v)) throw Error(ErrorCode::Measure, "rho has a non-finite coefficient");
  const ExtScalar& lead = spec.rho.back();
  if (lead == 0) throw Error(ErrorCode::Measure, "rho is identically zero");
  if (lead < 0) throw Error(ErrorCode::Measure, "leading coefficient of rho must be positive");
  if (!spec.basis.is_laguerre() && spec.m() % 2 == 1)
    throw Error(ErrorCode::Measure, "rho of odd degree changes sign on the real line");

  auto model = std::make_shared<MeasureModel>();
  model->basis = spec.basis;
  model->rho = spec.rho;
  model->mu0 = weight_mass(spec.basis);
  if (spec.m() == 0) return model;

  const auto groups = polynomial_roots(spec.rho);
  const ExtScalar real_tol = precision_fraction(2);
  std::vector<RhoRoot> upper, real;
  for (const auto& g : groups) {
    ExtComplex z = g.z;
    if (mp::abs(z.im) <= real_tol * (abs(z) + 1)) {
      z.im = 0;
      const bool on_support = !spec.basis.is_laguerre() || z.re >= 0;
      if (on_support) throw Error(ErrorCode::Measure, "rho vanishes on the support at x = " + to_decimal(z.re));
      real.push_back({z, g.multiplicity});
    } else if (z.im > 0) {
      upper.push_back({z, g.multiplicity});
    }
  }
  int count = 0;
  for (const auto& g : real) count += g.multiplicity;
  for (const auto& g : upper) count += 2 * g.multiplicity;
  if (count != static_cast<int>(spec.m())) throw Error(ErrorCode::Measure, "roots of rho do not pair into conjugates");

  // Sign sampling on the support as a guard against misclassified roots.
  for (int k = -12; k <= 12; ++k) {
    ExtScalar x = pow2(k);
    if (rho_eval(spec, x) <= 0) throw Error(ErrorCode::Measure, "rho is not positive on the support");
    if (!spec.basis.is_laguerre() && rho_eval(spec, ExtScalar(-x)) <= 0)
      throw Error(ErrorCode::Measure, "rho is not positive on the support");
  }
  if (rho_eval(spec, ExtScalar(0)) <= 0) throw Error(ErrorCode::Measure, "rho is not positive on the support");

  std::vector<RhoRoot> all = real;
  for (const auto& g : upper) {
    all.push_back(g);
    all.push_back({conj(g.z), g.multiplicity});
  }
  model->roots = all;

  auto add_rep = [&](const RhoRoot& g, int weight) {
    RepRoot rep;
    rep.z = g.z;
    rep.r = g.multiplicity;
    rep.weight = weight;
    const std::size_t r = static_cast<std::size_t>(g.multiplicity);
    Series den(r);
    den[0] = ExtComplex(lead);
    for (const auto& other : all) {
      if (&other == &g || (other.z.re == g.z.re && other.z.im == g.z.im)) continue;
      Series f(r);
      f[0] = g.z - other.z;
      if (r > 1) f[1] = ExtComplex(1);
      for (int e = 0; e < other.multiplicity; ++e) den = series_mul(den, f);
    }
    const Series gser = series_inv(den);
    for (std::size_t s = 1; s <= r; ++s) rep.A.push_back(gser[r - s]);
    model->reps.push_back(std::move(rep));
  };
  for (const auto& g : real) add_rep(g, 1);
  for (const auto& g : upper) add_rep(g, 2);
  return model;
}

std::shared_mutex g_model_mutex;
std::map<std::string, std::shared_ptr<MeasureModel>> g_models;

std::shared_ptr<MeasureModel> model_for(const MeasureSpec& spec) {
  const std::string key = model_key(spec);
  {
    std::shared_lock lock(g_model_mutex);
    auto it = g_models.find(key);
    if (it != g_models.end()) return it->second;
  }
  auto model = build_model(spec);
  std::unique_lock lock(g_model_mutex);
  auto [it, inserted] = g_models.emplace(key, model);
  return it->second;
}

struct PairValue {
  ExtScalar value;
  ExtScalar scale;  // sum of magnitudes of the summands
};

PairValue evaluate_pair(const MeasureModel& model, const EpsLevel& eps, const BasisLevel& lv, const BasisPoly& p,
                        const BasisPoly& q) {
  PairValue out{ExtScalar(0), ExtScalar(0)};
  const std::size_t dp = p.degree(), dq = q.degree(), d = std::max(dp, dq);
  for (std::size_t l = 0; l < model.reps.size(); ++l) {
    const auto& rep = model.reps[l];
    const std::size_t r = static_cast<std::size_t>(rep.r);
    Series pref_q(r), pref_p(r), total(r);
    std::vector<ExtScalar> magnitude(r, ExtScalar(0));
    for (std::size_t i = 0; i <= d; ++i) {
      const ExtScalar pi = i <= dp ? p.coeffs[i] : ExtScalar(0);
      const ExtScalar qi = i <= dq ? q.coeffs[i] : ExtScalar(0);
      if (pi == 0 && qi == 0) continue;
      const auto& li = lv.values[l][i];
      Series inner(r);
      for (std::size_t t = 0; t < r; ++t) {
        pref_q[t] += li[t] * qi;
        inner[t] = pref_q[t] * pi + pref_p[t] * qi;
      }
      const Series term = series_mul(eps.eps[l][i], inner);
      for (std::size_t t = 0; t < r; ++t) {
        total[t] += term[t];
        magnitude[t] += abs(term[t]);
        pref_p[t] += li[t] * pi;
      }
    }
    ExtComplex sum;
    ExtScalar mag(0);
    for (std::size_t s = 1; s <= r; ++s) {
      sum -= rep.A[s - 1] * total[s - 1];
      mag += abs(rep.A[s - 1]) * magnitude[s - 1];
    }
    out.value += rep.weight * sum.re;
    out.scale += rep.weight * mag;
  }
  return out;
}

std::size_t first_level(std::size_t depth) {
  std::size_t n = 64;
  while (n < 2 * (depth + 1)) n *= 2;
  return n;
}

// Gaussian elimination with partial pivoting; throws Singular on tiny pivots.
std::vector<ExtScalar> solve_system(std::vector<std::vector<ExtScalar>> a, std::vector<ExtScalar> b) {
  const std::size_t n = b.size();
  ExtScalar amax(0);
  for (const auto& row : a)
    for (const auto& v : row) amax = std::max(amax, ExtScalar(mp::abs(v)));
  const ExtScalar floor = precision_fraction(2) * amax;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (mp::abs(a[i][k]) > mp::abs(a[piv][k])) piv = i;
    if (mp::abs(a[piv][k]) <= floor) throw Error(ErrorCode::Singular, "Gram system is numerically singular");
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const ExtScalar f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  std::vector<ExtScalar> x(n);
  for (std::size_t k = n; k-- > 0;) {
    ExtScalar s = b[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
    x[k] = s / a[k][k];
  }
  return x;
}

}  // namespace

// ---------------------------------------------------------------------------

ExtScalar MeasureSpec::rho_max() const {
  ExtScalar best(0);
  for (const auto& v : rho) best = std::max(best, ExtScalar(mp::abs(v)));
  return best;
}

MeasureSpec make_spec(const Case& c, std::vector<ExtScalar> rho) {
  while (rho.size() > 1 && rho.back() == 0) rho.pop_back();
  return {c, std::move(rho)};
}

void validate_spec(const MeasureSpec& spec) { model_for(spec); }

ExtScalar rho_eval(const MeasureSpec& spec, const ExtScalar& x) {
  ExtScalar v(0);
  for (std::size_t k = spec.rho.size(); k-- > 0;) v = v * x + spec.rho[k];
  return v;
}

ExtComplex rho_eval(const MeasureSpec& spec, const ExtComplex& z) { return horner(spec.rho, z); }

std::vector<RhoRoot> rho_roots(const MeasureSpec& spec) { return model_for(spec)->roots; }

ExtScalar inner_w(const BasisPoly& p, const BasisPoly& q) {
  if (!p.basis.same_basis(q.basis)) throw Error(ErrorCode::Basis, "inner product of polynomials from different bases");
  const std::size_t n = std::min(p.degree(), q.degree());
  const auto tau = classical_norms(p.basis, n);
  ExtScalar s(0);
  for (std::size_t j = 0; j <= n; ++j) s += p.coeffs[j] * q.coeffs[j] * tau[j];
  return s;
}

std::vector<ExtScalar> inner_mu_batch(const std::vector<std::pair<BasisPoly, BasisPoly>>& pairs,
                                      const MeasureSpec& spec) {
  auto model = model_for(spec);
  for (const auto& [p, q] : pairs)
    if (!p.basis.same_basis(spec.basis) || !q.basis.same_basis(spec.basis))
      throw Error(ErrorCode::Basis, "polynomial basis differs from the measure's");
  std::vector<ExtScalar> out;
  if (spec.m() == 0) {
    for (const auto& [p, q] : pairs) out.push_back(inner_w(p, q) / spec.rho[0]);
    return out;
  }
  std::size_t depth = 0;
  for (const auto& [p, q] : pairs) depth = std::max({depth, p.degree(), q.degree()});
  const auto lv = model->basis_level(depth);
  auto level_values = [&](std::size_t nodes) {
    const auto eps = model->eps_level(nodes, depth);
    std::vector<PairValue> v;
    for (const auto& [p, q] : pairs) v.push_back(evaluate_pair(*model, *eps, *lv, p, q));
    return v;
  };
  const ExtScalar tol = precision_tolerance(30);
  std::size_t nodes = first_level(depth);
  auto prev = level_values(nodes);
  while (true) {
    if (2 * nodes > kMaxQuadratureNodes)
      throw Error(ErrorCode::NoConv, "mu inner products did not stabilise within " +
                                         std::to_string(kMaxQuadratureNodes) + " nodes");
    nodes *= 2;
    auto cur = level_values(nodes);
    bool converged = true;
    for (std::size_t k = 0; k < cur.size() && converged; ++k)
      converged = mp::abs(cur[k].value - prev[k].value) <= tol * cur[k].scale;
    if (converged) {
      for (auto& v : cur) out.push_back(std::move(v.value));
      return out;
    }
    prev = std::move(cur);
  }
}

ExtScalar inner_mu(const BasisPoly& p, const BasisPoly& q, const MeasureSpec& spec) {
  return inner_mu_batch({{p, q}}, spec).front();
}

ExtScalar inner_mu_fixed(const BasisPoly& p, const BasisPoly& q, const MeasureSpec& spec, std::size_t nodes) {
  auto model = model_for(spec);
  if (spec.m() == 0) return inner_w(p, q) / spec.rho[0];
  const std::size_t depth = std::max(p.degree(), q.degree());
  if (nodes <= depth) throw Error(ErrorCode::Shape, "node count must exceed the polynomial degrees");
  const auto lv = model->basis_level(depth);
  const auto eps = model->eps_level(nodes, depth);
  return evaluate_pair(*model, *eps, *lv, p, q).value;
}

BasisPoly pn_construct(const MeasureSpec& spec, std::size_t n) {
  const std::size_t m = spec.m();
  if (n <= m) throw Error(ErrorCode::Shape, "pn_construct needs n > deg rho");
  validate_spec(spec);
  if (m == 0) return basis_element(spec.basis, n);

  // Unknowns b_k (k = 1..m) multiply L_{n-k}; conditions <P_n, L_{n-j}>_mu = 0.
  std::vector<std::pair<BasisPoly, BasisPoly>> pairs;
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t k = j; k <= m; ++k) pairs.emplace_back(basis_element(spec.basis, n - k), basis_element(spec.basis, n - j));
    pairs.emplace_back(basis_element(spec.basis, n), basis_element(spec.basis, n - j));
  }
  const auto values = inner_mu_batch(pairs, spec);
  const auto tau = classical_norms(spec.basis, n);
  std::vector<ExtScalar> root_tau(n + 1);
  for (std::size_t j = 0; j <= n; ++j) root_tau[j] = mp::sqrt(tau[j]);

  // Orthonormal scaling: G~_{jk} = G_{jk} / sqrt(tau_{n-j} tau_{n-k}).
  std::vector<std::vector<ExtScalar>> g(m, std::vector<ExtScalar>(m));
  std::vector<ExtScalar> rhs(m);
  std::size_t idx = 0;
  for (std::size_t j = 1; j <= m; ++j) {
    for (std::size_t k = j; k <= m; ++k) {
      const ExtScalar v = values[idx++] / (root_tau[n - j] * root_tau[n - k]);
      g[j - 1][k - 1] = v;
      g[k - 1][j - 1] = v;
    }
    rhs[j - 1] = -values[idx++] / (root_tau[n - j] * root_tau[n]);
  }
  const auto beta = solve_system(std::move(g), std::move(rhs));
  std::vector<ExtScalar> d(n + 1, ExtScalar(0));
  d[n] = 1;
  for (std::size_t k = 1; k <= m; ++k) d[n - k] = beta[k - 1] * root_tau[n] / root_tau[n - k];
  return {spec.basis, std::move(d)};
}

BasisPoly pn_stieltjes(const MeasureSpec& spec, std::size_t n) {
  validate_spec(spec);
  BasisPoly prev = zero_poly(spec.basis);
  BasisPoly cur = basis_element(spec.basis, 0);
  ExtScalar prev_norm(1);
  for (std::size_t k = 0; k < n; ++k) {
    BasisPoly xc = multiply_by_x(cur);
    const auto v = inner_mu_batch({{cur, cur}, {xc, cur}}, spec);
    const ExtScalar& norm = v[0];
    if (!(norm > 0)) throw Error(ErrorCode::Singular, "Stieltjes procedure met a non-positive norm");
    const ExtScalar alpha_k = v[1] / norm;
    const ExtScalar beta_k = k == 0 ? ExtScalar(0) : ExtScalar(norm / prev_norm);
    BasisPoly next = add(add(xc, scale(cur, ExtScalar(-alpha_k))), scale(prev, ExtScalar(-beta_k)));
    next.coeffs.resize(k + 2);
    next.coeffs.back() = 1;
    prev = std::move(cur);
    cur = std::move(next);
    prev_norm = norm;
  }
  return cur;
}

}  // namespace diffortho
