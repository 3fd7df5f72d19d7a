#include "diffortho/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace diffortho {

namespace mp = boost::multiprecision;

namespace {

using cd = std::complex<double>;

template <class C>
C phi_of(const C& z) {
  using std::sqrt;
  return z + sqrt(z - C(1)) * sqrt(z + C(1));
}

template <class C>
C psi_of(const C& z) {
  using std::sqrt;
  return C(2) * z - C(1) + C(2) * sqrt(z) * sqrt(z - C(1));
}

// log Psi: log|phi| + Re(z/phi) (Hermite) or log|psi| + Re(1/psi) (Laguerre).
double log_psi_double(const Case& c, cd z) {
  if (c.is_laguerre()) {
    const cd s = psi_of(z);
    return std::log(std::abs(s)) + (1.0 / s).real();
  }
  const cd f = phi_of(z);
  return std::log(std::abs(f)) + (z / f).real();
}

ExtScalar log_psi_ext(const Case& c, const ExtComplex& z) {
  if (c.is_laguerre()) {
    const ExtComplex s = psi_of(z);
    return mp::log(abs(s)) + (ExtComplex(1) / s).re;
  }
  const ExtComplex f = phi_of(z);
  return mp::log(abs(f)) + (z / f).re;
}

double curve_tolerance(double log_psi_zeta) { return 1e-3 * std::abs(log_psi_zeta); }

}  // namespace

bool on_contracted_support(const Case& c, const ExtComplex& z) {
  return z.im == 0 && z.re >= c.contracted_left() && z.re <= 1;
}

MapValues conformal_maps(const Case& c, const ExtComplex& z) {
  if (on_contracted_support(c, z)) throw Error(ErrorCode::Branch, "conformal maps are not defined on the support");
  MapValues m;
  m.phi = phi_of(z);
  m.psi = psi_of(z);
  m.capital_psi = mp::exp(log_psi_ext(c, z));
  if (c.is_laguerre())
    m.nth_root_limit = m.capital_psi / 4;
  else
    m.nth_root_limit = m.capital_psi / (2 * mp::sqrt(mp::exp(ExtScalar(1))));
  return m;
}

double log_capital_psi(const Case& c, cd z) {
  if (z.imag() == 0 && z.real() >= c.contracted_left() && z.real() <= 1) return std::nan("");
  return log_psi_double(c, z);
}

double support_distance(const Case& c, cd z) {
  const double x = std::clamp(z.real(), c.contracted_left(), 1.0);
  return std::abs(z - cd(x, 0));
}

double support_sup_distance(const Case& c, cd z) {
  return std::max(std::abs(z - cd(c.contracted_left(), 0)), std::abs(z - cd(1, 0)));
}

// ---------------------------------------------------------------------------

std::vector<NthRootRow> nth_root_report(const MeasureSpec& spec, const std::vector<ExtComplex>& z_set,
                                        const std::vector<std::size_t>& n_set) {
  for (const auto& z : z_set)
    if (on_contracted_support(spec.basis, z)) throw Error(ErrorCode::Branch, "test point lies on the support");
  std::vector<NthRootRow> rows;
  for (std::size_t n : n_set) {
    const DiffOrthoPoly d = qhat(spec, n);
    const ExtScalar c = scaling_constant(spec.basis, n);
    const ExtScalar log_c = mp::log(c);
    for (const auto& z : z_set) {
      NthRootRow row;
      row.z = z;
      row.n = n;
      const ExtComplex v = eval_clenshaw(d.qhat, z * c);
      const ExtScalar log_mag = mp::log(abs(v)) - log_c * static_cast<unsigned long>(n);
      if (!is_finite(log_mag)) throw Error(ErrorCode::Range, "log-magnitude accumulation overflowed");
      row.value = mp::exp(log_mag / static_cast<unsigned long>(n));
      row.limit = conformal_maps(spec.basis, z).nth_root_limit;
      row.rel_error = mp::abs(row.value - row.limit) / row.limit;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string region_name(Region r) {
  switch (r) {
    case Region::Outer: return "outer";
    case Region::Inner: return "inner";
    case Region::All: break;
  }
  return "all";
}

Region classify(const Case& c, const ExtComplex& z, const ExtComplex& zeta) {
  if (on_contracted_support(c, zeta)) throw Error(ErrorCode::Branch, "zeta lies on the support");
  if (on_contracted_support(c, z)) return Region::Inner;
  const ExtScalar lz = log_psi_ext(c, zeta);
  const ExtScalar g = log_psi_ext(c, z) - lz;
  if (mp::abs(g) <= curve_tolerance(lz.convert_to<double>()))
    throw Error(ErrorCode::Region, "test point lies on the level curve through zeta");
  return g > 0 ? Region::Outer : Region::Inner;
}

std::vector<RatioRow> ratio_report(const MeasureSpec& spec, const std::vector<ExtComplex>& z_set,
                                   const std::vector<std::size_t>& n_set, const std::optional<ExtComplex>& zeta) {
  std::vector<Region> regions;
  for (const auto& z : z_set) {
    if (zeta) {
      regions.push_back(classify(spec.basis, z, *zeta));
    } else {
      if (on_contracted_support(spec.basis, z)) throw Error(ErrorCode::Branch, "test point lies on the support");
      regions.push_back(Region::All);
    }
  }
  std::vector<RatioRow> rows;
  for (std::size_t n : n_set) {
    const ExtScalar c = scaling_constant(spec.basis, n);
    const DiffOrthoPoly d = zeta ? q_with_root(spec, n, *zeta * c) : qhat(spec, n);
    for (std::size_t i = 0; i < z_set.size(); ++i) {
      RatioRow row;
      row.z = z_set[i];
      row.n = n;
      row.region = regions[i];
      const ExtComplex x = z_set[i] * c;
      ExtComplex target(1);
      switch (row.region) {
        case Region::All:
          row.ratio = eval_clenshaw(d.pn, x) / eval_clenshaw(d.qhat, x);
          break;
        case Region::Outer:
          row.ratio = d.eval_q(x) / eval_clenshaw(d.pn, x);
          break;
        case Region::Inner:
          row.ratio = d.eval_q(x) / eval_clenshaw(d.pn, *d.zeta);
          target = ExtComplex(-1);
          break;
      }
      row.error = abs(row.ratio - target);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------

std::size_t LevelCurve::vertex_count() const {
  std::size_t k = 0;
  for (const auto& p : polylines) k += p.size();
  return k;
}

Window default_window(const Case& c, const ExtComplex& zeta) {
  const double r = support_sup_distance(c, zeta.to_complex()) + 1.0;
  const double centre = c.is_laguerre() ? 0.5 : 0.0;
  return {centre - r, centre + r, -r, r};
}

LevelCurve trace_level_curve(const Case& c, const ExtComplex& zeta, const Window& window, double step) {
  if (!(step > 0) || !(window.xmax > window.xmin) || !(window.ymax > window.ymin))
    throw Error(ErrorCode::Shape, "level-curve window and step must be positive");
  if (on_contracted_support(c, zeta)) throw Error(ErrorCode::Branch, "zeta lies on the support");
  const double lz = log_psi_double(c, zeta.to_complex());
  LevelCurve curve;
  curve.basis = c;
  curve.zeta = zeta.to_complex();
  curve.step = step;
  curve.tolerance = curve_tolerance(lz);

  const auto nx = static_cast<long>(std::ceil((window.xmax - window.xmin) / step));
  const auto ny = static_cast<long>(std::ceil((window.ymax - window.ymin) / step));
  if (nx < 1 || ny < 1 || nx * ny > 50'000'000L) throw Error(ErrorCode::Shape, "level-curve grid is empty or too large");
  auto point = [&](long i, long j) { return cd(window.xmin + static_cast<double>(i) * step, window.ymin + static_cast<double>(j) * step); };
  auto g = [&](cd z) { return log_psi_double(c, z) - lz; };

  // Grid values; nodes inside the tube around the support are masked.
  std::vector<double> val(static_cast<std::size_t>((nx + 1) * (ny + 1)));
  std::vector<char> mask(val.size(), 0);
  auto at = [&](long i, long j) { return static_cast<std::size_t>(j * (nx + 1) + i); };
  for (long j = 0; j <= ny; ++j)
    for (long i = 0; i <= nx; ++i) {
      const cd z = point(i, j);
      if (support_distance(c, z) < step) {
        mask[at(i, j)] = 1;
        continue;
      }
      val[at(i, j)] = g(z);
    }

  // Edge ids: horizontal (i,j)-(i+1,j) -> 2*node, vertical (i,j)-(i,j+1) -> 2*node+1.
  std::map<long, cd> crossing;
  auto edge_point = [&](long id) -> cd {
    auto it = crossing.find(id);
    if (it != crossing.end()) return it->second;
    const long node = id / 2;
    const long i = node % (nx + 1), j = node / (nx + 1);
    cd a = point(i, j), b = (id % 2 == 0) ? point(i + 1, j) : point(i, j + 1);
    double ga = g(a);
    cd mid = a;
    for (int it2 = 0; it2 < 80; ++it2) {
      mid = (a + b) / 2.0;
      const double gm = g(mid);
      if (gm == 0 || std::abs(b - a) < 1e-15 * (1 + std::abs(mid))) break;
      if ((gm > 0) == (ga > 0)) {
        a = mid;
        ga = gm;
      } else {
        b = mid;
      }
    }
    crossing.emplace(id, mid);
    return mid;
  };

  std::vector<std::pair<long, long>> segments;
  for (long j = 0; j < ny; ++j)
    for (long i = 0; i < nx; ++i) {
      if (mask[at(i, j)] || mask[at(i + 1, j)] || mask[at(i + 1, j + 1)] || mask[at(i, j + 1)]) continue;
      const bool s00 = val[at(i, j)] > 0, s10 = val[at(i + 1, j)] > 0;
      const bool s11 = val[at(i + 1, j + 1)] > 0, s01 = val[at(i, j + 1)] > 0;
      const long bottom = 2 * static_cast<long>(at(i, j)), top = 2 * static_cast<long>(at(i, j + 1));
      const long left = 2 * static_cast<long>(at(i, j)) + 1, right = 2 * static_cast<long>(at(i + 1, j)) + 1;
      std::vector<long> cut;
      if (s00 != s10) cut.push_back(bottom);
      if (s10 != s11) cut.push_back(right);
      if (s11 != s01) cut.push_back(top);
      if (s01 != s00) cut.push_back(left);
      if (cut.size() == 2) {
        segments.emplace_back(cut[0], cut[1]);
      } else if (cut.size() == 4) {
        const bool centre = g((point(i, j) + point(i + 1, j + 1)) / 2.0) > 0;
        if (centre == s00) {
          segments.emplace_back(bottom, right);
          segments.emplace_back(top, left);
        } else {
          segments.emplace_back(bottom, left);
          segments.emplace_back(right, top);
        }
      }
    }
  if (segments.empty()) throw Error(ErrorCode::Empty, "no sign change of the level function inside the window");

  // Chain segments that share an edge into polylines.
  std::map<long, std::vector<std::size_t>> by_edge;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    by_edge[segments[s].first].push_back(s);
    by_edge[segments[s].second].push_back(s);
  }
  std::vector<char> used(segments.size(), 0);
  auto next_segment = [&](long edge, std::size_t from) -> long {
    for (std::size_t s : by_edge[edge])
      if (s != from && !used[s]) return static_cast<long>(s);
    return -1;
  };
  for (std::size_t s0 = 0; s0 < segments.size(); ++s0) {
    if (used[s0]) continue;
    used[s0] = 1;
    std::vector<long> forward{segments[s0].first, segments[s0].second};
    for (std::size_t cur = s0;;) {
      const long s = next_segment(forward.back(), cur);
      if (s < 0) break;
      used[static_cast<std::size_t>(s)] = 1;
      const auto& seg = segments[static_cast<std::size_t>(s)];
      forward.push_back(seg.first == forward.back() ? seg.second : seg.first);
      cur = static_cast<std::size_t>(s);
    }
    std::vector<long> backward;
    long tail = forward.front();
    for (std::size_t cur = s0;;) {
      const long s = next_segment(tail, cur);
      if (s < 0) break;
      used[static_cast<std::size_t>(s)] = 1;
      const auto& seg = segments[static_cast<std::size_t>(s)];
      tail = seg.first == tail ? seg.second : seg.first;
      backward.push_back(tail);
      cur = static_cast<std::size_t>(s);
    }
    std::vector<cd> line;
    for (auto it = backward.rbegin(); it != backward.rend(); ++it) line.push_back(edge_point(*it));
    for (long e : forward) line.push_back(edge_point(e));
    curve.polylines.push_back(std::move(line));
  }
  return curve;
}

double curve_distance(const LevelCurve& curve, cd z) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& line : curve.polylines) {
    if (line.size() == 1) best = std::min(best, std::abs(z - line[0]));
    for (std::size_t k = 1; k < line.size(); ++k) {
      const cd a = line[k - 1], b = line[k], ab = b - a;
      const double len2 = std::norm(ab);
      double t = len2 > 0 ? ((z - a) * std::conj(ab)).real() / len2 : 0.0;
      t = std::clamp(t, 0.0, 1.0);
      best = std::min(best, std::abs(z - (a + t * ab)));
    }
  }
  return best;
}

ZeroLocusReport zero_locus_distances(const MeasureSpec& spec, const ExtComplex& zeta, std::size_t n,
                                     const LevelCurve& curve) {
  ZeroLocusReport rep;
  rep.n = n;
  const ExtScalar c = scaling_constant(spec.basis, n);
  const DiffOrthoPoly d = q_with_root(spec, n, zeta * c);
  rep.zeros = normalized(roots(d.qhat, d.q_const), c);
  const cd zt = zeta.to_complex();
  const double sup = support_sup_distance(spec.basis, zt);
  const double inf = support_distance(spec.basis, zt);
  rep.within_bound = true;
  for (const auto& z : rep.zeros.zeros) {
    const cd w = z.to_complex();
    const double dc = curve_distance(curve, w), ds = support_distance(spec.basis, w);
    rep.to_curve.push_back(dc);
    rep.to_support.push_back(ds);
    rep.summary = std::max(rep.summary, std::min(dc, ds));
    rep.max_curve_distance = std::max(rep.max_curve_distance, dc);
    if (std::abs(w) > sup + 2) rep.within_bound = false;
  }
  rep.tube_checked = inf > 2;
  if (rep.tube_checked) {
    rep.tube_radius = (inf - 2) / 2;
    rep.tube_zero_free = std::all_of(rep.to_support.begin(), rep.to_support.end(),
                                     [&](double ds) { return ds >= rep.tube_radius; });
  }
  ExtScalar gap(-1);
  const auto& zs = rep.zeros.zeros;
  for (std::size_t i = 0; i < zs.size(); ++i)
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      const ExtScalar dist = abs(zs[i] - zs[j]);
      if (gap < 0 || dist < gap) gap = dist;
    }
  rep.min_gap = gap < 0 ? 0.0 : gap.convert_to<double>();
  rep.all_simple = zs.size() < 2 || gap > precision_fraction(4);
  return rep;
}

}  // namespace diffortho
