#pragma once

// Exterior conformal maps of the contracted supports, the comparison
// function Psi, nth-root and ratio tables for the normalised polynomials, and
// the level curve E(zeta) = {Psi(z) = Psi(zeta)} that attracts the zeros of
// the normalised Q_n.

#include "diffortho/construct.hpp"
#include "diffortho/spectra.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace diffortho {

struct MapValues {
  ExtComplex phi;  // z + sqrt(z-1) sqrt(z+1)
  ExtComplex psi;  // 2z - 1 + 2 sqrt(z) sqrt(z-1)
  ExtScalar capital_psi;
  ExtScalar nth_root_limit;
};

/// Throws Error(Branch) when z lies on the contracted support.
MapValues conformal_maps(const Case& c, const ExtComplex& z);

/// log Psi(z) in double precision (grid work); NaN on the support.
double log_capital_psi(const Case& c, std::complex<double> z);

bool on_contracted_support(const Case& c, const ExtComplex& z);
/// inf / sup of |z - x| over the contracted support.
double support_distance(const Case& c, std::complex<double> z);
double support_sup_distance(const Case& c, std::complex<double> z);

struct NthRootRow {
  ExtComplex z;
  std::size_t n = 0;
  ExtScalar value;  // |Qhat_n(c_n z) / c_n^n|^{1/n}
  ExtScalar limit;
  ExtScalar rel_error;
};

std::vector<NthRootRow> nth_root_report(const MeasureSpec& spec, const std::vector<ExtComplex>& z_set,
                                        const std::vector<std::size_t>& n_set);

enum class Region { All, Outer, Inner };
std::string region_name(Region r);

struct RatioRow {
  ExtComplex z;
  std::size_t n = 0;
  Region region = Region::All;
  ExtComplex ratio;
  ExtScalar error;  // |ratio - target|
};

/// Without zeta: P_n / Qhat_n (target 1). With zeta: Q_n / P_n on the outer
/// side of E(zeta) (target 1) and Q_n(z) / P_n(zeta_n) on the inner side
/// (target -1), with zeta_n = c_n zeta. Throws Error(Region) for z on E(zeta).
std::vector<RatioRow> ratio_report(const MeasureSpec& spec, const std::vector<ExtComplex>& z_set,
                                   const std::vector<std::size_t>& n_set, const std::optional<ExtComplex>& zeta);

/// Classifies z against E(zeta); Throws Error(Region) within the curve tolerance.
Region classify(const Case& c, const ExtComplex& z, const ExtComplex& zeta);

struct Window {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

struct LevelCurve {
  Case basis;
  std::complex<double> zeta;
  double step = 0;
  double tolerance = 0;  // |G| bound met by every vertex
  std::vector<std::vector<std::complex<double>>> polylines;

  std::size_t vertex_count() const;
};

/// Marching squares on G(z) = log Psi(z) - log Psi(zeta) with bisection
/// refinement of the edge crossings. Throws Error(Empty) without a crossing.
LevelCurve trace_level_curve(const Case& c, const ExtComplex& zeta, const Window& window, double step);

/// A window that contains E(zeta) with margin.
Window default_window(const Case& c, const ExtComplex& zeta);

/// Distance from z to the nearest polyline segment.
double curve_distance(const LevelCurve& curve, std::complex<double> z);

struct ZeroLocusReport {
  std::size_t n = 0;
  ZeroCloud zeros;  // normalised zeros of Q_n
  std::vector<double> to_curve;
  std::vector<double> to_support;
  double summary = 0;             // max over zeros of min(to_curve, to_support)
  double max_curve_distance = 0;  // max over zeros of to_curve
  bool within_bound = false;      // all |z| <= sup-distance(zeta) + 2
  bool tube_checked = false;      // inf-distance(zeta) > 2
  double tube_radius = 0;
  bool tube_zero_free = false;
  bool all_simple = false;
  double min_gap = 0;
};

ZeroLocusReport zero_locus_distances(const MeasureSpec& spec, const ExtComplex& zeta, std::size_t n,
                                     const LevelCurve& curve);

}  // namespace diffortho
