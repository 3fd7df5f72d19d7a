#pragma once

// Zeros of basis polynomials (comrade matrix + Newton polish), zero
// statistics, KS distance to the limit densities and interlacing.

#include "diffortho/polycore.hpp"

#include <string>
#include <vector>

namespace diffortho {

struct ZeroCloud {
  std::vector<ExtComplex> zeros;  // ordered by (re, im)
  std::size_t n = 0;
  ExtScalar c_n{1};
  bool normalized = false;
};

/// All zeros of p - shift (shift is a constant, possibly complex). Seeds come
/// from the comrade matrix in double precision, are polished by Newton at
/// working precision and verified; Aberth iteration is the fallback.
ZeroCloud roots(const BasisPoly& p, const ExtComplex& shift = ExtComplex());

/// Zeros divided by c.
ZeroCloud normalized(const ZeroCloud& zc, const ExtScalar& c);

struct ZeroStats {
  std::size_t real_in_support = 0;  // |Im| <= eps_real and inside the support
  std::size_t real_count = 0;
  ExtScalar max_imag{0};
  ExtScalar min_real_gap{0};  // min gap among real zeros (0 if fewer than two)
  ExtScalar largest_abs{0};
};

/// eps_real = 2^-(B/4) max(1, |z|).
bool is_real_zero(const ExtComplex& z);
ZeroStats zero_stats(const ZeroCloud& zc, const Case& c);

struct LimitDensity {
  Case basis;
  double cdf(double t) const;
  double density(double t) const;
};

/// One-sample Kolmogorov-Smirnov statistic of the real parts of a normalized
/// cloud against the limit density.
double ks_distance(const ZeroCloud& zc, const LimitDensity& ld);

/// True iff zeros[i] < crit[i] < zeros[i+1] for all i. Throws Shape unless
/// |crit| = |zeros| - 1.
bool interlace_check(const std::vector<ExtScalar>& crit, const std::vector<ExtScalar>& zeros);

/// Real parts of a cloud, sorted.
std::vector<ExtScalar> real_parts(const ZeroCloud& zc);

}  // namespace diffortho
