#pragma once

#include <vector>

#include "shadecalc/upoly.hpp"

namespace shadecalc {

/// A disk containing exactly `multiplicity` roots (with multiplicity) of the
/// source polynomial and disjoint from all sibling disks.
struct CertifiedRoot {
  Complex center;
  double radius = 0;
  int multiplicity = 1;
  /// Set only for real-coefficient input when the disk provably holds a real
  /// root; the center is then on the real axis.
  bool real = false;
};

struct RootOptions {
  int max_aberth_iterations = 600;
  /// Exact Newton passes applied to every approximation before certifying.
  int polish_passes = 3;
  /// Extra refinement rounds attempted when disks overlap.
  int max_refinement_rounds = 4;
};

/// All complex roots of p, sorted by (Re, Im) of the centers. Throws
/// DomainError for the zero polynomial and UncertifiedRoots when the disks
/// cannot be separated.
std::vector<CertifiedRoot> complex_roots(const Poly& p, const RootOptions& opts = {});

struct RationalInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
};

/// Number of distinct real roots of p in (lo, hi], p with real coefficients.
int sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Isolating intervals for the distinct real roots of p in [lo, hi], in
/// increasing order. Roots hit exactly are returned as degenerate intervals.
/// Throws DomainError if p is zero or has non-real coefficients.
std::vector<RationalInterval> real_roots_sturm(const Poly& p, const Rational& lo, const Rational& hi);

/// Shrinks an isolating interval of a simple root of p to width <= width.
RationalInterval refine_root(const Poly& p, RationalInterval iv, const Rational& width);

}  // namespace shadecalc
