#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rcm/analytic.hpp"

namespace rcm {

enum class Verdict : std::uint8_t { Scalable, Unscalable };

/// Horizons at which partial sums of Q and partial products p(h,q) are
/// reported as evidence.
inline constexpr std::array<long long, 4> kEvidenceHorizons = {10, 100, 1000,
                                                               10000};
inline constexpr double kConvergenceTolerance = 1e-9;
inline constexpr double kVanishingThreshold = 1e-6;

struct EvidencePoint {
  long long horizon = 0;
  double value = 0.0;
};

struct ScalabilityVerdict {
  GeometrySpec spec;
  double q = 0.0;
  Verdict verdict = Verdict::Unscalable;
  /// lim p(h,q); reported as 0 for unscalable geometries.
  double limit_estimate = 0.0;
  /// Smallest h with p(h,q) < kVanishingThreshold, or -1 if none was found.
  long long vanishing_horizon = -1;
  std::vector<EvidencePoint> partial_sums;      ///< sum_{m<=M} Q(m)
  std::vector<EvidencePoint> partial_products;  ///< p(h,q)
};

/// Verdict from the m-dependence of Q: a hazard that stays constant in m has
/// a divergent sum and the product goes to zero; a hazard bounded by C m q^m
/// has a convergent sum and a positive limit. Requires 0 < q < 1.
ScalabilityVerdict classify(const GeometrySpec& spec, double q);

/// Routability at identifier length `bits` for every q in the grid.
std::vector<RoutabilityResult> asymptotic_curve(
    const GeometrySpec& spec, int bits, const std::vector<double>& q_grid,
    DenominatorMode mode = DenominatorMode::SurvivorsMinusOne);

}  // namespace rcm
