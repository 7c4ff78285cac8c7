#pragma once

// Reachable-component analysis of greedy DHT routing under uniform random
// node failure. Every geometry reduces to two ingredients:
//
//   n(h)  number of nodes at routing distance h (hops or phases) from a root
//   Q(m)  probability that routing fails during the m-th phase
//
// from which p(h,q) = prod_{m=1..h} (1 - Q(m)), E[S] = sum_h n(h) p(h,q) and
// the routability r = E[S] / (#surviving nodes - 1) follow.

#include <cstdint>
#include <vector>

#include "rcm/geometry.hpp"

namespace rcm {

/// Largest d for which counts are kept as exact integers; beyond it the
/// profile and E[S] are carried as fractions of N = 2^d.
inline constexpr int kExactBits = 20;

/// Which expected-survivor count divides E[S].
enum class DenominatorMode : std::uint8_t {
  SurvivorsMinusOne,  ///< (1-q)N - 1
  ExactSurvivors,     ///< (N-1)(1-q)
};

/// n(1..d). values[h-1] holds n(h) when !normalized, n(h)/2^d otherwise.
struct DistanceProfile {
  int bits = 0;
  bool normalized = false;
  std::vector<double> values;

  double at(int h) const { return values.at(static_cast<std::size_t>(h - 1)); }
  double total() const;
};

DistanceProfile distance_profile(const GeometrySpec& spec);

/// The per-phase hazard Q(m) of a geometry at failure probability q.
class PhaseFailureModel {
 public:
  PhaseFailureModel(GeometrySpec spec, double q);

  const GeometrySpec& spec() const noexcept { return spec_; }
  double q() const noexcept { return q_; }

  /// Q(m) for 1 <= m <= d.
  double phase_failure(int m) const;

  /// Q(m) for any m >= 1. Used by the asymptotic probes, where h runs past d
  /// while the geometry parameters (Symphony's d inside Q) stay fixed.
  double hazard(int m) const;

  /// p(h,q) for 1 <= h <= d.
  double path_success(int h) const;

  /// p(h,q) for any h >= 1.
  double path_success_unbounded(long long h) const;

 private:
  GeometrySpec spec_;
  double q_;
};

// Closed forms of Q(m). Exposed for tests and for the XOR / Symphony
// approximation comparisons; PhaseFailureModel dispatches to these.
double tree_hazard(double q);
double hypercube_hazard(double q, int m);
double xor_hazard(double q, int m);
double ring_hazard(double q, int m);
double symphony_hazard(double q, int bits, int near_neighbors, int shortcuts);

// The 1-x ~ e^{-x} approximations printed next to the exact sums.
double xor_hazard_approx(double q, int m);
double symphony_hazard_approx(double q, int bits, int near_neighbors,
                              int shortcuts);

struct ExpectedReach {
  double value = 0.0;       ///< E[S], or E[S]/2^d when normalized
  bool normalized = false;  ///< true for d > kExactBits
};

ExpectedReach expected_reach(const GeometrySpec& spec, double q);

struct RoutabilityResult {
  GeometrySpec spec;
  double q = 0.0;
  DenominatorMode mode = DenominatorMode::SurvivorsMinusOne;
  double routability = 0.0;      ///< clamped to [0,1]
  double failed_fraction = 0.0;  ///< 1 - routability
  double raw_routability = 0.0;  ///< before clamping
  bool clamped = false;
  ExpectedReach expected_reach;
};

/// Throws DegenerateDenominator in SurvivorsMinusOne mode when (1-q)2^d <= 1.
RoutabilityResult routability(const GeometrySpec& spec, double q,
                              DenominatorMode mode = DenominatorMode::SurvivorsMinusOne);

/// ((2-q)^d - 1) / ((1-q)2^d - 1), evaluated in scaled form for large d.
double tree_closed_form(int bits, double q);

}  // namespace rcm
