#pragma once

#include <cstdint>

#include "rcm/geometry.hpp"
#include "rcm/overlay.hpp"

namespace rcm {

struct SimSeeds {
  std::uint64_t build = 0;
  std::uint64_t fail = 0;
  std::uint64_t pair = 0;

  /// Three independent stream roots from one master seed.
  static SimSeeds from_master(std::uint64_t seed) noexcept;
};

struct SimOutcome {
  GeometrySpec spec;
  double q = 0.0;
  std::uint32_t trials = 0;
  std::uint32_t pairs_per_trial = 0;
  double routable_fraction = 0.0;
  /// Sample standard deviation of per-trial fractions over sqrt(trials);
  /// 0 for a single trial.
  double std_error = 0.0;
  std::uint64_t hop_cap_hits = 0;
  /// Failure patterns discarded because fewer than two nodes survived.
  std::uint32_t redrawn_patterns = 0;
  SimSeeds seeds;
};

/// Monte Carlo routability: each trial builds a fresh overlay, draws a fresh
/// failure pattern, and routes ordered (src, dst) pairs sampled uniformly
/// among survivors.
SimOutcome estimate_routability(const GeometrySpec& spec, double q,
                                std::uint32_t trials,
                                std::uint32_t pairs_per_trial,
                                const SimSeeds& seeds,
                                const OverlayOptions& options = {});

}  // namespace rcm
