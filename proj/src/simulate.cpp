#include "rcm/simulate.hpp"

#include <cmath>
#include <vector>

#include "rcm/overlay.hpp"
#include "rng.hpp"

namespace rcm {

SimSeeds SimSeeds::from_master(std::uint64_t seed) noexcept {
  return {detail::derive_seed(seed, 1), detail::derive_seed(seed, 2),
          detail::derive_seed(seed, 3)};
}

namespace {

// A failure pattern with at least two survivors. Draws are indexed so the
// k-th redraw of trial t is reproducible.
FailurePattern draw_pattern(std::uint32_t n, double q, std::uint64_t root,
                            std::uint32_t trial, std::uint32_t& redrawn) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t seed =
        detail::derive_seed(detail::derive_seed(root, trial), attempt);
    FailurePattern pattern(n, q, seed);
    if (pattern.survivors() >= 2) return pattern;
    ++redrawn;
  }
}

}  // namespace

SimOutcome estimate_routability(const GeometrySpec& spec, double q,
                                std::uint32_t trials,
                                std::uint32_t pairs_per_trial,
                                const SimSeeds& seeds,
                                const OverlayOptions& options) {
  if (trials < 1) throw InvalidArgument("trials must be >= 1");
  if (pairs_per_trial < 1) throw InvalidArgument("pairs per trial must be >= 1");
  if (!(q >= 0.0 && q < 1.0)) {
    throw InvalidArgument("failure probability q must lie in [0, 1)");
  }

  SimOutcome out{.spec = spec, .q = q, .trials = trials, .pairs_per_trial = pairs_per_trial};
  out.seeds = seeds;

  std::vector<double> fractions;
  fractions.reserve(trials);
  std::vector<NodeId> survivors;

  for (std::uint32_t t = 0; t < trials; ++t) {
    const Overlay overlay =
        build_overlay(spec, detail::derive_seed(seeds.build, t), options);
    const FailurePattern pattern =
        draw_pattern(overlay.size(), q, seeds.fail, t, out.redrawn_patterns);

    survivors.clear();
    for (NodeId v = 0; v < overlay.size(); ++v) {
      if (pattern.alive(v)) survivors.push_back(v);
    }

    detail::Rng rng(detail::derive_seed(seeds.pair, t));
    const std::uint64_t alive = survivors.size();
    std::uint32_t delivered = 0;
    for (std::uint32_t k = 0; k < pairs_per_trial; ++k) {
      const std::uint64_t i = rng.below(alive);
      std::uint64_t j = rng.below(alive - 1);
      if (j >= i) ++j;
      const RouteOutcome outcome = route(overlay, pattern, survivors[i], survivors[j]);
      if (outcome.delivered()) ++delivered;
      if (outcome.status == RouteStatus::HopCap) ++out.hop_cap_hits;
    }
    fractions.push_back(static_cast<double>(delivered) / pairs_per_trial);
  }

  double mean = 0.0;
  for (double f : fractions) mean += f;
  mean /= trials;
  out.routable_fraction = mean;

  if (trials > 1) {
    double ss = 0.0;
    for (double f : fractions) ss += (f - mean) * (f - mean);
    out.std_error = std::sqrt(ss / (trials - 1)) / std::sqrt(static_cast<double>(trials));
  }
  return out;
}

}  // namespace rcm
