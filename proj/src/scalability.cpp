#include "rcm/scalability.hpp"

#include <cmath>
#include <string>

namespace rcm {

namespace {

// Q(m) independent of m: Tree (Q = q) and Symphony (Q_sym depends on d but
// not on the phase).
bool has_constant_hazard(GeometryKind kind) {
  return kind == GeometryKind::Tree || kind == GeometryKind::Symphony;
}

constexpr long long kVanishingSearchLimit = 100'000'000;

}  // namespace

ScalabilityVerdict classify(const GeometrySpec& spec, double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw InvalidArgument(
        "scalability is defined for 0 < q < 1 (a failure-free system is "
        "trivially routable); got q=" + std::to_string(q));
  }
  const PhaseFailureModel model(spec, q);

  ScalabilityVerdict out{.spec = spec, .q = q};
  out.verdict = has_constant_hazard(spec.kind()) ? Verdict::Unscalable
                                                 : Verdict::Scalable;

  if (has_constant_hazard(spec.kind())) {
    const double hz = model.hazard(1);
    const double log_factor = std::log1p(-hz);
    for (long long horizon : kEvidenceHorizons) {
      out.partial_sums.push_back({horizon, hz * static_cast<double>(horizon)});
      out.partial_products.push_back(
          {horizon, std::exp(log_factor * static_cast<double>(horizon))});
    }
    if (hz >= 1.0) {
      out.vanishing_horizon = 1;
    } else {
      const double bound = std::log(kVanishingThreshold) / log_factor;
      const double h = std::floor(bound) + 1.0;
      if (h <= static_cast<double>(kVanishingSearchLimit)) {
        out.vanishing_horizon = static_cast<long long>(h);
      }
    }
    out.limit_estimate = 0.0;
    return out;
  }

  // Q(m) varies with m: walk the phases once up to the last horizon.
  double sum = 0.0;
  double log_p = 0.0;
  bool dead = false;
  std::size_t next = 0;
  const long long last = kEvidenceHorizons.back();
  for (long long m = 1; m <= last; ++m) {
    const double hz = model.hazard(static_cast<int>(m));
    sum += hz;
    if (hz >= 1.0) dead = true;
    if (!dead) log_p += std::log1p(-hz);
    const double p = dead ? 0.0 : std::exp(log_p);
    if (out.vanishing_horizon < 0 && p < kVanishingThreshold) {
      out.vanishing_horizon = m;
    }
    if (next < kEvidenceHorizons.size() && m == kEvidenceHorizons[next]) {
      out.partial_sums.push_back({m, sum});
      out.partial_products.push_back({m, p});
      ++next;
    }
  }

  out.limit_estimate = out.partial_products.back().value;
  for (std::size_t i = 1; i < out.partial_products.size(); ++i) {
    const double prev = out.partial_products[i - 1].value;
    const double cur = out.partial_products[i].value;
    if (std::abs(prev - cur) < kConvergenceTolerance) {
      out.limit_estimate = cur;
      break;
    }
  }
  return out;
}

std::vector<RoutabilityResult> asymptotic_curve(
    const GeometrySpec& spec, int bits, const std::vector<double>& q_grid,
    DenominatorMode mode) {
  const GeometrySpec sized = spec.with_bits(bits);
  std::vector<RoutabilityResult> curve;
  curve.reserve(q_grid.size());
  for (double q : q_grid) curve.push_back(routability(sized, q, mode));
  return curve;
}

}  // namespace rcm
