#include "rcm/overlay.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "rng.hpp"

namespace rcm {

namespace {

// Mask of bit i (1-based from the most significant end) in a d-bit id.
constexpr NodeId bit_mask(int bits, int i) { return NodeId{1} << (bits - i); }

// 1-based index of the leftmost set bit of a non-zero d-bit value.
int leftmost_bit(int bits, NodeId diff) {
  return bits - std::bit_width(diff) + 1;
}

int degree_of(const GeometrySpec& spec) {
  return spec.kind() == GeometryKind::Symphony
             ? spec.near_neighbors() + spec.shortcuts()
             : spec.bits();
}

}  // namespace

Overlay::Overlay(GeometrySpec spec, std::uint64_t seed)
    : spec_(spec),
      build_seed_(seed),
      size_(std::uint32_t{1} << spec.bits()),
      degree_(degree_of(spec)),
      links_(static_cast<std::size_t>(size_) * degree_of(spec)) {}

LinkTag Overlay::tag(int slot) const {
  if (slot < 0 || slot >= degree_) throw InvalidArgument("link slot out of range");
  switch (spec_.kind()) {
    case GeometryKind::Tree:
    case GeometryKind::Hypercube:
    case GeometryKind::Xor: return {LinkRole::Bucket, slot + 1};
    case GeometryKind::Ring: return {LinkRole::Finger, slot + 1};
    case GeometryKind::Symphony:
      if (slot < spec_.near_neighbors()) return {LinkRole::Near, slot + 1};
      return {LinkRole::Shortcut, slot - spec_.near_neighbors() + 1};
  }
  return {LinkRole::Bucket, slot + 1};
}

namespace {

void check_sim_bits(int d) {
  if (d > kMaxSimBits) {
    throw InvalidArgument("simulator supports d <= " +
                          std::to_string(kMaxSimBits) + ", got " +
                          std::to_string(d));
  }
}

}  // namespace

Overlay overlay_from_links(const GeometrySpec& spec, std::vector<NodeId> links) {
  check_sim_bits(spec.bits());
  Overlay overlay(spec, 0);
  if (links.size() != overlay.links_.size()) {
    throw InvalidArgument("link table must hold N * degree entries");
  }
  for (NodeId target : links) {
    if (target >= overlay.size_) throw InvalidArgument("link target out of range");
  }
  overlay.links_ = std::move(links);
  return overlay;
}

Overlay build_overlay(const GeometrySpec& spec, std::uint64_t build_seed,
                      const OverlayOptions& options) {
  const int d = spec.bits();
  check_sim_bits(d);
  if (spec.kind() == GeometryKind::Symphony &&
      spec.near_neighbors() >= (1 << d)) {
    throw InvalidArgument("symphony k_n must be below N");
  }

  Overlay overlay(spec, build_seed);
  detail::Rng rng(build_seed);
  const NodeId n = overlay.size_;
  const int degree = overlay.degree_;

  for (NodeId v = 0; v < n; ++v) {
    NodeId* links = overlay.links_.data() + static_cast<std::size_t>(v) * degree;
    switch (spec.kind()) {
      case GeometryKind::Tree:
      case GeometryKind::Hypercube:
        // Link i flips bit i and keeps the rest.
        for (int i = 1; i <= d; ++i) links[i - 1] = v ^ bit_mask(d, i);
        break;
      case GeometryKind::Xor:
        // Link i keeps bits 1..i-1, flips bit i, and draws bits i+1..d.
        for (int i = 1; i <= d; ++i) {
          const NodeId flip = bit_mask(d, i);
          const NodeId low = flip - 1;
          const NodeId suffix = static_cast<NodeId>(rng.next()) & low;
          links[i - 1] = ((v ^ flip) & ~low) | suffix;
        }
        break;
      case GeometryKind::Ring:
        for (int i = 1; i <= d; ++i) {
          const NodeId base = NodeId{1} << (i - 1);
          const NodeId offset =
              options.ring_fingers == FingerPlacement::Randomized
                  ? base + static_cast<NodeId>(rng.below(base))
                  : base;
          links[i - 1] = (v + offset) & (n - 1);
        }
        break;
      case GeometryKind::Symphony: {
        const int near = spec.near_neighbors();
        for (int j = 1; j <= near; ++j) {
          links[j - 1] = (v + static_cast<NodeId>(j)) & (n - 1);
        }
        // Harmonic length law: floor(N^u), u ~ U[0,1), clamped to [1, N-1].
        const double log_n = d * std::log(2.0);
        for (int s = 0; s < spec.shortcuts(); ++s) {
          const double length = std::floor(std::exp(rng.uniform01() * log_n));
          const NodeId offset = static_cast<NodeId>(
              std::clamp(length, 1.0, static_cast<double>(n - 1)));
          links[near + s] = (v + offset) & (n - 1);
        }
        break;
      }
    }
  }
  return overlay;
}

FailurePattern::FailurePattern(std::uint32_t size, double q,
                               std::uint64_t fail_seed)
    : alive_(size), q_(q), fail_seed_(fail_seed) {
  if (!(q >= 0.0 && q < 1.0)) {
    throw InvalidArgument("failure probability q must lie in [0, 1)");
  }
  detail::Rng rng(fail_seed);
  for (auto& a : alive_) {
    a = rng.uniform01() < q ? 0 : 1;
    survivors_ += a;
  }
}

FailurePattern::FailurePattern(std::vector<std::uint8_t> alive, double q)
    : alive_(std::move(alive)), q_(q) {
  for (auto& a : alive_) {
    a = a != 0;
    survivors_ += a;
  }
}

namespace {

// Clockwise distance from `from` to `to` on a ring of size n (a power of 2).
constexpr NodeId clockwise(NodeId from, NodeId to, NodeId n) {
  return (to - from) & (n - 1);
}

// Next hop under each geometry's greedy rule, or `cur` if none is usable.
NodeId next_hop(const Overlay& overlay, const FailurePattern& pattern,
                NodeId cur, NodeId dst) {
  const int d = overlay.spec().bits();
  const auto links = overlay.neighbors(cur);
  const NodeId diff = cur ^ dst;

  switch (overlay.spec().kind()) {
    case GeometryKind::Tree: {
      // Only the link fixing the leftmost differing bit may be used.
      const NodeId next = links[leftmost_bit(d, diff) - 1];
      return pattern.alive(next) ? next : cur;
    }
    case GeometryKind::Hypercube: {
      // Any alive link fixing a differing bit; lowest bit index first.
      for (int i = 1; i <= d; ++i) {
        if ((diff & bit_mask(d, i)) && pattern.alive(links[i - 1])) {
          return links[i - 1];
        }
      }
      return cur;
    }
    case GeometryKind::Xor: {
      NodeId best = cur;
      NodeId best_distance = diff;
      for (NodeId next : links) {
        const NodeId distance = next ^ dst;
        if (distance < best_distance && pattern.alive(next)) {
          best = next;
          best_distance = distance;
        }
      }
      return best;
    }
    case GeometryKind::Ring:
    case GeometryKind::Symphony: {
      // Largest clockwise step that does not pass dst.
      const NodeId n = overlay.size();
      const NodeId remaining = clockwise(cur, dst, n);
      NodeId best = cur;
      NodeId best_step = 0;
      for (NodeId next : links) {
        const NodeId step = clockwise(cur, next, n);
        if (step > best_step && step <= remaining && pattern.alive(next)) {
          best = next;
          best_step = step;
        }
      }
      return best;
    }
  }
  return cur;
}

}  // namespace

RouteOutcome route(const Overlay& overlay, const FailurePattern& pattern,
                   NodeId src, NodeId dst) {
  const NodeId n = overlay.size();
  if (pattern.size() != n) {
    throw InvalidArgument("failure pattern size does not match overlay");
  }
  if (src >= n || dst >= n) throw InvalidArgument("node id out of range");
  if (src == dst) throw InvalidArgument("route requires src != dst");
  if (!pattern.alive(src) || !pattern.alive(dst)) {
    throw InvalidArgument("route endpoints must be alive");
  }

  const std::uint64_t hop_cap = 4ULL * n;
  NodeId cur = src;
  std::uint32_t hops = 0;
  while (cur != dst) {
    if (hops >= hop_cap) return {RouteStatus::HopCap, hops};
    const NodeId next = next_hop(overlay, pattern, cur, dst);
    if (next == cur) return {RouteStatus::DeadEnd, hops};
    cur = next;
    ++hops;
  }
  return {RouteStatus::Delivered, hops};
}

}  // namespace rcm
