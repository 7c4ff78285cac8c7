#include "rcm/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace rcm {

std::string_view to_string(GeometryKind kind) noexcept {
  switch (kind) {
    case GeometryKind::Tree: return "tree";
    case GeometryKind::Hypercube: return "hypercube";
    case GeometryKind::Xor: return "xor";
    case GeometryKind::Ring: return "ring";
    case GeometryKind::Symphony: return "symphony";
  }
  return "unknown";
}

std::optional<GeometryKind> parse_geometry(std::string_view name) noexcept {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (GeometryKind kind : kAllGeometries) {
    if (lower == to_string(kind)) return kind;
  }
  return std::nullopt;
}

GeometrySpec::GeometrySpec(GeometryKind kind, int bits, int near_neighbors,
                           int shortcuts)
    : kind_(kind),
      bits_(bits),
      near_neighbors_(near_neighbors),
      shortcuts_(shortcuts) {
  if (bits < 1 || bits > kMaxBits) {
    throw InvalidArgument("identifier length d must be in [1, " +
                          std::to_string(kMaxBits) + "], got " +
                          std::to_string(bits));
  }
  if (kind == GeometryKind::Symphony && (near_neighbors < 1 || shortcuts < 1)) {
    throw InvalidArgument("symphony needs k_n >= 1 and k_s >= 1");
  }
}

}  // namespace rcm
