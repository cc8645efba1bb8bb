#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace octa {

/// The 14 corner classes of the parallelogram decomposition: the six octahedron
/// vertices and the eight extra points O1..O4 with their antipodes. Primed
/// labels are spelled with a trailing apostrophe, e.g. "v2'".
enum class VertexLabel : std::uint8_t {
  v1, v2, v3, v1p, v2p, v3p,
  O1, O2, O3, O4, O1p, O2p, O3p, O4p,
};

inline constexpr int kVertexLabelCount = 14;

std::string_view name(VertexLabel v) noexcept;
std::optional<VertexLabel> parse_vertex_label(std::string_view text) noexcept;

/// Image under the antipodal map X <-> X'.
VertexLabel antipode(VertexLabel v) noexcept;

constexpr bool is_octahedron_vertex(VertexLabel v) {
  return static_cast<int>(v) < 6;
}

/// 0, 1 or 2 for v_i / v_i' (the deficit index); -1 for the O-points.
constexpr int deficit_index(VertexLabel v) {
  return is_octahedron_vertex(v) ? static_cast<int>(v) % 3 : -1;
}

} // namespace octa
