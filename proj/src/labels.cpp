#include "octa/labels.hpp"

#include <array>

namespace octa {

namespace {

constexpr std::array<std::string_view, kVertexLabelCount> kNames{
    "v1", "v2", "v3", "v1'", "v2'", "v3'",
    "O1", "O2", "O3", "O4", "O1'", "O2'", "O3'", "O4'",
};

} // namespace

std::string_view name(VertexLabel v) noexcept { return kNames[static_cast<std::size_t>(v)]; }

std::optional<VertexLabel> parse_vertex_label(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == text) return static_cast<VertexLabel>(i);
  }
  return std::nullopt;
}

VertexLabel antipode(VertexLabel v) noexcept {
  const int i = static_cast<int>(v);
  if (i < 6) return static_cast<VertexLabel>((i + 3) % 6);
  return static_cast<VertexLabel>(6 + (i - 6 + 4) % 8);
}

} // namespace octa
