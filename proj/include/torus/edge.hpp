#pragma once

#include <array>

namespace torus {

// The four sides of the fundamental square. Bottom/top are glued, and so are
// left/right.
enum class Edge { bottom, top, left, right };

inline constexpr std::array<Edge, 4> kAllEdges{Edge::bottom, Edge::top, Edge::left, Edge::right};

constexpr Edge opposite(Edge e) {
  switch (e) {
    case Edge::bottom: return Edge::top;
    case Edge::top: return Edge::bottom;
    case Edge::left: return Edge::right;
    case Edge::right: return Edge::left;
  }
  return e;
}

// Horizontal edges (y fixed) are parameterized by x, vertical ones by y.
constexpr bool is_horizontal(Edge e) { return e == Edge::bottom || e == Edge::top; }

const char* to_string(Edge e);

}  // namespace torus
