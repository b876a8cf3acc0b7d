#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmsat/graph.hpp"

namespace pmsat {

class LayoutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;
  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct EdgeRoute {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<GridPoint> points;  // from's position ... to's position
  std::size_t bends() const { return points.size() < 2 ? 0 : points.size() - 2; }
  friend bool operator==(const EdgeRoute&, const EdgeRoute&) = default;
};

// Integer grid drawing; origin bottom-left, all coordinates non-negative.
struct OrthogonalDrawing {
  std::vector<GridPoint> vertices;
  std::vector<EdgeRoute> edges;
  std::int64_t width = 0;   // number of grid columns (max x + 1)
  std::int64_t height = 0;  // number of grid rows (max y + 1)
  friend bool operator==(const OrthogonalDrawing&, const OrthogonalDrawing&) = default;
};

enum class Port { north, east, south, west };
std::string port_name(Port p);

// Per vertex: edge index (into OrthogonalDrawing::edges) -> port it leaves by.
using PortAssignment = std::vector<std::map<std::size_t, Port>>;

// Planar orthogonal drawing of a planar graph with max degree 4. Vertices sit
// on distinct grid points, edges are axis-parallel polylines. Raises
// LayoutError for non-planar input or degree above 4.
OrthogonalDrawing orthogonal_layout(const Graph& graph, const PlanarityResult& planarity);
OrthogonalDrawing orthogonal_layout(const Graph& graph);
inline OrthogonalDrawing orthogonal_layout(const IncidenceGraph& g, const PlanarityResult& p) {
  return orthogonal_layout(g.graph, p);
}

struct DrawingViolation {
  std::string kind;
  GridPoint at;
  std::string detail;
};

struct DrawingReport {
  std::vector<DrawingViolation> violations;
  bool ok() const { return violations.empty(); }
};

DrawingReport validate_drawing(const OrthogonalDrawing& drawing, const Graph& graph);
inline DrawingReport validate_drawing(const OrthogonalDrawing& d, const IncidenceGraph& g) {
  return validate_drawing(d, g.graph);
}

// Port each edge uses at each of its endpoints.
PortAssignment port_assignment(const OrthogonalDrawing& drawing);

// Canonical exit pattern of a variable vertex: W,E,S for degree 3 and all
// four ports for degree 4. Lower degrees carry no constraint.
bool has_canonical_ports(const OrthogonalDrawing& drawing, const PortAssignment& ports, Vertex v);

struct NormalizedDrawing {
  OrthogonalDrawing drawing;
  PortAssignment ports;
  std::int64_t scale = 1;  // total uniform scale applied before rerouting
};

// Reroutes the edges around every variable vertex so it shows the canonical
// pattern. Tries in place first, then on the drawing scaled by 3 (repeated
// while rerouting still lacks room).
NormalizedDrawing normalize_variable_ports(const OrthogonalDrawing& drawing, const IncidenceGraph& graph);

enum class RenderFormat { svg, ascii };

// `is_variable[v]` selects circle (variable) or square (clause) glyphs.
std::string render(const OrthogonalDrawing& drawing, RenderFormat format, const std::vector<bool>& is_variable);
std::string render(const OrthogonalDrawing& drawing, RenderFormat format, const IncidenceGraph& graph);

}  // namespace pmsat
