#include <map>
#include <set>
#include <unordered_map>

#include "pmsat/draw.hpp"

namespace pmsat {

std::string port_name(Port p) {
  switch (p) {
    case Port::north:
      return "N";
    case Port::east:
      return "E";
    case Port::south:
      return "S";
    case Port::west:
      return "W";
  }
  return "?";
}

namespace {

std::string where(const GridPoint& p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::uint64_t key(const GridPoint& p) {
  return (static_cast<std::uint64_t>(p.x) << 32) ^ static_cast<std::uint64_t>(p.y & 0xffffffff);
}

}  // namespace

DrawingReport validate_drawing(const OrthogonalDrawing& d, const Graph& graph) {
  DrawingReport report;
  auto fail = [&](std::string kind, GridPoint at, std::string detail) {
    report.violations.push_back({std::move(kind), at, std::move(detail)});
  };

  if (d.vertices.size() != graph.num_vertices()) {
    fail("vertex-count", {}, std::to_string(d.vertices.size()) + " positions for " +
                                 std::to_string(graph.num_vertices()) + " vertices");
    return report;
  }

  auto in_bounds = [&](const GridPoint& p) { return p.x >= 0 && p.y >= 0 && p.x < d.width && p.y < d.height; };

  std::unordered_map<std::uint64_t, Vertex> vertex_at;
  for (Vertex v = 0; v < d.vertices.size(); ++v) {
    const GridPoint& p = d.vertices[v];
    if (!in_bounds(p)) fail("out-of-bounds", p, "vertex " + std::to_string(v));
    auto [it, inserted] = vertex_at.emplace(key(p), v);
    if (!inserted) {
      fail("duplicate-vertex", p, "vertices " + std::to_string(it->second) + " and " + std::to_string(v));
    }
  }

  std::set<Edge> drawn;
  for (const EdgeRoute& e : d.edges) {
    const Edge k{std::min(e.from, e.to), std::max(e.from, e.to)};
    if (e.from >= graph.num_vertices() || e.to >= graph.num_vertices() || !graph.has_edge(e.from, e.to)) {
      fail("unknown-edge", {}, std::to_string(e.from) + "-" + std::to_string(e.to));
      continue;
    }
    if (!drawn.insert(k).second) fail("duplicate-edge", {}, std::to_string(e.from) + "-" + std::to_string(e.to));
  }
  for (const Edge& e : graph.edges()) {
    if (!drawn.count(e)) fail("missing-edge", {}, std::to_string(e.first) + "-" + std::to_string(e.second));
  }
  if (!report.ok()) return report;

  // Every grid point an edge touches, with the edge that claimed it.
  std::unordered_map<std::uint64_t, std::size_t> claimed;
  for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
    const EdgeRoute& e = d.edges[ei];
    const std::string name = "edge " + std::to_string(e.from) + "-" + std::to_string(e.to);
    if (e.points.size() < 2) {
      fail("degenerate-edge", {}, name + " has fewer than two points");
      continue;
    }
    if (e.points.front() != d.vertices[e.from] || e.points.back() != d.vertices[e.to]) {
      fail("endpoint-mismatch", e.points.front(), name + " does not start and end at its vertices");
      continue;
    }
    std::vector<GridPoint> cells{e.points.front()};
    bool shaped = true;
    for (std::size_t i = 1; i < e.points.size(); ++i) {
      const GridPoint a = e.points[i - 1];
      const GridPoint b = e.points[i];
      if (a == b) {
        fail("degenerate-segment", a, name + " repeats a point");
        shaped = false;
        break;
      }
      if (a.x != b.x && a.y != b.y) {
        fail("non-axis-segment", a, name + " runs diagonally to " + where(b));
        shaped = false;
        break;
      }
      const std::int64_t dx = (b.x > a.x) - (b.x < a.x);
      const std::int64_t dy = (b.y > a.y) - (b.y < a.y);
      for (GridPoint p = a; p != b;) {
        p = {p.x + dx, p.y + dy};
        cells.push_back(p);
      }
    }
    if (!shaped) continue;

    std::set<std::uint64_t> own;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const GridPoint& p = cells[i];
      const bool endpoint = i == 0 || i + 1 == cells.size();
      if (!in_bounds(p)) fail("out-of-bounds", p, name);
      if (!own.insert(key(p)).second) {
        fail("self-overlap", p, name + " revisits a point");
        continue;
      }
      if (!endpoint) {
        auto v = vertex_at.find(key(p));
        if (v != vertex_at.end()) fail("edge-through-vertex", p, name + " passes vertex " + std::to_string(v->second));
      }
      auto [it, inserted] = claimed.emplace(key(p), ei);
      if (inserted) continue;
      const EdgeRoute& other = d.edges[it->second];
      // Shared endpoints are fine; any other contact is a crossing or overlap.
      const bool shared_vertex = endpoint && vertex_at.count(key(p)) &&
                                 (other.points.front() == p || other.points.back() == p);
      if (!shared_vertex) {
        fail("crossing", p,
             name + " meets edge " + std::to_string(other.from) + "-" + std::to_string(other.to) + " at " + where(p));
      }
    }
  }
  return report;
}

namespace {

Port direction(const GridPoint& from, const GridPoint& to) {
  if (to.x > from.x) return Port::east;
  if (to.x < from.x) return Port::west;
  if (to.y > from.y) return Port::north;
  return Port::south;
}

}  // namespace

PortAssignment port_assignment(const OrthogonalDrawing& d) {
  PortAssignment ports(d.vertices.size());
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    const auto& pts = d.edges[i].points;
    if (pts.size() < 2) continue;
    ports[d.edges[i].from][i] = direction(pts[0], pts[1]);
    ports[d.edges[i].to][i] = direction(pts[pts.size() - 1], pts[pts.size() - 2]);
  }
  return ports;
}

bool has_canonical_ports(const OrthogonalDrawing&, const PortAssignment& ports, Vertex v) {
  std::multiset<Port> used;
  for (const auto& [edge, port] : ports.at(v)) used.insert(port);
  switch (used.size()) {
    case 3:
      return used == std::multiset<Port>{Port::west, Port::east, Port::south};
    case 4:
      return used == std::multiset<Port>{Port::north, Port::east, Port::south, Port::west};
    default:
      return used.size() <= 2;
  }
}

}  // namespace pmsat
