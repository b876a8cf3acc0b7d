#include <array>
#include <optional>

#include "draw_internal.hpp"
#include "pmsat/draw.hpp"

namespace pmsat {

namespace {

// Clockwise index: N=0, E=1, S=2, W=3.
int index_of(Port p) {
  switch (p) {
    case Port::north:
      return 0;
    case Port::east:
      return 1;
    case Port::south:
      return 2;
    case Port::west:
      return 3;
  }
  return 0;
}

Port port_at(int i) {
  static constexpr std::array<Port, 4> order{Port::north, Port::east, Port::south, Port::west};
  return order[static_cast<std::size_t>(((i % 4) + 4) % 4)];
}

GridPoint step(Port p, std::int64_t k = 1) {
  switch (p) {
    case Port::north:
      return {0, k};
    case Port::east:
      return {k, 0};
    case Port::south:
      return {0, -k};
    case Port::west:
      return {-k, 0};
  }
  return {};
}

GridPoint operator+(GridPoint a, GridPoint b) { return {a.x + b.x, a.y + b.y}; }

struct Move {
  std::size_t edge;
  Port from;
  Port to;
};

// Quarter-turn moves that bring a degree-3 vertex to the W,E,S pattern while
// keeping the cyclic order of its edges. Prefers the fewest moves.
std::vector<Move> plan_moves(const std::map<std::size_t, Port>& ports) {
  std::vector<std::pair<int, std::size_t>> used;  // (port index, edge)
  for (const auto& [edge, port] : ports) used.push_back({index_of(port), edge});
  std::sort(used.begin(), used.end());

  std::optional<std::vector<Move>> best;
  for (int code = 0; code < 27; ++code) {
    std::array<int, 3> delta{code % 3 - 1, code / 3 % 3 - 1, code / 9 - 1};
    std::array<int, 3> target{};
    for (std::size_t i = 0; i < 3; ++i) target[i] = ((used[i].first + delta[i]) % 4 + 4) % 4;
    // North must be the free port, targets distinct.
    if (target[0] == 0 || target[1] == 0 || target[2] == 0) continue;
    if (target[0] == target[1] || target[1] == target[2] || target[0] == target[2]) continue;
    // Cyclic order preserved: the targets, read in the original order, wrap
    // around at most once.
    int descents = 0;
    for (std::size_t i = 0; i < 3; ++i) descents += target[(i + 1) % 3] < target[i] ? 1 : 0;
    if (descents != 1) continue;
    std::vector<Move> moves;
    for (std::size_t i = 0; i < 3; ++i) {
      if (delta[i] != 0) moves.push_back({used[i].second, port_at(used[i].first), port_at(target[i])});
    }
    if (!best || moves.size() < best->size()) best = std::move(moves);
  }
  return best.value_or(std::vector<Move>{});
}

OrthogonalDrawing scaled(const OrthogonalDrawing& d, std::int64_t k) {
  OrthogonalDrawing s = d;
  for (auto& p : s.vertices) p = {p.x * k, p.y * k};
  for (auto& e : s.edges) {
    for (auto& p : e.points) p = {p.x * k, p.y * k};
  }
  s.width = d.width == 0 ? 0 : (d.width - 1) * k + 1;
  s.height = d.height == 0 ? 0 : (d.height - 1) * k + 1;
  return s;
}

// Replaces the first stretch of `edge` at `v`: it now leaves by `m.to`, runs
// two units parallel to the old direction and rejoins the old route two units
// out. Fails when the old first segment is shorter than two units.
bool reroute(OrthogonalDrawing& d, Vertex v, const Move& m) {
  EdgeRoute& e = d.edges[m.edge];
  std::vector<GridPoint> pts = e.points;
  const bool at_end = e.to == v && !(e.from == v);
  if (at_end) std::reverse(pts.begin(), pts.end());
  const GridPoint origin = pts[0];
  const GridPoint join = origin + step(m.from, 2);
  const GridPoint first = pts[1];
  const std::int64_t len = std::abs(first.x - origin.x) + std::abs(first.y - origin.y);
  if (len < 2) return false;

  std::vector<GridPoint> out{origin, origin + step(m.to), origin + step(m.to) + step(m.from, 2), join};
  out.insert(out.end(), pts.begin() + (first == join ? 2 : 1), pts.end());
  detail::simplify(out);
  if (at_end) std::reverse(out.begin(), out.end());
  e.points = std::move(out);
  return true;
}

std::optional<OrthogonalDrawing> normalize_at_scale(const OrthogonalDrawing& base, const IncidenceGraph& graph) {
  OrthogonalDrawing d = base;
  for (Vertex v = 0; v < graph.num_vars; ++v) {
    const PortAssignment ports = port_assignment(d);
    if (ports[v].size() != 3 || has_canonical_ports(d, ports, v)) continue;
    for (const Move& m : plan_moves(ports[v])) {
      if (!reroute(d, v, m)) return std::nullopt;
    }
    detail::fit_bounds(d);
    if (!validate_drawing(d, graph).ok()) return std::nullopt;
  }
  return d;
}

}  // namespace

NormalizedDrawing normalize_variable_ports(const OrthogonalDrawing& drawing, const IncidenceGraph& graph) {
  if (!validate_drawing(drawing, graph).ok()) throw LayoutError("cannot normalize an invalid drawing");
  for (std::int64_t k = 1; k <= 729; k *= 3) {
    if (auto d = normalize_at_scale(scaled(drawing, k), graph)) {
      NormalizedDrawing out;
      out.ports = port_assignment(*d);
      out.drawing = std::move(*d);
      out.scale = k;
      return out;
    }
  }
  throw LayoutError("port normalization failed even after scaling");
}

}  // namespace pmsat
