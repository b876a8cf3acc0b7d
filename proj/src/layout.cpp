// Orthogonal grid layout for planar graphs of maximum degree 4.
//
// Each connected component is augmented with invisible edges to a
// biconnected planar graph, given an st-ordering, and placed one vertex per
// row. Every real edge runs up a private column from its lower to its upper
// endpoint, so each edge bends at most once at either end. Invisible edges
// only attach to vertices of real degree at most 3, which keeps every
// degree-4 vertex from becoming a local source or sink. A compaction pass
// then merges rows and columns and slides vertices into bends while the
// validator still accepts the drawing.

#include <algorithm>
#include <list>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>

#include "draw_internal.hpp"
#include "pmsat/draw.hpp"

namespace pmsat {

namespace detail {

void simplify(std::vector<GridPoint>& pts) {
  std::size_t w = 0;  // pts[0, w) is the simplified prefix
  for (std::size_t r = 0; r < pts.size(); ++r) {
    const GridPoint p = pts[r];
    if (w > 0 && pts[w - 1] == p) continue;
    if (w >= 2) {
      const GridPoint& a = pts[w - 2];
      const GridPoint& b = pts[w - 1];
      if ((a.x == b.x && b.x == p.x) || (a.y == b.y && b.y == p.y)) {
        // Drop b only when it lies between a and p (no reversal).
        const bool between = (std::min(a.x, p.x) <= b.x && b.x <= std::max(a.x, p.x)) &&
                             (std::min(a.y, p.y) <= b.y && b.y <= std::max(a.y, p.y));
        if (between) --w;
      }
    }
    pts[w++] = p;
  }
  pts.resize(w);
}

void fit_bounds(OrthogonalDrawing& d) {
  std::int64_t minx = INT64_MAX, miny = INT64_MAX, maxx = INT64_MIN, maxy = INT64_MIN;
  auto see = [&](const GridPoint& p) {
    minx = std::min(minx, p.x);
    miny = std::min(miny, p.y);
    maxx = std::max(maxx, p.x);
    maxy = std::max(maxy, p.y);
  };
  for (const auto& p : d.vertices) see(p);
  for (const auto& e : d.edges) {
    for (const auto& p : e.points) see(p);
  }
  if (d.vertices.empty()) {
    d.width = d.height = 0;
    return;
  }
  for (auto& p : d.vertices) p = {p.x - minx, p.y - miny};
  for (auto& e : d.edges) {
    for (auto& p : e.points) p = {p.x - minx, p.y - miny};
  }
  d.width = maxx - minx + 1;
  d.height = maxy - miny + 1;
}

}  // namespace detail

namespace {

using detail::fit_bounds;
using detail::simplify;

using Darts = std::vector<std::pair<Vertex, Vertex>>;

std::pair<Vertex, Vertex> next_dart(const Rotation& rot, Vertex u, Vertex v) {
  const auto& r = rot[v];
  auto it = std::find(r.begin(), r.end(), u);
  ++it;
  if (it == r.end()) it = r.begin();
  return {v, *it};
}

Rotation embed(const Graph& g) {
  PlanarityResult p = is_planar(g);
  if (!p.planar) throw std::logic_error("augmented graph lost planarity");
  return std::move(p.embedding);
}

// Adds invisible edges until `aug` is biconnected, preferring endpoints of
// low real degree. Each edge is a chord of one face, so it is inserted into
// the rotation system directly and the embedding stays planar.
void biconnect(Graph& aug, const Graph& real) {
  const std::size_t n = aug.num_vertices();
  Rotation rot = embed(aug);
  while (true) {
    const auto cuts = articulation_points(aug);
    if (cuts.empty()) return;
    const Vertex c = cuts.front();

    std::vector<bool> removed(n, false);
    removed[c] = true;
    std::vector<std::size_t> comp;
    connected_components(aug.without(removed), &comp);

    const auto& rc = rot[c];
    std::size_t i = 0;
    while (comp[rc[i]] == comp[rc[(i + 1) % rc.size()]]) ++i;
    const Vertex w = rc[(i + 1) % rc.size()];

    // Vertices of the face through the corner u-c-w, starting at c and
    // ending at u.
    std::vector<Vertex> face;
    std::pair<Vertex, Vertex> d{c, w};
    do {
      face.push_back(d.first);
      d = next_dart(rot, d.first, d.second);
    } while (!(d.first == c && d.second == w));

    std::size_t ix = 1, iy = face.size() - 1;
    for (std::size_t k = 1; k < face.size() && face[k] != c; ++k) {
      if (real.degree(face[k]) <= 3) {
        ix = k;
        break;
      }
    }
    for (std::size_t k = face.size() - 1; k > 0 && face[k] != c; --k) {
      if (real.degree(face[k]) <= 3) {
        iy = k;
        break;
      }
    }
    if (face[ix] == face[iy] || aug.has_edge(face[ix], face[iy])) {
      ix = 1;
      iy = face.size() - 1;
    }
    if (!aug.add_edge(face[ix], face[iy])) throw std::logic_error("cannot biconnect the layout graph");
    // Place the new neighbour in the face's corner at each endpoint.
    auto insert_after = [&](Vertex at, Vertex pred, Vertex added) {
      auto& r = rot[at];
      r.insert(std::find(r.begin(), r.end(), pred) + 1, added);
    };
    insert_after(face[ix], face[ix - 1], face[iy]);
    insert_after(face[iy], face[iy - 1], face[ix]);
  }
}

// st-ordering of a biconnected graph containing edge {s,t}.
std::vector<Vertex> st_order(const Graph& g, Vertex s, Vertex t) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> pre(n, 0);
  std::vector<Vertex> parent(n, SIZE_MAX), low(n), order;
  std::size_t counter = 0;

  struct Frame {
    Vertex v;
    std::vector<Vertex> nbrs;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  auto visit = [&](Vertex v, Vertex p) {
    pre[v] = ++counter;
    parent[v] = p;
    low[v] = v;
    order.push_back(v);
    std::vector<Vertex> nbrs = g.neighbors(v);
    if (v == s) {
      std::erase(nbrs, t);
      nbrs.insert(nbrs.begin(), t);
    }
    stack.push_back({v, std::move(nbrs), 0});
  };
  visit(s, SIZE_MAX);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next < f.nbrs.size()) {
      const Vertex w = f.nbrs[f.next++];
      if (pre[w] == 0) {
        visit(w, f.v);
      } else if (w != parent[f.v] && pre[w] < pre[low[f.v]]) {
        low[f.v] = w;
      }
    } else {
      const Vertex v = f.v;
      stack.pop_back();
      if (parent[v] != SIZE_MAX && pre[low[v]] < pre[low[parent[v]]]) low[parent[v]] = low[v];
    }
  }

  std::list<Vertex> L{s, t};
  std::vector<std::list<Vertex>::iterator> where(n);
  where[s] = L.begin();
  where[t] = std::next(L.begin());
  std::vector<bool> minus(n, false);
  minus[s] = true;
  for (Vertex v : order) {
    if (v == s || v == t) continue;
    const Vertex p = parent[v];
    if (minus[low[v]]) {
      where[v] = L.insert(where[p], v);
      minus[p] = false;
    } else {
      where[v] = L.insert(std::next(where[p]), v);
      minus[p] = true;
    }
  }
  return {L.begin(), L.end()};
}

enum class Exit { north, east, west, south_around };
enum class Entry { south, east, west, north_around };

struct OpenEdge {
  Vertex from;
  Vertex to;
  bool real;
  int column = -1;  // run column for real edges
};

struct EdgePlan {
  Vertex from = 0;
  Vertex to = 0;
  Exit exit = Exit::north;
  Entry entry = Entry::south;
  int run = -1;
};

struct ComponentLayout {
  std::vector<GridPoint> pos;  // local vertex ids
  std::vector<EdgeRoute> edges;
};

ComponentLayout layout_biconnected(const Graph& real, Graph aug, Vertex s, Vertex t) {
  const std::size_t n = real.num_vertices();
  aug.add_edge(s, t);
  const Rotation rot = embed(aug);
  const std::vector<Vertex> order = st_order(aug, s, t);
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = k;
  for (Vertex v = 0; v < n; ++v) {
    if (v == s || v == t) continue;
    const auto& nb = aug.neighbors(v);
    const bool lower = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return rank[w] < rank[v]; });
    const bool higher = std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return rank[w] > rank[v]; });
    if (!lower || !higher) throw std::logic_error("invalid st-ordering");
  }

  // Outgoing neighbours left to right.
  auto outgoing = [&](Vertex v) {
    const auto& r = rot[v];
    const std::size_t d = r.size();
    std::size_t start = 0;
    if (v == s) {
      start = static_cast<std::size_t>(std::find(r.begin(), r.end(), t) - r.begin());
    } else {
      for (std::size_t i = 0; i < d; ++i) {
        if (rank[r[i]] > rank[v] && rank[r[(i + d - 1) % d]] < rank[v]) start = i;
      }
    }
    std::vector<Vertex> out;
    for (std::size_t k = 0; k < d; ++k) {
      const Vertex w = r[(start + k) % d];
      if (rank[w] > rank[v]) out.push_back(w);
    }
    std::reverse(out.begin(), out.end());
    return out;
  };

  std::vector<int> col_order;
  int next_col = 0;
  auto insert_after = [&](int col) {
    const int id = next_col++;
    auto it = col == -1 ? col_order.begin() : std::find(col_order.begin(), col_order.end(), col) + 1;
    col_order.insert(it, id);
    return id;
  };
  auto insert_before = [&](int col) {
    const int id = next_col++;
    col_order.insert(std::find(col_order.begin(), col_order.end(), col), id);
    return id;
  };

  std::vector<int> vcol(n, -1);
  std::vector<long> vrow(n, 0);
  std::set<long> rows_used;
  std::vector<OpenEdge> open;
  std::map<std::pair<Vertex, Vertex>, EdgePlan> plans;

  for (std::size_t k = 0; k < order.size(); ++k) {
    const Vertex v = order[k];
    vrow[v] = 3 * static_cast<long>(k) + 1;
    rows_used.insert(vrow[v]);

    std::size_t lo = open.size(), hi = 0;
    for (std::size_t i = 0; i < open.size(); ++i) {
      if (open[i].to == v) {
        lo = std::min(lo, i);
        hi = i;
      }
    }
    if (lo == open.size()) {
      lo = 0;
      hi = 0;
      if (v != s) throw std::logic_error("vertex without incoming edges");
    } else {
      for (std::size_t i = lo; i <= hi; ++i) {
        if (open[i].to != v) throw std::logic_error("incoming edges not contiguous");
      }
      ++hi;
    }

    std::vector<OpenEdge> in_real;
    for (std::size_t i = lo; i < hi; ++i) {
      if (open[i].real) in_real.push_back(open[i]);
    }
    const std::size_t in = in_real.size();

    if (in == 0) {
      int left = -1;
      for (std::size_t i = lo; i-- > 0;) {
        if (open[i].real) {
          left = open[i].column;
          break;
        }
      }
      vcol[v] = insert_after(left);
    } else {
      vcol[v] = in == 1 ? in_real[0].column : in_real[1].column;
    }

    for (std::size_t i = 0; i < in; ++i) {
      EdgePlan& plan = plans.at({in_real[i].from, v});
      if (in == 1) {
        plan.entry = Entry::south;
      } else if (i == 0) {
        plan.entry = Entry::west;
      } else if (i == 1) {
        plan.entry = Entry::south;
      } else if (i == 2) {
        plan.entry = Entry::east;
      } else {
        plan.entry = Entry::north_around;
        rows_used.insert(vrow[v] + 1);
      }
    }
    if (in == 2) {
      // Right edge enters from below, left edge from the west.
      plans.at({in_real[0].from, v}).entry = Entry::west;
      plans.at({in_real[1].from, v}).entry = Entry::south;
    }

    const std::vector<Vertex> outs = outgoing(v);
    std::vector<Vertex> out_real;
    for (Vertex w : outs) {
      if (real.has_edge(v, w)) out_real.push_back(w);
    }
    std::vector<Exit> exits;
    switch (out_real.size()) {
      case 0:
        break;
      case 1:
        exits = {Exit::north};
        break;
      case 2:
        exits = {Exit::north, Exit::east};
        break;
      case 3:
        exits = {Exit::west, Exit::north, Exit::east};
        break;
      default:
        exits = {Exit::south_around, Exit::west, Exit::north, Exit::east};
        rows_used.insert(vrow[v] - 1);
        break;
    }
    std::map<Vertex, int> out_col;
    int west_col = -1;
    for (std::size_t i = 0; i < out_real.size(); ++i) {
      EdgePlan plan;
      plan.from = v;
      plan.to = out_real[i];
      plan.exit = exits[i];
      if (exits[i] == Exit::north) plan.run = vcol[v];
      if (exits[i] == Exit::east) plan.run = insert_after(vcol[v]);
      if (exits[i] == Exit::west) plan.run = west_col = insert_before(vcol[v]);
      plans[{v, out_real[i]}] = plan;
      out_col[out_real[i]] = plan.run;
    }
    if (!exits.empty() && exits.front() == Exit::south_around) {
      EdgePlan& plan = plans.at({v, out_real.front()});
      plan.run = insert_before(west_col);
      out_col[out_real.front()] = plan.run;
    }

    std::vector<OpenEdge> replacement;
    for (Vertex w : outs) {
      const bool is_real = real.has_edge(v, w);
      replacement.push_back({v, w, is_real, is_real ? out_col.at(w) : -1});
    }
    open.erase(open.begin() + static_cast<long>(lo), open.begin() + static_cast<long>(hi));
    open.insert(open.begin() + static_cast<long>(lo), replacement.begin(), replacement.end());
  }

  std::map<int, std::int64_t> X;
  for (std::size_t i = 0; i < col_order.size(); ++i) X[col_order[i]] = static_cast<std::int64_t>(i);
  std::map<long, std::int64_t> Y;
  for (long r : rows_used) Y.emplace(r, static_cast<std::int64_t>(Y.size()));

  ComponentLayout out;
  out.pos.resize(n);
  for (Vertex v = 0; v < n; ++v) out.pos[v] = {X.at(vcol[v]), Y.at(vrow[v])};
  for (const auto& [key, plan] : plans) {
    const Vertex u = plan.from;
    const Vertex v = plan.to;
    std::vector<GridPoint> pts{out.pos[u]};
    const std::int64_t run = X.at(plan.run);
    if (plan.exit == Exit::south_around) {
      pts.push_back({out.pos[u].x, Y.at(vrow[u] - 1)});
      pts.push_back({run, Y.at(vrow[u] - 1)});
    } else {
      pts.push_back({run, out.pos[u].y});
    }
    if (plan.entry == Entry::north_around) {
      pts.push_back({run, Y.at(vrow[v] + 1)});
      pts.push_back({out.pos[v].x, Y.at(vrow[v] + 1)});
    } else {
      pts.push_back({run, out.pos[v].y});
    }
    pts.push_back(out.pos[v]);
    simplify(pts);
    out.edges.push_back({u, v, std::move(pts)});
  }
  return out;
}

std::size_t total_bends(const OrthogonalDrawing& d) {
  std::size_t b = 0;
  for (const auto& e : d.edges) b += e.bends();
  return b;
}

// Shifts every coordinate above `line` on one axis down by one.
void collapse(OrthogonalDrawing& d, bool vertical_axis, std::int64_t line) {
  auto shift = [&](GridPoint& p) {
    std::int64_t& coord = vertical_axis ? p.y : p.x;
    if (coord > line) --coord;
  };
  for (auto& p : d.vertices) shift(p);
  for (auto& e : d.edges) {
    for (auto& p : e.points) shift(p);
    simplify(e.points);
  }
  fit_bounds(d);
}

// Moves vertex v onto the first bend of one of its edges. The vacated
// segment can host at most one other edge, and only if that edge continues
// straight through v's old position; then no other part of the drawing is
// affected and the edge loses a bend.
bool try_slide(OrthogonalDrawing& d, const std::vector<std::size_t>& incident, Vertex v) {
  if (incident.size() > 2) return false;
  auto from_v = [&](std::size_t i) {
    std::vector<GridPoint> p = d.edges[i].points;
    if (d.edges[i].to == v) std::reverse(p.begin(), p.end());
    return p;
  };
  auto store = [&](std::size_t i, std::vector<GridPoint> p) {
    if (d.edges[i].to == v) std::reverse(p.begin(), p.end());
    d.edges[i].points = std::move(p);
  };
  auto dir = [](GridPoint a, GridPoint b) {
    return GridPoint{(b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y)};
  };
  for (std::size_t k = 0; k < incident.size(); ++k) {
    const std::size_t ei = incident[k];
    if (d.edges[ei].bends() == 0) continue;
    std::vector<GridPoint> main = from_v(ei);
    const GridPoint old_pos = main[0];
    const GridPoint bend = main[1];
    std::optional<std::vector<GridPoint>> other;
    if (incident.size() == 2) {
      std::vector<GridPoint> p = from_v(incident[1 - k]);
      if (dir(bend, old_pos) != dir(p[0], p[1])) continue;
      p[0] = bend;
      other = std::move(p);
    }
    main.erase(main.begin());
    store(ei, std::move(main));
    if (other) store(incident[1 - k], std::move(*other));
    d.vertices[v] = bend;
    fit_bounds(d);
    return true;
  }
  return false;
}

// After collapsing onto `line`, only that line can hold new conflicts; the
// rest of the drawing is a translation of a valid one.
bool line_ok(const OrthogonalDrawing& d, bool vertical_axis, std::int64_t line) {
  auto on_line = [&](const GridPoint& p) { return (vertical_axis ? p.y : p.x) == line; };
  auto along = [&](const GridPoint& p) { return vertical_axis ? p.x : p.y; };

  std::map<std::int64_t, Vertex> vertex_at;
  for (Vertex v = 0; v < d.vertices.size(); ++v) {
    if (on_line(d.vertices[v]) && !vertex_at.emplace(along(d.vertices[v]), v).second) return false;
  }
  std::map<std::int64_t, std::size_t> claimed;
  for (std::size_t ei = 0; ei < d.edges.size(); ++ei) {
    const auto& pts = d.edges[ei].points;
    std::vector<std::int64_t> cells;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      const GridPoint a = pts[i - 1];
      const GridPoint b = pts[i];
      if (on_line(a) && on_line(b)) {
        const std::int64_t step = along(b) > along(a) ? 1 : -1;
        for (std::int64_t c = along(a) + (i == 1 ? 0 : step); c != along(b) + step; c += step) cells.push_back(c);
      } else if (on_line(b)) {
        cells.push_back(along(b));
      } else if (on_line(a)) {
        if (i == 1) cells.push_back(along(a));
      } else {
        const std::int64_t lo = std::min(vertical_axis ? a.y : a.x, vertical_axis ? b.y : b.x);
        const std::int64_t hi = std::max(vertical_axis ? a.y : a.x, vertical_axis ? b.y : b.x);
        if (lo < line && line < hi) cells.push_back(along(a));
      }
    }
    const std::int64_t first = along(pts.front());
    const std::int64_t last = along(pts.back());
    std::set<std::int64_t> own;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::int64_t c = cells[i];
      if (!own.insert(c).second) return false;
      const bool endpoint = (c == first && on_line(pts.front()) && i == 0) ||
                            (c == last && on_line(pts.back()) && i + 1 == cells.size());
      const bool at_vertex = vertex_at.count(c) > 0;
      if (at_vertex && !endpoint) return false;
      auto [it, inserted] = claimed.emplace(c, ei);
      if (!inserted && !(endpoint && at_vertex)) return false;
    }
  }
  return true;
}

// Whether lines `line` and `line + 1` can be merged. Only edges reaching
// either line change shape, so they alone are shifted into `scratch` (with
// all vertices) and checked: no bends gained, nothing overlapping on the line.
bool merge_ok(const OrthogonalDrawing& d, bool vertical_axis, std::int64_t line, OrthogonalDrawing& scratch) {
  auto coord = [&](const GridPoint& p) { return vertical_axis ? p.y : p.x; };
  auto shifted = [&](GridPoint p) {
    std::int64_t& c = vertical_axis ? p.y : p.x;
    if (c > line) --c;
    return p;
  };
  scratch.vertices.resize(d.vertices.size());
  for (std::size_t v = 0; v < d.vertices.size(); ++v) scratch.vertices[v] = shifted(d.vertices[v]);
  std::size_t used = 0;
  for (const auto& e : d.edges) {
    std::int64_t lo = INT64_MAX, hi = INT64_MIN;
    for (const auto& p : e.points) {
      lo = std::min(lo, coord(p));
      hi = std::max(hi, coord(p));
    }
    if (hi < line || lo > line + 1) continue;
    if (scratch.edges.size() <= used) scratch.edges.emplace_back();
    auto& pts = scratch.edges[used++].points;
    pts.clear();
    for (const auto& p : e.points) pts.push_back(shifted(p));
    simplify(pts);
    if (pts.size() > e.points.size()) return false;
  }
  scratch.edges.resize(used);
  return line_ok(scratch, vertical_axis, line);
}

void compact(OrthogonalDrawing& d, const Graph& g) {
  OrthogonalDrawing scratch;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int axis = 0; axis < 2; ++axis) {
      const bool vertical = axis == 0;
      for (std::int64_t line = 0; line + 1 < (vertical ? d.height : d.width);) {
        if (merge_ok(d, vertical, line, scratch)) {
          collapse(d, vertical, line);
          changed = true;
        } else {
          ++line;
        }
      }
    }
    std::vector<std::vector<std::size_t>> incident(g.num_vertices());
    for (std::size_t i = 0; i < d.edges.size(); ++i) {
      incident[d.edges[i].from].push_back(i);
      incident[d.edges[i].to].push_back(i);
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (try_slide(d, incident[v], v)) changed = true;
    }
  }
  if (!validate_drawing(d, g).ok()) throw std::logic_error("compaction produced an invalid drawing");
}

OrthogonalDrawing to_drawing(const ComponentLayout& cl, const Graph& g) {
  OrthogonalDrawing d;
  d.vertices = cl.pos;
  d.edges = cl.edges;
  fit_bounds(d);
  compact(d, g);
  return d;
}

// Candidate (s, t) pairs: vertices of real degree <= 3 sharing a face.
std::vector<std::pair<Vertex, Vertex>> st_candidates(const Graph& aug, const Graph& real, std::size_t limit) {
  const auto faces = trace_faces(aug, embed(aug));
  std::vector<std::pair<Vertex, Vertex>> out;
  auto add = [&](Vertex s, Vertex t) {
    if (out.size() < limit && std::find(out.begin(), out.end(), std::pair{s, t}) == out.end()) out.push_back({s, t});
  };
  for (const auto& face : faces) {
    std::vector<Vertex> low;
    for (auto [a, b] : face) {
      if (real.degree(a) <= 3 && std::find(low.begin(), low.end(), a) == low.end()) low.push_back(a);
    }
    for (std::size_t i = 0; i < low.size(); ++i) {
      for (std::size_t j = i + 1; j < low.size(); ++j) add(low[i], low[j]);
    }
  }
  if (out.empty()) {
    // At most one low-degree vertex; make it the sink.
    for (const auto& face : faces) {
      for (auto [a, b] : face) {
        if (real.degree(b) <= 3) add(a, b);
      }
    }
  }
  if (out.empty()) add(faces.front().front().first, faces.front().front().second);
  return out;
}

OrthogonalDrawing layout_component(const Graph& real) {
  const std::size_t n = real.num_vertices();
  if (n <= 2) {
    OrthogonalDrawing d;
    d.vertices = {{0, 0}};
    if (n == 2) {
      d.vertices.push_back({1, 0});
      d.edges.push_back({0, 1, {{0, 0}, {1, 0}}});
    }
    fit_bounds(d);
    return d;
  }
  Graph aug = real;
  biconnect(aug, real);

  // Small graphs get several starting pairs; the best compacted result wins.
  const std::size_t tries = n <= 16 ? 12 : n <= 40 ? 4 : 1;
  std::optional<OrthogonalDrawing> best;
  auto score = [](const OrthogonalDrawing& d) {
    std::size_t over = 0;
    for (const auto& e : d.edges) over += e.bends() > 2 ? 1 : 0;
    return std::tuple{over, total_bends(d), d.width * d.height};
  };
  for (auto [s, t] : st_candidates(aug, real, tries)) {
    OrthogonalDrawing d = to_drawing(layout_biconnected(real, aug, s, t), real);
    if (!best || score(d) < score(*best)) best = std::move(d);
  }
  return std::move(*best);
}

}  // namespace

OrthogonalDrawing orthogonal_layout(const Graph& graph) { return orthogonal_layout(graph, is_planar(graph)); }

OrthogonalDrawing orthogonal_layout(const Graph& graph, const PlanarityResult& planarity) {
  if (!planarity.planar) throw LayoutError("graph is not planar");
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    if (graph.degree(v) > 4) {
      throw LayoutError("vertex " + std::to_string(v) + " has degree " + std::to_string(graph.degree(v)) +
                        "; orthogonal drawings need degree <= 4 (draw the graph before literal duplication)");
    }
  }

  std::vector<std::size_t> comp;
  const std::size_t count = connected_components(graph, &comp);
  OrthogonalDrawing d;
  d.vertices.resize(graph.num_vertices());
  std::int64_t offset = 0;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<Vertex> members;
    std::vector<Vertex> local(graph.num_vertices(), SIZE_MAX);
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
      if (comp[v] == c) {
        local[v] = members.size();
        members.push_back(v);
      }
    }
    Graph sub(members.size());
    for (auto [u, v] : graph.edges()) {
      if (comp[u] == c) sub.add_edge(local[u], local[v]);
    }
    OrthogonalDrawing part = layout_component(sub);

    for (std::size_t i = 0; i < members.size(); ++i) {
      d.vertices[members[i]] = {part.vertices[i].x + offset, part.vertices[i].y};
    }
    for (auto& e : part.edges) {
      EdgeRoute r{members[e.from], members[e.to], {}};
      for (auto p : e.points) r.points.push_back({p.x + offset, p.y});
      d.edges.push_back(std::move(r));
    }
    offset += part.width;
  }
  // Edge order follows the graph's edge list.
  std::map<Edge, std::size_t> index;
  for (std::size_t i = 0; i < graph.edges().size(); ++i) index[graph.edges()[i]] = i;
  std::sort(d.edges.begin(), d.edges.end(), [&](const EdgeRoute& a, const EdgeRoute& b) {
    return index.at({std::min(a.from, a.to), std::max(a.from, a.to)}) <
           index.at({std::min(b.from, b.to), std::max(b.from, b.to)});
  });
  for (auto& e : d.edges) {
    if (e.from > e.to) {
      std::swap(e.from, e.to);
      std::reverse(e.points.begin(), e.points.end());
    }
  }
  fit_bounds(d);
  return d;
}

}  // namespace pmsat
