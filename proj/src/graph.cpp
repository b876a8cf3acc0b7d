#include "pmsat/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/property_map/property_map.hpp>

namespace pmsat {

Graph::Graph(std::size_t num_vertices, const std::vector<Edge>& edges) : adjacency_(num_vertices) {
  for (auto [u, v] : edges) add_edge(u, v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u == v || u >= adjacency_.size() || v >= adjacency_.size()) return false;
  if (has_edge(u, v)) return false;
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& a = adjacency_.at(u);
  return std::find(a.begin(), a.end(), v) != a.end();
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adjacency_) d = std::max(d, a.size());
  return d;
}

Graph Graph::without(const std::vector<bool>& removed) const {
  Graph g(num_vertices());
  for (auto [u, v] : edges_) {
    if (!removed[u] && !removed[v]) g.add_edge(u, v);
  }
  return g;
}

std::string IncidenceGraph::label(Vertex v) const {
  return is_variable(v) ? "x" + std::to_string(v + 1) : "C" + std::to_string(v - num_vars + 1);
}

IncidenceGraph incidence_graph(const Instance& instance) {
  IncidenceGraph g;
  g.num_vars = instance.num_vars();
  g.num_clauses = instance.num_clauses();
  g.graph = Graph(g.num_vars + g.num_clauses);
  for (std::size_t j = 0; j < instance.num_clauses(); ++j) {
    for (Literal l : instance.clause(j)) g.graph.add_edge(g.variable_vertex(l.var()), g.clause_vertex(j));
  }
  return g;
}

// ---------------------------------------------------------------------------

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

bool edges_planar(std::size_t n, const std::vector<Edge>& edges, std::size_t skip) {
  BoostGraph bg(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i != skip) boost::add_edge(edges[i].first, edges[i].second, bg);
  }
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next++);
  return boost::boyer_myrvold_planarity_test(bg);
}

std::vector<Edge> minimal_nonplanar(std::size_t n, std::vector<Edge> edges) {
  for (std::size_t i = 0; i < edges.size();) {
    if (!edges_planar(n, edges, i)) {
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      ++i;
    }
  }
  return edges;
}

}  // namespace

PlanarityResult is_planar(const Graph& graph) {
  BoostGraph bg(graph.num_vertices());
  for (auto [u, v] : graph.edges()) boost::add_edge(u, v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int next = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, next++);

  std::vector<std::vector<BoostEdge>> embedding(graph.num_vertices());
  std::vector<BoostEdge> kuratowski;
  const bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(), boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  PlanarityResult result;
  result.planar = planar;
  if (planar) {
    result.embedding.resize(graph.num_vertices());
    for (Vertex v = 0; v < graph.num_vertices(); ++v) {
      for (const BoostEdge& e : embedding[v]) {
        const Vertex s = boost::source(e, bg);
        const Vertex t = boost::target(e, bg);
        result.embedding[v].push_back(s == v ? t : s);
      }
    }
  } else {
    for (const BoostEdge& e : kuratowski) {
      const Vertex s = boost::source(e, bg);
      const Vertex t = boost::target(e, bg);
      result.witness.emplace_back(std::min(s, t), std::max(s, t));
    }
    std::sort(result.witness.begin(), result.witness.end());
    result.witness.erase(std::unique(result.witness.begin(), result.witness.end()), result.witness.end());
    result.witness_kind = kuratowski_kind(result.witness);
    // The isolated subgraph occasionally carries extra edges; an edge-minimal
    // non-planar subgraph is always a Kuratowski subdivision.
    if (result.witness_kind == KuratowskiKind::none) {
      result.witness = minimal_nonplanar(graph.num_vertices(), result.witness);
      result.witness_kind = kuratowski_kind(result.witness);
    }
  }
  return result;
}

std::size_t connected_components(const Graph& graph, std::vector<std::size_t>* component) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::size_t> comp(n, SIZE_MAX);
  std::size_t count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != SIZE_MAX) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : graph.neighbors(v)) {
        if (comp[w] == SIZE_MAX) {
          comp[w] = count;
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  if (component) *component = std::move(comp);
  return count;
}

bool is_connected(const Graph& graph) { return connected_components(graph) <= 1; }

std::vector<Vertex> articulation_points(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<bool> is_cut(n, false);
  std::size_t timer = 0;

  // Iterative DFS: frame = (vertex, parent, next neighbour index).
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] != 0) continue;
    std::size_t root_children = 0;
    std::vector<Frame> stack{{root, SIZE_MAX, 0}};
    disc[root] = low[root] = ++timer;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = graph.neighbors(f.v);
      if (f.next < nbrs.size()) {
        Vertex w = nbrs[f.next++];
        if (w == f.parent) continue;
        if (disc[w] == 0) {
          disc[w] = low[w] = ++timer;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else {
          low[f.v] = std::min(low[f.v], disc[w]);
        }
      } else {
        const Vertex v = f.v;
        const Vertex p = f.parent;
        stack.pop_back();
        if (p != SIZE_MAX) {
          low[p] = std::min(low[p], low[v]);
          if (p != root && low[v] >= disc[p]) is_cut[p] = true;
        }
      }
    }
    if (root_children > 1) is_cut[root] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.push_back(v);
  }
  return out;
}

bool is_biconnected(const Graph& graph) {
  return graph.num_vertices() >= 3 && is_connected(graph) && articulation_points(graph).empty();
}

bool is_triconnected(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  if (n < 4 || !is_biconnected(graph)) return false;
  std::vector<bool> removed(n, false);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      removed[a] = removed[b] = true;
      const Graph rest = graph.without(removed);
      // Two removed vertices become isolated components of their own.
      const bool separated = connected_components(rest) > 3;
      removed[a] = removed[b] = false;
      if (separated) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::pair<Vertex, Vertex>>> trace_faces(const Graph& graph, const Rotation& rotation) {
  std::map<std::pair<Vertex, Vertex>, bool> visited;
  for (auto [u, v] : graph.edges()) {
    visited[{u, v}] = false;
    visited[{v, u}] = false;
  }
  auto next_dart = [&](Vertex u, Vertex v) {
    const auto& rot = rotation.at(v);
    auto it = std::find(rot.begin(), rot.end(), u);
    if (it == rot.end()) throw std::logic_error("rotation system does not match graph");
    ++it;
    if (it == rot.end()) it = rot.begin();
    return std::pair<Vertex, Vertex>{v, *it};
  };
  std::vector<std::vector<std::pair<Vertex, Vertex>>> faces;
  for (auto& [dart, seen] : visited) {
    if (seen) continue;
    std::vector<std::pair<Vertex, Vertex>> face;
    auto d = dart;
    while (!visited[d]) {
      visited[d] = true;
      face.push_back(d);
      d = next_dart(d.first, d.second);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

bool satisfies_euler(const Graph& graph, const Rotation& rotation) {
  for (Vertex v = 0; v < graph.num_vertices(); ++v) {
    std::vector<Vertex> a = graph.neighbors(v);
    std::vector<Vertex> b = rotation.at(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  const auto faces = trace_faces(graph, rotation);
  std::size_t isolated = 0;
  for (Vertex v = 0; v < graph.num_vertices(); ++v) isolated += graph.degree(v) == 0;
  const std::size_t components = connected_components(graph);
  const long long lhs = static_cast<long long>(graph.num_vertices()) - static_cast<long long>(graph.num_edges()) +
                        static_cast<long long>(faces.size());
  const long long rhs = 2 * static_cast<long long>(components - isolated) + static_cast<long long>(isolated);
  return lhs == rhs;
}

KuratowskiKind kuratowski_kind(const std::vector<Edge>& edges) {
  std::map<Vertex, std::vector<Vertex>> adj;
  std::set<Edge> unique;
  for (auto [u, v] : edges) {
    if (u == v) return KuratowskiKind::none;
    unique.insert({std::min(u, v), std::max(u, v)});
  }
  for (auto [u, v] : unique) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<Vertex> branch;
  for (const auto& [v, nbrs] : adj) {
    if (nbrs.size() < 2) return KuratowskiKind::none;
    if (nbrs.size() >= 3) branch.push_back(v);
  }

  // Suppress degree-2 vertices: follow each branch edge to the next branch vertex.
  std::set<Edge> used;
  std::set<Edge> contracted;
  for (Vertex b : branch) {
    for (Vertex first : adj[b]) {
      Vertex prev = b;
      Vertex cur = first;
      used.insert({std::min(prev, cur), std::max(prev, cur)});
      while (adj[cur].size() == 2) {
        Vertex nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = nxt;
        used.insert({std::min(prev, cur), std::max(prev, cur)});
      }
      if (cur == b) return KuratowskiKind::none;
      contracted.insert({std::min(b, cur), std::max(b, cur)});
    }
  }
  if (used.size() != unique.size()) return KuratowskiKind::none;  // stray cycle
  // Each contracted edge is seen from both ends; parallel paths collapse and are caught by the count.
  std::size_t path_count = 0;
  for (Vertex b : branch) path_count += adj[b].size();
  path_count /= 2;
  if (path_count != contracted.size()) return KuratowskiKind::none;

  if (branch.size() == 5 && contracted.size() == 10) {
    bool all_deg4 = std::all_of(branch.begin(), branch.end(), [&](Vertex v) { return adj[v].size() == 4; });
    if (all_deg4) return KuratowskiKind::k5;
  }
  if (branch.size() == 6 && contracted.size() == 9) {
    // Bipartition check on the contracted graph.
    std::map<Vertex, std::vector<Vertex>> cadj;
    for (auto [u, v] : contracted) {
      cadj[u].push_back(v);
      cadj[v].push_back(u);
    }
    std::map<Vertex, int> side;
    std::vector<Vertex> stack{branch.front()};
    side[branch.front()] = 0;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : cadj[v]) {
        auto it = side.find(w);
        if (it == side.end()) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (it->second == side[v]) {
          return KuratowskiKind::none;
        }
      }
    }
    if (side.size() != 6) return KuratowskiKind::none;
    int left = 0;
    for (auto& [v, s] : side) left += s == 0;
    if (left == 3 && std::all_of(branch.begin(), branch.end(), [&](Vertex v) { return cadj[v].size() == 3; })) {
      return KuratowskiKind::k33;
    }
  }
  return KuratowskiKind::none;
}

std::string kuratowski_name(KuratowskiKind k) {
  switch (k) {
    case KuratowskiKind::k5:
      return "K5";
    case KuratowskiKind::k33:
      return "K3,3";
    case KuratowskiKind::none:
      break;
  }
  return "none";
}

}  // namespace pmsat
