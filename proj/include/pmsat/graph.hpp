#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pmsat/core.hpp"

namespace pmsat {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph; parallel edges and loops are dropped on insertion.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t num_vertices) : adjacency_(num_vertices) {}
  Graph(std::size_t num_vertices, const std::vector<Edge>& edges);

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  // Returns false if the edge was already present or is a loop.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t max_degree() const;
  // Edges in insertion order, each stored as (min, max).
  const std::vector<Edge>& edges() const { return edges_; }

  // Graph without the vertices flagged in `removed` (ids are kept; removed
  // vertices become isolated).
  Graph without(const std::vector<bool>& removed) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

// Bipartite variable/clause graph. Vertex v-1 is variable v; vertex
// num_vars + j is clause j.
struct IncidenceGraph {
  Graph graph;
  std::uint32_t num_vars = 0;
  std::size_t num_clauses = 0;

  bool is_variable(Vertex v) const { return v < num_vars; }
  Vertex variable_vertex(Variable var) const { return var - 1; }
  Vertex clause_vertex(std::size_t j) const { return num_vars + j; }
  std::string label(Vertex v) const;
};

IncidenceGraph incidence_graph(const Instance& instance);

enum class KuratowskiKind { none, k5, k33 };

// Cyclic neighbour order per vertex.
using Rotation = std::vector<std::vector<Vertex>>;

struct PlanarityResult {
  bool planar = false;
  Rotation embedding;        // when planar
  std::vector<Edge> witness;  // when non-planar
  KuratowskiKind witness_kind = KuratowskiKind::none;
};

PlanarityResult is_planar(const Graph& graph);
inline PlanarityResult is_planar(const IncidenceGraph& g) { return is_planar(g.graph); }

bool is_connected(const Graph& graph);
std::size_t connected_components(const Graph& graph, std::vector<std::size_t>* component = nullptr);
std::vector<Vertex> articulation_points(const Graph& graph);
bool is_biconnected(const Graph& graph);
inline bool is_biconnected(const IncidenceGraph& g) { return is_biconnected(g.graph); }
// Brute-force removal of every vertex pair.
bool is_triconnected(const Graph& graph);
inline bool is_triconnected(const IncidenceGraph& g) { return is_triconnected(g.graph); }

// Faces traced from a rotation system; each face is its list of directed darts.
std::vector<std::vector<std::pair<Vertex, Vertex>>> trace_faces(const Graph& graph, const Rotation& rotation);

// Euler check on the faces traced from `rotation`: V - E + F must equal two
// per component with edges plus one per isolated vertex.
bool satisfies_euler(const Graph& graph, const Rotation& rotation);

// Whether the edge set is a subdivision of K5 or K3,3 (after suppressing
// degree-2 vertices).
KuratowskiKind kuratowski_kind(const std::vector<Edge>& edges);

std::string kuratowski_name(KuratowskiKind k);

}  // namespace pmsat
