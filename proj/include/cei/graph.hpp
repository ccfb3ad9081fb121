#ifndef CEI_GRAPH_HPP
#define CEI_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cei/vertex_set.hpp"

namespace cei {

/// An edge {u, v} with 0-based endpoints, u < v.
struct Edge {
  int u = 0;
  int v = 0;
  VertexSet ends() const { return VertexSet::singleton(u) | VertexSet::singleton(v); }
  bool operator==(const Edge&) const = default;
};

/// Simple labeled graph on [n]. Isolated vertices and n < 4 are allowed here;
/// the ideal constructors enforce the standing assumptions separately.
class Graph {
 public:
  static constexpr int kMaxVertices = 62;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Edges given with 0-based endpoints. Throws ValidationError on loops,
  /// duplicates or out-of-range endpoints.
  Graph(int n, const std::vector<Edge>& edges);

  /// Convenience constructor from 1-based label pairs.
  static Graph from_labels(int n, std::initializer_list<std::pair<int, int>> edges);

  /// Bit k of `mask` selects the k-th vertex pair in graph6 order
  /// (0,1), (0,2), (1,2), (0,3), ... Requires n(n-1)/2 <= 64.
  static Graph from_edge_mask(int n, std::uint64_t mask);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
  int degree(int v) const { return neighbors(v).size(); }
  int edge_count() const;

  /// Edges sorted lexicographically by (u, v).
  std::vector<Edge> edges() const;
  /// Inverse of from_edge_mask; requires n(n-1)/2 <= 64.
  std::uint64_t edge_mask() const;

  bool operator==(const Graph&) const = default;

 private:
  int n_;
  std::vector<VertexSet> adj_;
};

/// Index of the pair {u, v} (u < v) in graph6 column order.
constexpr int pair_index(int u, int v) { return v * (v - 1) / 2 + u; }

enum class GraphFormat { Graph6, EdgeList };

/// Graph6 decoding for n <= 62; an optional ">>graph6<<" header and
/// surrounding whitespace are accepted. Nonzero padding bits are rejected.
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Header line "n", then one "i j" line per edge with 1-based labels.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

Graph parse_graph(std::string_view text, GraphFormat format);

/// Throws ValidationError unless n >= 4 and no vertex is isolated.
void validate_standing_assumptions(const Graph& g);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

bool is_connected(const Graph& g);
bool is_complete(const Graph& g);
bool is_forest(const Graph& g);
bool is_tree(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_disjoint_union_of_edges(const Graph& g);
bool has_cycle(const Graph& g);

/// Maximum cardinality search followed by a check that the reverse visit
/// order is a perfect elimination ordering.
bool is_chordal(const Graph& g);

/// All triangles, sorted lexicographically.
std::vector<VertexSet> triangles(const Graph& g);
/// All 2-subsets that are not edges, sorted lexicographically.
std::vector<VertexSet> nonedges(const Graph& g);

Graph complement(const Graph& g);

/// The subgraph induced on `s`, relabelled to 0..|s|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Line graph; vertex k corresponds to edges()[k].
Graph line_graph(const Graph& g);

}  // namespace cei

#endif  // CEI_GRAPH_HPP
