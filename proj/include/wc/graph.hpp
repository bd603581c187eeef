#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "wc/errors.hpp"

namespace wc {

/// Simple undirected graph on vertices 0..n-1 (1-based in all I/O),
/// stored as one adjacency bitrow per vertex. Immutable after construction.
class Graph {
 public:
  static constexpr int kMaxVertices = 16;

  Graph() = default;

  /// Builds a graph from 1-based edge pairs. Duplicate edges collapse;
  /// loops are rejected.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Same as from_edges but with 0-based endpoints.
  static Graph from_edges0(int n, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const;

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
  uint16_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;

  /// Edges as 0-based pairs (u < v), sorted.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& other) const = default;

 private:
  int n_ = 0;
  std::array<uint16_t, kMaxVertices> adj_{};
};

/// A bijection vertex -> label, both 0-based internally.
/// label_of[v] is the label assigned to vertex v.
struct Labeling {
  std::vector<int> label_of;

  static Labeling identity(int n);
  Labeling inverse() const;
  bool is_valid() const;
  int size() const { return static_cast<int>(label_of.size()); }
};

/// Canonical representative of an isomorphism class: the lexicographically
/// minimal upper-triangle bitstring over all relabelings, read column by
/// column in graph6 bit order. Equal codes <=> isomorphic graphs.
struct CanonicalCode {
  int n = 0;
  uint64_t bits = 0;

  auto operator<=>(const CanonicalCode&) const = default;
};

Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

Graph complement(const Graph& g);
/// Induced subgraph on the 0-based vertex set, vertices renamed to
/// 0..k-1 preserving ascending order.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertex_set);
bool is_connected(const Graph& g);
int clique_number(const Graph& g);
/// Edge (u,v) in input <=> (label_of[u], label_of[v]) in output.
Graph relabel(const Graph& g, const Labeling& lab);
/// Brute-force canonical form; n <= 9.
CanonicalCode canonical_code(const Graph& g);
/// Rebuilds the canonical representative graph from its code.
Graph graph_from_code(const CanonicalCode& code);

// Named constructions used across the library and tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
/// K_{1,3}.
Graph claw_graph();
/// The 7-vertex tree obtained by subdividing each edge of the claw once:
/// center 1 adjacent to 2,3,4; arm tips 5,6,7 hang off 2,3,4.
Graph bigclaw_graph();

/// Parses "u-v,u-v,..." with 1-based vertices; n defaults to the largest
/// vertex mentioned unless forced.
Graph parse_edge_list(const std::string& text, int forced_n = 0);
std::string to_edge_list(const Graph& g);

}  // namespace wc
