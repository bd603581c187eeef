#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "wc/graph.hpp"

namespace wc::testsupport {

/// The 4-cycle worked through in the interchange examples: edges
/// 12, 23, 34, 14.
inline Graph example_c4() { return Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }

/// The 6-vertex weakly closed example graph with its printed labeling.
inline Graph example_wc6() {
  return Graph::from_edges(6, {{3, 6}, {5, 6}, {4, 5}, {2, 3}, {1, 2}, {1, 4}, {3, 4}});
}

/// The two 6-vertex graphs that are chordal but not weakly closed.
inline Graph chordal_not_wc_a() {
  return Graph::from_edges(
      6, {{1, 2}, {1, 3}, {1, 4}, {4, 5}, {2, 3}, {2, 6}, {5, 6}, {1, 5}, {2, 5}});
}
inline Graph chordal_not_wc_b() {
  return Graph::from_edges(6, {{1, 2}, {1, 3}, {4, 5}, {2, 6}, {1, 5}, {2, 5}});
}

/// Brute-force automorphism count; n <= 8.
inline long automorphism_count(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (int u = 0; ok && u < n; ++u)
      for (int v = u + 1; ok && v < n; ++v)
        if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

/// Number of labeled connected graphs on n vertices by direct enumeration.
inline long count_labeled_connected(int n) {
  int num_pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_of_bit;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pair_of_bit.emplace_back(i, j);
  long count = 0;
  for (uint32_t mask = 0; mask < (1u << num_pairs); ++mask) {
    std::vector<std::pair<int, int>> edges;
    for (int b = 0; b < num_pairs; ++b)
      if ((mask >> b) & 1) edges.push_back(pair_of_bit[b]);
    if (is_connected(Graph::from_edges0(n, edges))) ++count;
  }
  return count;
}

/// Reference canonical form: minimum over every permutation, no pruning.
inline uint64_t canonical_bits_naive(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  uint64_t best = ~0ull;
  do {
    uint64_t bits = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.has_edge(perm[i], perm[j]) ? 1u : 0u);
    best = std::min(best, bits);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Closedness straight from the original definition: some labeling under
/// which, for edges {i,j}, {k,l} with i<j, k<l, i=k, j!=l implies {j,l} is
/// an edge, and j=l, i!=k implies {i,k} is.
inline bool closed_by_original_definition(const Graph& g) {
  int n = g.vertex_count();
  Labeling lab = Labeling::identity(n);
  do {
    Graph h = relabel(g, lab);
    auto edges = h.edges();
    bool ok = true;
    for (size_t a = 0; ok && a < edges.size(); ++a)
      for (size_t b = 0; ok && b < edges.size(); ++b) {
        auto [i, j] = edges[a];
        auto [k, l] = edges[b];
        if (i == k && j != l && !h.has_edge(j, l)) ok = false;
        if (j == l && i != k && !h.has_edge(i, k)) ok = false;
      }
    if (ok) return true;
  } while (std::next_permutation(lab.label_of.begin(), lab.label_of.end()));
  return false;
}

inline Graph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_prob);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edges0(n, edges);
}

inline Labeling random_labeling(int n, std::mt19937_64& rng) {
  Labeling lab = Labeling::identity(n);
  std::shuffle(lab.label_of.begin(), lab.label_of.end(), rng);
  return lab;
}

}  // namespace wc::testsupport
