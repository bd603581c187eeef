#include "wc/classify.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace wc {

namespace {

// Shared backtracking search for a labeling satisfying the between-vertex
// condition. pos_of[l] is the vertex carrying label l. When vertex v takes
// the largest label m, the freshly completed triples are exactly those with
// j = m; a partial labeling dies as soon as one of them fails.
template <bool RequireBoth>
bool labeling_search(const Graph& g, std::vector<int>& pos_of, uint32_t& used, int m) {
  int n = g.vertex_count();
  if (m == n) return true;
  for (int v = 0; v < n; ++v) {
    if ((used >> v) & 1) continue;
    bool ok = true;
    for (int i = 0; ok && i + 1 < m; ++i) {
      if (!g.has_edge(pos_of[i], v)) continue;
      for (int k = i + 1; k < m; ++k) {
        bool left = g.has_edge(pos_of[i], pos_of[k]);
        bool right = g.has_edge(pos_of[k], v);
        if (RequireBoth ? !(left && right) : !(left || right)) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    pos_of[m] = v;
    used |= 1u << v;
    if (labeling_search<RequireBoth>(g, pos_of, used, m + 1)) return true;
    used &= ~(1u << v);
  }
  return false;
}

template <bool RequireBoth>
std::pair<bool, std::optional<Labeling>> search_labeling(const Graph& g) {
  int n = g.vertex_count();
  if (n > 10) throw Error(ErrorCode::NTooLarge, "labeling search supported for n <= 10 only");
  std::vector<int> pos_of(n, -1);
  uint32_t used = 0;
  if (!labeling_search<RequireBoth>(g, pos_of, used, 0)) return {false, std::nullopt};
  Labeling lab;
  lab.label_of.assign(n, -1);
  for (int l = 0; l < n; ++l) lab.label_of[pos_of[l]] = l;
  return {true, lab};
}

}  // namespace

bool wc_condition_holds(const Graph& g) {
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (!g.has_edge(i, j)) continue;
      for (int k = i + 1; k < j; ++k)
        if (!g.has_edge(i, k) && !g.has_edge(k, j)) return false;
    }
  return true;
}

bool closed_condition_holds(const Graph& g) {
  int n = g.vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (!g.has_edge(i, j)) continue;
      for (int k = i + 1; k < j; ++k)
        if (!g.has_edge(i, k) || !g.has_edge(k, j)) return false;
    }
  return true;
}

std::pair<bool, std::optional<Labeling>> is_weakly_closed(const Graph& g) {
  return search_labeling<false>(g);
}

std::pair<bool, std::optional<Labeling>> is_closed(const Graph& g) {
  return search_labeling<true>(g);
}

std::pair<bool, std::optional<std::vector<std::vector<int>>>> is_complete_multipartite(
    const Graph& g) {
  Graph co = complement(g);
  int n = co.vertex_count();
  std::vector<std::vector<int>> parts;
  uint32_t assigned = 0;
  for (int v = 0; v < n; ++v) {
    if ((assigned >> v) & 1) continue;
    // component of v in the complement
    uint32_t comp = 1u << v;
    uint32_t frontier = comp;
    while (frontier) {
      uint32_t next = 0;
      for (int u = 0; u < n; ++u)
        if ((frontier >> u) & 1) next |= co.neighbors(u);
      frontier = next & ~comp;
      comp |= next;
    }
    // the component must be a clique in the complement
    for (int u = 0; u < n; ++u)
      if ((comp >> u) & 1)
        if ((co.neighbors(u) & comp) != (comp & ~(1u << u)))
          return {false, std::nullopt};
    std::vector<int> part;
    for (int u = 0; u < n; ++u)
      if ((comp >> u) & 1) part.push_back(u);
    parts.push_back(std::move(part));
    assigned |= comp;
  }
  return {true, parts};
}

std::pair<bool, std::optional<std::vector<int>>> is_chordal(const Graph& g) {
  int n = g.vertex_count();
  std::vector<uint16_t> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);
  uint32_t alive = (1u << n) - 1u;
  std::vector<int> order;
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v) {
      if (!((alive >> v) & 1)) continue;
      uint16_t nb = adj[v] & alive;
      bool simplicial = true;
      for (int u = 0; simplicial && u < n; ++u)
        if ((nb >> u) & 1)
          if ((adj[u] & nb) != (nb & ~(1u << u))) simplicial = false;
      if (simplicial) pick = v;
    }
    if (pick < 0) return {false, std::nullopt};
    order.push_back(pick);
    alive &= ~(1u << pick);
  }
  return {true, order};
}

namespace {

// DFS over induced paths rooted at the smallest cycle vertex. A candidate
// adjacent to the root closes a cycle and may not be extended past (the
// root edge would become a chord); interior_adj masks vertices adjacent to
// some interior path vertex. Reversed traversals are killed by requiring
// the second cycle vertex below the closing one. `parity` of -1 accepts any
// length, 1 requires odd cycles.
bool induced_cycle_search(const Graph& g, int min_len, int parity) {
  int n = g.vertex_count();
  std::vector<int> path;
  path.reserve(n);

  auto dfs = [&](auto&& self, int root, uint32_t on_path, uint32_t interior_adj) -> bool {
    int last = path.back();
    for (int w = root + 1; w < n; ++w) {
      if ((on_path >> w) & 1) continue;
      if (!g.has_edge(last, w)) continue;
      if ((interior_adj >> w) & 1) continue;
      if (path.size() >= 2 && g.has_edge(root, w)) {
        int cycle_len = static_cast<int>(path.size()) + 1;
        if (cycle_len >= min_len && (parity < 0 || (cycle_len & 1) == parity) && path[1] < w)
          return true;
        continue;
      }
      path.push_back(w);
      uint32_t next_adj = interior_adj;
      if (path.size() >= 3) next_adj |= g.neighbors(last);  // last becomes interior
      if (self(self, root, on_path | (1u << w), next_adj)) return true;
      path.pop_back();
    }
    return false;
  };

  for (int root = 0; root < n; ++root) {
    path.assign(1, root);
    if (dfs(dfs, root, 1u << root, 0)) return true;
  }
  return false;
}

}  // namespace

bool has_chordless_cycle_at_least(const Graph& g, int k) {
  if (k < 4) throw Error(ErrorCode::InvalidInput, "minimum cycle length must be at least 4");
  return induced_cycle_search(g, k, -1);
}

bool has_induced_odd_hole(const Graph& g) { return induced_cycle_search(g, 5, 1); }

bool is_perfect(const Graph& g) {
  return !has_induced_odd_hole(g) && !has_induced_odd_hole(complement(g));
}

bool is_tree(const Graph& g) {
  return is_connected(g) && g.edge_count() == g.vertex_count() - 1;
}

bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  std::vector<int> spine;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) > 1) spine.push_back(v);
  if (spine.size() <= 1) return true;
  Graph rest = induced_subgraph(g, spine);
  if (!is_connected(rest)) return false;
  for (int v = 0; v < rest.vertex_count(); ++v)
    if (rest.degree(v) > 2) return false;
  return true;
}

namespace {

bool induced_iso_dfs(const Graph& g, const Graph& pattern, std::vector<int>& map,
                     uint32_t used, int next) {
  if (next == pattern.vertex_count()) return true;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if ((used >> v) & 1) continue;
    bool ok = true;
    for (int prev = 0; ok && prev < next; ++prev)
      if (pattern.has_edge(prev, next) != g.has_edge(map[prev], v)) ok = false;
    if (!ok) continue;
    map[next] = v;
    if (induced_iso_dfs(g, pattern, map, used | (1u << v), next + 1)) return true;
  }
  return false;
}

}  // namespace

bool contains_induced(const Graph& g, const Graph& pattern) {
  if (pattern.vertex_count() > g.vertex_count())
    throw Error(ErrorCode::InvalidInput, "pattern larger than host graph");
  std::vector<int> map(pattern.vertex_count(), -1);
  return induced_iso_dfs(g, pattern, map, 0, 0);
}

}  // namespace wc
