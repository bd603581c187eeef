#include "wc/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace wc {

namespace {

void check_n(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "vertex count must be at least 1");
  if (n > Graph::kMaxVertices)
    throw Error(ErrorCode::NTooLarge,
                "vertex count " + std::to_string(n) + " exceeds the supported maximum of 16");
}

}  // namespace

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> shifted;
  shifted.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") leaves 1.." +
                      std::to_string(n));
    shifted.emplace_back(u - 1, v - 1);
  }
  return from_edges0(n, shifted);
}

Graph Graph::from_edges0(int n, const std::vector<std::pair<int, int>>& edges) {
  check_n(n);
  Graph g;
  g.n_ = n;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") leaves 1.." +
                      std::to_string(n));
    if (u == v)
      throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u + 1));
    g.adj_[u] |= uint16_t(1u << v);
    g.adj_[v] |= uint16_t(1u << u);
  }
  return g;
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += std::popcount(adj_[v]);
  return total / 2;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Labeling Labeling::identity(int n) {
  Labeling lab;
  lab.label_of.resize(n);
  std::iota(lab.label_of.begin(), lab.label_of.end(), 0);
  return lab;
}

Labeling Labeling::inverse() const {
  Labeling inv;
  inv.label_of.assign(label_of.size(), 0);
  for (size_t v = 0; v < label_of.size(); ++v) inv.label_of[label_of[v]] = static_cast<int>(v);
  return inv;
}

bool Labeling::is_valid() const {
  std::vector<bool> seen(label_of.size(), false);
  for (int l : label_of) {
    if (l < 0 || l >= size() || seen[l]) return false;
    seen[l] = true;
  }
  return true;
}

Graph parse_graph6(const std::string& text) {
  if (text.empty()) throw Error(ErrorCode::MalformedGraph6, "empty graph6 string");
  int n = text[0] - 63;
  if (n < 1 || n > 62)
    throw Error(ErrorCode::MalformedGraph6, "unsupported graph6 size byte");
  if (n > Graph::kMaxVertices)
    throw Error(ErrorCode::NTooLarge, "graph6 input has " + std::to_string(n) + " > 16 vertices");
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  if (static_cast<int>(text.size()) != 1 + nbytes)
    throw Error(ErrorCode::MalformedGraph6, "graph6 body has wrong length");
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      int c = text[1 + bit / 6] - 63;
      if (c < 0 || c > 63) throw Error(ErrorCode::MalformedGraph6, "byte out of range");
      if ((c >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  // trailing pad bits must be zero
  for (int b = nbits; b < nbytes * 6; ++b) {
    int c = text[1 + b / 6] - 63;
    if ((c >> (5 - b % 6)) & 1)
      throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
  }
  return Graph::from_edges0(n, edges);
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  int nbits = n * (n - 1) / 2;
  int nbytes = (nbits + 5) / 6;
  std::string out(1 + nbytes, char(63));
  out[0] = char(63 + n);
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  int n = g.vertex_count();
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph::from_edges0(n, edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertex_set) {
  if (vertex_set.empty()) throw Error(ErrorCode::EmptySet, "induced subgraph on empty vertex set");
  std::vector<int> vs = vertex_set;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs)
    if (v < 0 || v >= g.vertex_count())
      throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v + 1) + " out of range");
  std::vector<std::pair<int, int>> edges;
  for (size_t a = 0; a < vs.size(); ++a)
    for (size_t b = a + 1; b < vs.size(); ++b)
      if (g.has_edge(vs[a], vs[b])) edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return Graph::from_edges0(static_cast<int>(vs.size()), edges);
}

bool is_connected(const Graph& g) {
  int n = g.vertex_count();
  if (n == 0) return false;
  uint32_t seen = 1;
  uint32_t frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= g.neighbors(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1u;
}

namespace {

// Max clique over the candidate set, branch and bound.
int max_clique_rec(const Graph& g, uint32_t candidates, int size) {
  int best = size;
  while (candidates) {
    if (size + std::popcount(candidates) <= best) break;
    int v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    int sub = max_clique_rec(g, candidates & g.neighbors(v), size + 1);
    best = std::max(best, sub);
  }
  return best;
}

}  // namespace

int clique_number(const Graph& g) {
  uint32_t all = (1u << g.vertex_count()) - 1u;
  return max_clique_rec(g, all, 0);
}

Graph relabel(const Graph& g, const Labeling& lab) {
  if (lab.size() != g.vertex_count())
    throw Error(ErrorCode::SizeMismatch, "labeling size differs from vertex count");
  if (!lab.is_valid()) throw Error(ErrorCode::InvalidInput, "labeling is not a permutation");
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(lab.label_of[u], lab.label_of[v]);
  return Graph::from_edges0(g.vertex_count(), edges);
}

CanonicalCode canonical_code(const Graph& g) {
  int n = g.vertex_count();
  if (n > 9) throw Error(ErrorCode::NTooLarge, "canonical form supported for n <= 9 only");

  // Minimizes the column-order upper-triangle bitstring over all vertex
  // arrangements. Placing a vertex at position j contributes the j adjacency
  // bits against positions 0..j-1, earlier positions in higher bits; the code
  // is the concatenation of those chunks. DFS with prefix pruning: best[j]
  // holds the chunk of the smallest complete assignment seen so far, and a
  // strictly smaller chunk at some level invalidates every deeper best chunk.
  std::vector<uint32_t> best(n, 0xFFFFFFFFu);
  std::vector<int> perm(n, -1);
  uint32_t used = 0;

  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos == n) return;
    for (int v = 0; v < n; ++v) {
      if ((used >> v) & 1) continue;
      uint32_t bits = 0;
      for (int i = 0; i < pos; ++i) bits = (bits << 1) | (g.has_edge(perm[i], v) ? 1u : 0u);
      if (bits > best[pos]) continue;
      if (bits < best[pos]) {
        best[pos] = bits;
        for (int k = pos + 1; k < n; ++k) best[k] = 0xFFFFFFFFu;
      }
      perm[pos] = v;
      used |= 1u << v;
      self(self, pos + 1);
      used &= ~(1u << v);
    }
  };
  dfs(dfs, 0);

  CanonicalCode code;
  code.n = n;
  for (int j = 1; j < n; ++j) code.bits = (code.bits << j) | best[j];
  return code;
}

Graph graph_from_code(const CanonicalCode& code) {
  int n = code.n;
  std::vector<std::pair<int, int>> edges;
  int total_bits = n * (n - 1) / 2;
  int shift = total_bits;
  for (int j = 1; j < n; ++j) {
    shift -= j;
    uint32_t chunk = (code.bits >> shift) & ((1u << j) - 1u);
    for (int i = 0; i < j; ++i)
      if ((chunk >> (j - 1 - i)) & 1) edges.emplace_back(i, j);
  }
  return Graph::from_edges0(n, edges);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges0(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges0(n, edges);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges0(n, edges);
}

Graph claw_graph() { return Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}); }

Graph bigclaw_graph() {
  return Graph::from_edges(7, {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 7}});
}

Graph parse_edge_list(const std::string& text, int forced_n) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw Error(ErrorCode::InvalidInput, "edge '" + item + "' is not of the form u-v");
    try {
      int u = std::stoi(item.substr(0, dash));
      int v = std::stoi(item.substr(dash + 1));
      edges.emplace_back(u, v);
      max_vertex = std::max({max_vertex, u, v});
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "edge '" + item + "' is not of the form u-v");
    }
  }
  int n = forced_n > 0 ? forced_n : max_vertex;
  if (n == 0) throw Error(ErrorCode::InvalidInput, "no edges and no explicit vertex count");
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return out;
}

}  // namespace wc
