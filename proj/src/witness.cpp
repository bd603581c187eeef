#include "wc/witness.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <numeric>

namespace wc {

namespace {

constexpr int kMaxBfsVertices = 10;

uint32_t factorial(int n) {
  uint32_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<uint32_t>(i);
  return f;
}

using Perm = std::array<int8_t, kMaxBfsVertices>;

uint32_t rank_perm(const Perm& p, int n) {
  uint32_t r = 0;
  for (int i = 0; i < n; ++i) {
    uint32_t smaller_right = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[j] < p[i]) ++smaller_right;
    r = r * static_cast<uint32_t>(n - i) + smaller_right;
  }
  return r;
}

void check_bfs_size(const Graph& g) {
  if (g.vertex_count() > kMaxBfsVertices)
    throw Error(ErrorCode::NTooLarge, "interchange search supported for n <= 10 only");
}

void require_edge(const Graph& g, int i, int j) {
  if (i == j || i < 0 || j < 0 || i >= g.vertex_count() || j >= g.vertex_count() ||
      !g.has_edge(i, j))
    throw Error(ErrorCode::NotAnEdge,
                "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "} is not an edge");
}

struct BfsState {
  std::vector<uint32_t> parent;
  std::vector<int8_t> parent_swap;
};

}  // namespace

VertexSequence VertexSequence::identity(int n) {
  VertexSequence s;
  s.entries.resize(n);
  std::iota(s.entries.begin(), s.entries.end(), 0);
  return s;
}

bool VertexSequence::is_valid() const {
  std::vector<bool> seen(entries.size(), false);
  for (int e : entries) {
    if (e < 0 || e >= size() || seen[e]) return false;
    seen[e] = true;
  }
  return true;
}

VertexSequence apply_interchange(const VertexSequence& seq, const Graph& g, int pos) {
  if (pos < 0 || pos + 1 >= seq.size())
    throw Error(ErrorCode::PositionOutOfRange, "interchange position " + std::to_string(pos + 1) +
                                                   " out of range");
  int a = seq.entries[pos];
  int b = seq.entries[pos + 1];
  if (!g.has_edge(a, b))
    throw Error(ErrorCode::IllegalInterchange, "values " + std::to_string(a + 1) + "," +
                                                   std::to_string(b + 1) +
                                                   " are not adjacent in the graph");
  VertexSequence out = seq;
  std::swap(out.entries[pos], out.entries[pos + 1]);
  return out;
}

VertexSequence replay(const InterchangeSequence& cert, const Graph& g) {
  if (!cert.start.is_valid() || cert.start.size() != g.vertex_count())
    throw Error(ErrorCode::InvalidInput, "certificate start is not an arrangement of 1..n");
  VertexSequence seq = cert.start;
  for (const auto& step : cert.swaps) {
    if (step.pos < 0 || step.pos + 1 >= seq.size())
      throw Error(ErrorCode::PositionOutOfRange, "recorded swap position out of range");
    if (seq.entries[step.pos] != step.a || seq.entries[step.pos + 1] != step.b)
      throw Error(ErrorCode::IllegalInterchange, "recorded value pair does not match the sequence");
    seq = apply_interchange(seq, g, step.pos);
  }
  return seq;
}

bool certificate_proves(const InterchangeSequence& cert, const Graph& g, int i, int j,
                        AdjacencyMode mode) {
  VertexSequence fin;
  try {
    fin = replay(cert, g);
  } catch (const Error&) {
    return false;
  }
  for (int t = 0; t + 1 < fin.size(); ++t) {
    int a = fin.entries[t], b = fin.entries[t + 1];
    if (a == i && b == j) return true;
    if (mode == AdjacencyMode::Unordered && a == j && b == i) return true;
  }
  return false;
}

namespace {

// Core BFS over sequences reachable from the identity. Visits every state,
// calling on_state(perm, rank) for each; stops early if on_state returns
// true. Parent bookkeeping is filled only when `track` is non-null.
template <typename OnState>
bool bfs_sequences(const Graph& g, BfsState* track, OnState&& on_state) {
  int n = g.vertex_count();
  uint32_t total = factorial(n);
  std::vector<uint8_t> visited(total, 0);
  if (track) {
    track->parent.assign(total, 0);
    track->parent_swap.assign(total, -1);
  }
  std::deque<std::pair<Perm, uint32_t>> queue;
  Perm start{};
  for (int i = 0; i < n; ++i) start[i] = static_cast<int8_t>(i);
  uint32_t r0 = rank_perm(start, n);
  visited[r0] = 1;
  if (on_state(start, r0)) return true;
  queue.emplace_back(start, r0);
  while (!queue.empty()) {
    auto [cur, cur_rank] = queue.front();
    queue.pop_front();
    for (int t = 0; t + 1 < n; ++t) {
      if (!g.has_edge(cur[t], cur[t + 1])) continue;
      Perm next = cur;
      std::swap(next[t], next[t + 1]);
      uint32_t r = rank_perm(next, n);
      if (visited[r]) continue;
      visited[r] = 1;
      if (track) {
        track->parent[r] = cur_rank;
        track->parent_swap[r] = static_cast<int8_t>(t);
      }
      if (on_state(next, r)) return true;
      queue.emplace_back(next, r);
    }
  }
  return false;
}

}  // namespace

std::vector<std::vector<bool>> adjacentable_pairs(const Graph& g, AdjacencyMode mode) {
  check_bfs_size(g);
  int n = g.vertex_count();
  std::vector<std::vector<bool>> pairs(n, std::vector<bool>(n, false));
  bfs_sequences(g, nullptr, [&](const Perm& p, uint32_t) {
    for (int t = 0; t + 1 < n; ++t) {
      pairs[p[t]][p[t + 1]] = true;
      if (mode == AdjacencyMode::Unordered) pairs[p[t + 1]][p[t]] = true;
    }
    return false;
  });
  return pairs;
}

bool is_adjacentable(const Graph& g, int i, int j, AdjacencyMode mode) {
  check_bfs_size(g);
  require_edge(g, i, j);
  int n = g.vertex_count();
  return bfs_sequences(g, nullptr, [&](const Perm& p, uint32_t) {
    for (int t = 0; t + 1 < n; ++t) {
      if (p[t] == i && p[t + 1] == j) return true;
      if (mode == AdjacencyMode::Unordered && p[t] == j && p[t + 1] == i) return true;
    }
    return false;
  });
}

std::optional<InterchangeSequence> adjacentability_certificate(const Graph& g, int i, int j,
                                                               AdjacencyMode mode) {
  check_bfs_size(g);
  require_edge(g, i, j);
  int n = g.vertex_count();
  BfsState state;
  Perm goal{};
  bool found = bfs_sequences(g, &state, [&](const Perm& p, uint32_t) {
    for (int t = 0; t + 1 < n; ++t) {
      bool hit = (p[t] == i && p[t + 1] == j) ||
                 (mode == AdjacencyMode::Unordered && p[t] == j && p[t + 1] == i);
      if (hit) {
        goal = p;
        return true;
      }
    }
    return false;
  });
  if (!found) return std::nullopt;

  // Walk parent links back to the identity, then replay forward.
  std::vector<int> swap_positions;
  Perm cur = goal;
  uint32_t cur_rank = rank_perm(cur, n);
  Perm identity{};
  for (int t = 0; t < n; ++t) identity[t] = static_cast<int8_t>(t);
  uint32_t id_rank = rank_perm(identity, n);
  while (cur_rank != id_rank) {
    int t = state.parent_swap[cur_rank];
    swap_positions.push_back(t);
    std::swap(cur[t], cur[t + 1]);  // undo the swap to get the parent
    cur_rank = state.parent[cur_rank];
  }
  std::reverse(swap_positions.begin(), swap_positions.end());

  InterchangeSequence cert;
  cert.start = VertexSequence::identity(n);
  VertexSequence seq = cert.start;
  for (int pos : swap_positions) {
    cert.swaps.push_back({pos, seq.entries[pos], seq.entries[pos + 1]});
    seq = apply_interchange(seq, g, pos);
  }
  return cert;
}

InterchangeSequence constructive_certificate(const Graph& g, int i, int j) {
  require_edge(g, i, j);
  if (i > j) std::swap(i, j);
  for (int k = i + 1; k < j; ++k)
    if (!g.has_edge(i, k) && !g.has_edge(k, j))
      throw Error(ErrorCode::PreconditionViolated,
                  "labeling violates the order condition for edge {" + std::to_string(i + 1) +
                      "," + std::to_string(j + 1) + "} at " + std::to_string(k + 1));

  int n = g.vertex_count();
  InterchangeSequence cert;
  cert.start = VertexSequence::identity(n);
  VertexSequence seq = cert.start;
  std::vector<int> pos_of(n);
  std::iota(pos_of.begin(), pos_of.end(), 0);

  auto swap_values = [&](int a, int b) {
    int pa = pos_of[a], pb = pos_of[b];
    if (pa > pb) {
      std::swap(a, b);
      std::swap(pa, pb);
    }
    if (pb != pa + 1)
      throw Error(ErrorCode::PreconditionViolated,
                  "construction requires " + std::to_string(a + 1) + " and " +
                      std::to_string(b + 1) + " to sit in consecutive positions; the labeling "
                      "does not satisfy the order condition for every edge involved");
    if (!g.has_edge(a, b))
      throw Error(ErrorCode::IllegalInterchange, "values " + std::to_string(a + 1) + "," +
                                                     std::to_string(b + 1) + " not adjacent");
    cert.swaps.push_back({pa, a, b});
    std::swap(seq.entries[pa], seq.entries[pb]);
    pos_of[a] = pb;
    pos_of[b] = pa;
  };

  // Pass 1: in-between neighbors of j, largest first; each walks rightward
  // over every remaining value up to and past j.
  std::vector<int> a_set;
  for (int k = i + 1; k < j; ++k)
    if (g.has_edge(k, j)) a_set.push_back(k);
  std::vector<bool> parked(n, false);
  while (!a_set.empty()) {
    int s = a_set.back();
    a_set.pop_back();
    std::vector<int> b_set;
    for (int t = s + 1; t <= j; ++t)
      if (g.has_edge(s, t) && !parked[t]) b_set.push_back(t);
    for (int t : b_set) swap_values(s, t);
    parked[s] = true;
  }

  // Pass 2: the remaining in-between vertices, smallest first; each walks
  // leftward past i. Vertices already parked past j are skipped - the text's
  // listing would include them, but they can never sit next to u here.
  std::vector<bool> done(n, false);
  for (int u = i + 1; u < j; ++u) {
    if (parked[u]) continue;
    if (!g.has_edge(i, u) || g.has_edge(u, j))
      throw Error(ErrorCode::PreconditionViolated, "unexpected in-between vertex " +
                                                       std::to_string(u + 1));
    std::vector<int> v_set;
    for (int v = i; v < u; ++v)
      if (g.has_edge(v, u) && !done[v] && !parked[v]) v_set.push_back(v);
    if (v_set.empty() || v_set.front() != i)
      throw Error(ErrorCode::PreconditionViolated,
                  "construction stalled at vertex " + std::to_string(u + 1));
    for (int v : v_set) swap_values(v, u);
    done[u] = true;
  }

  if (std::abs(pos_of[i] - pos_of[j]) != 1)
    throw Error(ErrorCode::PreconditionViolated, "construction did not reach a consecutive pair");
  return cert;
}

bool all_edges_adjacentable(const Graph& g, AdjacencyMode mode) {
  check_bfs_size(g);
  int n = g.vertex_count();
  auto edges = g.edges();
  // pending[u][v] for u < v: edge not yet seen in consecutive positions.
  // Strict mode only accepts the smaller value immediately before the larger.
  std::vector<std::vector<bool>> pending(n, std::vector<bool>(n, false));
  int remaining = static_cast<int>(edges.size());
  for (auto [u, v] : edges) pending[u][v] = true;
  bfs_sequences(g, nullptr, [&](const Perm& p, uint32_t) {
    for (int t = 0; t + 1 < n; ++t) {
      int a = p[t], b = p[t + 1];
      if (mode == AdjacencyMode::Unordered && a > b) std::swap(a, b);
      if (a < b && pending[a][b]) {
        pending[a][b] = false;
        --remaining;
      }
    }
    return remaining == 0;
  });
  return remaining == 0;
}

std::pair<bool, std::optional<Labeling>> is_weakly_closed_by_definition(const Graph& g,
                                                                        AdjacencyMode mode) {
  int n = g.vertex_count();
  if (n > 8)
    throw Error(ErrorCode::NTooLarge, "definitional weak-closedness search supported for n <= 8");
  Labeling lab = Labeling::identity(n);
  do {
    if (all_edges_adjacentable(relabel(g, lab), mode)) return {true, lab};
  } while (std::next_permutation(lab.label_of.begin(), lab.label_of.end()));
  return {false, std::nullopt};
}

size_t reachable_sequence_count(const Graph& g) {
  check_bfs_size(g);
  size_t count = 0;
  bfs_sequences(g, nullptr, [&](const Perm&, uint32_t) {
    ++count;
    return false;
  });
  return count;
}

}  // namespace wc
