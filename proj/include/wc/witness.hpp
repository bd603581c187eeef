#pragma once

#include <optional>
#include <vector>

#include "wc/graph.hpp"

namespace wc {

/// Arrangement (a_1,...,a_n) of the values 0..n-1, each exactly once.
struct VertexSequence {
  std::vector<int> entries;

  static VertexSequence identity(int n);
  bool is_valid() const;
  int size() const { return static_cast<int>(entries.size()); }
  bool operator==(const VertexSequence&) const = default;
};

/// One interchange: the entries at positions pos, pos+1 (0-based) are
/// swapped; a is the value on the left and b the value on the right
/// before the swap. {a,b} must be an edge of the underlying graph.
struct InterchangeStep {
  int pos;
  int a;
  int b;

  bool operator==(const InterchangeStep&) const = default;
};

/// Replayable certificate: applying the swaps to start in order yields a
/// sequence in which the target pair sits in consecutive positions.
struct InterchangeSequence {
  VertexSequence start;
  std::vector<InterchangeStep> swaps;
};

/// Whether the target pair may appear in either order (default) or
/// strictly as (smaller, larger) in consecutive positions.
enum class AdjacencyMode { Unordered, Strict };

/// Swaps the entries at pos, pos+1 if their values are adjacent in g.
VertexSequence apply_interchange(const VertexSequence& seq, const Graph& g, int pos);

/// Replays a certificate, validating every step; returns the final sequence.
VertexSequence replay(const InterchangeSequence& cert, const Graph& g);

/// True when the certificate is legal and ends with i,j consecutive.
bool certificate_proves(const InterchangeSequence& cert, const Graph& g, int i, int j,
                        AdjacencyMode mode = AdjacencyMode::Unordered);

/// Symmetric matrix of pairs that can be made consecutive starting from the
/// identity sequence; entry [a][b] is meaningful for a != b. In Strict mode
/// entry [a][b] means "a immediately before b".
std::vector<std::vector<bool>> adjacentable_pairs(const Graph& g,
                                                  AdjacencyMode mode = AdjacencyMode::Unordered);

bool is_adjacentable(const Graph& g, int i, int j,
                     AdjacencyMode mode = AdjacencyMode::Unordered);

std::optional<InterchangeSequence> adjacentability_certificate(
    const Graph& g, int i, int j, AdjacencyMode mode = AdjacencyMode::Unordered);

/// Deterministic certificate construction for an edge {i,j} whose labeling
/// satisfies: for all i < k < j, {i,k} or {k,j} is an edge. First walks every
/// in-between neighbor of j rightward past j (largest first), then walks the
/// remaining in-between vertices leftward past i (smallest first). Throws
/// PreconditionViolated when the labeling does not support the construction.
InterchangeSequence constructive_certificate(const Graph& g, int i, int j);

bool all_edges_adjacentable(const Graph& g, AdjacencyMode mode = AdjacencyMode::Unordered);

/// Exhaustive search over labelings for one under which every edge is
/// adjacentable. n <= 8.
std::pair<bool, std::optional<Labeling>> is_weakly_closed_by_definition(
    const Graph& g, AdjacencyMode mode = AdjacencyMode::Unordered);

/// Number of sequences reachable from the identity by legal interchanges.
size_t reachable_sequence_count(const Graph& g);

}  // namespace wc
