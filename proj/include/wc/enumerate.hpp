#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wc/classify.hpp"
#include "wc/graph.hpp"
#include "wc/groebner.hpp"

namespace wc {

/// Per-graph bundle of every predicate result plus certificates.
struct ClassificationRecord {
  std::string graph6;
  int n = 0;
  int edge_count = 0;
  bool weakly_closed = false;
  bool closed = false;
  bool complete_multipartite = false;
  bool chordal = false;
  bool perfect = false;
  bool tree = false;
  bool caterpillar = false;
  std::optional<Labeling> wc_labeling;
  std::optional<Labeling> closed_labeling;
  std::optional<std::vector<std::vector<int>>> partition;
  std::optional<std::vector<int>> elimination_order;
  std::optional<int> fpure_p;
  std::optional<bool> fpure;
  std::optional<std::string> fpure_witness;
};

struct SummaryCounts {
  int total = 0;
  int weakly_closed = 0;
  int closed = 0;
  int complete_multipartite = 0;
  int chordal = 0;
  int perfect = 0;
  int tree = 0;
  int caterpillar = 0;
  int chordal_not_weakly_closed = 0;
  int fpure_true = 0;
  int fpure_known = 0;
};

/// One canonical representative per isomorphism class of connected simple
/// graphs on n vertices, sorted by (edge count, canonical code). n <= 7.
std::vector<Graph> enumerate_connected(int n);

/// One canonical representative per isomorphism class of trees on n
/// vertices, same ordering. n <= 9.
std::vector<Graph> enumerate_trees(int n);

struct ClassifyOptions {
  bool with_fpure = false;
  int p = 2;
  int jobs = 1;
  /// Lifts the default F-purity size envelope.
  bool slow = false;
  Budget budget{};
};

ClassificationRecord classify_graph(const Graph& g, const ClassifyOptions& opts = {});

/// Classifies every connected graph on n vertices. n <= 7; with_fpure needs
/// the envelope (n <= 5 at p = 2) unless opts.slow.
std::vector<ClassificationRecord> classify_all(int n, const ClassifyOptions& opts = {});

SummaryCounts summarize(const std::vector<ClassificationRecord>& records);

std::string record_to_json(const ClassificationRecord& rec);
std::string records_to_csv(const std::vector<ClassificationRecord>& records);
std::string records_to_jsonl(const std::vector<ClassificationRecord>& records);
std::string records_to_markdown(const std::vector<ClassificationRecord>& records);
std::string summary_to_text(const SummaryCounts& counts);

}  // namespace wc
