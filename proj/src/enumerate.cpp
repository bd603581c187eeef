#include "wc/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include "wc/fedder.hpp"

#include "json.hpp"

namespace wc {

namespace {

// Connectivity straight off adjacency rows, avoiding Graph construction for
// the rejected masks.
bool rows_connected(const std::array<uint16_t, Graph::kMaxVertices>& adj, int n) {
  uint32_t seen = 1, frontier = 1;
  while (frontier) {
    uint32_t next = 0;
    for (int v = 0; v < n; ++v)
      if ((frontier >> v) & 1) next |= adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (1u << n) - 1u;
}

std::vector<Graph> sorted_class_reps(const std::set<uint64_t>& codes, int n) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  std::vector<std::pair<std::pair<int, uint64_t>, Graph>> keyed;
  for (uint64_t bits : codes) {
    CanonicalCode code{n, bits};
    Graph g = graph_from_code(code);
    keyed.push_back({{g.edge_count(), bits}, g});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, g] : keyed) out.push_back(std::move(g));
  return out;
}

}  // namespace

std::vector<Graph> enumerate_connected(int n) {
  if (n < 1 || n > 7)
    throw Error(ErrorCode::NTooLarge, "connected enumeration supported for 1 <= n <= 7");
  int num_pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_of_bit(num_pairs);
  {
    int b = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pair_of_bit[b++] = {i, j};
  }
  std::set<uint64_t> codes;
  std::vector<std::pair<int, int>> edges;
  for (uint32_t mask = 0; mask < (1u << num_pairs); ++mask) {
    std::array<uint16_t, Graph::kMaxVertices> adj{};
    for (int b = 0; b < num_pairs; ++b) {
      if ((mask >> b) & 1) {
        auto [i, j] = pair_of_bit[b];
        adj[i] |= uint16_t(1u << j);
        adj[j] |= uint16_t(1u << i);
      }
    }
    if (!rows_connected(adj, n)) continue;
    edges.clear();
    for (int b = 0; b < num_pairs; ++b)
      if ((mask >> b) & 1) edges.push_back(pair_of_bit[b]);
    Graph g = Graph::from_edges0(n, edges);
    codes.insert(canonical_code(g).bits);
  }
  return sorted_class_reps(codes, n);
}

namespace {

// Exact canonical string for a free tree (centered rooted-subtree codes);
// cheap enough to run once per labeled tree during Pruefer enumeration.
std::string tree_class_string(const Graph& g) {
  int n = g.vertex_count();
  if (n == 1) return "()";
  std::vector<int> degree(n), order;
  for (int v = 0; v < n; ++v) degree[v] = g.degree(v);
  std::vector<bool> removed(n, false);
  int remaining = n;
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (degree[v] <= 1) layer.push_back(v);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[v] = true;
      --remaining;
      for (int u = 0; u < n; ++u)
        if (g.has_edge(u, v) && !removed[u] && --degree[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[v]) centers.push_back(v);

  auto rooted = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> kids;
    for (int u = 0; u < n; ++u)
      if (u != parent && g.has_edge(u, v)) kids.push_back(self(self, u, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (const auto& k : kids) s += k;
    s += ')';
    return s;
  };

  std::string best;
  for (int c : centers) {
    std::string s = rooted(rooted, c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

}  // namespace

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > 9) throw Error(ErrorCode::NTooLarge, "tree enumeration supported for n <= 9");
  if (n == 1) return {Graph::from_edges0(1, {})};
  if (n == 2) return {path_graph(2)};

  // Pruefer sweep: every labeled tree once, deduplicated by the exact tree
  // class string; canonical codes are computed only per surviving class.
  std::map<std::string, Graph> classes;
  std::vector<int> seq(n - 2, 0);
  std::vector<int> deg(n);
  std::vector<std::pair<int, int>> edges;
  for (;;) {
    std::fill(deg.begin(), deg.end(), 1);
    for (int a : seq) ++deg[a];
    std::set<int> leaf_heap;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) leaf_heap.insert(v);
    edges.clear();
    for (int a : seq) {
      int leaf = *leaf_heap.begin();
      leaf_heap.erase(leaf_heap.begin());
      edges.emplace_back(leaf, a);
      if (--deg[a] == 1) leaf_heap.insert(a);
    }
    auto it = leaf_heap.begin();
    int u = *it++;
    edges.emplace_back(u, *it);
    Graph g = Graph::from_edges0(n, edges);
    classes.try_emplace(tree_class_string(g), g);

    int idx = n - 3;
    while (idx >= 0 && seq[idx] == n - 1) seq[idx--] = 0;
    if (idx < 0) break;
    ++seq[idx];
  }

  std::set<uint64_t> codes;
  for (auto& [key, g] : classes) codes.insert(canonical_code(g).bits);
  return sorted_class_reps(codes, n);
}

ClassificationRecord classify_graph(const Graph& g, const ClassifyOptions& opts) {
  ClassificationRecord rec;
  rec.graph6 = to_graph6(g);
  rec.n = g.vertex_count();
  rec.edge_count = g.edge_count();

  auto [wc_flag, wc_lab] = is_weakly_closed(g);
  rec.weakly_closed = wc_flag;
  rec.wc_labeling = wc_lab;
  auto [cl_flag, cl_lab] = is_closed(g);
  rec.closed = cl_flag;
  rec.closed_labeling = cl_lab;
  auto [cm_flag, parts] = is_complete_multipartite(g);
  rec.complete_multipartite = cm_flag;
  rec.partition = parts;
  auto [ch_flag, elim] = is_chordal(g);
  rec.chordal = ch_flag;
  rec.elimination_order = elim;
  rec.perfect = is_perfect(g);
  rec.tree = is_tree(g);
  rec.caterpillar = is_caterpillar(g);

  if (opts.with_fpure) {
    FedderResult fr = is_fpure_fedder(g, opts.p, opts.budget, opts.slow);
    rec.fpure_p = opts.p;
    rec.fpure = fr.fpure;
    if (fr.witness) rec.fpure_witness = poly_to_string(*fr.witness, g.vertex_count());
  }
  return rec;
}

std::vector<ClassificationRecord> classify_all(int n, const ClassifyOptions& opts) {
  if (opts.with_fpure && !opts.slow && !fedder_within_default_envelope(n, opts.p))
    throw Error(ErrorCode::FPureBudgetExceeded,
                "F-purity sweep at n=" + std::to_string(n) + ", p=" + std::to_string(opts.p) +
                    " exceeds the default envelope (pass the slow flag to force)");
  std::vector<Graph> graphs = enumerate_connected(n);
  std::vector<ClassificationRecord> records(graphs.size());
  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < graphs.size(); ++i) records[i] = classify_graph(graphs[i], opts);
    return records;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      try {
        records[i] = classify_graph(graphs[i], opts);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return records;
}

SummaryCounts summarize(const std::vector<ClassificationRecord>& records) {
  SummaryCounts c;
  c.total = static_cast<int>(records.size());
  for (const auto& r : records) {
    c.weakly_closed += r.weakly_closed;
    c.closed += r.closed;
    c.complete_multipartite += r.complete_multipartite;
    c.chordal += r.chordal;
    c.perfect += r.perfect;
    c.tree += r.tree;
    c.caterpillar += r.caterpillar;
    c.chordal_not_weakly_closed += r.chordal && !r.weakly_closed;
    if (r.fpure.has_value()) {
      ++c.fpure_known;
      c.fpure_true += *r.fpure;
    }
  }
  return c;
}

namespace {

nlohmann::json labeling_to_json(const Labeling& lab) {
  nlohmann::json arr = nlohmann::json::array();
  for (int l : lab.label_of) arr.push_back(l + 1);
  return arr;
}

}  // namespace

std::string record_to_json(const ClassificationRecord& rec) {
  nlohmann::json j;
  j["schema_version"] = "1";
  j["graph6"] = rec.graph6;
  j["n"] = rec.n;
  j["edge_count"] = rec.edge_count;
  j["flags"] = {
      {"weakly_closed", rec.weakly_closed},
      {"closed", rec.closed},
      {"complete_multipartite", rec.complete_multipartite},
      {"chordal", rec.chordal},
      {"perfect", rec.perfect},
      {"tree", rec.tree},
      {"caterpillar", rec.caterpillar},
  };
  nlohmann::json certs = nlohmann::json::object();
  if (rec.wc_labeling) certs["weakly_closed_labeling"] = labeling_to_json(*rec.wc_labeling);
  if (rec.closed_labeling) certs["closed_labeling"] = labeling_to_json(*rec.closed_labeling);
  if (rec.partition) {
    nlohmann::json parts = nlohmann::json::array();
    for (const auto& part : *rec.partition) {
      nlohmann::json p = nlohmann::json::array();
      for (int v : part) p.push_back(v + 1);
      parts.push_back(p);
    }
    certs["partition"] = parts;
  }
  if (rec.elimination_order) {
    nlohmann::json order = nlohmann::json::array();
    for (int v : *rec.elimination_order) order.push_back(v + 1);
    certs["elimination_order"] = order;
  }
  j["certificates"] = certs;

  // the same data as a uniform {name, value, certificate} list
  nlohmann::json predicates = nlohmann::json::array();
  auto add_predicate = [&](const char* name, bool value, nlohmann::json cert) {
    nlohmann::json p = {{"name", name}, {"value", value}};
    if (!cert.is_null()) p["certificate"] = std::move(cert);
    predicates.push_back(std::move(p));
  };
  add_predicate("weakly_closed", rec.weakly_closed,
                rec.wc_labeling ? labeling_to_json(*rec.wc_labeling) : nlohmann::json());
  add_predicate("closed", rec.closed,
                rec.closed_labeling ? labeling_to_json(*rec.closed_labeling) : nlohmann::json());
  add_predicate("complete_multipartite", rec.complete_multipartite,
                certs.contains("partition") ? certs["partition"] : nlohmann::json());
  add_predicate("chordal", rec.chordal,
                certs.contains("elimination_order") ? certs["elimination_order"]
                                                    : nlohmann::json());
  add_predicate("perfect", rec.perfect, nlohmann::json());
  add_predicate("tree", rec.tree, nlohmann::json());
  add_predicate("caterpillar", rec.caterpillar, nlohmann::json());
  j["predicates"] = predicates;

  if (rec.fpure.has_value()) {
    j["fpure"] = {{"p", *rec.fpure_p}, {"fpure", *rec.fpure}};
    if (rec.fpure_witness) j["fpure"]["witness"] = *rec.fpure_witness;
  }
  return j.dump();
}

std::string records_to_csv(const std::vector<ClassificationRecord>& records) {
  std::string out =
      "graph6,n,edge_count,weakly_closed,closed,complete_multipartite,chordal,perfect,tree,"
      "caterpillar,fpure\n";
  for (const auto& r : records) {
    out += r.graph6 + ',' + std::to_string(r.n) + ',' + std::to_string(r.edge_count);
    for (bool f : {r.weakly_closed, r.closed, r.complete_multipartite, r.chordal, r.perfect,
                   r.tree, r.caterpillar})
      out += f ? ",true" : ",false";
    out += r.fpure.has_value() ? (*r.fpure ? ",true" : ",false") : ",";
    out += '\n';
  }
  return out;
}

std::string records_to_jsonl(const std::vector<ClassificationRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += record_to_json(r);
    out += '\n';
  }
  return out;
}

namespace {

void markdown_table(std::string& out, const std::vector<const ClassificationRecord*>& rows) {
  out += "| graph6 | edges | closed | complete r-partite | chordal | perfect |\n";
  out += "|---|---|---|---|---|---|\n";
  for (const auto* r : rows) {
    out += "| `" + r->graph6 + "` | " + std::to_string(r->edge_count) + " | " +
           (r->closed ? "yes" : "no") + " | " + (r->complete_multipartite ? "yes" : "no") +
           " | " + (r->chordal ? "yes" : "no") + " | " + (r->perfect ? "yes" : "no") + " |\n";
  }
  out += '\n';
}

}  // namespace

std::string records_to_markdown(const std::vector<ClassificationRecord>& records) {
  std::vector<const ClassificationRecord*> wc_multipartite, wc_chordal, wc_rest, not_wc;
  for (const auto& r : records) {
    if (!r.weakly_closed)
      not_wc.push_back(&r);
    else if (r.complete_multipartite)
      wc_multipartite.push_back(&r);
    else if (r.chordal)
      wc_chordal.push_back(&r);
    else
      wc_rest.push_back(&r);
  }
  std::string out;
  int n = records.empty() ? 0 : records.front().n;
  out += "# Classification - n = " + std::to_string(n) + " (" +
         std::to_string(records.size()) + " items)\n\n";
  out += "## Weakly closed\n\n";
  out += "### Complete r-partite\n\n";
  markdown_table(out, wc_multipartite);
  out += "### Chordal (not complete r-partite)\n\n";
  markdown_table(out, wc_chordal);
  out += "### Other weakly closed\n\n";
  markdown_table(out, wc_rest);
  out += "## Not weakly closed\n\n";
  markdown_table(out, not_wc);
  SummaryCounts counts = summarize(records);
  out += "## Summary\n\n```\n" + summary_to_text(counts) + "```\n";
  return out;
}

std::string summary_to_text(const SummaryCounts& c) {
  std::string out;
  out += "total:                     " + std::to_string(c.total) + "\n";
  out += "weakly closed:             " + std::to_string(c.weakly_closed) + "\n";
  out += "closed:                    " + std::to_string(c.closed) + "\n";
  out += "complete r-partite:        " + std::to_string(c.complete_multipartite) + "\n";
  out += "chordal:                   " + std::to_string(c.chordal) + "\n";
  out += "perfect:                   " + std::to_string(c.perfect) + "\n";
  out += "trees:                     " + std::to_string(c.tree) + "\n";
  out += "caterpillars:              " + std::to_string(c.caterpillar) + "\n";
  out += "chordal, not weakly closed:" + std::to_string(c.chordal_not_weakly_closed) + "\n";
  if (c.fpure_known > 0) {
    out += "F-pure:                    " + std::to_string(c.fpure_true) + " of " +
           std::to_string(c.fpure_known) + "\n";
  }
  return out;
}

}  // namespace wc
