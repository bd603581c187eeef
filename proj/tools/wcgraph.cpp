#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "wc/enumerate.hpp"
#include "wc/fedder.hpp"
#include "wc/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoWitness = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitUsage = 64;
constexpr int kExitDisconnected = 65;
constexpr int kExitBudget = 70;

int exit_code_for(const wc::Error& e) {
  switch (e.code()) {
    case wc::ErrorCode::BudgetExceeded:
    case wc::ErrorCode::FPureBudgetExceeded:
      return kExitBudget;
    case wc::ErrorCode::Disconnected:
      return kExitDisconnected;
    default:
      return kExitUsage;
  }
}

struct GraphInput {
  std::string graph6;
  std::string edges;
  int forced_n = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--graph6", graph6, "graph6 encoding of the input graph");
    cmd->add_option("--edges", edges, "edge list u-v,u-v,... with 1-based vertices");
    cmd->add_option("--n", forced_n, "vertex count (default: largest vertex mentioned)");
  }

  wc::Graph parse() const {
    if (graph6.empty() == edges.empty())
      throw wc::Error(wc::ErrorCode::InvalidInput, "provide exactly one of --graph6 / --edges");
    if (!graph6.empty()) return wc::parse_graph6(graph6);
    return wc::parse_edge_list(edges, forced_n);
  }
};

nlohmann::json sequence_json(const wc::VertexSequence& seq) {
  nlohmann::json arr = nlohmann::json::array();
  for (int v : seq.entries) arr.push_back(v + 1);
  return arr;
}

nlohmann::json certificate_json(const wc::InterchangeSequence& cert, const wc::Graph& g) {
  nlohmann::json j;
  j["start"] = sequence_json(cert.start);
  nlohmann::json swaps = nlohmann::json::array();
  for (const auto& s : cert.swaps)
    swaps.push_back({{"pos", s.pos + 1}, {"pair", {s.a + 1, s.b + 1}}});
  j["swaps"] = swaps;
  j["final"] = sequence_json(wc::replay(cert, g));
  return j;
}

int run_check(const GraphInput& input, bool allow_disconnected, std::optional<int> fpure_p,
              bool slow) {
  wc::Graph g = input.parse();
  bool connected = wc::is_connected(g);
  if (!connected && !allow_disconnected)
    throw wc::Error(wc::ErrorCode::Disconnected,
                    "input graph is disconnected (pass --allow-disconnected to classify anyway)");
  wc::ClassifyOptions opts;
  opts.budget = wc::Budget::from_env();
  if (fpure_p) {
    opts.with_fpure = true;
    opts.p = *fpure_p;
    opts.slow = slow;
  }
  wc::ClassificationRecord rec = wc::classify_graph(g, opts);
  nlohmann::json j = nlohmann::json::parse(wc::record_to_json(rec));
  j["connected"] = connected;
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_classify(int n, const std::string& format, std::optional<int> fpure_p, bool slow,
                 int jobs, const std::string& out_path) {
  wc::ClassifyOptions opts;
  opts.jobs = jobs;
  opts.budget = wc::Budget::from_env();
  if (fpure_p) {
    opts.with_fpure = true;
    opts.p = *fpure_p;
    opts.slow = slow;
  }
  auto records = wc::classify_all(n, opts);
  std::string report;
  if (format == "csv")
    report = wc::records_to_csv(records);
  else if (format == "jsonl")
    report = wc::records_to_jsonl(records);
  else
    report = wc::records_to_markdown(records);
  if (out_path.empty()) {
    std::cout << report;
  } else {
    std::ofstream out(out_path);
    if (!out) throw wc::Error(wc::ErrorCode::InvalidInput, "cannot open " + out_path);
    out << report;
  }
  std::cerr << wc::summary_to_text(wc::summarize(records));
  return kExitOk;
}

int run_witness(const GraphInput& input, const std::string& edge_text,
                const std::string& labeling_text, const std::string& method,
                const std::string& mode_text) {
  wc::Graph g = input.parse();
  auto comma = edge_text.find(',');
  if (comma == std::string::npos)
    throw wc::Error(wc::ErrorCode::InvalidInput, "--edge expects i,j");
  int i = 0, j = 0;
  try {
    i = std::stoi(edge_text.substr(0, comma)) - 1;
    j = std::stoi(edge_text.substr(comma + 1)) - 1;
  } catch (const std::logic_error&) {
    throw wc::Error(wc::ErrorCode::InvalidInput, "--edge expects i,j");
  }

  if (!labeling_text.empty()) {
    wc::Labeling lab;
    std::stringstream ss(labeling_text);
    std::string item;
    while (std::getline(ss, item, ',')) lab.label_of.push_back(std::stoi(item) - 1);
    g = wc::relabel(g, lab);
  }
  wc::AdjacencyMode mode =
      mode_text == "strict" ? wc::AdjacencyMode::Strict : wc::AdjacencyMode::Unordered;

  std::optional<wc::InterchangeSequence> cert;
  std::string used_method = method;
  if (method == "constructive") {
    cert = wc::constructive_certificate(g, i, j);
  } else if (method == "bfs") {
    cert = wc::adjacentability_certificate(g, i, j, mode);
  } else {  // auto: constructive when the labeling supports it, else search
    try {
      cert = wc::constructive_certificate(g, i, j);
      used_method = "constructive";
    } catch (const wc::Error& e) {
      if (e.code() != wc::ErrorCode::PreconditionViolated) throw;
      cert = wc::adjacentability_certificate(g, i, j, mode);
      used_method = "bfs";
    }
  }

  nlohmann::json out;
  out["schema_version"] = "1";
  out["graph6"] = wc::to_graph6(g);
  out["edge"] = {i + 1, j + 1};
  if (!cert) {
    out["adjacentable"] = false;
    std::cout << out.dump() << "\n";
    return kExitNoWitness;
  }
  if (!wc::certificate_proves(*cert, g, i, j, mode))
    throw wc::Error(wc::ErrorCode::InvalidInput, "internal error: certificate failed validation");
  out["adjacentable"] = true;
  out["method"] = used_method;
  out["certificate"] = certificate_json(*cert, g);
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int run_fpure(const GraphInput& input, int p, bool slow) {
  wc::Graph g = input.parse();
  wc::FedderResult res = wc::is_fpure_fedder(g, p, wc::Budget::from_env(), slow);
  nlohmann::json j;
  j["schema_version"] = "1";
  j["graph6"] = wc::to_graph6(g);
  j["p"] = p;
  j["fpure"] = res.fpure;
  if (res.witness) j["witness"] = wc::poly_to_string(*res.witness, g.vertex_count());
  std::cout << j.dump() << "\n";
  return kExitOk;
}

int run_conjecture(int n, int p, bool slow, int jobs) {
  if (!slow && !wc::fedder_within_default_envelope(n, p))
    throw wc::Error(wc::ErrorCode::FPureBudgetExceeded,
                    "conjecture sweep at n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                        " exceeds the default envelope (pass --slow to force)");
  wc::ClassifyOptions opts;
  opts.with_fpure = true;
  opts.p = p;
  opts.jobs = jobs;
  opts.slow = slow;
  opts.budget = wc::Budget::from_env();
  size_t completed = 0;
  size_t total = 0;
  try {
    auto records = wc::classify_all(n, opts);
    total = records.size();
    for (const auto& rec : records) {
      ++completed;
      if (rec.weakly_closed != *rec.fpure) {
        nlohmann::json j;
        j["schema_version"] = "1";
        j["counterexample"] = rec.graph6;
        j["weakly_closed"] = rec.weakly_closed;
        j["fpure"] = *rec.fpure;
        j["p"] = p;
        std::cout << j.dump() << "\n";
        return kExitCounterexample;
      }
    }
  } catch (const wc::Error& e) {
    if (e.code() == wc::ErrorCode::BudgetExceeded) {
      std::cerr << "budget exhausted after " << completed << (total ? " of " : "")
                << (total ? std::to_string(total) : std::string()) << " graphs: " << e.what()
                << "\n";
      return kExitBudget;
    }
    throw;
  }
  std::cout << "HOLDS at n=" << n << " (p=" << p << "): " << completed
            << " graphs, weakly closed <=> F-pure\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure and F-purity toolkit for small graphs"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "classify one graph, JSON record on stdout");
  GraphInput check_input;
  check_input.attach(check);
  bool check_allow_disconnected = false;
  std::optional<int> check_fpure;
  bool check_slow = false;
  check->add_flag("--allow-disconnected", check_allow_disconnected,
                  "classify disconnected inputs instead of failing");
  check->add_option("--fpure", check_fpure, "also decide F-purity at this characteristic");
  check->add_flag("--slow", check_slow, "lift the default F-purity size envelope");

  auto* classify = app.add_subcommand("classify", "classify all connected graphs on n vertices");
  int classify_n = 5;
  std::string classify_format = "csv";
  std::optional<int> classify_fpure;
  bool classify_slow = false;
  int classify_jobs = 1;
  std::string classify_out;
  classify->add_option("n", classify_n, "vertex count (1..7)")->required();
  classify->add_option("--format", classify_format, "csv, md, or jsonl")
      ->check(CLI::IsMember({"csv", "md", "jsonl"}));
  classify->add_option("--fpure", classify_fpure, "also decide F-purity at this characteristic");
  classify->add_flag("--slow", classify_slow, "lift the default F-purity size envelope");
  classify->add_option("--jobs", classify_jobs, "worker threads");
  classify->add_option("--out", classify_out, "write the report to a file instead of stdout");

  auto* witness = app.add_subcommand("witness", "interchange certificate for one edge");
  GraphInput witness_input;
  witness_input.attach(witness);
  std::string witness_edge, witness_labeling;
  std::string witness_method = "auto";
  std::string witness_mode = "unordered";
  witness->add_option("--edge", witness_edge, "edge i,j (1-based)")->required();
  witness->add_option("--labeling", witness_labeling,
                      "relabel first: comma-separated labels per vertex");
  witness->add_option("--method", witness_method, "bfs, constructive, or auto")
      ->check(CLI::IsMember({"bfs", "constructive", "auto"}));
  witness->add_option("--mode", witness_mode, "accept the pair in either order or strictly")
      ->check(CLI::IsMember({"unordered", "strict"}));

  auto* fpure = app.add_subcommand("fpure", "decide F-purity of the binomial edge ideal");
  GraphInput fpure_input;
  fpure_input.attach(fpure);
  int fpure_p = 2;
  bool fpure_slow = false;
  fpure->add_option("--p", fpure_p, "characteristic (2, 3, 5, or 7)");
  fpure->add_flag("--slow", fpure_slow, "lift the default size envelope");

  auto* conjecture =
      app.add_subcommand("conjecture", "weakly closed <=> F-pure over all connected graphs");
  int conjecture_n = 4;
  int conjecture_p = 2;
  bool conjecture_slow = false;
  int conjecture_jobs = 1;
  conjecture->add_option("n", conjecture_n, "vertex count")->required();
  conjecture->add_option("--p", conjecture_p, "characteristic");
  conjecture->add_flag("--slow", conjecture_slow, "lift the default size envelope");
  conjecture->add_option("--jobs", conjecture_jobs, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*check) return run_check(check_input, check_allow_disconnected, check_fpure, check_slow);
    if (*classify)
      return run_classify(classify_n, classify_format, classify_fpure, classify_slow,
                          classify_jobs, classify_out);
    if (*witness)
      return run_witness(witness_input, witness_edge, witness_labeling, witness_method,
                         witness_mode);
    if (*fpure) return run_fpure(fpure_input, fpure_p, fpure_slow);
    if (*conjecture)
      return run_conjecture(conjecture_n, conjecture_p, conjecture_slow, conjecture_jobs);
  } catch (const wc::Error& e) {
    std::cerr << "error (" << wc::error_code_name(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
