// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Criteria 7-9 run with the basis self-check and the colon audit
// enabled so that every Groebner basis and colon generator produced along
// the way is re-verified (criterion 10).

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "support.hpp"
#include "wc/classify.hpp"
#include "wc/enumerate.hpp"
#include "wc/fedder.hpp"
#include "wc/ideal.hpp"
#include "wc/witness.hpp"

using namespace wc;
namespace ts = wc::testsupport;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
  int id;
  std::string label;
  double time_limit_seconds;
  std::function<bool(std::string&)> run;
};

bool criterion_enumeration_counts(std::string& detail) {
  auto r5 = classify_all(5);
  auto r6 = classify_all(6);
  detail = "n=5: " + std::to_string(r5.size()) + " classes, n=6: " + std::to_string(r6.size());
  return r5.size() == 21 && r6.size() == 112;
}

bool criterion_definition_equivalence(std::string& detail) {
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      ++checked;
      if (is_weakly_closed(g).first != is_weakly_closed_by_definition(g).first) {
        detail = "mismatch at " + to_graph6(g);
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " graphs, search == interchange definition";
  return checked == 143;  // 1+1+2+6+21+112 classes with n <= 6
}

bool criterion_per_labeling_equivalence(std::string& detail) {
  long checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& base : enumerate_connected(n)) {
      Labeling lab = Labeling::identity(n);
      do {
        Graph g = relabel(base, lab);
        ++checked;
        if (wc_condition_holds(g) != all_edges_adjacentable(g)) {
          detail = "mismatch at " + to_graph6(base) + " under some labeling";
          return false;
        }
      } while (std::next_permutation(lab.label_of.begin(), lab.label_of.end()));
    }
  }
  std::mt19937_64 rng(20260203);
  for (const Graph& base : enumerate_connected(6)) {
    std::vector<Labeling> labelings{Labeling::identity(6)};
    for (int k = 0; k < 50; ++k) labelings.push_back(ts::random_labeling(6, rng));
    for (const Labeling& lab : labelings) {
      Graph g = relabel(base, lab);
      ++checked;
      if (wc_condition_holds(g) != all_edges_adjacentable(g)) {
        detail = "mismatch at " + to_graph6(base) + " under a sampled labeling";
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " (graph, labeling) pairs";
  return true;
}

bool criterion_implication_lattice(std::string& detail) {
  int checked = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const ClassificationRecord& rec : classify_all(n)) {
      ++checked;
      Graph g = parse_graph6(rec.graph6);
      bool omega_big = clique_number(g) >= n - 2;
      bool fails = (rec.closed && !rec.weakly_closed) ||
                   (rec.complete_multipartite && !rec.weakly_closed) ||
                   (rec.closed && !rec.chordal) || (rec.weakly_closed && !rec.perfect) ||
                   (rec.weakly_closed && has_chordless_cycle_at_least(g, 5)) ||
                   (rec.weakly_closed && has_induced_odd_hole(complement(g))) ||
                   (omega_big && !rec.weakly_closed) || (n <= 4 && !rec.weakly_closed) ||
                   (n <= 5 && rec.chordal && !rec.weakly_closed);
      if (fails) {
        detail = "violation at " + rec.graph6;
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " graphs, zero violations";
  return true;
}

bool criterion_tree_characterizations(std::string& detail) {
  int checked = 0;
  for (int n = 1; n <= 9; ++n) {
    for (const Graph& t : enumerate_trees(n)) {
      ++checked;
      bool closed_flag = is_closed(t).first;
      bool path = canonical_code(t) == canonical_code(path_graph(n));
      bool claw_free = n < 4 || !contains_induced(t, claw_graph());
      bool wc_flag = is_weakly_closed(t).first;
      bool caterpillar = is_caterpillar(t);
      bool bigclaw_free = n < 7 || !contains_induced(t, bigclaw_graph());
      if (closed_flag != path || closed_flag != claw_free || wc_flag != caterpillar ||
          wc_flag != bigclaw_free) {
        detail = "mismatch at tree " + to_graph6(t);
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " trees";
  return checked == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47;
}

bool criterion_spot_facts(std::string& detail) {
  Graph c5 = cycle_graph(5);
  Graph c6 = cycle_graph(6);
  bool ok = !is_weakly_closed(c5).first && !is_perfect(c5) &&
            !is_weakly_closed(bigclaw_graph()).first && !is_weakly_closed(c6).first &&
            is_weakly_closed(complement(c6)).first;
  for (const Graph& g : {ts::chordal_not_wc_a(), ts::chordal_not_wc_b()})
    ok = ok && is_chordal(g).first && !is_weakly_closed(g).first;
  detail = "5-cycle, 6-cycle and complement, bigclaw, two chordal non-examples";
  return ok;
}

bool criterion_fedder_conjecture(std::string& detail) {
  Budget budget = Budget::from_env();
  int checked = 0;
  try {
    for (int n = 1; n <= 5; ++n) {
      for (const Graph& g : enumerate_connected(n)) {
        ++checked;
        bool wc_flag = is_weakly_closed(g).first;
        bool fpure = is_fpure_fedder(g, 2, budget).fpure;
        if (wc_flag != fpure) {
          detail = "biconditional fails at " + to_graph6(g);
          return false;
        }
      }
    }
    if (is_fpure_fedder(cycle_graph(5), 2, budget).fpure) {
      detail = "the 5-cycle came out F-pure at p=2";
      return false;
    }
  } catch (const Error& e) {
    detail = std::string("budget exceeded: ") + e.what();
    return false;
  }
  detail = std::to_string(checked) + " graphs, F-pure <=> weakly closed at p=2";
  return checked == 31;
}

bool criterion_witness_fast_path(std::string& detail) {
  Budget budget = Budget::from_env();
  int checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      auto [wc_flag, lab] = is_weakly_closed(g);
      if (!wc_flag) continue;
      ++checked;
      Graph relabeled = relabel(g, *lab);
      Polynomial w = fedder_witness_product(relabeled, 2);
      if (in_monomial_ideal(w, frobenius_max_ideal(n, 2))) {
        detail = "witness fell inside m^[2] at " + to_graph6(g);
        return false;
      }
      if (!check_witness_fast_path(relabeled, 2, budget)) {
        detail = "fast path failed at " + to_graph6(g);
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " weakly closed graphs, witness certified";
  return checked == 30;  // all but the 5-cycle
}

bool criterion_lemma_congruences(std::string& detail) {
  Budget budget = Budget::from_env();
  long checked = 0;

  // 4-cycle example: every arrangement, every legal position
  Graph c4 = ts::example_c4();
  VertexSequence seq = VertexSequence::identity(4);
  std::vector<int> perm = seq.entries;
  std::sort(perm.begin(), perm.end());
  do {
    VertexSequence arrangement;
    arrangement.entries = perm;
    for (int pos = 0; pos + 1 < 4; ++pos) {
      if (!c4.has_edge(perm[pos], perm[pos + 1])) continue;
      ++checked;
      if (!lemma_congruence_holds(c4, 2, arrangement, pos, budget)) {
        detail = "congruence failed on the 4-cycle";
        return false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  // 6-vertex example: identity plus a fixed sample, every legal position
  Graph wc6 = ts::example_wc6();
  std::mt19937_64 rng(20260204);
  std::vector<VertexSequence> arrangements{VertexSequence::identity(6)};
  for (int k = 0; k < 50; ++k) {
    VertexSequence s = VertexSequence::identity(6);
    std::shuffle(s.entries.begin(), s.entries.end(), rng);
    arrangements.push_back(s);
  }
  for (const VertexSequence& s : arrangements) {
    for (int pos = 0; pos + 1 < 6; ++pos) {
      if (!wc6.has_edge(s.entries[pos], s.entries[pos + 1])) continue;
      ++checked;
      if (!lemma_congruence_holds(wc6, 2, s, pos, budget)) {
        detail = "congruence failed on the 6-vertex example";
        return false;
      }
    }
  }
  detail = std::to_string(checked) + " legal interchanges, all congruent mod the bracket power";
  return checked > 0;
}

bool criterion_engine_selfchecks(std::string& detail) {
  // counts accumulated while criteria 7-9 ran with the audits on
  size_t bases = groebner_selfcheck_count();
  size_t colon_gens = colon_audit_count();
  int round_trips = 0;
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : enumerate_connected(n)) {
      if (!(parse_graph6(to_graph6(g)) == g)) {
        detail = "graph6 round trip failed at " + to_graph6(g);
        return false;
      }
      ++round_trips;
    }
  detail = std::to_string(bases) + " bases re-verified, " + std::to_string(colon_gens) +
           " colon generators audited, " + std::to_string(round_trips) + " round trips";
  return bases > 0 && colon_gens > 0 && round_trips == 143;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "enumeration counts (21 and 112 classes)", 30.0, criterion_enumeration_counts},
      {2, "labeling search == interchange definition, n <= 6", 600.0,
       criterion_definition_equivalence},
      {3, "per-labeling equivalence of the order condition", 600.0,
       criterion_per_labeling_equivalence},
      {4, "implication lattice over all classes, n <= 6", 600.0, criterion_implication_lattice},
      {5, "tree characterizations, n <= 9", 300.0, criterion_tree_characterizations},
      {6, "spot facts", 60.0, criterion_spot_facts},
      {7, "F-purity biconditional at p=2, n <= 5", 1800.0, criterion_fedder_conjecture},
      {8, "identity-arrangement witness on certificate labelings", 1800.0,
       criterion_witness_fast_path},
      {9, "interchange congruences modulo the bracket power", 1800.0,
       criterion_lemma_congruences},
      {10, "engine self-checks and round trips", 600.0, criterion_engine_selfchecks},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (c.id == 7) {
      // audit every basis and colon generator produced from here on
      reset_groebner_selfcheck_count();
      reset_colon_audit_count();
      set_groebner_selfcheck(true);
      set_colon_audit(true);
    }
    if (c.id == 10) {
      set_groebner_selfcheck(false);
      set_colon_audit(false);
    }
    std::string detail;
    auto start = Clock::now();
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    if (elapsed > c.time_limit_seconds) {
      ok = false;
      detail += " [over the " + std::to_string(static_cast<int>(c.time_limit_seconds)) +
                "s limit]";
    }
    std::printf("%s criterion %2d: %s - %s (%.1fs)\n", ok ? "PASS" : "FAIL", c.id,
                c.label.c_str(), detail.c_str(), elapsed);
    std::fflush(stdout);
    failures += !ok;
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
