#pragma once

#include <optional>
#include <string>

#include "wc/graph.hpp"
#include "wc/ideal.hpp"
#include "wc/witness.hpp"

namespace wc {

/// Ring data for the 2n-variable polynomial ring of a graph on n vertices:
/// variables X_1..X_n (indices 0..n-1) and Y_1..Y_n (indices n..2n-1),
/// degrevlex. The elimination tag, when lifted, takes index 2n.
struct EdgeRing {
  PrimeField field;
  MonomialOrder order;
  int n;
};

EdgeRing edge_ring(int n, int p);

/// Names X1..Xn, Y1..Yn, T for the variables of an n-vertex edge ring.
std::function<std::string(int)> edge_ring_names(int n);

std::string poly_to_string(const Polynomial& f, int n);

/// The 2x2 minor X_i*Y_j - X_j*Y_i for 0-based vertices i, j.
Polynomial bracket(const EdgeRing& ring, int i, int j);

/// One generator X_i*Y_j - X_j*Y_i per edge {i,j}, i < j. n <= 6.
Ideal binomial_edge_ideal(const Graph& g, int p);

/// Generators raised to the p-th power via the Frobenius term map.
Ideal bracket_power(const Ideal& ideal, int p);

/// Monomial generators X_i^p, Y_i^p of m^[p].
std::vector<Monomial> frobenius_max_ideal(int n, int p);

/// (Y_{v_1} * [v_1,v_2] * ... * [v_{s-1},v_s] * X_{v_s})^(p-1) for an
/// arrangement; every consecutive minor appears whether or not the pair is
/// an edge.
Polynomial witness_product(const EdgeRing& ring, const VertexSequence& seq, int p);

/// witness_product over the identity arrangement 1..n of g.
Polynomial fedder_witness_product(const Graph& g, int p);

/// Sufficient test: the identity-arrangement witness multiplies every edge
/// generator into J^[p] and stays outside m^[p].
bool check_witness_fast_path(const Graph& g, int p, const Budget& budget = {});

struct FedderResult {
  bool fpure = false;
  std::optional<Polynomial> witness;
};

/// Decides F-purity of S/J_G by the colon criterion: computes (J^[p] : J)
/// and looks for a generator outside m^[p]. Defaults to a size envelope of
/// n <= 5 for p = 2, n <= 4 for p = 3 and n <= 3 beyond; `beyond_envelope`
/// lifts the envelope (the dynamic budget still applies).
FedderResult is_fpure_fedder(const Graph& g, int p, const Budget& budget = {},
                             bool beyond_envelope = false);

/// Congruence of the two witness products before and after interchanging
/// positions pos, pos+1 of the arrangement, modulo J^[p]. The swapped value
/// pair must be an edge. Boundary positions exercise the variants that swap
/// the leading Y index or the trailing X index.
bool lemma_congruence_holds(const Graph& g, int p, const VertexSequence& seq, int pos,
                            const Budget& budget = {});

bool fedder_within_default_envelope(int n, int p);

}  // namespace wc
