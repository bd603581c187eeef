#include "wc/fedder.hpp"

#include <algorithm>

namespace wc {

namespace {

void check_prime(int p) {
  if (p != 2 && p != 3 && p != 5 && p != 7)
    throw Error(ErrorCode::InvalidInput, "characteristic must be one of 2, 3, 5, 7");
}

}  // namespace

EdgeRing edge_ring(int n, int p) {
  check_prime(p);
  if (n < 1 || 2 * n + 1 > Monomial::kMaxVars)
    throw Error(ErrorCode::NTooLarge, "edge ring supports at most 7 vertices");
  return EdgeRing{PrimeField(p), MonomialOrder{MonomialOrder::Kind::Degrevlex, 2 * n}, n};
}

// Variable layout: Y_1..Y_n ahead of X_1..X_n, so the degrevlex initial
// monomial of Y_1*[1,2]*...*[n-1,n]*X_n is the squarefree product of all
// the variables.
namespace {
int y_var(const EdgeRing&, int i) { return i; }
int x_var(const EdgeRing& ring, int i) { return ring.n + i; }
}  // namespace

std::function<std::string(int)> edge_ring_names(int n) {
  return [n](int i) -> std::string {
    if (i < n) return "Y" + std::to_string(i + 1);
    if (i < 2 * n) return "X" + std::to_string(i - n + 1);
    return "T";
  };
}

std::string poly_to_string(const Polynomial& f, int n) {
  std::vector<int> print_order;
  for (int i = 0; i < n; ++i) print_order.push_back(n + i);  // X block
  for (int i = 0; i < n; ++i) print_order.push_back(i);      // Y block
  if (f.order().nvars > 2 * n) print_order.push_back(2 * n);
  return f.to_string(edge_ring_names(n), print_order);
}

Polynomial bracket(const EdgeRing& ring, int i, int j) {
  if (i < 0 || j < 0 || i >= ring.n || j >= ring.n || i == j)
    throw Error(ErrorCode::VertexOutOfRange, "bracket indices out of range");
  Monomial xi_yj =
      Monomial::product(Monomial::variable(x_var(ring, i)), Monomial::variable(y_var(ring, j)));
  Monomial xj_yi =
      Monomial::product(Monomial::variable(x_var(ring, j)), Monomial::variable(y_var(ring, i)));
  return Polynomial::from_terms(ring.field, ring.order,
                                {{xi_yj, 1}, {xj_yi, ring.field.neg(1)}});
}

Ideal binomial_edge_ideal(const Graph& g, int p) {
  if (g.vertex_count() > 6)
    throw Error(ErrorCode::NTooLarge, "binomial edge ideals supported for n <= 6");
  EdgeRing ring = edge_ring(g.vertex_count(), p);
  Ideal ideal;
  for (auto [u, v] : g.edges()) ideal.gens.push_back(bracket(ring, u, v));
  return ideal;
}

Ideal bracket_power(const Ideal& ideal, int p) {
  check_prime(p);
  Ideal out;
  out.gens.reserve(ideal.gens.size());
  for (const auto& f : ideal.gens) {
    if (f.field().p() != p)
      throw Error(ErrorCode::InvalidInput, "bracket power characteristic mismatch");
    out.gens.push_back(f.frobenius(p));
  }
  return out;
}

std::vector<Monomial> frobenius_max_ideal(int n, int p) {
  std::vector<Monomial> gens;
  gens.reserve(2 * n);
  for (int i = 0; i < 2 * n; ++i) gens.push_back(Monomial::variable(i, p));
  return gens;
}

Polynomial witness_product(const EdgeRing& ring, const VertexSequence& seq, int p) {
  check_prime(p);
  if (!seq.is_valid() || seq.size() != ring.n)
    throw Error(ErrorCode::InvalidInput, "arrangement is not a permutation of 1..n");
  int first = seq.entries.front();
  int last = seq.entries.back();
  Polynomial prod = Polynomial::from_terms(
      ring.field, ring.order, {{Monomial::variable(y_var(ring, first)), 1}});  // Y_{v_1}
  for (int k = 0; k + 1 < seq.size(); ++k)
    prod = prod.times(bracket(ring, seq.entries[k], seq.entries[k + 1]));
  prod = prod.times(Polynomial::from_terms(ring.field, ring.order,
                                           {{Monomial::variable(x_var(ring, last)), 1}}));
  return prod.pow(p - 1);
}

Polynomial fedder_witness_product(const Graph& g, int p) {
  EdgeRing ring = edge_ring(g.vertex_count(), p);
  return witness_product(ring, VertexSequence::identity(g.vertex_count()), p);
}

bool check_witness_fast_path(const Graph& g, int p, const Budget& budget) {
  Ideal j = binomial_edge_ideal(g, p);
  Polynomial w = fedder_witness_product(g, p);
  if (in_monomial_ideal(w, frobenius_max_ideal(g.vertex_count(), p))) return false;
  if (j.gens.empty()) return true;  // zero ideal: nothing to absorb
  std::vector<Polynomial> gb = groebner_basis(bracket_power(j, p), budget);
  for (const auto& e : j.gens)
    if (!normal_form(w.times(e), gb).is_zero()) return false;
  return true;
}

bool fedder_within_default_envelope(int n, int p) {
  if (p == 2) return n <= 5;
  if (p == 3) return n <= 4;
  return n <= 3;
}

FedderResult is_fpure_fedder(const Graph& g, int p, const Budget& budget, bool beyond_envelope) {
  check_prime(p);
  int n = g.vertex_count();
  if (n > 6)
    throw Error(ErrorCode::NTooLarge, "F-purity computation supported for n <= 6");
  if (!beyond_envelope && !fedder_within_default_envelope(n, p))
    throw Error(ErrorCode::BudgetExceeded,
                "n=" + std::to_string(n) + ", p=" + std::to_string(p) +
                    " exceeds the default compute envelope (pass the slow flag to force)");
  Ideal j = binomial_edge_ideal(g, p);
  if (j.gens.empty()) {
    // zero ideal: the quotient is the ring itself, (0 : 0) = (1)
    EdgeRing ring = edge_ring(n, p);
    FedderResult trivial;
    trivial.fpure = true;
    trivial.witness = Polynomial::constant(ring.field, ring.order, 1);
    return trivial;
  }
  Ideal jp = bracket_power(j, p);
  Ideal quotient = colon_ideal(jp, j, budget);
  std::vector<Monomial> mp = frobenius_max_ideal(n, p);
  FedderResult result;
  for (const auto& gen : quotient.gens) {
    if (!in_monomial_ideal(gen, mp)) {
      result.fpure = true;
      result.witness = gen;
      return result;
    }
  }
  result.fpure = false;
  return result;
}

bool lemma_congruence_holds(const Graph& g, int p, const VertexSequence& seq, int pos,
                            const Budget& budget) {
  int n = g.vertex_count();
  if (!seq.is_valid() || seq.size() != n)
    throw Error(ErrorCode::InvalidInput, "arrangement is not a permutation of 1..n");
  if (pos < 0 || pos + 1 >= n)
    throw Error(ErrorCode::PositionOutOfRange, "interchange position out of range");
  int a = seq.entries[pos];
  int b = seq.entries[pos + 1];
  if (!g.has_edge(a, b))
    throw Error(ErrorCode::NotAnEdge, "{" + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                                          "} is not an edge");
  EdgeRing ring = edge_ring(n, p);
  VertexSequence swapped = seq;
  std::swap(swapped.entries[pos], swapped.entries[pos + 1]);
  Polynomial before = witness_product(ring, seq, p);
  Polynomial after = witness_product(ring, swapped, p);
  std::vector<Polynomial> gb = groebner_basis(bracket_power(binomial_edge_ideal(g, p), p), budget);
  return normal_form(before.minus(after), gb).is_zero();
}

}  // namespace wc
