#include "wc/groebner.hpp"

#include <algorithm>
#include <cstdlib>

namespace wc {

namespace {

std::atomic<bool> g_selfcheck{false};
std::atomic<size_t> g_selfcheck_count{0};

}  // namespace

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("WC_BUDGET")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) b.max_basis = v;
  }
  return b;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  const PrimeField& field = f.field();
  const MonomialOrder& order = f.order();
  DivisionResult result{Polynomial(field, order), {}};
  result.quotients.assign(divisors.size(), Polynomial(field, order));

  Polynomial h = f;
  std::vector<Term> remainder_terms;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    bool reduced = false;
    for (size_t i = 0; i < divisors.size(); ++i) {
      const Polynomial& d = divisors[i];
      if (d.is_zero()) continue;
      if (!d.leading().mono.divides(lt.mono)) continue;
      Term factor{d.leading().mono.quotient_of(lt.mono),
                  field.mul(lt.coeff, field.inv(d.leading().coeff))};
      result.quotients[i] =
          result.quotients[i].plus(Polynomial::from_terms(field, order, {factor}));
      h = h.minus(d.times_term(factor));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder_terms.push_back(lt);
      h = h.minus(Polynomial::from_terms(field, order, {lt}));
    }
  }
  result.remainder = Polynomial::from_terms(field, order, std::move(remainder_terms));
  return result;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
  // Quotients are not needed here; run the same loop without recording them.
  const PrimeField& field = f.field();
  const MonomialOrder& order = f.order();
  Polynomial h = f;
  std::vector<Term> remainder_terms;
  while (!h.is_zero()) {
    const Term& lt = h.leading();
    bool reduced = false;
    for (const Polynomial& d : basis) {
      if (d.is_zero()) continue;
      if (!d.leading().mono.divides(lt.mono)) continue;
      Term factor{d.leading().mono.quotient_of(lt.mono),
                  field.mul(lt.coeff, field.inv(d.leading().coeff))};
      h = h.minus(d.times_term(factor));
      reduced = true;
      break;
    }
    if (!reduced) {
      remainder_terms.push_back(lt);
      h = h.minus(Polynomial::from_terms(field, order, {lt}));
    }
  }
  return Polynomial::from_terms(field, order, std::move(remainder_terms));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PrimeField& field = f.field();
  Monomial lcm = Monomial::lcm(f.leading().mono, g.leading().mono);
  Term tf{f.leading().mono.quotient_of(lcm), field.inv(f.leading().coeff)};
  Term tg{g.leading().mono.quotient_of(lcm), field.inv(g.leading().coeff)};
  return f.times_term(tf).minus(g.times_term(tg));
}

namespace {

struct Pair {
  size_t i, j;
  Monomial lcm;
};

// Gebauer-Moeller update: adds basis element t, rewrites the pair set.
void update_pairs(const std::vector<Polynomial>& basis, std::vector<Pair>& pairs, size_t t) {
  const Monomial& lt = basis[t].leading().mono;

  // candidate pairs (i, t), filtered against each other
  std::vector<Pair> cand;
  cand.reserve(t);
  for (size_t i = 0; i < t; ++i)
    cand.push_back({i, t, Monomial::lcm(basis[i].leading().mono, lt)});

  std::vector<bool> drop(cand.size(), false);
  for (size_t a = 0; a < cand.size(); ++a) {
    if (drop[a]) continue;
    if (Monomial::coprime(basis[cand[a].i].leading().mono, lt)) continue;  // kept for F below
    for (size_t b = 0; b < cand.size(); ++b) {
      if (a == b || drop[b]) continue;
      bool b_coprime = Monomial::coprime(basis[cand[b].i].leading().mono, lt);
      if (b_coprime) continue;
      if (cand[b].lcm.divides(cand[a].lcm) && !(cand[a].lcm == cand[b].lcm)) {
        drop[a] = true;
        break;
      }
    }
  }
  // among equal lcms keep the first survivor
  for (size_t a = 0; a < cand.size(); ++a) {
    if (drop[a]) continue;
    for (size_t b = a + 1; b < cand.size(); ++b) {
      if (drop[b]) continue;
      if (cand[a].lcm == cand[b].lcm) drop[b] = true;
    }
  }
  // F criterion: coprime leading monomials reduce to zero
  std::vector<Pair> fresh;
  for (size_t a = 0; a < cand.size(); ++a) {
    if (drop[a]) continue;
    if (Monomial::coprime(basis[cand[a].i].leading().mono, lt)) continue;
    fresh.push_back(cand[a]);
  }

  // B criterion on the old pairs
  std::vector<Pair> kept;
  kept.reserve(pairs.size() + fresh.size());
  for (const Pair& p : pairs) {
    bool discard = lt.divides(p.lcm) &&
                   !(Monomial::lcm(basis[p.i].leading().mono, lt) == p.lcm) &&
                   !(Monomial::lcm(basis[p.j].leading().mono, lt) == p.lcm);
    if (!discard) kept.push_back(p);
  }
  for (Pair& p : fresh) kept.push_back(std::move(p));
  pairs = std::move(kept);
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const Budget& budget) {
  std::vector<Polynomial> basis;
  for (const Polynomial& g : gens)
    if (!g.is_zero()) basis.push_back(g.monic());
  if (basis.empty()) return basis;
  const MonomialOrder order = basis.front().order();

  std::vector<Pair> pairs;
  // interreduce the inputs lightly: drop exact duplicates
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading().mono, b.leading().mono) < 0;
  });
  basis.erase(std::unique(basis.begin(), basis.end(),
                          [](const Polynomial& a, const Polynomial& b) { return a.equals(b); }),
              basis.end());

  std::vector<Polynomial> working;
  for (const Polynomial& g : basis) {
    working.push_back(g);
    update_pairs(working, pairs, working.size() - 1);
  }

  size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > budget.max_pairs)
      throw Error(ErrorCode::BudgetExceeded, "S-pair budget exhausted");
    // normal selection: lowest lcm degree, then lcm order, then indices
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      int da = a.lcm.total_degree(), db = b.lcm.total_degree();
      if (da != db) {
        if (da < db) best = k;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) {
        if (c < 0) best = k;
        continue;
      }
      if (std::tie(a.i, a.j) < std::tie(b.i, b.j)) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<ptrdiff_t>(best));
    Polynomial s = s_polynomial(working[p.i], working[p.j]);
    Polynomial r = normal_form(s, working);
    if (r.is_zero()) continue;
    working.push_back(r.monic());
    if (working.size() > budget.max_basis)
      throw Error(ErrorCode::BudgetExceeded, "basis size budget exhausted");
    update_pairs(working, pairs, working.size() - 1);
  }

  // minimalize: drop elements whose leading monomial another element divides
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < working.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < working.size() && !redundant; ++j) {
      if (i == j) continue;
      const Monomial& li = working[i].leading().mono;
      const Monomial& lj = working[j].leading().mono;
      if (lj.divides(li) && !(li == lj)) redundant = true;
      if (li == lj && j < i) redundant = true;  // keep the first of equals
    }
    if (!redundant) minimal.push_back(working[i]);
  }

  // interreduce: fully reduce each element against the others
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial r = normal_form(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading().mono, b.leading().mono) < 0;
  });

  if (g_selfcheck.load(std::memory_order_relaxed)) {
    if (!is_groebner_basis(reduced))
      throw Error(ErrorCode::InvalidInput, "internal error: basis failed the S-pair post-check");
    g_selfcheck_count.fetch_add(1, std::memory_order_relaxed);
  }
  return reduced;
}

bool is_groebner_basis(const std::vector<Polynomial>& basis) {
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      Polynomial s = s_polynomial(basis[i], basis[j]);
      if (!normal_form(s, basis).is_zero()) return false;
    }
  return true;
}

void set_groebner_selfcheck(bool enabled) { g_selfcheck.store(enabled, std::memory_order_relaxed); }

size_t groebner_selfcheck_count() { return g_selfcheck_count.load(std::memory_order_relaxed); }

void reset_groebner_selfcheck_count() { g_selfcheck_count.store(0, std::memory_order_relaxed); }

}  // namespace wc
