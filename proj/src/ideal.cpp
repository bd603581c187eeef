#include "wc/ideal.hpp"

#include <algorithm>
#include <atomic>

namespace wc {

namespace {

std::atomic<bool> g_colon_audit{false};
std::atomic<size_t> g_colon_audit_count{0};

MonomialOrder block_order(const MonomialOrder& base) {
  if (base.nvars + 1 > Monomial::kMaxVars)
    throw Error(ErrorCode::NTooLarge, "no free slot for the elimination tag");
  return MonomialOrder{MonomialOrder::Kind::Block, base.nvars + 1};
}

/// Reinterprets f in the tag ring, optionally multiplied by T or by (1-T).
enum class Lift { Plain, TimesTag, TimesOneMinusTag };

Polynomial lift_to_tag_ring(const Polynomial& f, const MonomialOrder& tag_order, Lift mode) {
  int tag = tag_order.nvars - 1;
  std::vector<Term> terms;
  terms.reserve(f.terms().size() * 2);
  for (const auto& t : f.terms()) {
    if (mode == Lift::Plain || mode == Lift::TimesOneMinusTag) terms.push_back(t);
    if (mode == Lift::TimesTag || mode == Lift::TimesOneMinusTag) {
      Term tt = t;
      tt.mono = Monomial::product(tt.mono, Monomial::variable(tag));
      if (mode == Lift::TimesOneMinusTag) tt.coeff = f.field().neg(tt.coeff);
      terms.push_back(tt);
    }
  }
  return Polynomial::from_terms(f.field(), tag_order, std::move(terms));
}

Polynomial project_from_tag_ring(const Polynomial& f, const MonomialOrder& base_order) {
  int tag = f.order().nvars - 1;
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.mono.exp(tag) != 0)
      throw Error(ErrorCode::InvalidInput, "polynomial still involves the elimination tag");
    terms.push_back(t);
  }
  return Polynomial::from_terms(f.field(), base_order, std::move(terms));
}

/// Exact division f / d; throws DivisionNotExact when the remainder is
/// nonzero.
Polynomial exact_quotient(const Polynomial& f, const Polynomial& d) {
  DivisionResult res = divide(f, {d});
  if (!res.remainder.is_zero())
    throw Error(ErrorCode::DivisionNotExact, "colon generator not divisible by the element");
  return res.quotients.front();
}

}  // namespace

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const Budget& budget) {
  return buchberger(ideal.gens, budget);
}

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gb) {
  return normal_form(f, gb).is_zero();
}

Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget) {
  if (a.gens.empty() || b.gens.empty()) return Ideal{};
  const MonomialOrder base = a.gens.front().order();
  MonomialOrder tag_order = block_order(base);

  std::vector<Polynomial> tagged;
  tagged.reserve(a.gens.size() + b.gens.size());
  for (const auto& f : a.gens)
    if (!f.is_zero()) tagged.push_back(lift_to_tag_ring(f, tag_order, Lift::TimesTag));
  for (const auto& g : b.gens)
    if (!g.is_zero()) tagged.push_back(lift_to_tag_ring(g, tag_order, Lift::TimesOneMinusTag));
  if (tagged.empty()) return Ideal{};

  std::vector<Polynomial> gb = buchberger(tagged, budget);
  int tag = tag_order.nvars - 1;
  Ideal out;
  for (const auto& f : gb) {
    bool has_tag = false;
    for (const auto& t : f.terms())
      if (t.mono.exp(tag) != 0) {
        has_tag = true;
        break;
      }
    if (!has_tag) out.gens.push_back(project_from_tag_ring(f, base));
  }
  return out;
}

Ideal colon_by_element(const Ideal& ideal, const Polynomial& f, const Budget& budget) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidInput, "colon by the zero polynomial");
  Ideal principal{{f}};
  Ideal meet = intersect(ideal, principal, budget);
  Ideal out;
  for (const auto& g : meet.gens) out.gens.push_back(exact_quotient(g, f).monic());
  // canonical generators: reduced basis of the quotient
  if (!out.gens.empty()) out.gens = buchberger(out.gens, budget);
  if (g_colon_audit.load(std::memory_order_relaxed) && !out.gens.empty()) {
    std::vector<Polynomial> gb = buchberger(ideal.gens, budget);
    for (const auto& q : out.gens) {
      if (!normal_form(q.times(f), gb).is_zero())
        throw Error(ErrorCode::InvalidInput, "internal error: colon generator fails g*f in I");
      g_colon_audit_count.fetch_add(1, std::memory_order_relaxed);
    }
  }
  return out;
}

Ideal colon_ideal(const Ideal& ideal, const Ideal& j, const Budget& budget) {
  std::vector<const Polynomial*> nonzero;
  for (const auto& f : j.gens)
    if (!f.is_zero()) nonzero.push_back(&f);
  if (nonzero.empty())
    throw Error(ErrorCode::InvalidInput, "colon by the zero ideal");
  Ideal acc = colon_by_element(ideal, *nonzero.front(), budget);
  for (size_t k = 1; k < nonzero.size(); ++k) {
    Ideal next = colon_by_element(ideal, *nonzero[k], budget);
    acc = intersect(acc, next, budget);
  }
  if (!acc.gens.empty()) acc.gens = buchberger(acc.gens, budget);
  return acc;
}

bool in_monomial_ideal(const Polynomial& f, const std::vector<Monomial>& gens) {
  for (const auto& t : f.terms()) {
    bool divisible = false;
    for (const auto& m : gens)
      if (m.divides(t.mono)) {
        divisible = true;
        break;
      }
    if (!divisible) return false;
  }
  return true;
}

void set_colon_audit(bool enabled) { g_colon_audit.store(enabled, std::memory_order_relaxed); }

size_t colon_audit_count() { return g_colon_audit_count.load(std::memory_order_relaxed); }

void reset_colon_audit_count() { g_colon_audit_count.store(0, std::memory_order_relaxed); }

}  // namespace wc
