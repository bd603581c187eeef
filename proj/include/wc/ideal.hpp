#pragma once

#include <vector>

#include "wc/groebner.hpp"

namespace wc {

/// An ideal given by generators. All generators share one ring.
struct Ideal {
  std::vector<Polynomial> gens;

  bool is_zero() const {
    for (const auto& g : gens)
      if (!g.is_zero()) return false;
    return true;
  }
};

/// Reduced Groebner basis of the ideal (degrevlex order of the generators).
std::vector<Polynomial> groebner_basis(const Ideal& ideal, const Budget& budget = {});

bool ideal_member(const Polynomial& f, const std::vector<Polynomial>& gb);

/// A cap B via the tag trick: eliminate the tag T from T*A + (1-T)*B with a
/// block order. Returns the reduced degrevlex basis of the intersection.
Ideal intersect(const Ideal& a, const Ideal& b, const Budget& budget = {});

/// (I : f), computed as the intersection I cap (f) with every generator
/// divided exactly by f. Throws DivisionNotExact if the division fails,
/// which would signal a bug.
Ideal colon_by_element(const Ideal& ideal, const Polynomial& f, const Budget& budget = {});

/// (I : J) as the intersection over J's generators of (I : f), folded in
/// generator order.
Ideal colon_ideal(const Ideal& ideal, const Ideal& j, const Budget& budget = {});

/// Every term of f divisible by some generator (the generators must be
/// monomials). The zero polynomial is a member.
bool in_monomial_ideal(const Polynomial& f, const std::vector<Monomial>& gens);

/// When enabled, every generator emitted by colon_by_element is re-verified
/// to satisfy g*f in I and counted; a failure throws. Used by the
/// verification suite.
void set_colon_audit(bool enabled);
size_t colon_audit_count();
void reset_colon_audit_count();

}  // namespace wc
