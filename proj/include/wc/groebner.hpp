#pragma once

#include <atomic>
#include <cstddef>
#include <vector>

#include "wc/poly.hpp"

namespace wc {

/// Caps on a single basis computation. WC_BUDGET=<max_basis> overrides the
/// basis cap process-wide.
struct Budget {
  size_t max_basis = 20000;
  size_t max_pairs = 5000000;

  static Budget from_env();
};

struct DivisionResult {
  Polynomial remainder;
  /// quotients[i] multiplies divisors[i]; f = sum quotients[i]*divisors[i] + remainder.
  std::vector<Polynomial> quotients;
};

/// Multivariate division by an ordered list of divisors; deterministic
/// (always the first divisor whose leading monomial divides).
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of the given generators: monic elements, no term
/// of any element divisible by another's leading monomial, sorted ascending
/// by leading monomial. Pairs are pruned with the Gebauer-Moeller criteria
/// and selected lowest lcm degree first.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const Budget& budget = {});

/// Post-hoc Buchberger criterion: every S-pair reduces to zero against the
/// basis. Used by the verification suite; applies no pair-elimination
/// criteria.
bool is_groebner_basis(const std::vector<Polynomial>& basis);

/// When enabled, every basis returned by buchberger() is re-verified with
/// is_groebner_basis and counted; a failure throws. Used by the acceptance
/// run to audit all bases produced along the way.
void set_groebner_selfcheck(bool enabled);
size_t groebner_selfcheck_count();
void reset_groebner_selfcheck_count();

}  // namespace wc
