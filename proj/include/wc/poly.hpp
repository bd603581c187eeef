#pragma once

#include <string>
#include <vector>

#include "wc/fp.hpp"
#include "wc/monomial.hpp"

namespace wc {

struct Term {
  Monomial mono;
  uint8_t coeff = 0;

  bool operator==(const Term&) const = default;
};

/// Sparse multivariate polynomial over F_p with terms kept strictly
/// decreasing in the ambient order. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial(PrimeField field, MonomialOrder order) : field_(field), order_(order) {}

  /// Sorts, combines equal monomials, and drops zero coefficients.
  static Polynomial from_terms(PrimeField field, MonomialOrder order, std::vector<Term> terms);

  static Polynomial constant(PrimeField field, MonomialOrder order, uint8_t c);

  const PrimeField& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }

  const Term& leading() const {
    if (terms_.empty()) throw Error(ErrorCode::InvalidInput, "zero polynomial has no leading term");
    return terms_.front();
  }

  int total_degree() const;

  Polynomial plus(const Polynomial& other) const;
  Polynomial minus(const Polynomial& other) const;
  Polynomial negated() const;
  Polynomial times(const Polynomial& other) const;
  Polynomial times_term(const Term& t) const;
  Polynomial scaled(uint8_t c) const;
  Polynomial pow(int k) const;
  /// Leading coefficient scaled to 1.
  Polynomial monic() const;
  /// Term-wise X^e -> X^(e*k), coefficients untouched (Frobenius in char p
  /// fixes F_p).
  Polynomial frobenius(int k) const;
  /// Same terms reinterpreted (and re-sorted) under a different order.
  Polynomial reordered(MonomialOrder order) const;

  bool equals(const Polynomial& other) const {
    return field_ == other.field_ && terms_ == other.terms_;
  }

  std::string to_string(const std::function<std::string(int)>& name,
                        const std::vector<int>& print_order = {}) const;

 private:
  PrimeField field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);

}  // namespace wc
