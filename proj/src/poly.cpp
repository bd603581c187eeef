#include "wc/poly.hpp"

#include <algorithm>

namespace wc {

namespace {

void check_compatible(const Polynomial& a, const Polynomial& b) {
  if (!(a.field() == b.field()) || !(a.order() == b.order()))
    throw Error(ErrorCode::InvalidInput, "polynomials live in different rings");
}

}  // namespace

Polynomial Polynomial::from_terms(PrimeField field, MonomialOrder order, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [&order](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
  Polynomial out(field, order);
  for (auto& t : terms) {
    uint8_t c = static_cast<uint8_t>(t.coeff % field.p());
    if (c == 0) continue;
    if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
      uint8_t merged = field.add(out.terms_.back().coeff, c);
      if (merged == 0)
        out.terms_.pop_back();
      else
        out.terms_.back().coeff = merged;
    } else {
      out.terms_.push_back({t.mono, c});
    }
  }
  return out;
}

Polynomial Polynomial::constant(PrimeField field, MonomialOrder order, uint8_t c) {
  return from_terms(field, order, {{Monomial{}, c}});
}

int Polynomial::total_degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
  return d;
}

Polynomial Polynomial::plus(const Polynomial& other) const {
  check_compatible(*this, other);
  Polynomial out(field_, order_);
  out.terms_.reserve(terms_.size() + other.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < other.terms_.size()) {
    int c = order_.compare(terms_[i].mono, other.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(other.terms_[j++]);
    } else {
      uint8_t merged = field_.add(terms_[i].coeff, other.terms_[j].coeff);
      if (merged != 0) out.terms_.push_back({terms_[i].mono, merged});
      ++i;
      ++j;
    }
  }
  while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
  while (j < other.terms_.size()) out.terms_.push_back(other.terms_[j++]);
  return out;
}

Polynomial Polynomial::minus(const Polynomial& other) const { return plus(other.negated()); }

Polynomial Polynomial::negated() const {
  Polynomial out(field_, order_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, field_.neg(t.coeff)});
  return out;
}

Polynomial Polynomial::times_term(const Term& t) const {
  if (t.coeff == 0) return Polynomial(field_, order_);
  Polynomial out(field_, order_);
  out.terms_.reserve(terms_.size());
  for (const auto& own : terms_) {
    uint8_t c = field_.mul(own.coeff, t.coeff);
    if (c != 0) out.terms_.push_back({Monomial::product(own.mono, t.mono), c});
  }
  return out;
}

Polynomial Polynomial::times(const Polynomial& other) const {
  check_compatible(*this, other);
  std::vector<Term> cross;
  cross.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_)
      cross.push_back({Monomial::product(a.mono, b.mono), field_.mul(a.coeff, b.coeff)});
  return from_terms(field_, order_, std::move(cross));
}

Polynomial Polynomial::scaled(uint8_t c) const {
  Polynomial out(field_, order_);
  c = static_cast<uint8_t>(c % field_.p());
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono, field_.mul(t.coeff, c)});
  return out;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidInput, "negative power");
  Polynomial result = constant(field_, order_, 1);
  for (int i = 0; i < k; ++i) result = result.times(*this);
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(field_.inv(leading().coeff));
}

Polynomial Polynomial::frobenius(int k) const {
  Polynomial out(field_, order_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.mono.power(k), t.coeff});
  return out;
}

Polynomial Polynomial::reordered(MonomialOrder order) const {
  std::vector<Term> copy = terms_;
  return from_terms(field_, order, std::move(copy));
}

std::string Polynomial::to_string(const std::function<std::string(int)>& name,
                                  const std::vector<int>& print_order) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono = monomial_to_string(t.mono, order_.nvars, name, print_order);
    if (t.coeff != 1) {
      out += std::to_string(t.coeff);
      if (mono != "1") out += '*' + mono;
    } else {
      out += mono;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return a.plus(b); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a.minus(b); }
Polynomial operator*(const Polynomial& a, const Polynomial& b) { return a.times(b); }

}  // namespace wc
