#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wc/errors.hpp"

namespace wc {

/// Exponent vector with a cached total degree. Slots beyond the ambient
/// ring's variable count stay zero, so arithmetic can run over the full
/// fixed-size array. Degrees in this workload stay far below 255.
class Monomial {
 public:
  static constexpr int kMaxVars = 16;

  Monomial() = default;

  uint8_t exp(int var) const { return e_[var]; }
  int total_degree() const { return deg_; }
  bool is_one() const { return deg_ == 0; }

  void set_exp(int var, int value) {
    if (var < 0 || var >= kMaxVars) throw Error(ErrorCode::InvalidInput, "variable index out of range");
    if (value < 0 || value > 255) throw Error(ErrorCode::InvalidInput, "exponent out of range");
    deg_ += value - e_[var];
    e_[var] = static_cast<uint8_t>(value);
  }

  static Monomial variable(int var, int exponent = 1) {
    Monomial m;
    m.set_exp(var, exponent);
    return m;
  }

  static Monomial product(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = a.e_[i] + b.e_[i];
      if (s > 255) throw Error(ErrorCode::InvalidInput, "exponent overflow");
      m.e_[i] = static_cast<uint8_t>(s);
    }
    m.deg_ = a.deg_ + b.deg_;
    return m;
  }

  /// this | other
  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }

  /// other / this; requires divisibility.
  Monomial quotient_of(const Monomial& other) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      if (e_[i] > other.e_[i]) throw Error(ErrorCode::DivisionNotExact, "monomial not divisible");
      m.e_[i] = static_cast<uint8_t>(other.e_[i] - e_[i]);
    }
    m.deg_ = other.deg_ - deg_;
    return m;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial m;
    int deg = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      m.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
      deg += m.e_[i];
    }
    m.deg_ = deg;
    return m;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kMaxVars; ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  /// Multiplies every exponent by k (the Frobenius action on monomials).
  Monomial power(int k) const {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      int s = e_[i] * k;
      if (s > 255) throw Error(ErrorCode::InvalidInput, "exponent overflow");
      m.e_[i] = static_cast<uint8_t>(s);
    }
    m.deg_ = deg_ * k;
    return m;
  }

  bool operator==(const Monomial&) const = default;

 private:
  std::array<uint8_t, kMaxVars> e_{};
  int deg_ = 0;
};

/// Term orders. Block puts the last variable (the elimination tag) first
/// lexicographically and orders the remaining block by degrevlex.
struct MonomialOrder {
  enum class Kind : uint8_t { Degrevlex, Lex, Block };

  Kind kind = Kind::Degrevlex;
  int nvars = 0;

  /// Negative when a < b, zero when equal, positive when a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::Lex: {
        for (int i = 0; i < nvars; ++i)
          if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? -1 : 1;
        return 0;
      }
      case Kind::Degrevlex:
        return degrevlex(a, b, nvars);
      case Kind::Block: {
        int t = nvars - 1;
        if (a.exp(t) != b.exp(t)) return a.exp(t) < b.exp(t) ? -1 : 1;
        return degrevlex(a, b, t);
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const MonomialOrder&) const = default;

 private:
  static int degrevlex(const Monomial& a, const Monomial& b, int upto) {
    int da = 0, db = 0;
    for (int i = 0; i < upto; ++i) {
      da += a.exp(i);
      db += b.exp(i);
    }
    if (da != db) return da < db ? -1 : 1;
    for (int i = upto - 1; i >= 0; --i)
      if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    return 0;
  }
};

/// Renders a monomial with the given variable-name callback, "1" when empty.
/// `print_order`, when nonempty, lists the variable indices in the order
/// their factors should appear.
std::string monomial_to_string(const Monomial& m, int nvars,
                               const std::function<std::string(int)>& name,
                               const std::vector<int>& print_order = {});

}  // namespace wc
