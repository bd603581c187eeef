#pragma once

#include <cstdint>

#include "wc/errors.hpp"

namespace wc {

/// Arithmetic in F_p for a small prime p. Elements are plain uint8_t
/// residues in 0..p-1; this class carries the modulus and the operations.
class PrimeField {
 public:
  explicit PrimeField(int p) : p_(static_cast<uint8_t>(p)) {
    if (p < 2 || p > 31) throw Error(ErrorCode::InvalidInput, "field characteristic out of range");
    for (int d = 2; d * d <= p; ++d)
      if (p % d == 0) throw Error(ErrorCode::InvalidInput, "field characteristic must be prime");
  }

  int p() const { return p_; }

  uint8_t add(uint8_t a, uint8_t b) const {
    int s = a + b;
    return static_cast<uint8_t>(s >= p_ ? s - p_ : s);
  }
  uint8_t sub(uint8_t a, uint8_t b) const {
    int s = a - b;
    return static_cast<uint8_t>(s < 0 ? s + p_ : s);
  }
  uint8_t neg(uint8_t a) const { return a == 0 ? 0 : static_cast<uint8_t>(p_ - a); }
  uint8_t mul(uint8_t a, uint8_t b) const { return static_cast<uint8_t>(a * b % p_); }
  uint8_t pow(uint8_t a, unsigned e) const {
    uint8_t r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint8_t inv(uint8_t a) const {
    if (a == 0) throw Error(ErrorCode::InvalidInput, "division by zero in F_p");
    return pow(a, static_cast<unsigned>(p_ - 2));
  }
  uint8_t from_int(long long v) const {
    long long r = v % p_;
    if (r < 0) r += p_;
    return static_cast<uint8_t>(r);
  }

  bool operator==(const PrimeField&) const = default;

 private:
  uint8_t p_;
};

}  // namespace wc
