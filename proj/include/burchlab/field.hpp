#pragma once

#include <compare>
#include <cstdint>

namespace burchlab {

/// Residue class in Z/p, always stored reduced.
struct FieldElement {
  std::uint32_t residue = 0;

  constexpr bool is_zero() const { return residue == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Arithmetic in the prime field Z/p for 2 <= p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  FieldElement from_integer(std::int64_t value) const;
  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }

  FieldElement add(FieldElement a, FieldElement b) const {
    std::uint32_t s = a.residue + b.residue;
    return {s >= p_ ? s - p_ : s};
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return {a.residue >= b.residue ? a.residue - b.residue : a.residue + p_ - b.residue};
  }
  FieldElement neg(FieldElement a) const { return {a.residue == 0 ? 0 : p_ - a.residue}; }
  FieldElement mul(FieldElement a, FieldElement b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.residue) * b.residue % p_)};
  }
  /// Throws ArithmeticError for a == 0.
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

  /// Symmetric representative in (-p/2, p/2], used by the printer.
  std::int64_t symmetric(FieldElement a) const;

  friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace burchlab
