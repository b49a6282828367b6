#include "burchlab/field.hpp"

#include <string>

#include "burchlab/errors.hpp"

namespace burchlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw ArithmeticError("characteristic " + std::to_string(p) + " is not a supported prime");
}

FieldElement PrimeField::from_integer(std::int64_t value) const {
  std::int64_t r = value % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.residue == 0) throw ArithmeticError("inverse of zero in GF(" + std::to_string(p_) + ")");
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a.residue;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return from_integer(t);
}

std::int64_t PrimeField::symmetric(FieldElement a) const {
  if (a.residue > p_ / 2) return static_cast<std::int64_t>(a.residue) - p_;
  return a.residue;
}

}  // namespace burchlab
