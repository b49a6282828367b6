#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>

namespace burchlab {

/// Exponent vector with inline storage. Rings carry at most kMaxVariables
/// variables so monomials never allocate.
class Monomial {
 public:
  static constexpr std::size_t kMaxVariables = 16;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<int> exponents);
  explicit Monomial(std::span<const int> exponents);

  static Monomial variable(std::size_t nvars, std::size_t index);

  std::size_t size() const { return size_; }
  int degree() const { return degree_; }
  int operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, int e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  /// True when no variable occurs in both.
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.size_ == b.size_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVariables> exps_{};
  std::uint8_t size_ = 0;
  int degree_ = 0;
};

/// Graded reverse lexicographic comparison: -1, 0 or 1.
/// Throws RingMismatch when the variable counts differ.
int grevlex_compare(const Monomial& a, const Monomial& b);

/// Same as grevlex_compare without the size check, for hot loops.
inline int grevlex_compare_unchecked(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace burchlab
