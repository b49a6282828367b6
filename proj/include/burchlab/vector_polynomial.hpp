#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burchlab/polynomial.hpp"

namespace burchlab {

/// Element of a free module S^r. Graded structure (generator degrees) is kept
/// by the owner of the free module and passed in where degrees matter.
class VectorPolynomial {
 public:
  VectorPolynomial(Ring ring, std::size_t rank);
  explicit VectorPolynomial(std::vector<Polynomial> entries);

  static VectorPolynomial unit(const Ring& ring, std::size_t rank, std::size_t index);
  static VectorPolynomial from_polynomial(const Polynomial& f) { return VectorPolynomial({f}); }

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return entries_.size(); }
  const std::vector<Polynomial>& entries() const { return entries_; }
  const Polynomial& operator[](std::size_t i) const { return entries_[i]; }
  void set(std::size_t i, Polynomial f);
  bool is_zero() const;

  VectorPolynomial operator+(const VectorPolynomial& v) const;
  VectorPolynomial operator-(const VectorPolynomial& v) const;
  VectorPolynomial scaled(FieldElement c) const;
  VectorPolynomial times(const Polynomial& f) const;

  /// The common degree deg(entry_i) + shifts[i] of all terms, or nullopt when
  /// the vector is zero or not homogeneous for these shifts.
  std::optional<int> homogeneous_degree(const std::vector<int>& shifts) const;

  friend bool operator==(const VectorPolynomial& a, const VectorPolynomial& b);

  std::string to_string() const;

 private:
  Ring ring_;
  std::vector<Polynomial> entries_;
};

}  // namespace burchlab
