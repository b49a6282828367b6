#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burchlab/ring.hpp"

namespace burchlab {

struct Term {
  FieldElement coef;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly descending in grevlex,
/// no zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(Ring ring);
  /// Canonicalizes: sorts, merges equal monomials, drops zeros.
  Polynomial(Ring ring, std::vector<Term> terms);

  static Polynomial constant(const Ring& ring, FieldElement c);
  static Polynomial variable(const Ring& ring, std::size_t index);
  static Polynomial monomial(const Ring& ring, FieldElement c, const Monomial& m);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Term& leading_term() const { return terms_.front(); }
  bool is_homogeneous() const;
  /// Degree of the leading term; -1 for zero.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  bool is_constant() const { return terms_.empty() || terms_.front().mono.is_one(); }

  Polynomial operator+(const Polynomial& q) const;
  Polynomial operator-(const Polynomial& q) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& q) const;
  Polynomial scaled(FieldElement c) const;
  Polynomial times_monomial(FieldElement c, const Monomial& m) const;
  /// Leading coefficient made 1; zero stays zero.
  Polynomial monic() const;

  /// Substitutes images[i] for variable i; images live in the target ring.
  Polynomial substitute(const std::vector<Polynomial>& images, const Ring& target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

 private:
  void check_canonical() const;

  Ring ring_;
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& f);

}  // namespace burchlab
