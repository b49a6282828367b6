#include "burchlab/vector_polynomial.hpp"

#include "burchlab/errors.hpp"

namespace burchlab {

VectorPolynomial::VectorPolynomial(Ring ring, std::size_t rank)
    : ring_(std::move(ring)), entries_(rank, Polynomial(ring_)) {}

VectorPolynomial::VectorPolynomial(std::vector<Polynomial> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw RankMismatch("a vector needs at least one entry; use the rank constructor");
  ring_ = entries_.front().ring();
  for (const auto& e : entries_) require_same_ring(ring_, e.ring());
}

VectorPolynomial VectorPolynomial::unit(const Ring& ring, std::size_t rank, std::size_t index) {
  VectorPolynomial v(ring, rank);
  v.entries_.at(index) = Polynomial::constant(ring, ring->field().one());
  return v;
}

void VectorPolynomial::set(std::size_t i, Polynomial f) {
  require_same_ring(ring_, f.ring());
  entries_.at(i) = std::move(f);
}

bool VectorPolynomial::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

VectorPolynomial VectorPolynomial::operator+(const VectorPolynomial& v) const {
  if (rank() != v.rank()) throw RankMismatch();
  VectorPolynomial r(*this);
  for (std::size_t i = 0; i < rank(); ++i) r.entries_[i] = entries_[i] + v.entries_[i];
  return r;
}

VectorPolynomial VectorPolynomial::operator-(const VectorPolynomial& v) const {
  if (rank() != v.rank()) throw RankMismatch();
  VectorPolynomial r(*this);
  for (std::size_t i = 0; i < rank(); ++i) r.entries_[i] = entries_[i] - v.entries_[i];
  return r;
}

VectorPolynomial VectorPolynomial::scaled(FieldElement c) const {
  VectorPolynomial r(*this);
  for (auto& e : r.entries_) e = e.scaled(c);
  return r;
}

VectorPolynomial VectorPolynomial::times(const Polynomial& f) const {
  VectorPolynomial r(*this);
  for (auto& e : r.entries_) e = e * f;
  return r;
}

std::optional<int> VectorPolynomial::homogeneous_degree(const std::vector<int>& shifts) const {
  if (shifts.size() != rank()) throw RankMismatch("shift vector length differs from rank");
  std::optional<int> degree;
  for (std::size_t i = 0; i < rank(); ++i) {
    const auto& e = entries_[i];
    if (e.is_zero()) continue;
    if (!e.is_homogeneous()) return std::nullopt;
    int d = e.degree() + shifts[i];
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

bool operator==(const VectorPolynomial& a, const VectorPolynomial& b) {
  return a.entries_.size() == b.entries_.size() && a.entries_ == b.entries_;
}

std::string VectorPolynomial::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) s += ", ";
    s += entries_[i].to_string();
  }
  return s + ")";
}

}  // namespace burchlab
