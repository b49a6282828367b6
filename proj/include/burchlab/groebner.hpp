#pragma once

#include <cstdint>
#include <vector>

#include "burchlab/vector_polynomial.hpp"

namespace burchlab {

struct ModuleTerm {
  FieldElement coef;
  Monomial mono;
  std::uint32_t comp;
};

/// Monomial order on S^r: components are grouped into blocks (block 0 beats
/// block 1 regardless of the monomial), then shifted degree, then grevlex on
/// the monomial, then the smaller component index wins. With zero shifts and
/// one block this is plain term-over-position grevlex.
class ModuleOrder {
 public:
  explicit ModuleOrder(std::size_t rank);
  ModuleOrder(std::vector<int> shifts, std::vector<int> blocks);

  std::size_t rank() const { return shifts_.size(); }
  const std::vector<int>& shifts() const { return shifts_; }
  const std::vector<int>& blocks() const { return blocks_; }
  int shifted_degree(const Monomial& m, std::uint32_t comp) const { return m.degree() + shifts_[comp]; }

  /// -1, 0, 1.
  int compare(const Monomial& a, std::uint32_t ca, const Monomial& b, std::uint32_t cb) const {
    if (blocks_[ca] != blocks_[cb]) return blocks_[ca] < blocks_[cb] ? 1 : -1;
    int da = a.degree() + shifts_[ca], db = b.degree() + shifts_[cb];
    if (da != db) return da > db ? 1 : -1;
    int c = grevlex_compare_unchecked(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? 1 : -1;
    return 0;
  }

 private:
  std::vector<int> shifts_;
  std::vector<int> blocks_;
};

/// Terms sorted strictly descending in a ModuleOrder.
using FlatVector = std::vector<ModuleTerm>;

/// Reduced Groebner basis of a submodule of S^r (r = 1 for ideals).
/// Immutable once built.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, ModuleOrder order, std::vector<FlatVector> basis);

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return order_.rank(); }
  const ModuleOrder& order() const { return order_; }
  std::size_t size() const { return basis_.size(); }
  bool is_zero() const { return basis_.empty(); }
  const std::vector<FlatVector>& flat() const { return basis_; }

  std::vector<VectorPolynomial> generators() const;
  /// Rank-1 convenience.
  std::vector<Polynomial> polynomials() const;

  VectorPolynomial normal_form(const VectorPolynomial& f) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool member(const VectorPolynomial& f) const { return normal_form(f).is_zero(); }
  bool member(const Polynomial& f) const { return normal_form(f).is_zero(); }

  FlatVector normal_form_flat(FlatVector f) const;

  /// Same submodule (reduced bases are unique).
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  const FlatVector* find_reducer(const Monomial& m, std::uint32_t comp) const;

  Ring ring_;
  ModuleOrder order_;
  std::vector<FlatVector> basis_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

FlatVector to_flat(const VectorPolynomial& v, const ModuleOrder& order);
VectorPolynomial from_flat(const FlatVector& v, const Ring& ring, std::size_t rank);

/// Reduced Groebner basis of the submodule generated by gens. An empty list
/// yields the zero basis. Throws DegreeCapExceeded when an S-pair passes the
/// ring's cap.
GroebnerBasis buchberger(const Ring& ring, const std::vector<VectorPolynomial>& gens, const ModuleOrder& order);
GroebnerBasis buchberger(const Ring& ring, const std::vector<VectorPolynomial>& gens, std::size_t rank);
GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens);

/// Generators of { c in S^m : sum c_i v_i = 0 } by elimination on the graph
/// module {(v_i, e_i)}. shifts are the generator degrees of the ambient free
/// module; inputs must be homogeneous for them. Every returned syzygy is
/// checked by substitution.
std::vector<VectorPolynomial> syzygies(const std::vector<VectorPolynomial>& vectors, const std::vector<int>& shifts);
std::vector<VectorPolynomial> syzygies(const std::vector<Polynomial>& polys);

}  // namespace burchlab
