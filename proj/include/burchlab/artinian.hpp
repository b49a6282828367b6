#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "burchlab/ideal.hpp"
#include "burchlab/sparse.hpp"

namespace burchlab {

/// R = S/I of finite length, as a graded vector space with the standard
/// monomials of I as basis and multiplication by each variable tabulated.
class ArtinianRing {
 public:
  /// Throws NotArtinian when S/I has infinite length.
  explicit ArtinianRing(IdealHandle ideal);

  const Ring& ring() const { return ideal_.ring(); }
  const IdealHandle& ideal() const { return ideal_; }
  const PrimeField& field() const { return ring()->field(); }
  std::size_t nvars() const { return ring()->nvars(); }
  int top_degree() const { return static_cast<int>(basis_.size()) - 1; }
  std::size_t dim(int degree) const {
    return degree < 0 || degree > top_degree() ? 0 : basis_[static_cast<std::size_t>(degree)].size();
  }
  std::size_t length() const;
  const Monomial& basis_monomial(int degree, std::size_t index) const {
    return basis_[static_cast<std::size_t>(degree)][index];
  }
  std::optional<std::uint32_t> index_of(const Monomial& m) const;

  /// x_v times basis element (degree, index), in degree + 1 coordinates.
  const SparseVec& times_variable(int degree, std::size_t index, std::size_t var) const {
    return mult_[static_cast<std::size_t>(degree)][index * nvars() + var];
  }
  /// For each basis monomial of positive degree: a variable v with m / x_v
  /// standard, and the index of m / x_v.
  std::pair<std::size_t, std::uint32_t> predecessor(int degree, std::size_t index) const {
    return pred_[static_cast<std::size_t>(degree)][index];
  }
  /// Basis of the socle piece soc(R)_degree.
  const std::vector<SparseVec>& socle(int degree) const { return socle_[static_cast<std::size_t>(degree)]; }

  /// Coordinates of the residue of a homogeneous polynomial in R_deg.
  SparseVec coordinates(const Polynomial& f) const;
  Polynomial polynomial(int degree, const SparseVec& coords) const;

 private:
  IdealHandle ideal_;
  std::vector<std::vector<Monomial>> basis_;
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
  std::vector<std::vector<SparseVec>> mult_;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> pred_;
  std::vector<std::vector<SparseVec>> socle_;
};

/// Graded free R-module with generator degrees; the degree-e piece has the
/// coordinates (j, b) for b a basis index of R_{e - d_j}, blocks in order of j.
class GradedFreeModule {
 public:
  GradedFreeModule(const ArtinianRing& ring, std::vector<int> degrees);

  std::size_t rank() const { return degrees_.size(); }
  const std::vector<int>& degrees() const { return degrees_; }
  int min_degree() const { return min_; }
  int max_degree() const { return max_; }  // highest nonzero graded piece
  std::size_t dim(int e) const;
  std::uint32_t offset(int e, std::size_t gen) const;
  /// Generator owning a coordinate of the degree-e piece.
  std::size_t generator_of(int e, std::uint32_t coord) const;

  /// x_var * v for v in degree e.
  SparseVec times_variable(int e, const SparseVec& v, std::size_t var) const;
  /// Socle of the degree-e piece, as vectors.
  std::vector<SparseVec> socle(int e) const;

 private:
  const std::vector<std::uint32_t>& offsets(int e) const { return offsets_[static_cast<std::size_t>(e - min_)]; }

  const ArtinianRing* ring_;
  std::vector<int> degrees_;
  int min_ = 0;
  int max_ = -1;
  std::vector<std::vector<std::uint32_t>> offsets_;  // per degree: rank + 1 prefix sums
};

/// A homogeneous element of a graded free module.
struct GradedElement {
  int degree;
  SparseVec coords;
};

/// Outcome of analysing a graded submodule U of a free module.
struct SubmoduleAnalysis {
  /// Minimal generators of U. When socle splitting was requested the first
  /// k_summands of them are socle elements outside mU, each spanning a copy
  /// of k that is a direct summand of U.
  std::vector<GradedElement> generators;
  std::size_t k_summands = 0;
  /// soc(U) is not contained in mU, i.e. k is a direct summand of U.
  bool has_k_summand = false;
  /// dim_k U_e by degree, starting at dims_from.
  int dims_from = 0;
  std::vector<std::size_t> dims;
  /// Number of exactness checks that ran (one per emitted kernel generator).
  std::size_t exactness_checks = 0;
};

/// Minimal generators of the submodule spanned by the given elements of F.
SubmoduleAnalysis analyze_image(const ArtinianRing& ring, const GradedFreeModule& target,
                                const std::vector<GradedElement>& spanning, bool split_socle);

/// Minimal generators of ker(phi) for phi : source -> target sending the
/// j-th generator to columns[j]. image_dims (optional) are the dimensions of
/// im(phi) by degree, indexed from image_dims_from, which lets degrees
/// without new generators skip the nullspace computation.
SubmoduleAnalysis analyze_kernel(const ArtinianRing& ring, const GradedFreeModule& source,
                                 const GradedFreeModule& target, const std::vector<GradedElement>& columns,
                                 bool split_socle, const std::vector<std::size_t>* image_dims = nullptr,
                                 int image_dims_from = 0);

/// Socle criterion for a cokernel F/U given by spanning elements of U: k is a
/// direct summand of F/U iff some element of (U :_F m) lies outside mF + U.
bool cokernel_has_k_summand(const ArtinianRing& ring, const GradedFreeModule& target,
                            const std::vector<GradedElement>& spanning);

}  // namespace burchlab
