#pragma once

#include <optional>
#include <vector>

#include "burchlab/ideal.hpp"

namespace burchlab {

/// Graded submodule of the free module S^r with generator degrees `shifts`.
struct SubmodulePresentation {
  Ring ring;
  std::vector<int> shifts;
  std::vector<VectorPolynomial> generators;

  std::size_t rank() const { return shifts.size(); }
  /// Degree of each generator; throws NotHomogeneous for a bad generator.
  std::vector<int> generator_degrees() const;
  GroebnerBasis gb() const;
  bool contains(const VectorPolynomial& v) const { return gb().member(v); }
};

/// Module coker(A) over S or over R = S/I, where A : ⊕ S(-d_j) -> F = ⊕ S(-shift_i)
/// is given by columns lifted to S.
class ModulePresentation {
 public:
  ModulePresentation(Ring ring, std::optional<IdealHandle> quotient, std::vector<int> target_shifts,
                     std::vector<VectorPolynomial> columns);

  /// R/(f_1, ..., f_k) with R = S/I (quotient) or S (no quotient).
  static ModulePresentation cyclic(const Ring& ring, std::optional<IdealHandle> quotient,
                                   const std::vector<Polynomial>& relations);
  /// The ideal I itself as an S-module, presented by the syzygies of its
  /// minimal generators.
  static ModulePresentation from_ideal(const IdealHandle& ideal);

  const Ring& ring() const { return ring_; }
  const std::optional<IdealHandle>& quotient() const { return quotient_; }
  bool over_quotient() const { return quotient_.has_value() && !quotient_->is_zero(); }
  std::size_t rank() const { return target_shifts_.size(); }
  const std::vector<int>& target_shifts() const { return target_shifts_; }
  const std::vector<VectorPolynomial>& columns() const { return columns_; }
  const std::vector<int>& source_shifts() const { return source_shifts_; }
  /// Set once unit entries are gone and the columns minimally generate.
  bool minimal() const { return minimal_; }
  void mark_minimal() { minimal_ = true; }

 private:
  Ring ring_;
  std::optional<IdealHandle> quotient_;
  std::vector<int> target_shifts_;
  std::vector<VectorPolynomial> columns_;
  std::vector<int> source_shifts_;
  bool minimal_ = false;
};

/// Intersection of two submodules of the same free module.
SubmodulePresentation submodule_intersection(const SubmodulePresentation& a, const SubmodulePresentation& b);

/// { v in F : J v ⊆ U }.
SubmodulePresentation submodule_colon_ideal(const SubmodulePresentation& u, const IdealHandle& j);

struct SocleResult {
  /// Generators of (U :_F m), U = im A + I F; their classes span soc(M).
  SubmodulePresentation socle;
  /// k is a direct summand of M.
  bool has_k_summand = false;
};

SocleResult socle_module(const ModulePresentation& m);

/// Smallest subset of the generators spanning the same submodule together
/// with extra (which is not counted), chosen degree by degree.
std::vector<std::size_t> minimal_generator_indices(const Ring& ring, const std::vector<int>& shifts,
                                                   const std::vector<VectorPolynomial>& generators,
                                                   const std::vector<VectorPolynomial>& extra = {});

/// The generators g e_i (g in I, e_i a basis vector of the free module).
std::vector<VectorPolynomial> ideal_times_free(const IdealHandle& ideal, std::size_t rank);

}  // namespace burchlab
