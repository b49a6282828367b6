#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burchlab/errors.hpp"
#include "burchlab/module.hpp"

namespace burchlab {

/// Nonzero entries of a matrix column as (row, entry), rows increasing.
using SparseColumn = std::vector<std::pair<std::uint32_t, Polynomial>>;

SparseColumn sparse_column(const VectorPolynomial& v);

/// Graded map ⊕ S(-source_shifts) -> ⊕ S(-target_shifts), columns lifted to S.
/// Columns are sparse: late syzygy matrices have thousands of rows.
struct FreeMap {
  std::vector<int> target_shifts;
  std::vector<int> source_shifts;
  std::vector<SparseColumn> columns;

  std::size_t source_rank() const { return source_shifts.size(); }
  std::size_t target_rank() const { return target_shifts.size(); }
  VectorPolynomial column(const Ring& ring, std::size_t j) const;
  std::vector<VectorPolynomial> dense_columns(const Ring& ring) const;
};

class BettiTable {
 public:
  void set(int i, int j, std::size_t value);
  std::size_t at(int i, int j) const;
  /// Total rank of the i-th free module.
  std::size_t total(int i) const;
  int steps() const { return steps_; }
  void set_steps(int steps) { steps_ = steps; }
  const std::map<std::pair<int, int>, std::size_t>& entries() const { return values_; }

  /// Staircase layout: row r holds beta_{i, i + r}.
  std::string to_human() const;
  /// One `beta.i.j=value` line per nonzero entry.
  std::string to_machine() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, std::size_t> values_;
  int steps_ = 0;
};

/// Minimal differentials d_1, ..., d_n of a resolution (d_i : F_i -> F_{i-1}).
struct ResolutionSlice {
  Ring ring;
  std::optional<IdealHandle> quotient;
  std::vector<FreeMap> differentials;
  /// Over S, set when the resolution closed (projdim = number of nonzero maps).
  std::optional<int> projdim;
  BettiTable betti;
};

/// Cap hit while resolving; carries the maps computed before the failure.
class ResolutionCapExceeded : public DegreeCapExceeded {
 public:
  ResolutionCapExceeded(const DegreeCapExceeded& cause, ResolutionSlice partial)
      : DegreeCapExceeded(cause), partial_(std::move(partial)) {}
  const ResolutionSlice& partial() const { return partial_; }

 private:
  ResolutionSlice partial_;
};

/// Kernel of A over S (a generating set, not necessarily minimal), as a
/// presentation of the kernel submodule with target = source of A.
ModulePresentation kernel_over_S(const ModulePresentation& a);
/// Kernel of A over R = S/I computed by lifting: syzygies of [A | I F],
/// projected to the A block and reduced modulo I.
ModulePresentation kernel_over_R(const ModulePresentation& a);

/// Removes unit entries by pivoting on the unit with lexicographically
/// smallest (row, column); the cokernel is unchanged up to isomorphism.
ModulePresentation minimalize(const ModulePresentation& p);

/// Minimal resolution of coker(A) up to `steps` maps. Over S stops when the
/// kernel vanishes. Artinian quotients use graded linear algebra; other
/// quotients go through lifted Groebner bases.
ResolutionSlice resolve(const ModulePresentation& m, int steps);
/// Same, always through Groebner bases (the lifting route).
ResolutionSlice resolve_by_lifting(const ModulePresentation& m, int steps);

/// Checks d_i d_{i+1} = 0 (modulo I) and that every entry lies in m;
/// throws InvariantViolation otherwise.
void check_resolution(const ResolutionSlice& slice);

/// Ideal of S generated by the entries of a matrix, plus I over R = S/I; the
/// unit ideal when there are no columns.
IdealHandle entries_ideal(const Ring& ring, const std::optional<IdealHandle>& quotient, const FreeMap& map);
IdealHandle entries_ideal(const ModulePresentation& m);

/// lin_i for i = 1..steps: the dimension of the linear forms among the
/// entries of d_i (taken modulo I over a quotient).
std::vector<std::size_t> lin_profile(const ModulePresentation& m, int steps);

/// Entry i-1: whether k is a direct summand of syz_i(M), i = 1..steps.
/// Requires an Artinian quotient (NotArtinian otherwise).
std::vector<bool> summand_profile(const ModulePresentation& m, int steps);

}  // namespace burchlab
