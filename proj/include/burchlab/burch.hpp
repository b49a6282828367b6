#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burchlab/resolution.hpp"

namespace burchlab {

struct DepthReport {
  int projdim = 0;
  int depth = 0;
};

/// depth S/I = n - projdim_S(S/I).
DepthReport depth_of_quotient(const IdealHandle& ideal);
/// Depth from the resolution over S; modules over S/I are viewed as S-modules.
DepthReport depth_of_module(const ModulePresentation& m);

/// I n : (I : n). Throws ZeroIdeal for I = 0.
IdealHandle burch_ideal(const IdealHandle& ideal);

enum class BurchMethod { kExact, kSampled };

struct BurchReport {
  explicit BurchReport(IdealHandle input) : ideal(std::move(input)) {}

  IdealHandle ideal;
  int depth = 0;
  /// BI of the ideal (exact method) or of the reduced witness ideal (sampled).
  std::optional<IdealHandle> burch_ideal;
  std::size_t index = 0;
  BurchMethod method = BurchMethod::kExact;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  /// Linear forms of the best regular sequence (sampled method only).
  std::vector<Polynomial> witness;
  std::size_t accepted_trials = 0;
  /// The socle-degree criterion fired.
  bool shortcut = false;
  /// Why the index is 0 by convention, if it is.
  std::string note;

  /// `burch.index=`, `burch.method=`, `burch.bi=`, `depth=` lines.
  std::string serialize() const;
};

/// Exact index for depth 0; 0 by convention for I = 0 or positive depth.
BurchReport burch_index_depth0(const IdealHandle& ideal);

/// Depth 0: as burch_index_depth0. Positive depth: the best index over
/// `trials` random linear regular sequences of length depth, reducing to the
/// complementary variables. Throws RegularSequenceNotFound if no trial works.
BurchReport burch_index_graded(const IdealHandle& ideal, std::size_t trials = 20, std::uint64_t seed = 0);

/// n when the lowest generator degree of I : m is below that of I.
std::optional<std::size_t> socle_degree_criterion(const IdealHandle& ideal);

/// Image of I in the polynomial ring on the variables outside the pivots of
/// the given independent linear forms, after eliminating the pivots through
/// the forms. Exposed for tests.
IdealHandle reduce_by_linear_forms(const IdealHandle& ideal, const std::vector<Polynomial>& forms);

}  // namespace burchlab
