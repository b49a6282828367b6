#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "burchlab/field.hpp"
#include "burchlab/monomial.hpp"

namespace burchlab {

inline constexpr int kDefaultDegreeCap = 30;

/// The polynomial ring S = GF(p)[x_1..x_n], graded by total degree.
/// The degree cap travels with the ring: any intermediate monomial above it
/// aborts the computation with DegreeCapExceeded.
class RingDescriptor {
 public:
  RingDescriptor(std::uint32_t characteristic, std::vector<std::string> variables,
                 int degree_cap = kDefaultDegreeCap);

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t nvars() const { return variables_.size(); }
  int degree_cap() const { return degree_cap_; }

  /// Index of a variable name, or -1.
  int variable_index(const std::string& name) const;
  void check_degree(int degree) const;

  /// Same field and variables; the cap is a resource setting, not part of the ring.
  bool same_ring(const RingDescriptor& other) const {
    return field_ == other.field_ && variables_ == other.variables_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> variables_;
  int degree_cap_;
};

using Ring = std::shared_ptr<const RingDescriptor>;

Ring make_ring(std::uint32_t characteristic, std::vector<std::string> variables,
               int degree_cap = kDefaultDegreeCap);

/// Same ring with a different degree cap.
Ring with_degree_cap(const Ring& ring, int degree_cap);

/// Throws RingMismatch unless both rings agree.
void require_same_ring(const Ring& a, const Ring& b);

bool valid_variable_name(const std::string& name);

}  // namespace burchlab
