#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "burchlab/groebner.hpp"

namespace burchlab {

/// Homogeneous ideal of S given by generators, with its reduced Groebner
/// basis computed on first use. Copies share the cache.
class IdealHandle {
 public:
  /// Zero generators are dropped; non-homogeneous generators throw NotHomogeneous.
  IdealHandle(Ring ring, std::vector<Polynomial> generators);

  static IdealHandle zero(const Ring& ring) { return IdealHandle(ring, {}); }
  /// The homogeneous maximal ideal (x_1, ..., x_n).
  static IdealHandle maximal(const Ring& ring);
  static IdealHandle from_strings(const Ring& ring, const std::vector<std::string>& generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const;

  const GroebnerBasis& gb() const;

  bool contains(const Polynomial& f) const { return gb().member(f); }
  bool contains(const IdealHandle& other) const;
  friend bool operator==(const IdealHandle& a, const IdealHandle& b) { return a.gb() == b.gb(); }

  /// Lowest degree of a nonzero element; -1 for the zero ideal.
  int min_generator_degree() const;

  /// Generators printed as "(f, g, ...)"; uses the reduced basis when reduced is set.
  std::string to_string(bool reduced = false) const;

 private:
  struct Cache {
    std::once_flag once;
    std::optional<GroebnerBasis> gb;
  };

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b);
IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b);
/// { c : c*g in I }.
IdealHandle ideal_colon(const IdealHandle& ideal, const Polynomial& g);
/// { c : c*J in I }; throws ZeroColonDivisor when J = 0.
IdealHandle ideal_colon(const IdealHandle& ideal, const IdealHandle& divisor);

/// Number of standard monomials of S/J; nullopt when S/J has infinite length.
std::optional<std::uint64_t> quotient_dimension(const IdealHandle& ideal);
/// Standard monomials grouped by degree (index = degree). Throws NotArtinian
/// when the staircase is unbounded.
std::vector<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb, std::size_t nvars);
/// dim_k of the degree-1 piece of J.
std::size_t linear_part_dimension(const IdealHandle& ideal);

}  // namespace burchlab
