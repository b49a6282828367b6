#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "burchlab/burch.hpp"

namespace burchlab {

/// Random instance families used by the property suites and `burchlab random`.
enum class Family {
  kJn,         // J n ideals: index = n
  kFibre,      // fibre products: index is additive
  kTorind,     // sums in disjoint variables: index 0
  kPoints,     // generic points in the plane
  kDim2,       // m-primary ideals of k[x,y]: index = min(lin_1, 2)
  kMainthm,    // index >= 2 rings: k-summands at some i <= 5 and all i in 7..9
  kExtension,  // adjoining z together with the generator z keeps the index
};

std::optional<Family> parse_family(std::string_view name);
std::string family_name(Family family);

struct FamilyOptions {
  std::uint32_t characteristic = 101;
  std::size_t points = 5;         // kPoints
  std::size_t linear_trials = 20;  // sampled linear forms for positive depth
  int steps = 9;                   // kMainthm
};

struct TrialResult {
  bool passed = false;
  /// One human-readable line: what was generated and what was observed.
  std::string line;
  /// Session text reproducing the instance (filled for failures).
  std::string session;
  /// Every Burch report computed in the trial, for the index bound check.
  std::vector<BurchReport> reports;
};

/// Runs trial t with the generator seeded from (seed, t).
TrialResult run_trial(Family family, std::uint64_t seed, std::size_t trial, const FamilyOptions& options = {});

/// Engine for per-trial randomness: a Mersenne twister seeded from (seed, trial).
std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial);

/// Random homogeneous form of the given degree with 1..max_terms monomials.
Polynomial random_form(const Ring& ring, int degree, std::size_t max_terms, std::mt19937_64& rng);

/// Ideal of d random points of P^2 whose Hilbert function is the generic one
/// min(binom(t+2, 2), d); resamples until it is. ring must have 3 variables.
IdealHandle generic_points_ideal(const Ring& ring, std::size_t d, std::mt19937_64& rng);
/// Hilbert function value of S/I in degree t (I with a Groebner basis).
std::uint64_t hilbert_function(const IdealHandle& ideal, int degree);
/// Burch index of d > 1 generic points of P^2.
std::size_t expected_points_index(std::size_t d);

/// Session file text declaring the ring, an ideal I, and optionally the
/// quotient R = S/I with a cyclic module M = R/(relation).
std::string session_text(const IdealHandle& ideal, const std::optional<Polynomial>& relation = std::nullopt);

}  // namespace burchlab
