#pragma once

#include <cstdint>
#include <vector>

#include "burchlab/field.hpp"

namespace burchlab {

struct SparseEntry {
  std::uint32_t index;
  std::uint32_t value;

  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Entries sorted by index, no zero values.
using SparseVec = std::vector<SparseEntry>;

/// Sorts and merges duplicate indices, dropping zeros.
void canonicalize(SparseVec& v, const PrimeField& f);

/// Scratch accumulator over a fixed dimension; touched entries are cleared
/// after every extraction so reuse costs nothing proportional to dim.
class DenseAccumulator {
 public:
  DenseAccumulator(std::size_t dim, const PrimeField& f);

  void add(const SparseVec& v, std::uint32_t scale);
  void add_entry(std::uint32_t index, std::uint32_t value);
  std::uint32_t get(std::uint32_t index) const { return acc_[index]; }
  /// Smallest index with a nonzero value, or UINT32_MAX.
  std::uint32_t pop_min();
  /// Remaining nonzeros as a sorted sparse vector; resets the accumulator.
  SparseVec extract();
  void clear();

 private:
  void push(std::uint32_t index);

  const PrimeField* f_;
  std::vector<std::uint32_t> acc_;
  std::vector<char> queued_;
  std::vector<std::uint32_t> heap_;
  std::vector<std::uint32_t> touched_;
};

/// Row echelon structure over GF(p): every row has a distinct leading index
/// (its pivot) with value 1. Rows may carry a combination vector recording
/// how they were built from inserted inputs.
class Echelon {
 public:
  Echelon(std::size_t dim, const PrimeField& f, std::size_t combo_dim = 0);

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool is_pivot(std::uint32_t index) const { return pivot_of_[index] >= 0; }
  const std::vector<SparseVec>& rows() const { return rows_; }

  /// Top-reduces v; if the remainder is nonzero it becomes a new row and the
  /// call returns true.
  bool insert(const SparseVec& v);

  /// Tracked insertion: returns the combination (over the combo space) that
  /// annihilates v when v lies in the span, otherwise inserts and returns
  /// an empty vector with added = true.
  SparseVec insert_tracked(const SparseVec& v, const SparseVec& combo, bool& added);

  /// Top-reduced remainder; empty iff v is in the span.
  SparseVec reduce(const SparseVec& v);

 private:
  std::size_t dim_;
  const PrimeField* f_;
  std::vector<std::int32_t> pivot_of_;
  std::vector<SparseVec> rows_;
  std::vector<SparseVec> combos_;
  DenseAccumulator acc_;
  DenseAccumulator combo_acc_;
};

}  // namespace burchlab
