#include "burchlab/sparse.hpp"

#include <algorithm>
#include <functional>

namespace burchlab {

void canonicalize(SparseVec& v, const PrimeField& f) {
  std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::uint32_t idx = v[i].index;
    FieldElement sum{0};
    for (; i < v.size() && v[i].index == idx; ++i) sum = f.add(sum, FieldElement{v[i].value});
    if (!sum.is_zero()) v[out++] = {idx, sum.residue};
  }
  v.resize(out);
}

DenseAccumulator::DenseAccumulator(std::size_t dim, const PrimeField& f) : f_(&f), acc_(dim, 0), queued_(dim, 0) {}

void DenseAccumulator::push(std::uint32_t index) {
  if (queued_[index]) return;
  queued_[index] = 1;
  heap_.push_back(index);
  std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
}

void DenseAccumulator::add_entry(std::uint32_t index, std::uint32_t value) {
  std::uint32_t& a = acc_[index];
  if (a == 0) touched_.push_back(index);
  a = f_->add(FieldElement{a}, FieldElement{value}).residue;
  if (a != 0) push(index);
}

void DenseAccumulator::add(const SparseVec& v, std::uint32_t scale) {
  if (scale == 0) return;
  const std::uint64_t p = f_->characteristic();
  for (const auto& e : v) {
    std::uint32_t& a = acc_[e.index];
    if (a == 0) touched_.push_back(e.index);
    a = static_cast<std::uint32_t>((a + static_cast<std::uint64_t>(e.value) * scale) % p);
    if (a != 0) push(e.index);
  }
}

std::uint32_t DenseAccumulator::pop_min() {
  while (!heap_.empty()) {
    std::uint32_t top = heap_.front();
    if (acc_[top] != 0) return top;
    std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
    heap_.pop_back();
    queued_[top] = 0;
  }
  return UINT32_MAX;
}

SparseVec DenseAccumulator::extract() {
  SparseVec out;
  for (std::uint32_t idx : touched_) {
    if (acc_[idx] != 0) out.push_back({idx, acc_[idx]});
  }
  std::sort(out.begin(), out.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  out.erase(std::unique(out.begin(), out.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index == b.index; }),
            out.end());
  clear();
  return out;
}

void DenseAccumulator::clear() {
  for (std::uint32_t idx : touched_) acc_[idx] = 0;
  for (std::uint32_t idx : heap_) queued_[idx] = 0;
  touched_.clear();
  heap_.clear();
}

Echelon::Echelon(std::size_t dim, const PrimeField& f, std::size_t combo_dim)
    : dim_(dim), f_(&f), pivot_of_(dim, -1), acc_(dim, f), combo_acc_(combo_dim, f) {}

SparseVec Echelon::reduce(const SparseVec& v) {
  const std::uint32_t p = f_->characteristic();
  acc_.add(v, 1);
  while (true) {
    std::uint32_t lead = acc_.pop_min();
    if (lead == UINT32_MAX) break;
    std::int32_t row = pivot_of_[lead];
    if (row < 0) break;
    acc_.add(rows_[static_cast<std::size_t>(row)], p - acc_.get(lead));
  }
  return acc_.extract();
}

bool Echelon::insert(const SparseVec& v) {
  SparseVec r = reduce(v);
  if (r.empty()) return false;
  FieldElement inv = f_->inv(FieldElement{r.front().value});
  for (auto& e : r) e.value = f_->mul(FieldElement{e.value}, inv).residue;
  pivot_of_[r.front().index] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  combos_.emplace_back();
  return true;
}

SparseVec Echelon::insert_tracked(const SparseVec& v, const SparseVec& combo, bool& added) {
  const std::uint32_t p = f_->characteristic();
  acc_.add(v, 1);
  combo_acc_.add(combo, 1);
  while (true) {
    std::uint32_t lead = acc_.pop_min();
    if (lead == UINT32_MAX) break;
    std::int32_t row = pivot_of_[lead];
    if (row < 0) break;
    std::uint32_t scale = p - acc_.get(lead);
    acc_.add(rows_[static_cast<std::size_t>(row)], scale);
    combo_acc_.add(combos_[static_cast<std::size_t>(row)], scale);
  }
  SparseVec r = acc_.extract();
  SparseVec c = combo_acc_.extract();
  if (r.empty()) {
    added = false;
    return c;
  }
  FieldElement inv = f_->inv(FieldElement{r.front().value});
  for (auto& e : r) e.value = f_->mul(FieldElement{e.value}, inv).residue;
  for (auto& e : c) e.value = f_->mul(FieldElement{e.value}, inv).residue;
  pivot_of_[r.front().index] = static_cast<std::int32_t>(rows_.size());
  rows_.push_back(std::move(r));
  combos_.push_back(std::move(c));
  added = true;
  return {};
}

}  // namespace burchlab
