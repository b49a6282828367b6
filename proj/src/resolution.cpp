#include "burchlab/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "burchlab/artinian.hpp"
#include "burchlab/errors.hpp"
#include "burchlab/testing_hooks.hpp"

namespace burchlab {

void BettiTable::set(int i, int j, std::size_t value) {
  if (value == 0) {
    values_.erase({i, j});
  } else {
    values_[{i, j}] = value;
  }
}

std::size_t BettiTable::at(int i, int j) const {
  auto it = values_.find({i, j});
  return it == values_.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
  std::size_t sum = 0;
  for (const auto& [key, v] : values_)
    if (key.first == i) sum += v;
  return sum;
}

std::string BettiTable::to_human() const {
  if (values_.empty()) return "(zero)\n";
  int max_i = 0, min_r = 0, max_r = 0;
  bool first = true;
  for (const auto& [key, v] : values_) {
    int r = key.second - key.first;
    max_i = std::max(max_i, key.first);
    if (first || r < min_r) min_r = r;
    if (first || r > max_r) max_r = r;
    first = false;
  }
  std::size_t width = 5;
  for (const auto& [key, v] : values_) width = std::max(width, std::to_string(v).size() + 1);
  std::ostringstream out;
  auto pad = [&](const std::string& s) { out << std::string(width - std::min(width, s.size()), ' ') << s; };
  out << "      ";
  for (int i = 0; i <= max_i; ++i) pad(std::to_string(i));
  out << "\n";
  out << "total:";
  for (int i = 0; i <= max_i; ++i) pad(std::to_string(total(i)));
  out << "\n";
  for (int r = min_r; r <= max_r; ++r) {
    std::string label = std::to_string(r) + ":";
    out << std::string(6 - std::min<std::size_t>(6, label.size()), ' ') << label;
    for (int i = 0; i <= max_i; ++i) {
      std::size_t v = at(i, i + r);
      pad(v == 0 ? "." : std::to_string(v));
    }
    out << "\n";
  }
  return out.str();
}

std::string BettiTable::to_machine() const {
  std::ostringstream out;
  for (const auto& [key, v] : values_) out << "beta." << key.first << "." << key.second << "=" << v << "\n";
  return out.str();
}

SparseColumn sparse_column(const VectorPolynomial& v) {
  SparseColumn out;
  for (std::size_t i = 0; i < v.rank(); ++i)
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

VectorPolynomial FreeMap::column(const Ring& ring, std::size_t j) const {
  VectorPolynomial v(ring, target_rank());
  for (const auto& [row, e] : columns[j]) v.set(row, e);
  return v;
}

std::vector<VectorPolynomial> FreeMap::dense_columns(const Ring& ring) const {
  std::vector<VectorPolynomial> out;
  for (std::size_t j = 0; j < columns.size(); ++j) out.push_back(column(ring, j));
  return out;
}

namespace {

VectorPolynomial reduce_modulo(const std::optional<IdealHandle>& quotient, const VectorPolynomial& v) {
  if (!quotient || quotient->is_zero()) return v;
  std::vector<Polynomial> entries;
  for (const auto& e : v.entries()) entries.push_back(quotient->gb().normal_form(e));
  return VectorPolynomial(std::move(entries));
}

bool is_artinian(const std::optional<IdealHandle>& quotient) {
  return quotient && !quotient->is_zero() && quotient_dimension(*quotient).has_value();
}

void add_betti(BettiTable& betti, int i, const std::vector<int>& shifts) {
  for (int d : shifts) betti.set(i, d, betti.at(i, d) + 1);
}

FreeMap to_map(const ModulePresentation& p) {
  FreeMap map{p.target_shifts(), p.source_shifts(), {}};
  for (const auto& c : p.columns()) map.columns.push_back(sparse_column(c));
  return map;
}

// Columns minimally generating the image (modulo I F over a quotient).
ModulePresentation prune(const ModulePresentation& p) {
  std::vector<VectorPolynomial> extra;
  if (p.over_quotient()) extra = ideal_times_free(*p.quotient(), p.rank());
  std::vector<VectorPolynomial> cols;
  for (std::size_t i : minimal_generator_indices(p.ring(), p.target_shifts(), p.columns(), extra))
    cols.push_back(p.columns()[i]);
  ModulePresentation out(p.ring(), p.quotient(), p.target_shifts(), std::move(cols));
  out.mark_minimal();
  return out;
}

}  // namespace

ModulePresentation kernel_over_S(const ModulePresentation& a) {
  std::vector<VectorPolynomial> syz;
  if (!a.columns().empty()) syz = syzygies(a.columns(), a.target_shifts());
  return ModulePresentation(a.ring(), std::nullopt, a.source_shifts(), std::move(syz));
}

ModulePresentation kernel_over_R(const ModulePresentation& a) {
  if (!a.over_quotient()) return kernel_over_S(a);
  const std::size_t m = a.columns().size();
  std::vector<VectorPolynomial> out;
  if (m > 0) {
    std::vector<VectorPolynomial> list = a.columns();
    auto block = ideal_times_free(*a.quotient(), a.rank());
    list.insert(list.end(), block.begin(), block.end());
    for (const auto& s : syzygies(list, a.target_shifts())) {
      std::vector<Polynomial> head(s.entries().begin(), s.entries().begin() + static_cast<std::ptrdiff_t>(m));
      VectorPolynomial v = reduce_modulo(a.quotient(), VectorPolynomial(std::move(head)));
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  }
  return ModulePresentation(a.ring(), a.quotient(), a.source_shifts(), std::move(out));
}

ModulePresentation minimalize(const ModulePresentation& p) {
  const auto& f = p.ring()->field();
  std::vector<int> rows = p.target_shifts();
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& c : p.columns()) cols.push_back(reduce_modulo(p.quotient(), c).entries());
  bool changed = false;
  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t r = 0; r < rows.size() && !pivot; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (!cols[c][r].is_zero() && cols[c][r].is_constant()) {
          pivot = {r, c};
          break;
        }
    if (!pivot) break;
    changed = true;
    auto [r, c] = *pivot;
    FieldElement inv = f.inv(cols[c][r].leading_term().coef);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j == c || cols[j][r].is_zero()) continue;
      Polynomial factor = cols[j][r].scaled(inv);
      for (std::size_t k = 0; k < rows.size(); ++k) cols[j][k] = cols[j][k] - cols[c][k] * factor;
      if (p.over_quotient())
        for (auto& e : cols[j]) e = p.quotient()->gb().normal_form(e);
    }
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
    for (auto& col : cols) col.erase(col.begin() + static_cast<std::ptrdiff_t>(r));
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(r));
  }
  if (!changed) return p;
  std::vector<VectorPolynomial> out;
  for (auto& col : cols) {
    if (rows.empty()) break;
    VectorPolynomial v(std::move(col));
    if (!v.is_zero()) out.push_back(std::move(v));
  }
  return ModulePresentation(p.ring(), p.quotient(), rows, std::move(out));
}

void check_resolution(const ResolutionSlice& slice) {
  const bool over_quotient = slice.quotient && !slice.quotient->is_zero();
  auto reduce = [&](const Polynomial& e) { return over_quotient ? slice.quotient->gb().normal_form(e) : e; };
  for (const auto& d : slice.differentials)
    for (const auto& col : d.columns)
      for (const auto& [row, entry] : col) {
        if (row >= d.target_rank()) throw InvariantViolation("matrix entry outside the target");
        Polynomial e = reduce(entry);
        if (!e.is_zero() && e.is_constant()) throw InvariantViolation("unit entry in a minimal differential");
      }
  for (std::size_t i = 0; i + 1 < slice.differentials.size(); ++i) {
    const FreeMap& a = slice.differentials[i];
    const FreeMap& b = slice.differentials[i + 1];
    if (b.target_rank() != a.columns.size()) throw InvariantViolation("consecutive differentials do not compose");
    for (const auto& col : b.columns) {
      std::map<std::uint32_t, Polynomial> sum;
      for (const auto& [k, f] : col)
        for (const auto& [row, g] : a.columns[k]) {
          auto [it, fresh] = sum.try_emplace(row, slice.ring);
          it->second = it->second + g * f;
        }
      for (const auto& [row, e] : sum)
        if (!reduce(e).is_zero()) throw InvariantViolation("d_i d_{i+1} is not zero");
    }
  }
}

namespace {

GradedElement to_graded(const ArtinianRing& ring, const GradedFreeModule& free, const VectorPolynomial& v,
                        int degree) {
  GradedElement out{degree, {}};
  for (std::size_t j = 0; j < v.rank(); ++j) {
    if (v[j].is_zero()) continue;
    SparseVec local = ring.coordinates(v[j]);
    if (local.empty()) continue;
    std::uint32_t off = free.offset(degree, j);
    for (const auto& e : local) out.coords.push_back({off + e.index, e.value});
  }
  return out;
}

SparseColumn from_graded(const ArtinianRing& ring, const GradedFreeModule& free, const GradedElement& g) {
  SparseColumn out;
  std::vector<Term> part;
  std::size_t current = 0;
  auto flush = [&] {
    if (!part.empty()) out.emplace_back(static_cast<std::uint32_t>(current), Polynomial(ring.ring(), std::move(part)));
    part.clear();
  };
  for (const auto& e : g.coords) {
    std::size_t j = free.generator_of(g.degree, e.index);
    if (j != current) {
      flush();
      current = j;
    }
    int local = g.degree - free.degrees()[j];
    part.push_back({FieldElement{e.value}, ring.basis_monomial(local, e.index - free.offset(g.degree, j))});
  }
  flush();
  return out;
}

void require_inside_maximal(const GradedFreeModule& free, const std::vector<GradedElement>& gens) {
  for (const auto& g : gens)
    for (const auto& e : g.coords)
      if (free.degrees()[free.generator_of(g.degree, e.index)] == g.degree)
        throw InvariantViolation("syzygy generator with a unit coordinate");
}

std::vector<int> degrees_of(const std::vector<GradedElement>& gens) {
  std::vector<int> out;
  for (const auto& g : gens) out.push_back(g.degree);
  return out;
}

void check_cap(const Ring& ring, const std::vector<int>& degrees) {
  for (int d : degrees) ring->check_degree(d);
}

ResolutionSlice resolve_artinian(const ModulePresentation& m, int steps) {
  ArtinianRing ring(*m.quotient());
  ModulePresentation p = minimalize(m);
  ResolutionSlice slice{m.ring(), m.quotient(), {}, std::nullopt, {}};
  add_betti(slice.betti, 0, p.target_shifts());
  slice.betti.set_steps(0);
  if (p.rank() == 0 || steps < 1) return slice;
  try {
    auto target = std::make_unique<GradedFreeModule>(ring, p.target_shifts());
    std::vector<GradedElement> spanning;
    for (std::size_t c = 0; c < p.columns().size(); ++c)
      spanning.push_back(to_graded(ring, *target, p.columns()[c], p.source_shifts()[c]));
    SubmoduleAnalysis current = analyze_image(ring, *target, spanning, false);
    for (int i = 1; i <= steps; ++i) {
      if (i > 1) {
        auto source = std::make_unique<GradedFreeModule>(ring, degrees_of(current.generators));
        current = analyze_kernel(ring, *source, *target, current.generators, false, &current.dims, current.dims_from);
        target = std::move(source);
      }
      require_inside_maximal(*target, current.generators);
      std::vector<int> degrees = degrees_of(current.generators);
      check_cap(m.ring(), degrees);
      FreeMap map{target->degrees(), degrees, {}};
      for (const auto& g : current.generators) map.columns.push_back(from_graded(ring, *target, g));
      slice.differentials.push_back(std::move(map));
      add_betti(slice.betti, i, degrees);
      slice.betti.set_steps(i);
      if (current.generators.empty()) break;
    }
  } catch (const DegreeCapExceeded& e) {
    throw ResolutionCapExceeded(e, slice);
  }
  return slice;
}

}  // namespace

namespace {

ResolutionSlice lift_resolution(const ModulePresentation& m, int steps) {
  ResolutionSlice slice{m.ring(), m.quotient(), {}, std::nullopt, {}};
  const bool over_s = !m.over_quotient();
  try {
    ModulePresentation current = prune(minimalize(m));
    add_betti(slice.betti, 0, current.target_shifts());
    slice.betti.set_steps(0);
    if (current.rank() == 0) {
      if (over_s) slice.projdim = 0;
      return slice;
    }
    for (int i = 1; i <= steps; ++i) {
      if (i > 1) current = prune(over_s ? kernel_over_S(current) : kernel_over_R(current));
      check_cap(m.ring(), current.source_shifts());
      slice.differentials.push_back(to_map(current));
      add_betti(slice.betti, i, current.source_shifts());
      slice.betti.set_steps(i);
      if (current.columns().empty()) {
        if (over_s) slice.projdim = i - 1;
        break;
      }
    }
  } catch (const ResolutionCapExceeded&) {
    throw;
  } catch (const DegreeCapExceeded& e) {
    throw ResolutionCapExceeded(e, slice);
  }
  if (over_s && slice.projdim && *slice.projdim > static_cast<int>(m.ring()->nvars()))
    throw InvariantViolation("resolution over S longer than the number of variables");
  return slice;
}

}  // namespace

ResolutionSlice resolve_by_lifting(const ModulePresentation& m, int steps) {
  ResolutionSlice slice = lift_resolution(m, steps);
  testing::notify_resolution(slice);
  return slice;
}

ResolutionSlice resolve(const ModulePresentation& m, int steps) {
  if (steps < 1) throw Error("resolve needs at least one step");
  ResolutionSlice slice = is_artinian(m.quotient()) ? resolve_artinian(m, steps) : lift_resolution(m, steps);
  testing::notify_resolution(slice);
  return slice;
}

IdealHandle entries_ideal(const Ring& ring, const std::optional<IdealHandle>& quotient, const FreeMap& map) {
  if (map.columns.empty()) return IdealHandle(ring, {Polynomial::constant(ring, ring->field().one())});
  std::vector<Polynomial> gens;
  for (const auto& c : map.columns)
    for (const auto& [row, e] : c) gens.push_back(e);
  if (quotient) gens.insert(gens.end(), quotient->generators().begin(), quotient->generators().end());
  return IdealHandle(ring, std::move(gens));
}

IdealHandle entries_ideal(const ModulePresentation& m) { return entries_ideal(m.ring(), m.quotient(), to_map(m)); }

std::vector<std::size_t> lin_profile(const ModulePresentation& m, int steps) {
  ResolutionSlice slice = resolve(m, steps);
  std::size_t base = m.quotient() ? linear_part_dimension(*m.quotient()) : 0;
  std::vector<std::size_t> out;
  for (int i = 0; i < steps; ++i) {
    if (static_cast<std::size_t>(i) >= slice.differentials.size()) {
      // beyond the end of a finite resolution the matrix has no columns
      out.push_back(m.ring()->nvars() - base);
      continue;
    }
    out.push_back(linear_part_dimension(entries_ideal(m.ring(), m.quotient(), slice.differentials[i])) - base);
  }
  return out;
}

namespace {

// A run of the socle test along the syzygies of a module over an Artinian
// ring. Whenever syz_i = N_i ⊕ k^{a_i}, the copies of k are dropped and their
// contribution to later steps is read from ktable (ktable[j] says whether
// syz_j(k) has a k-summand, ktable[0] = true).
struct ProfileRun {
  std::vector<bool> verdicts;  // index i - 1 for syz_i
  std::vector<std::size_t> split;
};

ProfileRun run_profile(const ArtinianRing& ring, const std::vector<int>& target_degrees,
                       const std::vector<GradedElement>& spanning, int steps, std::vector<bool>& ktable,
                       bool self_table) {
  ProfileRun run;
  auto target = std::make_unique<GradedFreeModule>(ring, target_degrees);
  SubmoduleAnalysis current;
  std::vector<GradedElement> rest;
  std::vector<std::size_t> rest_dims;
  int rest_from = 0;
  for (int i = 1; i <= steps; ++i) {
    bool verdict = false;
    if (i == 1) {
      current = analyze_image(ring, *target, spanning, true);
      verdict = current.has_k_summand;
    } else if (!rest.empty()) {
      auto source = std::make_unique<GradedFreeModule>(ring, degrees_of(rest));
      current = analyze_kernel(ring, *source, *target, rest, true, &rest_dims, rest_from);
      require_inside_maximal(*source, current.generators);
      target = std::move(source);
      verdict = current.has_k_summand;
    } else {
      current = SubmoduleAnalysis{};
    }
    for (int t = 1; t < i && !verdict; ++t)
      if (run.split[static_cast<std::size_t>(t - 1)] > 0 && ktable.at(static_cast<std::size_t>(i - t))) verdict = true;
    run.verdicts.push_back(verdict);
    run.split.push_back(current.k_summands);
    if (self_table) ktable.push_back(verdict);

    std::vector<int> degrees = degrees_of(current.generators);
    check_cap(ring.ring(), degrees);
    rest.assign(current.generators.begin() + static_cast<std::ptrdiff_t>(current.k_summands),
                current.generators.end());
    rest_dims = current.dims;
    rest_from = current.dims_from;
    for (std::size_t k = 0; k < current.k_summands; ++k) {
      std::size_t idx = static_cast<std::size_t>(current.generators[k].degree - rest_from);
      --rest_dims.at(idx);
    }
  }
  return run;
}

}  // namespace

std::vector<bool> summand_profile(const ModulePresentation& m, int steps) {
  if (!is_artinian(m.quotient())) throw NotArtinian();
  if (steps < 1) return {};
  ArtinianRing ring(*m.quotient());
  ModulePresentation p = minimalize(m);
  if (p.rank() == 0) return std::vector<bool>(static_cast<std::size_t>(steps), false);

  // syz_j(k) verdicts for j < steps, from the same run applied to k = R/m
  std::vector<bool> ktable{true};
  if (steps > 1 && ring.nvars() > 0) {
    GradedFreeModule r1(ring, {0});
    std::vector<GradedElement> vars;
    for (std::size_t v = 0; v < ring.nvars(); ++v)
      vars.push_back(to_graded(ring, r1, VectorPolynomial::from_polynomial(Polynomial::variable(m.ring(), v)), 1));
    run_profile(ring, {0}, vars, steps - 1, ktable, true);
  }

  GradedFreeModule target(ring, p.target_shifts());
  std::vector<GradedElement> spanning;
  for (std::size_t c = 0; c < p.columns().size(); ++c)
    spanning.push_back(to_graded(ring, target, p.columns()[c], p.source_shifts()[c]));
  return run_profile(ring, p.target_shifts(), spanning, steps, ktable, false).verdicts;
}

}  // namespace burchlab
