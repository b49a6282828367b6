#include "burchlab/module.hpp"

#include <algorithm>
#include <map>

#include "burchlab/errors.hpp"
#include "burchlab/sparse.hpp"

namespace burchlab {

std::vector<int> SubmodulePresentation::generator_degrees() const {
  std::vector<int> out;
  for (const auto& g : generators) {
    auto d = g.homogeneous_degree(shifts);
    if (!d) throw NotHomogeneous("submodule generator " + g.to_string() + " is not homogeneous");
    out.push_back(*d);
  }
  return out;
}

GroebnerBasis SubmodulePresentation::gb() const {
  return buchberger(ring, generators, ModuleOrder(shifts, std::vector<int>(shifts.size(), 0)));
}

ModulePresentation::ModulePresentation(Ring ring, std::optional<IdealHandle> quotient, std::vector<int> target_shifts,
                                       std::vector<VectorPolynomial> columns)
    : ring_(std::move(ring)),
      quotient_(std::move(quotient)),
      target_shifts_(std::move(target_shifts)),
      columns_(std::move(columns)) {
  if (quotient_) require_same_ring(ring_, quotient_->ring());
  std::erase_if(columns_, [](const VectorPolynomial& c) { return c.is_zero(); });
  for (const auto& c : columns_) {
    require_same_ring(ring_, c.ring());
    if (c.rank() != target_shifts_.size()) throw RankMismatch("column rank differs from the target rank");
    auto d = c.homogeneous_degree(target_shifts_);
    if (!d) throw NotHomogeneous("presentation column " + c.to_string() + " is not homogeneous");
    source_shifts_.push_back(*d);
  }
}

ModulePresentation ModulePresentation::cyclic(const Ring& ring, std::optional<IdealHandle> quotient,
                                              const std::vector<Polynomial>& relations) {
  std::vector<VectorPolynomial> cols;
  for (const auto& f : relations)
    if (!f.is_zero()) cols.push_back(VectorPolynomial::from_polynomial(f));
  return ModulePresentation(ring, std::move(quotient), {0}, std::move(cols));
}

ModulePresentation ModulePresentation::from_ideal(const IdealHandle& ideal) {
  const Ring& ring = ideal.ring();
  std::vector<VectorPolynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(VectorPolynomial::from_polynomial(g));
  std::vector<Polynomial> minimal;
  std::vector<int> shifts;
  for (std::size_t i : minimal_generator_indices(ring, {0}, gens)) {
    minimal.push_back(ideal.generators()[i]);
    shifts.push_back(ideal.generators()[i].degree());
  }
  std::vector<VectorPolynomial> syz = syzygies(minimal);
  std::vector<VectorPolynomial> cols;
  for (std::size_t i : minimal_generator_indices(ring, shifts, syz)) cols.push_back(syz[i]);
  ModulePresentation out(ring, std::nullopt, shifts, std::move(cols));
  out.mark_minimal();
  return out;
}

std::vector<VectorPolynomial> ideal_times_free(const IdealHandle& ideal, std::size_t rank) {
  std::vector<VectorPolynomial> out;
  for (const auto& g : ideal.generators())
    for (std::size_t i = 0; i < rank; ++i) out.push_back(VectorPolynomial::unit(ideal.ring(), rank, i).times(g));
  return out;
}

std::vector<std::size_t> minimal_generator_indices(const Ring& ring, const std::vector<int>& shifts,
                                                   const std::vector<VectorPolynomial>& generators,
                                                   const std::vector<VectorPolynomial>& extra) {
  std::map<int, std::vector<std::size_t>> by_degree;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].is_zero()) continue;
    auto d = generators[i].homogeneous_degree(shifts);
    if (!d) throw NotHomogeneous("generator " + generators[i].to_string() + " is not homogeneous");
    by_degree[*d].push_back(i);
  }
  const ModuleOrder order(shifts, std::vector<int>(shifts.size(), 0));
  const auto& f = ring->field();
  std::vector<std::size_t> kept;
  std::vector<VectorPolynomial> span = extra;
  for (const auto& [degree, indices] : by_degree) {
    GroebnerBasis gb = buchberger(ring, span, order);
    std::vector<FlatVector> forms;
    std::map<std::pair<std::uint32_t, Monomial>, std::uint32_t,
             bool (*)(const std::pair<std::uint32_t, Monomial>&, const std::pair<std::uint32_t, Monomial>&)>
        coord([](const std::pair<std::uint32_t, Monomial>& a, const std::pair<std::uint32_t, Monomial>& b) {
          if (a.first != b.first) return a.first < b.first;
          return grevlex_compare_unchecked(a.second, b.second) < 0;
        });
    for (std::size_t i : indices) {
      forms.push_back(gb.normal_form_flat(to_flat(generators[i], order)));
      for (const auto& t : forms.back()) coord.emplace(std::make_pair(t.comp, t.mono), 0);
    }
    std::uint32_t next = 0;
    for (auto& [key, idx] : coord) idx = next++;
    Echelon ech(next, f);
    for (std::size_t k = 0; k < indices.size(); ++k) {
      SparseVec v;
      for (const auto& t : forms[k]) v.push_back({coord.at({t.comp, t.mono}), t.coef.residue});
      std::sort(v.begin(), v.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
      if (ech.insert(v)) {
        kept.push_back(indices[k]);
        span.push_back(generators[indices[k]]);
      }
    }
  }
  return kept;
}

SubmodulePresentation submodule_intersection(const SubmodulePresentation& a, const SubmodulePresentation& b) {
  require_same_ring(a.ring, b.ring);
  if (a.shifts != b.shifts) throw RankMismatch("submodules of different free modules");
  std::vector<VectorPolynomial> all = a.generators;
  all.insert(all.end(), b.generators.begin(), b.generators.end());
  SubmodulePresentation out{a.ring, a.shifts, {}};
  if (a.generators.empty() || b.generators.empty()) return out;
  std::vector<VectorPolynomial> raw;
  for (const auto& s : syzygies(all, a.shifts)) {
    VectorPolynomial v(a.ring, a.rank());
    for (std::size_t i = 0; i < a.generators.size(); ++i)
      if (!s[i].is_zero()) v = v + a.generators[i].times(s[i]);
    if (!v.is_zero()) raw.push_back(std::move(v));
  }
  for (std::size_t i : minimal_generator_indices(a.ring, a.shifts, raw)) out.generators.push_back(raw[i]);
  return out;
}

SubmodulePresentation submodule_colon_ideal(const SubmodulePresentation& u, const IdealHandle& j) {
  require_same_ring(u.ring, j.ring());
  if (j.is_zero()) throw ZeroColonDivisor();
  const std::size_t r = u.rank();
  std::optional<SubmodulePresentation> acc;
  for (const auto& g : j.generators()) {
    std::vector<VectorPolynomial> list;
    for (std::size_t i = 0; i < r; ++i) list.push_back(VectorPolynomial::unit(u.ring, r, i).times(g));
    list.insert(list.end(), u.generators.begin(), u.generators.end());
    SubmodulePresentation part{u.ring, u.shifts, {}};
    for (const auto& s : syzygies(list, u.shifts)) {
      std::vector<Polynomial> head(s.entries().begin(), s.entries().begin() + static_cast<std::ptrdiff_t>(r));
      VectorPolynomial v(std::move(head));
      if (!v.is_zero()) part.generators.push_back(std::move(v));
    }
    acc = acc ? submodule_intersection(*acc, part) : part;
  }
  std::vector<VectorPolynomial> gens = std::move(acc->generators);
  acc->generators.clear();
  for (std::size_t i : minimal_generator_indices(u.ring, u.shifts, gens)) acc->generators.push_back(gens[i]);
  return *acc;
}

SocleResult socle_module(const ModulePresentation& m) {
  const Ring& ring = m.ring();
  SubmodulePresentation u{ring, m.target_shifts(), m.columns()};
  if (m.quotient()) {
    auto extra = ideal_times_free(*m.quotient(), m.rank());
    u.generators.insert(u.generators.end(), extra.begin(), extra.end());
  }
  SocleResult out{submodule_colon_ideal(u, IdealHandle::maximal(ring)), false};
  // mF + U
  SubmodulePresentation base = u;
  auto mf = ideal_times_free(IdealHandle::maximal(ring), m.rank());
  base.generators.insert(base.generators.end(), mf.begin(), mf.end());
  GroebnerBasis gb = base.gb();
  for (const auto& g : out.socle.generators)
    if (!gb.member(g)) out.has_k_summand = true;
  return out;
}

}  // namespace burchlab
