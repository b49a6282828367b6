#include "burchlab/burch.hpp"

#include <random>
#include <sstream>

#include "burchlab/errors.hpp"

namespace burchlab {

DepthReport depth_of_module(const ModulePresentation& m) {
  if (m.over_quotient()) {
    // same module over S: add I F to the relations
    std::vector<VectorPolynomial> columns = m.columns();
    for (auto& c : ideal_times_free(*m.quotient(), m.rank())) columns.push_back(std::move(c));
    return depth_of_module(ModulePresentation(m.ring(), std::nullopt, m.target_shifts(), std::move(columns)));
  }
  const int n = static_cast<int>(m.ring()->nvars());
  ResolutionSlice slice = resolve(m, n + 1);
  if (!slice.projdim) throw InvariantViolation("resolution over S did not terminate");
  return DepthReport{*slice.projdim, n - *slice.projdim};
}

DepthReport depth_of_quotient(const IdealHandle& ideal) {
  return depth_of_module(ModulePresentation::cyclic(ideal.ring(), std::nullopt, ideal.generators()));
}

IdealHandle burch_ideal(const IdealHandle& ideal) {
  if (ideal.is_zero()) throw ZeroIdeal();
  IdealHandle n = IdealHandle::maximal(ideal.ring());
  return ideal_colon(ideal_product(ideal, n), ideal_colon(ideal, n));
}

std::string BurchReport::serialize() const {
  std::ostringstream out;
  out << "burch.index=" << index << "\n";
  if (method == BurchMethod::kExact) {
    out << "burch.method=exact\n";
  } else {
    out << "burch.method=sampled:trials=" << trials << ",seed=" << seed << "\n";
  }
  out << "burch.bi=" << (burch_ideal ? burch_ideal->to_string(true) : std::string("none")) << "\n";
  out << "depth=" << depth << "\n";
  return out.str();
}

std::optional<std::size_t> socle_degree_criterion(const IdealHandle& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) return std::nullopt;
  IdealHandle socle = ideal_colon(ideal, IdealHandle::maximal(ideal.ring()));
  if (socle.min_generator_degree() < ideal.min_generator_degree()) return ideal.ring()->nvars();
  return std::nullopt;
}

BurchReport burch_index_depth0(const IdealHandle& ideal) {
  BurchReport report(ideal);
  const Ring& ring = ideal.ring();
  const std::size_t n = ring->nvars();
  if (ideal.is_zero()) {
    report.depth = static_cast<int>(n);
    report.note = "zero ideal";
    return report;
  }
  if (ideal.is_unit()) {
    report.note = "unit ideal";
    return report;
  }
  report.depth = depth_of_quotient(ideal).depth;
  if (report.depth > 0) {
    report.note = "positive depth";
    return report;
  }
  IdealHandle bi = burch_ideal(ideal);
  IdealHandle maximal = IdealHandle::maximal(ring);
  if (!bi.contains(ideal_product(maximal, maximal)) || !maximal.contains(bi))
    throw InvariantViolation("Burch ideal is not between n^2 and n");
  report.index = n - linear_part_dimension(bi);
  report.burch_ideal = bi;
  if (auto shortcut = socle_degree_criterion(ideal)) {
    report.shortcut = true;
    if (*shortcut != report.index) throw InvariantViolation("socle-degree criterion disagrees with the Burch index");
  }
  return report;
}

IdealHandle reduce_by_linear_forms(const IdealHandle& ideal, const std::vector<Polynomial>& forms) {
  const Ring& ring = ideal.ring();
  const auto& f = ring->field();
  const std::size_t n = ring->nvars();
  // row reduce the coefficient matrix of the forms
  std::vector<std::vector<FieldElement>> rows;
  for (const auto& l : forms) {
    if (l.degree() != 1 || !l.is_homogeneous()) throw Error("expected a linear form, got " + l.to_string());
    std::vector<FieldElement> row(n, f.zero());
    for (const auto& t : l.terms())
      for (std::size_t v = 0; v < n; ++v)
        if (t.mono[v] == 1) row[v] = t.coef;
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t r = rank;
    while (r < rows.size() && rows[r][col].is_zero()) ++r;
    if (r == rows.size()) continue;
    std::swap(rows[r], rows[rank]);
    FieldElement inv = f.inv(rows[rank][col]);
    for (auto& e : rows[rank]) e = f.mul(e, inv);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == rank || rows[k][col].is_zero()) continue;
      FieldElement c = rows[k][col];
      for (std::size_t j = 0; j < n; ++j) rows[k][j] = f.sub(rows[k][j], f.mul(c, rows[rank][j]));
    }
    pivots.push_back(col);
    ++rank;
  }
  if (rank != forms.size()) throw Error("linear forms are dependent");

  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::string> names;
  std::vector<std::size_t> new_index(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (!is_pivot[v]) {
      new_index[v] = names.size();
      names.push_back(ring->variables()[v]);
    }
  if (names.empty()) throw Error("cannot reduce by a full set of variables");
  Ring target = make_ring(ring->characteristic(), names, ring->degree_cap());
  std::vector<Polynomial> images(n, Polynomial(target));
  for (std::size_t v = 0; v < n; ++v)
    if (!is_pivot[v]) images[v] = Polynomial::variable(target, new_index[v]);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    Polynomial image(target);
    for (std::size_t j = 0; j < n; ++j)
      if (!is_pivot[j] && !rows[k][j].is_zero())
        image = image - Polynomial::variable(target, new_index[j]).scaled(rows[k][j]);
    images[pivots[k]] = image;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.substitute(images, target));
  return IdealHandle(target, std::move(gens));
}

BurchReport burch_index_graded(const IdealHandle& ideal, std::size_t trials, std::uint64_t seed) {
  if (ideal.is_zero() || ideal.is_unit()) return burch_index_depth0(ideal);
  const int depth = depth_of_quotient(ideal).depth;
  if (depth == 0) return burch_index_depth0(ideal);

  const Ring& ring = ideal.ring();
  const auto& f = ring->field();
  const std::size_t n = ring->nvars();
  BurchReport best(ideal);
  best.depth = depth;
  best.method = BurchMethod::kSampled;
  best.trials = trials;
  best.seed = seed;
  if (f.characteristic() < 101) best.note = "small field: sampled linear forms may not be generic";
  bool found = false;
  for (std::size_t t = 0; t < trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::uint32_t> coef(0, f.characteristic() - 1);
    std::vector<Polynomial> forms;
    IdealHandle current = ideal;
    bool regular = true;
    for (int k = 0; k < depth && regular; ++k) {
      std::vector<Term> terms;
      for (std::size_t v = 0; v < n; ++v) terms.push_back({FieldElement{coef(rng)}, Monomial::variable(n, v)});
      Polynomial l(ring, std::move(terms));
      if (l.is_zero() || current.contains(l) || !(ideal_colon(current, l) == current)) {
        regular = false;
        break;
      }
      forms.push_back(l);
      std::vector<Polynomial> gens = current.generators();
      gens.push_back(l);
      current = IdealHandle(ring, std::move(gens));
    }
    if (!regular) continue;
    std::optional<IdealHandle> reduced;
    try {
      reduced = reduce_by_linear_forms(ideal, forms);
    } catch (const Error&) {
      continue;  // dependent forms
    }
    BurchReport r = burch_index_depth0(*reduced);
    if (r.depth != 0) continue;
    ++best.accepted_trials;
    if (!found || r.index > best.index) {
      best.index = r.index;
      best.burch_ideal = r.burch_ideal;
      best.witness = forms;
      found = true;
    }
  }
  if (!found) throw RegularSequenceNotFound("no sampled linear regular sequence of length " + std::to_string(depth));
  return best;
}

}  // namespace burchlab
