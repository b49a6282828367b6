#include "burchlab/families.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "burchlab/errors.hpp"

namespace burchlab {

namespace {

const std::vector<std::pair<Family, std::string>>& family_names() {
  static const std::vector<std::pair<Family, std::string>> names = {
      {Family::kJn, "jn"},       {Family::kFibre, "fibre"}, {Family::kTorind, "torind"},
      {Family::kPoints, "points"}, {Family::kDim2, "dim2"},   {Family::kMainthm, "mainthm"},
      {Family::kExtension, "extension"},
  };
  return names;
}

template <typename T>
T uniform(std::mt19937_64& rng, T lo, T hi) {
  return std::uniform_int_distribution<T>(lo, hi)(rng);
}

void monomials_in(std::size_t nvars, const std::vector<std::size_t>& vars, int degree, std::size_t pos,
                  Monomial& current, std::vector<Monomial>& out) {
  if (pos + 1 == vars.size()) {
    current.set(vars[pos], static_cast<std::uint16_t>(degree));
    out.push_back(current);
    current.set(vars[pos], 0);
    return;
  }
  for (int e = degree; e >= 0; --e) {
    current.set(vars[pos], static_cast<std::uint16_t>(e));
    monomials_in(nvars, vars, degree - e, pos + 1, current, out);
  }
  current.set(vars[pos], 0);
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, const std::vector<std::size_t>& vars, int degree) {
  std::vector<Monomial> out;
  Monomial m(nvars);
  monomials_in(nvars, vars, degree, 0, m, out);
  return out;
}

std::vector<std::size_t> all_variables(const Ring& ring) {
  std::vector<std::size_t> vars(ring->nvars());
  for (std::size_t i = 0; i < vars.size(); ++i) vars[i] = i;
  return vars;
}

Polynomial random_form_in(const Ring& ring, const std::vector<std::size_t>& vars, int degree, std::size_t max_terms,
                          std::mt19937_64& rng) {
  std::vector<Monomial> monos = monomials_of_degree(ring->nvars(), vars, degree);
  std::shuffle(monos.begin(), monos.end(), rng);
  std::size_t count = std::min(monos.size(), uniform<std::size_t>(rng, 1, max_terms));
  std::vector<Term> terms;
  const std::uint32_t p = ring->characteristic();
  for (std::size_t i = 0; i < count; ++i) terms.push_back({FieldElement{uniform<std::uint32_t>(rng, 1, p - 1)}, monos[i]});
  return Polynomial(ring, std::move(terms));
}

Monomial random_monomial(std::size_t nvars, int degree, std::mt19937_64& rng) {
  std::vector<std::size_t> vars(nvars);
  for (std::size_t i = 0; i < nvars; ++i) vars[i] = i;
  auto monos = monomials_of_degree(nvars, vars, degree);
  return monos[uniform<std::size_t>(rng, 0, monos.size() - 1)];
}

std::vector<std::string> names(const std::string& stem, std::size_t count) {
  static const std::vector<std::string> letters = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(stem.empty() ? letters.at(i) : stem + std::to_string(i + 1));
  return out;
}

// Pure powers of the given variables plus a few random forms: an Artinian
// ideal in those variables contained in the square of their maximal ideal.
std::vector<Polynomial> random_artinian(const Ring& ring, const std::vector<std::size_t>& vars, std::mt19937_64& rng) {
  std::vector<Polynomial> gens;
  const std::size_t n = ring->nvars();
  for (std::size_t v : vars) {
    Monomial m(n);
    m.set(v, uniform<std::uint16_t>(rng, 2, 3));
    gens.push_back(Polynomial::monomial(ring, ring->field().one(), m));
  }
  std::size_t extra = uniform<std::size_t>(rng, 0, 2);
  for (std::size_t i = 0; i < extra; ++i) gens.push_back(random_form_in(ring, vars, uniform(rng, 2, 3), 2, rng));
  return gens;
}

TrialResult trial_jn(std::mt19937_64& rng, const FamilyOptions& options) {
  const std::size_t n = uniform<std::size_t>(rng, 2, 3);
  Ring ring = make_ring(options.characteristic, names("", n));
  std::vector<Polynomial> j;
  std::size_t count = uniform<std::size_t>(rng, 1, 2);
  while (j.size() < count) j.push_back(random_form(ring, uniform(rng, 1, 2), 3, rng));
  IdealHandle ideal = ideal_product(IdealHandle(ring, j), IdealHandle::maximal(ring));
  BurchReport report = burch_index_graded(ideal, options.linear_trials, rng());
  TrialResult out;
  out.passed = report.index == n;
  out.line = "I = " + ideal.to_string() + " index " + std::to_string(report.index) + " expected " + std::to_string(n);
  out.session = session_text(ideal);
  out.reports.push_back(std::move(report));
  return out;
}

// Ring with variables x1..xa, y1..yb and the two variable blocks.
struct SplitRing {
  Ring ring;
  std::vector<std::size_t> xs, ys;
};

SplitRing split_ring(std::uint32_t p, std::size_t a, std::size_t b) {
  std::vector<std::string> vars = names("x", a);
  auto y = names("y", b);
  vars.insert(vars.end(), y.begin(), y.end());
  SplitRing out{make_ring(p, vars), {}, {}};
  for (std::size_t i = 0; i < a; ++i) out.xs.push_back(i);
  for (std::size_t i = 0; i < b; ++i) out.ys.push_back(a + i);
  return out;
}

// Copies polynomials of the split ring that only involve `vars` into a ring
// on those variables alone.
IdealHandle restrict_to(const SplitRing& split, const std::vector<std::size_t>& vars, const std::vector<Polynomial>& gens) {
  std::vector<std::string> sub_names;
  for (std::size_t v : vars) sub_names.push_back(split.ring->variables()[v]);
  Ring sub = make_ring(split.ring->characteristic(), sub_names);
  std::vector<Polynomial> images(split.ring->nvars(), Polynomial(sub));
  for (std::size_t i = 0; i < vars.size(); ++i) images[vars[i]] = Polynomial::variable(sub, i);
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.substitute(images, sub));
  return IdealHandle(sub, std::move(out));
}

TrialResult trial_torind(std::mt19937_64& rng, const FamilyOptions& options) {
  SplitRing split = split_ring(options.characteristic, uniform<std::size_t>(rng, 1, 2), uniform<std::size_t>(rng, 1, 2));
  IdealHandle i(split.ring, random_artinian(split.ring, split.xs, rng));
  IdealHandle j(split.ring, random_artinian(split.ring, split.ys, rng));
  IdealHandle sum = ideal_sum(i, j);
  bool tor_independent = ideal_product(i, j) == ideal_intersection(i, j);
  BurchReport report = burch_index_graded(sum, options.linear_trials, rng());
  TrialResult out;
  out.passed = tor_independent && report.index == 0;
  out.line = "I + J = " + sum.to_string() + " index " + std::to_string(report.index) +
             (tor_independent ? "" : " (IJ differs from I cap J)");
  out.session = session_text(sum);
  out.reports.push_back(std::move(report));
  return out;
}

TrialResult trial_fibre(std::mt19937_64& rng, const FamilyOptions& options) {
  SplitRing split = split_ring(options.characteristic, uniform<std::size_t>(rng, 1, 2), uniform<std::size_t>(rng, 1, 2));
  std::vector<Polynomial> gi = random_artinian(split.ring, split.xs, rng);
  std::vector<Polynomial> gj = random_artinian(split.ring, split.ys, rng);
  std::vector<Polynomial> all = gi;
  all.insert(all.end(), gj.begin(), gj.end());
  for (std::size_t x : split.xs)
    for (std::size_t y : split.ys)
      all.push_back(Polynomial::variable(split.ring, x) * Polynomial::variable(split.ring, y));
  IdealHandle fibre(split.ring, all);
  BurchReport a = burch_index_graded(restrict_to(split, split.xs, gi), options.linear_trials, rng());
  BurchReport b = burch_index_graded(restrict_to(split, split.ys, gj), options.linear_trials, rng());
  BurchReport s = burch_index_graded(fibre, options.linear_trials, rng());
  TrialResult out;
  out.passed = s.index == a.index + b.index;
  out.line = "fibre " + fibre.to_string() + " index " + std::to_string(s.index) + " = " + std::to_string(a.index) +
             " + " + std::to_string(b.index) + (out.passed ? "" : " fails");
  out.session = session_text(fibre);
  out.reports = {std::move(a), std::move(b), std::move(s)};
  return out;
}

TrialResult trial_points(std::mt19937_64& rng, const FamilyOptions& options) {
  Ring ring = make_ring(options.characteristic, names("", 3));
  IdealHandle ideal = generic_points_ideal(ring, options.points, rng);
  BurchReport report = burch_index_graded(ideal, options.linear_trials, rng());
  std::size_t expected = expected_points_index(options.points);
  TrialResult out;
  out.passed = report.index == expected;
  out.line = std::to_string(options.points) + " points: index " + std::to_string(report.index) + " expected " +
             std::to_string(expected);
  out.session = session_text(ideal);
  out.reports.push_back(std::move(report));
  return out;
}

TrialResult trial_dim2(std::mt19937_64& rng, const FamilyOptions& options) {
  Ring ring = make_ring(options.characteristic, names("", 2));
  std::optional<IdealHandle> ideal;
  while (!ideal) {
    std::vector<Polynomial> gens;
    std::size_t count = uniform<std::size_t>(rng, 2, 4);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_form(ring, uniform(rng, 2, 5), 3, rng));
    IdealHandle candidate(ring, gens);
    if (quotient_dimension(candidate)) ideal = candidate;
  }
  std::size_t lin = lin_profile(ModulePresentation::from_ideal(*ideal), 1).at(0);
  BurchReport report = burch_index_depth0(*ideal);
  TrialResult out;
  out.passed = report.index == std::min<std::size_t>(lin, 2);
  out.line = "I = " + ideal->to_string() + " index " + std::to_string(report.index) + " lin_1 " + std::to_string(lin);
  out.session = session_text(*ideal);
  out.reports.push_back(std::move(report));
  return out;
}

TrialResult trial_mainthm(std::mt19937_64& rng, const FamilyOptions& options) {
  const std::size_t n = uniform<std::size_t>(rng, 2, 3);
  Ring ring = make_ring(options.characteristic, names("", n));
  std::vector<Polynomial> j;
  for (std::size_t v = 0; v < n; ++v) {
    Monomial m(n);
    m.set(v, uniform<std::uint16_t>(rng, 2, 3));
    j.push_back(Polynomial::monomial(ring, ring->field().one(), m));
  }
  std::size_t extra = uniform<std::size_t>(rng, 0, 2);
  for (std::size_t i = 0; i < extra; ++i)
    j.push_back(Polynomial::monomial(ring, ring->field().one(), random_monomial(n, uniform(rng, 2, 3), rng)));
  IdealHandle ideal = ideal_product(IdealHandle(ring, j), IdealHandle::maximal(ring));
  BurchReport report = burch_index_depth0(ideal);
  std::optional<Polynomial> relation;
  while (!relation) {
    Polynomial m = Polynomial::monomial(ring, ring->field().one(), random_monomial(n, uniform(rng, 1, 3), rng));
    if (!ideal.contains(m)) relation = m;
  }
  auto profile = summand_profile(ModulePresentation::cyclic(ring, ideal, {*relation}), options.steps);
  bool early = false;
  for (std::size_t i = 0; i < std::min<std::size_t>(5, profile.size()); ++i) early = early || profile[i];
  bool late = true;
  for (std::size_t i = 6; i < profile.size(); ++i) late = late && profile[i];
  TrialResult out;
  out.passed = report.index >= 2 && early && late;
  std::ostringstream line;
  line << "I = " << ideal.to_string() << ", M = R/(" << relation->to_string() << "), index " << report.index
       << ", profile";
  for (bool b : profile) line << (b ? " true" : " false");
  out.line = line.str();
  out.session = session_text(ideal, relation);
  out.reports.push_back(std::move(report));
  return out;
}

TrialResult trial_extension(std::mt19937_64& rng, const FamilyOptions& options) {
  const std::size_t n = uniform<std::size_t>(rng, 2, 3);
  Ring ring = make_ring(options.characteristic, names("", n));
  std::optional<IdealHandle> ideal;
  while (!ideal) {
    std::vector<Polynomial> gens;
    std::size_t count = uniform<std::size_t>(rng, 1, 3);
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_form(ring, uniform(rng, 2, 3), 3, rng));
    IdealHandle candidate(ring, gens);
    if (!candidate.is_zero() && depth_of_quotient(candidate).depth == 0) ideal = candidate;
  }
  std::vector<std::string> vars = ring->variables();
  vars.push_back("t");
  Ring wide = make_ring(options.characteristic, vars);
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < n; ++v) images.push_back(Polynomial::variable(wide, v));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal->generators()) gens.push_back(g.substitute(images, wide));
  gens.push_back(Polynomial::variable(wide, n));
  IdealHandle extended(wide, gens);
  BurchReport a = burch_index_graded(*ideal, options.linear_trials, rng());
  BurchReport b = burch_index_graded(extended, options.linear_trials, rng());
  TrialResult out;
  out.passed = a.index == b.index;
  out.line = "I = " + ideal->to_string() + " index " + std::to_string(a.index) + ", with t adjoined " +
             std::to_string(b.index);
  out.session = session_text(*ideal);
  out.reports = {std::move(a), std::move(b)};
  return out;
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : family_names())
    if (n == name) return f;
  return std::nullopt;
}

std::string family_name(Family family) {
  for (const auto& [f, n] : family_names())
    if (f == family) return n;
  return "?";
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), 0x6275u};
  return std::mt19937_64(seq);
}

Polynomial random_form(const Ring& ring, int degree, std::size_t max_terms, std::mt19937_64& rng) {
  return random_form_in(ring, all_variables(ring), degree, max_terms, rng);
}

std::uint64_t hilbert_function(const IdealHandle& ideal, int degree) {
  const Ring& ring = ideal.ring();
  std::vector<Monomial> leads;
  for (const auto& g : ideal.gb().polynomials()) leads.push_back(g.leading_term().mono);
  std::uint64_t count = 0;
  for (const auto& m : monomials_of_degree(ring->nvars(), all_variables(ring), degree)) {
    bool standard = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
    if (standard) ++count;
  }
  return count;
}

IdealHandle generic_points_ideal(const Ring& ring, std::size_t d, std::mt19937_64& rng) {
  if (ring->nvars() != 3) throw Error("points live in the projective plane: 3 variables needed");
  if (d == 0) throw Error("at least one point is needed");
  const std::uint32_t p = ring->characteristic();
  for (int attempt = 0; attempt < 100; ++attempt) {
    std::optional<IdealHandle> ideal;
    for (std::size_t k = 0; k < d; ++k) {
      std::array<FieldElement, 3> point{};
      do {
        for (auto& c : point) c = FieldElement{uniform<std::uint32_t>(rng, 0, p - 1)};
      } while (point[0].is_zero() && point[1].is_zero() && point[2].is_zero());
      std::size_t pivot = 0;
      while (point[pivot].is_zero()) ++pivot;
      std::vector<Polynomial> forms;
      for (std::size_t j = 0; j < 3; ++j) {
        if (j == pivot) continue;
        forms.push_back(Polynomial::variable(ring, j).scaled(point[pivot]) -
                        Polynomial::variable(ring, pivot).scaled(point[j]));
      }
      IdealHandle pt(ring, forms);
      ideal = ideal ? ideal_intersection(*ideal, pt) : pt;
    }
    bool generic = true;
    for (int t = 0;; ++t) {
      std::uint64_t all = static_cast<std::uint64_t>((t + 1) * (t + 2) / 2);
      if (hilbert_function(*ideal, t) != std::min<std::uint64_t>(all, d)) {
        generic = false;
        break;
      }
      if (all >= d) break;
    }
    if (generic) return *ideal;
  }
  throw Error("no generic configuration of points found");
}

std::size_t expected_points_index(std::size_t d) {
  if (d == 2) return 1;
  for (std::size_t s = 1; s * (2 * s + 1) + s <= d; ++s)
    if (s * (2 * s + 1) + s == d) return 0;
  return 2;
}

std::string session_text(const IdealHandle& ideal, const std::optional<Polynomial>& relation) {
  const Ring& ring = ideal.ring();
  std::ostringstream out;
  out << "ring S = GF(" << ring->characteristic() << ")[";
  for (std::size_t i = 0; i < ring->nvars(); ++i) out << (i ? "," : "") << ring->variables()[i];
  out << "]\n";
  out << "ideal I = ";
  if (ideal.is_zero()) out << "0";
  for (std::size_t i = 0; i < ideal.generators().size(); ++i) out << (i ? ", " : "") << ideal.generators()[i].to_string();
  out << "\n";
  if (relation) {
    out << "quotient R = S/I\n";
    out << "module M = R/(" << relation->to_string() << ")\n";
  }
  return out.str();
}

TrialResult run_trial(Family family, std::uint64_t seed, std::size_t trial, const FamilyOptions& options) {
  std::mt19937_64 rng = trial_engine(seed, trial);
  switch (family) {
    case Family::kJn:
      return trial_jn(rng, options);
    case Family::kFibre:
      return trial_fibre(rng, options);
    case Family::kTorind:
      return trial_torind(rng, options);
    case Family::kPoints:
      return trial_points(rng, options);
    case Family::kDim2:
      return trial_dim2(rng, options);
    case Family::kMainthm:
      return trial_mainthm(rng, options);
    case Family::kExtension:
      return trial_extension(rng, options);
  }
  throw Error("unknown family");
}

}  // namespace burchlab
