#include "burchlab/ideal.hpp"

#include "burchlab/errors.hpp"
#include "burchlab/parser.hpp"
#include "burchlab/testing_hooks.hpp"

namespace burchlab {

IdealHandle::IdealHandle(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw NotHomogeneous("generator '" + g.to_string() + "' is not homogeneous");
    generators_.push_back(std::move(g));
  }
}

IdealHandle IdealHandle::maximal(const Ring& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
  return IdealHandle(ring, std::move(vars));
}

IdealHandle IdealHandle::from_strings(const Ring& ring, const std::vector<std::string>& generators) {
  std::vector<Polynomial> gens;
  for (const auto& s : generators) gens.push_back(parse_polynomial(s, ring));
  return IdealHandle(ring, std::move(gens));
}

const GroebnerBasis& IdealHandle::gb() const {
  std::call_once(cache_->once, [this] { cache_->gb.emplace(buchberger(ring_, generators_)); });
  return *cache_->gb;
}

bool IdealHandle::is_unit() const {
  for (const auto& g : gb().polynomials())
    if (g.is_constant()) return true;
  return false;
}

bool IdealHandle::contains(const IdealHandle& other) const {
  for (const auto& g : other.generators_)
    if (!contains(g)) return false;
  return true;
}

int IdealHandle::min_generator_degree() const {
  int best = -1;
  for (const auto& g : generators_)
    if (best < 0 || g.degree() < best) best = g.degree();
  return best;
}

std::string IdealHandle::to_string(bool reduced) const {
  std::vector<Polynomial> gens = reduced ? gb().polynomials() : generators_;
  std::string s = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) s += ", ";
    s += gens[i].to_string();
  }
  return s + ")";
}

IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens(a.generators());
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators())
    for (const auto& g : b.generators()) gens.push_back(f * g);
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return IdealHandle::zero(a.ring());
  // sum a_i g_i = -sum b_j h_j; the common value lies in both ideals
  std::vector<Polynomial> all(a.generators());
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  const std::size_t na = a.generators().size();
  std::vector<Polynomial> gens;
  for (const auto& syz : syzygies(all)) {
    Polynomial v(a.ring());
    for (std::size_t i = 0; i < na; ++i) v = v + syz[i] * all[i];
    if (!v.is_zero()) gens.push_back(std::move(v));
  }
  return IdealHandle(a.ring(), std::move(gens));
}

IdealHandle ideal_colon(const IdealHandle& ideal, const Polynomial& g) {
  require_same_ring(ideal.ring(), g.ring());
  if (g.is_zero()) throw ZeroColonDivisor();
  std::vector<Polynomial> all{g};
  all.insert(all.end(), ideal.generators().begin(), ideal.generators().end());
  std::vector<Polynomial> gens;
  for (const auto& syz : syzygies(all))
    if (!syz[0].is_zero()) gens.push_back(syz[0]);
  return IdealHandle(ideal.ring(), std::move(gens));
}

IdealHandle ideal_colon(const IdealHandle& ideal, const IdealHandle& divisor) {
  require_same_ring(ideal.ring(), divisor.ring());
  if (divisor.is_zero()) throw ZeroColonDivisor();
  std::optional<IdealHandle> result;
  for (const auto& g : divisor.generators()) {
    IdealHandle part = ideal_colon(ideal, g);
    result = result ? ideal_intersection(*result, part) : part;
  }
  if (testing::fault_active(testing::Fault::kBrokenColon)) {
    // drop the last generator of the reduced basis
    auto gens = result->gb().polynomials();
    if (!gens.empty()) gens.pop_back();
    return IdealHandle(ideal.ring(), std::move(gens));
  }
  return *result;
}

std::vector<std::vector<Monomial>> standard_monomials(const GroebnerBasis& gb, std::size_t nvars) {
  std::vector<Monomial> leads;
  for (const auto& g : gb.flat()) leads.push_back(g.front().mono);
  for (const auto& l : leads)
    if (l.is_one()) return {};
  for (std::size_t v = 0; v < nvars; ++v) {
    bool bounded = false;
    for (const auto& l : leads) {
      if (l.degree() == l[v]) {
        bounded = true;
        break;
      }
    }
    if (!bounded) throw NotArtinian();
  }
  auto standard = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (l.divides(m)) return false;
    return true;
  };
  std::vector<std::vector<Monomial>> by_degree;
  by_degree.push_back({Monomial(nvars)});
  while (true) {
    // degree d+1 standard monomials are x_v * m with m standard of degree d;
    // generate each once by multiplying only by variables >= the last one used
    std::vector<Monomial> next;
    for (const auto& m : by_degree.back()) {
      std::size_t last = 0;
      for (std::size_t v = 0; v < nvars; ++v)
        if (m[v] > 0) last = v;
      for (std::size_t v = last; v < nvars; ++v) {
        Monomial candidate = m * Monomial::variable(nvars, v);
        if (standard(candidate)) next.push_back(candidate);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(),
              [](const Monomial& a, const Monomial& b) { return grevlex_compare_unchecked(a, b) > 0; });
    by_degree.push_back(std::move(next));
  }
  return by_degree;
}

std::optional<std::uint64_t> quotient_dimension(const IdealHandle& ideal) {
  try {
    std::uint64_t count = 0;
    for (const auto& level : standard_monomials(ideal.gb(), ideal.ring()->nvars())) count += level.size();
    return count;
  } catch (const NotArtinian&) {
    return std::nullopt;
  }
}

std::size_t linear_part_dimension(const IdealHandle& ideal) {
  std::size_t count = 0;
  for (const auto& g : ideal.gb().flat()) {
    if (g.front().mono.is_one()) return ideal.ring()->nvars();
    if (g.front().mono.degree() == 1) ++count;
  }
  return count;
}

}  // namespace burchlab
