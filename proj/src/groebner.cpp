#include "burchlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "burchlab/errors.hpp"

namespace burchlab {

ModuleOrder::ModuleOrder(std::size_t rank) : shifts_(rank, 0), blocks_(rank, 0) {}

ModuleOrder::ModuleOrder(std::vector<int> shifts, std::vector<int> blocks)
    : shifts_(std::move(shifts)), blocks_(std::move(blocks)) {
  if (blocks_.empty()) blocks_.assign(shifts_.size(), 0);
  if (blocks_.size() != shifts_.size()) throw RankMismatch("block vector length differs from rank");
}

FlatVector to_flat(const VectorPolynomial& v, const ModuleOrder& order) {
  if (v.rank() != order.rank()) throw RankMismatch();
  FlatVector out;
  for (std::uint32_t c = 0; c < v.rank(); ++c)
    for (const auto& t : v[c].terms()) out.push_back({t.coef, t.mono, c});
  std::sort(out.begin(), out.end(), [&](const ModuleTerm& a, const ModuleTerm& b) {
    return order.compare(a.mono, a.comp, b.mono, b.comp) > 0;
  });
  return out;
}

VectorPolynomial from_flat(const FlatVector& v, const Ring& ring, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) parts[t.comp].push_back({t.coef, t.mono});
  VectorPolynomial out(ring, rank);
  for (std::size_t c = 0; c < rank; ++c) out.set(c, Polynomial(ring, std::move(parts[c])));
  return out;
}

namespace {

// a - c*m*b in the given order
FlatVector axpy(const PrimeField& f, const ModuleOrder& order, const FlatVector& a, FieldElement c,
                const Monomial& m, const FlatVector& b, std::size_t a_start = 0) {
  FlatVector out;
  out.reserve(a.size() + b.size());
  FieldElement negc = f.neg(c);
  std::size_t i = a_start, j = 0;
  out.insert(out.end(), a.begin(), a.begin() + static_cast<std::ptrdiff_t>(a_start));
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Monomial bm = b[j].mono * m;
    if (i == a.size()) {
      out.push_back({f.mul(b[j].coef, negc), bm, b[j].comp});
      ++j;
      continue;
    }
    int cmp = order.compare(a[i].mono, a[i].comp, bm, b[j].comp);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({f.mul(b[j].coef, negc), bm, b[j].comp});
      ++j;
    } else {
      FieldElement s = f.add(a[i].coef, f.mul(b[j].coef, negc));
      if (!s.is_zero()) out.push_back({s, bm, b[j].comp});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(const PrimeField& f, FlatVector& v) {
  if (v.empty()) return;
  FieldElement inv = f.inv(v.front().coef);
  for (auto& t : v) t.coef = f.mul(t.coef, inv);
}

// Working basis used during Buchberger; supports top and full reduction.
class Reducer {
 public:
  Reducer(const PrimeField& f, const ModuleOrder& order) : f_(f), order_(order), by_comp_(order.rank()) {}

  const FlatVector* find(const Monomial& m, std::uint32_t comp, std::size_t skip = SIZE_MAX) const {
    for (std::size_t idx : by_comp_[comp]) {
      if (idx == skip || !active_[idx]) continue;
      if (basis_[idx].front().mono.divides(m)) return &basis_[idx];
    }
    return nullptr;
  }

  FlatVector reduce_full(FlatVector v, std::size_t skip = SIZE_MAX) const {
    std::size_t pos = 0;
    while (pos < v.size()) {
      const FlatVector* g = find(v[pos].mono, v[pos].comp, skip);
      if (!g) {
        ++pos;
        continue;
      }
      const auto& lt = g->front();
      FieldElement c = f_.div(v[pos].coef, lt.coef);
      v = axpy(f_, order_, v, c, v[pos].mono / lt.mono, *g, pos);
    }
    return v;
  }

  std::size_t add(FlatVector v) {
    std::size_t idx = basis_.size();
    by_comp_[v.front().comp].push_back(idx);
    basis_.push_back(std::move(v));
    active_.push_back(true);
    return idx;
  }

  std::vector<FlatVector>& basis() { return basis_; }
  std::vector<bool>& active() { return active_; }
  const std::vector<std::size_t>& comp_members(std::uint32_t c) const { return by_comp_[c]; }

 private:
  const PrimeField& f_;
  const ModuleOrder& order_;
  std::vector<FlatVector> basis_;
  std::vector<bool> active_;
  std::vector<std::vector<std::size_t>> by_comp_;
};

struct Pair {
  std::size_t i, j;  // i < j; j == SIZE_MAX marks an input generator
  Monomial lcm;
  std::uint32_t comp;
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(i) << 32) | j;
}

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, ModuleOrder order, std::vector<FlatVector> basis)
    : ring_(std::move(ring)), order_(std::move(order)), basis_(std::move(basis)), by_comp_(order_.rank()) {
  for (std::size_t i = 0; i < basis_.size(); ++i) by_comp_[basis_[i].front().comp].push_back(i);
}

const FlatVector* GroebnerBasis::find_reducer(const Monomial& m, std::uint32_t comp) const {
  for (std::size_t idx : by_comp_[comp])
    if (basis_[idx].front().mono.divides(m)) return &basis_[idx];
  return nullptr;
}

FlatVector GroebnerBasis::normal_form_flat(FlatVector v) const {
  const auto& f = ring_->field();
  std::size_t pos = 0;
  while (pos < v.size()) {
    const FlatVector* g = find_reducer(v[pos].mono, v[pos].comp);
    if (!g) {
      ++pos;
      continue;
    }
    const auto& lt = g->front();
    v = axpy(f, order_, v, f.div(v[pos].coef, lt.coef), v[pos].mono / lt.mono, *g, pos);
  }
  return v;
}

VectorPolynomial GroebnerBasis::normal_form(const VectorPolynomial& f) const {
  require_same_ring(ring_, f.ring());
  if (f.rank() != rank()) throw RankMismatch();
  return from_flat(normal_form_flat(to_flat(f, order_)), ring_, rank());
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (rank() != 1) throw RankMismatch("polynomial normal form needs a rank-1 basis");
  return normal_form(VectorPolynomial::from_polynomial(f))[0];
}

std::vector<VectorPolynomial> GroebnerBasis::generators() const {
  std::vector<VectorPolynomial> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) out.push_back(from_flat(b, ring_, rank()));
  return out;
}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (rank() != 1) throw RankMismatch("polynomials() needs a rank-1 basis");
  std::vector<Polynomial> out;
  for (const auto& b : basis_) out.push_back(from_flat(b, ring_, 1)[0]);
  return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!a.ring_->same_ring(*b.ring_) || a.rank() != b.rank() || a.basis_.size() != b.basis_.size()) return false;
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    const auto& x = a.basis_[i];
    const auto& y = b.basis_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (x[k].coef != y[k].coef || !(x[k].mono == y[k].mono) || x[k].comp != y[k].comp) return false;
  }
  return true;
}

GroebnerBasis buchberger(const Ring& ring, const std::vector<VectorPolynomial>& gens, const ModuleOrder& order) {
  const auto& f = ring->field();
  const std::size_t rank = order.rank();
  Reducer red(f, order);

  // Input generators and S-pairs share one queue keyed by shifted degree.
  std::multimap<int, Pair> queue;
  std::vector<FlatVector> inputs;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    if (g.rank() != rank) throw RankMismatch();
    FlatVector v = to_flat(g, order);
    if (v.empty()) continue;
    ring->check_degree(v.front().mono.degree());
    std::size_t k = inputs.size();
    int d = order.shifted_degree(v.front().mono, v.front().comp);
    inputs.push_back(std::move(v));
    queue.emplace(d, Pair{k, SIZE_MAX, Monomial(), 0});
  }
  std::unordered_set<std::uint64_t> pending;

  auto add_element = [&](FlatVector v) {
    make_monic(f, v);
    std::size_t idx = red.basis().size();
    const Monomial lead = v.front().mono;
    const std::uint32_t comp = v.front().comp;
    for (std::size_t other : red.comp_members(comp)) {
      if (!red.active()[other]) continue;
      const Monomial& om = red.basis()[other].front().mono;
      if (rank == 1 && lead.coprime(om)) continue;  // product criterion
      Monomial l = lead.lcm(om);
      queue.emplace(order.shifted_degree(l, comp), Pair{other, idx, l, comp});
      pending.insert(pair_key(other, idx));
    }
    red.add(std::move(v));
  };

  auto chain_criterion = [&](const Pair& p) {
    for (std::size_t k : red.comp_members(p.comp)) {
      if (k == p.i || k == p.j || !red.active()[k]) continue;
      if (!red.basis()[k].front().mono.divides(p.lcm)) continue;
      if (pending.count(pair_key(p.i, k)) || pending.count(pair_key(p.j, k))) continue;
      return true;
    }
    return false;
  };

  while (!queue.empty()) {
    auto it = queue.begin();
    Pair p = it->second;
    queue.erase(it);
    FlatVector s;
    if (p.j == SIZE_MAX) {
      s = std::move(inputs[p.i]);
    } else {
      pending.erase(pair_key(p.i, p.j));
      if (chain_criterion(p)) continue;
      ring->check_degree(p.lcm.degree());
      const FlatVector& a = red.basis()[p.i];
      const FlatVector& b = red.basis()[p.j];
      // both monic: S = (l/lt a) a - (l/lt b) b
      FlatVector ta = axpy(f, order, FlatVector{}, f.neg(f.one()), p.lcm / a.front().mono, a);
      s = axpy(f, order, ta, f.one(), p.lcm / b.front().mono, b);
    }
    s = red.reduce_full(std::move(s));
    if (!s.empty()) add_element(std::move(s));
  }

  // minimalize: drop elements whose lead is divisible by another active lead
  auto& basis = red.basis();
  auto& active = red.active();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!active[i]) continue;
    for (std::size_t k : red.comp_members(basis[i].front().comp)) {
      if (k == i || !active[k]) continue;
      if (basis[k].front().mono.divides(basis[i].front().mono)) {
        active[i] = false;
        break;
      }
    }
  }
  // interreduce tails
  std::vector<FlatVector> reduced;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!active[i]) continue;
    FlatVector v = basis[i];
    FlatVector tail(v.begin() + 1, v.end());
    tail = red.reduce_full(std::move(tail), i);
    FlatVector out{v.front()};
    out.insert(out.end(), tail.begin(), tail.end());
    make_monic(f, out);
    reduced.push_back(std::move(out));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const FlatVector& a, const FlatVector& b) {
    return order.compare(a.front().mono, a.front().comp, b.front().mono, b.front().comp) < 0;
  });
  return GroebnerBasis(ring, order, std::move(reduced));
}

GroebnerBasis buchberger(const Ring& ring, const std::vector<VectorPolynomial>& gens, std::size_t rank) {
  return buchberger(ring, gens, ModuleOrder(rank));
}

GroebnerBasis buchberger(const Ring& ring, const std::vector<Polynomial>& gens) {
  std::vector<VectorPolynomial> v;
  v.reserve(gens.size());
  for (const auto& g : gens) v.push_back(VectorPolynomial::from_polynomial(g));
  return buchberger(ring, v, ModuleOrder(1));
}

std::vector<VectorPolynomial> syzygies(const std::vector<VectorPolynomial>& vectors, const std::vector<int>& shifts) {
  if (vectors.empty()) return {};
  const Ring& ring = vectors.front().ring();
  const std::size_t r = shifts.size();
  const std::size_t m = vectors.size();
  std::vector<int> gshifts(shifts);
  std::vector<int> blocks(r, 0);
  for (const auto& v : vectors) {
    if (v.rank() != r) throw RankMismatch();
    auto d = v.homogeneous_degree(shifts);
    if (!d && !v.is_zero()) throw NotHomogeneous("syzygy input is not homogeneous for the given shifts");
    gshifts.push_back(d.value_or(0));
    blocks.push_back(1);
  }
  ModuleOrder order(gshifts, blocks);
  std::vector<VectorPolynomial> graph;
  graph.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Polynomial> entries(vectors[i].entries());
    for (std::size_t k = 0; k < m; ++k)
      entries.push_back(k == i ? Polynomial::constant(ring, ring->field().one()) : Polynomial(ring));
    graph.emplace_back(std::move(entries));
  }
  GroebnerBasis gb = buchberger(ring, graph, order);

  std::vector<VectorPolynomial> out;
  for (const auto& g : gb.flat()) {
    if (g.front().comp < r) continue;  // F-part nonzero
    std::vector<Polynomial> tag;
    VectorPolynomial full = from_flat(g, ring, r + m);
    for (std::size_t k = 0; k < m; ++k) tag.push_back(full[r + k]);
    VectorPolynomial c(std::move(tag));
    VectorPolynomial check(ring, r);
    for (std::size_t k = 0; k < m; ++k)
      if (!c[k].is_zero()) check = check + vectors[k].times(c[k]);
    if (!check.is_zero()) throw InvariantViolation("emitted syzygy does not vanish");
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<VectorPolynomial> syzygies(const std::vector<Polynomial>& polys) {
  std::vector<VectorPolynomial> v;
  for (const auto& p : polys) v.push_back(VectorPolynomial::from_polynomial(p));
  return syzygies(v, std::vector<int>{0});
}

}  // namespace burchlab
