#include "burchlab/artinian.hpp"

#include <algorithm>

#include "burchlab/errors.hpp"

namespace burchlab {

ArtinianRing::ArtinianRing(IdealHandle ideal) : ideal_(std::move(ideal)) {
  const std::size_t n = nvars();
  basis_ = standard_monomials(ideal_.gb(), n);
  if (basis_.empty()) throw Error("the unit ideal has no Artinian quotient ring");
  for (const auto& level : basis_)
    for (std::uint32_t i = 0; i < level.size(); ++i) index_.emplace(level[i], i);

  const auto& f = field();
  mult_.resize(basis_.size());
  pred_.resize(basis_.size());
  socle_.resize(basis_.size());
  for (int d = 0; d <= top_degree(); ++d) {
    const auto& level = basis_[static_cast<std::size_t>(d)];
    auto& mult = mult_[static_cast<std::size_t>(d)];
    mult.resize(level.size() * n);
    for (std::size_t i = 0; i < level.size(); ++i) {
      for (std::size_t v = 0; v < n; ++v) {
        if (d == top_degree()) continue;
        Monomial m = level[i] * Monomial::variable(n, v);
        mult[i * n + v] = coordinates(Polynomial::monomial(ring(), f.one(), m));
      }
      if (d > 0) {
        std::size_t last = 0;
        for (std::size_t v = 0; v < n; ++v)
          if (level[i][v] > 0) last = v;
        Monomial q = level[i] / Monomial::variable(n, last);
        pred_[static_cast<std::size_t>(d)].emplace_back(last, index_.at(q));
      } else {
        pred_[0].emplace_back(0, 0);
      }
    }
    // socle: kernel of R_d -> (R_{d+1})^n
    const std::size_t next = dim(d + 1);
    Echelon ech(n * next, f, level.size());
    for (std::uint32_t i = 0; i < level.size(); ++i) {
      SparseVec image;
      for (std::size_t v = 0; v < n && next > 0; ++v)
        for (const auto& e : mult[i * n + v])
          image.push_back({static_cast<std::uint32_t>(v * next + e.index), e.value});
      bool added = false;
      SparseVec combo = ech.insert_tracked(image, SparseVec{{i, 1}}, added);
      if (!added) socle_[static_cast<std::size_t>(d)].push_back(std::move(combo));
    }
  }
}

std::size_t ArtinianRing::length() const {
  std::size_t total = 0;
  for (const auto& level : basis_) total += level.size();
  return total;
}

std::optional<std::uint32_t> ArtinianRing::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseVec ArtinianRing::coordinates(const Polynomial& f) const {
  Polynomial r = ideal_.gb().normal_form(f);
  SparseVec out;
  if (r.is_zero()) return out;
  if (!r.is_homogeneous()) throw NotHomogeneous("coordinates need a homogeneous polynomial");
  for (const auto& t : r.terms()) out.push_back({index_.at(t.mono), t.coef.residue});
  std::sort(out.begin(), out.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  return out;
}

Polynomial ArtinianRing::polynomial(int degree, const SparseVec& coords) const {
  std::vector<Term> terms;
  for (const auto& e : coords) terms.push_back({FieldElement{e.value}, basis_monomial(degree, e.index)});
  return Polynomial(ring(), std::move(terms));
}

GradedFreeModule::GradedFreeModule(const ArtinianRing& ring, std::vector<int> degrees)
    : ring_(&ring), degrees_(std::move(degrees)) {
  if (degrees_.empty()) return;
  min_ = *std::min_element(degrees_.begin(), degrees_.end());
  max_ = *std::max_element(degrees_.begin(), degrees_.end()) + ring.top_degree();
  for (int e = min_; e <= max_; ++e) {
    std::vector<std::uint32_t> off(degrees_.size() + 1, 0);
    for (std::size_t j = 0; j < degrees_.size(); ++j)
      off[j + 1] = off[j] + static_cast<std::uint32_t>(ring.dim(e - degrees_[j]));
    offsets_.push_back(std::move(off));
  }
}

std::size_t GradedFreeModule::dim(int e) const {
  if (degrees_.empty() || e < min_ || e > max_) return 0;
  return offsets(e).back();
}

std::uint32_t GradedFreeModule::offset(int e, std::size_t gen) const { return offsets(e)[gen]; }

std::size_t GradedFreeModule::generator_of(int e, std::uint32_t coord) const {
  const auto& off = offsets(e);
  return static_cast<std::size_t>(std::upper_bound(off.begin(), off.end(), coord) - off.begin()) - 1;
}

SparseVec GradedFreeModule::times_variable(int e, const SparseVec& v, std::size_t var) const {
  SparseVec out;
  if (e + 1 > max_ || v.empty()) return out;
  const auto& f = ring_->field();
  const auto& off = offsets(e);
  const auto& off_next = offsets(e + 1);
  std::size_t j = 0;
  for (const auto& entry : v) {
    while (off[j + 1] <= entry.index) ++j;  // entries are sorted, so j only moves forward
    std::uint32_t local = entry.index - off[j];
    for (const auto& t : ring_->times_variable(e - degrees_[j], local, var))
      out.push_back({off_next[j] + t.index, f.mul(FieldElement{t.value}, FieldElement{entry.value}).residue});
  }
  canonicalize(out, f);
  return out;
}

std::vector<SparseVec> GradedFreeModule::socle(int e) const {
  std::vector<SparseVec> out;
  if (dim(e) == 0) return out;
  const auto& off = offsets(e);
  for (std::size_t j = 0; j < degrees_.size(); ++j) {
    int d = e - degrees_[j];
    if (d < 0 || d > ring_->top_degree()) continue;
    for (const auto& s : ring_->socle(d)) {
      SparseVec shifted;
      for (const auto& entry : s) shifted.push_back({off[j] + entry.index, entry.value});
      out.push_back(std::move(shifted));
    }
  }
  return out;
}

namespace {

SparseVec combine(const std::vector<SparseVec>& vectors, const SparseVec& coefficients, std::size_t dim,
                  const PrimeField& f) {
  DenseAccumulator acc(dim, f);
  for (const auto& c : coefficients) acc.add(vectors[c.index], c.value);
  return acc.extract();
}

// Elements of the socle of U_e, given an echelon spanning U_e.
std::vector<SparseVec> socle_of_span(const std::vector<SparseVec>& span_rows, const std::vector<SparseVec>& socle,
                                     std::size_t dim, const PrimeField& f) {
  std::vector<SparseVec> out;
  if (socle.empty()) return out;
  Echelon ech(dim, f, socle.size());
  for (const auto& r : span_rows) ech.insert(r);
  for (std::uint32_t k = 0; k < socle.size(); ++k) {
    bool added = false;
    SparseVec combo = ech.insert_tracked(socle[k], SparseVec{{k, 1}}, added);
    if (!added && !combo.empty()) out.push_back(combine(socle, combo, dim, f));
  }
  return out;
}

}  // namespace

SubmoduleAnalysis analyze_image(const ArtinianRing& ring, const GradedFreeModule& target,
                                const std::vector<GradedElement>& spanning, bool split_socle) {
  SubmoduleAnalysis out;
  const auto& f = ring.field();
  if (spanning.empty() || target.rank() == 0) return out;
  int lo = spanning.front().degree;
  for (const auto& s : spanning) lo = std::min(lo, s.degree);
  out.dims_from = lo;
  std::vector<GradedElement> k_gens, other_gens;
  std::vector<SparseVec> prev_rows;
  for (int e = lo; e <= target.max_degree(); ++e) {
    const std::size_t dim = target.dim(e);
    Echelon ech(dim, f);
    for (const auto& row : prev_rows)
      for (std::size_t v = 0; v < ring.nvars(); ++v) ech.insert(target.times_variable(e - 1, row, v));
    std::vector<const GradedElement*> cands;
    for (const auto& s : spanning)
      if (s.degree == e && !s.coords.empty()) cands.push_back(&s);

    // soc(U)_e needs the full U_e, built on a scratch echelon
    std::vector<SparseVec> socle_elems;
    if (dim > 0) {
      std::vector<SparseVec> span_rows = ech.rows();
      Echelon full(dim, f);
      for (const auto& r : span_rows) full.insert(r);
      for (const auto* c : cands) full.insert(c->coords);
      socle_elems = socle_of_span(full.rows(), target.socle(e), dim, f);
    }
    for (auto& w : socle_elems) {
      if (split_socle) {
        if (ech.insert(w)) {
          k_gens.push_back({e, std::move(w)});
          ++out.k_summands;
          out.has_k_summand = true;
        }
      } else if (!ech.reduce(w).empty()) {
        out.has_k_summand = true;
      }
    }
    for (const auto* c : cands)
      if (ech.insert(c->coords)) other_gens.push_back(*c);
    out.dims.push_back(ech.rank());
    prev_rows = ech.rows();
  }
  out.generators = std::move(k_gens);
  out.generators.insert(out.generators.end(), std::make_move_iterator(other_gens.begin()),
                        std::make_move_iterator(other_gens.end()));
  return out;
}

SubmoduleAnalysis analyze_kernel(const ArtinianRing& ring, const GradedFreeModule& source,
                                 const GradedFreeModule& target, const std::vector<GradedElement>& columns,
                                 bool split_socle, const std::vector<std::size_t>* image_dims, int image_dims_from) {
  SubmoduleAnalysis out;
  const auto& f = ring.field();
  if (columns.size() != source.rank()) throw RankMismatch("one column per source generator expected");
  if (source.rank() == 0) return out;
  out.dims_from = source.min_degree();
  std::vector<SparseVec> prev_img;
  std::vector<SparseVec> prev_rows;
  std::vector<GradedElement> k_gens, other_gens;

  for (int e = source.min_degree(); e <= source.max_degree(); ++e) {
    const std::size_t dim = source.dim(e);
    const std::size_t tdim = target.dim(e);
    // images of the coordinate basis of G_e
    std::vector<SparseVec> img(dim);
    for (std::size_t j = 0; j < source.rank(); ++j) {
      int d = e - source.degrees()[j];
      if (d < 0 || d > ring.top_degree()) continue;
      std::uint32_t off = source.offset(e, j);
      if (d == 0) {
        if (columns[j].degree != e && !columns[j].coords.empty())
          throw NotHomogeneous("column degree differs from its source degree");
        img[off] = columns[j].coords;
        continue;
      }
      std::uint32_t prev_off = source.offset(e - 1, j);
      for (std::uint32_t b = 0; b < ring.dim(d); ++b) {
        auto [var, pb] = ring.predecessor(d, b);
        img[off + b] = target.times_variable(e - 1, prev_img[prev_off + pb], var);
      }
    }

    Echelon ech(dim, f);
    for (const auto& row : prev_rows)
      for (std::size_t v = 0; v < ring.nvars(); ++v) ech.insert(source.times_variable(e - 1, row, v));

    // socle of the kernel: socle vectors of G_e mapping to zero
    std::vector<SparseVec> socle_elems;
    {
      std::vector<SparseVec> soc = source.socle(e);
      if (!soc.empty()) {
        Echelon timg(tdim, f, soc.size());
        for (std::uint32_t k = 0; k < soc.size(); ++k) {
          SparseVec image = tdim > 0 ? combine(img, soc[k], tdim, f) : SparseVec{};
          // combine() indexes img by coordinate; soc[k] holds coordinates of G_e
          bool added = false;
          SparseVec combo = timg.insert_tracked(image, SparseVec{{k, 1}}, added);
          if (!added && !combo.empty()) socle_elems.push_back(combine(soc, combo, dim, f));
        }
      }
    }
    for (auto& w : socle_elems) {
      if (split_socle) {
        if (ech.insert(w)) {
          k_gens.push_back({e, std::move(w)});
          out.has_k_summand = true;
        }
      } else if (!ech.reduce(w).empty()) {
        out.has_k_summand = true;
      }
    }
    // when not splitting, the socle checks must not add rows; ech is unchanged

    std::optional<std::size_t> remaining;
    if (image_dims) {
      int idx = e - image_dims_from;
      std::size_t image_dim = (idx >= 0 && static_cast<std::size_t>(idx) < image_dims->size())
                                  ? (*image_dims)[static_cast<std::size_t>(idx)]
                                  : 0;
      if (image_dim > dim) throw InvariantViolation("image dimension exceeds source dimension");
      std::size_t kernel_dim = dim - image_dim;
      if (kernel_dim < ech.rank()) throw InvariantViolation("kernel dimension below the span of mK");
      remaining = kernel_dim - ech.rank();
    }
    if (!remaining || *remaining > 0) {
      Echelon timg(tdim, f, dim);
      std::size_t found = 0;
      std::vector<std::uint32_t> free;
      for (std::uint32_t c = 0; c < dim; ++c)
        if (!ech.is_pivot(c)) free.push_back(c);
      for (std::uint32_t c : free) {
        bool added = false;
        SparseVec combo = timg.insert_tracked(img[c], SparseVec{{c, 1}}, added);
        if (added) continue;
        if (!ech.insert(combo)) throw InvariantViolation("kernel vector on free coordinates is dependent");
        other_gens.push_back({e, std::move(combo)});
        ++found;
        if (remaining && found == *remaining) break;
      }
      if (remaining && found != *remaining) throw InvariantViolation("kernel dimension mismatch");
    }
    out.dims.push_back(ech.rank());
    prev_rows = ech.rows();
    prev_img = std::move(img);

    // exactness: every new generator maps to zero
    auto check = [&](const GradedElement& g) {
      if (tdim > 0 && !combine(prev_img, g.coords, tdim, f).empty())
        throw InvariantViolation("kernel generator does not map to zero");
      ++out.exactness_checks;
    };
    for (auto it = k_gens.rbegin(); it != k_gens.rend() && it->degree == e; ++it) check(*it);
    for (auto it = other_gens.rbegin(); it != other_gens.rend() && it->degree == e; ++it) check(*it);
  }
  out.k_summands = k_gens.size();
  out.generators = std::move(k_gens);
  out.generators.insert(out.generators.end(), std::make_move_iterator(other_gens.begin()),
                        std::make_move_iterator(other_gens.end()));
  return out;
}

bool cokernel_has_k_summand(const ArtinianRing& ring, const GradedFreeModule& target,
                            const std::vector<GradedElement>& spanning) {
  const auto& f = ring.field();
  const std::size_t n = ring.nvars();
  if (target.rank() == 0) return false;
  // U_e echelons for every degree of F
  std::vector<std::vector<SparseVec>> rows(static_cast<std::size_t>(target.max_degree() - target.min_degree() + 2));
  auto slot = [&](int e) -> std::vector<SparseVec>& { return rows[static_cast<std::size_t>(e - target.min_degree())]; };
  for (int e = target.min_degree(); e <= target.max_degree(); ++e) {
    Echelon ech(target.dim(e), f);
    if (e > target.min_degree())
      for (const auto& r : slot(e - 1))
        for (std::size_t v = 0; v < n; ++v) ech.insert(target.times_variable(e - 1, r, v));
    for (const auto& s : spanning)
      if (s.degree == e && !s.coords.empty()) ech.insert(s.coords);
    slot(e) = ech.rows();
  }
  // k | F/U iff some v with m v in U has a nonzero generator coordinate modulo U
  for (int e = target.min_degree(); e <= target.max_degree(); ++e) {
    bool has_generator_coord = false;
    for (std::size_t j = 0; j < target.rank(); ++j)
      if (target.degrees()[j] == e) has_generator_coord = true;
    if (!has_generator_coord) continue;
    const std::size_t dim = target.dim(e);
    const std::size_t next = target.dim(e + 1);
    // W_e = { v : x_i v in U_{e+1} for all i }: nullspace of v -> (x_i v mod U_{e+1})_i,
    // computed by stacking U_{e+1} copies as zero-combination rows
    Echelon ech(n * next, f, dim);
    if (next > 0) {
      for (std::size_t v = 0; v < n; ++v)
        for (const auto& r : slot(e + 1)) {
          SparseVec shifted;
          for (const auto& entry : r) shifted.push_back({static_cast<std::uint32_t>(v * next + entry.index), entry.value});
          ech.insert(shifted);
        }
    }
    std::vector<SparseVec> w_basis;
    for (std::uint32_t c = 0; c < dim; ++c) {
      SparseVec unit{{c, 1}};
      SparseVec image;
      for (std::size_t v = 0; v < n && next > 0; ++v)
        for (const auto& entry : target.times_variable(e, unit, v))
          image.push_back({static_cast<std::uint32_t>(v * next + entry.index), entry.value});
      bool added = false;
      SparseVec combo = ech.insert_tracked(image, unit, added);
      if (!added && !combo.empty()) w_basis.push_back(std::move(combo));
    }
    // mF_e + U_e: U_e rows plus every coordinate of positive local degree
    Echelon base(dim, f);
    for (std::size_t j = 0; j < target.rank(); ++j) {
      if (target.degrees()[j] == e) continue;
      for (std::uint32_t c = target.offset(e, j); c < target.offset(e, j + 1); ++c) base.insert(SparseVec{{c, 1}});
    }
    for (const auto& r : slot(e)) base.insert(r);
    for (const auto& w : w_basis)
      if (!base.reduce(w).empty()) return true;
  }
  return false;
}

}  // namespace burchlab
