#include "burchlab/polynomial.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

#include "burchlab/errors.hpp"

namespace burchlab {

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {}

Polynomial::Polynomial(Ring ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  for (const auto& t : terms)
    if (t.mono.size() != ring_->nvars()) throw RingMismatch("monomial size does not match the ring");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_compare_unchecked(a.mono, b.mono) > 0;
  });
  const auto& f = ring_->field();
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coef = f.add(terms_.back().coef, t.coef);
      if (terms_.back().coef.is_zero()) terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      terms_.push_back(t);
    }
  }
  check_canonical();
}

Polynomial Polynomial::constant(const Ring& ring, FieldElement c) {
  return monomial(ring, c, Monomial(ring->nvars()));
}

Polynomial Polynomial::variable(const Ring& ring, std::size_t index) {
  return monomial(ring, ring->field().one(), Monomial::variable(ring->nvars(), index));
}

Polynomial Polynomial::monomial(const Ring& ring, FieldElement c, const Monomial& m) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

void Polynomial::check_canonical() const {
#ifndef NDEBUG
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    assert(!terms_[i].coef.is_zero());
    if (i > 0) assert(grevlex_compare_unchecked(terms_[i - 1].mono, terms_[i].mono) > 0);
  }
#endif
}

namespace {

// merge a + c*m*b, both canonical
std::vector<Term> merge_add(const PrimeField& f, const std::vector<Term>& a, const std::vector<Term>& b,
                            FieldElement c, const Monomial* m) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto bterm = [&](std::size_t k) {
    Term t = b[k];
    t.coef = f.mul(t.coef, c);
    if (m) t.mono = t.mono * *m;
    return t;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Term bt = bterm(j);
    if (i == a.size()) {
      out.push_back(bt);
      ++j;
      continue;
    }
    int cmp = grevlex_compare_unchecked(a[i].mono, bt.mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(bt);
      ++j;
    } else {
      FieldElement s = f.add(a[i].coef, bt.coef);
      if (!s.is_zero()) out.push_back({s, bt.mono});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& q) const {
  require_same_ring(ring_, q.ring_);
  Polynomial r(ring_);
  r.terms_ = merge_add(ring_->field(), terms_, q.terms_, ring_->field().one(), nullptr);
  r.check_canonical();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
  require_same_ring(ring_, q.ring_);
  Polynomial r(ring_);
  r.terms_ = merge_add(ring_->field(), terms_, q.terms_, ring_->field().neg(ring_->field().one()), nullptr);
  r.check_canonical();
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(ring_->field().one())); }

Polynomial Polynomial::operator*(const Polynomial& q) const {
  require_same_ring(ring_, q.ring_);
  if (is_zero() || q.is_zero()) return Polynomial(ring_);
  ring_->check_degree(degree() + q.degree());
  std::vector<Term> all;
  all.reserve(terms_.size() * q.terms_.size());
  const auto& f = ring_->field();
  for (const auto& a : terms_)
    for (const auto& b : q.terms_) all.push_back({f.mul(a.coef, b.coef), a.mono * b.mono});
  return Polynomial(ring_, std::move(all));
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial r(ring_);
  if (c.is_zero()) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coef = ring_->field().mul(t.coef, c);
  return r;
}

Polynomial Polynomial::times_monomial(FieldElement c, const Monomial& m) const {
  Polynomial r(ring_);
  if (c.is_zero() || is_zero()) return r;
  ring_->check_degree(degree() + m.degree());
  r.terms_ = terms_;
  for (auto& t : r.terms_) {
    t.coef = ring_->field().mul(t.coef, c);
    t.mono = t.mono * m;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(terms_.front().coef));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images, const Ring& target) const {
  if (images.size() != ring_->nvars()) throw RingMismatch("substitution needs one image per variable");
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, target->field().from_integer(t.coef.residue));
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      for (int e = 0; e < t.mono[i]; ++e) prod = prod * images[i];
    result = result + prod;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_->same_ring(*b.ring_) && a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  const auto& f = ring_->field();
  const auto& vars = ring_->variables();
  bool first = true;
  for (const auto& t : terms_) {
    std::int64_t c = f.symmetric(t.coef);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t mag = c < 0 ? -c : c;
    bool wrote = false;
    if (mag != 1 || t.mono.is_one()) {
      os << mag;
      wrote = true;
    }
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote) os << "*";
      os << vars[i];
      if (t.mono[i] > 1) os << "^" << t.mono[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

}  // namespace burchlab
