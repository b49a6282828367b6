#include <doctest.h>

#include <algorithm>
#include <random>

#include "burchlab/burch.hpp"
#include "burchlab/errors.hpp"
#include "burchlab/parser.hpp"
#include "burchlab/resolution.hpp"
#include "oracles.hpp"

using namespace burchlab;

namespace {

Polynomial P(const std::string& text, const Ring& ring) { return parse_polynomial(text, ring); }
IdealHandle I(const Ring& ring, const std::vector<std::string>& gens) { return IdealHandle::from_strings(ring, gens); }

VectorPolynomial V(const Ring& ring, std::initializer_list<const char*> entries) {
  std::vector<Polynomial> out;
  for (auto e : entries) out.push_back(P(e, ring));
  return VectorPolynomial(std::move(out));
}

std::vector<std::vector<Polynomial>> rows_of(const ModulePresentation& m) {
  std::vector<std::vector<Polynomial>> rows(m.rank());
  for (const auto& c : m.columns())
    for (std::size_t i = 0; i < m.rank(); ++i) rows[i].push_back(c[i]);
  return rows;
}

// Fitt_0 of a square-or-wide presentation: the maximal minors.
std::vector<Polynomial> fitting0(const ModulePresentation& m) {
  if (m.rank() == 0) return {Polynomial::constant(m.ring(), m.ring()->field().one())};
  return oracle::minors(m.ring(), rows_of(m), m.rank());
}

ModulePresentation coker_of_step(const ResolutionSlice& slice, std::size_t i) {
  const FreeMap& d = slice.differentials[i];
  return ModulePresentation(slice.ring, slice.quotient, d.target_shifts, d.dense_columns(slice.ring));
}

// Random Artinian ideal in the given ring: pure powers plus a couple of forms.
IdealHandle random_artinian(const Ring& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pw(2, 3), extra(0, 2), deg(2, 3);
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < r->nvars(); ++v) {
    Monomial m(r->nvars());
    m.set(v, pw(rng));
    gens.push_back(Polynomial::monomial(r, r->field().one(), m));
  }
  for (int k = extra(rng); k > 0; --k) gens.push_back(oracle::random_form(r, deg(rng), 3, rng));
  return IdealHandle(r, gens);
}

Polynomial random_nonmember(const IdealHandle& i, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(1, 2);
  for (;;) {
    Polynomial f = oracle::random_form(i.ring(), deg(rng), 2, rng);
    if (!i.contains(f)) return f;
  }
}

}  // namespace

TEST_CASE("kernels over S") {
  Ring r = make_ring(101, {"x", "y"});
  auto koszul = kernel_over_S(ModulePresentation(r, std::nullopt, {0}, {V(r, {"x"}), V(r, {"y"})}));
  REQUIRE(koszul.columns().size() == 1);
  Polynomial x = P("x", r), y = P("y", r);
  CHECK((koszul.columns()[0][0] * x + koszul.columns()[0][1] * y).is_zero());
  CHECK_FALSE(koszul.columns()[0][0].is_zero());

  auto hb = kernel_over_S(ModulePresentation(r, std::nullopt, {0}, {V(r, {"x^2"}), V(r, {"x*y"}), V(r, {"y^2"})}));
  REQUIRE(hb.columns().size() == 2);
  auto gens = std::vector<Polynomial>{P("x^2", r), P("x*y", r), P("y^2", r)};
  for (const auto& c : hb.columns()) CHECK((c[0] * gens[0] + c[1] * gens[1] + c[2] * gens[2]).is_zero());
  auto m = oracle::minors(r, rows_of(hb), 2);
  CHECK(oracle::contains_all(r, m, gens));

  CHECK(kernel_over_S(ModulePresentation(r, std::nullopt, {0}, {V(r, {"x+y"})})).columns().empty());
}

TEST_CASE("kernels over quotients") {
  Ring line = make_ring(101, {"x"});
  auto k1 = kernel_over_R(ModulePresentation(line, I(line, {"x^3"}), {0}, {V(line, {"x"})}));
  CHECK(entries_ideal(k1) == I(line, {"x^2"}));

  Ring r = make_ring(101, {"x", "y"});
  IdealHandle sq = I(r, {"x^2", "x*y", "y^2"});
  auto k2 = kernel_over_R(ModulePresentation(r, sq, {0}, {V(r, {"x"})}));
  CHECK(entries_ideal(k2) == IdealHandle::maximal(r));

  Ring ab = make_ring(101, {"a", "b"});
  IdealHandle i = I(ab, {"a^2", "a*b^2", "b^4"});
  auto slice = resolve(ModulePresentation::cyclic(ab, i, {P("a", ab), P("b^2", ab)}), 2);
  // syz_1 is M(-1) + M(-2)
  CHECK(slice.betti.total(2) == 4);
  CHECK(slice.betti.at(2, 2) == 1);
  CHECK(slice.betti.at(2, 3) == 2);
  CHECK(slice.betti.at(2, 4) == 1);
}

TEST_CASE("minimalize") {
  Ring r = make_ring(101, {"x", "y"});
  auto unit = minimalize(ModulePresentation(r, std::nullopt, {0}, {V(r, {"1"})}));
  CHECK(unit.rank() == 0);
  CHECK(unit.columns().empty());

  ModulePresentation m(r, std::nullopt, {1, 0}, {V(r, {"x", "0"}), V(r, {"1", "y"})});
  auto small = minimalize(m);
  CHECK(small.rank() == 1);
  CHECK(small.columns().size() == 1);
  auto before = fitting0(m), after = fitting0(small);
  CHECK(oracle::contains_all(r, before, after));
  CHECK(oracle::contains_all(r, after, before));

  ModulePresentation already(r, std::nullopt, {0}, {V(r, {"x^2"}), V(r, {"y"})});
  auto same = minimalize(already);
  CHECK(same.columns() == already.columns());
  CHECK(same.target_shifts() == already.target_shifts());
}

TEST_CASE("minimalize preserves the Fitting ideal on random presentations") {
  std::mt19937_64 rng(6);
  Ring r = make_ring(101, {"x", "y"});
  for (int trial = 0; trial < 20; ++trial) {
    // two rows of degree 0 and 1, three columns of degree 1, 2, 2
    std::vector<VectorPolynomial> cols;
    cols.push_back(VectorPolynomial({oracle::random_form(r, 1, 2, rng),
                                     Polynomial::constant(r, r->field().from_integer(trial + 1))}));
    cols.push_back(VectorPolynomial({oracle::random_form(r, 2, 2, rng), oracle::random_form(r, 1, 2, rng)}));
    cols.push_back(VectorPolynomial({oracle::random_form(r, 2, 2, rng), oracle::random_form(r, 1, 2, rng)}));
    ModulePresentation m(r, std::nullopt, {0, 1}, cols);
    auto small = minimalize(m);
    REQUIRE(small.rank() == 1);
    auto before = fitting0(m), after = fitting0(small);
    REQUIRE(oracle::contains_all(r, before, after));
    REQUIRE(oracle::contains_all(r, after, before));
  }
}

TEST_CASE("resolution examples") {
  Ring r = make_ring(101, {"x", "y"});
  IdealHandle sq = I(r, {"x^2", "x*y", "y^2"});
  auto k = resolve(ModulePresentation::cyclic(r, sq, {P("x", r), P("y", r)}), 5);
  check_resolution(k);
  for (int i = 0; i <= 5; ++i) CHECK(k.betti.total(i) == (std::size_t{1} << i));

  auto hb = resolve(ModulePresentation::cyclic(r, std::nullopt, sq.generators()), 4);
  check_resolution(hb);
  CHECK(hb.betti.total(0) == 1);
  CHECK(hb.betti.total(1) == 3);
  CHECK(hb.betti.total(2) == 2);
  REQUIRE(hb.projdim.has_value());
  CHECK(*hb.projdim == 2);
  CHECK(hb.betti.to_machine() == "beta.0.0=1\nbeta.1.2=3\nbeta.2.3=2\n");

  Ring s = make_ring(101, {"x", "y", "z"});
  IdealHandle cubes = ideal_product(I(s, {"x^3", "y^3", "z^3"}), IdealHandle::maximal(s));
  auto big = resolve(ModulePresentation::cyclic(s, cubes, {P("x*y*z", s)}), 9);
  check_resolution(big);
  CHECK(big.differentials.size() == 9);
}

TEST_CASE("entries ideal") {
  Ring r = make_ring(101, {"x", "y"});
  IdealHandle sq = I(r, {"x^2", "x*y", "y^2"});
  CHECK(entries_ideal(ModulePresentation(r, sq, {0}, {})).is_unit());
  CHECK(entries_ideal(ModulePresentation::cyclic(r, std::nullopt, {P("x*y", r)})) == I(r, {"x*y"}));
  CHECK(entries_ideal(ModulePresentation::cyclic(r, sq, {P("x", r), P("y", r)})) == IdealHandle::maximal(r));
}

TEST_CASE("lin examples") {
  Ring s = make_ring(101, {"x", "y", "z"});
  auto lin = lin_profile(ModulePresentation::from_ideal(I(s, {"x^3", "y^3", "z^3", "x^2*y", "y^2*z", "z^2*x"})), 2);
  CHECK(lin == std::vector<std::size_t>{3, 3});
  auto koszul = lin_profile(ModulePresentation::cyclic(s, std::nullopt, IdealHandle::maximal(s).generators()), 1);
  CHECK(koszul == std::vector<std::size_t>{3});
  Ring r = make_ring(101, {"x", "y"});
  CHECK(lin_profile(ModulePresentation::cyclic(r, std::nullopt, {P("x^2", r)}), 1) == std::vector<std::size_t>{0});
}

TEST_CASE("summand profiles on a truncated line") {
  Ring r = make_ring(101, {"x"});
  IdealHandle i = I(r, {"x^4"});
  CHECK(summand_profile(ModulePresentation::cyclic(r, i, {P("x^2", r)}), 6) == std::vector<bool>(6, false));
  CHECK(summand_profile(ModulePresentation::cyclic(r, i, {P("x^3", r)}), 4) ==
        std::vector<bool>{true, false, true, false});
  CHECK(summand_profile(ModulePresentation::cyclic(r, i, {P("x", r)}), 4) ==
        std::vector<bool>{false, true, false, true});
  Ring r2 = make_ring(101, {"x", "y"});
  CHECK_THROWS_AS(summand_profile(ModulePresentation::cyclic(r2, I(r2, {"x^2"}), {P("y", r2)}), 2), NotArtinian);
}

TEST_CASE("Betti tables ignore the order of the relations") {
  std::mt19937_64 rng(21);
  Ring r = make_ring(101, {"x", "y", "z"});
  for (int trial = 0; trial < 8; ++trial) {
    IdealHandle i = random_artinian(r, rng);
    std::vector<Polynomial> rels{random_nonmember(i, rng), random_nonmember(i, rng)};
    auto a = resolve(ModulePresentation::cyclic(r, i, rels), 3);
    std::reverse(rels.begin(), rels.end());
    rels[0] = rels[0].scaled(r->field().from_integer(5));
    auto b = resolve(ModulePresentation::cyclic(r, i, rels), 3);
    REQUIRE(a.betti == b.betti);
    auto sa = resolve(ModulePresentation::cyclic(r, std::nullopt, i.generators()), 4);
    std::vector<Polynomial> shuffled = i.generators();
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    auto sb = resolve(ModulePresentation::cyclic(r, std::nullopt, shuffled), 4);
    REQUIRE(sa.betti == sb.betti);
  }
}

TEST_CASE("graded linear algebra agrees with Groebner lifting") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 12; ++trial) {
    Ring r = make_ring(101, trial % 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
    IdealHandle i = random_artinian(r, rng);
    ModulePresentation m = ModulePresentation::cyclic(r, i, {random_nonmember(i, rng)});
    const int steps = r->nvars() == 2 ? 4 : 3;
    auto fast = resolve(m, steps);
    auto slow = resolve_by_lifting(m, steps);
    check_resolution(fast);
    check_resolution(slow);
    REQUIRE(fast.betti == slow.betti);
    // the socle test on each syzygy matches the summand profile
    auto profile = summand_profile(m, steps - 1);
    for (int k = 1; k < steps; ++k)
      REQUIRE(profile[static_cast<std::size_t>(k - 1)] ==
              socle_module(coker_of_step(slow, static_cast<std::size_t>(k))).has_k_summand);
  }
}

TEST_CASE("resolutions over S stop within n steps") {
  std::mt19937_64 rng(3);
  Ring r = make_ring(101, {"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(oracle::random_form(r, 2, 3, rng));
    auto slice = resolve(ModulePresentation::cyclic(r, std::nullopt, gens), 6);
    check_resolution(slice);
    REQUIRE(slice.projdim.has_value());
    REQUIRE(*slice.projdim <= 3);
  }
}

TEST_CASE("kernels of maps with an entry outside the Burch ideal split off k") {
  std::mt19937_64 rng(17);
  Ring ab = make_ring(101, {"a", "b"});
  Ring xy = make_ring(101, {"x", "y"});
  std::vector<IdealHandle> rings{I(ab, {"a^2", "a*b^2", "b^4"}), I(xy, {"x^3", "x^2*y", "y^3", "x*y^2"}),
                                 I(xy, {"x^2", "x*y", "y^3"})};
  int tested = 0;
  for (const auto& i : rings) {
    const Ring& r = i.ring();
    REQUIRE(burch_index_depth0(i).index >= 1);
    IdealHandle bi = burch_ideal(i);
    for (int trial = 0; trial < 6; ++trial) {
      std::uniform_int_distribution<int> deg(1, 2), ncols(1, 3);
      std::vector<VectorPolynomial> cols;
      bool outside = false;
      for (int c = ncols(rng); c > 0; --c) {
        Polynomial f = oracle::random_form(r, deg(rng), 2, rng);
        outside = outside || !bi.contains(f);
        cols.push_back(VectorPolynomial::from_polynomial(f));
      }
      if (!outside) continue;
      ModulePresentation a(r, i, {0}, cols);
      ModulePresentation kernel = kernel_over_R(a);
      ModulePresentation relations = kernel_over_R(kernel);
      ModulePresentation ker_module(r, i, kernel.source_shifts(), relations.columns());
      REQUIRE(socle_module(ker_module).has_k_summand);
      ++tested;
    }
  }
  CHECK(tested >= 8);
}

TEST_CASE("cutting by a regular linear form lowers lin by membership") {
  std::mt19937_64 rng(29);
  Ring s = make_ring(101, {"x", "y", "z"});
  int tested = 0;
  for (int trial = 0; trial < 12; ++trial) {
    IdealHandle i(s, {oracle::random_form(s, 2, 3, rng), oracle::random_form(s, 2, 3, rng)});
    Polynomial t = oracle::random_form(s, 1, 3, rng);
    if (!(ideal_colon(i, t) == i)) continue;
    auto m = ModulePresentation::cyclic(s, std::nullopt, i.generators());
    auto slice = resolve(m, 4);
    REQUIRE(slice.projdim.has_value());
    int pd = *slice.projdim;
    auto lin = lin_profile(m, pd);
    IdealHandle cut = reduce_by_linear_forms(i, {t});
    auto lin_cut = lin_profile(ModulePresentation::cyclic(cut.ring(), std::nullopt, cut.generators()), pd);
    IdealHandle n2 = ideal_product(IdealHandle::maximal(s), IdealHandle::maximal(s));
    for (int k = 0; k < pd; ++k) {
      IdealHandle span = ideal_sum(entries_ideal(s, std::nullopt, slice.differentials[static_cast<std::size_t>(k)]), n2);
      std::size_t expected = span.contains(t) ? lin[static_cast<std::size_t>(k)] - 1 : lin[static_cast<std::size_t>(k)];
      REQUIRE(lin_cut[static_cast<std::size_t>(k)] == expected);
    }
    ++tested;
  }
  CHECK(tested >= 5);
}

TEST_CASE("Burch ideals force nearly linear syzygy matrices") {
  std::mt19937_64 rng(57);
  int tested = 0;
  for (int trial = 0; trial < 16; ++trial) {
    Ring r = make_ring(101, trial % 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
    const std::size_t n = r->nvars();
    IdealHandle i = trial % 4 < 2 ? ideal_product(IdealHandle(r, {oracle::random_form(r, 1 + trial % 3, 2, rng)}),
                                                  IdealHandle::maximal(r))
                                  : random_artinian(r, rng);
    std::size_t index = burch_index_depth0(i).index;
    if (index == 0) continue;
    auto slice = resolve(ModulePresentation::cyclic(r, std::nullopt, i.generators()), static_cast<int>(n) + 1);
    REQUIRE(slice.projdim.has_value());
    const int pd_ideal = *slice.projdim - 1;
    auto lin = lin_profile(ModulePresentation::from_ideal(i), pd_ideal);
    for (int k = 1; k < pd_ideal; ++k) {
      std::size_t l = lin[static_cast<std::size_t>(k - 1)];
      REQUIRE(l >= n - 1);
      if (index >= 2) REQUIRE(l == n);
    }
    ++tested;
  }
  CHECK(tested >= 8);
}

TEST_CASE("late syzygy entries generate the maximal ideal modulo its square") {
  std::mt19937_64 rng(71);
  Ring r = make_ring(101, {"x", "y"});
  IdealHandle n = IdealHandle::maximal(r);
  IdealHandle n2 = ideal_product(n, n);
  for (int trial = 0; trial < 4; ++trial) {
    IdealHandle j(r, {oracle::random_form(r, 1 + trial % 2, 2, rng), oracle::random_monomial(r, 3, rng)});
    IdealHandle i = ideal_product(ideal_sum(j, I(r, {"x^3", "y^3"})), n);
    REQUIRE(burch_index_depth0(i).index == 2);
    ModulePresentation m = ModulePresentation::cyclic(r, i, {random_nonmember(i, rng)});
    auto slice = resolve(m, 8);
    for (std::size_t k = 5; k < 8; ++k)
      REQUIRE(ideal_sum(entries_ideal(r, i, slice.differentials[k]), n2) == n);
  }
}
