#include <doctest.h>

#include <random>

#include "burchlab/burch.hpp"
#include "burchlab/errors.hpp"
#include "burchlab/families.hpp"
#include "burchlab/parser.hpp"
#include "oracles.hpp"

using namespace burchlab;

namespace {

Polynomial P(const std::string& text, const Ring& ring) { return parse_polynomial(text, ring); }
IdealHandle I(const Ring& ring, const std::vector<std::string>& gens) { return IdealHandle::from_strings(ring, gens); }

IdealHandle random_depth0(const Ring& r, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pw(2, 4), extra(0, 2), deg(2, 3);
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < r->nvars(); ++v) {
    Monomial m(r->nvars());
    m.set(v, pw(rng));
    gens.push_back(Polynomial::monomial(r, r->field().one(), m));
  }
  for (int k = extra(rng); k > 0; --k) gens.push_back(oracle::random_form(r, deg(rng), 3, rng));
  return IdealHandle(r, gens);
}

}  // namespace

TEST_CASE("depth") {
  Ring r = make_ring(101, {"x", "y"});
  CHECK(depth_of_quotient(I(r, {"x^2", "x*y", "y^2"})).depth == 0);
  Ring s = make_ring(101, {"x", "y", "z"});
  auto d = depth_of_quotient(I(s, {"x*y"}));
  CHECK(d.projdim == 1);
  CHECK(d.depth == 2);
  CHECK(depth_of_quotient(IdealHandle::zero(s)).depth == 3);
}

TEST_CASE("Burch ideals") {
  Ring ab = make_ring(101, {"a", "b"});
  CHECK(burch_ideal(I(ab, {"a^2", "a*b^2", "b^4"})) == I(ab, {"a", "b^2"}));
  Ring r = make_ring(101, {"x", "y"});
  CHECK(burch_ideal(I(r, {"x^2", "x*y", "y^2"})) == I(r, {"x^2", "x*y", "y^2"}));
  CHECK(burch_ideal(I(r, {"x^2", "y^2"})) == IdealHandle::maximal(r));
  CHECK_THROWS_AS(burch_ideal(IdealHandle::zero(r)), ZeroIdeal);
}

TEST_CASE("Burch index at depth zero") {
  Ring s = make_ring(101, {"x", "y", "z"});
  auto cubes = burch_index_depth0(ideal_product(I(s, {"x^3", "y^3", "z^3"}), IdealHandle::maximal(s)));
  CHECK(cubes.index == 3);
  CHECK(cubes.shortcut);
  Ring ab = make_ring(101, {"a", "b"});
  CHECK(burch_index_depth0(I(ab, {"a^2", "a*b^2", "b^4"})).index == 1);
  Ring r = make_ring(101, {"x", "y"});
  auto gor = burch_index_depth0(I(r, {"x^2", "y^2"}));
  CHECK(gor.index == 0);
  CHECK_FALSE(gor.shortcut);
  CHECK(gor.serialize() == "burch.index=0\nburch.method=exact\nburch.bi=(y, x)\ndepth=0\n");
  CHECK(burch_index_depth0(IdealHandle::zero(r)).index == 0);
  CHECK(burch_index_depth0(I(r, {"x^2"})).index == 0);
  CHECK(burch_index_depth0(I(r, {"1"})).index == 0);
}

TEST_CASE("Burch index in positive depth") {
  Ring r = make_ring(101, {"x", "y"});
  auto hyper = burch_index_graded(I(r, {"x^2"}), 20, 7);
  CHECK(hyper.index == 1);
  CHECK(hyper.method == BurchMethod::kSampled);
  CHECK(hyper.depth == 1);
  CHECK(hyper.witness.size() == 1);
  CHECK(hyper.serialize().rfind("burch.index=1\nburch.method=sampled:trials=20,seed=7\n", 0) == 0);
  // determinism
  CHECK(burch_index_graded(I(r, {"x^2"}), 20, 7).serialize() == hyper.serialize());
  CHECK(burch_index_graded(IdealHandle::zero(r), 20, 0).index == 0);
  Ring s = make_ring(101, {"x", "y", "z"});
  CHECK(burch_index_graded(I(s, {"x*y"}), 20, 1).index == 1);
  // a regular ring modulo a regular sequence of quadrics is a complete intersection
  CHECK(burch_index_graded(I(s, {"x^2", "y^2"}), 20, 1).index == 0);
}

TEST_CASE("socle degree criterion") {
  Ring s = make_ring(101, {"x", "y", "z"});
  CHECK(socle_degree_criterion(ideal_product(I(s, {"x^3", "y^3", "z^3"}), IdealHandle::maximal(s))) == 3u);
  Ring r = make_ring(101, {"x", "y"});
  CHECK(socle_degree_criterion(I(r, {"x^2", "x*y", "y^2"})) == 2u);
  CHECK_FALSE(socle_degree_criterion(I(r, {"x^2", "y^2"})).has_value());
}

TEST_CASE("reducing by linear forms") {
  Ring s = make_ring(101, {"x", "y", "z"});
  IdealHandle i = I(s, {"x*y", "z^2"});
  IdealHandle cut = reduce_by_linear_forms(i, {P("z-x", s)});
  REQUIRE(cut.ring()->nvars() == 2);
  CHECK(cut.ring()->variables() == std::vector<std::string>{"y", "z"});
  CHECK(cut == I(cut.ring(), {"y*z", "z^2"}));
}

TEST_CASE("sandwich, bound and shortcut on random depth-zero ideals") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    Ring r = make_ring(101, trial % 2 ? std::vector<std::string>{"x", "y"} : std::vector<std::string>{"x", "y", "z"});
    IdealHandle i = random_depth0(r, rng);
    IdealHandle n = IdealHandle::maximal(r);
    IdealHandle bi = burch_ideal(i);
    REQUIRE(n.contains(bi));
    REQUIRE(bi.contains(ideal_product(n, n)));
    BurchReport report = burch_index_depth0(i);
    REQUIRE(report.index == r->nvars() - linear_part_dimension(bi));
    REQUIRE(report.index <= r->nvars());
    if (auto shortcut = socle_degree_criterion(i)) REQUIRE(report.index == *shortcut);
    // the linear part of BI, from the truncated oracle directly
    IdealHandle socle = ideal_colon(i, n);
    std::vector<Polynomial> in;
    for (const auto& g : i.generators())
      for (std::size_t v = 0; v < r->nvars(); ++v) in.push_back(g * Polynomial::variable(r, v));
    for (std::size_t v = 0; v < r->nvars(); ++v) {
      Polynomial x = Polynomial::variable(r, v);
      bool brute = true;
      for (const auto& s : socle.generators()) brute = brute && oracle::member(r, in, x * s);
      REQUIRE(bi.contains(x) == brute);
    }
  }
}

TEST_CASE("J n ideals have index n") {
  for (std::size_t t = 1; t <= 6; ++t) {
    TrialResult result = run_trial(Family::kJn, 5, t);
    INFO(result.line);
    CHECK(result.passed);
  }
}

TEST_CASE("adjoining a variable with itself as generator keeps the index") {
  for (std::size_t t = 1; t <= 5; ++t) {
    TrialResult result = run_trial(Family::kExtension, 5, t);
    INFO(result.line);
    CHECK(result.passed);
  }
}

TEST_CASE("generic points") {
  Ring s = make_ring(101, {"x", "y", "z"});
  CHECK(expected_points_index(2) == 1);
  CHECK(expected_points_index(4) == 0);
  CHECK(expected_points_index(5) == 2);
  CHECK(expected_points_index(12) == 0);  // s = 2
  CHECK(expected_points_index(7) == 2);
  std::mt19937_64 rng = trial_engine(9, 1);
  IdealHandle pts = generic_points_ideal(s, 6, rng);
  for (int t = 0; t <= 4; ++t) CHECK(hilbert_function(pts, t) == std::min<std::uint64_t>((t + 2) * (t + 1) / 2, 6));
  CHECK(depth_of_quotient(pts).depth == 1);
}
