#include "oracles.hpp"

#include "vietoris/fixtures.hpp"
#include "vietoris/random.hpp"

#include <doctest.h>

using namespace vietoris;

namespace {

Measure<Rational> half_half(const SpacePtr<Rational>& x, PointId a, PointId b) {
  return Measure<Rational>(x, {{a, Rational(1, 2)}, {b, Rational(1, 2)}});
}

}  // namespace

TEST_CASE("measure invariants") {
  const auto x = fixtures::line_space(3);
  CHECK_THROWS_AS(Measure<Rational>(x, {{0, Rational(1, 2)}}), InputError);
  CHECK_THROWS_AS(Measure<Rational>(x, {{0, Rational(3, 2)}, {1, Rational(-1, 2)}}), InputError);
  CHECK_THROWS_AS(Measure<Rational>(x, {{9, Rational(1)}}), InputError);
  const Measure<Rational> mu(x, {{0, Rational(1)}, {1, Rational(0)}});
  CHECK(mu.support() == PointSet{0});
  CHECK(mu.masses().size() == 1);
}

TEST_CASE("Dirac distances") {
  const auto x = fixtures::line_space(4);
  for (PointId a = 0; a < 4; ++a)
    for (PointId b = 0; b < 4; ++b)
      CHECK(wasserstein_distance(Measure<Rational>::dirac(x, a), Measure<Rational>::dirac(x, b)) == x->distance(a, b));
}

TEST_CASE("two point example") {
  const auto x = fixtures::line_space(2);
  const auto dx = Measure<Rational>::dirac(x, 0);
  const auto mix = half_half(x, 0, 1);
  const auto t = wasserstein1(dx, mix);
  CHECK(t.cost == Rational(1, 2));
  CHECK(oracle::wasserstein(dx, mix) == Rational(1, 2));
  CHECK(t.coupling.has_exact_marginals());
  const auto same = wasserstein1(mix, mix);
  CHECK(same.cost == 0);
  CHECK(same.coupling.entry(0, 0) == Rational(1, 2));
  CHECK(same.coupling.entry(1, 1) == Rational(1, 2));
}

TEST_CASE("measures on different spaces") {
  const auto x = fixtures::line_space(2);
  const auto y = fixtures::line_space(2);
  CHECK_THROWS_AS(wasserstein1(Measure<Rational>::dirac(x, 0), Measure<Rational>::dirac(y, 0)), PreconditionError);
}

TEST_CASE("coupling cost") {
  const auto x = fixtures::line_space(3);
  const auto dx = Measure<Rational>::dirac(x, 0);
  const auto dy = Measure<Rational>::dirac(x, 2);
  CHECK(coupling_cost(PartialCoupling<Rational>(dx, dy, {})) == 0);
  CHECK(coupling_cost(Coupling<Rational>::product(dx, dy)) == 2);
  const auto mu = half_half(x, 0, 1);
  CHECK(coupling_cost(PartialCoupling<Rational>(mu, mu, {{{0, 0}, Rational(1, 2)}, {{1, 1}, Rational(1, 2)}})) == 0);
  CHECK_THROWS_AS(PartialCoupling<Rational>(dx, dy, {{{0, 2}, Rational(2)}}), InputError);
  CHECK_THROWS_AS(Coupling<Rational>(mu, dy, {{{0, 2}, Rational(1, 2)}}), InputError);
}

TEST_CASE("complete_partial") {
  const auto x = fixtures::line_space(3);
  const auto dx = Measure<Rational>::dirac(x, 0);
  const auto dy = Measure<Rational>::dirac(x, 2);
  const auto from_empty = complete_partial(PartialCoupling<Rational>(dx, dy, {}));
  CHECK(from_empty.entry(0, 2) == 1);

  const auto full = Coupling<Rational>::product(dx, dy);
  CHECK(complete_partial(full).entries() == full.entries());

  const auto mu = half_half(x, 0, 1);
  const auto done = complete_partial(PartialCoupling<Rational>(mu, dy, {{{0, 2}, Rational(1, 2)}}));
  CHECK(done.entry(0, 2) == Rational(1, 2));
  CHECK(done.entry(1, 2) == Rational(1, 2));
  CHECK(done.has_exact_marginals());
}

TEST_CASE("partial_bound") {
  const auto x = fixtures::line_space(4);
  const auto mu = half_half(x, 0, 3);
  const auto nu = half_half(x, 1, 2);
  const auto opt = wasserstein1(mu, nu);
  CHECK(partial_bound(opt.coupling) == opt.cost);
  CHECK(partial_bound(PartialCoupling<Rational>(mu, nu, {})) == 3);
  CHECK(partial_bound(PartialCoupling<Rational>(mu, nu, {})) >= opt.cost);
}

TEST_CASE("linear interpolation") {
  const auto x = fixtures::line_space(2);
  const auto dx = Measure<Rational>::dirac(x, 0);
  const auto dy = Measure<Rational>::dirac(x, 1);
  CHECK(linear_interpolate(dx, dy, Rational(0)) == dx);
  CHECK(linear_interpolate(dx, dy, Rational(1)) == dy);
  CHECK(linear_interpolate(dx, dy, Rational(1, 2)) == half_half(x, 0, 1));
  CHECK_THROWS_AS(linear_interpolate(dx, dy, Rational(2)), PreconditionError);
}

TEST_CASE("convexity bound") {
  const auto x = fixtures::line_space(4);
  const auto mu = Measure<Rational>::dirac(x, 0);
  const auto nu = half_half(x, 2, 3);
  const auto at_zero = convexity_bound_check(mu, nu, nu, Rational(0));
  CHECK(at_zero.holds());
  CHECK(at_zero.lhs == at_zero.rhs);
  for (const auto& t : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) {
    const auto c = convexity_bound_check(mu, nu, nu, t);
    CHECK(c.holds());
    CHECK(c.rhs == (1 - t) * wasserstein_distance(mu, nu));
  }
}

TEST_CASE("property: solver agrees with the min-cost-flow oracle") {
  for (std::uint64_t i = 0; i < 150; ++i) {
    Rng rng = make_rng(31, i);
    const auto x = random_space<Rational>(rng, uniform_index(rng, 1, 8), 12, static_cast<int>(uniform_index(rng, 1, 3)));
    const auto mu = random_measure<Rational>(rng, x, x->all_points(), 6);
    const auto nu = random_measure<Rational>(rng, x, x->all_points(), 6);
    const auto t = wasserstein1(mu, nu);
    CHECK(t.cost == oracle::wasserstein(mu, nu));
    CHECK(coupling_cost(t.coupling) == t.cost);
    CHECK(t.coupling.has_exact_marginals());
  }
}

TEST_CASE("property: convexity on random triples") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = make_rng(37, i);
    const auto x = random_space<Rational>(rng, uniform_index(rng, 2, 6), 8);
    const auto all = x->all_points();
    const auto a = random_measure<Rational>(rng, x, all, 4);
    const auto b = random_measure<Rational>(rng, x, all, 4);
    const auto c = random_measure<Rational>(rng, x, all, 4);
    for (const auto& t : {Rational(1, 4), Rational(1, 2), Rational(3, 4)}) CHECK(convexity_bound_check(a, b, c, t).holds());
  }
}

TEST_CASE("double measures") {
  MetricSpace<double>::Matrix d(2, 2);
  d << 0, 1.5, 1.5, 0;
  const auto x = make_space<double>({"a", "b"}, d);
  const Measure<double> mu(x, {{0, 0.25}, {1, 0.75}});
  const auto dx = Measure<double>::dirac(x, 0);
  CHECK(wasserstein_distance(mu, dx) == doctest::Approx(1.125));
}
