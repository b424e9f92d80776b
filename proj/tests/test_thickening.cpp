#include "oracles.hpp"

#include "vietoris/experiments.hpp"
#include "vietoris/fixtures.hpp"

#include <doctest.h>

using namespace vietoris;

namespace {

using Q = Rational;

Cover<Rational> path_cover() {
  auto x = fixtures::equilateral_space(3, Q(1), {"a", "b", "c"});
  return Cover<Rational>(x, {PointSet{0, 1}, PointSet{1, 2}}, Q(2));
}

Measure<Rational> two_masses(const SpacePtr<Rational>& x, PointId a, const Q& ma, PointId b) {
  return Measure<Rational>(x, {{a, ma}, {b, 1 - ma}});
}

}  // namespace

TEST_CASE("thickening membership") {
  const auto cover = path_cover();
  const auto& x = cover.space_ptr();
  for (PointId p = 0; p < 3; ++p) CHECK(thickening_member(Measure<Rational>::dirac(x, p), cover).has_value());
  CHECK_FALSE(thickening_member(two_masses(x, 0, Q(1, 2), 2), cover).has_value());
  CHECK(thickening_member(two_masses(x, 0, Q(1, 2), 1), cover) == std::optional<std::size_t>(0));
}

TEST_CASE("mass concentration is strict") {
  const auto x = fixtures::line_space(3);
  CHECK(mcp_check(Measure<Rational>::dirac(x, 0), PointSet{0}, Q(99, 100)));
  const auto mu = two_masses(x, 0, Q(4, 5), 2);
  CHECK_FALSE(mcp_check(mu, PointSet{0}, Q(4, 5)));
  const auto cert = mcp_check(mu, PointSet{0}, Q(3, 4));
  REQUIRE(cert);
  CHECK(cert->in_mass == Q(4, 5));
  CHECK_THROWS_AS(mcp_check(mu, PointSet{0}, Q(1)), PreconditionError);
}

TEST_CASE("pumping map") {
  const auto x = fixtures::line_space(2);
  const auto mu = two_masses(x, 0, Q(1, 2), 1);
  const BumpFunction<Rational> one{{Q(1), Q(1)}, Q(0)};
  CHECK(pumping_map(mu, one) == mu);
  const BumpFunction<Rational> cut{{Q(1), Q(0)}, Q(1)};
  CHECK(pumping_map(mu, cut) == Measure<Rational>::dirac(x, 0));
  const BumpFunction<Rational> half{{Q(1), Q(1, 2)}, Q(1, 2)};
  CHECK(pumping_map(mu, half) == two_masses(x, 0, Q(2, 3), 1));
  const BumpFunction<Rational> off{{Q(0), Q(0)}, Q(0)};
  CHECK_THROWS_AS(pumping_map(mu, off), PreconditionError);
}

TEST_CASE("pumping continuity: trivial cases") {
  const auto x = fixtures::line_space(3);
  const auto mu = two_masses(x, 0, Q(1, 3), 1);
  const auto phi = bump_simple(*x, PointSet{0, 1});
  const auto same = pumping_continuity_bound(mu, mu, phi, Q(3));
  CHECK(same.delta == 0);
  CHECK(same.bound == 0);
  CHECK(same.holds());

  const auto nu = two_masses(x, 0, Q(1, 2), 2);
  const auto ident = pumping_continuity_bound(mu, nu, constant_bump(3, Q(1)), Q(3));
  CHECK(ident.pumped_distance == ident.delta);
  CHECK(ident.bound == ident.delta);
  CHECK(ident.holds());
}

TEST_CASE("pumping continuity: preconditions") {
  const auto x = fixtures::line_space(3);
  const auto mu = Measure<Rational>::dirac(x, 0);
  const auto nu = Measure<Rational>::dirac(x, 2);
  const auto phi = bump_simple(*x, PointSet{0, 1});
  // phi(2) = 0 so nu has nothing to pump
  CHECK_THROWS_AS(pumping_continuity_bound(mu, nu, phi, Q(3)), PreconditionError);
  // a = 1/2 for mu, delta = 3/2 and L = 1
  CHECK_THROWS_AS(pumping_continuity_bound(two_masses(x, 1, Q(1, 2), 2), Measure<Rational>::dirac(x, 0), phi, Q(3)),
                  PreconditionError);
}

TEST_CASE("property: pumping map") {
  for (std::uint64_t i = 0; i < 80; ++i) {
    Rng rng = make_rng(41, i);
    const std::size_t n = uniform_index(rng, 2, 7);
    const auto x = random_space<Rational>(rng, n, 8, 2);
    const auto u = PointSet(random_subset(rng, x->all_points().members(), uniform_index(rng, 1, n - 1)));
    const auto y1 = PointSet(random_subset(rng, u.members(), uniform_index(rng, 1, u.size())));
    const auto phi = bump_pair(*x, y1, u);
    const auto mu = random_measure<Rational>(rng, x, x->all_points(), 5);
    if (!ScalarTraits<Q>::is_positive(pumping_weight(mu, phi))) continue;
    const auto f = pumping_map(mu, phi);
    CHECK(f.support().is_subset_of(set_intersection(mu.support(), phi.support())));
    for (PointId p : y1) CHECK(f.mass(p) >= mu.mass(p));

    std::vector<Q> zero_one;
    for (PointId p = 0; p < n; ++p) zero_one.push_back(y1.contains(p) ? Q(1) : Q(0));
    const BumpFunction<Rational> indicator{zero_one, Q(1)};
    if (ScalarTraits<Q>::is_positive(pumping_weight(mu, indicator))) {
      const auto once = pumping_map(mu, indicator);
      CHECK(pumping_map(once, indicator) == once);
    }
  }
}

TEST_CASE("property: pumping continuity on random conforming instances") {
  const auto suite = pumping_suite(5, 60);
  CHECK(suite.checks().size() == 300);
  CHECK(suite.ok());
}

TEST_CASE("safe radius") {
  const auto x = fixtures::line_space(3);
  MetricSpace<Rational>::Matrix d(2, 2);
  d << 0, 2, 2, 0;
  const auto pair = make_space<Rational>({"x", "y"}, d);
  CHECK(safe_radius(Measure<Rational>::dirac(pair, 0), PointSet{0}, Q(9, 10)) == Q(1, 10));
  CHECK(safe_radius(two_masses(x, 0, Q(4, 5), 1), PointSet{0}, Q(3, 4)) == Q(1, 40));
  CHECK_THROWS_AS(safe_radius(two_masses(x, 0, Q(3, 4), 1), PointSet{0}, Q(3, 4)), PreconditionError);
  CHECK_THROWS_AS(safe_radius(Measure<Rational>::dirac(x, 0), x->all_points(), Q(3, 4)), PreconditionError);
}

TEST_CASE("safe radius: one-cell perturbation keeps MCP") {
  const auto x = fixtures::line_space(3);
  const auto mu = two_masses(x, 0, Q(4, 5), 2);
  const PointSet u{0};
  const Q p(3, 4);
  const Q r = safe_radius(mu, u, p);
  // move m from 0 to 1 at cost m, just inside the radius
  const Q m = r * Q(99, 100);
  const auto nu = move_mass(mu, 0, 1, m);
  CHECK(wasserstein_distance(mu, nu) < r);
  CHECK(nu.mass(u) > p);

  Rng rng = make_rng(3, 0);
  const auto report = safe_radius_property(mu, u, p, 200, rng);
  CHECK(report.accepted == 200);
  CHECK(report.holds());
}

TEST_CASE("intersection mass bound") {
  auto x = fixtures::equilateral_space(3, Q(1), {"a", "b", "c"});
  const Measure<Rational> mu(x, {{0, Q(3, 5)}, {1, Q(1, 5)}, {2, Q(1, 5)}});
  const PointSet u1{0, 1}, u2{0, 2};
  const auto single = intersection_mass_bound(mu, {u1}, Q(3, 4), 2);
  CHECK(single.lhs == Q(3, 4));
  CHECK(single.holds());
  const auto both = intersection_mass_bound(mu, {u1, u2}, Q(3, 4));
  CHECK(both.lhs == Q(1, 2));
  CHECK(both.rhs == Q(3, 5));
  CHECK(both.holds());
  // n = 2 needs p > 1/2; p = 1/2 is the boundary
  CHECK_THROWS_AS(intersection_mass_bound(mu, {u1, u2}, Q(1, 2)), PreconditionError);
  CHECK_THROWS_AS(intersection_mass_bound(mu, {u1, PointSet{1, 2}}, Q(3, 4)), PreconditionError);
  CHECK_THROWS_AS(intersection_mass_bound(mu, {u1, u2}, Q(3, 4), 1), PreconditionError);
}

TEST_CASE("property: intersection bound on random conforming measures") {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng = make_rng(43, i);
    const auto x = random_space<Rational>(rng, uniform_index(rng, 2, 6), 6);
    const auto cover = random_cover(rng, x, 5);
    const int n = static_cast<int>(uniform_index(rng, 2, 4));
    const Q p = 1 - Q(1, n) + Q(1, n) * random_fraction(rng, 12);
    const auto mu = random_measure<Rational>(rng, x, x->all_points(), 4);
    std::vector<PointSet> sets;
    for (const auto& s : cover.sets())
      if (mcp_check(mu, s, p) && sets.size() < static_cast<std::size_t>(n)) sets.push_back(s);
    if (sets.empty()) continue;
    CHECK(intersection_mass_bound(mu, sets, p, static_cast<std::size_t>(n)).holds());
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("intersection grid sweep with five-point supports") {
  const auto report = intersection_grid_sweep(fixtures::six_point_cover(), 3, Q(5, 6), 8, 5);
  CHECK(report.ok());
  CHECK(report.checks().size() == 1);
}

TEST_CASE("nerve skeleton on the triangle cover") {
  const auto cover = fixtures::triangle_cover();
  Rng rng = make_rng(1, 0);
  const auto report = nerve_skeleton_check(cover, 3, Q(7, 10), 20, rng);
  CHECK(report.holds());
  CHECK_FALSE(report.nerve_skeleton.contains({0, 1, 2}));
  CHECK_FALSE(report.mcp_nerve.contains({0, 1, 2}));
  CHECK(report.excluded == 1);
  REQUIRE(report.exclusions.size() == 1);
  CHECK(report.exclusions[0].rhs == Q(1, 10));
  CHECK(report.dirac_witnesses == 6);
}

TEST_CASE("nerve skeleton: pairwise intersecting cover, n = 2") {
  const auto x = fixtures::line_space(3);
  const Cover<Rational> cover(x, {PointSet{0, 1}, PointSet{1, 2}, PointSet{1}}, Q(2));
  Rng rng = make_rng(2, 0);
  const auto report = nerve_skeleton_check(cover, 2, Q(3, 5), 5, rng);
  CHECK(report.holds());
  CHECK(report.excluded == 0);
  CHECK(report.mcp_nerve.count_of_dim(1) == 3);
  CHECK_THROWS_AS(nerve_skeleton_check(cover, 2, Q(1, 2), 5, rng), PreconditionError);
}

TEST_CASE("property: nerve skeleta on random covers") { CHECK(nerve_skeleton_random_suite(9, 30).ok()); }

TEST_CASE("local contractibility on the eight-point fixture") {
  const auto cover = fixtures::eight_point_cover();
  const auto& x = cover.space_ptr();
  const Measure<Rational> mu(x, {{1, Q(1, 2)}, {2, Q(1, 2)}});
  const Q s(1);
  const auto setup = local_contract_setup(mu, cover, s);
  CHECK(setup.witness == 0);
  CHECK(setup.eps == Q(1, 8));
  CHECK(setup.p == Q(5, 6));
  CHECK(setup.s_prime == Q(1, 96));
  CHECK((1 - setup.p) * setup.bound < s / 2);
  CHECK(setup.y2.is_subset_of(cover.set(setup.witness)));

  // nu = mu: H(mu, 0) = mu and H(mu, 1) = f(mu) stays within (1 - p) D
  const auto f = pumping_map(mu, setup.phi);
  CHECK(wasserstein_distance(linear_interpolate(mu, f, Q(0)), mu) == 0);
  CHECK(wasserstein_distance(linear_interpolate(mu, f, Q(1)), mu) <= (1 - setup.p) * setup.bound);
  CHECK(f.support().is_subset_of(setup.y2));

  Rng rng = make_rng(4, 0);
  const auto report = local_contractibility_witness(mu, cover, s, 11, 100, rng);
  CHECK(report.sampled == 100);
  CHECK(report.failures.empty());
  CHECK(report.holds());
  CHECK(report.checks.size() == 100 * (1 + 3 * 11));
}

TEST_CASE("local contractibility: degenerate witness set") {
  const auto x = fixtures::line_space(3);
  const Cover<Rational> cover(x, {x->all_points()}, Q(3));
  const auto mu = Measure<Rational>::dirac(x, 1);
  const auto setup = local_contract_setup(mu, cover, Q(1));
  CHECK(setup.eps == Q(1, 4));
  CHECK(setup.phi.lipschitz_bound == 1);
  Rng rng = make_rng(5, 0);
  CHECK(local_contractibility_witness(mu, cover, Q(1), 5, 20, rng).holds());
  CHECK_THROWS_AS(local_contract_setup(mu, cover, Q(0)), PreconditionError);
  const Cover<Rational> split(x, {PointSet{0, 1}, PointSet{1, 2}}, Q(2));
  CHECK_THROWS_AS(local_contract_setup(two_masses(x, 0, Q(1, 2), 2), split, Q(1)), PreconditionError);
}

TEST_CASE("pumping convex samples") {
  const auto x = fixtures::line_space(3);
  const Measure<Rational> mu(x, {{0, Q(1, 2)}, {1, Q(1, 4)}, {2, Q(1, 4)}});
  const PointSet u{0, 1};
  const auto d0 = Measure<Rational>::dirac(x, 0);
  CHECK(pumping_convex_sample(mu, u, Q(0), d0) == mu);
  CHECK(pumping_convex_sample(mu, u, Q(1), d0) == d0);
  const Measure<Rational> restricted(x, {{0, Q(2, 3)}, {1, Q(1, 3)}});
  const auto mixed = pumping_convex_sample(mu, u, Q(1, 2), restricted);
  CHECK(mixed.mass(u) > mu.mass(u));
  CHECK_THROWS_AS(pumping_convex_sample(mu, u, Q(1, 2), Measure<Rational>::dirac(x, 2)), PreconditionError);
}

TEST_CASE("property: mixing into u increases its mass") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng = make_rng(47, i);
    const std::size_t n = uniform_index(rng, 2, 6);
    const auto x = random_space<Rational>(rng, n, 5);
    const auto u = PointSet(random_subset(rng, x->all_points().members(), uniform_index(rng, 1, n - 1)));
    const auto mu = random_measure<Rational>(rng, x, x->all_points(), 5);
    const auto inner = set_intersection(mu.support(), u);
    if (inner.empty() || mu.mass(u) == 1) continue;
    const auto sub = random_measure<Rational>(rng, x, inner, 3);
    const Q t = random_fraction(rng, 9);
    CHECK(pumping_convex_sample(mu, u, t, sub).mass(u) > mu.mass(u));
  }
}

TEST_CASE("conforming levels") {
  ExperimentConfig config;
  CHECK(conforming_level(config) == std::pair<int, Rational>{2, Q(3, 4)});
  config.n = 3;
  config.p = "2/3";
  CHECK_THROWS_AS(conforming_level(config), PreconditionError);
  config.p = "7/10";
  CHECK(conforming_level(config).second == Q(7, 10));
  config.p = "1";
  CHECK_THROWS_AS(conforming_level(config), PreconditionError);
  config.n = 1;
  config.p = "1/2";
  CHECK_THROWS_AS(conforming_level(config), PreconditionError);
}
