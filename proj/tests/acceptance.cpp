// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "oracles.hpp"

#include "vietoris/experiments.hpp"
#include "vietoris/fixtures.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace vietoris;

namespace {

constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool passed;
  std::string detail;
};

std::string counts(const Report& r) {
  return std::to_string(r.passed()) + "/" + std::to_string(r.checks().size()) + " checks";
}

// Smallest exact margin among the records, if any carry one.
std::optional<Rational> least_margin(const Report& r) {
  std::optional<Rational> least;
  for (const auto& c : r.checks()) {
    if (c.margin.empty()) continue;
    const Rational m = parse_rational(c.margin);
    if (!least || m < *least) least = m;
  }
  return least;
}

Outcome dowker() {
  const auto r = dowker_random_suite(kSeed, 100, 3);
  return {r.ok() && r.checks().size() == 100, counts(r)};
}

Outcome cech_vietoris() {
  const auto r = cech_vietoris_random_suite(kSeed, 50, 3);
  // 2 checks for each of 4 line-fixture radii and each random instance
  return {r.ok() && r.checks().size() == 2 * (4 + 50), counts(r)};
}

Outcome solver_vs_oracle() {
  std::size_t agree = 0;
  const std::size_t total = 200;
  for (std::uint64_t i = 0; i < total; ++i) {
    Rng rng = make_rng(kSeed, i);
    const auto x = random_space<Rational>(rng, uniform_index(rng, 1, 8), 12, static_cast<int>(uniform_index(rng, 1, 4)));
    const auto mu = random_measure<Rational>(rng, x, x->all_points(), 6);
    const auto nu = random_measure<Rational>(rng, x, x->all_points(), 6);
    agree += wasserstein1(mu, nu).cost == oracle::wasserstein(mu, nu);
  }
  return {agree == total, std::to_string(agree) + "/" + std::to_string(total) + " exact agreements"};
}

Outcome partial_transport() {
  const auto r = partial_coupling_suite(kSeed, 500);
  return {r.ok() && r.checks().size() == 3 * 500, counts(r)};
}

Outcome pumping() {
  const auto r = pumping_suite(kSeed, 200);
  return {r.ok() && r.checks().size() == 5 * 200, counts(r)};
}

Outcome intersection() {
  const std::vector<std::pair<int, Rational>> levels{{2, Rational(7, 12)}, {2, Rational(3, 4)}, {2, Rational(11, 12)},
                                                     {3, Rational(17, 24)}, {3, Rational(5, 6)}, {3, Rational(11, 12)}};
  bool ok = true;
  std::size_t measures = 0;
  std::optional<Rational> least;
  for (const auto& cover : {fixtures::triangle_cover(), fixtures::six_point_cover(), fixtures::eight_point_cover()}) {
    for (const auto& [n, p] : levels) {
      const auto r = intersection_grid_sweep(cover, n, p, 12, 4);
      ok = ok && r.ok();
      measures += r.results().at("measures").get<std::size_t>();
      if (auto m = least_margin(r); m && (!least || *m < *least)) least = m;
    }
  }
  ok = ok && least && *least > 0;
  return {ok, std::to_string(measures) + " grid measures, least margin " + (least ? to_string(*least) : "none")};
}

Outcome nerve_skeleton() {
  const auto r = nerve_skeleton_random_suite(kSeed, 50);
  return {r.ok() && r.checks().size() == 50, counts(r)};
}

Outcome local_contract() {
  std::vector<Cover<Rational>> covers{fixtures::eight_point_cover()};
  for (std::uint64_t i = 0; covers.size() < 3; ++i) {
    Rng rng = make_rng(derive_seed(kSeed, 8), i);
    const auto x = random_space<Rational>(rng, uniform_index(rng, 4, 7), 6);
    auto cover = random_cover(rng, x, 4);
    bool proper = false;
    for (const auto& s : cover.sets()) proper = proper || s.size() < x->size();
    if (proper) covers.push_back(std::move(cover));
  }
  bool ok = true;
  std::size_t checks = 0;
  std::optional<Rational> least;
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto r = local_contract_suite(covers[i], derive_seed(kSeed, i), 100, 11);
    ok = ok && r.ok() && r.results().at("sampled").get<std::size_t>() == 100;
    checks += r.checks().size();
    if (auto m = least_margin(r); m && (!least || *m < *least)) least = m;
  }
  ok = ok && least && *least > 0;
  return {ok, std::to_string(checks) + " checks on 3 covers, least margin " + (least ? to_string(*least) : "none")};
}

Outcome circle() {
  const auto r = circle_experiment(12, 4);
  const auto& bar = r.results().at("h1_bar");
  return {r.ok() && bar.at("birth") == "1" && bar.at("death") == "4",
          counts(r) + ", H1 bar [" + bar.at("birth").get<std::string>() + ", " + bar.at("death").get<std::string>() +
              ") x 2pi/12"};
}

Outcome metric_axioms() {
  const auto r = metric_axioms_suite(kSeed, 100);
  return {r.ok() && !r.checks().empty(), counts(r)};
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "nerve and Vietoris complexes have equal Betti vectors", 30, dowker},
      {2, "Cech complex equals the Vietoris complex of balls", 10, cech_vietoris},
      {3, "transportation solver matches min-cost-flow oracle", 20, solver_vs_oracle},
      {4, "partial couplings bound and complete exactly", 20, partial_transport},
      {5, "pumping continuity bound", 30, pumping},
      {6, "intersection mass bound on exhaustive grids", 60, intersection},
      {7, "nerve skeleton coincidence", 30, nerve_skeleton},
      {8, "local contractibility containment sweep", 60, local_contract},
      {9, "circle barcode has one H1 bar [2pi/12, 2pi/3)", 30, circle},
      {10, "Wasserstein metric axioms", 10, metric_axioms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.budget_s;
    const bool pass = out.passed && in_time;
    failures += !pass;
    std::printf("%s %2d %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                secs, c.budget_s, in_time ? "" : ", over budget");
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
