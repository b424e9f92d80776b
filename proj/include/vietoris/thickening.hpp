#pragma once

#include "vietoris/bump.hpp"
#include "vietoris/complexes.hpp"
#include "vietoris/inequality.hpp"
#include "vietoris/random.hpp"
#include "vietoris/transport.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vietoris {

/// Index of the first cover set containing supp(mu), i.e. a witness that mu
/// lies in the metric thickening of the Vietoris complex.
template <Scalar T>
std::optional<std::size_t> thickening_member(const Measure<T>& mu, const Cover<T>& cover) {
  if (mu.space_ptr() != cover.space_ptr()) throw PreconditionError("thickening_member: measure and cover spaces differ");
  const PointSet support = mu.support();
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (support.is_subset_of(cover.set(i))) return i;
  return std::nullopt;
}

/// Evidence that mu(set) > p.
template <Scalar T>
struct McpCertificate {
  Measure<T> measure;
  PointSet set;
  T p;
  T in_mass;
};

template <Scalar T>
void require_open_unit(const T& p, const char* op) {
  if (!(T(0) < p && p < T(1))) throw PreconditionError(std::string(op) + ": p must lie strictly between 0 and 1");
}

/// Mass concentration: a certificate iff mu(u) > p (strict).
template <Scalar T>
std::optional<McpCertificate<T>> mcp_check(const Measure<T>& mu, const PointSet& u, const T& p) {
  require_open_unit(p, "mcp_check");
  T inside = mu.mass(u);
  if (!ScalarTraits<T>::less(p, inside)) return std::nullopt;
  return McpCertificate<T>{mu, u, p, std::move(inside)};
}

/// sum_i a_i phi(x_i)
template <Scalar T>
T pumping_weight(const Measure<T>& mu, const BumpFunction<T>& phi) {
  T a = T(0);
  for (const auto& [x, m] : mu.masses()) a += m * phi(x);
  return a;
}

/// Reweights mu by phi and renormalises; points where phi vanishes drop out.
template <Scalar T>
Measure<T> pumping_map(const Measure<T>& mu, const BumpFunction<T>& phi) {
  const T a = pumping_weight(mu, phi);
  if (!ScalarTraits<T>::is_positive(a)) throw PreconditionError("pumping_map: mu has no mass where phi is positive");
  std::map<PointId, T> masses;
  for (const auto& [x, m] : mu.masses())
    if (ScalarTraits<T>::is_positive(phi(x))) masses.emplace(x, m * phi(x) / a);
  return Measure<T>(mu.space_ptr(), std::move(masses));
}

/// Outcome of the quantitative continuity estimate for the pumping map.
template <Scalar T>
struct PumpingContinuity {
  T weight;      // a = sum a_i phi(x_i)
  T delta;       // d_W(mu, nu)
  T lipschitz;   // L
  T bound;       // delta / a + (1 - (a - L delta) / (a + L delta)) D
  T pumped_distance;  // d_W(f(mu), f(nu))
  std::vector<Inequality<T>> checks;

  bool holds() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
  }
};

/// Checks d_W(f(mu), f(nu)) <= delta/a + (1 - (a - L delta)/(a + L delta)) D
/// and the intermediate facts about the explicit partial plan
/// c_ij = q_ij min(phi(x_i)/a, phi(y_j)/b) built from an optimal coupling q.
template <Scalar T>
PumpingContinuity<T> pumping_continuity_bound(const Measure<T>& mu, const Measure<T>& nu, const BumpFunction<T>& phi,
                                              const T& D) {
  using Traits = ScalarTraits<T>;
  const T a = pumping_weight(mu, phi);
  const T b = pumping_weight(nu, phi);
  if (!Traits::is_positive(a)) throw PreconditionError("pumping_continuity_bound: a = sum a_i phi(x_i) is not positive");
  if (!Traits::is_positive(b)) throw PreconditionError("pumping_continuity_bound: nu has no mass where phi is positive");
  const T L = phi.lipschitz_bound;
  const auto optimal = wasserstein1(mu, nu);
  const T delta = optimal.cost;
  if (!Traits::less(L * delta, a)) throw PreconditionError("pumping_continuity_bound: needs d_W(mu, nu) < a / L");

  const Measure<T> f_mu = pumping_map(mu, phi);
  const Measure<T> f_nu = pumping_map(nu, phi);
  const PointSet joint = set_union(f_mu.support(), f_nu.support());
  if (Traits::less(D, *diameter(mu.space(), joint)))
    throw PreconditionError("pumping_continuity_bound: D is below the diameter of the pumped supports");

  typename PartialCoupling<T>::Entries plan;
  for (const auto& [cell, q] : optimal.coupling.entries()) {
    const T w = min_of(phi(cell.first) / a, phi(cell.second) / b) * q;
    if (Traits::is_positive(w)) plan.emplace(cell, w);
  }
  const PartialCoupling<T> partial(f_mu, f_nu, std::move(plan));

  const T transported_floor = (a - L * delta) / (a + L * delta);
  const T bound = delta / a + (T(1) - transported_floor) * D;
  const T pumped = wasserstein_distance(f_mu, f_nu);
  const T plan_bound = partial_bound(partial);

  PumpingContinuity<T> out{a, delta, L, bound, pumped, {}};
  out.checks.push_back({"plan_cost_at_most_delta_over_a", coupling_cost(partial), delta / a, false});
  out.checks.push_back({"plan_mass_at_least_floor", transported_floor, partial.total(), false});
  out.checks.push_back({"partial_plan_bound", pumped, plan_bound, false});
  out.checks.push_back({"plan_bound_below_closed_form", plan_bound, bound, false});
  out.checks.push_back({"continuity_bound", pumped, bound, false});
  return out;
}

/// r = (mu(u) - p) d(supp(mu) n u, u^C) / 2: every measure within Wasserstein
/// distance r of mu still has more than p of its mass in u.
template <Scalar T>
T safe_radius(const Measure<T>& mu, const PointSet& u, const T& p) {
  if (!mcp_check(mu, u, p)) throw PreconditionError("safe_radius: mu does not have MCP(p, u)");
  const PointSet outside = complement(u, mu.space().size());
  if (outside.empty()) throw PreconditionError("safe_radius: u is the whole space, so d(., u^C) is undefined");
  const PointSet inner = set_intersection(mu.support(), u);
  return (mu.mass(u) - p) * *set_distance(mu.space(), inner, outside) / T(2);
}

template <Scalar T>
struct SafeRadiusReport {
  T radius;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<Inequality<T>> checks;  // p < nu(u) per accepted sample

  bool holds() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
  }
};

/// mu with mass m moved from x to y.
template <Scalar T>
Measure<T> move_mass(const Measure<T>& mu, PointId x, PointId y, const T& m) {
  auto masses = mu.masses();
  masses[x] -= m;
  masses[y] += m;
  return Measure<T>(mu.space_ptr(), std::move(masses));
}

/// Samples measures strictly inside the safe radius and checks each keeps
/// MCP(p, u). Half of the samples leak mass from supp(mu) n u straight into
/// u^C (the worst direction), the rest mix mu with a random measure.
template <Scalar T>
SafeRadiusReport<T> safe_radius_property(const Measure<T>& mu, const PointSet& u, const T& p, std::size_t samples,
                                         Rng& rng) {
  using Traits = ScalarTraits<T>;
  const auto& space = mu.space();
  SafeRadiusReport<T> report{safe_radius(mu, u, p), 0, 0, {}};
  const T& r = report.radius;
  const PointSet outside = complement(u, space.size());
  const PointSet inner = set_intersection(mu.support(), u);
  const T diam = *diameter(space, space.all_points());
  const std::size_t max_attempts = 50 * samples + 50;

  auto record = [&](const Measure<T>& nu) {
    if (!Traits::less(wasserstein_distance(mu, nu), r)) {
      ++report.rejected;
      return;
    }
    ++report.accepted;
    report.checks.push_back({"mass_inside_after_perturbation", p, nu.mass(u), true});
  };

  record(mu);
  for (std::size_t attempt = 0; report.accepted < samples && attempt < max_attempts; ++attempt) {
    const T frac = Traits::from_rational(random_fraction(rng, 16));
    if (attempt % 2 == 0) {
      const PointId x = inner[uniform_index(rng, 0, inner.size() - 1)];
      const PointId y = outside[uniform_index(rng, 0, outside.size() - 1)];
      const T m = min_of(mu.mass(x), r / space.distance(x, y)) * frac;
      record(move_mass(mu, x, y, m));
    } else {
      const auto eta = random_measure<T>(rng, mu.space_ptr(), space.all_points(), 4);
      const T t = min_of(T(1), T(2) * r * frac / diam);
      record(linear_interpolate(mu, eta, t));
    }
  }
  return report;
}

/// mu(U_1 n ... n U_k) > 1 - k(1 - p) for mu with mu(U_i) > p for all i, where
/// 1 - 1/n < p < 1 and k <= n. Throws when the hypotheses fail.
template <Scalar T>
Inequality<T> intersection_mass_bound(const Measure<T>& mu, const std::vector<PointSet>& sets, const T& p,
                                      std::optional<std::size_t> n = std::nullopt) {
  const std::size_t k = sets.size();
  const std::size_t level = n.value_or(k);
  if (k == 0) throw PreconditionError("intersection_mass_bound: no sets");
  if (k > level) throw PreconditionError("intersection_mass_bound: more sets than the level n");
  if (!(T(1) - T(1) / T(level) < p && p < T(1)))
    throw PreconditionError("intersection_mass_bound: needs 1 - 1/n < p < 1");
  for (const auto& s : sets)
    if (!mcp_check(mu, s, p)) throw PreconditionError("intersection_mass_bound: mu lacks MCP(p, U_i) for some i");
  PointSet meet = sets.front();
  for (std::size_t i = 1; i < k; ++i) meet = set_intersection(meet, sets[i]);
  return {"intersection_mass", T(1) - T(k) * (T(1) - p), mu.mass(meet), true};
}

template <Scalar T>
struct NerveSkeletonReport {
  SimplicialComplex nerve_skeleton;   // N(U) restricted to at most n indices
  SimplicialComplex mcp_nerve;        // index sets realised by a common MCP measure
  std::size_t dirac_witnesses = 0;    // nonempty intersections, witnessed by delta_x
  std::size_t excluded = 0;           // empty intersections, ruled out by the mass bound
  std::size_t trials = 0;             // random attempts to beat an exclusion
  std::vector<Inequality<T>> exclusions;  // 0 < 1 - |sigma|(1 - p)
  std::vector<std::string> failures;

  bool holds() const { return failures.empty() && nerve_skeleton == mcp_nerve; }
};

/// For every index set sigma with |sigma| <= n: a nonempty intersection gets a
/// Dirac witness with MCP(p, U_i) for all i in sigma; an empty one is excluded
/// because any such measure would put more than 1 - n(1 - p) > 0 of its mass
/// in the empty set. `maxtrials` random measures per excluded sigma try (and
/// must fail) to have all the MCPs at once.
template <Scalar T>
NerveSkeletonReport<T> nerve_skeleton_check(const Cover<T>& cover, int n, const T& p, std::size_t maxtrials, Rng& rng) {
  if (n < 2) throw PreconditionError("nerve_skeleton_check: n must be at least 2");
  if (!(T(1) - T(1) / T(n) < p && p < T(1))) throw PreconditionError("nerve_skeleton_check: needs 1 - 1/n < p < 1");
  const auto& space = cover.space_ptr();
  NerveSkeletonReport<T> report;
  report.nerve_skeleton = nerve_complex(cover, n - 1);

  std::vector<Simplex> witnessed;
  Simplex sigma;
  auto visit = [&](auto&& self, std::size_t next) -> void {
    for (std::size_t i = next; i < cover.size(); ++i) {
      sigma.push_back(i);
      std::vector<PointSet> sets;
      for (std::size_t j : sigma) sets.push_back(cover.set(j));
      const PointSet meet = cover.intersection(sigma);
      if (!meet.empty()) {
        const auto dirac = Measure<T>::dirac(space, meet[0]);
        bool all = true;
        for (const auto& s : sets) all = all && mcp_check(dirac, s, p).has_value();
        if (all) {
          witnessed.push_back(sigma);
          ++report.dirac_witnesses;
        } else {
          report.failures.push_back("Dirac measure fails MCP on a nonempty intersection");
        }
      } else {
        ++report.excluded;
        report.exclusions.push_back({"empty_intersection_threshold", T(0), T(1) - T(sigma.size()) * (T(1) - p), true});
        PointSet pool;
        for (const auto& s : sets) pool = set_union(pool, s);
        for (std::size_t t = 0; t < maxtrials; ++t) {
          ++report.trials;
          const auto mu = random_measure<T>(rng, space, pool, sigma.size() + 1);
          bool all = true;
          for (const auto& s : sets) all = all && mcp_check(mu, s, p).has_value();
          if (all) report.failures.push_back("a measure has MCP on every set of an empty intersection");
        }
      }
      if (sigma.size() < static_cast<std::size_t>(n)) self(self, i + 1);
      sigma.pop_back();
    }
  };
  visit(visit, 0);
  for (const auto& e : report.exclusions)
    if (!e.holds()) report.failures.push_back("mass threshold 1 - |sigma|(1 - p) is not positive");
  report.mcp_nerve = SimplicialComplex::from_simplices(cover.size(), n - 1, witnessed, cover.names());
  return report;
}

/// Parameters fixed by the local contractibility construction around mu.
template <Scalar T>
struct LocalContractSetup {
  std::size_t witness;  // cover set U containing supp(mu)
  T eps;
  PointSet y1, y2;      // eps- and 2eps-neighbourhoods of supp(mu)
  T p;
  T bound;              // D
  T s;
  T s_prime;
  BumpFunction<T> phi;
};

template <Scalar T>
struct LocalContractReport {
  LocalContractSetup<T> setup;
  std::size_t sampled = 0;
  std::size_t rejected = 0;
  std::vector<Inequality<T>> checks;
  std::vector<std::string> failures;

  bool holds() const {
    return failures.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
  }
};

/// eps = d(supp mu, U^C) / 4 (or a quarter of the smallest distance when
/// U = X), p = max(1 - s/(4D), 3/4), s' = min(s/2, (1-p) eps) / 2 and
/// phi = bump_pair(Y1, Y2).
template <Scalar T>
LocalContractSetup<T> local_contract_setup(const Measure<T>& mu, const Cover<T>& cover, const T& s) {
  if (!ScalarTraits<T>::is_positive(s)) throw PreconditionError("local_contractibility_witness: s must be positive");
  const auto witness = thickening_member(mu, cover);
  if (!witness) throw PreconditionError("local_contractibility_witness: mu is not in the thickening (no cover set holds its support)");
  const auto& space = mu.space();
  const PointSet support = mu.support();
  const PointSet outside = complement(cover.set(*witness), space.size());
  T eps = outside.empty() ? space.min_positive_distance().value_or(T(1)) / T(4)
                          : *set_distance(space, support, outside) / T(4);
  const T D = cover.bound();
  const T p = max_of(T(1) - s / (T(4) * D), T(3) / T(4));
  const T s_prime = min_of(s / T(2), (T(1) - p) * eps) / T(2);
  PointSet y1 = neighborhood(space, support, eps);
  PointSet y2 = neighborhood(space, support, T(2) * eps);
  auto phi = bump_pair(space, y1, y2);
  return {*witness, eps, std::move(y1), std::move(y2), p, D, s, s_prime, std::move(phi)};
}

/// Samples nu in B(mu; s') inside the thickening and checks, on a t-grid, the
/// containments behind the two contracting homotopies
///   H(nu, t) = (1-t) nu + t f(nu),  F(omega, t) = (1-t) omega + t mu,  omega = f(nu):
/// d_W(H, mu) < s, d_W(F, mu) < s, d_W(H, nu) <= (1-p) D, plus nu(Y1) > p.
template <Scalar T>
LocalContractReport<T> local_contractibility_witness(const Measure<T>& mu, const Cover<T>& cover, const T& s,
                                                     std::size_t grid, std::size_t samples, Rng& rng) {
  using Traits = ScalarTraits<T>;
  LocalContractReport<T> report{local_contract_setup(mu, cover, s), 0, 0, {}, {}};
  const auto& st = report.setup;
  const auto& space = mu.space();
  const PointSet support = mu.support();

  std::vector<std::size_t> containing;  // cover sets holding supp(mu)
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (support.is_subset_of(cover.set(i))) containing.push_back(i);

  std::vector<T> ts;
  if (grid <= 1) ts.push_back(T(0));
  else
    for (std::size_t j = 0; j < grid; ++j) ts.push_back(T(long(j)) / T(long(grid - 1)));

  auto examine = [&](const Measure<T>& nu) {
    ++report.sampled;
    report.checks.push_back({"nu_mass_in_Y1", st.p, nu.mass(st.y1), true});
    const Measure<T> omega = pumping_map(nu, st.phi);
    if (!omega.support().is_subset_of(st.y2)) report.failures.push_back("f(nu) is not supported in Y2");
    for (const T& t : ts) {
      const Measure<T> h = linear_interpolate(nu, omega, t);
      const Measure<T> f = linear_interpolate(omega, mu, t);
      if (!thickening_member(h, cover)) report.failures.push_back("H(nu, t) left the thickening");
      if (!f.support().is_subset_of(st.y2)) report.failures.push_back("F(omega, t) is not supported in Y2");
      report.checks.push_back({"H_within_s_of_mu", wasserstein_distance(h, mu), st.s, true});
      report.checks.push_back({"F_within_s_of_mu", wasserstein_distance(f, mu), st.s, true});
      report.checks.push_back({"H_within_(1-p)D_of_nu", wasserstein_distance(h, nu), (T(1) - st.p) * st.bound, false});
    }
  };

  examine(mu);
  const std::size_t max_attempts = 50 * samples + 50;
  for (std::size_t attempt = 0; report.sampled < samples && attempt < max_attempts; ++attempt) {
    const std::size_t v = containing[uniform_index(rng, 0, containing.size() - 1)];
    const PointSet& pool = cover.set(v);
    const T frac = Traits::from_rational(random_fraction(rng, 16));
    Measure<T> nu = mu;
    if (attempt % 2 == 0) {
      const PointId x = support[uniform_index(rng, 0, support.size() - 1)];
      const PointId y = pool[uniform_index(rng, 0, pool.size() - 1)];
      if (x == y) continue;
      nu = move_mass(mu, x, y, min_of(mu.mass(x), T(2) * st.s_prime / space.distance(x, y)) * frac);
    } else {
      const auto eta = random_measure<T>(rng, mu.space_ptr(), pool, 4);
      nu = linear_interpolate(mu, eta, min_of(T(1), T(2) * st.s_prime * frac / st.bound));
    }
    if (!Traits::less(wasserstein_distance(nu, mu), st.s_prime)) {
      ++report.rejected;
      continue;
    }
    examine(nu);
  }
  return report;
}

/// (1 - t) mu + t sub, for sub supported in supp(mu) n u.
template <Scalar T>
Measure<T> pumping_convex_sample(const Measure<T>& mu, const PointSet& u, const T& t, const Measure<T>& sub) {
  if (!sub.support().is_subset_of(set_intersection(mu.support(), u)))
    throw PreconditionError("pumping_convex_sample: sub is not supported in supp(mu) n u");
  return linear_interpolate(mu, sub, t);
}

}  // namespace vietoris
