#include "vietoris/experiments.hpp"

#include "vietoris/fixtures.hpp"
#include "vietoris/parallel.hpp"

#include <numeric>
#include <sstream>

namespace vietoris {

std::string command_name(Command c) {
  switch (c) {
    case Command::complex: return "complex";
    case Command::persistence: return "persistence";
    case Command::ot: return "ot";
    case Command::dowker_check: return "dowker-check";
    case Command::cech_vietoris_check: return "cech-vietoris-check";
    case Command::thickening_check: return "thickening-check";
    case Command::local_contract: return "local-contract";
    case Command::circle: return "circle";
  }
  return "unknown";
}

Json ExperimentConfig::to_json() const {
  Json out;
  if (input) out["input"] = input->string();
  if (mu_path) out["mu"] = mu_path->string();
  if (nu_path) out["nu"] = nu_path->string();
  out["seed"] = seed;
  out["maxdim"] = maxdim;
  if (samples) out["samples"] = *samples;
  if (n) out["n"] = *n;
  if (p) out["p"] = *p;
  if (r) out["r"] = *r;
  if (s) out["s"] = *s;
  if (command == Command::local_contract) out["grid"] = grid;
  if (command == Command::complex) out["kind"] = kind;
  return out;
}

namespace {

template <Scalar T>
std::string describe(const Cover<T>& cover) {
  std::ostringstream os;
  os << "points=" << cover.space().size() << " sets=" << cover.size() << " bound=" << scalar_text(cover.bound());
  return os.str();
}

std::string betti_text(const BettiVector& b) {
  std::string out = "(";
  for (std::size_t i = 0; i < b.betti.size(); ++i) out += (i ? "," : "") + std::to_string(b.betti[i]);
  return out + ")";
}

template <Scalar T>
CheckRecord as_record(const Inequality<T>& ineq, std::string inputs) {
  return {ineq.name, std::move(inputs), ineq.holds(), scalar_text(ineq.margin()),
          ScalarTraits<T>::to_double(ineq.margin())};
}

void add_all(Report& report, const std::vector<std::vector<CheckRecord>>& batches) {
  for (const auto& batch : batches)
    for (const auto& rec : batch) report.add(rec);
}

/// Smallest margin among the checks named `name`, as exact text.
template <Scalar T>
std::optional<T> min_margin(const std::vector<Inequality<T>>& checks, const std::string& name) {
  std::optional<T> best;
  for (const auto& c : checks)
    if (c.name == name && (!best || ScalarTraits<T>::less(c.margin(), *best))) best = c.margin();
  return best;
}

template <Scalar T>
Json optional_scalar(const std::optional<T>& v) {
  return v ? scalar_json(*v) : Json(nullptr);
}

template <Scalar T>
Json point_names(const MetricSpace<T>& space, const PointSet& s) {
  Json out = Json::array();
  for (PointId x : s) out.push_back(space.label(x));
  return out;
}

/// (1 - t) mu_U + t eta with mu_U on u and t < 1 - p, so mu(u) > p.
template <Scalar T>
Measure<T> random_mcp_measure(Rng& rng, const SpacePtr<T>& space, const PointSet& u, const T& p) {
  const auto inside = random_measure<T>(rng, space, u, 4);
  const auto eta = random_measure<T>(rng, space, space->all_points(), 4);
  const T t = (T(1) - p) * ScalarTraits<T>::from_rational(random_fraction(rng, 8));
  return linear_interpolate(inside, eta, t);
}

}  // namespace

// Dowker ---------------------------------------------------------------------

template <Scalar T>
CheckRecord dowker_instance(const Cover<T>& cover, int maxdim, const std::string& inputs) {
  const auto nerve = betti_numbers(nerve_complex(cover, maxdim + 1), maxdim);
  const auto vietoris = betti_numbers(vietoris_complex(cover, maxdim + 1), maxdim);
  return {"dowker_betti", inputs + " N=" + betti_text(nerve) + " V=" + betti_text(vietoris), nerve == vietoris, "", 0.0};
}

Report dowker_random_suite(std::uint64_t seed, std::size_t count, int maxdim) {
  Report report("dowker-check", Json{{"seed", seed}, {"count", count}, {"maxdim", maxdim}});
  auto batches = parallel_map(count, [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    const std::size_t n = uniform_index(rng, 1, 8);
    const auto space = random_space<Rational>(rng, n, 6);
    const auto cover = random_cover(rng, space, 6);
    return std::vector<CheckRecord>{
        dowker_instance(cover, maxdim, "instance=" + std::to_string(i) + " " + describe(cover))};
  });
  add_all(report, batches);
  report.set_result("instances", count);
  return report;
}

// Čech / Vietoris --------------------------------------------------------------

namespace {

std::vector<CheckRecord> cech_vietoris_records(const SpacePtr<Rational>& space, const Rational& r, int maxdim,
                                               const std::string& inputs) {
  const std::string tag = inputs + " r=" + scalar_text(r);
  return {{"cech_equals_vietoris_of_balls", tag, cech_equals_vietoris_of_balls(space, r, maxdim), "", 0.0},
          {"vr_equals_vietoris_of_small_sets", tag, vr_as_vietoris_check(space, r, maxdim), "", 0.0}};
}

}  // namespace

Report cech_vietoris_random_suite(std::uint64_t seed, std::size_t count, int maxdim) {
  Report report("cech-vietoris-check", Json{{"seed", seed}, {"count", count}, {"maxdim", maxdim}});
  const auto line = fixtures::line_space(5);
  for (const auto& r : {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)})
    for (const auto& rec : cech_vietoris_records(line, r, maxdim, "line fixture, 5 points")) report.add(rec);

  auto batches = parallel_map(count, [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    const std::size_t n = uniform_index(rng, 1, 8);
    const auto space = random_space<Rational>(rng, n, 6);
    Rational r(1);
    if (n > 1) {
      const auto x = uniform_index(rng, 0, n - 1);
      auto y = uniform_index(rng, 0, n - 2);
      if (y >= x) ++y;
      r = space->distance(x, y);
    }
    switch (uniform_index(rng, 0, 2)) {
      case 0: break;
      case 1: r += Rational(1, 2); break;
      default:
        if (r > Rational(1, 2)) r -= Rational(1, 2);
    }
    return cech_vietoris_records(space, r, maxdim, "instance=" + std::to_string(i) + " points=" + std::to_string(n));
  });
  add_all(report, batches);
  report.set_result("instances", count);
  return report;
}

// Circle -----------------------------------------------------------------------

Report circle_experiment(std::size_t points, int maxdim) {
  if (points < 3) throw PreconditionError("circle: needs at least 3 points");
  if (maxdim < 1) throw PreconditionError("circle: maxdim must be at least 1 to see the H1 bar");
  Report report("circle", Json{{"points", points}, {"maxdim", maxdim}, {"unit", "2pi/" + std::to_string(points)}});
  const auto space = fixtures::cycle_space(points);
  const auto diagram = vr_persistence(*space, maxdim);

  const auto h1 = diagram.bars_of_dim(1);
  const Rational expected_birth(1);
  const Rational expected_death(static_cast<long>((points + 2) / 3));
  const std::string tag = "n=" + std::to_string(points);
  report.add("single_h1_bar", tag + " bars=" + std::to_string(h1.size()), h1.size() == 1);
  if (h1.size() == 1) {
    report.add("h1_birth", tag + " birth=" + scalar_text(h1[0].birth), h1[0].birth == expected_birth);
    report.add("h1_death", tag + " death=" + (h1[0].death ? scalar_text(*h1[0].death) : std::string("inf")),
               h1[0].death && *h1[0].death == expected_death);
  }
  std::size_t infinite_h0 = 0;
  for (const auto& b : diagram.bars_of_dim(0))
    if (b.infinite()) ++infinite_h0;
  report.add("one_component", tag, infinite_h0 == 1);

  // Each slice k + 1/2 sees exactly the simplices of diameter <= k.
  const auto half_turn = static_cast<long>(points / 2);
  for (long k = 0; k <= half_turn; ++k) {
    const Rational r = Rational(k) + Rational(1, 2);
    const auto direct = betti_numbers(vr_complex(*space, r, maxdim + 1), maxdim);
    BettiVector from_diagram;
    for (int d = 0; d <= maxdim; ++d) from_diagram.betti.push_back(diagram.betti_strict(d, r));
    report.add("betti_slice", tag + " r=" + scalar_text(r) + " direct=" + betti_text(direct) +
                                  " diagram=" + betti_text(from_diagram),
               direct == from_diagram);
  }

  Json bars = Json::array();
  const double unit = 2.0 * 3.14159265358979323846 / static_cast<double>(points);
  for (const auto& b : diagram.bars) {
    if (b.zero_length()) continue;
    Json bar{{"dim", b.dim}, {"birth", scalar_json(b.birth)}, {"death", b.death ? scalar_json(*b.death) : Json("inf")}};
    bar["birth_radians"] = ScalarTraits<Rational>::to_double(b.birth) * unit;
    bar["death_radians"] = b.death ? Json(ScalarTraits<Rational>::to_double(*b.death) * unit) : Json("inf");
    bars.push_back(std::move(bar));
  }
  report.set_result("barcode", std::move(bars));
  if (h1.size() == 1)
    report.set_result("h1_bar", Json{{"birth", scalar_json(h1[0].birth)},
                                     {"death", h1[0].death ? scalar_json(*h1[0].death) : Json("inf")}});
  return report;
}

// Transport ----------------------------------------------------------------------

Report metric_axioms_suite(std::uint64_t seed, std::size_t count) {
  Report report("metric-axioms", Json{{"seed", seed}, {"count", count}});
  auto batches = parallel_map(count, [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    const auto space = random_space<Rational>(rng, uniform_index(rng, 2, 7), 10, 2);
    const auto all = space->all_points();
    const auto mu = random_measure<Rational>(rng, space, all, 5);
    const auto nu = random_measure<Rational>(rng, space, all, 5);
    const auto rho = random_measure<Rational>(rng, space, all, 5);
    const Rational d_mn = wasserstein_distance(mu, nu);
    const Rational d_nm = wasserstein_distance(nu, mu);
    const Rational d_nr = wasserstein_distance(nu, rho);
    const Rational d_mr = wasserstein_distance(mu, rho);
    const std::string tag = "triple=" + std::to_string(i);
    std::vector<CheckRecord> out;
    out.push_back({"symmetry", tag + " d=" + scalar_text(d_mn), d_mn == d_nm, "", 0.0});
    out.push_back(as_record(Inequality<Rational>{"triangle", d_mr, d_mn + d_nr, false}, tag));
    out.push_back({"identity", tag, wasserstein_distance(mu, mu) == 0 && (mu == nu) == (d_mn == 0), "", 0.0});
    return out;
  });
  add_all(report, batches);
  return report;
}

Report partial_coupling_suite(std::uint64_t seed, std::size_t count) {
  Report report("partial-coupling", Json{{"seed", seed}, {"count", count}});
  auto batches = parallel_map(count, [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    const auto space = random_space<Rational>(rng, uniform_index(rng, 2, 7), 10, 2);
    const auto all = space->all_points();
    const auto mu = random_measure<Rational>(rng, space, all, 5);
    const auto nu = random_measure<Rational>(rng, space, all, 5);
    const auto base = i % 2 == 0 ? Coupling<Rational>(wasserstein1(mu, nu).coupling) : Coupling<Rational>::product(mu, nu);
    PartialCoupling<Rational>::Entries scaled;
    for (const auto& [cell, v] : base.entries()) {
      const auto k = static_cast<long>(uniform_index(rng, 0, 4));
      if (k > 0) scaled.emplace(cell, v * Rational(k, 4));
    }
    const PartialCoupling<Rational> partial(mu, nu, scaled);
    const std::string tag = "instance=" + std::to_string(i) + " c=" + scalar_text(partial.total());
    std::vector<CheckRecord> out;
    out.push_back(as_record(Inequality<Rational>{"partial_bound", wasserstein_distance(mu, nu), partial_bound(partial),
                                                 false},
                            tag));
    bool exact = false;
    bool dominates = false;
    try {
      const auto full = complete_partial(partial);
      exact = full.has_exact_marginals();
      dominates = true;
      for (const auto& [cell, v] : partial.entries()) dominates = dominates && v <= full.entry(cell.first, cell.second);
    } catch (const Error&) {
    }
    out.push_back({"completion_exact_marginals", tag, exact, "", 0.0});
    out.push_back({"completion_dominates", tag, dominates, "", 0.0});
    return out;
  });
  add_all(report, batches);
  return report;
}

// Pumping --------------------------------------------------------------------------

template <Scalar T>
PumpingContinuity<T> pumping_instance(const Cover<T>& cover, Rng& rng) {
  using Traits = ScalarTraits<T>;
  const auto& space = cover.space_ptr();
  std::vector<std::size_t> proper;
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (cover.set(i).size() < space->size()) proper.push_back(i);
  if (proper.empty()) throw PreconditionError("pumping: every cover set is the whole space");

  for (int attempt = 0; attempt < 500; ++attempt) {
    const PointSet& u = cover.set(proper[uniform_index(rng, 0, proper.size() - 1)]);
    const T p = Traits::from_rational(Rational(1, 2) + random_fraction(rng, 8) / 2);
    const auto mu = random_mcp_measure(rng, space, u, p);
    BumpFunction<T> phi;
    if (uniform_index(rng, 0, 1) == 0) {
      phi = bump_simple(*space, u);
    } else {
      const auto y1 = PointSet(random_subset(rng, u.members(), uniform_index(rng, 1, u.size())));
      phi = bump_pair(*space, y1, u);
    }
    const auto eta = random_measure<T>(rng, space, space->all_points(), 4);
    const T t = Traits::from_rational(random_fraction(rng, 16)) / T(8);
    const auto nu = linear_interpolate(mu, eta, t);
    const T a = pumping_weight(mu, phi);
    const T b = pumping_weight(nu, phi);
    if (!Traits::is_positive(a) || !Traits::is_positive(b)) continue;
    if (!Traits::less(phi.lipschitz_bound * wasserstein_distance(mu, nu), a)) continue;
    return pumping_continuity_bound(mu, nu, phi, cover.bound());
  }
  throw PreconditionError("pumping: no conforming instance found on this cover");
}

Report pumping_suite(std::uint64_t seed, std::size_t count) {
  Report report("pumping", Json{{"seed", seed}, {"count", count}});
  auto batches = parallel_map(count, [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    for (;;) {
      const auto space = random_space<Rational>(rng, 6, 10, 4);
      const auto cover = random_cover(rng, space, 4);
      bool has_proper = false;
      for (const auto& s : cover.sets()) has_proper = has_proper || s.size() < space->size();
      if (!has_proper) continue;
      const auto inst = pumping_instance(cover, rng);
      const std::string tag = "instance=" + std::to_string(i) + " a=" + scalar_text(inst.weight) +
                              " delta=" + scalar_text(inst.delta) + " L=" + scalar_text(inst.lipschitz);
      std::vector<CheckRecord> out;
      for (const auto& c : inst.checks) out.push_back(as_record(c, tag));
      return out;
    }
  });
  add_all(report, batches);
  return report;
}

// Intersection bound ----------------------------------------------------------------

template <Scalar T>
Report intersection_grid_sweep(const Cover<T>& cover, int n, const T& p, int max_den, std::size_t max_support) {
  using Traits = ScalarTraits<T>;
  if (n < 2) throw PreconditionError("intersection sweep: n must be at least 2");
  if (!(T(1) - T(1) / T(n) < p && p < T(1))) throw PreconditionError("intersection sweep: needs 1 - 1/n < p < 1");
  const std::size_t points = cover.space().size();
  if (points > 64) throw PreconditionError("intersection sweep: at most 64 points");
  Report report("intersection-sweep", Json{{"cover", describe(cover)}, {"n", n}, {"p", scalar_json(p)},
                                           {"max_denominator", max_den}, {"max_support", max_support}});

  std::vector<std::uint64_t> masks;
  for (const auto& s : cover.sets()) {
    std::uint64_t m = 0;
    for (PointId x : s) m |= std::uint64_t{1} << x;
    masks.push_back(m);
  }
  std::vector<T> thresholds{T(1)};
  for (int k = 1; k <= n; ++k) thresholds.push_back(T(1) - T(k) * (T(1) - p));

  std::size_t measures = 0, instances = 0;
  std::optional<T> least;
  std::vector<std::string> failures;

  std::vector<PointId> support;
  std::vector<long> parts;
  auto check_measure = [&](long q) {
    ++measures;
    auto mass_of = [&](std::uint64_t mask) {
      long total = 0;
      for (std::size_t i = 0; i < support.size(); ++i)
        if (mask >> support[i] & 1) total += parts[i];
      return total;
    };
    const T qq = T(q);
    std::vector<std::size_t> concentrated;
    for (std::size_t i = 0; i < masks.size(); ++i)
      if (Traits::less(p, T(mass_of(masks[i])) / qq)) concentrated.push_back(i);
    std::vector<std::size_t> sigma;
    auto visit = [&](auto&& self, std::size_t next, std::uint64_t meet) -> void {
      for (std::size_t j = next; j < concentrated.size(); ++j) {
        const std::uint64_t m = meet & masks[concentrated[j]];
        sigma.push_back(concentrated[j]);
        ++instances;
        const T lhs = thresholds[sigma.size()];
        const T rhs = T(mass_of(m)) / qq;
        const T margin = rhs - lhs;
        if (!least || Traits::less(margin, *least)) least = margin;
        if (!Traits::less(lhs, rhs) && failures.size() < 20) {
          std::string text = "sigma={";
          for (std::size_t k = 0; k < sigma.size(); ++k) text += (k ? "," : "") + cover.names()[sigma[k]];
          failures.push_back(text + "} mass=" + scalar_text(rhs));
        }
        if (sigma.size() < static_cast<std::size_t>(n)) self(self, j + 1, m);
        sigma.pop_back();
      }
    };
    visit(visit, 0, ~std::uint64_t{0});
  };

  // Compositions of q into |support| positive parts with gcd(parts, q) = 1,
  // so each grid measure is visited once.
  auto compose = [&](auto&& self, long q, long remaining, std::size_t slot, long g) -> void {
    if (slot + 1 == support.size()) {
      parts[slot] = remaining;
      if (std::gcd(g, remaining) == 1) check_measure(q);
      return;
    }
    for (long k = 1; k <= remaining - static_cast<long>(support.size() - slot - 1); ++k) {
      parts[slot] = k;
      self(self, q, remaining - k, slot + 1, std::gcd(g, k));
    }
  };

  for (std::size_t size = 1; size <= std::min(max_support, points); ++size) {
    for_each_combination(cover.space().all_points().members(), size, [&](const std::vector<std::size_t>& chosen) {
      support.assign(chosen.begin(), chosen.end());
      parts.assign(size, 0);
      for (long q = static_cast<long>(size); q <= max_den; ++q) compose(compose, q, q, 0, q);
    });
  }

  for (const auto& f : failures) report.add("intersection_mass", f, false);
  CheckRecord summary{"intersection_mass_exhaustive",
                      describe(cover) + " n=" + std::to_string(n) + " p=" + scalar_text(p) +
                          " measures=" + std::to_string(measures) + " instances=" + std::to_string(instances),
                      failures.empty(), least ? scalar_text(*least) : "", least ? Traits::to_double(*least) : 0.0};
  report.add(summary);
  report.set_result("measures", measures);
  report.set_result("instances", instances);
  report.set_result("min_margin", optional_scalar(least));
  return report;
}

// Nerve skeleta -----------------------------------------------------------------------

namespace {

template <Scalar T>
std::vector<CheckRecord> nerve_skeleton_records(const Cover<T>& cover, int n, const T& p, Rng& rng,
                                                const std::string& tag) {
  const auto res = nerve_skeleton_check(cover, n, p, 10, rng);
  std::string inputs = tag + " n=" + std::to_string(n) + " p=" + scalar_text(p) +
                       " witnessed=" + std::to_string(res.dirac_witnesses) + " excluded=" + std::to_string(res.excluded);
  for (const auto& f : res.failures) inputs += "; " + f;
  const auto least = min_margin(res.exclusions, "empty_intersection_threshold");
  return {{"skeleta_coincide", inputs, res.holds(), least ? scalar_text(*least) : "",
           least ? ScalarTraits<T>::to_double(*least) : 0.0}};
}

}  // namespace

Report nerve_skeleton_random_suite(std::uint64_t seed, std::size_t count) {
  Report report("nerve-skeleton", Json{{"seed", seed}, {"count", count}});
  auto batches = parallel_map(count, [&](std::size_t i) {
    Rng rng = make_rng(seed, i);
    const int n = 2 + static_cast<int>(i % 2);
    const auto space = random_space<Rational>(rng, uniform_index(rng, 2, 8), 6);
    const auto cover = random_cover(rng, space, 6);
    const Rational p = Rational(1) - Rational(1, n) + Rational(1, n) * random_fraction(rng, 10);
    return nerve_skeleton_records(cover, n, p, rng, "instance=" + std::to_string(i) + " " + describe(cover));
  });
  add_all(report, batches);
  return report;
}

// Local contractibility ------------------------------------------------------------------

template <Scalar T>
Report local_contract_suite(const Cover<T>& cover, std::uint64_t seed, std::size_t samples, std::size_t grid,
                            const std::optional<T>& s, const std::optional<Measure<T>>& mu) {
  Rng rng = make_rng(seed, 0);
  const T radius = s.value_or(cover.bound() / T(2));
  Measure<T> center = mu ? *mu
                         : random_measure<T>(rng, cover.space_ptr(),
                                             cover.set(uniform_index(rng, 0, cover.size() - 1)), 3);
  const auto res = local_contractibility_witness(center, cover, radius, grid, samples, rng);
  const auto& st = res.setup;
  const auto& space = cover.space();

  Report report("local-contract", Json{{"cover", describe(cover)}, {"samples", samples}, {"grid", grid},
                                       {"s", scalar_json(radius)}});
  const std::size_t per_nu = 1 + 3 * std::max<std::size_t>(grid, 1);
  for (std::size_t k = 0; k < res.checks.size(); ++k) {
    const std::size_t nu_index = k / per_nu;
    const std::size_t within = k % per_nu;
    std::string tag = "nu=" + std::to_string(nu_index);
    if (within > 0) tag += " t_index=" + std::to_string((within - 1) / 3);
    report.add(as_record(res.checks[k], tag));
  }
  for (const auto& f : res.failures) report.add("containment", f, false);

  report.set_result("mu", measure_to_json(center));
  report.set_result("witness_set", cover.names()[st.witness]);
  report.set_result("eps", scalar_json(st.eps));
  report.set_result("p", scalar_json(st.p));
  report.set_result("D", scalar_json(st.bound));
  report.set_result("s_prime", scalar_json(st.s_prime));
  report.set_result("lipschitz", scalar_json(st.phi.lipschitz_bound));
  report.set_result("Y1", point_names(space, st.y1));
  report.set_result("Y2", point_names(space, st.y2));
  report.set_result("sampled", res.sampled);
  report.set_result("rejected", res.rejected);
  for (const char* name : {"H_within_s_of_mu", "F_within_s_of_mu", "H_within_(1-p)D_of_nu", "nu_mass_in_Y1"})
    report.set_result(std::string("min_margin/") + name, optional_scalar(min_margin(res.checks, name)));
  return report;
}

// Safe radius ------------------------------------------------------------------------------

template <Scalar T>
Report safe_radius_suite(const Cover<T>& cover, const T& p, std::uint64_t seed, std::size_t samples) {
  Report report("safe-radius", Json{{"cover", describe(cover)}, {"p", scalar_json(p)}, {"samples", samples}});
  Json radii = Json::object();
  for (std::size_t i = 0; i < cover.size(); ++i) {
    const PointSet& u = cover.set(i);
    if (u.size() == cover.space().size()) continue;
    Rng rng = make_rng(seed, i);
    const auto mu = random_mcp_measure(rng, cover.space_ptr(), u, p);
    const auto res = safe_radius_property(mu, u, p, samples, rng);
    const std::string tag = "set=" + cover.names()[i] + " r=" + scalar_text(res.radius);
    for (std::size_t k = 0; k < res.checks.size(); ++k)
      report.add(as_record(res.checks[k], tag + " sample=" + std::to_string(k)));
    radii[cover.names()[i]] = scalar_json(res.radius);
  }
  report.set_result("radii", std::move(radii));
  return report;
}

// Thickening battery ---------------------------------------------------------------------

template <Scalar T>
Report thickening_suite(const Cover<T>& cover, int n, const T& p, std::uint64_t seed, std::size_t samples) {
  Report report("thickening-check", Json{{"cover", describe(cover)}, {"n", n}, {"p", scalar_json(p)}});

  {
    Rng rng = make_rng(seed, 1);
    Report part("nerve-skeleton");
    for (const auto& rec : nerve_skeleton_records(cover, n, p, rng, describe(cover))) part.add(rec);
    report.merge(part, "nerve_skeleton");
  }
  report.merge(intersection_grid_sweep(cover, n, p, 12, 3), "intersection");
  report.merge(safe_radius_suite(cover, p, derive_seed(seed, 2), samples), "safe_radius");

  bool has_proper = false;
  for (const auto& s : cover.sets()) has_proper = has_proper || s.size() < cover.space().size();
  if (has_proper) {
    Report part("pumping");
    const std::size_t count = std::max<std::size_t>(1, samples / 10);
    for (std::size_t i = 0; i < count; ++i) {
      Rng rng = make_rng(derive_seed(seed, 3), i);
      const auto inst = pumping_instance(cover, rng);
      for (const auto& c : inst.checks) part.add(as_record(c, "instance=" + std::to_string(i)));
    }
    report.merge(part, "pumping");
  }
  report.merge(local_contract_suite(cover, derive_seed(seed, 4), std::max<std::size_t>(1, samples / 4), 5),
               "local_contract");
  return report;
}

// CLI entry points ---------------------------------------------------------------------------

std::pair<int, Rational> conforming_level(const ExperimentConfig& config) {
  const int n = config.n.value_or(2);
  if (n < 2) throw PreconditionError("n must be at least 2");
  const Rational p = config.p ? parse_rational(*config.p) : Rational(1) - Rational(1, 2 * n);
  const Rational floor = Rational(1) - Rational(1, n);
  if (!(floor < p && p < Rational(1)))
    throw PreconditionError("p = " + to_string(p) + " does not satisfy 1 - 1/n < p < 1 with n = " +
                            std::to_string(n) + " (need p > " + to_string(floor) + ")");
  return {n, p};
}

namespace {

std::vector<std::pair<std::string, AnyCover>> covers_for(const ExperimentConfig& config) {
  std::vector<std::pair<std::string, AnyCover>> out;
  if (config.input) {
    out.emplace_back(config.input->filename().string(), load_cover(*config.input));
  } else {
    out.emplace_back("triangle", fixtures::triangle_cover());
    out.emplace_back("six_point", fixtures::six_point_cover());
    out.emplace_back("eight_point", fixtures::eight_point_cover());
  }
  return out;
}

}  // namespace

Report run_dowker_check(const ExperimentConfig& config) {
  Report report("dowker-check", config.to_json());
  if (config.input) {
    std::visit(
        [&](const auto& cover) { report.add(dowker_instance(cover, config.maxdim, config.input->filename().string())); },
        load_cover(*config.input));
    if (!config.samples) return report;
  }
  report.merge(dowker_random_suite(config.seed, config.samples_or(100), config.maxdim), "random");
  return report;
}

Report run_cech_vietoris_check(const ExperimentConfig& config) {
  Report report("cech-vietoris-check", config.to_json());
  if (config.input) {
    if (!config.r) throw InputError("cech-vietoris-check with --input needs --r");
    const auto space = load_space(*config.input);
    std::visit(
        [&](const auto& sp) {
          using T = typename std::decay_t<decltype(*sp)>::Scalar;
          const T r = parse_scalar<T>(Json(*config.r));
          const std::string tag = config.input->filename().string() + " r=" + scalar_text(r);
          report.add("cech_equals_vietoris_of_balls", tag, cech_equals_vietoris_of_balls(sp, r, config.maxdim + 1));
          report.add("vr_equals_vietoris_of_small_sets", tag, vr_as_vietoris_check(sp, r, config.maxdim + 1));
        },
        space);
    if (!config.samples) return report;
  }
  report.merge(cech_vietoris_random_suite(config.seed, config.samples_or(50), config.maxdim + 1), "random");
  return report;
}

Report run_circle_experiment(const ExperimentConfig& config) {
  Report report("circle", config.to_json());
  report.merge(circle_experiment(config.samples_or(12), config.maxdim), "circle");
  return report;
}

Report run_thickening_suite(const ExperimentConfig& config) {
  const auto [n, p] = conforming_level(config);
  Report report("thickening-check", config.to_json());
  const auto covers = covers_for(config);
  for (std::size_t i = 0; i < covers.size(); ++i) {
    const auto& [name, any] = covers[i];
    const auto seed = derive_seed(config.seed, i);
    std::visit(
        [&](const auto& cover) {
          using T = std::decay_t<decltype(cover.bound())>;
          const T level = ScalarTraits<T>::from_rational(p);
          report.merge(thickening_suite(cover, n, level, seed, config.samples_or(40)), name);
        },
        any);
  }
  return report;
}

Report run_local_contract(const ExperimentConfig& config) {
  Report report("local-contract", config.to_json());
  const AnyCover any = config.input ? load_cover(*config.input) : AnyCover(fixtures::eight_point_cover());
  std::visit(
      [&](const auto& cover) {
        using T = std::decay_t<decltype(cover.bound())>;
        std::optional<T> s;
        if (config.s) s = parse_scalar<T>(Json(*config.s));
        std::optional<Measure<T>> mu;
        if (config.mu_path) mu = parse_measure(read_json(*config.mu_path), cover.space_ptr());
        report.merge(local_contract_suite(cover, config.seed, config.samples_or(100), config.grid, s, mu),
                     "local_contract");
      },
      any);
  return report;
}

// Explicit instantiations --------------------------------------------------------------------

#define VIETORIS_EXPERIMENTS(T)                                                                                   \
  template CheckRecord dowker_instance<T>(const Cover<T>&, int, const std::string&);                              \
  template PumpingContinuity<T> pumping_instance<T>(const Cover<T>&, Rng&);                                       \
  template Report intersection_grid_sweep<T>(const Cover<T>&, int, const T&, int, std::size_t);                   \
  template Report local_contract_suite<T>(const Cover<T>&, std::uint64_t, std::size_t, std::size_t,               \
                                          const std::optional<T>&, const std::optional<Measure<T>>&);             \
  template Report safe_radius_suite<T>(const Cover<T>&, const T&, std::uint64_t, std::size_t);                    \
  template Report thickening_suite<T>(const Cover<T>&, int, const T&, std::uint64_t, std::size_t);

VIETORIS_EXPERIMENTS(Rational)
VIETORIS_EXPERIMENTS(double)

#undef VIETORIS_EXPERIMENTS

}  // namespace vietoris
