#pragma once

#include "vietoris/report.hpp"
#include "vietoris/thickening.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

namespace vietoris {

enum class Command {
  complex,
  persistence,
  ot,
  dowker_check,
  cech_vietoris_check,
  thickening_check,
  local_contract,
  circle,
};

std::string command_name(Command c);

/// Everything a CLI run depends on. The seed determines every random fixture.
struct ExperimentConfig {
  Command command = Command::dowker_check;
  std::optional<std::filesystem::path> input;
  std::optional<std::filesystem::path> mu_path;
  std::optional<std::filesystem::path> nu_path;
  std::optional<std::filesystem::path> out;
  std::uint64_t seed = 0;
  int maxdim = 4;
  std::optional<std::size_t> samples;
  std::optional<int> n;
  std::optional<std::string> p;
  std::optional<std::string> r;
  std::optional<std::string> s;
  std::size_t grid = 11;
  std::string kind = "vietoris";

  std::size_t samples_or(std::size_t fallback) const { return samples.value_or(fallback); }
  Json to_json() const;
};

// Suites. Each returns a Report whose checks are the individual instances;
// callers merge them. All randomness flows from `seed`.

/// Betti vectors of N(U) and V(U) agree in degrees 0..maxdim.
template <Scalar T>
CheckRecord dowker_instance(const Cover<T>& cover, int maxdim, const std::string& inputs);

/// Random covers of spaces with <= 8 points by <= 6 sets.
Report dowker_random_suite(std::uint64_t seed, std::size_t count, int maxdim);

/// Čech(X; r) equals V(balls) and VR(X; r) equals V(maximal small sets) on
/// random spaces with <= 8 points and radii drawn around the distance values.
Report cech_vietoris_random_suite(std::uint64_t seed, std::size_t count, int maxdim);

/// VR persistence of n evenly spaced circle points, distances in units of
/// 2 pi / n. Checks a single H1 bar [1, ceil(n/3)) and compares the diagram
/// against direct Betti numbers of VR at every scale between distance values.
Report circle_experiment(std::size_t points, int maxdim);

/// Symmetry, triangle inequality and identity of indiscernibles for d_W.
Report metric_axioms_suite(std::uint64_t seed, std::size_t count);

/// partial_bound >= d_W on random partial couplings, plus exactness and
/// dominance of complete_partial.
Report partial_coupling_suite(std::uint64_t seed, std::size_t count);

/// Random conforming instances of the pumping continuity estimate on 6-point spaces.
Report pumping_suite(std::uint64_t seed, std::size_t count);

/// One random conforming pumping instance on `cover` (a proper cover set U,
/// phi vanishing exactly off U, mu with MCP(p, U) and nu close to mu).
template <Scalar T>
PumpingContinuity<T> pumping_instance(const Cover<T>& cover, Rng& rng);

/// Every grid measure (masses k/q with q <= max_den, support <= max_support)
/// is checked against mu(U_1 n .. n U_k) > 1 - k(1 - p) for every index set of
/// size k <= n on which it has MCP(p, U_i).
template <Scalar T>
Report intersection_grid_sweep(const Cover<T>& cover, int n, const T& p, int max_den, std::size_t max_support);

/// nerve_skeleton_check on `count` random covers, n alternating 2 and 3,
/// p drawn strictly inside (1 - 1/n, 1).
Report nerve_skeleton_random_suite(std::uint64_t seed, std::size_t count);

/// local_contractibility_witness for a random measure on `cover`.
template <Scalar T>
Report local_contract_suite(const Cover<T>& cover, std::uint64_t seed, std::size_t samples, std::size_t grid,
                            const std::optional<T>& s = std::nullopt,
                            const std::optional<Measure<T>>& mu = std::nullopt);

/// safe_radius_property for each proper cover set and a random MCP measure.
template <Scalar T>
Report safe_radius_suite(const Cover<T>& cover, const T& p, std::uint64_t seed, std::size_t samples);

/// Full thickening battery on one cover with conforming (n, p).
template <Scalar T>
Report thickening_suite(const Cover<T>& cover, int n, const T& p, std::uint64_t seed, std::size_t samples);

// CLI entry points.

Report run_dowker_check(const ExperimentConfig& config);
Report run_cech_vietoris_check(const ExperimentConfig& config);
Report run_circle_experiment(const ExperimentConfig& config);
Report run_thickening_suite(const ExperimentConfig& config);
Report run_local_contract(const ExperimentConfig& config);

/// (n, p) for the thickening commands; throws PreconditionError unless
/// n >= 2 and 1 - 1/n < p < 1.
std::pair<int, Rational> conforming_level(const ExperimentConfig& config);

}  // namespace vietoris
