#pragma once

#include "vietoris/complexes.hpp"
#include "vietoris/transport.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace vietoris {

using Rng = std::mt19937_64;

/// splitmix64 of (seed, stream): independent per-instance seeds so that
/// fixture i does not depend on how many draws fixture i-1 made.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Rng make_rng(std::uint64_t seed, std::uint64_t stream) { return Rng(derive_seed(seed, stream)); }

inline std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Uniform k-subset of `items`, sorted.
inline std::vector<std::size_t> random_subset(Rng& rng, std::vector<std::size_t> items, std::size_t k) {
  std::shuffle(items.begin(), items.end(), rng);
  items.resize(std::min(k, items.size()));
  std::sort(items.begin(), items.end());
  return items;
}

/// Rational in (0, 1) with denominator at most `max_den` (>= 2).
inline Rational random_fraction(Rng& rng, int max_den) {
  const auto den = static_cast<long>(uniform_index(rng, 2, static_cast<std::size_t>(max_den)));
  const auto num = static_cast<long>(uniform_index(rng, 1, static_cast<std::size_t>(den - 1)));
  return Rational(num, den);
}

/// Shortest-path metric of a complete graph with integer weights in
/// [1, max_weight], divided by `denominator`. Always a valid metric; ties are
/// common, which exercises strict comparisons.
template <Scalar T>
SpacePtr<T> random_space(Rng& rng, std::size_t n, int max_weight = 10, int denominator = 1) {
  std::vector<std::vector<long>> w(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      w[i][j] = w[j][i] = static_cast<long>(uniform_index(rng, 1, static_cast<std::size_t>(max_weight)));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) w[i][j] = std::min(w[i][j], w[i][k] + w[k][j]);
  typename MetricSpace<T>::Matrix d(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d(Eigen::Index(i), Eigen::Index(j)) = ScalarTraits<T>::from_rational(Rational(w[i][j], denominator));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
  return make_space<T>(std::move(labels), std::move(d));
}

/// Between 1 and `max_sets` random nonempty sets, patched so that they cover
/// the space. The bound is the largest set diameter plus one.
template <Scalar T>
Cover<T> random_cover(Rng& rng, const SpacePtr<T>& space, std::size_t max_sets) {
  const std::size_t n = space->size();
  const std::size_t k = uniform_index(rng, 1, max_sets);
  std::vector<std::vector<PointId>> sets(k);
  std::bernoulli_distribution coin(0.5);
  for (auto& s : sets) {
    for (PointId x = 0; x < n; ++x)
      if (coin(rng)) s.push_back(x);
    if (s.empty()) s.push_back(uniform_index(rng, 0, n - 1));
  }
  for (PointId x = 0; x < n; ++x) {
    bool covered = false;
    for (const auto& s : sets) covered = covered || std::find(s.begin(), s.end(), x) != s.end();
    if (!covered) sets[uniform_index(rng, 0, k - 1)].push_back(x);
  }
  std::vector<PointSet> out;
  T bound = T(0);
  for (auto& s : sets) {
    out.emplace_back(std::move(s));
    bound = max_of(bound, *diameter(*space, out.back()));
  }
  return Cover<T>(space, std::move(out), bound + T(1));
}

/// Probability measure on a random subset of `within` of size at most
/// `max_support`, with masses k_i / q for a random q <= max_den.
template <Scalar T>
Measure<T> random_measure(Rng& rng, const SpacePtr<T>& space, const PointSet& within, std::size_t max_support,
                          int max_den = 24) {
  if (within.empty()) throw PreconditionError("random_measure: empty support pool");
  const std::size_t s = uniform_index(rng, 1, std::min(max_support, within.size()));
  const auto support = random_subset(rng, within.members(), s);
  const auto q = uniform_index(rng, s, std::max<std::size_t>(s, static_cast<std::size_t>(max_den)));
  std::vector<std::size_t> cuts;
  for (std::size_t c = 1; c < q; ++c) cuts.push_back(c);
  cuts = random_subset(rng, cuts, s - 1);
  cuts.push_back(q);
  std::map<PointId, T> masses;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < s; ++i) {
    masses[support[i]] = ScalarTraits<T>::from_rational(Rational(long(cuts[i] - prev), long(q)));
    prev = cuts[i];
  }
  return Measure<T>(space, std::move(masses));
}

}  // namespace vietoris
