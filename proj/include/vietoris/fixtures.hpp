#pragma once

#include "vietoris/complexes.hpp"

#include <string>
#include <vector>

namespace vietoris::fixtures {

/// n points on a line at unit spacing, labelled "0".."n-1".
inline SpacePtr<Rational> line_space(std::size_t n) {
  MetricSpace<Rational>::Matrix d(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d(Eigen::Index(i), Eigen::Index(j)) = Rational(i > j ? i - j : j - i);
  return std::make_shared<const MetricSpace<Rational>>(std::move(d));
}

/// n points at pairwise distance `d`.
inline SpacePtr<Rational> equilateral_space(std::size_t n, const Rational& d, std::vector<std::string> labels = {}) {
  MetricSpace<Rational>::Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(Eigen::Index(i), Eigen::Index(j)) = i == j ? Rational(0) : d;
  if (labels.empty()) return std::make_shared<const MetricSpace<Rational>>(std::move(m));
  return make_space<Rational>(std::move(labels), std::move(m));
}

/// Geodesic metric on n evenly spaced circle points, in units of `step`
/// (one step = arc between neighbours).
inline SpacePtr<Rational> cycle_space(std::size_t n, const Rational& step = Rational(1),
                                      std::vector<std::string> labels = {}) {
  MetricSpace<Rational>::Matrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = i > j ? i - j : j - i;
      m(Eigen::Index(i), Eigen::Index(j)) = Rational(static_cast<long>(std::min(k, n - k))) * step;
    }
  if (labels.empty()) return std::make_shared<const MetricSpace<Rational>>(std::move(m));
  return make_space<Rational>(std::move(labels), std::move(m));
}

/// {a,b,c} pairwise 1, covered by its three edges: both complexes are a
/// hollow triangle.
inline Cover<Rational> triangle_cover() {
  auto space = equilateral_space(3, Rational(1), {"a", "b", "c"});
  return Cover<Rational>(space, {PointSet{0, 1}, PointSet{1, 2}, PointSet{2, 0}}, Rational(2), {"U1", "U2", "U3"});
}

/// Six points a..f on a hexagon covered by four sets
/// {a,b,c}, {c,d}, {d,e,f}, {f,a}: the Vietoris complex is two triangles
/// joined by two edges into a loop, the nerve a 4-cycle.
inline Cover<Rational> six_point_cover() {
  auto space = cycle_space(6, Rational(1), {"a", "b", "c", "d", "e", "f"});
  return Cover<Rational>(space, {PointSet{0, 1, 2}, PointSet{2, 3}, PointSet{3, 4, 5}, PointSet{5, 0}}, Rational(4),
                         {"U1", "U2", "U3", "U4"});
}

/// Eight points on a cycle at spacing 1/2, covered by the eight arcs of
/// three consecutive points (diameter 1, bound 3/2).
inline Cover<Rational> eight_point_cover() {
  std::vector<std::string> labels;
  for (int i = 0; i < 8; ++i) labels.push_back("y" + std::to_string(i));
  auto space = cycle_space(8, Rational(1, 2), labels);
  std::vector<PointSet> sets;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < 8; ++i) {
    sets.push_back(PointSet{i, (i + 1) % 8, (i + 2) % 8});
    names.push_back("A" + std::to_string(i));
  }
  return Cover<Rational>(space, std::move(sets), Rational(3, 2), std::move(names));
}

}  // namespace vietoris::fixtures
