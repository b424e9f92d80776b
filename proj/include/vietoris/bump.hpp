#pragma once

#include "vietoris/metric_space.hpp"

#include <vector>

namespace vietoris {

/// A function X -> [0, 1] stored pointwise, together with the Lipschitz
/// constant its constructor claims for it.
template <Scalar T>
struct BumpFunction {
  std::vector<T> values;
  T lipschitz_bound = T(0);

  const T& operator()(PointId x) const { return values.at(x); }
  std::size_t size() const { return values.size(); }

  /// {x : f(x) > 0}
  PointSet support() const {
    std::vector<PointId> out;
    for (PointId x = 0; x < values.size(); ++x)
      if (ScalarTraits<T>::is_positive(values[x])) out.push_back(x);
    return PointSet(std::move(out));
  }
};

template <Scalar T>
BumpFunction<T> constant_bump(std::size_t n, const T& value) {
  return {std::vector<T>(n, value), T(0)};
}

/// phi(x) = min(d(x, U^C), 1), or the constant 1 when U is everything.
/// 1-Lipschitz and vanishing exactly off U.
template <Scalar T>
BumpFunction<T> bump_simple(const MetricSpace<T>& space, const PointSet& u) {
  const PointSet outside = complement(u, space.size());
  BumpFunction<T> f{std::vector<T>(space.size(), T(1)), T(1)};
  if (outside.empty()) return f;
  for (PointId x = 0; x < space.size(); ++x) f.values[x] = min_of(*point_set_distance(space, x, outside), T(1));
  return f;
}

/// phi(x) = d(x, Y2^C) / (d(x, Y1) + d(x, Y2^C)): equal to 1 on Y1, 0 off Y2
/// and (1/eps)-Lipschitz with eps = d(Y1, Y2^C). When Y2 is the whole space the
/// complement is empty and phi is the constant 1.
template <Scalar T>
BumpFunction<T> bump_pair(const MetricSpace<T>& space, const PointSet& y1, const PointSet& y2) {
  if (!y1.is_subset_of(y2)) throw PreconditionError("bump_pair: Y1 is not contained in Y2");
  if (y1.empty()) throw PreconditionError("bump_pair: Y1 is empty");
  const PointSet outside = complement(y2, space.size());
  if (outside.empty()) return constant_bump(space.size(), T(1));

  const T eps = *set_distance(space, y1, outside);
  BumpFunction<T> f{std::vector<T>(space.size(), T(0)), T(1) / eps};
  for (PointId x = 0; x < space.size(); ++x) {
    const T to_outside = *point_set_distance(space, x, outside);
    const T to_inner = *point_set_distance(space, x, y1);
    f.values[x] = to_outside / (to_inner + to_outside);
  }
  return f;
}

/// max over distinct pairs of |f(x) - f(y)| / d(x, y); 0 on a single point.
template <Scalar T>
T lipschitz_estimate(const MetricSpace<T>& space, const BumpFunction<T>& f) {
  T best = T(0);
  for (PointId i = 0; i < space.size(); ++i)
    for (PointId j = i + 1; j < space.size(); ++j) {
      T diff = f(i) - f(j);
      if (diff < T(0)) diff = -diff;
      const T ratio = diff / space.distance(i, j);
      if (best < ratio) best = ratio;
    }
  return best;
}

}  // namespace vietoris
