#pragma once

#include "vietoris/detail/transportation_simplex.hpp"
#include "vietoris/inequality.hpp"
#include "vietoris/metric_space.hpp"

#include <map>
#include <utility>
#include <vector>

namespace vietoris {

/// Finitely supported probability measure on a MetricSpace. Only points of
/// positive mass are stored.
template <Scalar T>
class Measure {
public:
  using Traits = ScalarTraits<T>;

  Measure(SpacePtr<T> space, std::map<PointId, T> masses) : space_(std::move(space)) {
    if (!space_) throw PreconditionError("measure without a space");
    T total = T(0);
    for (auto& [x, m] : masses) {
      if (x >= space_->size()) throw InputError("measure puts mass on an unknown point");
      if (Traits::less(m, T(0))) throw InputError("negative mass at point " + space_->label(x));
      if (Traits::is_zero(m)) continue;
      total += m;
      masses_.emplace(x, std::move(m));
    }
    if (!Traits::equal(total, T(1))) throw InputError("measure masses sum to " + to_string(total) + ", not 1");
  }

  static Measure dirac(SpacePtr<T> space, PointId x) { return Measure(std::move(space), {{x, T(1)}}); }

  const MetricSpace<T>& space() const { return *space_; }
  const SpacePtr<T>& space_ptr() const { return space_; }
  const std::map<PointId, T>& masses() const { return masses_; }

  T mass(PointId x) const {
    auto it = masses_.find(x);
    return it == masses_.end() ? T(0) : it->second;
  }

  /// mu(S)
  T mass(const PointSet& s) const {
    T total = T(0);
    for (const auto& [x, m] : masses_)
      if (s.contains(x)) total += m;
    return total;
  }

  PointSet support() const {
    std::vector<PointId> ids;
    for (const auto& [x, m] : masses_) ids.push_back(x);
    return PointSet(std::move(ids));
  }

  friend bool operator==(const Measure& a, const Measure& b) {
    if (a.space_ != b.space_ || a.masses_.size() != b.masses_.size()) return false;
    for (auto ia = a.masses_.begin(), ib = b.masses_.begin(); ia != a.masses_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !Traits::equal(ia->second, ib->second)) return false;
    return true;
  }

private:
  SpacePtr<T> space_;
  std::map<PointId, T> masses_;
};

template <Scalar T>
void require_same_space(const Measure<T>& a, const Measure<T>& b, const char* op) {
  if (a.space_ptr() != b.space_ptr()) throw PreconditionError(std::string(op) + ": measures live on different spaces");
}

/// Nonnegative transport plan with marginals bounded by (not necessarily
/// equal to) the source and target measures.
template <Scalar T>
class PartialCoupling {
public:
  using Traits = ScalarTraits<T>;
  using Entries = std::map<std::pair<PointId, PointId>, T>;

  PartialCoupling(Measure<T> src, Measure<T> dst, Entries entries)
      : src_(std::move(src)), dst_(std::move(dst)) {
    require_same_space(src_, dst_, "coupling");
    for (auto& [cell, value] : entries) {
      if (Traits::less(value, T(0))) throw InputError("coupling entry is negative");
      if (Traits::is_zero(value)) continue;
      if (Traits::is_zero(src_.mass(cell.first)) || Traits::is_zero(dst_.mass(cell.second)))
        throw InputError("coupling entry outside the supports");
      entries_.emplace(cell, std::move(value));
    }
    for (const auto& [x, a] : src_.masses())
      if (Traits::less(a, row_sum(x))) throw InputError("coupling row sum exceeds source mass");
    for (const auto& [y, b] : dst_.masses())
      if (Traits::less(b, column_sum(y))) throw InputError("coupling column sum exceeds target mass");
  }

  const Measure<T>& source() const { return src_; }
  const Measure<T>& target() const { return dst_; }
  const Entries& entries() const { return entries_; }

  T entry(PointId x, PointId y) const {
    auto it = entries_.find({x, y});
    return it == entries_.end() ? T(0) : it->second;
  }

  T row_sum(PointId x) const {
    T s = T(0);
    for (auto it = entries_.lower_bound({x, 0}); it != entries_.end() && it->first.first == x; ++it) s += it->second;
    return s;
  }

  T column_sum(PointId y) const {
    T s = T(0);
    for (const auto& [cell, v] : entries_)
      if (cell.second == y) s += v;
    return s;
  }

  /// c = sum of all entries.
  T total() const {
    T s = T(0);
    for (const auto& [cell, v] : entries_) s += v;
    return s;
  }

  /// Both marginals match exactly.
  bool has_exact_marginals() const {
    for (const auto& [x, a] : src_.masses())
      if (!Traits::equal(row_sum(x), a)) return false;
    for (const auto& [y, b] : dst_.masses())
      if (!Traits::equal(column_sum(y), b)) return false;
    return true;
  }

private:
  Measure<T> src_, dst_;
  Entries entries_;
};

/// A partial coupling whose marginals are exactly the two measures.
template <Scalar T>
class Coupling : public PartialCoupling<T> {
public:
  Coupling(Measure<T> src, Measure<T> dst, typename PartialCoupling<T>::Entries entries)
      : PartialCoupling<T>(std::move(src), std::move(dst), std::move(entries)) {
    if (!this->has_exact_marginals()) throw InputError("coupling marginals do not match the measures");
  }

  /// Independent coupling mu (x) nu.
  static Coupling product(const Measure<T>& src, const Measure<T>& dst) {
    typename PartialCoupling<T>::Entries e;
    for (const auto& [x, a] : src.masses())
      for (const auto& [y, b] : dst.masses()) e.emplace(std::pair{x, y}, a * b);
    return Coupling(src, dst, std::move(e));
  }
};

template <Scalar T>
struct Transport {
  T cost{};
  Coupling<T> coupling;
};

/// sum_{x,y} c(x,y) d(x,y)
template <Scalar T>
T coupling_cost(const PartialCoupling<T>& c) {
  const auto& space = c.source().space();
  T total = T(0);
  for (const auto& [cell, v] : c.entries()) total += v * space.distance(cell.first, cell.second);
  return total;
}

/// Exact 1-Wasserstein distance with an optimal coupling (transportation
/// simplex over the supports).
template <Scalar T>
Transport<T> wasserstein1(const Measure<T>& mu, const Measure<T>& nu) {
  require_same_space(mu, nu, "wasserstein1");
  std::vector<PointId> xs, ys;
  std::vector<T> supply, demand;
  for (const auto& [x, a] : mu.masses()) xs.push_back(x), supply.push_back(a);
  for (const auto& [y, b] : nu.masses()) ys.push_back(y), demand.push_back(b);

  detail::DenseMatrix<T> cost(Eigen::Index(xs.size()), Eigen::Index(ys.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) cost(Eigen::Index(i), Eigen::Index(j)) = mu.space().distance(xs[i], ys[j]);

  auto solution = detail::TransportationSimplex<T>(std::move(supply), std::move(demand), std::move(cost)).solve();
  typename PartialCoupling<T>::Entries entries;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < ys.size(); ++j) {
      const T& f = solution.flow(Eigen::Index(i), Eigen::Index(j));
      if (!ScalarTraits<T>::is_zero(f)) entries.emplace(std::pair{xs[i], ys[j]}, f);
    }
  return {solution.cost, Coupling<T>(mu, nu, std::move(entries))};
}

template <Scalar T>
T wasserstein_distance(const Measure<T>& mu, const Measure<T>& nu) {
  return wasserstein1(mu, nu).cost;
}

/// Completes a partial coupling with the product of the unmatched residual
/// marginals, scaled by 1 / (1 - c). Entrywise at least the input.
template <Scalar T>
Coupling<T> complete_partial(const PartialCoupling<T>& pc) {
  const T c = pc.total();
  if (ScalarTraits<T>::equal(c, T(1))) return Coupling<T>(pc.source(), pc.target(), pc.entries());
  auto entries = pc.entries();
  std::map<PointId, T> col_sums;
  for (const auto& [y, b] : pc.target().masses()) col_sums.emplace(y, pc.column_sum(y));
  for (const auto& [x, a] : pc.source().masses()) {
    const T row_residual = a - pc.row_sum(x);
    if (ScalarTraits<T>::is_zero(row_residual)) continue;
    for (const auto& [y, b] : pc.target().masses()) {
      const T extra = row_residual * (b - col_sums.at(y)) / (T(1) - c);
      if (ScalarTraits<T>::is_zero(extra)) continue;
      entries[{x, y}] += extra;
    }
  }
  return Coupling<T>(pc.source(), pc.target(), std::move(entries));
}

/// cost(pc) + (1 - c) diam(supp mu u supp nu), an upper bound on d_W(mu, nu).
template <Scalar T>
T partial_bound(const PartialCoupling<T>& pc) {
  const PointSet joint = set_union(pc.source().support(), pc.target().support());
  return coupling_cost(pc) + (T(1) - pc.total()) * *diameter(pc.source().space(), joint);
}

/// (1 - t) mu + t nu
template <Scalar T>
Measure<T> linear_interpolate(const Measure<T>& mu, const Measure<T>& nu, const T& t) {
  require_same_space(mu, nu, "linear_interpolate");
  if (t < T(0) || t > T(1)) throw PreconditionError("interpolation parameter outside [0, 1]");
  std::map<PointId, T> masses;
  for (const auto& [x, a] : mu.masses()) masses[x] += (T(1) - t) * a;
  for (const auto& [y, b] : nu.masses()) masses[y] += t * b;
  return Measure<T>(mu.space_ptr(), std::move(masses));
}

/// d_W((1-t) mu + t nu, target) <= (1-t) d_W(mu, target) + t d_W(nu, target).
template <Scalar T>
Inequality<T> convexity_bound_check(const Measure<T>& mu, const Measure<T>& nu, const Measure<T>& target, const T& t) {
  const T lhs = wasserstein_distance(linear_interpolate(mu, nu, t), target);
  const T rhs = (T(1) - t) * wasserstein_distance(mu, target) + t * wasserstein_distance(nu, target);
  return {"convexity", lhs, rhs, false};
}

}  // namespace vietoris
