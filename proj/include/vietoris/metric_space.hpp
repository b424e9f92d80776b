#pragma once

#include "vietoris/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vietoris {

/// Sorted, duplicate-free set of point ids. Points are only meaningful
/// relative to the MetricSpace the caller pairs the set with.
class PointSet {
public:
  PointSet() = default;
  PointSet(std::initializer_list<PointId> ids) : members_(ids) { normalize(); }
  explicit PointSet(std::vector<PointId> ids) : members_(std::move(ids)) { normalize(); }

  static PointSet range(std::size_t n) {
    std::vector<PointId> ids(n);
    for (std::size_t i = 0; i < n; ++i) ids[i] = i;
    return PointSet(std::move(ids));
  }

  bool contains(PointId x) const { return std::binary_search(members_.begin(), members_.end(), x); }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<PointId>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  PointId operator[](std::size_t i) const { return members_[i]; }

  bool is_subset_of(const PointSet& other) const {
    return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend auto operator<=>(const PointSet&, const PointSet&) = default;

private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<PointId> members_;
};

inline PointSet set_union(const PointSet& a, const PointSet& b) {
  std::vector<PointId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

inline PointSet set_intersection(const PointSet& a, const PointSet& b) {
  std::vector<PointId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

inline PointSet set_difference(const PointSet& a, const PointSet& b) {
  std::vector<PointId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(std::move(out));
}

/// Complement inside {0, ..., n-1}.
inline PointSet complement(const PointSet& a, std::size_t n) { return set_difference(PointSet::range(n), a); }

/// A finite metric space: labelled points and a validated distance matrix.
/// Immutable after construction; share it through `std::shared_ptr<const>`.
template <Scalar T>
class MetricSpace {
public:
  using Scalar = T;
  using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
  using Traits = ScalarTraits<T>;

  /// Validates the metric axioms exhaustively (including every triangle) and
  /// throws InputError naming the first violation.
  MetricSpace(std::vector<std::string> labels, Matrix dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {
    validate();
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
  }

  /// Points labelled "0", "1", ...
  explicit MetricSpace(Matrix dist) : labels_(default_labels(dist.rows())), dist_(std::move(dist)) {
    validate();
    for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
  }

  std::size_t size() const { return labels_.size(); }
  const T& distance(PointId i, PointId j) const { return dist_(Eigen::Index(i), Eigen::Index(j)); }
  const Matrix& distances() const { return dist_; }
  const std::string& label(PointId i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  PointSet all_points() const { return PointSet::range(size()); }

  std::optional<PointId> index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Smallest distance between distinct points; nullopt for a single point.
  std::optional<T> min_positive_distance() const {
    std::optional<T> best;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (!best || distance(i, j) < *best) best = distance(i, j);
    return best;
  }

private:
  static std::vector<std::string> default_labels(Eigen::Index n) {
    std::vector<std::string> out;
    for (Eigen::Index i = 0; i < n; ++i) out.push_back(std::to_string(i));
    return out;
  }

  void validate() const {
    const auto n = static_cast<std::size_t>(dist_.rows());
    if (dist_.rows() != dist_.cols()) throw InputError("distance matrix is not square");
    if (labels_.size() != n) throw InputError("number of labels does not match distance matrix");
    if (n == 0) throw InputError("metric space has no points");
    std::unordered_map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i)
      if (!seen.emplace(labels_[i], i).second) throw InputError("duplicate point label '" + labels_[i] + "'");

    auto at = [&](std::size_t i, std::size_t j) -> const T& { return dist_(Eigen::Index(i), Eigen::Index(j)); };
    for (std::size_t i = 0; i < n; ++i) {
      if (!Traits::is_zero(at(i, i))) throw InputError("dist(" + labels_[i] + "," + labels_[i] + ") is not 0");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (!Traits::equal(at(i, j), at(j, i)))
          throw InputError("distance matrix not symmetric at (" + labels_[i] + "," + labels_[j] + ")");
        if (!Traits::is_positive(at(i, j)))
          throw InputError("points " + labels_[i] + " and " + labels_[j] + " are at nonpositive distance");
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          if (Traits::less(at(i, k) + at(k, j), at(i, j)))
            throw InputError("triangle inequality violated: d(" + labels_[i] + "," + labels_[j] + ") > d(" +
                             labels_[i] + "," + labels_[k] + ") + d(" + labels_[k] + "," + labels_[j] + ")");
  }

  std::vector<std::string> labels_;
  Matrix dist_;
  std::unordered_map<std::string, PointId> index_;
};

template <Scalar T>
using SpacePtr = std::shared_ptr<const MetricSpace<T>>;

template <Scalar T>
SpacePtr<T> make_space(std::vector<std::string> labels, typename MetricSpace<T>::Matrix dist) {
  return std::make_shared<const MetricSpace<T>>(std::move(labels), std::move(dist));
}

/// Largest pairwise distance; 0 for a singleton, nullopt for the empty set.
template <Scalar T>
std::optional<T> diameter(const MetricSpace<T>& space, const PointSet& s) {
  if (s.empty()) return std::nullopt;
  T best = T(0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (best < space.distance(s[i], s[j])) best = space.distance(s[i], s[j]);
  return best;
}

/// inf over cross pairs; nullopt unless both sets are nonempty.
template <Scalar T>
std::optional<T> set_distance(const MetricSpace<T>& space, const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  std::optional<T> best;
  for (PointId x : a)
    for (PointId y : b)
      if (!best || space.distance(x, y) < *best) best = space.distance(x, y);
  return best;
}

template <Scalar T>
std::optional<T> point_set_distance(const MetricSpace<T>& space, PointId x, const PointSet& b) {
  return set_distance(space, PointSet{x}, b);
}

/// Open ball {x' : d(x, x') < r}; empty when r = 0.
template <Scalar T>
PointSet ball(const MetricSpace<T>& space, PointId x, const T& r) {
  std::vector<PointId> out;
  for (PointId y = 0; y < space.size(); ++y)
    if (ScalarTraits<T>::less(space.distance(x, y), r)) out.push_back(y);
  return PointSet(std::move(out));
}

/// Union of open balls of radius r around each member of `centers`.
template <Scalar T>
PointSet neighborhood(const MetricSpace<T>& space, const PointSet& centers, const T& r) {
  PointSet out;
  for (PointId c : centers) out = set_union(out, ball(space, c, r));
  return out;
}

}  // namespace vietoris
