#pragma once

#include "vietoris/metric_space.hpp"
#include "vietoris/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace vietoris {

/// Sparse Z/2 matrix stored by columns; each column is a sorted list of row
/// indices. Rows and columns index the same ordered list of simplices.
class BoundaryMatrix {
public:
  using Column = std::vector<std::size_t>;

  BoundaryMatrix() = default;
  BoundaryMatrix(std::vector<Column> columns, std::vector<int> dims);

  /// Full boundary matrix of `ordered` (faces must precede cofaces).
  static BoundaryMatrix from_simplices(const std::vector<Simplex>& ordered);

  std::size_t size() const { return columns_.size(); }
  const Column& column(std::size_t j) const { return columns_[j]; }
  const std::vector<Column>& columns() const { return columns_; }
  int dim(std::size_t j) const { return dims_[j]; }

  /// Largest row index of column j, or nullopt when the column is zero.
  std::optional<std::size_t> low(std::size_t j) const {
    if (columns_[j].empty()) return std::nullopt;
    return columns_[j].back();
  }

  std::size_t nonzero_columns() const;

  /// Every nonzero column has a distinct low.
  bool is_reduced() const;

  friend bool operator==(const BoundaryMatrix&, const BoundaryMatrix&) = default;

private:
  friend BoundaryMatrix reduce(BoundaryMatrix b);

  std::vector<Column> columns_;
  std::vector<int> dims_;
};

/// Standard left-to-right column reduction over Z/2.
BoundaryMatrix reduce(BoundaryMatrix b);

/// (birth column, death column) for every low in a reduced matrix.
std::vector<std::pair<std::size_t, std::size_t>> persistence_pairs(const BoundaryMatrix& reduced);

/// Rank over Z/2 of the boundary map from `dim`-simplices to (`dim`-1)-simplices.
std::size_t boundary_rank(const SimplicialComplex& k, int dim);

struct BettiVector {
  std::vector<std::size_t> betti;

  std::size_t operator[](std::size_t k) const { return betti.at(k); }
  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// beta_0 .. beta_maxdim over Z/2. Throws PreconditionError when the complex
/// was built with too small a dimension cap to get beta_maxdim right.
BettiVector betti_numbers(const SimplicialComplex& k, int maxdim);

bool homology_equal(const SimplicialComplex& a, const SimplicialComplex& b, int maxdim);

/// Alternating simplex count.
long euler_characteristic(const SimplicialComplex& k);

/// One persistence interval. A missing death means the class never dies.
template <Scalar T>
struct Bar {
  int dim = 0;
  T birth{};
  std::optional<T> death;

  bool infinite() const { return !death.has_value(); }
  bool zero_length() const { return death && ScalarTraits<T>::equal(*death, birth); }
  friend bool operator==(const Bar&, const Bar&) = default;
};

/// Barcode of a filtration. Bars are half-open [birth, death) in the closed
/// `diam <= r` convention; the strict `diam < r` convention yields the same
/// endpoints with (birth, death] instead. Zero-length bars are kept here and
/// dropped by `bars_of_dim` unless asked for.
template <Scalar T>
struct PersistenceDiagram {
  std::vector<Bar<T>> bars;

  std::vector<Bar<T>> bars_of_dim(int dim, bool include_zero_length = false) const {
    std::vector<Bar<T>> out;
    for (const auto& b : bars)
      if (b.dim == dim && (include_zero_length || !b.zero_length())) out.push_back(b);
    return out;
  }

  /// beta_dim of {sigma : diam(sigma) < r}.
  std::size_t betti_strict(int dim, const T& r) const {
    std::size_t count = 0;
    for (const auto& b : bars)
      if (b.dim == dim && ScalarTraits<T>::less(b.birth, r) && (!b.death || ScalarTraits<T>::less_equal(r, *b.death)))
        ++count;
    return count;
  }

  /// beta_dim of {sigma : diam(sigma) <= r}.
  std::size_t betti_closed(int dim, const T& r) const {
    std::size_t count = 0;
    for (const auto& b : bars)
      if (b.dim == dim && ScalarTraits<T>::less_equal(b.birth, r) && (!b.death || ScalarTraits<T>::less(r, *b.death)))
        ++count;
    return count;
  }
};

/// Filtration of VR(X; -) up to dimension maxdim + 1, ordered by
/// (diameter, dimension, lexicographic vertices). Simplices with diameter
/// above `max_scale` are left out when it is given.
template <Scalar T>
std::vector<std::pair<Simplex, T>> vr_filtration(const MetricSpace<T>& space, int maxdim,
                                                 const std::optional<T>& max_scale = std::nullopt) {
  std::vector<std::pair<Simplex, T>> out;
  const std::size_t cap = static_cast<std::size_t>(maxdim) + 2;
  Simplex current;
  auto extend = [&](auto&& self, std::size_t next, const T& diam) -> void {
    for (std::size_t v = next; v < space.size(); ++v) {
      T d = diam;
      for (std::size_t u : current)
        if (d < space.distance(u, v)) d = space.distance(u, v);
      if (max_scale && ScalarTraits<T>::less(*max_scale, d)) continue;
      current.push_back(v);
      out.emplace_back(current, d);
      if (current.size() < cap) self(self, v + 1, d);
      current.pop_back();
    }
  };
  extend(extend, 0, T(0));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

/// Barcode of a filtration given in filtration order; bars in degrees 0..maxdim.
template <Scalar T>
PersistenceDiagram<T> filtration_persistence(const std::vector<std::pair<Simplex, T>>& filtration, int maxdim) {
  std::vector<Simplex> ordered;
  ordered.reserve(filtration.size());
  for (const auto& [s, v] : filtration) ordered.push_back(s);
  const BoundaryMatrix reduced = reduce(BoundaryMatrix::from_simplices(ordered));

  PersistenceDiagram<T> diagram;
  std::vector<bool> paired(filtration.size(), false);
  for (auto [birth, death] : persistence_pairs(reduced)) {
    paired[birth] = paired[death] = true;
    const int dim = static_cast<int>(ordered[birth].size()) - 1;
    if (dim <= maxdim) diagram.bars.push_back({dim, filtration[birth].second, filtration[death].second});
  }
  for (std::size_t j = 0; j < filtration.size(); ++j) {
    const int dim = static_cast<int>(ordered[j].size()) - 1;
    if (!paired[j] && dim <= maxdim && reduced.column(j).empty())
      diagram.bars.push_back({dim, filtration[j].second, std::nullopt});
  }
  std::sort(diagram.bars.begin(), diagram.bars.end(), [](const Bar<T>& a, const Bar<T>& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    if (a.birth != b.birth) return a.birth < b.birth;
    if (a.death.has_value() != b.death.has_value()) return a.death.has_value();
    return a.death && *a.death < *b.death;
  });
  return diagram;
}

/// Vietoris–Rips persistence of the diameter filtration in degrees 0..maxdim.
template <Scalar T>
PersistenceDiagram<T> vr_persistence(const MetricSpace<T>& space, int maxdim,
                                     const std::optional<T>& max_scale = std::nullopt) {
  if (maxdim < 0) throw PreconditionError("maxdim must be nonnegative");
  return filtration_persistence(vr_filtration(space, maxdim, max_scale), maxdim);
}

}  // namespace vietoris
