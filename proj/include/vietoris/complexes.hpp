#pragma once

#include "vietoris/metric_space.hpp"
#include "vietoris/simplicial_complex.hpp"

#include <string>
#include <vector>

namespace vietoris {

/// Indexed family of nonempty point sets covering the space, each of
/// diameter strictly below `bound`. Repeated sets under different indices
/// are allowed.
template <Scalar T>
class Cover {
public:
  Cover(SpacePtr<T> space, std::vector<PointSet> sets, T bound, std::vector<std::string> names = {})
      : space_(std::move(space)), sets_(std::move(sets)), names_(std::move(names)), bound_(std::move(bound)) {
    if (names_.empty())
      for (std::size_t i = 0; i < sets_.size(); ++i) names_.push_back("U" + std::to_string(i));
    validate();
  }

  const MetricSpace<T>& space() const { return *space_; }
  const SpacePtr<T>& space_ptr() const { return space_; }
  const std::vector<PointSet>& sets() const { return sets_; }
  const PointSet& set(std::size_t i) const { return sets_.at(i); }
  std::size_t size() const { return sets_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const T& bound() const { return bound_; }

  /// Common intersection of the indexed sets.
  PointSet intersection(const std::vector<std::size_t>& indices) const {
    if (indices.empty()) return space_->all_points();
    PointSet out = sets_.at(indices.front());
    for (std::size_t i = 1; i < indices.size() && !out.empty(); ++i) out = set_intersection(out, sets_.at(indices[i]));
    return out;
  }

private:
  void validate() const {
    if (!space_) throw InputError("cover has no metric space");
    if (names_.size() != sets_.size()) throw InputError("cover names do not match its sets");
    if (sets_.empty()) throw InputError("cover has no sets");
    PointSet covered;
    for (std::size_t i = 0; i < sets_.size(); ++i) {
      const PointSet& s = sets_[i];
      if (s.empty()) throw InputError("cover set " + names_[i] + " is empty");
      if (s.members().back() >= space_->size()) throw InputError("cover set " + names_[i] + " has an unknown point");
      if (!ScalarTraits<T>::less(*diameter(*space_, s), bound_))
        throw InputError("cover set " + names_[i] + " has diameter " + to_string(*diameter(*space_, s)) +
                         " which is not below the bound " + to_string(bound_));
      covered = set_union(covered, s);
    }
    if (covered.size() != space_->size()) throw InputError("cover sets do not cover every point");
  }

  SpacePtr<T> space_;
  std::vector<PointSet> sets_;
  std::vector<std::string> names_;
  T bound_;
};

/// V(U): simplices are the point sets lying inside some cover set.
template <Scalar T>
SimplicialComplex vietoris_complex(const Cover<T>& cover, int maxdim) {
  // Each cover set is a simplex; closure under faces (capped) does the rest.
  std::vector<Simplex> tops;
  for (const auto& s : cover.sets()) tops.push_back(s.members());
  return SimplicialComplex::from_simplices(cover.space().size(), maxdim, tops, cover.space().labels());
}

/// N(U): simplices are index sets whose cover sets share a point.
template <Scalar T>
SimplicialComplex nerve_complex(const Cover<T>& cover, int maxdim) {
  std::vector<Simplex> found;
  Simplex current;
  const std::size_t cap = static_cast<std::size_t>(maxdim) + 1;
  auto extend = [&](auto&& self, std::size_t next, const PointSet& common) -> void {
    for (std::size_t i = next; i < cover.size(); ++i) {
      PointSet meet = current.empty() ? cover.set(i) : set_intersection(common, cover.set(i));
      if (meet.empty()) continue;
      current.push_back(i);
      found.push_back(current);
      if (current.size() < cap) self(self, i + 1, meet);
      current.pop_back();
    }
  };
  if (maxdim < 0) throw PreconditionError("maxdim must be nonnegative");
  extend(extend, 0, PointSet{});
  return SimplicialComplex::from_simplices(cover.size(), maxdim, found, cover.names());
}

/// VR(X; r): flag complex of the graph {d < r}. Empty (no vertices) at r = 0.
template <Scalar T>
SimplicialComplex vr_complex(const MetricSpace<T>& space, const T& r, int maxdim) {
  if (maxdim < 0) throw PreconditionError("maxdim must be nonnegative");
  if (!ScalarTraits<T>::is_positive(r)) return SimplicialComplex::vertices_only(0, maxdim);
  const std::size_t n = space.size();
  const std::size_t cap = static_cast<std::size_t>(maxdim) + 1;
  std::vector<Simplex> found;
  Simplex current;
  auto extend = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const std::size_t v = candidates[c];
      current.push_back(v);
      found.push_back(current);
      if (current.size() < cap) {
        std::vector<std::size_t> next;
        for (std::size_t c2 = c + 1; c2 < candidates.size(); ++c2)
          if (ScalarTraits<T>::less(space.distance(v, candidates[c2]), r)) next.push_back(candidates[c2]);
        self(self, next);
      }
      current.pop_back();
    }
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  extend(extend, all);
  return SimplicialComplex::from_simplices(n, maxdim, found, space.labels());
}

/// Intrinsic Čech complex: sigma is a simplex iff some point z of X lies in
/// every open ball B(x, r), x in sigma.
template <Scalar T>
SimplicialComplex cech_complex(const MetricSpace<T>& space, const T& r, int maxdim) {
  if (maxdim < 0) throw PreconditionError("maxdim must be nonnegative");
  if (!ScalarTraits<T>::is_positive(r)) return SimplicialComplex::vertices_only(0, maxdim);
  const std::size_t n = space.size();
  const std::size_t cap = static_cast<std::size_t>(maxdim) + 1;
  std::vector<Simplex> found;
  Simplex current;
  // `witnesses` holds every z within distance < r of all of `current`.
  auto extend = [&](auto&& self, std::size_t next, const std::vector<PointId>& witnesses) -> void {
    for (std::size_t v = next; v < n; ++v) {
      std::vector<PointId> kept;
      for (PointId z : witnesses)
        if (ScalarTraits<T>::less(space.distance(z, v), r)) kept.push_back(z);
      if (kept.empty()) continue;
      current.push_back(v);
      found.push_back(current);
      if (current.size() < cap) self(self, v + 1, kept);
      current.pop_back();
    }
  };
  std::vector<PointId> everyone(n);
  for (std::size_t i = 0; i < n; ++i) everyone[i] = i;
  extend(extend, 0, everyone);
  return SimplicialComplex::from_simplices(n, maxdim, found, space.labels());
}

/// Maximal cliques of the graph on {0..n-1} given by `adjacent(i, j)`
/// (Bron–Kerbosch with pivoting). Each clique is returned sorted.
template <typename Adjacent>
std::vector<Simplex> maximal_cliques(std::size_t n, Adjacent&& adjacent) {
  std::vector<Simplex> out;
  Simplex r;
  auto recurse = [&](auto&& self, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
    if (p.empty() && x.empty()) {
      Simplex clique = r;
      std::sort(clique.begin(), clique.end());
      out.push_back(std::move(clique));
      return;
    }
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto* pool : {&p, &x})
      for (std::size_t u : *pool) {
        std::size_t deg = 0;
        for (std::size_t v : p)
          if (v != u && adjacent(u, v)) ++deg;
        if (deg > best) best = deg, pivot = u;
      }
    std::vector<std::size_t> branch;
    for (std::size_t v : p)
      if (v == pivot || !adjacent(pivot, v)) branch.push_back(v);
    for (std::size_t v : branch) {
      std::vector<std::size_t> p2, x2;
      for (std::size_t w : p)
        if (w != v && adjacent(v, w)) p2.push_back(w);
      for (std::size_t w : x)
        if (w != v && adjacent(v, w)) x2.push_back(w);
      r.push_back(v);
      self(self, std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<std::size_t> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i;
  recurse(recurse, all, {});
  std::sort(out.begin(), out.end());
  return out;
}

/// Cover {B(x, r)}_x indexed by the points themselves; bound 2r.
template <Scalar T>
Cover<T> ball_cover(const SpacePtr<T>& space, const T& r) {
  if (!ScalarTraits<T>::is_positive(r)) throw PreconditionError("ball cover needs r > 0");
  std::vector<PointSet> sets;
  for (PointId x = 0; x < space->size(); ++x) sets.push_back(ball(*space, x, r));
  return Cover<T>(space, std::move(sets), T(2) * r, space->labels());
}

/// The maximal subsets of diameter < r (maximal cliques of the < r graph);
/// they generate the same Vietoris complex as all sets of diameter < r.
template <Scalar T>
Cover<T> small_diameter_cover(const SpacePtr<T>& space, const T& r) {
  if (!ScalarTraits<T>::is_positive(r)) throw PreconditionError("diameter cover needs r > 0");
  auto cliques = maximal_cliques(space->size(), [&](std::size_t i, std::size_t j) {
    return ScalarTraits<T>::less(space->distance(i, j), r);
  });
  std::vector<PointSet> sets;
  for (auto& c : cliques) sets.emplace_back(std::move(c));
  return Cover<T>(space, std::move(sets), r);
}

/// Čech(X; r) == V({B(x, r)}) simplex for simplex.
template <Scalar T>
bool cech_equals_vietoris_of_balls(const SpacePtr<T>& space, const T& r, int maxdim) {
  return cech_complex(*space, r, maxdim) == vietoris_complex(ball_cover(space, r), maxdim);
}

/// VR(X; r) == V(maximal sets of diameter < r) simplex for simplex.
template <Scalar T>
bool vr_as_vietoris_check(const SpacePtr<T>& space, const T& r, int maxdim) {
  return vr_complex(*space, r, maxdim) == vietoris_complex(small_diameter_cover(space, r), maxdim);
}

}  // namespace vietoris
