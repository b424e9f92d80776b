#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace vietoris {

/// Sorted list of vertex ids.
using Simplex = std::vector<std::size_t>;

/// Abstract simplicial complex on vertices {0, ..., n-1}, closed under faces.
///
/// `maxdim` is the dimension cap the complex was built with: simplices of
/// dimension above it were never generated, so homology in degree `maxdim`
/// and higher may be wrong unless the cap cannot have truncated anything
/// (see `is_complete_through`).
class SimplicialComplex {
public:
  SimplicialComplex() = default;

  /// Inserts every given simplex together with all of its faces. Simplices
  /// larger than the cap are truncated to their (maxdim)-faces.
  static SimplicialComplex from_simplices(std::size_t num_vertices, int maxdim,
                                          const std::vector<Simplex>& simplices,
                                          std::vector<std::string> labels = {});

  /// Complex with the given vertices as 0-simplices and nothing else yet;
  /// `from_simplices` with an empty list.
  static SimplicialComplex vertices_only(std::size_t num_vertices, int maxdim,
                                         std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return num_vertices_; }
  int maxdim() const { return maxdim_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::set<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }

  /// Highest dimension of a stored simplex; -1 for the empty complex.
  int dimension() const;
  std::vector<Simplex> simplices_of_dim(int dim) const;
  std::size_t count_of_dim(int dim) const;

  /// Simplices that are not a proper face of another stored simplex.
  std::vector<Simplex> maximal_simplices() const;

  /// Simplices with at most `dim + 1` vertices.
  SimplicialComplex skeleton(int dim) const;

  /// True when every simplex of dimension <= `dim` that the full complex
  /// would contain is present, i.e. the construction cap did not cut below it.
  bool is_complete_through(int dim) const {
    return maxdim_ >= dim || static_cast<std::size_t>(maxdim_) + 1 >= num_vertices_;
  }

  /// Checks the face-closure and vertex invariants (used by tests).
  bool is_valid() const;

  /// Same vertex count and same simplex set; labels and caps are ignored.
  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.num_vertices_ == b.num_vertices_ && a.simplices_ == b.simplices_;
  }

private:
  void insert_closed(const Simplex& s);

  std::size_t num_vertices_ = 0;
  int maxdim_ = 0;
  std::vector<std::string> labels_;
  std::set<Simplex> simplices_;
};

/// Calls `fn(subset)` for every size-`k` subset of `items` in lexicographic order.
template <typename Fn>
void for_each_combination(const std::vector<std::size_t>& items, std::size_t k, Fn&& fn) {
  if (k > items.size()) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  Simplex subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    fn(subset);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace vietoris
