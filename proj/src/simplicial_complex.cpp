#include "vietoris/simplicial_complex.hpp"

#include "vietoris/scalar.hpp"

#include <algorithm>

namespace vietoris {

SimplicialComplex SimplicialComplex::from_simplices(std::size_t num_vertices, int maxdim,
                                                    const std::vector<Simplex>& simplices,
                                                    std::vector<std::string> labels) {
  if (maxdim < 0) throw PreconditionError("maxdim must be nonnegative");
  if (!labels.empty() && labels.size() != num_vertices)
    throw PreconditionError("label count does not match vertex count");
  SimplicialComplex k;
  k.num_vertices_ = num_vertices;
  k.maxdim_ = maxdim;
  k.labels_ = std::move(labels);
  for (std::size_t v = 0; v < num_vertices; ++v) k.simplices_.insert(Simplex{v});
  for (Simplex s : simplices) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.empty()) continue;
    if (s.back() >= num_vertices) throw PreconditionError("simplex references a vertex out of range");
    k.insert_closed(s);
  }
  return k;
}

SimplicialComplex SimplicialComplex::vertices_only(std::size_t num_vertices, int maxdim,
                                                   std::vector<std::string> labels) {
  return from_simplices(num_vertices, maxdim, {}, std::move(labels));
}

void SimplicialComplex::insert_closed(const Simplex& s) {
  const std::size_t cap = static_cast<std::size_t>(maxdim_) + 1;
  for (std::size_t k = std::min(cap, s.size()); k >= 1; --k) {
    bool all_present = true;
    for_each_combination(s, k, [&](const Simplex& face) {
      if (simplices_.insert(face).second) all_present = false;
    });
    // Faces of a present simplex were inserted with it.
    if (all_present) break;
  }
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(int dim) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) == dim + 1) out.push_back(s);
  return out;
}

std::size_t SimplicialComplex::count_of_dim(int dim) const {
  return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(), [&](const Simplex& s) {
    return static_cast<int>(s.size()) == dim + 1;
  }));
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    bool maximal = true;
    for (std::size_t v = 0; v < num_vertices_ && maximal; ++v) {
      if (std::binary_search(s.begin(), s.end(), v)) continue;
      Simplex larger = s;
      larger.insert(std::upper_bound(larger.begin(), larger.end(), v), v);
      if (simplices_.count(larger)) maximal = false;
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

SimplicialComplex SimplicialComplex::skeleton(int dim) const {
  SimplicialComplex k;
  k.num_vertices_ = num_vertices_;
  k.maxdim_ = std::min(maxdim_, dim);
  k.labels_ = labels_;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) <= dim + 1) k.simplices_.insert(s);
  return k;
}

bool SimplicialComplex::is_valid() const {
  for (std::size_t v = 0; v < num_vertices_; ++v)
    if (!simplices_.count(Simplex{v})) return false;
  for (const auto& s : simplices_) {
    if (s.empty() || !std::is_sorted(s.begin(), s.end()) || s.back() >= num_vertices_) return false;
    if (static_cast<int>(s.size()) > maxdim_ + 1) return false;
    if (s.size() == 1) continue;
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!simplices_.count(face)) return false;
    }
  }
  return true;
}

}  // namespace vietoris
