#include "vietoris/homology.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace vietoris {
namespace {

// Z/2 column addition: symmetric difference of sorted index lists.
void add_column(const BoundaryMatrix::Column& source, BoundaryMatrix::Column& target) {
  BoundaryMatrix::Column out;
  out.reserve(source.size() + target.size());
  std::set_symmetric_difference(source.begin(), source.end(), target.begin(), target.end(),
                                std::back_inserter(out));
  target.swap(out);
}

}  // namespace

BoundaryMatrix::BoundaryMatrix(std::vector<Column> columns, std::vector<int> dims)
    : columns_(std::move(columns)), dims_(std::move(dims)) {
  if (columns_.size() != dims_.size()) throw PreconditionError("boundary matrix: one dimension per column");
  for (auto& c : columns_) {
    std::sort(c.begin(), c.end());
    for (std::size_t r : c)
      if (r >= columns_.size()) throw PreconditionError("boundary matrix: row index out of range");
  }
}

BoundaryMatrix BoundaryMatrix::from_simplices(const std::vector<Simplex>& ordered) {
  std::map<Simplex, std::size_t> position;
  std::vector<Column> columns(ordered.size());
  std::vector<int> dims(ordered.size());
  for (std::size_t j = 0; j < ordered.size(); ++j) {
    const Simplex& s = ordered[j];
    dims[j] = static_cast<int>(s.size()) - 1;
    if (s.size() > 1) {
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        auto it = position.find(face);
        if (it == position.end()) throw PreconditionError("filtration lists a simplex before one of its faces");
        columns[j].push_back(it->second);
      }
    }
    position.emplace(s, j);
  }
  return BoundaryMatrix(std::move(columns), std::move(dims));
}

std::size_t BoundaryMatrix::nonzero_columns() const {
  return static_cast<std::size_t>(
      std::count_if(columns_.begin(), columns_.end(), [](const Column& c) { return !c.empty(); }));
}

bool BoundaryMatrix::is_reduced() const {
  std::vector<bool> seen(columns_.size(), false);
  for (const auto& c : columns_) {
    if (c.empty()) continue;
    if (seen[c.back()]) return false;
    seen[c.back()] = true;
  }
  return true;
}

BoundaryMatrix reduce(BoundaryMatrix b) {
  // pivot_of[row] = column whose low is `row`
  std::unordered_map<std::size_t, std::size_t> pivot_of;
  for (std::size_t j = 0; j < b.columns_.size(); ++j) {
    auto& col = b.columns_[j];
    while (!col.empty()) {
      auto it = pivot_of.find(col.back());
      if (it == pivot_of.end()) break;
      add_column(b.columns_[it->second], col);
    }
    if (!col.empty()) pivot_of.emplace(col.back(), j);
  }
  return b;
}

std::vector<std::pair<std::size_t, std::size_t>> persistence_pairs(const BoundaryMatrix& reduced) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < reduced.size(); ++j)
    if (auto l = reduced.low(j)) out.emplace_back(*l, j);
  return out;
}

std::size_t boundary_rank(const SimplicialComplex& k, int dim) {
  if (dim <= 0) return 0;
  const auto rows = k.simplices_of_dim(dim - 1);
  const auto cols = k.simplices_of_dim(dim);
  if (cols.empty() || rows.empty()) return 0;
  std::map<Simplex, std::size_t> row_index;
  for (std::size_t i = 0; i < rows.size(); ++i) row_index.emplace(rows[i], i);

  // Rows live in [0, rows.size()); columns are stacked after them so the
  // matrix stays square as BoundaryMatrix requires.
  const std::size_t offset = rows.size();
  std::vector<BoundaryMatrix::Column> columns(offset + cols.size());
  std::vector<int> dims(offset + cols.size(), dim - 1);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    dims[offset + j] = dim;
    for (std::size_t drop = 0; drop < cols[j].size(); ++drop) {
      Simplex face = cols[j];
      face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
      columns[offset + j].push_back(row_index.at(face));
    }
  }
  return reduce(BoundaryMatrix(std::move(columns), std::move(dims))).nonzero_columns();
}

BettiVector betti_numbers(const SimplicialComplex& k, int maxdim) {
  if (maxdim < 0) throw PreconditionError("maxdim must be nonnegative");
  if (!k.is_complete_through(maxdim + 1))
    throw PreconditionError("betti_numbers up to degree " + std::to_string(maxdim) +
                            " needs a complex built with maxdim >= " + std::to_string(maxdim + 1) +
                            " (this one has " + std::to_string(k.maxdim()) + ")");
  BettiVector out;
  std::size_t rank_below = 0;  // rank of boundary out of degree d
  for (int d = 0; d <= maxdim; ++d) {
    const std::size_t rank_above = boundary_rank(k, d + 1);
    out.betti.push_back(k.count_of_dim(d) - rank_below - rank_above);
    rank_below = rank_above;
  }
  return out;
}

bool homology_equal(const SimplicialComplex& a, const SimplicialComplex& b, int maxdim) {
  return betti_numbers(a, maxdim) == betti_numbers(b, maxdim);
}

long euler_characteristic(const SimplicialComplex& k) {
  long chi = 0;
  for (const auto& s : k.simplices()) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

}  // namespace vietoris
