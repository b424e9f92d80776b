#pragma once

#include "vietoris/scalar.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

namespace vietoris::detail {

template <Scalar T>
using DenseMatrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

template <Scalar T>
struct TransportationSolution {
  DenseMatrix<T> flow;
  T cost{};
  std::size_t pivots = 0;
};

/// Primal transportation simplex on a balanced instance (sum supply == sum
/// demand). Starts from the northwest-corner basis and pivots with Bland's
/// rule (lowest row-major index enters, lowest index leaves among ties),
/// which rules out cycling on degenerate bases.
template <Scalar T>
class TransportationSimplex {
public:
  using Traits = ScalarTraits<T>;

  TransportationSimplex(std::vector<T> supply, std::vector<T> demand, DenseMatrix<T> cost)
      : supply_(std::move(supply)), demand_(std::move(demand)), cost_(std::move(cost)),
        m_(supply_.size()), n_(demand_.size()) {
    if (m_ == 0 || n_ == 0) throw PreconditionError("transportation problem with an empty side");
    if (static_cast<std::size_t>(cost_.rows()) != m_ || static_cast<std::size_t>(cost_.cols()) != n_)
      throw PreconditionError("cost matrix shape does not match supply/demand");
    T total_supply = T(0), total_demand = T(0);
    for (const auto& a : supply_) total_supply += a;
    for (const auto& b : demand_) total_demand += b;
    if (!Traits::equal(total_supply, total_demand)) throw PreconditionError("unbalanced transportation problem");
  }

  TransportationSolution<T> solve() {
    northwest_corner();
    std::size_t pivots = 0;
    while (true) {
      compute_potentials();
      auto entering = find_entering();
      if (!entering) break;
      pivot(*entering);
      if (++pivots > kMaxPivots) throw Error("transportation simplex exceeded pivot limit");
    }
    TransportationSolution<T> out{flow_, T(0), pivots};
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!Traits::is_zero(flow_(i, j))) out.cost += flow_(i, j) * cost_(i, j);
    return out;
  }

private:
  static constexpr std::size_t kMaxPivots = 1'000'000;
  using Cell = std::pair<std::size_t, std::size_t>;

  void northwest_corner() {
    flow_ = DenseMatrix<T>::Zero(Eigen::Index(m_), Eigen::Index(n_));
    basic_.assign(m_ * n_, false);
    std::vector<T> row_left = supply_, col_left = demand_;
    std::size_t i = 0, j = 0;
    while (true) {
      const T q = min_of(row_left[i], col_left[j]);
      flow_(i, j) = q;
      basic_[i * n_ + j] = true;
      row_left[i] -= q;
      col_left[j] -= q;
      if (i + 1 == m_ && j + 1 == n_) break;
      if (i + 1 == m_) ++j;
      else if (j + 1 == n_) ++i;
      else if (Traits::is_zero(row_left[i])) ++i;
      else ++j;
    }
  }

  void compute_potentials() {
    row_pot_.assign(m_, T(0));
    col_pot_.assign(n_, T(0));
    std::vector<bool> row_done(m_, false), col_done(n_, false);
    // Nodes 0..m-1 are rows, m..m+n-1 columns.
    std::queue<std::size_t> frontier;
    row_done[0] = true;
    frontier.push(0);
    while (!frontier.empty()) {
      const std::size_t node = frontier.front();
      frontier.pop();
      if (node < m_) {
        const std::size_t i = node;
        for (std::size_t j = 0; j < n_; ++j)
          if (basic_[i * n_ + j] && !col_done[j]) {
            col_pot_[j] = cost_(i, j) - row_pot_[i];
            col_done[j] = true;
            frontier.push(m_ + j);
          }
      } else {
        const std::size_t j = node - m_;
        for (std::size_t i = 0; i < m_; ++i)
          if (basic_[i * n_ + j] && !row_done[i]) {
            row_pot_[i] = cost_(i, j) - col_pot_[j];
            row_done[i] = true;
            frontier.push(i);
          }
      }
    }
  }

  std::optional<Cell> find_entering() const {
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!basic_[i * n_ + j] && Traits::less(cost_(i, j) - row_pot_[i] - col_pot_[j], T(0)))
          return Cell{i, j};
    return std::nullopt;
  }

  // Basic cells on the tree path from column `col` to row `row`, starting at
  // the column end.
  std::vector<Cell> tree_path(std::size_t row, std::size_t col) const {
    const std::size_t nodes = m_ + n_;
    const std::size_t none = nodes;
    std::vector<std::size_t> parent(nodes, none);
    std::queue<std::size_t> frontier;
    const std::size_t start = m_ + col;
    parent[start] = start;
    frontier.push(start);
    while (!frontier.empty() && parent[row] == none) {
      const std::size_t node = frontier.front();
      frontier.pop();
      if (node < m_) {
        for (std::size_t j = 0; j < n_; ++j)
          if (basic_[node * n_ + j] && parent[m_ + j] == none) {
            parent[m_ + j] = node;
            frontier.push(m_ + j);
          }
      } else {
        const std::size_t j = node - m_;
        for (std::size_t i = 0; i < m_; ++i)
          if (basic_[i * n_ + j] && parent[i] == none) {
            parent[i] = node;
            frontier.push(i);
          }
      }
    }
    if (parent[row] == none) throw Error("transportation simplex: basis is not a spanning tree");
    // Walk back from the row to the column, then reverse.
    std::vector<Cell> cells;
    for (std::size_t node = row; node != start; node = parent[node]) {
      const std::size_t up = parent[node];
      cells.push_back(node < m_ ? Cell{node, up - m_} : Cell{up, node - m_});
    }
    std::reverse(cells.begin(), cells.end());
    return cells;
  }

  void pivot(const Cell& entering) {
    const auto path = tree_path(entering.first, entering.second);
    // Along the cycle, cells at even path positions lose theta, odd ones gain.
    std::optional<T> theta;
    std::optional<Cell> leaving;
    for (std::size_t k = 0; k < path.size(); k += 2) {
      const auto [i, j] = path[k];
      const T& x = flow_(i, j);
      const bool better = !theta || Traits::less(x, *theta) ||
                          (Traits::equal(x, *theta) && i * n_ + j < leaving->first * n_ + leaving->second);
      if (better) {
        theta = x;
        leaving = path[k];
      }
    }
    const T step = *theta;
    flow_(entering.first, entering.second) += step;
    for (std::size_t k = 0; k < path.size(); ++k) {
      const auto [i, j] = path[k];
      if (k % 2 == 0) flow_(i, j) -= step;
      else flow_(i, j) += step;
    }
    flow_(leaving->first, leaving->second) = T(0);
    basic_[leaving->first * n_ + leaving->second] = false;
    basic_[entering.first * n_ + entering.second] = true;
  }

  std::vector<T> supply_, demand_;
  DenseMatrix<T> cost_;
  std::size_t m_, n_;
  DenseMatrix<T> flow_;
  std::vector<bool> basic_;
  std::vector<T> row_pot_, col_pot_;
};

}  // namespace vietoris::detail
