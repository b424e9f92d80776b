#include "oracles.hpp"

#include "vietoris/fixtures.hpp"
#include "vietoris/homology.hpp"
#include "vietoris/io.hpp"
#include "vietoris/random.hpp"

#include <doctest.h>

using namespace vietoris;

TEST_CASE("Betti numbers of small complexes") {
  const auto simplex = SimplicialComplex::from_simplices(3, 2, {{0, 1, 2}});
  CHECK(betti_numbers(simplex, 2).betti == std::vector<std::size_t>{1, 0, 0});
  const auto hollow = SimplicialComplex::from_simplices(3, 2, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(betti_numbers(hollow, 1).betti == std::vector<std::size_t>{1, 1});
  const auto hexagon = SimplicialComplex::from_simplices(6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
  CHECK(betti_numbers(hexagon, 1).betti == std::vector<std::size_t>{1, 1});
  CHECK(oracle::betti(hexagon, 1) == std::vector<std::size_t>{1, 1});
  const auto empty = SimplicialComplex::vertices_only(0, 2);
  CHECK(betti_numbers(empty, 2).betti == std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("Betti numbers refuse a truncated complex") {
  const auto tet = SimplicialComplex::from_simplices(5, 1, {{0, 1, 2, 3, 4}});
  CHECK_THROWS_AS(betti_numbers(tet, 1), PreconditionError);
  CHECK_NOTHROW(betti_numbers(tet, 0));
}

TEST_CASE("homology_equal on the triangle cover") {
  const auto cover = fixtures::triangle_cover();
  const auto n = nerve_complex(cover, 2);
  const auto v = vietoris_complex(cover, 2);
  CHECK(homology_equal(n, n, 1));
  CHECK(homology_equal(n, v, 1));
  CHECK(betti_numbers(v, 1).betti == std::vector<std::size_t>{1, 1});
}

TEST_CASE("reduction") {
  CHECK(reduce(BoundaryMatrix({{}, {}}, {0, 0})).nonzero_columns() == 0);
  const BoundaryMatrix edge({{}, {}, {0, 1}}, {0, 0, 1});
  CHECK(reduce(edge) == edge);

  // vertices 0,1,2; edges 01, 02, 12; triangle
  const auto b = BoundaryMatrix::from_simplices({{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}});
  CHECK(b.size() == 7);
  CHECK(b.column(6) == BoundaryMatrix::Column{3, 4, 5});
  const auto r = reduce(b);
  CHECK(r.is_reduced());
  CHECK(r.column(5).empty());  // 12 closes the loop
  CHECK(r.low(6) == 5u);       // the triangle kills it
  const auto pairs = persistence_pairs(r);
  CHECK(pairs == std::vector<std::pair<std::size_t, std::size_t>>{{1, 3}, {2, 4}, {5, 6}});
}

TEST_CASE("persistence of two points") {
  const auto two = fixtures::line_space(2);
  const auto d = vr_persistence(*two, 1);
  const auto h0 = d.bars_of_dim(0);
  REQUIRE(h0.size() == 2);
  CHECK(h0[0].birth == 0);
  CHECK(h0[0].death == Rational(1));
  CHECK(h0[1].infinite());
  CHECK(d.bars_of_dim(1).empty());
  CHECK(barcode_csv(d) == "dim,birth,death\n0,0,1\n0,0,inf\n");
}

TEST_CASE("triangle filtration kills the loop at the triangle") {
  const auto tri = fixtures::equilateral_space(3, Rational(1));
  const auto d = vr_persistence(*tri, 1);
  CHECK(d.bars_of_dim(1).empty());
  CHECK(d.bars_of_dim(1, true).size() == 1);
  CHECK(d.bars_of_dim(1, true)[0].zero_length());
}

TEST_CASE("hexagon circle: one H1 bar [1, 2)") {
  const auto hex = fixtures::cycle_space(6);
  const auto h1 = vr_persistence(*hex, 2).bars_of_dim(1);
  REQUIRE(h1.size() == 1);
  CHECK(h1[0].birth == 1);
  CHECK(h1[0].death == Rational(2));
}

TEST_CASE("twelve circle points") {
  const auto c12 = fixtures::cycle_space(12);
  const auto d = vr_persistence(*c12, 4);
  const auto h1 = d.bars_of_dim(1);
  REQUIRE(h1.size() == 1);
  CHECK(h1[0].birth == 1);
  CHECK(h1[0].death == Rational(4));
  // just above 2 pi / 3 the loop is gone
  const auto slice = betti_numbers(vr_complex(*c12, Rational(9, 2), 5), 4);
  CHECK(slice[1] == 0);
  CHECK(d.betti_strict(1, Rational(9, 2)) == 0);
  CHECK(d.betti_strict(1, Rational(4)) == 1);
  CHECK(d.betti_closed(1, Rational(4)) == 0);
}

TEST_CASE("property: homology against the dense oracle") {
  for (std::uint64_t i = 0; i < 60; ++i) {
    Rng rng = make_rng(23, i);
    const std::size_t n = uniform_index(rng, 1, 7);
    const auto x = random_space<Rational>(rng, n, 6);
    const auto r = Rational(static_cast<long>(uniform_index(rng, 1, 12)), 2);
    const auto k = vr_complex(*x, r, 4);
    const auto b = betti_numbers(k, 3);
    CHECK(b.betti == oracle::betti(k, 3));

    // Euler characteristic on a complex built to full dimension
    const auto full = vr_complex(*x, r, static_cast<int>(n));
    const auto bf = betti_numbers(full, static_cast<int>(n) - 1);
    long alt = 0;
    for (std::size_t d = 0; d < bf.betti.size(); ++d) alt += (d % 2 ? -1 : 1) * static_cast<long>(bf[d]);
    CHECK(alt == euler_characteristic(full));

    // relabelling the vertices leaves the Betti numbers alone
    std::vector<std::size_t> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = (v + 1) % n;
    std::vector<Simplex> moved;
    for (const auto& s : k.simplices()) {
      Simplex t;
      for (auto v : s) t.push_back(perm[v]);
      std::sort(t.begin(), t.end());
      moved.push_back(t);
    }
    CHECK(betti_numbers(SimplicialComplex::from_simplices(k.num_vertices(), 4, moved), 3) == b);

    // persistence slices agree with direct computation
    const auto diagram = vr_persistence(*x, 2);
    for (int j = 0; j < 4; ++j) {
      const auto s = Rational(static_cast<long>(uniform_index(rng, 1, 30)), 4);
      const auto direct = betti_numbers(vr_complex(*x, s, 3), 2);
      for (int dim = 0; dim <= 2; ++dim) CHECK(diagram.betti_strict(dim, s) == direct[static_cast<std::size_t>(dim)]);
    }
    std::size_t infinite = 0, at_zero = 0;
    for (const auto& bar : diagram.bars_of_dim(0, true)) {
      infinite += bar.infinite();
      at_zero += bar.birth == 0;
    }
    CHECK(infinite == 1);
    CHECK(at_zero == n);
  }
}
