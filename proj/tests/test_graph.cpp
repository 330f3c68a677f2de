#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "chs/graph.hpp"
#include "chs/spectra.hpp"

using namespace chs;

TEST_CASE("from_edges builds the labeled path P3") {
  Graph g = Graph::from_edges(3, {{1, 2}, {2, 3}});
  REQUIRE(g.order() == 3);
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 2));
  REQUIRE_FALSE(g.has_edge(0, 2));
}

TEST_CASE("from_edges edge cases") {
  SECTION("single vertex, no edges") {
    Graph g = Graph::from_edges(1, {});
    REQUIRE(g.order() == 1);
    REQUIRE(g.edge_count() == 0);
  }
  SECTION("duplicate edges collapse") {
    Graph g = Graph::from_edges(4, {{1, 2}, {1, 2}});
    REQUIRE(g.edge_count() == 1);
    REQUIRE(g == Graph::from_edges(4, {{2, 1}}));
  }
  SECTION("loops rejected") {
    try {
      Graph::from_edges(3, {{2, 2}});
      FAIL("expected LoopRejected");
    } catch (const Error& e) {
      REQUIRE(e.code() == errc::loop_rejected);
    }
  }
  SECTION("endpoints outside 1..n rejected") {
    try {
      Graph::from_edges(3, {{1, 4}});
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      REQUIRE(e.code() == errc::index_out_of_range);
    }
  }
  SECTION("order 0 rejected") {
    REQUIRE_THROWS_AS(Graph::empty(0), Error);
  }
}

TEST_CASE("family constructors") {
  REQUIRE(family(FamilyId::complete(4)).edge_count() == 6);

  Graph s4 = family(FamilyId::star(4));
  REQUIRE(s4.edge_count() == 3);
  auto deg = s4.degrees();
  REQUIRE(std::count(deg.begin(), deg.end(), 3) == 1);
  REQUIRE(std::count(deg.begin(), deg.end(), 1) == 3);

  REQUIRE(family(FamilyId::path(2)) == family(FamilyId::complete(2)));
  REQUIRE(family(FamilyId::cycle(3)) == family(FamilyId::complete(3)));

  try {
    family(FamilyId::path(0));
    FAIL("expected InvalidParameter");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::invalid_parameter);
  }
}

TEST_CASE("disjoint union") {
  Graph k3 = family(FamilyId::complete(3));
  Graph u = disjoint_union(k3, k3);
  REQUIRE(u.order() == 6);
  REQUIRE(u.edge_count() == 6);

  Graph iso = disjoint_union(k3, Graph::empty(1));
  REQUIRE(iso.order() == 4);
  REQUIRE(iso.edge_count() == 3);
  REQUIRE(iso.degrees()[3] == 0);

  Graph p2 = family(FamilyId::path(2));
  Graph two = disjoint_union(p2, p2);
  REQUIRE(two.order() == 4);
  REQUIRE(two.edge_count() == 2);
  for (int d : two.degrees()) REQUIRE(d <= 1);
}

TEST_CASE("tensor with K2 is the bipartite double cover") {
  Graph k3 = family(FamilyId::complete(3));
  Graph h = tensor_with_k2(k3);
  REQUIRE(h.order() == 6);
  REQUIRE(h.edge_count() == 6);
  REQUIRE(is_bipartite(h));
  // Off-diagonal block structure: no edges inside either copy.
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      REQUIRE_FALSE(h.has_edge(i, j));
      REQUIRE_FALSE(h.has_edge(3 + i, 3 + j));
    }

  Graph one = tensor_with_k2(Graph::empty(1));
  REQUIRE(one.order() == 2);
  REQUIRE(one.edge_count() == 0);
}

TEST_CASE("tensor with K2 of P2 has spectrum {1,1,-1,-1}") {
  // Oracle: the 4x4 block matrix [[0,A],[A,0]] with A = A(P2) has
  // characteristic polynomial (z^2-1)^2, worked by hand.
  Graph h = tensor_with_k2(family(FamilyId::path(2)));
  Spectrum s = eigenvalues(h);
  std::vector<double> want{1.0, 1.0, -1.0, -1.0};
  for (int i = 0; i < 4; ++i) REQUIRE_THAT(s.values[i], Catch::Matchers::WithinAbs(want[i], 1e-12));
}

TEST_CASE("structural predicates") {
  // Five vertices, four edges, one isolated vertex: not connected.
  Graph fig3 = Graph::from_edges(5, {{1, 2}, {1, 3}, {2, 3}, {2, 4}});
  REQUIRE_FALSE(is_connected(fig3));

  REQUIRE(is_tree(family(FamilyId::star(5))));
  REQUIRE(is_tree(family(FamilyId::path(6))));
  REQUIRE_FALSE(is_tree(family(FamilyId::cycle(4))));
  REQUIRE(is_tree(Graph::empty(1)));

  REQUIRE_FALSE(is_bipartite(family(FamilyId::complete(3))));
  REQUIRE(is_bipartite(family(FamilyId::complete_bipartite(2, 3))));
  REQUIRE(is_bipartite(family(FamilyId::cycle(6))));
  REQUIRE_FALSE(is_bipartite(family(FamilyId::cycle(5))));
  // Disconnected graph with an odd cycle in one component.
  REQUIRE_FALSE(is_bipartite(disjoint_union(family(FamilyId::cycle(3)), Graph::empty(2))));
}

TEST_CASE("K_{m,1} matches the star up to relabeling") {
  for (int m = 1; m <= 6; ++m) {
    Graph a = family(FamilyId::complete_bipartite(m, 1));
    Graph b = family(FamilyId::star(m + 1));
    auto da = a.degrees();
    auto db = b.degrees();
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    REQUIRE(da == db);
    Spectrum sa = eigenvalues(a);
    Spectrum sb = eigenvalues(b);
    for (int i = 0; i < sa.size(); ++i)
      REQUIRE_THAT(sa.values[i], Catch::Matchers::WithinAbs(sb.values[i], 1e-10));
  }
}

TEST_CASE("union and double cover act on the spectrum as expected") {
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    std::uint64_t bits = rng() & ((std::uint64_t(1) << (n * (n - 1) / 2)) - 1);
    Graph g = Graph::from_pair_mask(n, bits);

    // disjoint union: multiset union of spectra
    Graph u = disjoint_union(g, g);
    auto su = eigenvalues(u).values;
    auto sg = eigenvalues(g).values;
    std::vector<double> doubled;
    for (double v : sg) {
      doubled.push_back(v);
      doubled.push_back(v);
    }
    std::sort(doubled.begin(), doubled.end(), std::greater<double>());
    for (std::size_t i = 0; i < su.size(); ++i)
      REQUIRE_THAT(su[i], Catch::Matchers::WithinAbs(doubled[i], 1e-9));

    // double cover: {+lambda} u {-lambda}, and always bipartite
    Graph t = tensor_with_k2(g);
    REQUIRE(is_bipartite(t));
    auto st = eigenvalues(t).values;
    std::vector<double> pm;
    for (double v : sg) {
      pm.push_back(v);
      pm.push_back(-v);
    }
    std::sort(pm.begin(), pm.end(), std::greater<double>());
    for (std::size_t i = 0; i < st.size(); ++i)
      REQUIRE_THAT(st[i], Catch::Matchers::WithinAbs(pm[i], 1e-9));
  }
}
