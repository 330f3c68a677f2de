#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "chs/chs_norm.hpp"

using namespace chs;
using Catch::Matchers::WithinAbs;

namespace {

/// Definition-level oracle: sum of all degree-d monomials x_{i1}...x_{id}
/// over 1 <= i1 <= ... <= id <= n, enumerated directly.
double h_by_monomials(const std::vector<double>& x, int d) {
  double total = 0.0;
  std::vector<int> idx(d, 0);
  while (true) {
    double prod = 1.0;
    for (int i : idx) prod *= x[i];
    total += prod;
    int pos = d - 1;
    while (pos >= 0 && idx[pos] == static_cast<int>(x.size()) - 1) --pos;
    if (pos < 0) break;
    int v = idx[pos] + 1;
    for (int i = pos; i < d; ++i) idx[i] = v;
  }
  return total;
}

Graph random_graph(std::mt19937_64& rng, int n) {
  std::uint64_t pairs = std::uint64_t(n) * (n - 1) / 2;
  std::uint64_t mask = pairs == 0 ? 0 : rng() & ((std::uint64_t(1) << pairs) - 1);
  return Graph::from_pair_mask(n, mask);
}

}  // namespace

TEST_CASE("h values on the K3 spectrum") {
  std::vector<double> lam{2.0, -1.0, -1.0};
  // h_2 = p_2/2 + p_1^2/2 with p_2 = 6, p_1 = 0.
  REQUIRE_THAT(h_via_partitions<double>(lam, 2), WithinAbs(3.0, 1e-12));
  REQUIRE_THAT(h_via_partitions<double>(lam, 4), WithinAbs(9.0, 1e-12));
  REQUIRE_THAT(h_via_partitions<double>(lam, 6), WithinAbs(31.0, 1e-12));
}

TEST_CASE("series route closed cases") {
  SECTION("two opposite unit values") {
    std::vector<double> x{1.0, 0.0, 0.0, -1.0};
    for (int d = 0; d <= 9; ++d) {
      double want = (d % 2 == 0) ? 1.0 : 0.0;
      REQUIRE_THAT(h_via_series<double>(x, d), WithinAbs(want, 1e-12));
    }
  }
  SECTION("complete bipartite spectrum shape") {
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        double r = std::sqrt(static_cast<double>(m) * n);
        std::vector<double> x{r, 0.0, 0.0, 0.0, -r};
        for (int d = 2; d <= 8; d += 2)
          REQUIRE_THAT(h_via_series<double>(x, d),
                       WithinAbs(std::pow(static_cast<double>(m) * n, d / 2.0), 1e-9));
      }
  }
  SECTION("h_0 is 1") {
    std::vector<double> x{3.0, -1.0, 4.0};
    REQUIRE(h_via_series<double>(x, 0) == 1.0);
    REQUIRE(h_via_partitions<double>(x, 0) == 1.0);
  }
}

TEST_CASE("series route matches the monomial definition") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    int d = 1 + static_cast<int>(rng() % 6);
    std::vector<double> x(n);
    for (double& v : x) v = u(rng);
    double direct = h_by_monomials(x, d);
    REQUIRE_THAT(h_via_series<double>(x, d), WithinAbs(direct, 1e-9 * (1.0 + std::abs(direct))));
  }
}

TEST_CASE("all three routes agree, float and exact") {
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng() % 6);
    int d = static_cast<int>(rng() % 11);
    std::vector<double> xd(n);
    std::vector<Rational> xq(n);
    for (int i = 0; i < n; ++i) {
      int v = small(rng);
      xd[i] = v;
      xq[i] = v;
    }
    double series = h_via_series<double>(xd, d);
    double parts = h_via_partitions<double>(xd, d, /*allow_odd=*/true);
    REQUIRE_THAT(parts, WithinAbs(series, 1e-8 * (1.0 + std::abs(series))));

    std::vector<double> pd(d);
    std::vector<Rational> pq(d);
    for (int k = 1; k <= d; ++k) {
      Rational s = 0;
      double sd = 0.0;
      for (int i = 0; i < n; ++i) {
        Rational t = 1;
        for (int e = 0; e < k; ++e) t *= xq[i];
        s += t;
        sd += std::pow(xd[i], k);
      }
      pq[k - 1] = s;
      pd[k - 1] = sd;
    }
    REQUIRE_THAT(h_via_recurrence<double>(pd, d), WithinAbs(series, 1e-8 * (1.0 + std::abs(series))));
    // Exact rational agreement between the recurrence and the series.
    REQUIRE(h_via_recurrence<Rational>(pq, d) == h_via_series<Rational>(xq, d));
  }
}

TEST_CASE("recurrence with zero power sums gives zero") {
  std::vector<double> zeros(10, 0.0);
  for (int d = 1; d <= 10; ++d) REQUIRE(h_via_recurrence<double>(zeros, d) == 0.0);
}

TEST_CASE("odd degree is rejected unless explicitly allowed") {
  std::vector<double> x{1.0, 2.0};
  try {
    h_via_partitions<double>(x, 3);
    FAIL("expected OddDegree");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::odd_degree);
  }
  REQUIRE_THAT(h_via_partitions<double>(x, 3, true),
               WithinAbs(h_via_series<double>(x, 3), 1e-10));
}

TEST_CASE("chs_norm worked examples") {
  Graph k3 = family(FamilyId::complete(3));
  Graph g = disjoint_union(k3, k3);
  Graph h = tensor_with_k2(k3);

  NormReport rg = chs_norm(g, 6);
  NormReport rh = chs_norm(h, 6);
  REQUIRE(rg.exact_dth_power == 120);
  REQUIRE(rh.exact_dth_power == 112);
  REQUIRE(rg.route_agreement <= 1e-7 * 121);
  REQUIRE(rh.route_agreement <= 1e-7 * 113);
  REQUIRE_THAT(rg.float_norm, WithinAbs(std::pow(120.0, 1.0 / 6), 1e-9));

  // d = 2 collapses to the edge count for any graph.
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    Graph r = random_graph(rng, 2 + static_cast<int>(rng() % 6));
    REQUIRE(chs_norm(r, 2).exact_dth_power == r.edge_count());
  }
  for (int n = 2; n <= 8; ++n) {
    NormReport rp = chs_norm(family(FamilyId::path(n)), 2);
    REQUIRE(rp.exact_dth_power == n - 1);
    REQUIRE_THAT(rp.float_norm, WithinAbs(std::sqrt(n - 1.0), 1e-10));
  }
}

TEST_CASE("chs_norm degree validation") {
  Graph k3 = family(FamilyId::complete(3));
  try {
    chs_norm(k3, 5);
    FAIL("expected OddDegree");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::odd_degree);
  }
  try {
    chs_norm(k3, 0);
    FAIL("expected DegreeTooSmall");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::degree_too_small);
  }
}

TEST_CASE("trace shortcuts for d in {2,4,6}") {
  Graph k3 = family(FamilyId::complete(3));
  REQUIRE(chs_norm_246(k3, 4) == 9);   // 18/4 + 9/2
  REQUIRE(chs_norm_246(k3, 6) == 31);  // 66/6 + 3*18/4 + 36/18 + 27/6

  Graph edgeless = Graph::empty(5);
  REQUIRE(chs_norm_246(edgeless, 2) == 0);
  REQUIRE(chs_norm_246(edgeless, 4) == 0);
  REQUIRE(chs_norm_246(edgeless, 6) == 0);

  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7));
    for (int d : {2, 4, 6}) REQUIRE(chs_norm_246(g, d) == chs_dth_power_exact(g, d));
  }
  try {
    chs_norm_246(k3, 8);
    FAIL("expected UnsupportedDegree");
  } catch (const Error& e) {
    REQUIRE(e.code() == errc::unsupported_degree);
  }
}

TEST_CASE("complete graph closed form") {
  REQUIRE(complete_norm_closed_form(3, 4) == 9);
  REQUIRE(complete_norm_closed_form(3, 6) == 31);
  // The walk-count route is the arbiter for every small (n, d).
  for (int n = 1; n <= 8; ++n) {
    Graph kn = family(FamilyId::complete(n));
    for (int d = 2; d <= 12; d += 2)
      REQUIRE(complete_norm_closed_form(n, d) == chs_dth_power_exact(kn, d));
  }
}

TEST_CASE("misprinted binomial variant is wrong at (3,4)") {
  // Upper index k+n-1 (from expanding (1+t)^-n instead of (1+t)^-(n-1))
  // gives 11 where the true value is 9.
  int n = 3, d = 4;
  BigInt wrong = 0;
  for (int k = 0; k <= d; ++k) {
    BigInt term = int_pow(n - 1, static_cast<unsigned>(d - k)) *
                  binomial(static_cast<unsigned>(k + n - 1), static_cast<unsigned>(n - 1));
    wrong += (k % 2 == 0) ? term : -term;
  }
  REQUIRE(wrong == 11);
  REQUIRE(complete_norm_closed_form(3, 4) == 9);
}

TEST_CASE("bipartite and star closed forms") {
  for (int d = 2; d <= 10; d += 2) REQUIRE_THAT(bipartite_norm_closed_form(2, 2, d), WithinAbs(2.0, 1e-14));
  REQUIRE_THAT(bipartite_norm_closed_form(1, 1, 6), WithinAbs(1.0, 1e-14));
  for (int n = 2; n <= 9; ++n) {
    NormReport r = chs_norm(family(FamilyId::star(n)), 2);
    REQUIRE_THAT(star_norm(n, 2), WithinAbs(r.float_norm, 1e-12));
    for (int d = 4; d <= 10; d += 2) {
      NormReport rd = chs_norm(family(FamilyId::star(n)), d);
      REQUIRE_THAT(star_norm(n, d), WithinAbs(rd.float_norm, 1e-9));
    }
  }
  // K_{m,n} norms are sqrt(mn) at every even degree.
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n)
      for (int d = 2; d <= 8; d += 2) {
        NormReport r = chs_norm(family(FamilyId::complete_bipartite(m, n)), d);
        REQUIRE_THAT(bipartite_norm_closed_form(m, n, d), WithinAbs(r.float_norm, 1e-9));
      }
}

TEST_CASE("route agreement on random graphs") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(rng, n);
    Spectrum s = eigenvalues(g);
    std::vector<double> lam = s.values;
    for (int d = 2; d <= 12; d += 2) {
      double series = h_via_series<double>(lam, d);
      double parts = h_via_partitions<double>(lam, d);
      REQUIRE(std::abs(series - parts) <= 1e-8 * (1.0 + std::abs(series)));
      Rational exact = chs_dth_power_exact(g, d);
      auto p = s.power_sums(d);
      double flt = h_via_recurrence<double>(p, d);
      REQUIRE(std::abs(flt - to_double(exact)) <= 1e-7 * (1.0 + to_double(exact)));
    }
  }
}

TEST_CASE("positive definiteness on graphs") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8));
    for (int d : {2, 4, 6, 8}) {
      Rational v = chs_dth_power_exact(g, d);
      if (g.edge_count() == 0) {
        REQUIRE(v == 0);
      } else {
        REQUIRE(v > 0);
      }
    }
  }
}

TEST_CASE("sign invariance and homogeneity of the evaluators") {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    std::vector<double> x(n), neg(n), scaled(n);
    double alpha = 0.25 + (rng() % 1000) / 250.0;
    for (int i = 0; i < n; ++i) {
      x[i] = u(rng);
      neg[i] = -x[i];
      scaled[i] = alpha * x[i];
    }
    for (int d = 2; d <= 8; d += 2) {
      double hx = h_via_partitions<double>(x, d);
      double hn = h_via_partitions<double>(neg, d);
      REQUIRE_THAT(hn, WithinAbs(hx, 1e-9 * (1.0 + std::abs(hx))));
      double hs = h_via_series<double>(scaled, d);
      REQUIRE_THAT(hs, WithinAbs(std::pow(alpha, d) * h_via_series<double>(x, d),
                                 1e-8 * (1.0 + std::abs(hs))));
    }
  }
}

TEST_CASE("disjoint union is well defined through the walk route") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 4));
    Graph h = random_graph(rng, 2 + static_cast<int>(rng() % 4));
    Graph u = disjoint_union(g, h);
    for (int d = 2; d <= 8; d += 2) {
      // Summed counts vs the union's own counts, then vs the union spectrum.
      auto cg = closed_walk_counts(g, d);
      auto ch = closed_walk_counts(h, d);
      std::vector<BigInt> summed(d);
      for (int k = 0; k < d; ++k) summed[k] = cg[k] + ch[k];
      Rational from_parts = chs_dth_power_exact(summed, d);
      REQUIRE(from_parts == chs_dth_power_exact(u, d));

      auto p = eigenvalues(u).power_sums(d);
      double flt = h_via_recurrence<double>(p, d);
      REQUIRE(std::abs(flt - to_double(from_parts)) <= 1e-7 * (1.0 + to_double(from_parts)));
    }
  }
}
