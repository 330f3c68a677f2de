#pragma once

#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "chs/error.hpp"
#include "chs/graph.hpp"
#include "chs/graph_io.hpp"
#include "chs/partitions.hpp"
#include "chs/rational.hpp"
#include "chs/spectra.hpp"
#include "chs/walks.hpp"

namespace chs {

/// Complete homogeneous symmetric polynomial h_d of the given values, read
/// off as the coefficient of t^d in prod_i 1/(1 - x_i t) truncated at order
/// d. Slowest route; serves as the independent oracle for the other two.
template <typename T>
T h_via_series(std::span<const T> values, int d) {
  require(d >= 0, errc::invalid_parameter, "degree must be >= 0");
  std::vector<T> coeff(static_cast<std::size_t>(d) + 1, T(0));
  coeff[0] = T(1);
  for (const T& x : values) {
    // Multiply by the truncated geometric series 1 + x t + x^2 t^2 + ...
    for (int j = 1; j <= d; ++j) coeff[j] += x * coeff[j - 1];
  }
  return coeff[d];
}

/// h_d as the power-sum expansion sum over partitions of p_pi / z_pi.
/// Degree must be even (the norm use case) unless allow_odd is set, which
/// exists so tests can pit this route against the series oracle at odd d.
template <typename T>
T h_via_partitions(std::span<const T> values, int d, bool allow_odd = false) {
  require(d >= 0, errc::invalid_parameter, "degree must be >= 0");
  require(allow_odd || d % 2 == 0, errc::odd_degree, "degree must be even");
  if (d == 0) return T(1);
  std::vector<T> p(static_cast<std::size_t>(d) + 1, T(0));
  for (const T& x : values) {
    T t(1);
    for (int k = 1; k <= d; ++k) {
      t *= x;
      p[k] += t;
    }
  }
  T total(0);
  for (const Partition& pi : partitions_of(d)) {
    T term(1);
    for (int part : pi.parts) term *= p[part];
    total += term / detail::to_value<T>(z_of(pi));
  }
  return total;
}

/// h_d from the power sums p_1..p_d via the Newton-type recurrence
/// d h_d = sum_{k=1}^{d} p_k h_{d-k}. Fast path; exact when fed exact
/// rational power sums.
template <typename T>
T h_via_recurrence(std::span<const T> power_sums, int d) {
  require(d >= 0, errc::invalid_parameter, "degree must be >= 0");
  require(static_cast<int>(power_sums.size()) >= d, errc::invalid_parameter,
          "need power sums p_1..p_d");
  std::vector<T> h(static_cast<std::size_t>(d) + 1, T(0));
  h[0] = T(1);
  for (int i = 1; i <= d; ++i) {
    T acc(0);
    for (int k = 1; k <= i; ++k) acc += power_sums[k - 1] * h[i - k];
    h[i] = acc / T(i);
  }
  return h[d];
}

namespace detail {

inline void require_norm_degree(int d) {
  require(d >= 2, errc::degree_too_small, "CHS norm needs d >= 2");
  require(d % 2 == 0, errc::odd_degree, "CHS norm needs even d");
}

}  // namespace detail

/// Exact ||G||_d^d from precomputed closed-walk counts C_1..C_d:
/// sum over partitions pi of d of C_pi / z_pi with C_pi = prod C_{pi_i}.
/// Partitions containing a part 1 contribute nothing (C_1 = tr A = 0),
/// so only partitions with all parts >= 2 are visited.
inline Rational chs_dth_power_exact(std::span<const BigInt> counts, int d) {
  detail::require_norm_degree(d);
  require(static_cast<int>(counts.size()) >= d, errc::invalid_parameter,
          "need closed-walk counts C_1..C_d");
  Rational total = 0;
  for (const Partition& pi : partitions_without_ones(d)) {
    BigInt prod = 1;
    for (int part : pi.parts) prod *= counts[part - 1];
    if (prod != 0) total += Rational(prod, z_of(pi));
  }
  return total;
}

inline Rational chs_dth_power_exact(const Graph& g, int d) {
  detail::require_norm_degree(d);
  auto counts = closed_walk_counts(g, d);
  return chs_dth_power_exact(std::span<const BigInt>(counts), d);
}

/// Both routes to one CHS norm, side by side.
struct NormReport {
  std::string graph6;          ///< canonical id of the graph
  int d = 0;                   ///< even degree
  Rational exact_dth_power;    ///< walk-count route, certified exact
  double float_norm = 0.0;     ///< eigenvalue route, h_d(lambda)^(1/d)
  double route_agreement = 0.0;///< |float h_d - exact| on the d-th power
};

/// CHS d-norm of a graph by the two independent routes: exact rational
/// d-th power from closed-walk counts, float norm from the spectrum.
inline NormReport chs_norm(const Graph& g, int d) {
  detail::require_norm_degree(d);
  NormReport r;
  r.graph6 = emit_graph6(g);
  r.d = d;
  r.exact_dth_power = chs_dth_power_exact(g, d);
  auto p = eigenvalues(g).power_sums(d);
  double h = h_via_recurrence<double>(p, d);
  r.float_norm = h > 0.0 ? std::pow(h, 1.0 / d) : 0.0;
  r.route_agreement = std::abs(h - to_double(r.exact_dth_power));
  return r;
}

/// Trace shortcuts for d in {2, 4, 6}:
///   ||G||_2^2 = m,
///   ||G||_4^4 = tr(A^4)/4 + m^2/2,
///   ||G||_6^6 = tr(A^6)/6 + m tr(A^4)/4 + tr(A^3)^2/18 + m^3/6.
inline Rational chs_norm_246(const Graph& g, int d) {
  require(d == 2 || d == 4 || d == 6, errc::unsupported_degree,
          "trace shortcut exists only for d in {2,4,6}");
  BigInt m = g.edge_count();
  if (d == 2) return Rational(m);
  auto c = closed_walk_counts(g, d);
  if (d == 4) return Rational(c[3], 4) + Rational(m * m, 2);
  return Rational(c[5], 6) + Rational(m * c[3], 4) + Rational(c[2] * c[2], 18) +
         Rational(m * m * m, 6);
}

/// Exact ||K_n||_d^d = sum_{k=0}^{d} (-1)^k (n-1)^{d-k} binom(k+n-2, n-2),
/// the coefficient of t^d in 1/(1-(n-1)t) * (1+t)^-(n-1).
///
/// Note the lower binomial index: a commonly printed variant of this closed
/// form uses binom(k+n-1, n-1), which corresponds to (1+t)^-n and is wrong --
/// it yields 11 instead of 9 at (n, d) = (3, 4). The form here is certified
/// against the exact walk-count route in the tests.
inline Rational complete_norm_closed_form(int n, int d) {
  require(n >= 1, errc::invalid_parameter, "order must be >= 1");
  require(d >= 0 && d % 2 == 0, errc::odd_degree, "degree must be even");
  if (d == 0) return 1;
  if (n == 1) return 0;
  BigInt sum = 0;
  for (int k = 0; k <= d; ++k) {
    BigInt term = int_pow(n - 1, static_cast<unsigned>(d - k)) *
                  binomial(static_cast<unsigned>(k + n - 2), static_cast<unsigned>(n - 2));
    sum += (k % 2 == 0) ? term : -term;
  }
  return Rational(sum);
}

/// ||K_{m,n}||_d = sqrt(mn) for every even d >= 2.
inline double bipartite_norm_closed_form(int m, int n, int d) {
  require(m >= 1 && n >= 1, errc::invalid_parameter, "parts must be >= 1");
  detail::require_norm_degree(d);
  return std::sqrt(static_cast<double>(m) * n);
}

/// ||S_n||_d = sqrt(n-1), independent of the even degree d.
inline double star_norm(int n, int d) {
  require(n >= 1, errc::invalid_parameter, "order must be >= 1");
  detail::require_norm_degree(d);
  return std::sqrt(static_cast<double>(n - 1));
}

}  // namespace chs
