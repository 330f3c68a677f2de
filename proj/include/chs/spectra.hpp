#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "chs/error.hpp"
#include "chs/graph.hpp"

namespace chs {

/// Adjacency eigenvalues in nonincreasing order, plus the backward-error
/// bound the solver guarantees. Length always equals the graph order and
/// the values sum to zero within order * tolerance.
struct Spectrum {
  std::vector<double> values;
  double tolerance = 0.0;

  int size() const { return static_cast<int>(values.size()); }

  /// Singular values: absolute eigenvalues, re-sorted nonincreasing.
  std::vector<double> singular_values() const {
    std::vector<double> s(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) s[i] = std::abs(values[i]);
    std::sort(s.begin(), s.end(), std::greater<double>());
    return s;
  }

  /// Power sums p_k = sum lambda_i^k for k = 1..k_max.
  std::vector<double> power_sums(int k_max) const {
    std::vector<double> p(k_max, 0.0);
    for (double v : values) {
      double t = 1.0;
      for (int k = 0; k < k_max; ++k) {
        t *= v;
        p[k] += t;
      }
    }
    return p;
  }
};

namespace detail {

/// Cyclic-by-row two-sided Jacobi rotations on a dense symmetric matrix.
/// Deterministic sweep order; eigenvalues land on the diagonal once the
/// off-diagonal Frobenius mass drops below the threshold.
inline std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n) {
  if (n == 1) return {a[0]};
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

  double frob = 0.0;
  for (double v : a) frob += v * v;
  frob = std::sqrt(frob);
  const double stop = 1e-14 * std::max(1.0, frob);
  const int max_sweeps = 64;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off) <= stop) {
      std::vector<double> diag(n);
      for (int i = 0; i < n; ++i) diag[i] = at(i, i);
      return diag;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = at(p, q);
        if (apq == 0.0) continue;
        double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        // Rotate rows/columns p and q.
        for (int k = 0; k < n; ++k) {
          double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  fail(errc::convergence_failure, "Jacobi sweep cap reached");
}

/// Nonincreasing sort, ties kept in original index order for determinism.
inline void sort_spectrum(std::vector<double>& v) {
  std::stable_sort(v.begin(), v.end(), [](double x, double y) { return x > y; });
}

}  // namespace detail

inline Spectrum eigenvalues(const Graph& g) {
  int n = g.order();
  std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
  g.for_each_edge([&](int i, int j) {
    a[static_cast<std::size_t>(i) * n + j] = 1.0;
    a[static_cast<std::size_t>(j) * n + i] = 1.0;
  });
  double frob = std::sqrt(2.0 * g.edge_count());
  Spectrum s;
  s.values = detail::jacobi_eigenvalues(std::move(a), n);
  detail::sort_spectrum(s.values);
  s.tolerance = 1e-10 * std::max(1.0, frob);
  return s;
}

/// Closed-form spectra for P_n, K_n, K_{m,n}, S_n (= K_{n-1,1}).
inline Spectrum family_spectrum(FamilyId id) {
  require(id.a >= 1, errc::invalid_parameter, "family parameter must be >= 1");
  Spectrum s;
  s.tolerance = 1e-12;
  constexpr double pi = 3.14159265358979323846;
  switch (id.kind) {
    case Family::path: {
      for (int k = 1; k <= id.a; ++k) s.values.push_back(2.0 * std::cos(k * pi / (id.a + 1)));
      break;
    }
    case Family::complete: {
      s.values.push_back(id.a - 1.0);
      for (int i = 1; i < id.a; ++i) s.values.push_back(-1.0);
      break;
    }
    case Family::complete_bipartite: {
      require(id.b >= 1, errc::invalid_parameter, "complete bipartite needs two positive parts");
      double r = std::sqrt(static_cast<double>(id.a) * id.b);
      s.values.push_back(r);
      for (int i = 0; i < id.a + id.b - 2; ++i) s.values.push_back(0.0);
      s.values.push_back(-r);
      break;
    }
    case Family::star: {
      if (id.a == 1) {
        s.values.push_back(0.0);
        break;
      }
      return family_spectrum(FamilyId::complete_bipartite(id.a - 1, 1));
    }
    case Family::cycle:
      fail(errc::unsupported_family, "no closed-form spectrum wired for cycles");
  }
  detail::sort_spectrum(s.values);
  return s;
}

inline double spectral_norm(const Spectrum& s) {
  double best = 0.0;
  for (double v : s.values) best = std::max(best, std::abs(v));
  return best;
}

inline double energy(const Spectrum& s) {
  double sum = 0.0;
  for (double v : s.values) sum += std::abs(v);
  return sum;
}

inline double ky_fan(const Spectrum& s, int k) {
  require(1 <= k && k <= s.size(), errc::invalid_k,
          "Ky Fan index must be in 1..n, got " + std::to_string(k));
  auto sv = s.singular_values();
  return std::accumulate(sv.begin(), sv.begin() + k, 0.0);
}

inline double schatten(const Spectrum& s, double p) {
  require(p >= 1.0, errc::invalid_p, "Schatten exponent must be >= 1");
  double sum = 0.0;
  for (double v : s.values) sum += std::pow(std::abs(v), p);
  return std::pow(sum, 1.0 / p);
}

inline double spectral_norm(const Graph& g) { return spectral_norm(eigenvalues(g)); }
inline double energy(const Graph& g) { return energy(eigenvalues(g)); }
inline double ky_fan(const Graph& g, int k) { return ky_fan(eigenvalues(g), k); }
inline double schatten(const Graph& g, double p) { return schatten(eigenvalues(g), p); }

}  // namespace chs
