#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chs/error.hpp"
#include "chs/graph.hpp"
#include "chs/rational.hpp"

namespace chs {

/// Exact closed-walk counts C_1..C_d of one graph.
using WalkCounts = std::vector<BigInt>;

namespace detail {

/// Dense square matrix over any integer-like ring, row-major.
template <typename T>
struct SquareMatrix {
  int n;
  std::vector<T> a;

  explicit SquareMatrix(int order) : n(order), a(static_cast<std::size_t>(order) * order, T(0)) {}

  T& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const T& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  T trace() const {
    T t(0);
    for (int i = 0; i < n; ++i) t += at(i, i);
    return t;
  }
};

template <typename T>
SquareMatrix<T> adjacency(const Graph& g) {
  SquareMatrix<T> m(g.order());
  g.for_each_edge([&](int i, int j) {
    m.at(i, j) = T(1);
    m.at(j, i) = T(1);
  });
  return m;
}

template <typename T>
SquareMatrix<T> multiply(const SquareMatrix<T>& lhs, const SquareMatrix<T>& rhs) {
  int n = lhs.n;
  SquareMatrix<T> out(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const T& v = lhs.at(i, k);
      if (v == T(0)) continue;
      for (int j = 0; j < n; ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  }
  return out;
}

/// Entries of A^k are bounded by (n-1)^k and the trace by n(n-1)^k, so the
/// int64 fast path is sound exactly when n(n-1)^k stays below 2^62.
inline bool int64_walks_safe(int n, int k) {
  if (n <= 2) return true;
  long double bound = n;
  for (int i = 0; i < k; ++i) {
    bound *= n - 1;
    if (bound > 4.6e18L) return false;  // 2^62
  }
  return true;
}

}  // namespace detail

/// [A(g)^k]_{ij}: the number of length-k walks from vertex i to vertex j.
inline std::vector<std::vector<BigInt>> walk_count_matrix(const Graph& g, int k) {
  require(k >= 1, errc::invalid_parameter, "walk length must be >= 1");
  auto a = detail::adjacency<BigInt>(g);
  auto p = a;
  for (int i = 1; i < k; ++i) p = detail::multiply(p, a);
  int n = g.order();
  std::vector<std::vector<BigInt>> out(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = p.at(i, j);
  return out;
}

/// Closed-walk counts C_1..C_k as exact int64, or nullopt when the proven
/// overflow bound does not hold. Identical values to the BigInt route.
inline std::optional<std::vector<std::int64_t>> closed_walk_counts_int64(const Graph& g,
                                                                         int k_max) {
  require(k_max >= 1, errc::invalid_parameter, "walk length must be >= 1");
  if (!detail::int64_walks_safe(g.order(), k_max)) return std::nullopt;
  auto a = detail::adjacency<std::int64_t>(g);
  std::vector<std::int64_t> counts;
  counts.reserve(k_max);
  auto p = a;
  counts.push_back(p.trace());
  for (int k = 2; k <= k_max; ++k) {
    p = detail::multiply(p, a);
    counts.push_back(p.trace());
  }
  return counts;
}

/// Closed-walk counts C_1..C_k, exact. One pass of iterated multiplication
/// amortizes the matrix products across all lengths.
inline WalkCounts closed_walk_counts(const Graph& g, int k_max) {
  if (auto fast = closed_walk_counts_int64(g, k_max)) {
    return WalkCounts(fast->begin(), fast->end());
  }
  auto a = detail::adjacency<BigInt>(g);
  WalkCounts counts;
  counts.reserve(k_max);
  auto p = a;
  counts.push_back(p.trace());
  for (int k = 2; k <= k_max; ++k) {
    p = detail::multiply(p, a);
    counts.push_back(p.trace());
  }
  return counts;
}

/// C_k(g) = tr(A^k), the number of closed walks of length k.
inline BigInt closed_walk_count(const Graph& g, int k) {
  return closed_walk_counts(g, k).back();
}

}  // namespace chs
