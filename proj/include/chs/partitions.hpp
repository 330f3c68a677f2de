#pragma once

#include <mutex>
#include <vector>

#include "chs/error.hpp"
#include "chs/rational.hpp"

namespace chs {

/// Integer partition: nonincreasing positive parts.
struct Partition {
  std::vector<int> parts;

  int weight() const {
    int d = 0;
    for (int p : parts) d += p;
    return d;
  }

  /// (part value, multiplicity) pairs, largest part first.
  std::vector<std::pair<int, int>> multiplicities() const {
    std::vector<std::pair<int, int>> m;
    for (std::size_t i = 0; i < parts.size();) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      m.emplace_back(parts[i], static_cast<int>(j - i));
      i = j;
    }
    return m;
  }

  bool operator==(const Partition&) const = default;
};

namespace detail {

/// Descending-lexicographic generation with a lower bound on part size.
inline void emit_partitions(int remaining, int max_part, int min_part, std::vector<int>& prefix,
                            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  for (int p = std::min(remaining, max_part); p >= min_part; --p) {
    prefix.push_back(p);
    emit_partitions(remaining - p, p, min_part, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<Partition> partitions_min_part(int d, int min_part) {
  require(d >= 0, errc::invalid_parameter, "partition weight must be >= 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  emit_partitions(d, d, min_part, prefix, out);
  return out;
}

}  // namespace detail

/// All partitions of d in descending lexicographic order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1). d = 0 yields the empty partition.
inline std::vector<Partition> partitions_of(int d) { return detail::partitions_min_part(d, 1); }

/// Partitions of d with no part equal to 1, same relative order as
/// partitions_of. These are the only partitions a traceless matrix needs.
inline std::vector<Partition> partitions_without_ones(int d) {
  return detail::partitions_min_part(d, 2);
}

/// Centralizer size z = prod_i i^{m_i} m_i! of a permutation of cycle type p.
inline BigInt z_of(const Partition& p) {
  BigInt z = 1;
  for (auto [part, mult] : p.multiplicities()) {
    z *= int_pow(part, static_cast<unsigned>(mult));
    z *= factorial(static_cast<unsigned>(mult));
  }
  return z;
}

/// Partition counting function via Euler's pentagonal-number recurrence:
/// P(d) = sum_k (-1)^{k-1} P(d - g_k), g_k = k(3k-1)/2 over nonzero k.
/// Memoized; the table is extended under a lock and never shrinks.
inline BigInt partition_count(int d) {
  require(d >= 0, errc::invalid_parameter, "partition count needs d >= 0");
  static std::vector<BigInt> table{1};  // P(0) = 1
  static std::mutex table_mutex;
  std::lock_guard<std::mutex> lock(table_mutex);
  while (static_cast<int>(table.size()) <= d) {
    int m = static_cast<int>(table.size());
    BigInt sum = 0;
    for (int k = 1;; ++k) {
      long long g1 = static_cast<long long>(k) * (3 * k - 1) / 2;
      long long g2 = static_cast<long long>(k) * (3 * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      int sign = (k % 2 == 1) ? 1 : -1;
      if (g1 <= m) sum += sign * table[m - g1];
      if (g2 <= m) sum += sign * table[m - g2];
    }
    table.push_back(sum);
  }
  return table[d];
}

}  // namespace chs
