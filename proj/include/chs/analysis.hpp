#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "chs/chs_norm.hpp"
#include "chs/error.hpp"
#include "chs/graph.hpp"
#include "chs/graph_io.hpp"
#include "chs/partitions.hpp"
#include "chs/rational.hpp"
#include "chs/spectra.hpp"
#include "chs/walks.hpp"

namespace chs {

/// Outcome of a majorization test x ≺ y, prefix sums included so callers
/// (and failing tests) can see exactly which inequality broke.
struct MajorizationWitness {
  std::vector<double> x;         ///< nonincreasing rearrangement of x
  std::vector<double> y;         ///< nonincreasing rearrangement of y
  std::vector<double> x_prefix;  ///< running sums of x
  std::vector<double> y_prefix;  ///< running sums of y
  bool holds = false;
};

/// Does y majorize x? Sorts both nonincreasing, requires every proper
/// prefix sum of x to stay at most the matching prefix of y (within tol)
/// and the total sums to agree within tol.
inline MajorizationWitness majorizes(std::span<const double> y, std::span<const double> x,
                                     double tol) {
  require(x.size() == y.size(), errc::length_mismatch,
          "majorization needs equal lengths, got " + std::to_string(x.size()) + " and " +
              std::to_string(y.size()));
  MajorizationWitness w;
  w.x.assign(x.begin(), x.end());
  w.y.assign(y.begin(), y.end());
  std::sort(w.x.begin(), w.x.end(), std::greater<double>());
  std::sort(w.y.begin(), w.y.end(), std::greater<double>());
  std::size_t n = w.x.size();
  w.x_prefix.resize(n);
  w.y_prefix.resize(n);
  double sx = 0.0, sy = 0.0;
  w.holds = true;
  for (std::size_t k = 0; k < n; ++k) {
    sx += w.x[k];
    sy += w.y[k];
    w.x_prefix[k] = sx;
    w.y_prefix[k] = sy;
    if (k + 1 < n && sx > sy + tol) w.holds = false;
  }
  if (n > 0 && std::abs(sx - sy) > tol) w.holds = false;
  return w;
}

/// Builds the singularly cospectral pair (f ⊔ f, f × K_2) from a
/// nonbipartite graph of order >= 3. The two outputs share every even
/// power trace (hence all singular values) but differ in some odd trace.
inline std::pair<Graph, Graph> make_cospectral_pair(const Graph& f) {
  require(f.order() >= 3, errc::order_too_small, "need order >= 3");
  require(!is_bipartite(f), errc::bipartite_input,
          "bipartite input gives cospectral copies, not a distinguishing pair");
  return {disjoint_union(f, f), tensor_with_k2(f)};
}

/// Smallest even d <= d_max at which two singularly cospectral graphs get
/// different exact CHS d-th powers, or nullopt if none exists below the
/// cutoff. Rejects pairs that are not singularly cospectral (some even
/// power trace differs).
///
/// The search starts at d = j + 3 where j is the smallest odd exponent with
/// tr(A^j) differing: below that every partition of d either has all its
/// power sums equal or contains a part 1 (and C_1 = 0 kills the product).
/// d = j + 3 itself is only a candidate -- when C_3 vanishes on both sides
/// the (j,3) product is 0 = 0 and the first difference lands later (for the
/// double cover of a triangle-free odd-girth-5 graph it is d = 10), so each
/// candidate d is confirmed against the exact walk-count route.
inline std::optional<int> distinguish(const Graph& g, const Graph& h, int d_max = 20) {
  require(g.order() == h.order(), errc::order_mismatch,
          "orders " + std::to_string(g.order()) + " vs " + std::to_string(h.order()));
  require(d_max >= 2, errc::invalid_parameter, "d_max must be >= 2");
  auto cg = closed_walk_counts(g, d_max);
  auto ch = closed_walk_counts(h, d_max);
  for (int k = 2; k <= d_max; k += 2) {
    require(cg[k - 1] == ch[k - 1], errc::not_singularly_cospectral,
            "even power sums differ first at k = " + std::to_string(k));
  }
  int j = 0;
  for (int k = 3; k <= d_max - 3; k += 2) {
    if (cg[k - 1] != ch[k - 1]) {
      j = k;
      break;
    }
  }
  if (j == 0) return std::nullopt;
  for (int d = j + 3; d <= d_max; d += 2) {
    if (chs_dth_power_exact(std::span<const BigInt>(cg), d) !=
        chs_dth_power_exact(std::span<const BigInt>(ch), d))
      return d;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration
// ---------------------------------------------------------------------------

namespace detail {

/// Connectivity straight off a pair-bit mask (bitset BFS), cheap enough to
/// act as the enumeration filter before any Graph is built.
inline bool mask_connected(int n, std::uint64_t mask) {
  std::uint32_t rows[12] = {0};
  std::size_t b = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++b)
      if ((mask >> b) & 1u) {
        rows[i] |= std::uint32_t(1) << j;
        rows[j] |= std::uint32_t(1) << i;
      }
  std::uint32_t all = (n >= 32) ? ~std::uint32_t(0) : ((std::uint32_t(1) << n) - 1);
  std::uint32_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::uint32_t fr = frontier; fr != 0; fr &= fr - 1)
      next |= rows[__builtin_ctz(fr)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

/// Linear Pruefer decode; seq has length n-2 with entries in [0, n).
inline Graph decode_pruefer(int n, std::span<const int> seq) {
  if (n == 1) return Graph::empty(1);
  std::vector<int> deg(n, 1);
  for (int s : seq) ++deg[s];
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  int ptr = 0;
  while (deg[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int s : seq) {
    edges.emplace_back(leaf + 1, s + 1);
    --deg[leaf];
    if (--deg[s] == 1 && s < ptr) {
      leaf = s;
    } else {
      ++ptr;
      while (deg[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf + 1, n);
  return Graph::from_edges(n, edges);
}

inline void check_shard(int shard_index, int shard_count) {
  require(shard_count >= 1 && shard_index >= 0 && shard_index < shard_count,
          errc::invalid_parameter, "need 0 <= shard_index < shard_count");
}

}  // namespace detail

/// All labeled connected graphs on n <= 8 vertices: every pair-bit mask is
/// visited and filtered by connectivity. Shards partition the mask space by
/// residue, so distinct shards are disjoint and their union is complete.
template <typename F>
void for_each_connected_graph(int n, int shard_index, int shard_count, F&& f) {
  require(n >= 1, errc::invalid_parameter, "order must be >= 1");
  require(n <= 8, errc::order_too_large, "connected enumeration capped at order 8");
  detail::check_shard(shard_index, shard_count);
  std::uint64_t total = std::uint64_t(1) << (n * (n - 1) / 2);
  for (std::uint64_t mask = shard_index; mask < total; mask += shard_count) {
    if (!detail::mask_connected(n, mask)) continue;
    f(Graph::from_pair_mask(n, mask));
  }
}

template <typename F>
void for_each_connected_graph(int n, F&& f) {
  for_each_connected_graph(n, 0, 1, std::forward<F>(f));
}

/// All n^(n-2) labeled trees on n <= 10 vertices via Pruefer decoding;
/// sequence index space sharded by residue.
template <typename F>
void for_each_labeled_tree(int n, int shard_index, int shard_count, F&& f) {
  require(n >= 1, errc::invalid_parameter, "order must be >= 1");
  require(n <= 10, errc::order_too_large, "tree enumeration capped at order 10");
  detail::check_shard(shard_index, shard_count);
  if (n <= 2) {
    if (shard_index == 0) f(detail::decode_pruefer(n, {}));
    return;
  }
  std::uint64_t total = 1;
  for (int i = 0; i < n - 2; ++i) total *= static_cast<std::uint64_t>(n);
  std::vector<int> seq(n - 2);
  for (std::uint64_t idx = shard_index; idx < total; idx += shard_count) {
    std::uint64_t rest = idx;
    for (int i = 0; i < n - 2; ++i) {
      seq[i] = static_cast<int>(rest % n);
      rest /= n;
    }
    f(detail::decode_pruefer(n, seq));
  }
}

template <typename F>
void for_each_labeled_tree(int n, F&& f) {
  for_each_labeled_tree(n, 0, 1, std::forward<F>(f));
}

/// Structural shape tests used to validate extremal witnesses.
inline bool is_path_graph(const Graph& g) {
  if (g.edge_count() != g.order() - 1) return false;
  for (int d : g.degrees())
    if (d > 2) return false;
  return is_connected(g);
}

inline bool is_complete_graph(const Graph& g) {
  return static_cast<std::size_t>(g.edge_count()) == g.pair_count();
}

inline bool is_star_graph(const Graph& g) {
  if (g.order() <= 2) return is_tree(g);
  if (!is_tree(g)) return false;
  auto deg = g.degrees();
  return *std::max_element(deg.begin(), deg.end()) == g.order() - 1;
}

// ---------------------------------------------------------------------------
// Theorem 2: extremal sweep
// ---------------------------------------------------------------------------

enum class SweepMode { connected, trees };

/// Result of one exhaustive extremal sweep at a fixed (n, d).
struct ExtremalReport {
  SweepMode mode = SweepMode::connected;
  int n = 0;
  int d = 0;
  std::uint64_t scanned = 0;            ///< graphs visited
  Rational min_value;                   ///< smallest exact ||G||_d^d seen
  Rational max_value;                   ///< largest exact ||G||_d^d seen
  Rational path_value;                  ///< exact ||P_n||_d^d
  Rational extremal_value;              ///< exact ||K_n||_d^d or ||S_n||_d^d
  std::vector<std::string> argmin_graph6;  ///< all minimizers, sorted
  std::vector<std::string> argmax_graph6;  ///< all maximizers, sorted
};

namespace detail {

struct SweepTerm {
  std::vector<int> parts;       // partition of d, all parts >= 2
  BigInt weight_big;            // d!/z_pi
  std::int64_t weight_i64 = 0;  // same, when it fits int64
};

struct SweepDegree {
  int d = 0;
  BigInt d_factorial;
  std::vector<SweepTerm> terms;
  bool weights_fit_i64 = true;
};

inline SweepDegree make_sweep_degree(int d) {
  SweepDegree s;
  s.d = d;
  s.d_factorial = factorial(static_cast<unsigned>(d));
  for (const Partition& pi : partitions_without_ones(d)) {
    SweepTerm term;
    term.parts = pi.parts;
    term.weight_big = s.d_factorial / z_of(pi);
    if (term.weight_big < (BigInt(1) << 62)) {
      term.weight_i64 = term.weight_big.convert_to<std::int64_t>();
    } else {
      s.weights_fit_i64 = false;
    }
    s.terms.push_back(std::move(term));
  }
  return s;
}

/// d! * ||G||_d^d as a numerator over the fixed denominator d!.
template <typename IntT>
IntT sweep_numerator(const SweepDegree& sd, std::span<const IntT> counts) {
  IntT num(0);
  for (const SweepTerm& t : sd.terms) {
    IntT prod;
    if constexpr (std::is_same_v<IntT, std::int64_t>) {
      prod = t.weight_i64;
    } else {
      prod = t.weight_big;
    }
    for (int part : t.parts) {
      prod *= counts[part - 1];
      if (prod == 0) break;
    }
    num += prod;
  }
  return num;
}

template <typename IntT>
struct SweepPartial {
  std::uint64_t scanned = 0;
  std::vector<IntT> min_num, max_num;
  std::vector<std::vector<std::string>> argmin, argmax;
};

/// One sweep with a fixed numerator type; IntT = int64 is the certified
/// fast path, IntT = BigInt the always-correct fallback.
template <typename IntT>
std::vector<SweepPartial<IntT>> run_sweep(int n, std::span<const SweepDegree> sds, int max_d,
                                          SweepMode mode, int jobs, int shard_index,
                                          int shard_count) {
  std::size_t nd = sds.size();
  std::vector<SweepPartial<IntT>> partials(jobs);
  auto worker = [&](int w) {
    SweepPartial<IntT>& part = partials[w];
    part.min_num.assign(nd, IntT(0));
    part.max_num.assign(nd, IntT(0));
    part.argmin.assign(nd, {});
    part.argmax.assign(nd, {});
    std::vector<IntT> counts;
    auto visit = [&](const Graph& g) {
      if constexpr (std::is_same_v<IntT, std::int64_t>) {
        counts = *closed_walk_counts_int64(g, max_d);
      } else {
        counts = closed_walk_counts(g, max_d);
      }
      bool first = part.scanned == 0;
      ++part.scanned;
      std::string g6;  // emitted lazily, only for extremal candidates
      for (std::size_t i = 0; i < nd; ++i) {
        IntT num = sweep_numerator<IntT>(sds[i], counts);
        if (first || num <= part.min_num[i]) {
          if (g6.empty()) g6 = emit_graph6(g);
          if (first || num < part.min_num[i]) {
            part.min_num[i] = num;
            part.argmin[i].clear();
          }
          part.argmin[i].push_back(g6);
        }
        if (first || num >= part.max_num[i]) {
          if (g6.empty()) g6 = emit_graph6(g);
          if (first || num > part.max_num[i]) {
            part.max_num[i] = num;
            part.argmax[i].clear();
          }
          part.argmax[i].push_back(g6);
        }
      }
    };
    // Worker w covers residue shard_index + shard_count*w modulo
    // shard_count*jobs: the workers tile exactly the requested shard.
    if (mode == SweepMode::connected) {
      for_each_connected_graph(n, shard_index + shard_count * w, shard_count * jobs, visit);
    } else {
      for_each_labeled_tree(n, shard_index + shard_count * w, shard_count * jobs, visit);
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  return partials;
}

template <typename IntT>
void merge_sweep(const std::vector<SweepPartial<IntT>>& partials, std::size_t i,
                 ExtremalReport& r, const BigInt& d_factorial) {
  bool seeded = false;
  IntT min_num(0), max_num(0);
  for (const auto& p : partials) {
    if (p.scanned == 0) continue;
    if (!seeded || p.min_num[i] < min_num) min_num = p.min_num[i];
    if (!seeded || p.max_num[i] > max_num) max_num = p.max_num[i];
    seeded = true;
  }
  for (const auto& p : partials) {
    if (p.scanned == 0) continue;
    if (p.min_num[i] == min_num)
      r.argmin_graph6.insert(r.argmin_graph6.end(), p.argmin[i].begin(), p.argmin[i].end());
    if (p.max_num[i] == max_num)
      r.argmax_graph6.insert(r.argmax_graph6.end(), p.argmax[i].begin(), p.argmax[i].end());
    r.scanned += p.scanned;
  }
  std::sort(r.argmin_graph6.begin(), r.argmin_graph6.end());
  std::sort(r.argmax_graph6.begin(), r.argmax_graph6.end());
  r.min_value = Rational(BigInt(min_num), d_factorial);
  r.max_value = Rational(BigInt(max_num), d_factorial);
}

}  // namespace detail

/// Exhaustive Theorem-2 sweep over labeled connected graphs or labeled
/// trees of order n, several even degrees in one pass (the walk counts per
/// graph are shared across degrees). Throws ExtremalViolation if any graph
/// escapes [||P_n||_d^d, ||K_n||_d^d] (connected) or [.., ||S_n||_d^d]
/// (trees) -- which would falsify the theorem.
///
/// Values accumulate as numerators over the common denominator d!. The
/// int64 fast path is used only when the exact bound d! * ||K_n||_d^d
/// < 2^62 holds, so it is certified, not hoped for; otherwise the BigInt
/// route runs with identical results.
///
/// With shard_count > 1 only that residue slice of the space is scanned;
/// values must then still fall inside the theorem's interval, but attaining
/// the endpoints is not required (the extremal graphs may live elsewhere).
inline std::vector<ExtremalReport> verify_theorem2_multi(int n, std::span<const int> degrees,
                                                         SweepMode mode, int jobs = 1,
                                                         int shard_index = 0,
                                                         int shard_count = 1) {
  require(n >= 1, errc::invalid_parameter, "order must be >= 1");
  require(jobs >= 1, errc::invalid_parameter, "jobs must be >= 1");
  detail::check_shard(shard_index, shard_count);
  int max_d = 0;
  std::vector<detail::SweepDegree> sds;
  for (int d : degrees) {
    detail::require_norm_degree(d);
    sds.push_back(detail::make_sweep_degree(d));
    max_d = std::max(max_d, d);
  }
  bool fast = detail::int64_walks_safe(n, max_d);
  for (const auto& sd : sds) {
    if (!sd.weights_fit_i64) fast = false;
    Rational bound = complete_norm_closed_form(n, sd.d) * Rational(sd.d_factorial);
    if (rational_den(bound) != 1 || rational_num(bound) >= (BigInt(1) << 62)) fast = false;
  }

  std::vector<ExtremalReport> reports(sds.size());
  auto fill = [&](auto partials) {
    for (std::size_t i = 0; i < sds.size(); ++i) {
      reports[i].mode = mode;
      reports[i].n = n;
      reports[i].d = sds[i].d;
      detail::merge_sweep(partials, i, reports[i], sds[i].d_factorial);
    }
  };
  if (fast) {
    fill(detail::run_sweep<std::int64_t>(n, sds, max_d, mode, jobs, shard_index, shard_count));
  } else {
    fill(detail::run_sweep<BigInt>(n, sds, max_d, mode, jobs, shard_index, shard_count));
  }

  Graph path = family(FamilyId::path(n));
  for (std::size_t i = 0; i < sds.size(); ++i) {
    ExtremalReport& r = reports[i];
    r.path_value = chs_dth_power_exact(path, r.d);
    r.extremal_value = (mode == SweepMode::connected)
                           ? complete_norm_closed_form(n, r.d)
                           : Rational(int_pow(std::max(n - 1, 0), static_cast<unsigned>(r.d / 2)));
    bool out_of_bounds = r.min_value < r.path_value || r.max_value > r.extremal_value;
    bool full_scan = shard_count == 1;
    bool missed_endpoint =
        full_scan && (r.min_value != r.path_value || r.max_value != r.extremal_value);
    if (out_of_bounds || missed_endpoint) {
      fail(errc::extremal_violation,
           "n=" + std::to_string(n) + " d=" + std::to_string(r.d) + " min=" +
               to_fraction_string(r.min_value) + " path=" + to_fraction_string(r.path_value) +
               " max=" + to_fraction_string(r.max_value) + " expected max=" +
               to_fraction_string(r.extremal_value));
    }
  }
  return reports;
}

inline ExtremalReport verify_theorem2(int n, int d, SweepMode mode, int jobs = 1) {
  int ds[1] = {d};
  return verify_theorem2_multi(n, ds, mode, jobs).front();
}

// ---------------------------------------------------------------------------
// Theorem 3: norm bounds
// ---------------------------------------------------------------------------

/// One graph checked against the three sharp bounds tying ||G||_d to the
/// energy and the spectral norm. Slack = bound side minus attained side;
/// a negative slack beyond tolerance means the inequality failed.
struct BoundCheck {
  std::string graph6;
  int d = 0;
  bool energy_bound_ok = false;     ///< ||G||_d <= ||G||_* / 2
  bool spectral_lower_ok = false;   ///< ||K_n||_d/(n-1) * ||G|| <= ||G||_d
  bool spectral_upper_ok = false;   ///< ||G||_d <= binom(...)^(1/d) * ||G||
  double energy_slack = 0.0;
  double spectral_lower_slack = 0.0;
  double spectral_upper_slack = 0.0;
};

/// The upper-bound constant is the d-th root of binom(floor((n+d)/2)-1, d/2):
/// it equals ||diag(1,..,1,[0],-1,..,-1)||_d, whose d-th power is the
/// binomial. (Quoting the binomial without the root is a common slip; the
/// rootless version is a valid but non-sharp bound whose equality case --
/// the perfect matching -- fails for n >= 4.)
///
/// The overload taking a Spectrum lets sweeps reuse one eigensolve across
/// several degrees.
inline BoundCheck check_theorem3(const Graph& g, int d, const Spectrum& s) {
  detail::require_norm_degree(d);
  int n = g.order();
  BoundCheck b;
  b.graph6 = emit_graph6(g);
  b.d = d;

  auto p = s.power_sums(d);
  double h = h_via_recurrence<double>(p, d);
  double norm_d = h > 0.0 ? std::pow(h, 1.0 / d) : 0.0;
  double sn = spectral_norm(s);
  double en = energy(s);

  auto tol = [](double lhs, double rhs) { return 1e-9 * std::max({1.0, lhs, rhs}); };

  double energy_rhs = en / 2.0;
  b.energy_slack = energy_rhs - norm_d;
  b.energy_bound_ok = b.energy_slack >= -tol(norm_d, energy_rhs);

  if (n >= 2) {
    double kn_norm = std::pow(to_double(complete_norm_closed_form(n, d)), 1.0 / d);
    double lower = kn_norm / (n - 1) * sn;
    b.spectral_lower_slack = norm_d - lower;
    b.spectral_lower_ok = b.spectral_lower_slack >= -tol(lower, norm_d);
  } else {
    b.spectral_lower_slack = 0.0;
    b.spectral_lower_ok = true;  // the bound needs n >= 2
  }

  unsigned top = static_cast<unsigned>((n + d) / 2 - 1);
  double upper = std::pow(to_double(binomial(top, static_cast<unsigned>(d / 2))), 1.0 / d) * sn;
  b.spectral_upper_slack = upper - norm_d;
  b.spectral_upper_ok = b.spectral_upper_slack >= -tol(norm_d, upper);
  return b;
}

inline BoundCheck check_theorem3(const Graph& g, int d) {
  return check_theorem3(g, d, eigenvalues(g));
}

}  // namespace chs
