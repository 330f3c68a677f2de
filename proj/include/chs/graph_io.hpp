#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "chs/error.hpp"
#include "chs/graph.hpp"

namespace chs {

/// One graph6 record: the printable text and the graph it decodes to.
struct Graph6Record {
  std::string text;
  Graph decoded;
};

namespace detail {

constexpr std::string_view kGraph6Header = ">>graph6<<";

/// Decode the N(n) order prefix; returns the number of characters consumed.
/// Short form (1 char) for n <= 62, '~' + 3 chars up to 258047,
/// '~~' + 6 chars up to 2^36 - 1.
inline std::size_t parse_graph6_order(std::string_view body, std::uint64_t& n_out) {
  require(!body.empty(), errc::truncated_bits, "graph6 record has no order prefix");
  auto value_at = [&](std::size_t pos) -> std::uint64_t {
    require(pos < body.size(), errc::truncated_bits, "graph6 order prefix cut short");
    unsigned char c = static_cast<unsigned char>(body[pos]);
    require(c >= 63 && c <= 126, errc::character_out_of_range,
            "graph6 character " + std::to_string(int(c)) + " outside 63..126");
    return c - 63;
  };
  if (value_at(0) != 63) {
    n_out = value_at(0);
    return 1;
  }
  if (body.size() >= 2 && static_cast<unsigned char>(body[1]) == 126) {
    std::uint64_t n = 0;
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value_at(i);
    n_out = n;
    return 8;
  }
  std::uint64_t n = 0;
  for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | value_at(i);
  n_out = n;
  return 4;
}

inline std::string emit_graph6_order(std::uint64_t n) {
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else if (n <= ((std::uint64_t(1) << 36) - 1)) {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    fail(errc::invalid_parameter, "order too large for graph6");
  }
  return out;
}

}  // namespace detail

/// Parse one graph6 record (optional ">>graph6<<" header tolerated).
///
/// Pair bits stream column-major -- (0,1), (0,2), (1,2), (0,3), ... -- six
/// bits per character, most significant bit first, character value = bits+63.
/// If `nonzero_padding` is non-null it reports set bits found past the
/// n(n-1)/2 payload (tolerated on parse, never produced on emit).
inline Graph parse_graph6(std::string_view text, bool* nonzero_padding = nullptr) {
  if (nonzero_padding != nullptr) *nonzero_padding = false;
  if (text.starts_with(">>")) {
    require(text.starts_with(detail::kGraph6Header), errc::malformed_header,
            "header must be exactly '>>graph6<<'");
    text.remove_prefix(detail::kGraph6Header.size());
  }
  require(!text.empty(), errc::malformed_header, "empty graph6 record");

  std::uint64_t n_raw = 0;
  std::size_t used = detail::parse_graph6_order(text, n_raw);
  require(n_raw >= 1, errc::invalid_parameter, "graph6 record of order 0 unsupported");
  require(n_raw <= 100000, errc::order_too_large, "refusing graph6 order above 100000");
  int n = static_cast<int>(n_raw);
  std::string_view body = text.substr(used);

  std::size_t pair_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t want = (pair_bits + 5) / 6;
  require(body.size() >= want, errc::truncated_bits,
          "need " + std::to_string(want) + " body characters, got " + std::to_string(body.size()));
  require(body.size() <= want, errc::trailing_garbage,
          std::to_string(body.size() - want) + " characters past the payload");

  std::vector<bool> bits(pair_bits, false);
  for (std::size_t idx = 0; idx < want; ++idx) {
    unsigned char c = static_cast<unsigned char>(body[idx]);
    require(c >= 63 && c <= 126, errc::character_out_of_range,
            "graph6 character " + std::to_string(int(c)) + " outside 63..126");
    unsigned v = c - 63;
    for (int k = 0; k < 6; ++k) {
      std::size_t b = idx * 6 + k;
      bool bit = (v >> (5 - k)) & 1u;
      if (b < pair_bits) {
        bits[b] = bit;
      } else if (bit && nonzero_padding != nullptr) {
        *nonzero_padding = true;
      }
    }
  }
  return Graph::from_pair_bits(n, bits);
}

inline Graph6Record parse_graph6_record(std::string_view text) {
  return Graph6Record{std::string(text), parse_graph6(text)};
}

/// Canonical (shortest order prefix, zero padding) graph6 encoding.
inline std::string emit_graph6(const Graph& g) {
  std::string out = detail::emit_graph6_order(static_cast<std::uint64_t>(g.order()));
  std::size_t pair_bits = g.pair_count();
  unsigned v = 0;
  int filled = 0;
  for (std::size_t b = 0; b < pair_bits; ++b) {
    v = (v << 1) | (g.pair_bit(b) ? 1u : 0u);
    if (++filled == 6) {
      out.push_back(static_cast<char>(v + 63));
      v = 0;
      filled = 0;
    }
  }
  if (filled != 0) out.push_back(static_cast<char>((v << (6 - filled)) + 63));
  return out;
}

/// Edge-list format: first line "n m", then m lines "i j" with 1-based
/// endpoints. Tokenization is whitespace-based, so line breaks are cosmetic.
inline Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  require(tokens.size() >= 2, errc::count_mismatch, "edge list needs a leading 'n m' line");

  auto as_int = [](const std::string& tok) -> long long {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &pos);
    } catch (const std::exception&) {
      fail(errc::non_integer_token, "token '" + tok + "'");
    }
    require(pos == tok.size(), errc::non_integer_token, "token '" + tok + "'");
    return v;
  };

  long long n = as_int(tokens[0]);
  long long m = as_int(tokens[1]);
  require(n >= 1, errc::invalid_parameter, "order must be >= 1");
  require(m >= 0, errc::invalid_parameter, "edge count must be >= 0");
  require(static_cast<long long>(tokens.size()) == 2 + 2 * m, errc::count_mismatch,
          "declared " + std::to_string(m) + " edges, found " +
              std::to_string(tokens.size() - 2) + " endpoint tokens");

  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    long long i = as_int(tokens[2 + 2 * e]);
    long long j = as_int(tokens[3 + 2 * e]);
    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

/// Inverse of parse_edge_list; edges sorted lexicographically, 1-based.
inline std::string emit_edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  g.for_each_edge([&](int i, int j) { edges.emplace_back(i + 1, j + 1); });
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [i, j] : edges) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace chs
