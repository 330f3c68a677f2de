// chs: CHS d-norms of simple graphs from the command line.
//
// Exit codes: 0 success, 2 argument/input errors, 3 a verify sweep found a
// value outside the proven extremal interval (never expected).

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "chs/chs.hpp"

namespace {

using namespace chs;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// graph input: exactly one of --graph6 / --edge-list / --family
// ---------------------------------------------------------------------------

struct GraphInput {
  std::string graph6;
  std::string edge_list_path;
  std::string family_spec;

  bool present() const {
    return !graph6.empty() || !edge_list_path.empty() || !family_spec.empty();
  }
};

FamilyId parse_family_spec(const std::string& spec) {
  require(spec.size() >= 2, errc::invalid_parameter, "family spec too short: '" + spec + "'");
  char kind = spec[0];
  std::string rest = spec.substr(1);
  auto as_int = [&](const std::string& tok) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      require(pos == tok.size() && v >= 1, errc::invalid_parameter,
              "bad family parameter '" + tok + "'");
      return v;
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail(errc::invalid_parameter, "bad family parameter '" + tok + "'");
    }
  };
  auto comma = rest.find(',');
  if (comma != std::string::npos) {
    require(kind == 'K', errc::invalid_parameter, "only K takes two parameters (K2,3)");
    return FamilyId::complete_bipartite(as_int(rest.substr(0, comma)),
                                        as_int(rest.substr(comma + 1)));
  }
  int n = as_int(rest);
  switch (kind) {
    case 'P': return FamilyId::path(n);
    case 'K': return FamilyId::complete(n);
    case 'S': return FamilyId::star(n);
    case 'C': return FamilyId::cycle(n);
    default:
      fail(errc::invalid_parameter, "family spec must start with P, K, S or C: '" + spec + "'");
  }
}

Graph load_graph(const GraphInput& in) {
  int sources = !in.graph6.empty() + !in.edge_list_path.empty() + !in.family_spec.empty();
  require(sources == 1, errc::invalid_parameter,
          "exactly one of --graph6, --edge-list, --family is required");
  if (!in.family_spec.empty()) return family(parse_family_spec(in.family_spec));
  if (!in.edge_list_path.empty()) {
    std::ifstream f(in.edge_list_path);
    require(f.good(), errc::invalid_parameter, "cannot open '" + in.edge_list_path + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_edge_list(buf.str());
  }
  std::string text = in.graph6;
  if (text == "-") {
    require(static_cast<bool>(std::getline(std::cin, text)), errc::invalid_parameter,
            "no graph6 record on stdin");
  }
  bool warn = false;
  Graph g = parse_graph6(text, &warn);
  if (warn) std::cerr << "warning: nonzero padding bits in graph6 record\n";
  return g;
}

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("--graph6", in.graph6, "graph6 record ('-' reads one line from stdin)");
  cmd->add_option("--edge-list", in.edge_list_path, "path to an edge-list file (\"n m\" header)");
  cmd->add_option("--family", in.family_spec,
                  "family spec: P<n>, K<n>, S<n>, C<n> or K<m>,<n> (1-based CLI, e.g. K2,3)");
}

enum class Format { text, tsv };

void add_format(CLI::App* cmd, Format& f) {
  cmd->add_option("--format", f, "output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::text}, {"tsv", Format::tsv}}));
}

int effective_max_n() {
  if (const char* env = std::getenv("CHS_MAX_N")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      fail(errc::invalid_parameter, std::string("CHS_MAX_N is not an integer: '") + env + "'");
    }
  }
  return 8;
}

// ---------------------------------------------------------------------------
// subcommand bodies
// ---------------------------------------------------------------------------

void run_spectrum(const GraphInput& in, Format format) {
  Graph g = load_graph(in);
  Spectrum s = eigenvalues(g);
  if (format == Format::tsv) {
    std::cout << "i\tlambda\n";
    for (int i = 0; i < s.size(); ++i) std::cout << i + 1 << '\t' << fmt(s.values[i]) << '\n';
    return;
  }
  std::cout << "graph: " << emit_graph6(g) << " (n=" << g.order() << ", m=" << g.edge_count()
            << ")\n";
  std::cout << "spectrum:";
  for (double v : s.values) std::cout << ' ' << fmt(v);
  std::cout << "\nenergy: " << fmt(energy(s)) << "\nspectral norm: " << fmt(spectral_norm(s))
            << "\nschatten-2: " << fmt(schatten(s, 2.0)) << '\n';
}

void run_norm(const GraphInput& in, int d, Format format) {
  NormReport r = chs_norm(load_graph(in), d);
  if (format == Format::tsv) {
    std::cout << "graph\td\texact_dth_power\tfloat_norm\troute_agreement\n";
    std::cout << r.graph6 << '\t' << r.d << '\t' << to_fraction_string(r.exact_dth_power) << '\t'
              << fmt(r.float_norm) << '\t' << fmt(r.route_agreement) << '\n';
    return;
  }
  std::cout << "graph: " << r.graph6 << "\nd: " << r.d
            << "\nexact d-th power: " << to_fraction_string(r.exact_dth_power)
            << "\nfloat norm: " << fmt(r.float_norm)
            << "\nroute agreement: " << fmt(r.route_agreement) << '\n';
}

void run_walks(const GraphInput& in, int k, Format format) {
  Graph g = load_graph(in);
  require(k >= 1, errc::invalid_parameter, "--k must be >= 1");
  auto counts = closed_walk_counts(g, k);
  if (format == Format::tsv) {
    std::cout << "k\tC_k\n";
    for (int i = 1; i <= k; ++i) std::cout << i << '\t' << counts[i - 1].str() << '\n';
    return;
  }
  std::cout << "closed walks in " << emit_graph6(g) << ":\n";
  for (int i = 1; i <= k; ++i) std::cout << "C_" << i << " = " << counts[i - 1].str() << '\n';
}

void run_partitions(int d, bool no_ones, Format format) {
  require(d >= 0, errc::invalid_parameter, "--d must be >= 0");
  auto parts = no_ones ? partitions_without_ones(d) : partitions_of(d);
  auto render = [](const Partition& p) {
    std::string s;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
      if (i > 0) s += ',';
      s += std::to_string(p.parts[i]);
    }
    return s.empty() ? std::string("-") : s;
  };
  if (format == Format::tsv) {
    std::cout << "partition\tz\n";
    for (const auto& p : parts) std::cout << render(p) << '\t' << z_of(p).str() << '\n';
    return;
  }
  std::cout << "P(" << d << ") = " << partition_count(d).str() << "; listing " << parts.size()
            << (no_ones ? " partitions without part 1" : " partitions") << ":\n";
  for (const auto& p : parts) std::cout << '(' << render(p) << ")  z = " << z_of(p).str() << '\n';
}

void run_pair(const GraphInput& in, Format format) {
  Graph f = load_graph(in);
  auto [g, h] = make_cospectral_pair(f);
  if (format == Format::tsv) {
    std::cout << "role\tgraph6\tn\tm\n";
    std::cout << "disjoint_union\t" << emit_graph6(g) << '\t' << g.order() << '\t'
              << g.edge_count() << '\n';
    std::cout << "double_cover\t" << emit_graph6(h) << '\t' << h.order() << '\t' << h.edge_count()
              << '\n';
    return;
  }
  std::cout << "F + F:    " << emit_graph6(g) << "\nF x K2:   " << emit_graph6(h)
            << "\nsame singular values, different spectra (F nonbipartite)\n";
}

void run_compare(const GraphInput& in, const GraphInput& second, int d_max, Format format) {
  Graph g = Graph::empty(1), h = Graph::empty(1);
  if (second.present()) {
    g = load_graph(in);
    h = load_graph(second);
  } else {
    std::tie(g, h) = make_cospectral_pair(load_graph(in));
  }
  auto found = distinguish(g, h, d_max);
  int last = found ? *found : d_max;
  if (format == Format::tsv) {
    std::cout << "d\tfirst\tsecond\tequal\n";
    for (int d = 2; d <= last; d += 2) {
      Rational a = chs_dth_power_exact(g, d);
      Rational b = chs_dth_power_exact(h, d);
      std::cout << d << '\t' << to_fraction_string(a) << '\t' << to_fraction_string(b) << '\t'
                << (a == b ? "yes" : "no") << '\n';
    }
    return;
  }
  std::cout << "first graph:  " << emit_graph6(g) << "\nsecond graph: " << emit_graph6(h) << '\n';
  if (found) {
    std::cout << "first distinguishing d = " << *found << ": "
              << to_fraction_string(chs_dth_power_exact(g, *found)) << " vs "
              << to_fraction_string(chs_dth_power_exact(h, *found)) << '\n';
  } else {
    std::cout << "no distinguishing even d <= " << d_max << " found\n";
  }
  std::cout << "exact d-th powers:\n";
  for (int d = 2; d <= last; d += 2) {
    Rational a = chs_dth_power_exact(g, d);
    Rational b = chs_dth_power_exact(h, d);
    std::cout << "  d=" << d << ": " << to_fraction_string(a) << " vs " << to_fraction_string(b)
              << (a == b ? "" : "  <-- differ") << '\n';
  }
}

void run_verify(const std::string& mode_name, int n, int d, int jobs, int shard_index,
                int shard_count, Format format) {
  SweepMode mode;
  if (mode_name == "connected") {
    mode = SweepMode::connected;
  } else if (mode_name == "trees") {
    mode = SweepMode::trees;
  } else {
    fail(errc::invalid_parameter, "--mode must be 'connected' or 'trees'");
  }
  int cap = effective_max_n();
  require(n <= cap, errc::order_too_large,
          "n=" + std::to_string(n) + " exceeds CHS_MAX_N cap " + std::to_string(cap));
  int ds[1] = {d};
  ExtremalReport r = verify_theorem2_multi(n, ds, mode, jobs, shard_index, shard_count).front();

  std::size_t preview = 5;
  if (format == Format::tsv) {
    std::cout << "mode\tn\td\tscanned\tmin\tmax\tpath_value\textremal_value\targmin_count\targmax_"
                 "count\n";
    std::cout << mode_name << '\t' << r.n << '\t' << r.d << '\t' << r.scanned << '\t'
              << to_fraction_string(r.min_value) << '\t' << to_fraction_string(r.max_value) << '\t'
              << to_fraction_string(r.path_value) << '\t' << to_fraction_string(r.extremal_value)
              << '\t' << r.argmin_graph6.size() << '\t' << r.argmax_graph6.size() << '\n';
    return;
  }
  std::cout << "mode: " << mode_name << ", n=" << r.n << ", d=" << r.d
            << ", scanned " << r.scanned << " graphs\n"
            << "min |G|_d^d = " << to_fraction_string(r.min_value)
            << "   (path value " << to_fraction_string(r.path_value) << ")\n"
            << "max |G|_d^d = " << to_fraction_string(r.max_value) << "   (expected "
            << to_fraction_string(r.extremal_value) << ")\n"
            << "argmin labelings: " << r.argmin_graph6.size()
            << ", argmax labelings: " << r.argmax_graph6.size() << '\n';
  for (std::size_t i = 0; i < std::min(preview, r.argmin_graph6.size()); ++i)
    std::cout << "  argmin[" << i << "] = " << r.argmin_graph6[i] << '\n';
  for (std::size_t i = 0; i < std::min(preview, r.argmax_graph6.size()); ++i)
    std::cout << "  argmax[" << i << "] = " << r.argmax_graph6[i] << '\n';
  std::cout << "no extremal violations\n";
}

void run_bounds(const GraphInput& in, int d, Format format) {
  BoundCheck b = check_theorem3(load_graph(in), d);
  auto word = [](bool ok) { return ok ? "ok" : "VIOLATED"; };
  if (format == Format::tsv) {
    std::cout << "graph\td\tenergy_bound\tspectral_lower\tspectral_upper\tenergy_slack\tspectral_"
                 "lower_slack\tspectral_upper_slack\n";
    std::cout << b.graph6 << '\t' << b.d << '\t' << word(b.energy_bound_ok) << '\t'
              << word(b.spectral_lower_ok) << '\t' << word(b.spectral_upper_ok) << '\t'
              << fmt(b.energy_slack) << '\t' << fmt(b.spectral_lower_slack) << '\t'
              << fmt(b.spectral_upper_slack) << '\n';
    return;
  }
  std::cout << "graph: " << b.graph6 << ", d=" << b.d << '\n'
            << "|G|_d <= |G|_*/2:            " << word(b.energy_bound_ok)
            << " (slack " << fmt(b.energy_slack) << ")\n"
            << "|K_n|_d/(n-1) |G| <= |G|_d:  " << word(b.spectral_lower_ok) << " (slack "
            << fmt(b.spectral_lower_slack) << ")\n"
            << "|G|_d <= binom^(1/d) |G|:    " << word(b.spectral_upper_ok) << " (slack "
            << fmt(b.spectral_upper_slack) << ")\n";
}

void run_table(const GraphInput& in, int d_max, Format format) {
  Graph g = load_graph(in);
  require(d_max >= 2, errc::degree_too_small, "--d-max must be >= 2");
  auto counts = closed_walk_counts(g, d_max);
  Spectrum s = eigenvalues(g);
  if (format == Format::tsv) {
    std::cout << "d\texact_dth_power\tfloat_norm\n";
  } else {
    std::cout << "CHS norms of " << emit_graph6(g) << ":\n";
  }
  for (int d = 2; d <= d_max; d += 2) {
    Rational exact = chs_dth_power_exact(counts, d);
    auto p = s.power_sums(d);
    double h = h_via_recurrence<double>(p, d);
    double norm = h > 0.0 ? std::pow(h, 1.0 / d) : 0.0;
    if (format == Format::tsv) {
      std::cout << d << '\t' << to_fraction_string(exact) << '\t' << fmt(norm) << '\n';
    } else {
      std::cout << "  d=" << d << ": exact " << to_fraction_string(exact) << ", float norm "
                << fmt(norm) << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CHS d-norms of simple graphs: exact walk-count route, floating spectra,\n"
               "and exhaustive extremal verification at desk scale."};
  app.require_subcommand(1);

  Format format = Format::text;
  GraphInput in, second;
  int d = 2, k = 1, d_max = 20, n = 5, jobs = 1, shard_index = 0, shard_count = 1;
  bool no_ones = false;
  std::string mode_name = "connected";

  auto* spectrum = app.add_subcommand("spectrum", "adjacency eigenvalues and classical norms");
  add_graph_input(spectrum, in);
  add_format(spectrum, format);
  spectrum->callback([&] { run_spectrum(in, format); });

  auto* norm = app.add_subcommand("norm", "CHS d-norm by exact and float routes");
  add_graph_input(norm, in);
  norm->add_option("--d", d, "even degree >= 2")->required();
  add_format(norm, format);
  norm->callback([&] { run_norm(in, d, format); });

  auto* walks = app.add_subcommand("walks", "closed-walk counts C_1..C_k");
  add_graph_input(walks, in);
  walks->add_option("--k", k, "largest walk length")->required();
  add_format(walks, format);
  walks->callback([&] { run_walks(in, k, format); });

  auto* partitions = app.add_subcommand("partitions", "partitions of d with centralizer sizes");
  partitions->add_option("--d", d, "weight")->required();
  partitions->add_flag("--no-ones", no_ones, "only partitions with all parts >= 2");
  add_format(partitions, format);
  partitions->callback([&] { run_partitions(d, no_ones, format); });

  auto* pair = app.add_subcommand("pair", "build (F+F, FxK2) from a nonbipartite F");
  add_graph_input(pair, in);
  add_format(pair, format);
  pair->callback([&] { run_pair(in, format); });

  auto* compare = app.add_subcommand(
      "compare", "exact d-th powers of two graphs and the first distinguishing d;\n"
                 "with a single input F, compares the pair (F+F, FxK2)");
  add_graph_input(compare, in);
  compare->add_option("--graph6-b", second.graph6, "second graph, graph6");
  compare->add_option("--edge-list-b", second.edge_list_path, "second graph, edge-list path");
  compare->add_option("--family-b", second.family_spec, "second graph, family spec");
  compare->add_option("--d-max", d_max, "search cutoff (even)");
  add_format(compare, format);
  compare->callback([&] { run_compare(in, second, d_max, format); });

  auto* verify = app.add_subcommand("verify", "exhaustive extremal sweep at one (n, d)");
  verify->add_option("--mode", mode_name, "connected | trees")->required();
  verify->add_option("--n", n, "graph order (capped by CHS_MAX_N, default 8)")->required();
  verify->add_option("--d", d, "even degree >= 2")->required();
  verify->add_option("--jobs", jobs, "worker threads");
  verify->add_option("--shard-index", shard_index, "this shard (0-based)");
  verify->add_option("--shard-count", shard_count, "total shards");
  add_format(verify, format);
  verify->callback(
      [&] { run_verify(mode_name, n, d, jobs, shard_index, shard_count, format); });

  auto* bounds = app.add_subcommand("bounds", "energy/spectral bound checks for one graph");
  add_graph_input(bounds, in);
  bounds->add_option("--d", d, "even degree >= 2")->required();
  add_format(bounds, format);
  bounds->callback([&] { run_bounds(in, d, format); });

  auto* table = app.add_subcommand("table", "exact + float norms for all even d up to --d-max");
  add_graph_input(table, in);
  table->add_option("--d-max", d_max, "largest even degree")->required();
  add_format(table, format);
  table->callback([&] { run_table(in, d_max, format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const chs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == chs::errc::extremal_violation ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
