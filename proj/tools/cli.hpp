#pragma once

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spantree/spantree.hpp"

namespace spantree::cli {

inline constexpr const char* kVersion = "1.0.0";

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline GraphFormat detect_format(const std::string& path,
                                 const std::string& override_name) {
  if (override_name == "graph6")
    return GraphFormat::graph6;
  if (override_name == "edgelist")
    return GraphFormat::edge_list;
  return std::filesystem::path(path).extension() == ".g6"
             ? GraphFormat::graph6
             : GraphFormat::edge_list;
}

inline Graph load_graph(const std::string& path,
                        const std::string& override_name) {
  return parse_graph(read_file(path), detect_format(path, override_name));
}

inline void emit_graph(std::ostream& out, const Graph& g,
                       const std::string& format) {
  if (format == "graph6")
    out << write_graph6(g) << "\n";
  else
    out << write_edge_list(g);
}

inline std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

// -infinity renders as null in JSON and as "-inf" in text output.
inline nlohmann::ordered_json log_json(double v) {
  if (std::isinf(v))
    return nullptr;
  return v;
}

inline std::string log_text(double v) {
  return std::isinf(v) ? "-inf" : format_fixed(v, 12);
}

inline std::vector<int> parse_csv_ints(const std::string& csv) {
  std::vector<int> out;
  if (csv.empty())
    return out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    int value = std::stoi(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument("invalid integer in list: " + item);
    out.push_back(value);
  }
  return out;
}

struct VerifyStats {
  int graphs = 0;
  int pairs = 0;
  int oracle_checked = 0;
};

// Cross-checks one corpus: the oracle triangle per graph (m <= 16) and the
// sandwich + equality characterization per unordered pair of factors with
// n >= 2. Returns the first failure message, if any.
inline std::optional<std::string> verify_corpus(
    const std::vector<std::pair<std::string, Graph>>& corpus,
    VerifyStats& stats) {
  for (const auto& [name, g] : corpus) {
    ++stats.graphs;
    if (g.m() <= 16) {
      ++stats.oracle_checked;
      BigInt mt = tau_exact(g);
      BigInt dc = tau_deletion_contraction(g);
      BigInt en = tau_subset_enumeration(g);
      if (mt != dc || mt != en)
        return "oracle mismatch on " + name + ": matrix-tree " +
               mt.to_string() + ", deletion-contraction " + dc.to_string() +
               ", enumeration " + en.to_string();
    }
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = i; j < corpus.size(); ++j) {
      const auto& [name1, g1] = corpus[i];
      const auto& [name2, g2] = corpus[j];
      if (g1.n() < 2 || g2.n() < 2)
        continue;
      ++stats.pairs;
      BoundsReport r = bounds_report(g1, g2);
      if (!r.sandwich_ok)
        return "sandwich violated for (" + name1 + ", " + name2 + ")";
      bool lower_tight = log_gap(r.log_tau, r.log_lower) <= kLogSlack;
      bool upper_tight = log_gap(r.log_tau, r.log_upper) <= kLogSlack;
      if (lower_tight != r.equality_lower_predicted)
        return "lower equality characterization failed for (" + name1 + ", " +
               name2 + ")";
      if (upper_tight != r.equality_upper_predicted)
        return "upper equality characterization failed for (" + name1 + ", " +
               name2 + ")";
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Dispatch one invocation. `args` excludes the program name; all output
/// goes to `out`, diagnostics to `err`. Returns the process exit status.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"spanning-tree counts, Laplacian spectra, and sharp bounds "
               "for Cartesian products"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  // gen <family> <n>
  std::string gen_family;
  int gen_n = 0;
  std::string gen_format = "edgelist";
  auto* gen = app.add_subcommand("gen", "generate a named family graph");
  gen->add_option("family", gen_family, "complete|path|cycle|star|fan|wheel")
      ->required();
  gen->add_option("n", gen_n, "vertex count")->required();
  gen->add_option("--format", gen_format, "output format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  // tree --prufer <csv>
  std::string tree_seq;
  std::string tree_format = "edgelist";
  auto* tree = app.add_subcommand("tree", "decode a Prufer sequence");
  tree->add_option("--prufer", tree_seq,
                   "comma-separated sequence; empty decodes the 2-vertex tree")
      ->required();
  tree->add_option("--format", tree_format, "output format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  // random <n> <p> --seed <s>
  int random_n = 0;
  double random_p = 0.0;
  std::uint64_t random_seed = 0;
  std::string random_format = "edgelist";
  auto* random =
      app.add_subcommand("random", "seeded G(n,p) graph (SplitMix64 stream)");
  random->add_option("n", random_n, "vertex count")->required();
  random->add_option("p", random_p, "edge probability in [0,1]")->required();
  random->add_option("--seed", random_seed, "64-bit stream seed");
  random->add_option("--format", random_format, "output format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  // count --file <f>
  std::string count_file, count_format = "auto";
  auto* count =
      app.add_subcommand("count", "exact spanning-tree count (matrix-tree)");
  count->add_option("--file", count_file, "input graph file")->required();
  count->add_option("--format", count_format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

  // spectrum --file <f>
  std::string spectrum_file, spectrum_format = "auto";
  auto* spectrum = app.add_subcommand("spectrum", "Laplacian eigenvalues");
  spectrum->add_option("--file", spectrum_file, "input graph file")->required();
  spectrum->add_option("--format", spectrum_format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

  // product --g1 <f> --g2 <f>
  std::string product_g1, product_g2, product_in_format = "auto";
  std::string product_format = "edgelist";
  auto* product =
      app.add_subcommand("product", "Cartesian product of two graphs");
  product->add_option("--g1", product_g1, "first factor file")->required();
  product->add_option("--g2", product_g2, "second factor file")->required();
  product->add_option("--input-format", product_in_format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  product->add_option("--format", product_format, "output format")
      ->check(CLI::IsMember({"edgelist", "graph6"}));

  // bounds --g1 <f> --g2 <f> [--json]
  std::string bounds_g1, bounds_g2, bounds_format = "auto";
  bool bounds_json = false;
  auto* bounds = app.add_subcommand(
      "bounds", "exact count vs. the product lower/upper bounds");
  bounds->add_option("--g1", bounds_g1, "first factor file")->required();
  bounds->add_option("--g2", bounds_g2, "second factor file")->required();
  bounds->add_option("--format", bounds_format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));
  bounds->add_flag("--json", bounds_json, "emit the JSON report");

  // rook <n1> <n2>
  int rook_n1 = 0, rook_n2 = 0;
  auto* rook =
      app.add_subcommand("rook", "closed-form count for K_n1 x K_n2");
  rook->add_option("n1", rook_n1, "first order")->required();
  rook->add_option("n2", rook_n2, "second order")->required();

  // oracle --file <f> [--method ...]
  std::string oracle_file, oracle_format = "auto", oracle_method = "both";
  auto* oracle = app.add_subcommand(
      "oracle", "brute-force counters (slow; strict size limits)");
  oracle->add_option("--file", oracle_file, "input graph file")->required();
  oracle->add_option("--method", oracle_method,
                     "deletion-contraction, subset enumeration, or both")
      ->check(CLI::IsMember({"dc", "enum", "both"}));
  oracle->add_option("--format", oracle_format, "input format")
      ->check(CLI::IsMember({"auto", "edgelist", "graph6"}));

  // verify --corpus <dir>
  std::string verify_dir;
  auto* verify = app.add_subcommand(
      "verify", "cross-check bounds, equality cases, and oracles on a corpus");
  verify->add_option("--corpus", verify_dir, "directory of .edges/.g6 files")
      ->required();

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("spantree");
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (gen->parsed()) {
      auto family = family_from_name(gen_family);
      if (!family)
        throw std::domain_error("unknown family: " + gen_family);
      detail::emit_graph(out, generate(*family, gen_n), gen_format);
    } else if (tree->parsed()) {
      std::vector<int> seq = detail::parse_csv_ints(tree_seq);
      detail::emit_graph(out, prufer_decode(seq, static_cast<int>(seq.size()) + 2),
                         tree_format);
    } else if (random->parsed()) {
      detail::emit_graph(out, random_graph(random_n, random_p, random_seed),
                         random_format);
    } else if (count->parsed()) {
      out << tau_exact(detail::load_graph(count_file, count_format)).to_string()
          << "\n";
    } else if (spectrum->parsed()) {
      Spectrum s =
          laplacian_spectrum(detail::load_graph(spectrum_file, spectrum_format));
      for (double v : s.values)
        out << detail::format_fixed(v, 12) << "\n";
    } else if (product->parsed()) {
      Graph g1 = detail::load_graph(product_g1, product_in_format);
      Graph g2 = detail::load_graph(product_g2, product_in_format);
      detail::emit_graph(out, cartesian_product(g1, g2), product_format);
    } else if (bounds->parsed()) {
      Graph g1 = detail::load_graph(bounds_g1, bounds_format);
      Graph g2 = detail::load_graph(bounds_g2, bounds_format);
      BoundsReport r = bounds_report(g1, g2);
      if (bounds_json) {
        nlohmann::ordered_json j;
        j["n1"] = g1.n();
        j["n2"] = g2.n();
        j["tau"] = r.tau_exact_product.to_string();
        j["log_tau"] = detail::log_json(r.log_tau);
        j["log_lower"] = detail::log_json(r.log_lower);
        j["log_upper"] = detail::log_json(r.log_upper);
        j["equality_lower"] = r.equality_lower_predicted;
        j["equality_upper"] = r.equality_upper_predicted;
        j["sandwich_ok"] = r.sandwich_ok;
        out << j.dump() << "\n";
      } else {
        out << "tau = " << r.tau_exact_product.to_string() << "\n"
            << "log_tau = " << detail::log_text(r.log_tau) << "\n"
            << "log_lower = " << detail::log_text(r.log_lower) << "\n"
            << "log_upper = " << detail::log_text(r.log_upper) << "\n"
            << "equality_lower = " << (r.equality_lower_predicted ? "true" : "false")
            << "\n"
            << "equality_upper = " << (r.equality_upper_predicted ? "true" : "false")
            << "\n"
            << "sandwich_ok = " << (r.sandwich_ok ? "true" : "false") << "\n";
      }
    } else if (rook->parsed()) {
      out << rook_tau(rook_n1, rook_n2).to_string() << "\n";
    } else if (oracle->parsed()) {
      Graph g = detail::load_graph(oracle_file, oracle_format);
      if (oracle_method == "dc" || oracle_method == "both") {
        if (MultiGraph(g).distinct_edges() > 16)
          throw std::length_error(
              "oracle deletion-contraction limited to m <= 16");
        out << "deletion-contraction: "
            << tau_deletion_contraction(g).to_string() << "\n";
      }
      if (oracle_method == "enum" || oracle_method == "both")
        out << "subset-enumeration: " << tau_subset_enumeration(g).to_string()
            << "\n";
    } else if (verify->parsed()) {
      std::vector<std::filesystem::path> files;
      for (const auto& entry : std::filesystem::directory_iterator(verify_dir)) {
        if (!entry.is_regular_file())
          continue;
        auto ext = entry.path().extension();
        if (ext == ".edges" || ext == ".g6")
          files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end());
      if (files.empty())
        throw std::runtime_error("no .edges or .g6 files in corpus directory");
      std::vector<std::pair<std::string, Graph>> corpus;
      corpus.reserve(files.size());
      for (const auto& path : files) {
        try {
          corpus.emplace_back(path.filename().string(),
                              detail::load_graph(path.string(), "auto"));
        } catch (const std::exception& e) {
          throw std::runtime_error(path.filename().string() + ": " + e.what());
        }
      }
      detail::VerifyStats stats;
      auto failure = detail::verify_corpus(corpus, stats);
      if (failure) {
        err << "FAIL: " << *failure << "\n";
        return 1;
      }
      out << "verified " << stats.graphs << " graphs (" << stats.oracle_checked
          << " against oracles) and " << stats.pairs
          << " factor pairs: all checks passed\n";
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace spantree::cli
