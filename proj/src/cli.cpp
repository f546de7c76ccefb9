#include "pdom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "pdom/conjecture.hpp"
#include "pdom/domination.hpp"
#include "pdom/generators.hpp"
#include "pdom/io.hpp"

namespace pdom::cli {

namespace {

enum class OutputFormat { kTable, kRecords, kDot };

/// One graph source: exactly one of the three fields is set.
struct InputSpec {
  std::string gen;
  std::string g6;
  std::string file;
};

struct RunConfig {
  InputSpec input;
  InputSpec second;
  std::string p = "1/1";
  OutputFormat format = OutputFormat::kTable;
  bool all_p = false;
  bool dot = false;
  int max_order = 4;
  bool include_disconnected = false;
  std::string graphs_file;
  unsigned threads = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// A file holding whitespace-separated tokens on a content line is an edge
// list; otherwise it is graph6.
Graph parse_graph_file(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (line.find_first_of(" \t") != std::string::npos) return parse_edge_list(text);
    return parse_graph6(line);
  }
  return parse_edge_list(text);
}

Graph load(const InputSpec& spec, const char* flag_suffix) {
  const int given = int(!spec.gen.empty()) + int(!spec.g6.empty()) + int(!spec.file.empty());
  if (given != 1) {
    throw std::invalid_argument(std::string("exactly one of --gen") + flag_suffix + ", --g6" +
                                flag_suffix + ", --file" + flag_suffix + " is required");
  }
  if (!spec.gen.empty()) return generate(spec.gen);
  if (!spec.g6.empty()) return parse_graph6(spec.g6);
  return parse_graph_file(read_file(spec.file));
}

std::string coverage_text(const Graph& g, VertexSet s) {
  return std::to_string(g.closed_neighborhood(s).size()) + "/" + std::to_string(g.order());
}

int cmd_gamma(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load(cfg.input, "");
  const Proportion p = Proportion::parse(cfg.p);
  const SolveResult result = gamma_p(g, p);
  const int target = coverage_target(g.order(), p);
  switch (cfg.format) {
    case OutputFormat::kDot:
      out << write_dot(g, result.witness);
      break;
    case OutputFormat::kRecords:
      out << "# graph\tp\ttarget\tgamma_p\twitness\tcoverage\n";
      out << write_graph6(g) << '\t' << p.to_string() << '\t' << target << '\t'
          << result.gamma_p << '\t' << result.witness.to_string() << '\t'
          << coverage_text(g, result.witness) << '\n';
      break;
    case OutputFormat::kTable:
      out << "graph = " << write_graph6(g) << '\n'
          << "order = " << g.order() << '\n'
          << "p = " << p.to_string() << '\n'
          << "target = " << target << '\n'
          << "gamma_p = " << result.gamma_p << '\n'
          << "witness = " << result.witness.to_string() << '\n'
          << "coverage = " << coverage_text(g, result.witness) << '\n';
      break;
  }
  return kOk;
}

int cmd_influence(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load(cfg.input, "");
  std::vector<Proportion> sweep;
  if (cfg.all_p) {
    if (g.empty()) throw std::invalid_argument("--all-p needs a nonempty graph");
    for (int k = 1; k <= g.order(); ++k) sweep.emplace_back(k, g.order());
  } else {
    sweep.push_back(Proportion::parse(cfg.p));
  }

  VertexSet intersection = g.vertices();
  std::vector<std::pair<Proportion, GammaPSetFamily>> rows;
  for (Proportion p : sweep) {
    auto family = all_gamma_p_sets(g, p);
    VertexSet influencing;
    for (VertexSet s : family.sets) influencing |= s;
    intersection &= influencing;
    rows.emplace_back(p, std::move(family));
  }
  auto union_of = [](const GammaPSetFamily& f) {
    VertexSet u;
    for (VertexSet s : f.sets) u |= s;
    return u;
  };

  switch (cfg.format) {
    case OutputFormat::kDot:
      out << write_dot(g, cfg.all_p ? intersection : union_of(rows.front().second));
      break;
    case OutputFormat::kRecords:
      out << "# p\tgamma_p\tsets\tinfluencing\n";
      for (const auto& [p, family] : rows) {
        out << p.to_string() << '\t' << family.size << '\t' << family.sets.size() << '\t'
            << union_of(family).to_string() << '\n';
      }
      if (cfg.all_p) out << "all\t-\t-\t" << intersection.to_string() << '\n';
      break;
    case OutputFormat::kTable:
      for (const auto& [p, family] : rows) {
        out << "p = " << p.to_string() << "  gamma_p = " << family.size
            << "  sets = " << family.sets.size() << "  influencing = "
            << union_of(family).to_string() << '\n';
      }
      if (cfg.all_p) out << "intersection = " << intersection.to_string() << '\n';
      break;
  }
  return kOk;
}

int cmd_enumerate(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::kDot) {
    throw std::invalid_argument("enumerate supports table and records output only");
  }
  const Graph g = load(cfg.input, "");
  const auto family = all_gamma_p_sets(g, Proportion::parse(cfg.p));
  if (cfg.format == OutputFormat::kRecords) out << "# size\tset\n";
  for (VertexSet s : family.sets) {
    if (cfg.format == OutputFormat::kRecords) out << family.size << '\t';
    out << s.to_string() << '\n';
  }
  return kOk;
}

int cmd_scan(const RunConfig& cfg, std::ostream& out) {
  const Proportion p = Proportion::parse(cfg.p);
  ScanSummary summary;
  if (!cfg.graphs_file.empty()) {
    auto family = parse_graph6_lines(read_file(cfg.graphs_file));
    summary = scan_family(std::move(family), p, cfg.threads);
  } else {
    ScanOptions options;
    options.include_disconnected = cfg.include_disconnected;
    options.threads = cfg.threads;
    summary = scan_conjecture(cfg.max_order, p, options);
  }
  out << "# g6_g\tg6_h\tp\tgp_g\tgp_h\tgp_prod\tholds\twitness\tregime\n";
  for (const ScanReport& r : summary.failures) {
    out << r.g6_g << '\t' << r.g6_h << '\t' << r.p.to_string() << '\t' << r.gp_g << '\t'
        << r.gp_h << '\t' << r.gp_product << '\t' << (r.holds ? "true" : "false") << '\t'
        << (r.witness ? r.witness->to_string() : "-") << '\t'
        << (r.connected ? "connected" : "disconnected") << '\n';
  }
  out << "pairs=" << summary.pairs << ", failures=" << summary.failures.size() << '\n';
  return summary.failures.empty() ? kOk : kScanFailure;
}

int cmd_product(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load(cfg.input, "");
  const Graph h = load(cfg.second, "2");
  const Graph product = cartesian_product(g, h);
  if (cfg.dot) {
    out << write_dot(product);
  } else {
    out << write_graph6(product) << '\n';
  }
  return kOk;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out) {
  const Graph g = load(cfg.input, "");
  if (cfg.dot) {
    out << write_dot(g);
  } else {
    out << write_graph6(g) << '\n';
  }
  return kOk;
}

void add_input(CLI::App* cmd, InputSpec& spec, const std::string& suffix) {
  cmd->add_option("--gen" + suffix, spec.gen,
                  "Generator spec, e.g. path:6, complete-bipartite:4,2, fig2");
  cmd->add_option("--g6" + suffix, spec.g6, "Inline graph6 string");
  cmd->add_option("--file" + suffix, spec.file, "graph6 or edge-list file");
}

void add_p(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p", cfg.p, "Proportion as num/den")->capture_default_str();
}

void add_format(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, OutputFormat> names = {
      {"table", OutputFormat::kTable},
      {"records", OutputFormat::kRecords},
      {"dot", OutputFormat::kDot},
  };
  cmd->add_option("--format", cfg.format, "Output format: table, records or dot")
      ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact partial domination toolkit", "pdom"};
  app.require_subcommand(1);

  auto* gamma_cmd = app.add_subcommand("gamma", "Compute gamma_p and a minimum witness");
  add_input(gamma_cmd, cfg.input, "");
  add_p(gamma_cmd, cfg);
  add_format(gamma_cmd, cfg);

  auto* influence_cmd = app.add_subcommand("influence", "Print p-influencing sets");
  add_input(influence_cmd, cfg.input, "");
  add_p(influence_cmd, cfg);
  add_format(influence_cmd, cfg);
  influence_cmd->add_flag("--all-p", cfg.all_p, "Sweep p = k/n for k = 1..n");

  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every minimum p-dominating set");
  add_input(enumerate_cmd, cfg.input, "");
  add_p(enumerate_cmd, cfg);
  add_format(enumerate_cmd, cfg);

  auto* scan_cmd = app.add_subcommand("scan", "Check gamma_p(G□H) >= gamma_p(G)gamma_p(H)");
  scan_cmd->add_option("--max-order", cfg.max_order, "Largest factor order")
      ->capture_default_str();
  add_p(scan_cmd, cfg);
  scan_cmd->add_flag("--include-disconnected", cfg.include_disconnected,
                     "Also enumerate disconnected factors");
  scan_cmd->add_option("--graphs", cfg.graphs_file, "graph6 file, one factor per line");
  scan_cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");

  auto* product_cmd = app.add_subcommand("product", "Write the Cartesian product G□H");
  add_input(product_cmd, cfg.input, "");
  add_input(product_cmd, cfg.second, "2");
  product_cmd->add_flag("--dot", cfg.dot, "Write DOT instead of graph6");

  auto* generate_cmd = app.add_subcommand("generate", "Write a graph as graph6 or DOT");
  add_input(generate_cmd, cfg.input, "");
  generate_cmd->add_flag("--dot", cfg.dot, "Write DOT instead of graph6");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*gamma_cmd) return cmd_gamma(cfg, out);
    if (*influence_cmd) return cmd_influence(cfg, out);
    if (*enumerate_cmd) return cmd_enumerate(cfg, out);
    if (*scan_cmd) return cmd_scan(cfg, out);
    if (*product_cmd) return cmd_product(cfg, out);
    if (*generate_cmd) return cmd_generate(cfg, out);
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }
  return kParseError;
}

}  // namespace pdom::cli
