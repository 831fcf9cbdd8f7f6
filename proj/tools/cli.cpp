#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "collabnet/centrality.hpp"
#include "collabnet/corpus.hpp"
#include "collabnet/error.hpp"
#include "collabnet/facets.hpp"
#include "collabnet/metrics.hpp"
#include "collabnet/network.hpp"
#include "collabnet/network_io.hpp"
#include "collabnet/synth.hpp"

namespace collabnet::cli {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct GlobalFlags {
  bool quiet = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  bool include_isolates = false;
  bool clustering_exclude_low_degree = false;
  bool weighted_betweenness = false;
};

/// Where a subcommand gets its network from: an edge/node CSV pair or a
/// raw corpus that is ingested and built on the fly.
struct NetworkSource {
  std::string edges;
  std::string nodes;
  std::string subjects;
  std::string records;
  std::string mapping;
  int from = YearRange{}.min;
  int to = YearRange{}.max;
};

void add_corpus_options(CLI::App* cmd, NetworkSource& src, bool required) {
  auto* records = cmd->add_option("--records", src.records,
                                  "Publication records (JSON Lines)")
                      ->check(CLI::ExistingFile);
  auto* mapping = cmd->add_option("--mapping", src.mapping,
                                  "Affiliation mapping CSV")
                      ->check(CLI::ExistingFile);
  if (required) {
    records->required();
    mapping->required();
  } else {
    records->needs(mapping);
    mapping->needs(records);
  }
  cmd->add_option("--from", src.from, "First publication year (inclusive)")
      ->capture_default_str();
  cmd->add_option("--to", src.to, "Last publication year (inclusive)")
      ->capture_default_str();
}

void add_network_options(CLI::App* cmd, NetworkSource& src) {
  auto* edges = cmd->add_option("--edges", src.edges, "Edge list CSV")
                    ->check(CLI::ExistingFile);
  auto* nodes = cmd->add_option("--nodes", src.nodes, "Node list CSV")
                    ->check(CLI::ExistingFile);
  auto* subjects =
      cmd->add_option("--edge-subjects", src.subjects,
                      "Per-edge subject counts CSV")
          ->check(CLI::ExistingFile);
  edges->needs(nodes);
  nodes->needs(edges);
  subjects->needs(edges);
  add_corpus_options(cmd, src, false);
  edges->excludes("--records");
  cmd->get_option("--records")->excludes(edges);
}

void require_parent_dir(const std::string& path) {
  if (path.empty() || path == "-") return;
  const fs::path parent = fs::path(path).parent_path();
  if (!parent.empty() && !fs::is_directory(parent)) {
    throw Error(ErrorCode::UsageError,
                "output directory does not exist: " + parent.string());
  }
}

class Logger {
 public:
  Logger(std::ostream& err, bool quiet) : err_(err), quiet_(quiet) {}
  template <typename... Args>
  void info(fmt::format_string<Args...> f, Args&&... args) {
    if (!quiet_) fmt::print(err_, "{}\n", fmt::format(f, std::forward<Args>(args)...));
  }

 private:
  std::ostream& err_;
  bool quiet_;
};

YearRange years_of(const NetworkSource& src) {
  if (src.from > src.to) {
    throw Error(ErrorCode::UsageError, "--from must not exceed --to");
  }
  return {src.from, src.to};
}

CollabNetwork load_network(const NetworkSource& src, const GlobalFlags& g,
                           Logger& log) {
  if (!src.edges.empty()) {
    std::optional<fs::path> subjects;
    if (!src.subjects.empty()) subjects = src.subjects;
    return load_network_csv(src.edges, src.nodes, subjects);
  }
  if (src.records.empty()) {
    throw Error(ErrorCode::UsageError,
                "a network is required: give --edges/--nodes or "
                "--records/--mapping");
  }
  const auto registry = load_mapping(src.mapping);
  const auto corpus = ingest_records(src.records, registry, years_of(src));
  log.info("ingested {} records ({} excluded)", corpus.records.size(),
           corpus.input_count() - corpus.records.size());
  return build_network(corpus, registry,
                       {.with_subjects = true,
                        .include_isolates = g.include_isolates});
}

/// Opens `path` for writing, or returns `fallback` for "" and "-".
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path, std::ios::binary);
    if (!file_) throw Error(ErrorCode::IoError, "cannot write " + path);
    stream_ = &file_;
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

std::string fixed2(double v) { return fmt::format("{:.2f}", v); }

ordered_json summary_json(const NetworkSummary& s, const GlobalFlags& g) {
  ordered_json j;
  j["schema_version"] = 1;
  j["node_count"] = s.node_count;
  j["edge_count"] = s.edge_count;
  j["density"] = s.density;
  j["avg_degree"] = s.avg_degree;
  j["avg_weighted_degree"] = s.avg_weighted_degree;
  j["avg_clustering"] = s.avg_clustering;
  j["clustering_convention"] = g.clustering_exclude_low_degree
                                   ? "exclude_low_degree"
                                   : "include_low_degree";
  j["component_sizes"] = s.component_sizes;
  auto census = ordered_json::array();
  for (const auto& [size, count] : s.component_census()) {
    census.push_back({{"size", size}, {"count", count}});
  }
  j["component_census"] = std::move(census);
  if (s.giant_paths) {
    j["giant_avg_path_length"] = s.giant_paths->avg_path_length;
    j["giant_diameter"] = s.giant_paths->diameter;
  } else {
    j["giant_avg_path_length"] = nullptr;
    j["giant_diameter"] = nullptr;
  }
  ordered_json props;
  for (Category c : kAllCategories) {
    props[std::string(to_token(c))] = s.category_proportions[index_of(c)];
  }
  j["category_proportions"] = std::move(props);
  if (s.power_law) {
    j["power_law"] = {{"alpha", s.power_law->alpha},
                      {"xmin", s.power_law->xmin},
                      {"ks_statistic", s.power_law->ks_statistic},
                      {"n_tail", s.power_law->n_tail}};
  } else {
    j["power_law"] = nullptr;
    j["power_law_error"] = s.power_law_error;
  }
  return j;
}

void print_summary(std::ostream& out, const NetworkSummary& s) {
  auto row = [&](std::string_view label, const std::string& value) {
    fmt::print(out, "{:<28}{}\n", label, value);
  };
  row("nodes", std::to_string(s.node_count));
  row("edges", std::to_string(s.edge_count));
  row("density", fmt::format("{:.6f}", s.density));
  row("average degree", fixed2(s.avg_degree));
  row("average weighted degree", fixed2(s.avg_weighted_degree));
  row("average clustering", fixed2(s.avg_clustering));
  std::string census;
  for (const auto& [size, count] : s.component_census()) {
    census += fmt::format("{}{}x{}", census.empty() ? "" : " ", count, size);
  }
  row("components (count x size)", census.empty() ? "-" : census);
  row("giant avg path length",
      s.giant_paths ? fixed2(s.giant_paths->avg_path_length) : "undefined");
  row("giant diameter", s.giant_paths
                            ? std::to_string(s.giant_paths->diameter)
                            : "undefined");
  for (Category c : kAllCategories) {
    row(fmt::format("share {}", to_token(c)),
        fmt::format("{:.1f}%", 100.0 * s.category_proportions[index_of(c)]));
  }
  if (s.power_law) {
    row("power-law alpha", fixed2(s.power_law->alpha));
    row("power-law xmin", std::to_string(s.power_law->xmin));
    row("power-law KS", fmt::format("{:.4f}", s.power_law->ks_statistic));
  } else {
    row("power-law fit", s.power_law_error);
  }
}

std::string format_of(const std::string& explicit_format,
                      const std::string& path) {
  if (!explicit_format.empty()) return explicit_format;
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".dot" || ext == ".gv") return "dot";
  if (ext == ".csv") return "edge-csv";
  if (ext == ".json") return "json";
  return "gexf";
}

void write_network(const CollabNetwork& network, const std::string& format,
                   const std::string& out_path, const std::string& nodes_path,
                   std::ostream& stdout_stream, const GexfOptions& gexf = {}) {
  Output out(out_path, stdout_stream);
  if (format == "gexf") {
    write_gexf(out.get(), network, gexf);
  } else if (format == "dot") {
    write_dot(out.get(), network);
  } else if (format == "json") {
    write_network_json(out.get(), network);
  } else if (format == "edge-csv") {
    write_edge_csv(out.get(), network);
    if (!nodes_path.empty()) {
      Output nodes(nodes_path, stdout_stream);
      write_node_csv(nodes.get(), network);
    }
  } else {
    throw Error(ErrorCode::UsageError, "unknown format `" + format + "`");
  }
}

std::pair<int, int> parse_pair(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument(text);
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::UsageError,
                std::string(flag) + " expects MIN,MAX, got `" + text + "`");
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Institution collaboration network toolkit", "collabnet"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags g;
  app.add_flag("-q,--quiet", g.quiet, "Suppress progress messages");
  app.add_option("--threads", g.threads, "Worker threads for analytics")
      ->check(CLI::PositiveNumber);
  app.add_flag("--include-isolates", g.include_isolates,
               "Keep institutions without collaborations as nodes");
  app.add_flag("--clustering-exclude-low-degree",
               g.clustering_exclude_low_degree,
               "Leave degree<2 nodes out of the clustering average");
  app.add_flag("--weighted-betweenness", g.weighted_betweenness,
               "Betweenness over 1/weight distances");

  // ingest
  NetworkSource ingest_src;
  std::string ingest_out, ingest_exclusions;
  auto* ingest = app.add_subcommand("ingest", "Clean and resolve raw records");
  add_corpus_options(ingest, ingest_src, true);
  ingest->add_option("--out", ingest_out, "Write the clean corpus (JSON Lines)");
  ingest->add_option("--exclusions", ingest_exclusions,
                     "Write the exclusion log (reason,count CSV)");

  // build
  NetworkSource build_src;
  std::string build_edges, build_nodes, build_subjects;
  auto* build = app.add_subcommand("build", "Build the collaboration network");
  add_corpus_options(build, build_src, true);
  build->add_option("--out-edges", build_edges, "Edge list CSV")->required();
  build->add_option("--out-nodes", build_nodes, "Node list CSV")->required();
  build->add_option("--out-subjects", build_subjects,
                    "Per-edge subject counts CSV");

  // stats
  NetworkSource stats_src;
  bool stats_json = false;
  std::string stats_degrees;
  auto* stats = app.add_subcommand("stats", "Network statistics");
  add_network_options(stats, stats_src);
  stats->add_flag("--json", stats_json, "Machine-readable output");
  stats->add_option("--degrees", stats_degrees,
                    "Write institution,degree,weighted_degree CSV");

  // centrality
  NetworkSource cent_src;
  std::string measure = "betweenness";
  bool cent_weighted = false;
  bool cent_normalized = false;
  std::size_t top = 10;
  std::string cent_out;
  auto* cent = app.add_subcommand("centrality", "Centrality rankings");
  add_network_options(cent, cent_src);
  cent->add_option("--measure", measure, "Centrality measure")
      ->check(CLI::IsMember(
          {"betweenness", "eigenvector", "degree", "weighted-degree"}))
      ->capture_default_str();
  cent->add_flag("--weighted", cent_weighted,
                 "Betweenness over 1/weight distances");
  cent->add_flag("--normalized", cent_normalized,
                 "Divide betweenness by (n-1)(n-2)/2");
  cent->add_option("--top", top, "Number of ranked rows")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cent->add_option("--out", cent_out, "Write rank CSV");

  // ego
  NetworkSource ego_src;
  std::string center, ego_out, ego_format;
  auto* ego = app.add_subcommand("ego", "Induced ego subgraph");
  add_network_options(ego, ego_src);
  ego->add_option("--center", center, "Institution ID or name")->required();
  ego->add_option("--out", ego_out, "Output file (default stdout)");
  ego->add_option("--format", ego_format, "gexf|dot|edge-csv|json")
      ->check(CLI::IsMember({"gexf", "dot", "edge-csv", "json"}));

  // facets
  NetworkSource facet_src;
  std::string facet_by = "category";
  std::string focus_file, facet_out;
  auto* facets = app.add_subcommand("facets", "Collaboration ratio tables");
  add_network_options(facets, facet_src);
  facets->add_option("--by", facet_by, "category|subject")
      ->check(CLI::IsMember({"category", "subject"}))
      ->capture_default_str();
  facets->add_option("--focus", focus_file,
                     "Institutions, one per line (default: bundled list)")
      ->check(CLI::ExistingFile);
  facets->add_option("--out", facet_out, "Output CSV (default stdout)");

  // synth
  SynthConfig synth_cfg;
  std::string inst_counts, authors_range, subjects_range, out_dir;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic corpus");
  synth->add_option("--seed", synth_cfg.seed, "Random seed")
      ->capture_default_str();
  synth->add_option("--pubs", synth_cfg.publications, "Publications")
      ->capture_default_str();
  synth->add_option("--inst", inst_counts,
                    "Institutions per category as B,P,G,H");
  synth->add_option("--bias", synth_cfg.attachment_bias,
                    "Attachment bias (>= 0)")
      ->capture_default_str();
  synth->add_option("--authors", authors_range, "Authors per pub as MIN,MAX");
  synth->add_option("--subjects", subjects_range,
                    "Subjects per pub as MIN,MAX");
  synth->add_option("--out-dir", out_dir, "Output directory")->required();

  // export
  NetworkSource export_src;
  std::string export_format = "gexf";
  std::string export_out, export_nodes;
  auto* exporter = app.add_subcommand("export", "Export the network");
  add_network_options(exporter, export_src);
  exporter->add_option("--format", export_format, "gexf|dot|edge-csv|json")
      ->check(CLI::IsMember({"gexf", "dot", "edge-csv", "json"}))
      ->capture_default_str();
  exporter->add_option("--out", export_out, "Output file (default stdout)");
  exporter->add_option("--out-nodes", export_nodes,
                       "Node list CSV (edge-csv format)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Logger log(err, g.quiet);
  const MetricOptions metric_options{
      g.clustering_exclude_low_degree ? ClusteringConvention::ExcludeLowDegree
                                      : ClusteringConvention::IncludeLowDegree,
      Parallelism{g.threads}};

  try {
    if (*ingest) {
      require_parent_dir(ingest_out);
      require_parent_dir(ingest_exclusions);
      const auto registry = load_mapping(ingest_src.mapping);
      const auto corpus =
          ingest_records(ingest_src.records, registry, years_of(ingest_src));
      const auto summary = corpus_summary(corpus, registry);
      if (!ingest_out.empty()) {
        Output o(ingest_out, out);
        write_corpus(o.get(), corpus);
      }
      if (!ingest_exclusions.empty()) {
        Output o(ingest_exclusions, out);
        write_exclusion_log(o.get(), corpus);
      }
      if (ingest_out != "-" && ingest_exclusions != "-") {
        fmt::print(out, "records {}\ninstitutions {}\nauthors {}\n",
                   summary.records, summary.institutions, summary.authors);
        for (Category c : kAllCategories) {
          fmt::print(out, "institutions {} {}\n", to_token(c),
                     summary.institutions_by_category[index_of(c)]);
        }
        for (const auto& [reason, count] : corpus.exclusion_log) {
          fmt::print(out, "excluded {} {}\n", reason, count);
        }
        fmt::print(out, "dropped_authorships {}\n", corpus.dropped_authorships);
      }
    } else if (*build) {
      for (const auto& p : {build_edges, build_nodes, build_subjects}) {
        require_parent_dir(p);
      }
      const auto registry = load_mapping(build_src.mapping);
      const auto corpus =
          ingest_records(build_src.records, registry, years_of(build_src));
      const auto network = build_network(
          corpus, registry,
          {.with_subjects = !build_subjects.empty(),
           .include_isolates = g.include_isolates});
      std::optional<fs::path> subjects;
      if (!build_subjects.empty()) subjects = build_subjects;
      save_network_csv(network, build_edges, build_nodes, subjects);
      log.info("wrote {} nodes and {} edges", network.node_count(),
               network.edge_count());
    } else if (*stats) {
      require_parent_dir(stats_degrees);
      const auto network = load_network(stats_src, g, log);
      const auto summary = summarize(network, metric_options);
      if (stats_json) {
        out << summary_json(summary, g).dump(2) << '\n';
      } else {
        print_summary(out, summary);
      }
      if (!stats_degrees.empty()) {
        Output o(stats_degrees, out);
        o.get() << "institution,degree,weighted_degree\n";
        for (const auto& e : degree_sequence(network, false)) {
          const NodeIndex i = *network.index_of(e.institution_id);
          o.get() << e.institution_id << ',' << network.degree(i) << ','
                  << network.weighted_degree(i) << '\n';
        }
      }
    } else if (*cent) {
      require_parent_dir(cent_out);
      const auto network = load_network(cent_src, g, log);
      CentralityReport report;
      if (measure == "betweenness") {
        report = betweenness(
            network, {.weighted = cent_weighted || g.weighted_betweenness,
                      .normalized = cent_normalized,
                      .parallelism = {g.threads}});
      } else if (measure == "eigenvector") {
        report = eigenvector(network);
      } else {
        report = degree_centrality(network, measure == "weighted-degree");
      }
      for (const auto& w : report.warnings) log.info("warning: {}", w);
      Output o(cent_out, out);
      write_ranking_csv(o.get(), network, top_k(report, top));
    } else if (*ego) {
      require_parent_dir(ego_out);
      const auto network = load_network(ego_src, g, log);
      const auto sub = ego_subgraph(network, center);
      log.info("ego of {}: {} nodes, {} edges", sub.center,
               sub.network.node_count(), sub.network.edge_count());
      write_network(sub.network, format_of(ego_format, ego_out), ego_out, "",
                    out, GexfOptions{.center = sub.center});
    } else if (*facets) {
      require_parent_dir(facet_out);
      const auto network = load_network(facet_src, g, log);
      const auto focus =
          focus_file.empty() ? default_focus_list() : load_focus_list(focus_file);
      const auto table = facet_by == "subject" ? subject_facets(network, focus)
                                               : category_facets(network, focus);
      Output o(facet_out, out);
      write_facet_csv(o.get(), table);
    } else if (*synth) {
      if (!inst_counts.empty()) {
        std::vector<int> counts;
        std::stringstream ss(inst_counts);
        for (std::string part; std::getline(ss, part, ',');) {
          try {
            counts.push_back(std::stoi(part));
          } catch (const std::exception&) {
            counts.clear();
            break;
          }
        }
        if (counts.size() != kCategoryCount) {
          throw Error(ErrorCode::UsageError,
                      "--inst expects four counts B,P,G,H");
        }
        std::copy(counts.begin(), counts.end(), synth_cfg.institutions.begin());
      }
      if (!authors_range.empty()) {
        synth_cfg.authors_per_pub = parse_pair(authors_range, "--authors");
      }
      if (!subjects_range.empty()) {
        synth_cfg.subjects_per_pub = parse_pair(subjects_range, "--subjects");
      }
      const auto paths = generate(synth_cfg, out_dir);
      log.info("wrote {} and {}", paths.records.string(),
               paths.mapping.string());
    } else if (*exporter) {
      require_parent_dir(export_out);
      require_parent_dir(export_nodes);
      const auto network = load_network(export_src, g, log);
      write_network(network, export_format, export_out, export_nodes, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::UsageError || e.code() == ErrorCode::InvalidConfig
               ? kExitUsage
               : kExitDataError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace collabnet::cli
