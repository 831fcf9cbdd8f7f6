#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "collabnet/category.hpp"
#include "collabnet/network.hpp"
#include "collabnet/power_law.hpp"

namespace collabnet {

/// Worker count for the per-source analytics. Results do not depend on it.
struct Parallelism {
  unsigned threads = 1;
};

enum class ClusteringConvention {
  /// Degree < 2 nodes contribute 0 and count towards the average.
  IncludeLowDegree,
  /// Degree < 2 nodes are left out of the average.
  ExcludeLowDegree,
};

struct MetricOptions {
  ClusteringConvention clustering = ClusteringConvention::IncludeLowDegree;
  Parallelism parallelism;
};

struct PathMetrics {
  double avg_path_length = 0.0;
  std::uint32_t diameter = 0;
};

struct NetworkSummary {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double density = 0.0;
  double avg_degree = 0.0;
  double avg_weighted_degree = 0.0;
  double avg_clustering = 0.0;
  /// Component sizes, largest first.
  std::vector<std::size_t> component_sizes;
  /// Unset when the giant component has fewer than two nodes.
  std::optional<PathMetrics> giant_paths;
  PerCategory<double> category_proportions{};
  /// Unset when the degree sequence cannot be fitted; see power_law_error.
  std::optional<PowerLawFit> power_law;
  std::string power_law_error;

  /// Component census as (size, how many components) pairs, largest first.
  std::vector<std::pair<std::size_t, std::size_t>> component_census() const;
};

double density(std::size_t node_count, std::size_t edge_count);
double average_degree(std::size_t node_count, std::size_t edge_count);

NetworkSummary summarize(const CollabNetwork& network,
                         const MetricOptions& options = {});

struct DegreeEntry {
  std::string institution_id;
  std::uint64_t value = 0;
};

/// Descending; ties by institution name, then ID.
std::vector<DegreeEntry> degree_sequence(const CollabNetwork& network,
                                         bool weighted);

/// Components ordered largest first, ties by smallest member index. Each
/// component lists its members in ascending index order.
std::vector<std::vector<NodeIndex>> connected_components(
    const CollabNetwork& network);

/// Local clustering of every node: triangles / (deg choose 2), 0 when
/// deg < 2. Unweighted.
std::vector<double> local_clustering(const CollabNetwork& network);
double avg_clustering(
    const CollabNetwork& network,
    ClusteringConvention convention = ClusteringConvention::IncludeLowDegree);

/// Hop-count average over unordered pairs and diameter within the largest
/// component. Throws DegenerateComponent when it has fewer than two nodes.
PathMetrics giant_path_metrics(const CollabNetwork& network,
                               Parallelism parallelism = {});

/// Node-count share per category. Throws EmptyNetwork.
PerCategory<double> category_proportions(const CollabNetwork& network);

}  // namespace collabnet
