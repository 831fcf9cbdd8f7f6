#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "collabnet/metrics.hpp"
#include "collabnet/network.hpp"

namespace collabnet {

enum class Measure { Betweenness, Eigenvector, Degree, WeightedDegree };

std::string_view to_token(Measure m) noexcept;

enum class Normalization {
  None,
  /// Betweenness divided by (n-1)(n-2)/2.
  PairCount,
  /// Scores divided by the largest score.
  MaxEntry,
};

struct RankedEntry {
  NodeIndex node;
  double score;
};

struct CentralityReport {
  Measure measure = Measure::Degree;
  Normalization normalization = Normalization::None;
  bool weighted = false;
  /// One score per node, indexed like the network.
  std::vector<double> scores;
  /// All nodes under the report ordering: score descending, then
  /// institution name, then ID.
  std::vector<RankedEntry> ranking;
  std::vector<std::string> warnings;
  /// Power-iteration diagnostics (eigenvector only).
  std::size_t iterations = 0;
  double eigenvalue = 0.0;
};

struct BetweennessOptions {
  /// Traversal cost 1/weight instead of one hop per edge.
  bool weighted = false;
  bool normalized = false;
  Parallelism parallelism;
};

/// Exact betweenness by Brandes accumulation over every source. Each
/// unordered pair is counted once.
CentralityReport betweenness(const CollabNetwork& network,
                             const BetweennessOptions& options = {});

struct EigenvectorOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 10000;
  /// Iterations without convergence before switching to the damped update.
  std::size_t damping_after = 1000;
};

/// Principal eigenvector of the weighted adjacency of the largest component
/// by power iteration, max-normalised. Nodes outside that component score
/// 0 and a warning is recorded. Throws NoConvergence.
CentralityReport eigenvector(const CollabNetwork& network,
                             const EigenvectorOptions& options = {});

CentralityReport degree_centrality(const CollabNetwork& network,
                                   bool weighted);

/// First min(k, n) entries of the report ranking.
std::vector<RankedEntry> top_k(const CentralityReport& report, std::size_t k);

/// `rank,institution_id,name,category,score`, rank starting at 1.
void write_ranking_csv(std::ostream& out, const CollabNetwork& network,
                       std::span<const RankedEntry> entries);

}  // namespace collabnet
