#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "collabnet/category.hpp"
#include "collabnet/corpus.hpp"

namespace collabnet {

using NodeIndex = std::uint32_t;
using Weight = std::uint64_t;

struct Neighbor {
  NodeIndex node;
  Weight weight;
};

struct EdgeData {
  Weight weight = 0;
  /// Per-subject joint-publication counts; empty unless the network was
  /// built with subjects.
  std::map<std::string, Weight> subjects;

  bool operator==(const EdgeData&) const = default;
};

/// Edge keyed by institution IDs, `a < b` lexicographically.
struct EdgeRecord {
  std::string a;
  std::string b;
  EdgeData data;
};

/// Immutable weighted undirected institution graph.
///
/// Nodes are stored sorted by institution ID, so node index order is also
/// lexicographic ID order. Edges are keyed by (lower index, higher index).
class CollabNetwork {
 public:
  CollabNetwork() = default;

  /// Validates and indexes the input: unique node IDs, no self-loops, no
  /// duplicate pairs, positive weights, every subject count within the edge
  /// weight, endpoints known. Throws MalformedRow otherwise.
  CollabNetwork(std::vector<Institution> nodes, std::vector<EdgeRecord> edges,
                bool has_subjects);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }
  bool has_subjects() const { return has_subjects_; }

  const Institution& node(NodeIndex i) const { return nodes_[i]; }
  const std::vector<Institution>& nodes() const { return nodes_; }
  std::optional<NodeIndex> index_of(const std::string& institution_id) const;

  /// Resolves an institution by ID, falling back to canonical name.
  /// Throws UnknownInstitution.
  NodeIndex require(const std::string& id_or_name) const;

  std::span<const Neighbor> neighbors(NodeIndex i) const {
    return adjacency_[i];
  }
  std::size_t degree(NodeIndex i) const { return adjacency_[i].size(); }
  Weight weighted_degree(NodeIndex i) const { return weighted_degree_[i]; }

  const std::map<std::pair<NodeIndex, NodeIndex>, EdgeData>& edges() const {
    return edges_;
  }
  const EdgeData* edge(NodeIndex u, NodeIndex v) const;
  Weight total_weight() const;

  /// Canonical list form: sorted by (a, b).
  std::vector<EdgeRecord> edge_records() const;

  bool operator==(const CollabNetwork& other) const;

 private:
  std::vector<Institution> nodes_;
  std::unordered_map<std::string, NodeIndex> index_;
  std::map<std::pair<NodeIndex, NodeIndex>, EdgeData> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<Weight> weighted_degree_;
  bool has_subjects_ = false;
};

struct BuildOptions {
  bool with_subjects = false;
  bool include_isolates = false;
};

/// Counts joint publications per institution pair.
///
/// A publication adds exactly 1 to pair {I, J} when two different authors
/// a and b exist with I among a's institutions and J among b's. A single
/// author holding several affiliations therefore never creates a pair on
/// their own, and a publication never adds more than 1 to any pair.
CollabNetwork build_network(const CleanCorpus& corpus,
                            const InstitutionRegistry& registry,
                            BuildOptions options = {});

/// Sum of edge weights from `institution` to neighbours in each category.
/// The four values add up to the institution's weighted degree.
PerCategory<Weight> aggregate_by_category(const CollabNetwork& network,
                                          const std::string& institution);

/// Network restricted to `members`, keeping every edge between them.
CollabNetwork induced_subgraph(const CollabNetwork& network,
                               std::span<const NodeIndex> members);

struct EgoSubgraph {
  std::string center;
  CollabNetwork network;
};

/// Centre plus its neighbours with all edges among them.
EgoSubgraph ego_subgraph(const CollabNetwork& network,
                         const std::string& center);

/// Replaces weights by the chosen subject's counts, dropping edges with a
/// zero count and nodes left without edges.
CollabNetwork filter_by_subject(const CollabNetwork& network,
                                const std::string& subject);

}  // namespace collabnet
