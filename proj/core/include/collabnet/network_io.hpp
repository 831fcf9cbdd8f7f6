#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "collabnet/network.hpp"

namespace collabnet {

// Edge list: `institution_a,institution_b,weight`, a < b, rows sorted.
// Node list: `institution_id,name,category`.
// Subject list: `institution_a,institution_b,subject,count`.

void write_edge_csv(std::ostream& out, const CollabNetwork& network);
void write_node_csv(std::ostream& out, const CollabNetwork& network);
void write_subject_csv(std::ostream& out, const CollabNetwork& network);

/// Nodes listed in the node file but absent from the edge file become
/// isolates. Rows may list the pair in either order.
CollabNetwork read_network_csv(std::istream& edges, std::istream& nodes,
                               std::istream* subjects = nullptr);
CollabNetwork load_network_csv(
    const std::filesystem::path& edges, const std::filesystem::path& nodes,
    const std::optional<std::filesystem::path>& subjects = std::nullopt);

void save_network_csv(
    const CollabNetwork& network, const std::filesystem::path& edges,
    const std::filesystem::path& nodes,
    const std::optional<std::filesystem::path>& subjects = std::nullopt);

struct GexfOptions {
  /// Marks one node as the ego centre (attribute `ego_center`).
  std::optional<std::string> center;
  /// Largest viz:size; sizes are proportional to weighted degree.
  double max_node_size = 100.0;
};

/// GEXF 1.3, undirected, no timestamps.
void write_gexf(std::ostream& out, const CollabNetwork& network,
                const GexfOptions& options = {});

/// Reads back what write_gexf produces (ids, labels, category, weights).
CollabNetwork read_gexf(std::istream& in);

void write_dot(std::ostream& out, const CollabNetwork& network);

/// `{"schema_version": 1, "nodes": [...], "edges": [...]}`.
void write_network_json(std::ostream& out, const CollabNetwork& network);

}  // namespace collabnet
