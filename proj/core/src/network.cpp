#include "collabnet/network.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "collabnet/error.hpp"
#include "collabnet/subjects.hpp"

namespace collabnet {

CollabNetwork::CollabNetwork(std::vector<Institution> nodes,
                             std::vector<EdgeRecord> edges, bool has_subjects)
    : nodes_(std::move(nodes)), has_subjects_(has_subjects) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const Institution& a, const Institution& b) {
              return a.id < b.id;
            });
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (!index_.emplace(nodes_[i].id, static_cast<NodeIndex>(i)).second) {
      throw Error(ErrorCode::MalformedRow,
                  "duplicate node `" + nodes_[i].id + "`");
    }
  }

  adjacency_.resize(nodes_.size());
  weighted_degree_.assign(nodes_.size(), 0);
  for (EdgeRecord& e : edges) {
    auto ia = index_of(e.a);
    auto ib = index_of(e.b);
    if (!ia || !ib) {
      throw Error(ErrorCode::MalformedRow, "edge `" + e.a + "`-`" + e.b +
                                               "` references an unknown node");
    }
    if (*ia == *ib) {
      throw Error(ErrorCode::MalformedRow, "self-loop on `" + e.a + "`");
    }
    if (e.data.weight == 0) {
      throw Error(ErrorCode::MalformedRow,
                  "edge `" + e.a + "`-`" + e.b + "` has weight 0");
    }
    for (const auto& [subject, count] : e.data.subjects) {
      if (count == 0 || count > e.data.weight) {
        throw Error(ErrorCode::MalformedRow,
                    "subject count for `" + subject + "` outside [1, weight]");
      }
    }
    const auto key = std::minmax(*ia, *ib);
    if (!edges_.emplace(key, std::move(e.data)).second) {
      throw Error(ErrorCode::MalformedRow,
                  "duplicate edge `" + e.a + "`-`" + e.b + "`");
    }
  }
  for (const auto& [key, data] : edges_) {
    adjacency_[key.first].push_back({key.second, data.weight});
    adjacency_[key.second].push_back({key.first, data.weight});
    weighted_degree_[key.first] += data.weight;
    weighted_degree_[key.second] += data.weight;
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end(),
              [](const Neighbor& a, const Neighbor& b) {
                return a.node < b.node;
              });
  }
}

std::optional<NodeIndex> CollabNetwork::index_of(
    const std::string& institution_id) const {
  auto it = index_.find(institution_id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeIndex CollabNetwork::require(const std::string& id_or_name) const {
  if (auto i = index_of(id_or_name)) return *i;
  const std::string wanted = canonical_name(id_or_name);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (canonical_name(nodes_[i].name) == wanted) {
      return static_cast<NodeIndex>(i);
    }
  }
  throw Error(ErrorCode::UnknownInstitution,
              "`" + id_or_name + "` is not a node of the network");
}

const EdgeData* CollabNetwork::edge(NodeIndex u, NodeIndex v) const {
  auto it = edges_.find(std::minmax(u, v));
  return it == edges_.end() ? nullptr : &it->second;
}

Weight CollabNetwork::total_weight() const {
  Weight total = 0;
  for (const auto& [key, data] : edges_) total += data.weight;
  return total;
}

std::vector<EdgeRecord> CollabNetwork::edge_records() const {
  std::vector<EdgeRecord> out;
  out.reserve(edges_.size());
  for (const auto& [key, data] : edges_) {
    out.push_back({nodes_[key.first].id, nodes_[key.second].id, data});
  }
  return out;
}

bool CollabNetwork::operator==(const CollabNetwork& other) const {
  return has_subjects_ == other.has_subjects_ && nodes_ == other.nodes_ &&
         edges_ == other.edges_;
}

CollabNetwork build_network(const CleanCorpus& corpus,
                            const InstitutionRegistry& registry,
                            BuildOptions options) {
  std::map<std::pair<std::string, std::string>, EdgeData> pairs;
  std::set<std::string> seen;

  for (const CleanRecord& rec : corpus.records) {
    std::set<std::pair<std::string, std::string>> joined;
    const auto& authors = rec.authors;
    for (std::size_t i = 0; i < authors.size(); ++i) {
      seen.insert(authors[i].institution_ids.begin(),
                  authors[i].institution_ids.end());
      for (std::size_t j = i + 1; j < authors.size(); ++j) {
        for (const std::string& x : authors[i].institution_ids) {
          for (const std::string& y : authors[j].institution_ids) {
            if (x != y) joined.insert(std::minmax(x, y));
          }
        }
      }
    }
    for (const auto& pair : joined) {
      EdgeData& data = pairs[pair];
      ++data.weight;
      if (options.with_subjects) {
        for (const std::string& s : rec.subjects) ++data.subjects[s];
      }
    }
  }

  std::set<std::string> members;
  if (options.include_isolates) {
    members = std::move(seen);
  } else {
    for (const auto& [pair, data] : pairs) {
      members.insert(pair.first);
      members.insert(pair.second);
    }
  }

  std::vector<Institution> nodes;
  nodes.reserve(members.size());
  for (const std::string& id : members) {
    const Institution* inst = registry.find(id);
    if (!inst) {
      throw Error(ErrorCode::UnknownInstitution,
                  "`" + id + "` not in registry");
    }
    nodes.push_back(*inst);
  }
  std::vector<EdgeRecord> edges;
  edges.reserve(pairs.size());
  for (auto& [pair, data] : pairs) {
    edges.push_back({pair.first, pair.second, std::move(data)});
  }
  return CollabNetwork(std::move(nodes), std::move(edges),
                       options.with_subjects);
}

PerCategory<Weight> aggregate_by_category(const CollabNetwork& network,
                                          const std::string& institution) {
  const NodeIndex v = network.require(institution);
  PerCategory<Weight> totals{};
  for (const Neighbor& n : network.neighbors(v)) {
    totals[index_of(network.node(n.node).category)] += n.weight;
  }
  return totals;
}

CollabNetwork induced_subgraph(const CollabNetwork& network,
                               std::span<const NodeIndex> members) {
  std::vector<bool> keep(network.node_count(), false);
  std::vector<Institution> nodes;
  for (NodeIndex m : members) {
    if (!keep.at(m)) nodes.push_back(network.node(m));
    keep[m] = true;
  }
  std::vector<EdgeRecord> edges;
  for (const auto& [key, data] : network.edges()) {
    if (keep[key.first] && keep[key.second]) {
      edges.push_back(
          {network.node(key.first).id, network.node(key.second).id, data});
    }
  }
  return CollabNetwork(std::move(nodes), std::move(edges),
                       network.has_subjects());
}

EgoSubgraph ego_subgraph(const CollabNetwork& network,
                         const std::string& center) {
  const NodeIndex c = network.require(center);
  std::vector<NodeIndex> members{c};
  for (const Neighbor& n : network.neighbors(c)) members.push_back(n.node);
  return {network.node(c).id, induced_subgraph(network, members)};
}

CollabNetwork filter_by_subject(const CollabNetwork& network,
                                const std::string& subject) {
  const auto canon = canonical_subject(subject);
  if (!canon) {
    throw Error(ErrorCode::UnknownSubject,
                "`" + subject + "` is not an ASJC subject area");
  }
  if (!network.has_subjects()) {
    throw Error(ErrorCode::SubjectsUnavailable,
                "network was built without subject breakdowns");
  }
  std::set<NodeIndex> members;
  std::vector<EdgeRecord> edges;
  for (const auto& [key, data] : network.edges()) {
    auto it = data.subjects.find(*canon);
    if (it == data.subjects.end() || it->second == 0) continue;
    members.insert(key.first);
    members.insert(key.second);
    edges.push_back({network.node(key.first).id, network.node(key.second).id,
                     EdgeData{it->second, {}}});
  }
  std::vector<Institution> nodes;
  for (NodeIndex m : members) nodes.push_back(network.node(m));
  return CollabNetwork(std::move(nodes), std::move(edges), false);
}

}  // namespace collabnet
