#include "collabnet/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "collabnet/error.hpp"
#include "parallel.hpp"

namespace collabnet {

namespace {

constexpr std::size_t kSourceBlock = 64;
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// BFS hop distances from `source`; `queue` and `dist` are scratch buffers
// sized to the node count.
void bfs(const CollabNetwork& net, NodeIndex source,
         std::vector<std::uint32_t>& dist, std::vector<NodeIndex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeIndex u = queue[head];
    for (const Neighbor& n : net.neighbors(u)) {
      if (dist[n.node] == kUnreached) {
        dist[n.node] = dist[u] + 1;
        queue.push_back(n.node);
      }
    }
  }
}

}  // namespace

double density(std::size_t node_count, std::size_t edge_count) {
  if (node_count < 2) return 0.0;
  const double n = static_cast<double>(node_count);
  return 2.0 * static_cast<double>(edge_count) / (n * (n - 1.0));
}

double average_degree(std::size_t node_count, std::size_t edge_count) {
  if (node_count == 0) return 0.0;
  return 2.0 * static_cast<double>(edge_count) /
         static_cast<double>(node_count);
}

std::vector<std::pair<std::size_t, std::size_t>>
NetworkSummary::component_census() const {
  std::vector<std::pair<std::size_t, std::size_t>> census;
  for (std::size_t size : component_sizes) {
    if (!census.empty() && census.back().first == size) {
      ++census.back().second;
    } else {
      census.emplace_back(size, 1);
    }
  }
  return census;
}

std::vector<DegreeEntry> degree_sequence(const CollabNetwork& network,
                                         bool weighted) {
  std::vector<NodeIndex> order(network.node_count());
  std::iota(order.begin(), order.end(), NodeIndex{0});
  auto value = [&](NodeIndex i) -> std::uint64_t {
    return weighted ? network.weighted_degree(i) : network.degree(i);
  };
  std::sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
    if (value(a) != value(b)) return value(a) > value(b);
    const auto& na = network.node(a);
    const auto& nb = network.node(b);
    if (na.name != nb.name) return na.name < nb.name;
    return na.id < nb.id;
  });
  std::vector<DegreeEntry> out;
  out.reserve(order.size());
  for (NodeIndex i : order) out.push_back({network.node(i).id, value(i)});
  return out;
}

std::vector<std::vector<NodeIndex>> connected_components(
    const CollabNetwork& network) {
  const std::size_t n = network.node_count();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<NodeIndex>> components;
  std::vector<NodeIndex> stack;
  for (NodeIndex start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<NodeIndex> members;
    visited[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const NodeIndex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (const Neighbor& nb : network.neighbors(u)) {
        if (!visited[nb.node]) {
          visited[nb.node] = true;
          stack.push_back(nb.node);
        }
      }
    }
    std::sort(members.begin(), members.end());
    components.push_back(std::move(members));
  }
  // Discovery order already ranks equal sizes by smallest member.
  std::stable_sort(components.begin(), components.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  return components;
}

std::vector<double> local_clustering(const CollabNetwork& network) {
  const std::size_t n = network.node_count();
  std::vector<double> out(n, 0.0);
  std::vector<NodeIndex> mark(n, std::numeric_limits<NodeIndex>::max());
  for (NodeIndex v = 0; v < n; ++v) {
    const std::size_t k = network.degree(v);
    if (k < 2) continue;
    for (const Neighbor& u : network.neighbors(v)) mark[u.node] = v;
    std::uint64_t twice_links = 0;
    for (const Neighbor& u : network.neighbors(v)) {
      for (const Neighbor& w : network.neighbors(u.node)) {
        if (mark[w.node] == v) ++twice_links;
      }
    }
    const double possible = static_cast<double>(k) * (k - 1) / 2.0;
    out[v] = static_cast<double>(twice_links / 2) / possible;
  }
  return out;
}

double avg_clustering(const CollabNetwork& network,
                      ClusteringConvention convention) {
  const auto local = local_clustering(network);
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeIndex v = 0; v < local.size(); ++v) {
    if (convention == ClusteringConvention::ExcludeLowDegree &&
        network.degree(v) < 2) {
      continue;
    }
    sum += local[v];
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

PathMetrics giant_path_metrics(const CollabNetwork& network,
                               Parallelism parallelism) {
  const auto components = connected_components(network);
  if (components.empty() || components.front().size() < 2) {
    throw Error(ErrorCode::DegenerateComponent,
                "largest component has fewer than two nodes");
  }
  const std::vector<NodeIndex>& giant = components.front();
  const std::size_t blocks = (giant.size() + kSourceBlock - 1) / kSourceBlock;
  std::vector<std::uint64_t> block_sum(blocks, 0);
  std::vector<std::uint32_t> block_max(blocks, 0);

  detail::for_each_block(
      giant.size(), kSourceBlock, parallelism.threads,
      [&](std::size_t b, std::size_t begin, std::size_t end) {
        std::vector<std::uint32_t> dist(network.node_count());
        std::vector<NodeIndex> queue;
        queue.reserve(giant.size());
        for (std::size_t s = begin; s < end; ++s) {
          bfs(network, giant[s], dist, queue);
          for (NodeIndex t : queue) {
            block_sum[b] += dist[t];
            block_max[b] = std::max(block_max[b], dist[t]);
          }
        }
      });

  const std::uint64_t total =
      std::accumulate(block_sum.begin(), block_sum.end(), std::uint64_t{0});
  const double k = static_cast<double>(giant.size());
  return {static_cast<double>(total) / (k * (k - 1.0)),
          *std::max_element(block_max.begin(), block_max.end())};
}

PerCategory<double> category_proportions(const CollabNetwork& network) {
  if (network.empty()) {
    throw Error(ErrorCode::EmptyNetwork, "network has no nodes");
  }
  PerCategory<std::size_t> counts{};
  for (const Institution& n : network.nodes()) ++counts[index_of(n.category)];
  PerCategory<double> out{};
  for (std::size_t c = 0; c < kCategoryCount; ++c) {
    out[c] = static_cast<double>(counts[c]) /
             static_cast<double>(network.node_count());
  }
  return out;
}

NetworkSummary summarize(const CollabNetwork& network,
                         const MetricOptions& options) {
  NetworkSummary s;
  s.node_count = network.node_count();
  s.edge_count = network.edge_count();
  s.density = density(s.node_count, s.edge_count);
  s.avg_degree = average_degree(s.node_count, s.edge_count);
  if (s.node_count > 0) {
    s.avg_weighted_degree = 2.0 * static_cast<double>(network.total_weight()) /
                            static_cast<double>(s.node_count);
  }
  s.avg_clustering = avg_clustering(network, options.clustering);
  for (const auto& c : connected_components(network)) {
    s.component_sizes.push_back(c.size());
  }
  if (!s.component_sizes.empty() && s.component_sizes.front() >= 2) {
    s.giant_paths = giant_path_metrics(network, options.parallelism);
  }
  if (!network.empty()) s.category_proportions = category_proportions(network);

  std::vector<std::uint64_t> degrees;
  degrees.reserve(s.node_count);
  for (NodeIndex i = 0; i < s.node_count; ++i) {
    degrees.push_back(network.degree(i));
  }
  try {
    s.power_law = fit_power_law(degrees);
  } catch (const Error& e) {
    s.power_law_error = e.what();
  }
  return s;
}

}  // namespace collabnet
