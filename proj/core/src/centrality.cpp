#include "collabnet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <ostream>
#include <queue>

#include "collabnet/error.hpp"
#include "csv.hpp"
#include "parallel.hpp"

namespace collabnet {

std::string_view to_token(Measure m) noexcept {
  switch (m) {
    case Measure::Betweenness: return "betweenness";
    case Measure::Eigenvector: return "eigenvector";
    case Measure::Degree: return "degree";
    case Measure::WeightedDegree: return "weighted-degree";
  }
  return {};
}

namespace {

void rank(const CollabNetwork& network, CentralityReport& report) {
  report.ranking.clear();
  report.ranking.reserve(report.scores.size());
  for (NodeIndex i = 0; i < report.scores.size(); ++i) {
    report.ranking.push_back({i, report.scores[i]});
  }
  std::sort(report.ranking.begin(), report.ranking.end(),
            [&](const RankedEntry& a, const RankedEntry& b) {
              if (a.score != b.score) return a.score > b.score;
              const auto& na = network.node(a.node);
              const auto& nb = network.node(b.node);
              if (na.name != nb.name) return na.name < nb.name;
              return na.id < nb.id;
            });
}

// Scratch state for one Brandes source pass.
struct BrandesState {
  explicit BrandesState(std::size_t n)
      : sigma(n), delta(n), hops(n), dist(n), preds(n) {
    order.reserve(n);
  }
  std::vector<double> sigma;
  std::vector<double> delta;
  std::vector<std::uint32_t> hops;
  std::vector<double> dist;
  std::vector<std::vector<NodeIndex>> preds;
  std::vector<NodeIndex> order;  // nodes in non-decreasing distance
};

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

void single_source_hops(const CollabNetwork& net, NodeIndex s,
                        BrandesState& st) {
  std::fill(st.sigma.begin(), st.sigma.end(), 0.0);
  std::fill(st.hops.begin(), st.hops.end(), kUnreached);
  for (auto& p : st.preds) p.clear();
  st.order.clear();
  st.sigma[s] = 1.0;
  st.hops[s] = 0;
  st.order.push_back(s);
  for (std::size_t head = 0; head < st.order.size(); ++head) {
    const NodeIndex v = st.order[head];
    for (const Neighbor& nb : net.neighbors(v)) {
      const NodeIndex w = nb.node;
      if (st.hops[w] == kUnreached) {
        st.hops[w] = st.hops[v] + 1;
        st.order.push_back(w);
      }
      if (st.hops[w] == st.hops[v] + 1) {
        st.sigma[w] += st.sigma[v];
        st.preds[w].push_back(v);
      }
    }
  }
}

// Path lengths are sums of 1/weight; values closer than this relative
// tolerance are treated as the same length.
bool same_length(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

void single_source_weighted(const CollabNetwork& net, NodeIndex s,
                            BrandesState& st) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::fill(st.sigma.begin(), st.sigma.end(), 0.0);
  std::fill(st.dist.begin(), st.dist.end(), kInf);
  for (auto& p : st.preds) p.clear();
  st.order.clear();

  using Item = std::pair<double, NodeIndex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<bool> settled(net.node_count(), false);
  st.dist[s] = 0.0;
  st.sigma[s] = 1.0;
  heap.emplace(0.0, s);
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (settled[v]) continue;
    settled[v] = true;
    st.order.push_back(v);
    for (const Neighbor& nb : net.neighbors(v)) {
      const NodeIndex w = nb.node;
      if (settled[w]) continue;
      const double candidate = d + 1.0 / static_cast<double>(nb.weight);
      if (st.dist[w] == kInf ||
          (candidate < st.dist[w] && !same_length(candidate, st.dist[w]))) {
        st.dist[w] = candidate;
        st.sigma[w] = st.sigma[v];
        st.preds[w].assign(1, v);
        heap.emplace(candidate, w);
      } else if (same_length(candidate, st.dist[w])) {
        st.sigma[w] += st.sigma[v];
        st.preds[w].push_back(v);
      }
    }
  }
}

}  // namespace

CentralityReport betweenness(const CollabNetwork& network,
                             const BetweennessOptions& options) {
  const std::size_t n = network.node_count();
  CentralityReport report;
  report.measure = Measure::Betweenness;
  report.weighted = options.weighted;
  report.normalization =
      options.normalized ? Normalization::PairCount : Normalization::None;
  report.scores.assign(n, 0.0);
  if (n == 0) return report;

  // At most 64 blocks so partial sums stay small; the block size depends
  // only on n.
  const std::size_t block = std::max<std::size_t>(16, (n + 63) / 64);
  const std::size_t blocks = (n + block - 1) / block;
  std::vector<std::vector<double>> partial(blocks);

  detail::for_each_block(
      n, block, options.parallelism.threads,
      [&](std::size_t b, std::size_t begin, std::size_t end) {
        BrandesState st(n);
        std::vector<double>& acc = partial[b];
        acc.assign(n, 0.0);
        for (std::size_t src = begin; src < end; ++src) {
          const auto s = static_cast<NodeIndex>(src);
          if (options.weighted) {
            single_source_weighted(network, s, st);
          } else {
            single_source_hops(network, s, st);
          }
          for (NodeIndex v : st.order) st.delta[v] = 0.0;
          for (auto it = st.order.rbegin(); it != st.order.rend(); ++it) {
            const NodeIndex w = *it;
            for (NodeIndex v : st.preds[w]) {
              st.delta[v] += st.sigma[v] / st.sigma[w] * (1.0 + st.delta[w]);
            }
            if (w != s) acc[w] += st.delta[w];
          }
        }
      });

  for (const auto& acc : partial) {
    for (std::size_t v = 0; v < n; ++v) report.scores[v] += acc[v];
  }
  const double pairs = options.normalized && n > 2
                           ? static_cast<double>(n - 1) * (n - 2) / 2.0
                           : 1.0;
  for (double& score : report.scores) score = score / 2.0 / pairs;
  rank(network, report);
  return report;
}

CentralityReport eigenvector(const CollabNetwork& network,
                             const EigenvectorOptions& options) {
  CentralityReport report;
  report.measure = Measure::Eigenvector;
  report.weighted = true;
  report.normalization = Normalization::MaxEntry;
  report.scores.assign(network.node_count(), 0.0);
  if (network.empty()) return report;

  const auto components = connected_components(network);
  const std::vector<NodeIndex>& giant = components.front();
  if (components.size() > 1) {
    report.warnings.push_back(
        std::to_string(network.node_count() - giant.size()) +
        " nodes outside the largest component scored 0");
  }
  if (giant.size() == 1) {
    report.scores[giant.front()] = 1.0;
    report.warnings.push_back("largest component is a single node");
    rank(network, report);
    return report;
  }

  const std::size_t k = giant.size();
  std::vector<std::uint32_t> local(network.node_count(), 0);
  for (std::size_t i = 0; i < k; ++i) {
    local[giant[i]] = static_cast<std::uint32_t>(i);
  }
  auto multiply = [&](const std::vector<double>& x, std::vector<double>& y) {
    for (std::size_t i = 0; i < k; ++i) {
      double sum = 0.0;
      for (const Neighbor& nb : network.neighbors(giant[i])) {
        sum += static_cast<double>(nb.weight) * x[local[nb.node]];
      }
      y[i] = sum;
    }
  };
  auto max_normalize = [](std::vector<double>& v) {
    const double m = *std::max_element(v.begin(), v.end());
    for (double& e : v) e /= m;
  };

  std::vector<double> x(k, 1.0);
  std::vector<double> y(k);
  bool converged = false;
  std::size_t it = 0;
  double change = 0.0;
  while (it < options.max_iterations) {
    ++it;
    multiply(x, y);
    if (it > options.damping_after) {
      // Shifted update; removes the sign-alternating mode of bipartite
      // components that the plain iteration never damps.
      const double m = *std::max_element(y.begin(), y.end());
      for (std::size_t i = 0; i < k; ++i) y[i] = 0.5 * x[i] + 0.5 * y[i] / m;
    }
    max_normalize(y);
    change = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      change = std::max(change, std::abs(y[i] - x[i]));
    }
    x.swap(y);
    if (change < options.tolerance) {
      converged = true;
      break;
    }
  }

  multiply(x, y);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    num += x[i] * y[i];
    den += x[i] * x[i];
  }
  report.eigenvalue = num / den;
  report.iterations = it;
  if (!converged) {
    double residual = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      residual = std::max(residual, std::abs(y[i] - report.eigenvalue * x[i]));
    }
    throw Error(ErrorCode::NoConvergence,
                "power iteration stopped after " + std::to_string(it) +
                    " iterations; last change " + std::to_string(change) +
                    ", residual " + std::to_string(residual));
  }
  for (std::size_t i = 0; i < k; ++i) report.scores[giant[i]] = x[i];
  rank(network, report);
  return report;
}

CentralityReport degree_centrality(const CollabNetwork& network,
                                   bool weighted) {
  CentralityReport report;
  report.measure = weighted ? Measure::WeightedDegree : Measure::Degree;
  report.weighted = weighted;
  report.scores.resize(network.node_count());
  for (NodeIndex i = 0; i < network.node_count(); ++i) {
    report.scores[i] =
        static_cast<double>(weighted ? network.weighted_degree(i)
                                     : network.degree(i));
  }
  rank(network, report);
  return report;
}

std::vector<RankedEntry> top_k(const CentralityReport& report, std::size_t k) {
  const std::size_t m = std::min(k, report.ranking.size());
  return {report.ranking.begin(), report.ranking.begin() + m};
}

void write_ranking_csv(std::ostream& out, const CollabNetwork& network,
                       std::span<const RankedEntry> entries) {
  out << "rank,institution_id,name,category,score\n";
  std::size_t rank = 1;
  for (const RankedEntry& e : entries) {
    const Institution& inst = network.node(e.node);
    detail::write_csv_row(out, {std::to_string(rank++), inst.id, inst.name,
                                std::string(to_token(inst.category)),
                                detail::format_double(e.score)});
  }
}

}  // namespace collabnet
