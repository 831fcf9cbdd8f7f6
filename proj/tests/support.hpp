#pragma once

// Test-only helpers and brute-force oracles. Nothing here calls into the
// library algorithms it is used to check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "collabnet/corpus.hpp"
#include "collabnet/network.hpp"

namespace collabnet::testing {

inline std::string node_id(std::size_t i) {
  std::string s = std::to_string(i);
  return "n" + std::string(s.size() < 2 ? 2 - s.size() : 0, '0') + s;
}

struct TestEdge {
  std::size_t a, b;
  Weight w = 1;
};

/// Nodes n00..n{n-1} named "Node 00".. with categories cycling through the
/// four classes unless given.
inline CollabNetwork make_network(std::size_t n,
                                  const std::vector<TestEdge>& edges,
                                  const std::vector<Category>& cats = {}) {
  std::vector<Institution> nodes;
  for (std::size_t i = 0; i < n; ++i) {
    const Category c = cats.empty() ? kAllCategories[i % kCategoryCount]
                                    : cats[i];
    nodes.push_back({node_id(i), "Node " + node_id(i).substr(1), c});
  }
  std::vector<EdgeRecord> recs;
  for (const auto& e : edges) {
    recs.push_back({node_id(e.a), node_id(e.b), EdgeData{e.w, {}}});
  }
  return CollabNetwork(std::move(nodes), std::move(recs), false);
}

inline CollabNetwork path_graph(std::size_t n) {
  std::vector<TestEdge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return make_network(n, e);
}

inline CollabNetwork cycle_graph(std::size_t n) {
  std::vector<TestEdge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return make_network(n, e);
}

inline CollabNetwork star_graph(std::size_t leaves) {
  std::vector<TestEdge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, i});
  return make_network(leaves + 1, e);
}

inline CollabNetwork complete_graph(std::size_t n) {
  std::vector<TestEdge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  }
  return make_network(n, e);
}

/// G(n, p) with integer weights in [1, max_weight].
inline CollabNetwork random_graph(std::mt19937_64& rng, std::size_t n,
                                  double p, Weight max_weight = 1) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  std::vector<TestEdge> e;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (coin(rng)) e.push_back({i, j, weight(rng)});
    }
  }
  return make_network(n, e);
}

/// Random connected graph: a random spanning tree plus G(n, p) extras.
inline CollabNetwork random_connected_graph(std::mt19937_64& rng,
                                            std::size_t n, double p,
                                            Weight max_weight) {
  std::uniform_int_distribution<Weight> weight(1, max_weight);
  std::bernoulli_distribution coin(p);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  std::vector<TestEdge> e;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    const std::size_t j = parent(rng);
    seen.insert({j, i});
    e.push_back({j, i, weight(rng)});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!seen.count({i, j}) && coin(rng)) e.push_back({i, j, weight(rng)});
    }
  }
  return make_network(n, e);
}

inline CollabNetwork random_tree(std::mt19937_64& rng, std::size_t n) {
  std::vector<TestEdge> e;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> parent(0, i - 1);
    e.push_back({parent(rng), i});
  }
  return make_network(n, e);
}

// ---------------------------------------------------------------------------
// Oracles

using Matrix = std::vector<std::vector<double>>;

inline Matrix adjacency_matrix(const CollabNetwork& g) {
  const std::size_t n = g.node_count();
  Matrix a(n, std::vector<double>(n, 0.0));
  for (const auto& [key, data] : g.edges()) {
    a[key.first][key.second] = static_cast<double>(data.weight);
    a[key.second][key.first] = static_cast<double>(data.weight);
  }
  return a;
}

inline constexpr int kNoPath = -1;

/// Hop distances from boolean powers of the adjacency matrix: dist(i, j) is
/// the smallest k with (A^k)_ij != 0.
inline std::vector<std::vector<int>> matrix_power_distances(
    const CollabNetwork& g) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [key, data] : g.edges()) {
    adj[key.first][key.second] = adj[key.second][key.first] = true;
  }
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kNoPath));
  std::vector<std::vector<bool>> power(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    power[i][i] = true;
    dist[i][i] = 0;
  }
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t m = 0; m < n; ++m) {
        if (!power[i][m]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (adj[m][j]) next[i][j] = true;
        }
      }
    }
    power = std::move(next);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (power[i][j] && dist[i][j] == kNoPath) dist[i][j] = int(k);
      }
    }
  }
  return dist;
}

/// Components as sorted member lists, via reachability.
inline std::set<std::vector<NodeIndex>> oracle_components(
    const CollabNetwork& g) {
  const auto dist = matrix_power_distances(g);
  std::set<std::vector<NodeIndex>> out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    std::vector<NodeIndex> members;
    for (std::size_t j = 0; j < g.node_count(); ++j) {
      if (dist[i][j] != kNoPath) members.push_back(NodeIndex(j));
    }
    out.insert(members);
  }
  return out;
}

struct OraclePaths {
  std::uint64_t distance_sum = 0;
  std::uint64_t pairs = 0;
  int diameter = 0;
};

/// Path totals within the largest component (ties: smallest first member).
inline OraclePaths oracle_giant_paths(const CollabNetwork& g) {
  const auto comps = oracle_components(g);
  std::vector<NodeIndex> giant;
  for (const auto& c : comps) {
    if (c.size() > giant.size() ||
        (c.size() == giant.size() && c.front() < giant.front())) {
      giant = c;
    }
  }
  const auto dist = matrix_power_distances(g);
  OraclePaths out;
  for (std::size_t x = 0; x < giant.size(); ++x) {
    for (std::size_t y = x + 1; y < giant.size(); ++y) {
      const int d = dist[giant[x]][giant[y]];
      out.distance_sum += std::uint64_t(d);
      ++out.pairs;
      out.diameter = std::max(out.diameter, d);
    }
  }
  return out;
}

/// Local clustering by checking every neighbour pair in the matrix.
inline std::vector<double> oracle_clustering(const CollabNetwork& g) {
  const auto a = adjacency_matrix(g);
  const std::size_t n = g.node_count();
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> nb;
    for (std::size_t u = 0; u < n; ++u) {
      if (a[v][u] != 0.0) nb.push_back(u);
    }
    if (nb.size() < 2) continue;
    std::size_t links = 0;
    for (std::size_t x = 0; x < nb.size(); ++x) {
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        if (a[nb[x]][nb[y]] != 0.0) ++links;
      }
    }
    out[v] = double(links) / (double(nb.size()) * double(nb.size() - 1) / 2.0);
  }
  return out;
}

/// Betweenness by enumerating every simple path between every unordered
/// pair, keeping the shortest ones and crediting interior vertices with the
/// fraction of shortest paths through them. `weighted` measures paths by
/// the sum of 1/weight.
inline std::vector<double> oracle_betweenness(const CollabNetwork& g,
                                              bool weighted) {
  const std::size_t n = g.node_count();
  const auto a = adjacency_matrix(g);
  std::vector<double> score(n, 0.0);
  auto close = [](double x, double y) {
    if (std::isinf(x) || std::isinf(y)) return x == y;
    return std::abs(x - y) <= 1e-12 * std::max({1.0, std::abs(x), std::abs(y)});
  };
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = s + 1; t < n; ++t) {
      double best = std::numeric_limits<double>::infinity();
      double count = 0;
      std::vector<double> through(n, 0.0);
      std::vector<std::size_t> stack{s};
      std::vector<bool> on(n, false);
      on[s] = true;
      std::function<void(std::size_t, double)> dfs = [&](std::size_t v,
                                                         double len) {
        if (v == t) {
          if (len < best && !close(len, best)) {
            best = len;
            count = 0;
            std::fill(through.begin(), through.end(), 0.0);
          }
          if (close(len, best)) {
            count += 1;
            for (std::size_t k = 1; k + 1 < stack.size(); ++k) {
              through[stack[k]] += 1;
            }
          }
          return;
        }
        for (std::size_t u = 0; u < n; ++u) {
          if (a[v][u] == 0.0 || on[u]) continue;
          on[u] = true;
          stack.push_back(u);
          dfs(u, len + (weighted ? 1.0 / a[v][u] : 1.0));
          stack.pop_back();
          on[u] = false;
        }
      };
      dfs(s, 0.0);
      if (count == 0) continue;
      for (std::size_t v = 0; v < n; ++v) score[v] += through[v] / count;
    }
  }
  return score;
}

/// For a tree, the number of vertex pairs separated by removing v.
inline std::vector<double> tree_betweenness(const CollabNetwork& tree) {
  const std::size_t n = tree.node_count();
  std::vector<double> out(n, 0.0);
  for (std::size_t v = 0; v < n; ++v) {
    // Sizes of the branches hanging off v.
    std::vector<bool> seen(n, false);
    seen[v] = true;
    std::uint64_t sum_sq = 0;
    for (const auto& start : tree.neighbors(NodeIndex(v))) {
      std::uint64_t size = 0;
      std::vector<NodeIndex> stack{start.node};
      seen[start.node] = true;
      while (!stack.empty()) {
        const NodeIndex u = stack.back();
        stack.pop_back();
        ++size;
        for (const auto& w : tree.neighbors(u)) {
          if (!seen[w.node]) {
            seen[w.node] = true;
            stack.push_back(w.node);
          }
        }
      }
      sum_sq += size * size;
    }
    const double rest = double(n - 1);
    out[v] = (rest * rest - double(sum_sq)) / 2.0;
  }
  return out;
}

/// Pair weights by looking at every pair of raw authorships of different
/// authors in every publication.
inline std::map<std::pair<std::string, std::string>, Weight> oracle_pairs(
    const std::vector<PublicationRecord>& records,
    const InstitutionRegistry& registry) {
  std::map<std::pair<std::string, std::string>, Weight> out;
  for (const auto& rec : records) {
    std::set<std::pair<std::string, std::string>> joined;
    for (const auto& x : rec.authorships) {
      for (const auto& y : rec.authorships) {
        if (x.author_id == y.author_id) continue;
        const Institution* i = registry.resolve(x.affiliation_id);
        const Institution* j = registry.resolve(y.affiliation_id);
        if (!i || !j || i->id == j->id) continue;
        joined.insert(std::minmax(i->id, j->id));
      }
    }
    for (const auto& p : joined) ++out[p];
  }
  return out;
}

inline std::map<std::pair<std::string, std::string>, Weight> weights_of(
    const CollabNetwork& g) {
  std::map<std::pair<std::string, std::string>, Weight> out;
  for (const auto& e : g.edge_records()) out[{e.a, e.b}] = e.data.weight;
  return out;
}

// ---------------------------------------------------------------------------
// Corpus fixtures

/// Registry with institutions i0..i{n-1}, each reachable through two
/// affiliation IDs a{k}x and a{k}y.
inline InstitutionRegistry small_registry(std::size_t n) {
  InstitutionRegistry r;
  for (std::size_t k = 0; k < n; ++k) {
    const Institution inst{"i" + std::to_string(k),
                           "Institution " + std::to_string(k),
                           kAllCategories[k % kCategoryCount]};
    r.add("a" + std::to_string(k) + "x", inst);
    r.add("a" + std::to_string(k) + "y", inst);
  }
  return r;
}

/// Random publications over `small_registry(n_inst)`; some authors carry
/// several affiliations, some of them of the same institution.
inline std::vector<PublicationRecord> random_records(std::mt19937_64& rng,
                                                     std::size_t n_pubs,
                                                     std::size_t n_inst) {
  std::uniform_int_distribution<std::size_t> authors(1, 4);
  std::uniform_int_distribution<std::size_t> affs(1, 3);
  std::uniform_int_distribution<std::size_t> inst(0, n_inst - 1);
  std::bernoulli_distribution pick_x(0.5);
  std::vector<PublicationRecord> out;
  for (std::size_t p = 0; p < n_pubs; ++p) {
    PublicationRecord rec;
    rec.pub_id = "p" + std::to_string(p);
    rec.year = 2012;
    const std::size_t na = authors(rng);
    std::set<Authorship> seen;
    for (std::size_t a = 0; a < na; ++a) {
      const std::size_t nf = affs(rng);
      for (std::size_t f = 0; f < nf; ++f) {
        Authorship au{"p" + std::to_string(p) + "u" + std::to_string(a),
                      "a" + std::to_string(inst(rng)) +
                          (pick_x(rng) ? "x" : "y")};
        if (seen.insert(au).second) rec.authorships.push_back(au);
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

/// Discrete power-law draws P(X = x) ∝ x^-alpha for x ≥ xmin by inverting
/// a CDF table summed term by term; the tail beyond the table uses the
/// continuous approximation.
inline std::vector<std::uint64_t> sample_discrete_power_law(
    std::mt19937_64& rng, double alpha, std::uint64_t xmin, std::size_t n) {
  constexpr std::uint64_t kTable = 1'000'000;
  std::vector<double> cdf;
  cdf.reserve(kTable);
  double total = 0.0;
  for (std::uint64_t x = xmin; x < xmin + kTable; ++x) {
    total += std::pow(double(x), -alpha);
    cdf.push_back(total);
  }
  const double end = double(xmin + kTable) - 0.5;
  const double tail = std::pow(end, 1.0 - alpha) / (alpha - 1.0);
  total += tail;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unit(rng) * total;
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
    if (it != cdf.end()) {
      out.push_back(xmin + std::uint64_t(it - cdf.begin()));
    } else {
      const double rest = (u - cdf.back()) / tail;  // in [0, 1)
      out.push_back(std::uint64_t(
          end * std::pow(1.0 - rest, -1.0 / (alpha - 1.0)) + 0.5));
    }
  }
  return out;
}

/// Preferential attachment: each new node links to m distinct existing
/// nodes chosen with probability proportional to degree.
inline std::vector<std::uint64_t> preferential_attachment_degrees(
    std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<std::uint64_t> degree(n, 0);
  std::vector<std::size_t> ends;  // one entry per edge endpoint
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      ++degree[i];
      ++degree[j];
      ends.push_back(i);
      ends.push_back(j);
    }
  }
  for (std::size_t v = m + 1; v < n; ++v) {
    std::set<std::size_t> targets;
    while (targets.size() < m) {
      std::uniform_int_distribution<std::size_t> pick(0, ends.size() - 1);
      targets.insert(ends[pick(rng)]);
    }
    for (std::size_t u : targets) {
      ++degree[u];
      ++degree[v];
      ends.push_back(u);
      ends.push_back(v);
    }
  }
  return degree;
}

inline std::filesystem::path temp_dir(const std::string& tag) {
  static std::mt19937_64 rng(std::random_device{}());
  auto dir = std::filesystem::temp_directory_path() /
             ("collabnet-" + tag + "-" + std::to_string(rng()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& p,
                       const std::string& content) {
  std::ofstream out(p, std::ios::binary);
  out << content;
}

}  // namespace collabnet::testing
