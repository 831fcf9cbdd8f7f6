#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "collabnet/error.hpp"
#include "collabnet/network.hpp"
#include "support.hpp"

namespace collabnet {
namespace {

using testing::make_network;

// Registry where affiliation "<id>" maps to institution "<id>".
InstitutionRegistry registry_of(
    const std::vector<std::pair<std::string, Category>>& insts) {
  InstitutionRegistry r;
  for (const auto& [id, cat] : insts) r.add(id, {id, id + " name", cat});
  return r;
}

InstitutionRegistry nz_three() {
  return registry_of({{"AUT", Category::HigherEducation},
                      {"ESR", Category::Government},
                      {"GNS", Category::Government}});
}

InstitutionRegistry i1_i2() {
  return registry_of({{"I1", Category::HigherEducation},
                      {"I2", Category::BusinessEnterprise}});
}

PublicationRecord pub(const std::string& id,
                      const std::vector<Authorship>& authorships,
                      std::vector<std::string> subjects = {}) {
  return {id, 2012, std::move(subjects), authorships};
}

CollabNetwork build(const std::vector<PublicationRecord>& recs,
                    const InstitutionRegistry& registry,
                    BuildOptions options = {}) {
  return build_network(clean_records(recs, registry), registry, options);
}

Weight weight(const CollabNetwork& g, const std::string& a,
              const std::string& b) {
  const EdgeData* e = g.edge(g.require(a), g.require(b));
  return e ? e->weight : 0;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no collabnet::Error thrown";
  return ErrorCode::IoError;
}

TEST(BuildNetwork, ThreeAuthorsThreeInstitutions) {
  const auto g = build({pub("P1", {{"a1", "AUT"}, {"a2", "ESR"}, {"a3", "GNS"}})},
                       nz_three());
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(weight(g, "AUT", "ESR"), 1u);
  EXPECT_EQ(weight(g, "ESR", "GNS"), 1u);
  EXPECT_EQ(weight(g, "AUT", "GNS"), 1u);
}

TEST(BuildNetwork, SingleMultiAffiliatedAuthorIsNotACollaboration) {
  const auto g = build({pub("P1", {{"a1", "I1"}, {"a1", "I2"}})}, i1_i2());
  EXPECT_EQ(g.edge_count(), 0u);
  EXPECT_EQ(g.node_count(), 0u);
  const auto with_isolates =
      build({pub("P1", {{"a1", "I1"}, {"a1", "I2"}})}, i1_i2(),
            {.with_subjects = false, .include_isolates = true});
  EXPECT_EQ(with_isolates.node_count(), 2u);
  EXPECT_EQ(with_isolates.edge_count(), 0u);
}

TEST(BuildNetwork, WeightsAddAcrossPublications) {
  const auto g = build({pub("P1", {{"a1", "I1"}, {"a2", "I2"}}),
                        pub("P2", {{"b1", "I1"}, {"b2", "I2"}})},
                       i1_i2());
  EXPECT_EQ(weight(g, "I1", "I2"), 2u);
}

TEST(BuildNetwork, MixedCaseIsCreditedOnce) {
  // a1@{I1,I2}, a2@{I2}: a1 evidences I1 and a2 evidences I2.
  const auto g =
      build({pub("P1", {{"a1", "I1"}, {"a1", "I2"}, {"a2", "I2"}})}, i1_i2());
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(weight(g, "I1", "I2"), 1u);
}

TEST(BuildNetwork, ManyAuthorPairsStillOnePublication) {
  const auto g = build({pub("P1", {{"a1", "I1"},
                                   {"a2", "I1"},
                                   {"a3", "I2"},
                                   {"a4", "I2"}})},
                       i1_i2());
  EXPECT_EQ(weight(g, "I1", "I2"), 1u);
}

TEST(BuildNetwork, InvalidNetworksRejected) {
  const std::vector<Institution> two = {{"x", "X", Category::Government},
                                        {"y", "Y", Category::Government}};
  EXPECT_EQ(code_of([&] {
              CollabNetwork(two, {{"x", "x", EdgeData{1, {}}}}, false);
            }),
            ErrorCode::MalformedRow);
  EXPECT_EQ(code_of([&] {
              CollabNetwork(two, {{"x", "y", EdgeData{0, {}}}}, false);
            }),
            ErrorCode::MalformedRow);
  EXPECT_EQ(code_of([&] {
              CollabNetwork(two, {{"x", "z", EdgeData{1, {}}}}, false);
            }),
            ErrorCode::MalformedRow);
  EXPECT_EQ(code_of([&] {
              CollabNetwork(two,
                            {{"x", "y", EdgeData{1, {}}},
                             {"y", "x", EdgeData{2, {}}}},
                            false);
            }),
            ErrorCode::MalformedRow);
  EXPECT_EQ(code_of([&] {
              CollabNetwork(two, {{"x", "y", EdgeData{1, {{"Medicine", 2}}}}},
                            true);
            }),
            ErrorCode::MalformedRow);
}

TEST(AggregateByCategory, GovernmentGetsTwoFromAut) {
  const auto g = build({pub("P1", {{"a1", "AUT"}, {"a2", "ESR"}, {"a3", "GNS"}})},
                       nz_three());
  const auto agg = aggregate_by_category(g, "AUT");
  EXPECT_EQ(agg[index_of(Category::Government)], 2u);
  EXPECT_EQ(agg[index_of(Category::HigherEducation)], 0u);
  EXPECT_EQ(agg[index_of(Category::BusinessEnterprise)], 0u);
  EXPECT_EQ(agg[index_of(Category::PrivateNotForProfit)], 0u);
  // Lookup by display name works too.
  EXPECT_EQ(aggregate_by_category(g, "AUT name"), agg);
  EXPECT_EQ(code_of([&] { aggregate_by_category(g, "NOPE"); }),
            ErrorCode::UnknownInstitution);
}

TEST(AggregateByCategory, IsolateIsAllZero) {
  const auto g = make_network(2, {});
  EXPECT_EQ(aggregate_by_category(g, "n00"), (PerCategory<Weight>{}));
}

TEST(EgoSubgraph, KeepsNeighbourNeighbourEdges) {
  // 0-1, 0-2, 1-2, 2-3: ego of 0 is {0,1,2} with edge {1,2}; 3 is out.
  const auto g = make_network(4, {{0, 1, 2}, {0, 2, 1}, {1, 2, 5}, {2, 3, 1}});
  const auto ego = ego_subgraph(g, "n00");
  EXPECT_EQ(ego.center, "n00");
  EXPECT_EQ(ego.network.node_count(), 3u);
  EXPECT_EQ(ego.network.edge_count(), 3u);
  EXPECT_EQ(weight(ego.network, "n01", "n02"), 5u);
  EXPECT_FALSE(ego.network.index_of("n03").has_value());
}

TEST(EgoSubgraph, IsolateCenter) {
  const auto g = make_network(3, {{1, 2}});
  const auto ego = ego_subgraph(g, "n00");
  EXPECT_EQ(ego.network.node_count(), 1u);
  EXPECT_EQ(ego.network.edge_count(), 0u);
  EXPECT_EQ(code_of([&] { ego_subgraph(g, "zz"); }),
            ErrorCode::UnknownInstitution);
}

TEST(EgoSubgraph, InducedOnRandomGraphs) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testing::random_graph(rng, 12, 0.3, 4);
    const NodeIndex c = NodeIndex(trial % 12);
    const auto ego = ego_subgraph(g, g.node(c).id);
    std::set<std::string> members{g.node(c).id};
    for (const auto& nb : g.neighbors(c)) members.insert(g.node(nb.node).id);
    ASSERT_EQ(ego.network.node_count(), members.size());
    std::size_t expected_edges = 0;
    for (const auto& e : g.edge_records()) {
      if (members.count(e.a) && members.count(e.b)) {
        ++expected_edges;
        EXPECT_EQ(weight(ego.network, e.a, e.b), e.data.weight);
      }
    }
    EXPECT_EQ(ego.network.edge_count(), expected_edges);
  }
}

TEST(FilterBySubject, DirectAttribution) {
  const auto reg = i1_i2();
  const auto g = build({pub("P1", {{"a", "I1"}, {"b", "I2"}}, {"Medicine"})},
                       reg, {.with_subjects = true});
  const auto med = filter_by_subject(g, "Medicine");
  EXPECT_EQ(med.edge_count(), 1u);
  EXPECT_EQ(weight(med, "I1", "I2"), 1u);
  const auto chem = filter_by_subject(g, "Chemistry");
  EXPECT_TRUE(chem.empty());
  EXPECT_EQ(chem.edge_count(), 0u);
}

TEST(FilterBySubject, MultiSubjectPublicationCountsUnderEach) {
  const auto reg = i1_i2();
  const auto g = build(
      {pub("P1", {{"a", "I1"}, {"b", "I2"}}, {"Medicine", "Neuroscience"}),
       pub("P2", {{"c", "I1"}, {"d", "I2"}}, {"Medicine"})},
      reg, {.with_subjects = true});
  EXPECT_EQ(weight(g, "I1", "I2"), 2u);
  EXPECT_EQ(weight(filter_by_subject(g, "Medicine"), "I1", "I2"), 2u);
  EXPECT_EQ(weight(filter_by_subject(g, "Neuroscience"), "I1", "I2"), 1u);
}

TEST(FilterBySubject, Errors) {
  const auto reg = i1_i2();
  const std::vector<PublicationRecord> recs = {
      pub("P1", {{"a", "I1"}, {"b", "I2"}}, {"Medicine"})};
  const auto plain = build(recs, reg);
  EXPECT_EQ(code_of([&] { filter_by_subject(plain, "Medicine"); }),
            ErrorCode::SubjectsUnavailable);
  const auto rich = build(recs, reg, {.with_subjects = true});
  EXPECT_EQ(code_of([&] { filter_by_subject(rich, "Astrology"); }),
            ErrorCode::UnknownSubject);
}

// Properties over many random corpora.

TEST(BuildNetworkProperty, MatchesBruteForcePairEnumeration) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n_inst = 2 + trial % 9;
    const auto reg = testing::small_registry(n_inst);
    const auto recs = testing::random_records(rng, 1 + trial % 8, n_inst);
    const auto g = build(recs, reg);
    ASSERT_EQ(testing::weights_of(g), testing::oracle_pairs(recs, reg))
        << "trial " << trial;
  }
}

TEST(BuildNetworkProperty, HandshakeAndPairCap) {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto reg = testing::small_registry(10);
    const std::size_t n_pubs = 1 + trial % 30;
    const auto recs = testing::random_records(rng, n_pubs, 10);
    const auto g = build(recs, reg);
    Weight wd_sum = 0;
    std::size_t deg_sum = 0;
    for (NodeIndex v = 0; v < g.node_count(); ++v) {
      wd_sum += g.weighted_degree(v);
      deg_sum += g.degree(v);
      const auto agg = aggregate_by_category(g, g.node(v).id);
      Weight parts = 0;
      for (Weight w : agg) parts += w;
      ASSERT_EQ(parts, g.weighted_degree(v));
    }
    ASSERT_EQ(wd_sum, 2 * g.total_weight());
    ASSERT_EQ(deg_sum, 2 * g.edge_count());
    for (const auto& [key, data] : g.edges()) ASSERT_LE(data.weight, n_pubs);

    // One more publication moves any pair by 0 or 1.
    auto more = recs;
    more.push_back(testing::random_records(rng, 1, 10).front());
    more.back().pub_id = "extra";
    const auto after = testing::weights_of(build(more, reg));
    const auto before = testing::weights_of(g);
    for (const auto& [pair, w] : after) {
      const auto it = before.find(pair);
      const Weight old = it == before.end() ? 0 : it->second;
      ASSERT_TRUE(w == old || w == old + 1);
    }
  }
}

TEST(BuildNetworkProperty, PermutationInvariance) {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto reg = testing::small_registry(7);
    auto recs = testing::random_records(rng, 1 + trial % 10, 7);
    for (auto& r : recs) r.subjects = {"Medicine", "Chemistry"};
    const auto g = build(recs, reg, {.with_subjects = true});
    std::shuffle(recs.begin(), recs.end(), rng);
    for (auto& r : recs) {
      std::shuffle(r.authorships.begin(), r.authorships.end(), rng);
      std::shuffle(r.subjects.begin(), r.subjects.end(), rng);
    }
    ASSERT_EQ(build(recs, reg, {.with_subjects = true}), g);
  }
}

}  // namespace
}  // namespace collabnet
