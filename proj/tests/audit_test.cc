// Copyright 2026 The ldpcore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cmath>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ldpcore/audit.h"
#include "ldpcore/core_exact.h"
#include "ldpcore/generators.h"
#include "ldpcore/oracles.h"
#include "ldpcore/rng.h"
#include "test_oracles.h"

namespace ldpcore {
namespace {

using ::testing::ElementsAreArray;

CounterConfig Tree(int64_t horizon) {
  CounterConfig cfg;
  cfg.horizon = horizon;
  return cfg;
}

TEST(ExactTreeNodesTest, IdenticalStreamsAgree) {
  const std::vector<int64_t> a = {1, 0, 3, 2, 2, 1, 0};
  EXPECT_EQ(ExactTreeNodes(a, 8), ExactTreeNodes(a, 8));
  // Node at step 4 covers steps 1..4, at step 6 covers 5..6.
  EXPECT_EQ(ExactTreeNodes(a, 8), (std::vector<int64_t>{1, 1, 3, 6, 2, 3, 0}));
}

// Changing position p by one changes exactly the nodes whose dyadic block
// contains p.
TEST(ExactTreeNodesTest, DifferingNodesAreTheCoveringBlocks) {
  SeededRng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int64_t len = 1 + static_cast<int64_t>(rng.Below(200));
    std::vector<int64_t> a(len);
    for (auto& x : a) x = static_cast<int64_t>(rng.Below(4));
    std::vector<int64_t> b = a;
    const int64_t p = 1 + static_cast<int64_t>(rng.Below(len));
    b[p - 1] += 1;
    const std::vector<int64_t> na = ExactTreeNodes(a, 256);
    const std::vector<int64_t> nb = ExactTreeNodes(b, 256);
    std::vector<int64_t> differing;
    for (int64_t s = 1; s <= len; ++s) {
      if (na[s - 1] != nb[s - 1]) {
        differing.push_back(s);
        EXPECT_EQ(nb[s - 1] - na[s - 1], 1);
      }
    }
    EXPECT_THAT(differing,
                ElementsAreArray(testing::DyadicCoveringSteps(p, len)));
    EXPECT_LE(static_cast<int>(differing.size()), TreeLevels(256));
  }
}

TEST(CounterSensitivityTest, PassesAtThousandTwentyFour) {
  absl::StatusOr<AuditReport> r = AuditCounterSensitivity(Tree(1024), 1024, 1000, 7);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->pass) << r->details.dump();
  EXPECT_EQ(r->details["max_node_difference"], 1);
  EXPECT_LE(r->details["max_differing_nodes"].get<int>(), 11);
}

TEST(CounterSensitivityTest, ZeroTrialsPassTrivially) {
  absl::StatusOr<AuditReport> r = AuditCounterSensitivity(Tree(16), 16, 0, 0);
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->details["max_differing_nodes"], 0);
}

TEST(CounterSensitivityTest, RejectsStreamsPastTheHorizon) {
  EXPECT_EQ(AuditCounterSensitivity(Tree(16), 17, 1, 0).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(StreamDiscrepancyTest, IsolatedPairDiffersOnlyInInitialDegree) {
  RunConfig cfg;
  cfg.seed = 1;
  absl::StatusOr<AuditReport> r = AuditProtocolStreamDiscrepancy(
      Graph::Empty(4), 1, 2, cfg, ProtocolKind::kExact);
  ASSERT_TRUE(r.ok());
  EXPECT_TRUE(r->pass) << r->details.dump();
  EXPECT_EQ(r->details["nonendpoint_discrepancy"], 0);
  for (const auto& e : r->details["endpoints"]) {
    EXPECT_EQ(e["initial_degree_diff"], 1);
    EXPECT_TRUE(e["element_diffs"].empty());
  }
}

TEST(StreamDiscrepancyTest, CliqueEdgeToggle) {
  Graph k4 = *GenRegular(4, 3, 0);
  for (uint64_t seed = 0; seed < 10; ++seed) {
    RunConfig cfg;
    cfg.seed = seed;
    for (ProtocolKind p : {ProtocolKind::kExact, ProtocolKind::kApprox}) {
      absl::StatusOr<AuditReport> r =
          AuditProtocolStreamDiscrepancy(k4, 0, 3, cfg, p);
      ASSERT_TRUE(r.ok());
      EXPECT_TRUE(r->pass) << r->details.dump();
    }
  }
}

TEST(StreamDiscrepancyTest, RandomPairsPass) {
  SeededRng rng(3);
  for (uint64_t trial = 0; trial < 25; ++trial) {
    Graph g = *GenGnp(64, 0.1, trial);
    const VertexId u = static_cast<VertexId>(rng.Below(64));
    VertexId v = static_cast<VertexId>(rng.Below(63));
    if (v >= u) ++v;
    RunConfig cfg;
    cfg.seed = trial;
    cfg.memory = trial % 2 ? MemoryMode::kMemoryless : MemoryMode::kMemoryful;
    absl::StatusOr<AuditReport> r =
        AuditProtocolStreamDiscrepancy(g, u, v, cfg, ProtocolKind::kExact);
    ASSERT_TRUE(r.ok());
    EXPECT_TRUE(r->pass) << r->details.dump();
  }
}

TEST(StreamDiscrepancyTest, RejectsALoop) {
  EXPECT_FALSE(AuditProtocolStreamDiscrepancy(*GenPath(3), 1, 1, RunConfig(),
                                              ProtocolKind::kExact)
                   .ok());
}

TEST(AlphaTest, ZeroWithoutNoise) {
  Graph g = *GenGnp(100, 0.05, 1);
  RunConfig cfg;
  cfg.noise = NoiseMode::kDisabled;
  EXPECT_EQ(*MeasureAlphaObs(RunExactCore(g, cfg)->transcript, g), 0.0);
}

TEST(AlphaTest, MatchesDirectRecomputation) {
  Graph g = *GenGnp(70, 0.1, 2);
  RunConfig cfg;
  cfg.seed = 2;
  ProtocolRun run = *RunExactCore(g, cfg);
  double direct = 0;
  for (const Round& r : run.transcript.rounds()) {
    for (const UserMessage& m : r.messages) {
      int64_t deg = 0;
      for (VertexId u : g.neighbors(m.vertex)) {
        deg += run.transcript.active_at(u, r.t) ? 1 : 0;
      }
      direct = std::max(direct, std::fabs(m.value - deg));
    }
  }
  EXPECT_EQ(*MeasureAlphaObs(run.transcript, g), direct);
}

TEST(AlphaTest, RejectsAMismatchedGraph) {
  ProtocolRun run = *RunExactCore(*GenPath(5), RunConfig());
  EXPECT_EQ(MeasureAlphaObs(run.transcript, *GenPath(6)).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(AlphaTest, WithinTheComposedBoundMostOfTheTime) {
  const size_t n = 1024;
  const double bound = BtErrorBound(n, 1.0 / (n * n), 0.5) +
                       TailRadius(InitialDegreeScale(1.0), 1.0 / (n * n));
  int within = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = *GenGnp(n, 8.0 / n, seed);
    RunConfig cfg;
    cfg.seed = seed;
    if (*MeasureAlphaObs(RunExactCore(g, cfg)->transcript, g) <= bound) {
      ++within;
    }
  }
  EXPECT_GE(within, 19);
}

TEST(SandwichTest, HandComputedExcess) {
  EstimateVector est;
  est.values = {2.0, 5.5};
  const CorenessVector k = {3, 4};
  // Vertex 0 is 1 below k; vertex 1 is 1.5 above k.
  EXPECT_DOUBLE_EQ(SandwichExcess(k, est, 1.0, 0.0), 1.5);
  EXPECT_DOUBLE_EQ(SandwichExcess(k, est, 1.0, 1.5), 0.0);
  EXPECT_DOUBLE_EQ(SandwichExcess(k, est, 2.0, 1.0), 0.0);
}

TEST(CoreWitnessTest, CliqueWithPendant) {
  Graph g = *Graph::FromEdges(
      5, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
  EstimateVector est;
  est.values = {3, 3, 3, 3, 1};
  EXPECT_LE(CoreWitnessShortfall(g, est, 1.0, 0.0), 0);
  // Claiming 4 for the clique overstates its induced degree by one.
  est.values = {4, 4, 4, 4, 1};
  EXPECT_DOUBLE_EQ(CoreWitnessShortfall(g, est, 1.0, 0.0), 1.0);
}

}  // namespace
}  // namespace ldpcore
