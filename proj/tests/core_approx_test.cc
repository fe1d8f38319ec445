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
#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ldpcore/audit.h"
#include "ldpcore/core_approx.h"
#include "ldpcore/core_exact.h"
#include "ldpcore/generators.h"
#include "ldpcore/oracles.h"

namespace ldpcore {
namespace {

using ::testing::ElementsAre;

RunConfig Quiet(double eta) {
  RunConfig cfg;
  cfg.noise = NoiseMode::kDisabled;
  cfg.eta = eta;
  return cfg;
}

TEST(ScheduleTest, ThousandTwentyFourAtEtaOne) {
  PhaseSchedule s = *BuildSchedule(1024, 1.0);
  EXPECT_EQ(s.phases, 8);
  EXPECT_EQ(s.rounds_per_phase, 10);
  EXPECT_EQ(s.total_rounds(), 80);
  EXPECT_THAT(std::vector<double>(s.thresholds.begin(), s.thresholds.begin() + 3),
              ElementsAre(3, 9, 27));
  EXPECT_EQ(s.labels, s.thresholds);
  EXPECT_EQ(s.final_label, std::pow(3.0, 8));
}

TEST(ScheduleTest, ThresholdsIncreaseAndReachN) {
  for (int64_t n : {2, 3, 10, 100, 5000}) {
    for (double eta : {0.1, 0.5, 1.0, 8.0}) {
      PhaseSchedule s = *BuildSchedule(n, eta);
      ASSERT_EQ(s.thresholds.size(), static_cast<size_t>(s.phases));
      for (size_t i = 1; i < s.thresholds.size(); ++i) {
        EXPECT_LT(s.thresholds[i - 1], s.thresholds[i]);
      }
      EXPECT_GE(s.thresholds.back(), n - 1);
      EXPECT_GE(std::pow(1 + eta, s.rounds_per_phase), n);
    }
  }
}

TEST(ScheduleTest, LargerEtaMeansFewerPhases) {
  EXPECT_LT(BuildSchedule(4096, 8.0)->phases, BuildSchedule(4096, 0.1)->phases);
}

TEST(ScheduleTest, TotalRoundsScaleAsLogSquared) {
  for (double eta : {0.5, 1.0}) {
    for (int e = 8; e <= 14; ++e) {
      const double n = std::pow(2.0, e);
      const double ratio = BuildSchedule(static_cast<int64_t>(n), eta)
                               ->total_rounds() /
                           (std::log(n) * std::log(n) / std::log1p(eta));
      EXPECT_GT(ratio, 0.3);
      EXPECT_LT(ratio, 2.0);
    }
  }
}

TEST(ScheduleTest, PhaseRoundsOverride) {
  PhaseSchedule s = *BuildSchedule(1024, 1.0, 3);
  EXPECT_EQ(s.rounds_per_phase, 3);
  EXPECT_EQ(s.PhaseOfRound(1), 1);
  EXPECT_EQ(s.PhaseOfRound(3), 1);
  EXPECT_EQ(s.PhaseOfRound(4), 2);
  EXPECT_FALSE(BuildSchedule(10, 0.0).ok());
  EXPECT_FALSE(BuildSchedule(10, 1.0, -1).ok());
}

TEST(RunApproxTest, CliqueLabelsAtFirstThreshold) {
  ProtocolRun run = *RunApproxCore(*GenRegular(4, 3, 0), Quiet(1.0));
  EXPECT_THAT(run.estimates.values, ElementsAre(3, 3, 3, 3));
  EXPECT_THAT(run.estimates.phase, ElementsAre(1, 1, 1, 1));
  EXPECT_EQ(run.transcript.num_rounds(), 1);
}

TEST(RunApproxTest, NoiselessSandwich) {
  for (double eta : {0.5, 1.0}) {
    for (uint64_t seed = 0; seed < 25; ++seed) {
      const size_t n = 20 + 19 * seed;
      Graph g = *GenGnp(n, (2.0 + seed % 10) / n, seed);
      ProtocolRun run = *RunApproxCore(g, Quiet(eta));
      const CorenessVector k = ExactCoreness(g);
      for (VertexId v : g.Vertices()) {
        ASSERT_GE(run.estimates.values[v], k[v]);
        ASSERT_LE(run.estimates.values[v], (2 + eta) * k[v] + (2 + eta));
      }
      EXPECT_LE(run.transcript.num_rounds(),
                BuildSchedule(n, eta)->total_rounds());
    }
  }
}

TEST(RunApproxTest, EstimatesComeFromTheLabelSet) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = *GenGnp(150, 0.05, seed);
    RunConfig cfg;
    cfg.seed = seed;
    cfg.eta = 0.5;
    ProtocolRun run = *RunApproxCore(g, cfg);
    PhaseSchedule s = *BuildSchedule(150, 0.5);
    std::set<double> labels(s.labels.begin(), s.labels.end());
    labels.insert(s.final_label);
    for (VertexId v : g.Vertices()) {
      EXPECT_TRUE(labels.count(run.estimates.values[v])) << v;
      const int p = run.estimates.phase[v];
      EXPECT_EQ(run.estimates.values[v],
                p <= s.phases ? s.labels[p - 1] : s.final_label);
    }
    EXPECT_LE(run.transcript.num_rounds(), s.total_rounds());
  }
}

// Under noise the schedule can end with users still active; they get the
// final label and phase Phi + 1.
TEST(RunApproxTest, SurvivorsGetTheFinalLabel) {
  Graph g = *GenGnp(100, 0.3, 1);
  RunConfig cfg;
  cfg.noise = NoiseMode::kDisabled;
  cfg.phase_rounds = 1;
  cfg.eta = 8.0;
  ProtocolRun run = *RunApproxCore(g, cfg);
  PhaseSchedule s = *BuildSchedule(100, 8.0, 1);
  EXPECT_LE(run.transcript.num_rounds(), s.total_rounds());
  for (VertexId v : g.Vertices()) {
    if (run.transcript.deletion_round(v) == 0) {
      EXPECT_EQ(run.estimates.values[v], s.final_label);
      EXPECT_EQ(run.estimates.phase[v], s.phases + 1);
    }
  }
}

TEST(RunApproxTest, NoisySandwichWithMeasuredAlpha) {
  const double eta = 1.0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Graph g = *GenGnp(256, 8.0 / 256, seed);
    RunConfig cfg;
    cfg.seed = seed;
    cfg.eta = eta;
    ProtocolRun run = *RunApproxCore(g, cfg);
    const double alpha = *MeasureAlphaObs(run.transcript, g);
    const double c = 2 + eta;
    const CorenessVector k = ExactCoreness(g);
    EXPECT_LE(SandwichExcess(k, run.estimates, c, c * alpha, c), 0);
    EXPECT_LE(CoreWitnessShortfall(g, run.estimates, c, c * alpha, c), 0);
  }
}

// Counters sized to Phi * R carry less noise than counters sized to n.
TEST(RunApproxTest, SmallerCounterErrorThanExactProtocol) {
  const size_t n = 4096;
  int wins = 0;
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Graph g = *GenGnp(n, 8.0 / n, seed);
    RunConfig cfg;
    cfg.seed = seed;
    const double exact = *MeasureAlphaObs(RunExactCore(g, cfg)->transcript, g);
    const double approx =
        *MeasureAlphaObs(RunApproxCore(g, cfg)->transcript, g);
    if (approx < exact) ++wins;
  }
  EXPECT_GE(wins, 4);
}

}  // namespace
}  // namespace ldpcore
