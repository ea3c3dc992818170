#include "metric_completer/obstacles.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "metric_completer/errors.h"
#include "metric_completer/io.h"

namespace metric_completer {
namespace {

const Params kParams = Params::create(6, 2, 15);

std::vector<LabelSequence> canonical_set(const std::vector<std::string>& words) {
  std::set<LabelSequence> out;
  for (const std::string& w : words) out.insert(canonical_cycle(parse_labels(w)));
  return {out.begin(), out.end()};
}

TEST(ObstacleTraceTest, Cycle11665) {
  const EdgeLabelledGraph g = cycle_graph({1, 1, 6, 6, 5}, kParams);
  const ObstacleWitness w = obstacle_trace(g, kParams, 4);
  EXPECT_EQ(w.seed.sides, (std::array<Distance, 3>{1, 3, 5}));
  EXPECT_EQ(w.seed.status, TriangleStatus::kNonMetric);
  EXPECT_EQ(canonical_cycle(w.cycle), canonical_cycle({1, 1, 6, 6, 5}));
  EXPECT_TRUE(is_homomorphism(w.obstacle, g, w.hom));
  std::vector<Vertex> image = w.hom;
  std::sort(image.begin(), image.end());
  EXPECT_EQ(image, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  ASSERT_EQ(w.levels.size(), 2u);
  EXPECT_EQ(w.levels[0].rank, 5);
  EXPECT_EQ(w.levels[0].distance, 3);
  EXPECT_EQ(w.levels[1].rank, 2);
  EXPECT_EQ(w.levels[1].distance, 5);
}

TEST(ObstacleTraceTest, ForbiddenTriangleIsItsOwnObstacle) {
  const EdgeLabelledGraph g = cycle_graph({1, 1, 3}, kParams);
  const ObstacleWitness w = obstacle_trace(g, kParams, 4);
  EXPECT_EQ(w.obstacle, g);
  EXPECT_EQ(w.hom, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_TRUE(w.levels.empty());
}

// Both chords of 1116 receive 5 at rank 2, so the first forbidden triangle
// is 115, not 126.
TEST(ObstacleTraceTest, FourCycle1116) {
  const EdgeLabelledGraph g = cycle_graph({1, 1, 1, 6}, kParams);
  const CompletionResult run = complete_magic(g, 4, kParams);
  EXPECT_EQ(run.trace.final_graph.label(0, 2), 5);
  EXPECT_EQ(run.trace.final_graph.label(1, 3), 5);
  const ObstacleWitness w = obstacle_trace(g, kParams, 4);
  EXPECT_EQ(w.seed.sides, (std::array<Distance, 3>{1, 1, 5}));
  EXPECT_EQ(canonical_cycle(w.cycle), (LabelSequence{1, 1, 1, 6}));
  EXPECT_TRUE(is_homomorphism(w.obstacle, g, w.hom));
}

TEST(ObstacleTraceTest, CompletableInputRejected) {
  EXPECT_THROW(obstacle_trace(cycle_graph({1, 1, 1, 1}, kParams), kParams, 4),
               PreconditionError);
}

TEST(ObstacleTraceTest, SizeBound) {
  EXPECT_EQ(obstacle_size_bound(kParams), 192u);
}

TEST(ObstacleTraceTest, SoundOnEveryShortObstacle) {
  for (int n = 3; n <= 6; ++n) {
    const ObstacleCatalogue cat =
        enumerate_obstacle_cycles(kParams, n, EnumerationMethod::kExhaustive);
    for (const LabelSequence& labels : cat.cycles) {
      const EdgeLabelledGraph g = cycle_graph(labels, kParams);
      const ObstacleWitness w = obstacle_trace(g, kParams, 4);
      EXPECT_TRUE(is_homomorphism(w.obstacle, g, w.hom)) << format_labels(labels);
      EXPECT_FALSE(complete_magic(w.obstacle, 4, kParams).completed());
      EXPECT_FALSE(oracle_complete(w.obstacle, kParams));
      EXPECT_LE(static_cast<std::uint64_t>(w.obstacle.vertex_count()),
                obstacle_size_bound(kParams));
      EXPECT_EQ(w.cycle.size(), w.cycle_order.size());
    }
  }
}

TEST(EnumerationTest, Triangles) {
  const ObstacleCatalogue cat =
      enumerate_obstacle_cycles(kParams, 3, EnumerationMethod::kExhaustive);
  const auto expected = canonical_set(
      {"113", "114", "115", "116", "124", "125", "126", "135", "136", "146",
       "225", "226", "236", "111", "366", "466", "456", "555", "556", "566",
       "666"});
  EXPECT_EQ(cat.cycles, expected);
  EXPECT_EQ(cat.cycles.size(), 21u);
}

TEST(EnumerationTest, FourCyclesMatchListWithoutMarkedEntries) {
  const ObstacleCatalogue cat =
      enumerate_obstacle_cycles(kParams, 4, EnumerationMethod::kExhaustive);
  const auto expected = canonical_set(
      {"1116", "1114", "1664", "1115", "1665", "1216", "1261", "1666", "1656",
       "1125", "1215", "1565", "1655", "1316", "1361", "6625", "2216", "6626",
       "6636", "2126", "2656", "4616"});
  EXPECT_EQ(cat.cycles, expected);
}

TEST(EnumerationTest, FiveAndSixCycles) {
  const auto five = canonical_set({"11116", "16616", "16661", "11115", "11665",
                                   "11216", "11261", "16615", "16165", "16561",
                                   "66665", "66216", "66261", "66666"});
  const auto six =
      canonical_set({"111116", "116616", "116661", "161616", "666616"});
  EXPECT_EQ(five.size(), 14u);
  EXPECT_EQ(six.size(), 5u);
  EXPECT_EQ(enumerate_obstacle_cycles(kParams, 5, EnumerationMethod::kExhaustive)
                .cycles,
            five);
  EXPECT_EQ(enumerate_obstacle_cycles(kParams, 6, EnumerationMethod::kExhaustive)
                .cycles,
            six);
}

// The list closes at six edges: no 7-cycle is an obstacle.
TEST(EnumerationTest, NoSevenCycles) {
  EXPECT_TRUE(
      enumerate_obstacle_cycles(kParams, 7, EnumerationMethod::kExhaustive)
          .cycles.empty());
}

TEST(EnumerationTest, SubstitutionAgreesWithExhaustive) {
  for (int n = 3; n <= 7; ++n) {
    EXPECT_EQ(
        enumerate_obstacle_cycles(kParams, n, EnumerationMethod::kSubstitution)
            .cycles,
        enumerate_obstacle_cycles(kParams, n, EnumerationMethod::kExhaustive)
            .cycles)
        << n;
  }
}

TEST(EnumerationTest, Errors) {
  EXPECT_THROW(
      enumerate_obstacle_cycles(kParams, 2, EnumerationMethod::kExhaustive),
      RangeError);
  EnumerationOptions tight;
  tight.sequence_budget = 100;
  EXPECT_THROW(enumerate_obstacle_cycles(kParams, 3,
                                         EnumerationMethod::kExhaustive, tight),
               CapacityError);
}

TEST(EnumerationTest, MagicChoiceDoesNotMatter) {
  EnumerationOptions low;
  low.magic = 3;
  for (int n = 3; n <= 5; ++n) {
    EXPECT_EQ(enumerate_obstacle_cycles(kParams, n,
                                        EnumerationMethod::kExhaustive, low)
                  .cycles,
              enumerate_obstacle_cycles(kParams, n,
                                        EnumerationMethod::kExhaustive)
                  .cycles);
  }
}

TEST(SubstituteForksTest, Triangle115) {
  const auto out = substitute_forks({1, 1, 5}, kParams, 4);
  EXPECT_EQ(out, (std::vector<LabelSequence>{{1, 1, 1, 6}, {1, 1, 6, 1}}));
}

TEST(SubstituteForksTest, Triangle113) {
  const auto out = substitute_forks({1, 1, 3}, kParams, 4);
  const std::set<LabelSequence> got(out.begin(), out.end());
  EXPECT_TRUE(got.count({1, 1, 1, 2}));
  EXPECT_TRUE(got.count({1, 1, 5, 6}));
  for (const LabelSequence& s : out) {
    EXPECT_TRUE(cycle_completable(s, kParams, 4)) << format_labels(s);
  }
}

TEST(SubstituteForksTest, Triangle555) {
  const auto out = substitute_forks({5, 5, 5}, kParams, 4);
  EXPECT_EQ(out.size(), 6u);
  EXPECT_TRUE(std::count(out.begin(), out.end(), LabelSequence{1, 6, 5, 5}));
  for (const LabelSequence& s : out) {
    EXPECT_EQ(canonical_cycle(s), (LabelSequence{1, 5, 5, 6}));
  }
}

TEST(SubstituteForksTest, MagicLabelsKept) {
  EXPECT_TRUE(substitute_forks({4, 4, 4}, kParams, 4).empty());
}

TEST(VerifyCatalogueTest, Entries) {
  ObstacleCatalogue cat{kParams, 5, EnumerationMethod::kExhaustive,
                        {{6, 6, 6, 6, 6}}};
  VerifyOptions options;
  options.sample_size = 0;
  EXPECT_TRUE(verify_catalogue(cat, options).verified);

  cat.cycles = {{1, 1, 1, 1, 1}};
  const CatalogueReport report = verify_catalogue(cat, options);
  EXPECT_FALSE(report.verified);
  EXPECT_EQ(report.completable_entries,
            (std::vector<LabelSequence>{{1, 1, 1, 1, 1}}));
}

TEST(VerifyCatalogueTest, NonEntryCompletable) {
  EXPECT_TRUE(oracle_complete(cycle_graph({1, 1, 1, 1, 1}, kParams), kParams));
}

TEST(VerifyCatalogueTest, EmptyCatalogueVacuous) {
  const ObstacleCatalogue cat{kParams, 4, EnumerationMethod::kExhaustive, {}};
  VerifyOptions options;
  options.sample_size = 0;
  EXPECT_TRUE(verify_catalogue(cat, options).verified);
}

TEST(VerifyCatalogueTest, FullFourCycleList) {
  const ObstacleCatalogue cat =
      enumerate_obstacle_cycles(kParams, 4, EnumerationMethod::kExhaustive);
  VerifyOptions options;
  options.sample_size = 30;
  const CatalogueReport report = verify_catalogue(cat, options);
  EXPECT_TRUE(report.verified);
  EXPECT_TRUE(report.completable_entries.empty());
  EXPECT_TRUE(report.uncompletable_non_entries.empty());
  EXPECT_FALSE(report.sampled_non_entries.empty());
}

TEST(VerifyCatalogueTest, MissingEntryDetected) {
  ObstacleCatalogue cat =
      enumerate_obstacle_cycles(kParams, 3, EnumerationMethod::kExhaustive);
  cat.cycles.erase(cat.cycles.begin());
  VerifyOptions options;
  options.sample_size = 100000;
  const CatalogueReport report = verify_catalogue(cat, options);
  EXPECT_FALSE(report.verified);
  EXPECT_EQ(report.uncompletable_non_entries,
            (std::vector<LabelSequence>{{1, 1, 1}}));
}

TEST(MethodNameTest, RoundTrip) {
  for (EnumerationMethod m :
       {EnumerationMethod::kExhaustive, EnumerationMethod::kSubstitution}) {
    EXPECT_EQ(parse_method(to_string(m)), m);
  }
  EXPECT_EQ(parse_method("greedy"), std::nullopt);
}

}  // namespace
}  // namespace metric_completer
