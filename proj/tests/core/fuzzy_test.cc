// Copyright 2026 The FRC Authors
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

#include "frc/core/fuzzy.h"

#include <cmath>

#include <gtest/gtest.h>

#include "frc/core/error.h"
#include "testing/expect.h"
#include "testing/property.h"

namespace frc {
namespace {

using testing::for_all;
using testing::Gen;

ClassSet classes_of(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t c = 0; c < n; ++c) names.push_back("c" + std::to_string(c));
  return ClassSet(names);
}

Keyword kw(std::string surface, std::vector<double> degrees) {
  return {std::move(surface), MembershipVector(std::move(degrees))};
}

using testing::expect_code;

TEST(AggregateLocalTest, TakesMaximumPerClass) {
  std::vector<Keyword> keywords{kw("a", {0.2, 0.1}), kw("b", {0.8, 0.0}),
                                kw("c", {0.5, 0.3})};
  auto out = aggregate_local(keywords, ClassSet::Binary());
  EXPECT_DOUBLE_EQ(out[0], 0.8);
  EXPECT_DOUBLE_EQ(out[1], 0.3);
}

TEST(AggregateLocalTest, SingleKeywordIsIdentity) {
  std::vector<Keyword> keywords{kw("meh", {0.425, 0.425})};
  auto out = aggregate_local(keywords, ClassSet::Binary());
  EXPECT_EQ(out, MembershipVector({0.425, 0.425}));
}

TEST(AggregateLocalTest, RejectsEmptyAndMisshapenInput) {
  expect_code(ErrorCode::kEmptyKeywordSet, [] {
    aggregate_local(std::vector<Keyword>{}, ClassSet::Binary());
  });
  expect_code(ErrorCode::kDimensionMismatch, [] {
    std::vector<Keyword> keywords{kw("x", {0.1, 0.2, 0.3})};
    aggregate_local(keywords, ClassSet::Binary());
  });
}

TEST(AggregateLocalTest, MatchesExhaustiveScanOnRandomKeywords) {
  for_all(50, 11, [](Gen& g, std::size_t) {
    std::size_t n = g.between(2, 5);
    ClassSet classes = classes_of(n);
    std::vector<Keyword> keywords;
    std::size_t count = g.between(1, 12);
    for (std::size_t k = 0; k < count; ++k) {
      keywords.push_back(kw("k" + std::to_string(k), g.degrees(n)));
    }
    auto out = aggregate_local(keywords, classes);
    for (std::size_t c = 0; c < n; ++c) {
      double best = -1.0;
      for (const auto& k : keywords) {
        if (k.memberships[c] > best) best = k.memberships[c];
      }
      EXPECT_EQ(out[c], best);
    }
  });
}

TEST(NormalizeWeightsTest, SymmetricWeightsSplitEvenly) {
  auto w = normalize_weights({{2, 2}, {2, 2}}, ClassSet::Binary());
  EXPECT_DOUBLE_EQ(w.weight(0, 0), 0.5);
  EXPECT_DOUBLE_EQ(w.weight(0, 1), 0.5);
}

TEST(NormalizeWeightsTest, KeepsProportions) {
  auto w = normalize_weights({{1, 0, 3}, {1, 1, 2}}, ClassSet::Binary());
  EXPECT_DOUBLE_EQ(w.weight(0, 0), 0.25);
  EXPECT_DOUBLE_EQ(w.weight(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(w.weight(0, 2), 0.75);
}

TEST(NormalizeWeightsTest, RejectsBadRows) {
  expect_code(ErrorCode::kAllZeroWeights, [] {
    normalize_weights({{1, 2}, {0, 0}}, ClassSet::Binary());
  });
  expect_code(ErrorCode::kDimensionMismatch,
              [] { normalize_weights({{1, 2}}, ClassSet::Binary()); });
  expect_code(ErrorCode::kInvalidArgument, [] {
    normalize_weights({{1, -2}, {1, 1}}, ClassSet::Binary());
  });
}

TEST(NormalizeWeightsTest, RowsSumToOneOnRandomInput) {
  for_all(200, 12, [](Gen& g, std::size_t) {
    std::size_t n = g.between(2, 4);
    std::size_t m = g.between(1, 9);
    std::vector<std::vector<double>> raw;
    for (std::size_t c = 0; c < n; ++c) raw.push_back(g.raw_weights(m));
    auto w = normalize_weights(raw, classes_of(n));
    for (std::size_t c = 0; c < n; ++c) {
      long double sum = 0.0L;
      long double raw_sum = 0.0L;
      for (std::size_t j = 0; j < m; ++j) {
        sum += w.weight(c, j);
        raw_sum += raw[c][j];
      }
      EXPECT_NEAR(static_cast<double>(sum), 1.0, 1e-9);
      for (std::size_t j = 0; j < m; ++j) {
        EXPECT_NEAR(w.weight(c, j), static_cast<double>(raw[c][j] / raw_sum),
                    1e-12);
      }
    }
  });
}

TEST(FuseGlobalTest, SingleConflictingUnitKeepsBothDegrees) {
  std::vector<SubUnit> units{{"x", {}, MembershipVector({0.905, 0.905})}};
  auto out = fuse_global(units, WeightMatrix({{1.0}, {1.0}}));
  EXPECT_DOUBLE_EQ(out[0], 0.905);
  EXPECT_DOUBLE_EQ(out[1], 0.905);
}

TEST(FuseGlobalTest, EqualUnitsFuseToTheirCommonValue) {
  std::vector<SubUnit> units{{"a", {}, MembershipVector({0.425, 0.425})},
                             {"b", {}, MembershipVector({0.425, 0.425})}};
  auto out = fuse_global(units, WeightMatrix({{0.5, 0.5}, {0.5, 0.5}}));
  EXPECT_NEAR(out[0], 0.425, 1e-12);
  EXPECT_NEAR(out[1], 0.425, 1e-12);
}

TEST(FuseGlobalTest, RejectsSubunitCountMismatch) {
  std::vector<SubUnit> units{{"a", {}, MembershipVector({0.1, 0.2})}};
  expect_code(ErrorCode::kDimensionMismatch, [&] {
    fuse_global(units, WeightMatrix({{0.5, 0.5}, {0.5, 0.5}}));
  });
}

TEST(FuseGlobalTest, MatchesDotProductOnRandomInput) {
  for_all(300, 13, [](Gen& g, std::size_t) {
    std::size_t n = g.between(2, 4);
    std::size_t m = g.between(1, 8);
    std::vector<SubUnit> units;
    for (std::size_t j = 0; j < m; ++j) {
      units.push_back({"u", {}, g.membership(n)});
    }
    std::vector<std::vector<double>> raw;
    for (std::size_t c = 0; c < n; ++c) raw.push_back(g.raw_weights(m));
    auto w = normalize_weights(raw, classes_of(n));
    auto out = fuse_global(units, w);
    for (std::size_t c = 0; c < n; ++c) {
      long double dot = 0.0L;
      for (std::size_t j = 0; j < m; ++j) {
        dot += static_cast<long double>(w.weight(c, j)) *
               units[j].memberships[c];
      }
      EXPECT_NEAR(out[c], static_cast<double>(dot), 1e-12);
    }
  });
}

// Invariants

TEST(FuzzyPropertyTest, OutputsStayInUnitIntervalAndWithinSubunitRange) {
  for_all(300, 21, [](Gen& g, std::size_t) {
    std::size_t n = g.between(2, 4);
    std::size_t m = g.between(1, 8);
    std::vector<SubUnit> units;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Keyword> keywords;
      for (std::size_t k = 0, count = g.between(1, 4); k < count; ++k) {
        keywords.push_back(kw("k", g.degrees(n)));
      }
      units.push_back(make_subunit("u", keywords, classes_of(n)));
    }
    std::vector<std::vector<double>> raw;
    for (std::size_t c = 0; c < n; ++c) raw.push_back(g.raw_weights(m));
    auto out = fuse_global(units, normalize_weights(raw, classes_of(n)));
    for (std::size_t c = 0; c < n; ++c) {
      double lo = 1.0;
      double hi = 0.0;
      for (const auto& u : units) {
        lo = std::min(lo, u.memberships[c]);
        hi = std::max(hi, u.memberships[c]);
        EXPECT_GE(u.memberships[c], 0.0);
        EXPECT_LE(u.memberships[c], 1.0);
      }
      EXPECT_GE(out[c], lo - 1e-12);
      EXPECT_LE(out[c], hi + 1e-12);
      EXPECT_GE(out[c], 0.0);
      EXPECT_LE(out[c], 1.0);
    }
  });
}

TEST(FuzzyPropertyTest, RaisingOneSubunitNeverLowersFusion) {
  for_all(300, 22, [](Gen& g, std::size_t) {
    std::size_t n = g.between(2, 3);
    std::size_t m = g.between(1, 6);
    std::vector<SubUnit> units;
    for (std::size_t j = 0; j < m; ++j) units.push_back({"u", {}, g.membership(n)});
    std::vector<std::vector<double>> raw;
    for (std::size_t c = 0; c < n; ++c) raw.push_back(g.raw_weights(m));
    auto w = normalize_weights(raw, classes_of(n));
    auto before = fuse_global(units, w);
    std::size_t j = g.between(0, m - 1);
    std::size_t c = g.between(0, n - 1);
    std::vector<double> raised(units[j].memberships.begin(),
                               units[j].memberships.end());
    raised[c] = raised[c] + (1.0 - raised[c]) * g.unit();
    units[j].memberships = MembershipVector(raised);
    auto after = fuse_global(units, w);
    EXPECT_GE(after[c], before[c]);
  });
}

TEST(FuzzyPropertyTest, AddingKeywordNeverLowersLocalDegree) {
  for_all(300, 23, [](Gen& g, std::size_t) {
    std::size_t n = g.between(2, 4);
    std::vector<Keyword> keywords{kw("a", g.degrees(n))};
    for (std::size_t k = 0, count = g.between(0, 5); k < count; ++k) {
      keywords.push_back(kw("k", g.degrees(n)));
    }
    auto before = aggregate_local(keywords, classes_of(n));
    keywords.push_back(kw("extra", g.degrees(n)));
    auto after = aggregate_local(keywords, classes_of(n));
    for (std::size_t c = 0; c < n; ++c) EXPECT_GE(after[c], before[c]);
  });
}

TEST(FuzzyPropertyTest, ClassesFuseIndependently) {
  for_all(200, 24, [](Gen& g, std::size_t) {
    const std::size_t n = 3;
    std::size_t m = g.between(1, 6);
    std::vector<SubUnit> units;
    for (std::size_t j = 0; j < m; ++j) units.push_back({"u", {}, g.membership(n)});
    std::vector<std::vector<double>> raw;
    for (std::size_t c = 0; c < n; ++c) raw.push_back(g.raw_weights(m));
    auto before = fuse_global(units, normalize_weights(raw, classes_of(n)));

    // Rewrite class 0 degrees and weights only.
    for (auto& u : units) {
      std::vector<double> v(u.memberships.begin(), u.memberships.end());
      v[0] = g.degree();
      u.memberships = MembershipVector(v);
    }
    raw[0] = g.raw_weights(m);
    auto after = fuse_global(units, normalize_weights(raw, classes_of(n)));
    EXPECT_EQ(before[1], after[1]);
    EXPECT_EQ(before[2], after[2]);
  });
}

TEST(MakeSubunitTest, KeywordlessSubunitIsAllZero) {
  auto unit = make_subunit("the table", {}, ClassSet::Binary());
  EXPECT_EQ(unit.memberships, MembershipVector::Zeros(2));
}

TEST(MakeSubunitTest, AggregatesItsKeywords) {
  auto unit = make_subunit("good but bad",
                           {kw("good", {0.6, 0.0}), kw("bad", {0.0, 0.6})},
                           ClassSet::Binary());
  EXPECT_EQ(unit.memberships, MembershipVector({0.6, 0.6}));
}

TEST(TypesTest, MembershipVectorRejectsOutOfRange) {
  expect_code(ErrorCode::kOutOfRange, [] { MembershipVector({0.5, 1.2}); });
  expect_code(ErrorCode::kOutOfRange, [] { MembershipVector({-0.1, 0.2}); });
  EXPECT_EQ(MembershipVector::Clamped({-0.5, 1.5}), MembershipVector({0, 1}));
}

TEST(TypesTest, WeightMatrixChecksRowSums) {
  expect_code(ErrorCode::kInvalidArgument,
              [] { WeightMatrix({{0.5, 0.4}, {1.0, 0.0}}); });
  expect_code(ErrorCode::kInvalidArgument,
              [] { WeightMatrix({{0.5, 0.5}, {1.0}}); });
  WeightMatrix ok({{0.5, 0.5 + 1e-12}, {1.0, 0.0}});
  EXPECT_EQ(ok.subunit_count(), 2u);
}

TEST(TypesTest, ClassSetValidatesNames) {
  expect_code(ErrorCode::kInvalidArgument, [] { ClassSet({"positive"}); });
  expect_code(ErrorCode::kInvalidArgument,
              [] { ClassSet({"positive", "positive"}); });
  ClassSet with_other({"positive", "negative"}, true);
  EXPECT_EQ(with_other.size(), 3u);
  EXPECT_EQ(with_other.polar_indices(), (std::vector<std::size_t>{0, 1}));
}

}  // namespace
}  // namespace frc
