// Copyright 2026 The MEAF Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "meaf/error.h"
#include "meaf/exact_solver.h"
#include "meaf/lp_bound.h"
#include "meaf/milp_export.h"
#include "meaf/three_partition.h"
#include "oracles.h"
#include "test_instances.h"

namespace meaf {
namespace {

using ::meaf::testing::MakeInstance;
using ::testing::HasSubstr;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const MeafError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no MeafError thrown";
  return ErrorCode::kIo;
}

TEST(ExactSolveTest, SolidEdgesSuffice) {
  Instance inst = MakeInstance({3, 3}, {{2, {0}}, {3, {1}}});
  SolveResult r = ExactSolve(inst);
  EXPECT_EQ(r.activation_count, 0);
  EXPECT_TRUE(r.optimal);
  EXPECT_EQ(r.status, SolveStatus::kOptimal);
  EXPECT_TRUE(VerifyAllocation(inst, r.allocation).ok);
}

TEST(ExactSolveTest, ReductionOfOneOneOne) {
  Instance inst = MakeInstance({3}, {{1, {}}, {1, {}}, {1, {}}});
  SolveResult r = ExactSolve(inst);
  EXPECT_EQ(r.activation_count, 3);
  EXPECT_EQ(r.objective, 3);
  EXPECT_TRUE(VerifyAllocation(inst, r.allocation).ok);
}

TEST(ExactSolveTest, TwoUsersSharingOneApp) {
  Instance inst = MakeInstance({2, 2}, {{2, {0}}, {2, {0}}});
  SolveResult r = ExactSolve(inst);
  EXPECT_EQ(r.activation_count, 1);
  // Lexicographically first optimal set: user 1 moves to app 1.
  EXPECT_EQ(r.allocation.activated, (std::vector<Edge>{{0, 1}}));
  EXPECT_TRUE(VerifyAllocation(inst, r.allocation).ok);
}

TEST(ExactSolveTest, GloballyInfeasible) {
  Instance inst = MakeInstance({1, 1}, {{3, {}}});
  EXPECT_EQ(CodeOf([&] { ExactSolve(inst); }), ErrorCode::kGloballyInfeasible);
}

TEST(ExactSolveTest, BudgetBelowOptimum) {
  Instance inst = MakeInstance({2, 2}, {{2, {0}}, {2, {0}}});
  for (bool prune : {true, false}) {
    SolveResult r = ExactSolve(inst, {.max_budget = 0, .prune = prune});
    EXPECT_EQ(r.status, SolveStatus::kBudgetExceeded);
    EXPECT_FALSE(r.optimal);
    EXPECT_EQ(r.proven_lower_bound, 1);
    EXPECT_EQ(r.total_unallocated, 2);
  }
}

TEST(ExactSolveTest, RejectsBudgetAboveDashedCount) {
  Instance inst = MakeInstance({2, 2}, {{2, {0}}, {2, {0}}});
  EXPECT_EQ(CodeOf([&] { ExactSolve(inst, {.max_budget = 3}); }),
            ErrorCode::kInvalidConfig);
  EXPECT_EQ(CodeOf([&] { ExactSolve(inst, {.max_budget = -1}); }),
            ErrorCode::kInvalidConfig);
}

TEST(ExactSolveTest, TimeLimitGivesPartialResult) {
  // A NO instance of 3-Partition: the search has to exhaust each level.
  std::vector<testing::UserSpec> specs;
  for (int64_t s : {6, 6, 6, 6, 6, 6, 6, 6, 6, 8, 9, 9}) specs.push_back({s, {}});
  Instance inst = MakeInstance({20, 20, 20, 20}, specs);
  const auto start = std::chrono::steady_clock::now();
  SolveResult r = ExactSolve(
      inst, {.time_limit = std::chrono::milliseconds(100), .prune = false});
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(5));
  EXPECT_EQ(r.status, SolveStatus::kTimeLimit);
  EXPECT_FALSE(r.optimal);
  ASSERT_TRUE(r.proven_lower_bound.has_value());
  EXPECT_EQ(r.total_unallocated, inst.total_demand());
}

TEST(ExactSolveTest, MatchesPowerSetOracleWithLexFirstTieBreak) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    Instance inst = testing::RandomInstance(
        rng, {.max_users = 6, .max_apps = 3, .max_capacity = 7});
    const std::optional<int> k = oracle::PowerSetMinActivations(inst);
    ASSERT_TRUE(k.has_value());
    const std::vector<Edge> expected = *oracle::LexFirstFeasible(inst, *k);
    for (bool prune : {true, false}) {
      SolveResult r = ExactSolve(inst, {.prune = prune});
      EXPECT_EQ(r.activation_count, *k) << "trial " << trial;
      EXPECT_EQ(r.allocation.activated, expected) << "trial " << trial;
      EXPECT_TRUE(VerifyAllocation(inst, r.allocation).ok);
    }
  }
}

TEST(ExactSolveTest, ThreadCountDoesNotChangeAnswer) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = testing::RandomInstance(
        rng, {.min_users = 3, .max_users = 7, .max_apps = 3, .max_capacity = 6});
    SolveResult one = ExactSolve(inst);
    SolveResult many = ExactSolve(inst, {.num_threads = 3});
    EXPECT_EQ(one.allocation, many.allocation) << "trial " << trial;
    EXPECT_EQ(one.activation_count, many.activation_count);
  }
}

TEST(LpBoundTest, ZeroWhenSolidSuffices) {
  Instance inst = MakeInstance({3, 3}, {{2, {0}}, {3, {1}}});
  SolveResult r = LpLowerBound(inst);
  EXPECT_EQ(r.objective, 0);
  EXPECT_EQ(r.algorithm, Algorithm::kLpBound);
}

TEST(LpBoundTest, FractionalGap) {
  Instance inst = MakeInstance({2, 2}, {{4, {}}});
  SolveResult lp = LpLowerBound(inst);
  EXPECT_EQ(lp.objective, 1);
  EXPECT_EQ(ExactSolve(inst).activation_count, 2);
}

TEST(LpBoundTest, WitnessVerifies) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = testing::RandomInstance(
        rng, {.max_users = 8, .max_apps = 4, .max_demand = 5,
              .max_capacity = 12});
    SolveResult lp = LpLowerBound(inst);
    EXPECT_TRUE(VerifyAllocation(inst, lp.allocation).ok);
    EXPECT_EQ(lp.total_unallocated, 0);
    // The objective is the relaxation cost of the witness itself.
    Rational cost = 0;
    for (const FlowEntry& f : lp.allocation.flows) {
      if (!inst.IsSolid(f.user, f.app)) {
        cost += Rational(f.amount, inst.demand(f.user));
      }
    }
    EXPECT_EQ(cost, lp.objective);
  }
}

TEST(LpBoundTest, EqualsEnumeratedRelaxation) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = testing::RandomInstance(rng, {.max_users = 4});
    EXPECT_EQ(LpLowerBound(inst).objective, *oracle::EnumerateRelaxation(inst))
        << "trial " << trial;
  }
}

TEST(LpBoundTest, BelowExact) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = testing::RandomInstance(rng, {.max_users = 6});
    EXPECT_LE(LpLowerBound(inst).objective, ExactSolve(inst).objective);
  }
}

TEST(LpBoundTest, GloballyInfeasible) {
  Instance inst = MakeInstance({1}, {{2, {0}}});
  EXPECT_EQ(CodeOf([&] { LpLowerBound(inst); }),
            ErrorCode::kGloballyInfeasible);
}

// Minimal reader for the LP files written by WriteMilp, enough to evaluate
// the model by enumeration.
struct LpRow {
  std::map<std::string, int64_t> terms;
  std::string sense;
  int64_t rhs = 0;
};

struct LpModel {
  std::vector<std::string> objective;
  std::map<std::string, LpRow> rows;
  std::map<std::string, std::pair<int64_t, int64_t>> bounds;
  std::vector<std::string> generals;
  std::vector<std::string> binaries;
};

LpModel ParseLp(const std::string& text) {
  LpModel model;
  std::istringstream in(text);
  std::string line;
  std::string section;
  std::string statement;
  auto flush = [&] {
    if (statement.empty()) return;
    std::istringstream tokens(statement);
    std::string name;
    tokens >> name;
    name.pop_back();  // trailing ':'
    std::vector<std::string> words;
    for (std::string w; tokens >> w;) words.push_back(w);
    if (section == "Minimize") {
      for (const std::string& w : words) {
        if (w != "+") model.objective.push_back(w);
      }
    } else {
      LpRow row;
      int64_t sign = 1;
      int64_t coef = 1;
      for (std::size_t i = 0; i < words.size(); ++i) {
        const std::string& w = words[i];
        if (w == "+") {
          sign = 1;
        } else if (w == "-") {
          sign = -1;
        } else if (w == "=" || w == "<=" || w == ">=") {
          row.sense = w;
          row.rhs = std::stoll(words.at(i + 1));
          break;
        } else if (std::isdigit(static_cast<unsigned char>(w[0]))) {
          coef = std::stoll(w);
        } else {
          row.terms[w] += sign * coef;
          sign = 1;
          coef = 1;
        }
      }
      model.rows[name] = row;
    }
    statement.clear();
  };
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '\\') continue;
    if (line[0] != ' ') {
      flush();
      section = line;
      continue;
    }
    if (section == "Minimize" || section == "Subject To") {
      if (line.rfind("  ", 0) == 0) {
        statement += line;  // continuation of a wrapped row
      } else {
        flush();
        statement = line;
      }
    } else if (section == "Bounds") {
      std::istringstream b(line);
      int64_t lo, hi;
      std::string le1, var, le2;
      b >> lo >> le1 >> var >> le2 >> hi;
      model.bounds[var] = {lo, hi};
    } else if (section == "Generals") {
      model.generals.push_back(line.substr(1));
    } else if (section == "Binaries") {
      model.binaries.push_back(line.substr(1));
    }
  }
  flush();
  return model;
}

// Minimum objective over all integer points, or -1 if none is feasible.
int64_t EnumerateLp(const LpModel& model) {
  std::vector<std::string> vars = model.generals;
  vars.insert(vars.end(), model.binaries.begin(), model.binaries.end());
  std::map<std::string, int64_t> value;
  int64_t best = -1;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) {
      for (const auto& [name, row] : model.rows) {
        int64_t lhs = 0;
        for (const auto& [v, c] : row.terms) lhs += c * value[v];
        if (row.sense == "=" && lhs != row.rhs) return;
        if (row.sense == "<=" && lhs > row.rhs) return;
      }
      int64_t obj = 0;
      for (const std::string& v : model.objective) obj += value[v];
      if (best < 0 || obj < best) best = obj;
      return;
    }
    const bool binary = i >= model.generals.size();
    const auto [lo, hi] = binary ? std::pair<int64_t, int64_t>{0, 1}
                                 : model.bounds.at(vars[i]);
    for (int64_t x = lo; x <= hi; ++x) {
      value[vars[i]] = x;
      rec(i + 1);
    }
  };
  rec(0);
  return best;
}

TEST(MilpExportTest, TwoByTwoObjective) {
  Instance inst = MakeInstance({2, 2}, {{2, {0}}, {2, {0}}});
  const std::string lp = MilpToString(inst);
  EXPECT_THAT(lp, HasSubstr("Minimize\n obj: x_u1_1 + x_u2_1\n"));
  EXPECT_THAT(lp, HasSubstr(" R_user_u1: f_u1_0 + f_u1_1 = 2\n"));
  EXPECT_THAT(lp, HasSubstr(" R_cap_0: f_u1_0 + f_u2_0 <= 2\n"));
  EXPECT_THAT(lp, HasSubstr(" R_act_u1_1: f_u1_1 - 2 x_u1_1 <= 0\n"));
  EXPECT_THAT(lp, HasSubstr(" 0 <= f_u2_1 <= 2\n"));
  EXPECT_THAT(lp, HasSubstr("Binaries\n x_u1_1\n x_u2_1\nEnd\n"));
  EXPECT_EQ(lp.find('\r'), std::string::npos);
  EXPECT_EQ(EnumerateLp(ParseLp(lp)), ExactSolve(inst).activation_count);
}

TEST(MilpExportTest, SingleUserInstance) {
  Instance inst = MakeInstance({4, 4, 4}, {{3, {1}}});
  LpModel model = ParseLp(MilpToString(inst));
  EXPECT_EQ(model.generals.size(), 3u);
  EXPECT_EQ(model.binaries.size(), 2u);
  EXPECT_TRUE(model.rows.contains("R_user_u1"));
  EXPECT_EQ(model.rows.size(), 1u + 3u + 2u);
}

TEST(MilpExportTest, ReductionInstanceUsesDemandAsBigM) {
  Instance inst = MakeInstance({3}, {{1, {}}, {1, {}}, {1, {}}});
  const std::string lp = MilpToString(inst);
  LpModel model = ParseLp(lp);
  EXPECT_EQ(model.binaries.size(), 3u);
  int act_rows = 0;
  for (const auto& [name, row] : model.rows) {
    if (name.rfind("R_act_", 0) == 0) {
      ++act_rows;
      for (const auto& [var, coef] : row.terms) {
        if (var[0] == 'x') {
          EXPECT_EQ(coef, -1);
        }
      }
    }
  }
  EXPECT_EQ(act_rows, 3);
  EXPECT_THAT(lp, HasSubstr(" R_act_u1_0: f_u1_0 - x_u1_0 <= 0\n"));
  EXPECT_EQ(EnumerateLp(model), 3);
}

TEST(MilpExportTest, EnumeratedModelMatchesExactSolver) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 40; ++trial) {
    Instance inst = testing::RandomInstance(
        rng, {.max_users = 2, .max_apps = 2, .max_demand = 2});
    EXPECT_EQ(EnumerateLp(ParseLp(MilpToString(inst))),
              ExactSolve(inst).activation_count)
        << MilpToString(inst);
  }
}

TEST(MilpExportTest, WrapsLongRowsAndEscapesIds) {
  std::vector<testing::UserSpec> users(60, {1, {}});
  Instance inst = MakeInstance({100}, users);
  const std::string lp = MilpToString(inst);
  std::istringstream in(lp);
  for (std::string line; std::getline(in, line);) {
    EXPECT_LT(line.size(), 255u);
  }
  LpModel model = ParseLp(lp);
  EXPECT_EQ(model.objective.size(), 60u);
  EXPECT_EQ(model.rows.at("R_cap_0").terms.size(), 60u);

  EXPECT_EQ(LpNameToken("u1"), "u1");
  EXPECT_EQ(LpNameToken("a_b"), "a_5fb");
  EXPECT_EQ(LpNameToken("a b-c"), "a_20b_2dc");
}

TEST(ThreePartitionTest, TrivialYes) {
  const std::vector<int64_t> items = {1, 1, 1};
  ThreePartitionOutcome out = SolveThreePartition(items, 3);
  EXPECT_TRUE(out.yes);
  EXPECT_EQ(out.budget, 3);
  EXPECT_EQ(out.result.activation_count, 3);
}

TEST(ThreePartitionTest, TwoTriples) {
  const std::vector<int64_t> items = {5, 5, 5, 6, 7, 8};
  EXPECT_TRUE(CheckThreePartition(items, 18));
}

TEST(ThreePartitionTest, PreconditionsNameTheItem) {
  const std::vector<int64_t> sum_off = {2, 2, 2, 3, 3, 3};
  EXPECT_EQ(CodeOf([&] { CheckThreePartition(sum_off, 7); }),
            ErrorCode::kPrecondition);
  const std::vector<int64_t> half = {2, 1, 1};
  try {
    CheckThreePartition(half, 4);
    FAIL();
  } catch (const MeafError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
    EXPECT_THAT(e.what(), HasSubstr("item 2 (index 0)"));
  }
  const std::vector<int64_t> not_triples = {1, 1};
  EXPECT_EQ(CodeOf([&] { CheckThreePartition(not_triples, 2); }),
            ErrorCode::kPrecondition);
}

TEST(ThreePartitionTest, AgreesWithBruteForce) {
  // m = 2, B = 9..17: every valid multiset with items in (B/4, B/2).
  int checked = 0;
  for (int64_t b = 5; b <= 17; ++b) {
    std::vector<int64_t> items(6);
    std::function<void(int, int64_t)> rec = [&](int i, int64_t lo) {
      if (i == 6) {
        int64_t sum = 0;
        for (int64_t s : items) sum += s;
        if (sum != 2 * b) return;
        EXPECT_EQ(CheckThreePartition(items, b),
                  oracle::BruteForceThreePartition(items, b));
        ++checked;
        return;
      }
      for (int64_t s = lo; 2 * s < b; ++s) {
        if (4 * s <= b) continue;
        items[i] = s;
        rec(i + 1, s);
      }
    };
    rec(0, 1);
  }
  EXPECT_GT(checked, 10);
}

}  // namespace
}  // namespace meaf
