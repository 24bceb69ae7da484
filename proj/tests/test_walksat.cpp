// Copyright 2026 The ramsey-sat Authors
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

#include <doctest.h>

#include <algorithm>
#include <set>

#include "rsat/rng.hpp"
#include "rsat/verify.hpp"
#include "rsat/walksat.hpp"
#include "support.hpp"

using namespace rsat;

TEST_SUITE("walksat") {

TEST_CASE("local_search basics") {
  SUBCASE("single unit clause") {
    Formula f(1);
    f.add_clause({pos(1)});
    WalksatConfig cfg;
    cfg.max_flips = 1;
    cfg.restarts = 2;
    const SolveResult r = local_search(f, cfg);
    REQUIRE(r.status == Status::Sat);
    CHECK(r.model->value(1) == Value::True);
  }
  SUBCASE("contradiction stays Unknown") {
    Formula f(1);
    f.add_clause({pos(1)});
    f.add_clause({neg(1)});
    WalksatConfig cfg;
    cfg.max_flips = 50;
    cfg.restarts = 5;
    const SolveResult r = local_search(f, cfg);
    CHECK(r.status == Status::Unknown);
    CHECK_FALSE(r.model.has_value());
  }
  SUBCASE("noise outside [0,1] is rejected") {
    Formula f(1);
    f.add_clause({pos(1)});
    WalksatConfig cfg;
    cfg.noise = 1.5;
    CHECK_THROWS_AS(local_search(f, cfg), std::invalid_argument);
  }
}

TEST_CASE("local_search is seed-deterministic") {
  SplitMix64 gen(5);
  const Formula f = test::random_satisfiable_formula(gen, 20, 60);
  WalksatConfig cfg;
  cfg.seed = 42;
  const SolveResult a = local_search(f, cfg);
  const SolveResult b = local_search(f, cfg);
  REQUIRE(a.status == Status::Sat);
  CHECK(a.status == b.status);
  CHECK(a.stats.flips == b.stats.flips);
  CHECK(a.stats.restarts == b.stats.restarts);
  CHECK(*a.model == *b.model);

  WalksatConfig other = cfg;
  other.seed = 43;
  const SolveResult c = local_search(f, other);
  // different stream, overwhelmingly likely a different trajectory
  CHECK((c.stats.flips != a.stats.flips || *c.model != *a.model));
}

TEST_CASE("local_search models always satisfy the formula") {
  SplitMix64 gen(17);
  int found = 0;
  for (int iter = 0; iter < 40; ++iter) {
    const Formula f = test::random_satisfiable_formula(gen, 15, 45);
    WalksatConfig cfg;
    cfg.seed = 1000 + static_cast<std::uint64_t>(iter);
    const SolveResult r = local_search(f, cfg);
    if (r.status == Status::Sat) {
      ++found;
      CHECK_FALSE(evaluate(f, *r.model).has_value());
    }
  }
  CHECK(found >= 35);  // satisfiable by construction; nearly all should land
}

TEST_CASE("ColoringState bookkeeping") {
  SUBCASE("a 1x1 grid has no patterns") {
    const ProblemSpec spec(ProblemKind::L, 1, 2);
    const PatternIndex index(spec);
    ColoringState state(index, Coloring{spec, {1}});
    CHECK(state.unsat().empty());
    state.apply_move(1, 2);
    CHECK(state.unsat().empty());
  }
  SUBCASE("recolor splits the monochromatic run") {
    const ProblemSpec spec(ProblemKind::VDS, 4, 2);
    const PatternIndex index(spec);
    REQUIRE(index.patterns().size() == 3);  // (1,2) (2,3) (3,4)
    ColoringState state(index, Coloring{spec, {1, 1, 1, 1}});
    CHECK(state.unsat().size() == 3);
    CHECK(state.move_delta(2, 2) == -2);  // breaks (1,2) and (2,3), creates none
    const int before = static_cast<int>(state.unsat().size());
    state.apply_move(2, 2);
    CHECK(static_cast<int>(state.unsat().size()) == before - 2);
    std::vector<int> unsat = state.unsat();
    std::sort(unsat.begin(), unsat.end());
    CHECK(unsat == state.recount_unsat());
    REQUIRE(unsat.size() == 1);
    CHECK(index.patterns()[static_cast<std::size_t>(unsat[0])] == Pattern::pair(3, 4));
  }
  SUBCASE("moving back restores the unsat set") {
    const ProblemSpec spec(ProblemKind::VDS, 6, 3);
    const PatternIndex index(spec);
    ColoringState state(index, Coloring{spec, {1, 1, 2, 1, 3, 1}});
    const auto before = state.recount_unsat();
    const int old_color = state.coloring().color_of(4);
    state.apply_move(4, 2);
    state.apply_move(4, old_color);
    auto after = state.unsat();
    std::sort(after.begin(), after.end());
    CHECK(after == before);
  }
  SUBCASE("no-op recolors are rejected") {
    const ProblemSpec spec(ProblemKind::VDS, 4, 2);
    const PatternIndex index(spec);
    ColoringState state(index, Coloring{spec, {1, 2, 1, 2}});
    CHECK_THROWS_AS(state.apply_move(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(state.apply_move(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(state.apply_move(1, 3), std::invalid_argument);
  }
}

TEST_CASE("incremental unsat set matches a recount after fuzzed moves") {
  SplitMix64 rng(909);
  for (const ProblemSpec spec :
       {ProblemSpec(ProblemKind::L, 5, 3), ProblemSpec(ProblemKind::VDS, 30, 3),
        ProblemSpec(ProblemKind::VDC, 30, 2)}) {
    const PatternIndex index(spec);
    Coloring start{spec, {}};
    for (int e = 0; e < spec.element_count(); ++e)
      start.colors.push_back(
          1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(spec.colors))));
    ColoringState state(index, start);
    for (int move = 0; move < 3000; ++move) {
      const int element = 1 + static_cast<int>(rng.below(
                                  static_cast<std::uint32_t>(spec.element_count())));
      const int cur = state.coloring().color_of(element);
      if (spec.colors < 2) break;
      int color = cur;
      while (color == cur)
        color = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(spec.colors)));
      // the cached delta must predict the actual |unsat| change
      const int predicted = state.move_delta(element, color);
      const int before = static_cast<int>(state.unsat().size());
      state.apply_move(element, color);
      CHECK(static_cast<int>(state.unsat().size()) == before + predicted);
      if (move % 250 == 0) {
        std::vector<int> ids = state.unsat();
        std::sort(ids.begin(), ids.end());
        CHECK(ids == state.recount_unsat());
      }
    }
    std::vector<int> ids = state.unsat();
    std::sort(ids.begin(), ids.end());
    CHECK(ids == state.recount_unsat());
  }
}

TEST_CASE("coloring_search") {
  SUBCASE("finds one of the two valid alternating colorings") {
    const ProblemSpec spec(ProblemKind::VDS, 4, 2);
    WalksatConfig cfg;
    cfg.seed = 7;
    const ColoringResult r = coloring_search(spec, cfg);
    REQUIRE(r.status == Status::Sat);
    REQUIRE(r.coloring.has_value());
    const std::vector<int> a{1, 2, 1, 2};
    const std::vector<int> b{2, 1, 2, 1};
    CHECK((r.coloring->colors == a || r.coloring->colors == b));
    CHECK(r.reason == StopReason::Found);
  }
  SUBCASE("4x4 grid 2-coloring is found and verifies") {
    const ProblemSpec spec(ProblemKind::L, 4, 2);
    WalksatConfig cfg;
    cfg.seed = 3;
    const ColoringResult r = coloring_search(spec, cfg);
    REQUIRE(r.status == Status::Sat);
    CHECK_FALSE(verify_coloring(*r.coloring).has_value());
  }
  SUBCASE("impossible instance exhausts its budget as Unknown") {
    const ProblemSpec spec(ProblemKind::VDS, 5, 2);
    WalksatConfig cfg;
    cfg.seed = 11;
    cfg.restarts = 10;
    cfg.max_flips = 200;
    const ColoringResult r = coloring_search(spec, cfg);
    CHECK(r.status == Status::Unknown);
    CHECK(r.reason == StopReason::BudgetExhausted);
    CHECK_FALSE(r.coloring.has_value());
  }
  SUBCASE("seed determinism") {
    const ProblemSpec spec(ProblemKind::L, 6, 2);
    WalksatConfig cfg;
    cfg.seed = 21;
    const ColoringResult a = coloring_search(spec, cfg);
    const ColoringResult b = coloring_search(spec, cfg);
    CHECK(a.status == b.status);
    CHECK(a.stats.flips == b.stats.flips);
    if (a.status == Status::Sat) CHECK(a.coloring->colors == b.coloring->colors);
  }
  SUBCASE("every SAT answer passes the verifier") {
    SplitMix64 rng(64);
    for (int iter = 0; iter < 30; ++iter) {
      const int n = 2 + static_cast<int>(rng.below(10));
      const ProblemKind kind = iter % 2 == 0 ? ProblemKind::VDS : ProblemKind::VDC;
      const ProblemSpec spec(kind, n, 1 + static_cast<int>(rng.below(3)));
      WalksatConfig cfg;
      cfg.seed = iter;
      cfg.restarts = 5;
      const ColoringResult r = coloring_search(spec, cfg);
      if (r.status == Status::Sat) CHECK_FALSE(verify_coloring(*r.coloring).has_value());
    }
  }
}

}  // TEST_SUITE
