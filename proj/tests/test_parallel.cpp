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

#include "rsat/parallel.hpp"
#include "rsat/rng.hpp"
#include "rsat/verify.hpp"
#include "support.hpp"

using namespace rsat;

TEST_SUITE("parallel") {

TEST_CASE("auto_split_depth") {
  CHECK(auto_split_depth(1) == 2);   // 4 branches
  CHECK(auto_split_depth(8) == 5);   // 32 branches
  CHECK(auto_split_depth(1000) == 10);  // capped
}

TEST_CASE("portfolio with one worker equals a plain run") {
  const ProblemSpec spec(ProblemKind::L, 5, 3);
  WalksatConfig cfg;
  cfg.seed = 5;
  ParallelConfig pcfg;
  pcfg.workers = 1;
  pcfg.base_seed = 5;
  const ColoringResult serial = coloring_search(spec, cfg);
  const ColoringResult portfolio = portfolio_search(spec, cfg, pcfg);
  CHECK(serial.status == portfolio.status);
  CHECK(serial.stats.flips == portfolio.stats.flips);
  if (serial.status == Status::Sat)
    CHECK(serial.coloring->colors == portfolio.coloring->colors);
}

TEST_CASE("portfolio finds and verifies a sequence coloring on 8 workers") {
  const ProblemSpec spec(ProblemKind::VDS, 4, 2);
  WalksatConfig cfg;
  ParallelConfig pcfg;
  pcfg.workers = 8;
  pcfg.base_seed = 12;
  const ColoringResult r = portfolio_search(spec, cfg, pcfg);
  REQUIRE(r.status == Status::Sat);
  CHECK(r.reason == StopReason::Found);
  CHECK_FALSE(verify_coloring(*r.coloring).has_value());
}

TEST_CASE("portfolio reports budget exhaustion distinctly from timeout") {
  const ProblemSpec spec(ProblemKind::VDS, 5, 2);  // no valid coloring exists
  WalksatConfig cfg;
  cfg.restarts = 4;
  cfg.max_flips = 100;
  ParallelConfig pcfg;
  pcfg.workers = 4;
  const ColoringResult budget = portfolio_search(spec, cfg, pcfg);
  CHECK(budget.status == Status::Unknown);
  CHECK(budget.reason == StopReason::BudgetExhausted);

  WalksatConfig huge = cfg;
  huge.restarts = 1000000;
  huge.max_flips = 1000000;
  ParallelConfig timed = pcfg;
  timed.timeout = std::chrono::milliseconds(50);
  const ColoringResult timeout = portfolio_search(spec, huge, timed);
  CHECK(timeout.status == Status::Unknown);
  CHECK(timeout.reason == StopReason::TimedOut);
}

TEST_CASE("parallel_dpll with no split equals the serial solver") {
  const Formula f = encode(ProblemSpec(ProblemKind::VDS, 12, 2));
  ParallelConfig pcfg;
  pcfg.workers = 1;
  pcfg.split_depth = 0;
  const SolveResult serial = dpll_solve(f);
  const SolveResult parallel = parallel_dpll(f, pcfg);
  CHECK(serial.status == parallel.status);
  if (serial.status == Status::Sat) CHECK(*serial.model == *parallel.model);
}

TEST_CASE("parallel_dpll refutes the 5x5 2-coloring instance on 8 workers") {
  const Formula f = encode(ProblemSpec(ProblemKind::L, 5, 2));
  ParallelConfig pcfg;
  pcfg.workers = 8;
  const SolveResult r = parallel_dpll(f, pcfg);
  CHECK(r.status == Status::Unsat);
}

TEST_CASE("parallel_dpll status equals serial status on random instances") {
  SplitMix64 rng(2718);
  for (int iter = 0; iter < 120; ++iter) {
    const Formula f = test::random_formula(rng, 12, 35);
    ParallelConfig pcfg;
    pcfg.workers = 1 + static_cast<int>(rng.below(8));
    pcfg.split_depth = static_cast<int>(rng.below(4));
    const SolveResult parallel = parallel_dpll(f, pcfg);
    const SolveResult serial = dpll_solve(f);
    CHECK(parallel.status == serial.status);
    if (parallel.status == Status::Sat)
      CHECK_FALSE(evaluate(f, *parallel.model).has_value());
  }
}

TEST_CASE("parallel_dpll deadline yields Unknown with partial stats") {
  // A hard instance (the 4-color square-distance family near its boundary)
  // cannot finish in a millisecond.
  const Formula f = encode(ProblemSpec(ProblemKind::VDS, 58, 4));
  ParallelConfig pcfg;
  pcfg.workers = 2;
  pcfg.timeout = std::chrono::milliseconds(1);
  const SolveResult r = parallel_dpll(f, pcfg);
  CHECK(r.status == Status::Unknown);
  CHECK_FALSE(r.model.has_value());
}

TEST_CASE("workers must be positive") {
  ParallelConfig pcfg;
  pcfg.workers = 0;
  CHECK_THROWS_AS(parallel_dpll(Formula(1), pcfg), std::invalid_argument);
  CHECK_THROWS_AS(
      portfolio_search(ProblemSpec(ProblemKind::VDS, 2, 1), WalksatConfig{}, pcfg),
      std::invalid_argument);
}

}  // TEST_SUITE
