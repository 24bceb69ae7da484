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

#ifndef RSAT_PARALLEL_HPP
#define RSAT_PARALLEL_HPP

#include <chrono>
#include <cstdint>

#include "rsat/dpll.hpp"
#include "rsat/walksat.hpp"

namespace rsat {

// Workers share only immutable problem data, one write-once result slot and
// a cancellation flag; cancellation is checked at every decision / flip.
struct ParallelConfig {
  int workers = 1;
  std::chrono::milliseconds timeout{0};  // 0 = no deadline
  std::uint64_t base_seed = 0;
  int split_depth = -1;  // DPLL tree split; -1 = auto_split_depth(workers)
};

// Smallest d with 2^d >= 4 * workers, capped at 10. Oversplitting relative
// to the worker count keeps the work queue from idling when branches die
// early in propagation.
int auto_split_depth(int workers);

// Seed portfolio: `workers` independent coloring searches with seeds
// base_seed + i; the first SAT wins and cancels the rest. Unknown carries
// TimedOut when the deadline cut the run short, BudgetExhausted when every
// worker ran out of restarts.
ColoringResult portfolio_search(const ProblemSpec& spec, const WalksatConfig& cfg,
                                const ParallelConfig& pcfg);

// Splits the DPLL tree at split_depth decisions into at most 2^split_depth
// open branches and solves them from a shared work queue. The status always
// equals dpll_solve(f); the model may come from any satisfiable branch.
// A deadline turns the result into Unknown with the stats gathered so far.
SolveResult parallel_dpll(const Formula& f, const ParallelConfig& pcfg);

}  // namespace rsat

#endif  // RSAT_PARALLEL_HPP
