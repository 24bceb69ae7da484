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

#ifndef RSAT_DPLL_HPP
#define RSAT_DPLL_HPP

#include <optional>
#include <vector>

#include "rsat/cnf.hpp"
#include "rsat/result.hpp"

namespace rsat {

// Complete, deterministic backtracking solver. One recursion step:
//   1. propagate unit clauses to fixpoint (conflict -> branch is dead);
//   2. if every clause is satisfied, extend to a total model and return SAT
//      (unconstrained variables default to false);
//   3. if the reduced formula is 2-CNF, decide it with the linear-time
//      implication-graph method;
//   4. otherwise branch: on the first literal of the first 2-literal clause
//      if one exists, else on the literal of maximum 1/s occurrence weight
//      (ties: lowest variable index, positive before negative). The chosen
//      literal is set true first, then false.
//
// Weights and clause lengths are always taken over the currently reduced
// formula. The solver never returns Unknown; identical input yields an
// identical status, model and decision count on every platform.

struct UnitPropagationResult {
  bool conflict = false;
  Formula formula;        // reduced fixpoint; meaningful only when !conflict
  Assignment assignment;  // input assignment plus the forced units
  int propagated = 0;
};

// Repeatedly satisfies unit clauses and reduces until none remain or a
// clause becomes empty.
UnitPropagationResult unit_propagate(const Formula& f, const Assignment& a);

// Linear-time 2-SAT via strongly connected components of the implication
// graph. Unit clauses are allowed (treated as (l or l)). Throws
// std::invalid_argument on clauses with more than two literals.
SolveResult two_sat(const Formula& f);

// Branch literal of the current (reduced) formula. Preconditions: at least
// one clause, no unit clauses. Rule as described above.
Lit pick_branch_literal(const Formula& f);

SolveResult dpll_solve(const Formula& f);

// A partial path into the DPLL search tree: the branch literals fixed so
// far, in decision order.
using Cube = std::vector<Lit>;

// Everything below is the engine surface used by the parallel runner.

// dpll_solve restricted to the subtree under `assumptions` (each assumption
// is applied with full propagation, in order). Returns Unknown only when
// cancelled or past the deadline.
SolveResult dpll_solve_under(const Formula& f, const Cube& assumptions,
                             const RunLimits& limits = {});

// Expands the search tree to `depth` decisions, propagating at every node.
// Branches that close during expansion are resolved on the spot: if any
// expands to SAT the result is returned immediately and `cubes` is empty.
// Otherwise `cubes` holds the open branches (at most 2^depth).
struct ExpandResult {
  std::optional<SolveResult> resolved;  // set when expansion settled the instance
  std::vector<Cube> cubes;
  SearchStats stats;
};

ExpandResult dpll_expand(const Formula& f, int depth);

}  // namespace rsat

#endif  // RSAT_DPLL_HPP
