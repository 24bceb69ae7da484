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

#ifndef RSAT_BOUNDS_HPP
#define RSAT_BOUNDS_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rsat/parallel.hpp"

namespace rsat {

enum class SolverChoice { Dpll, ParallelDpll, Walksat, Portfolio };

std::string to_string(SolverChoice s);
SolverChoice solver_choice_from_string(const std::string& s);

enum class BoundConclusion {
  Exact,       // first UNSAT n = largest verified SAT n + 1, proved complete
  LowerBound,  // R >= largest verified SAT n + 1
  UpperBound,  // R <= first UNSAT n, but no certificate below it was found
  None,        // nothing established (no SAT found, no UNSAT proved)
};

struct BoundReport {
  ProblemKind kind;
  int colors = 0;
  SolverChoice solver = SolverChoice::Dpll;
  std::optional<int> largest_sat_n;   // verified certificate exists
  std::optional<int> first_unsat_n;   // proved by the complete solver only
  BoundConclusion conclusion = BoundConclusion::None;
  std::vector<std::string> certificates;  // file paths, one per SAT n
  bool budget_exhausted = false;          // stopped on walksat budget / timeout / max_n
  std::vector<std::string> consistency;   // cross-checks against known bounds
  bool consistent = true;
  SearchStats stats;

  // "R = 5" / "R >= 21" / nothing established.
  std::string conclusion_text() const;
};

struct SearchOptions {
  int start_n = 2;
  int max_n = 1 << 20;
  std::string certificate_dir;  // empty = keep certificates in memory only
  WalksatConfig walksat;
  ParallelConfig parallel;
  // Per-instance wall clock (complete solvers only; local search is bounded
  // by its flip/restart budget). Zero = none.
  std::chrono::milliseconds per_instance_timeout{0};
};

// Ascends n from start_n, solving each instance. SAT answers are decoded
// and must pass the independent verifier before they are recorded or
// written; an exact value is concluded only from a complete-solver UNSAT
// at largest_sat_n + 1. Progress lines go to `progress` when given.
BoundReport search_bound(ProblemKind kind, int colors, SolverChoice solver,
                         const SearchOptions& options, std::ostream* progress = nullptr);

// Known values and upper bounds from the literature, used as cross-checks
// on computed results; nullopt when nothing is on record.
std::optional<int> known_upper_bound(ProblemKind kind, int colors);

std::string render_report(const BoundReport& report);

}  // namespace rsat

#endif  // RSAT_BOUNDS_HPP
