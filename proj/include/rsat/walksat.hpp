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

#ifndef RSAT_WALKSAT_HPP
#define RSAT_WALKSAT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rsat/encode.hpp"
#include "rsat/result.hpp"

namespace rsat {

// Local search configuration. With probability `noise` a step is a random
// walk (random variable of a random unsatisfied clause), otherwise it is
// greedy (the flip with the greatest decrease in unsatisfied clauses; ties
// are broken uniformly at random). Restart r runs on the RNG substream
// derived from (seed, r); see rng.hpp.
struct WalksatConfig {
  double noise = 0.5;
  std::uint64_t max_flips = 0;  // 0 = 100 * num_vars (CNF) / 100 * elements * colors
  std::uint64_t restarts = 50;
  std::uint64_t seed = 0;
};

enum class StopReason { Found, BudgetExhausted, TimedOut, Cancelled };

// Plain WalkSAT over an arbitrary CNF formula. Incomplete: returns Sat with
// a model, or Unknown once the flip/restart budget is spent. Never Unsat.
SolveResult local_search(const Formula& f, const WalksatConfig& cfg,
                         const RunLimits& limits = {});

// Patterns of one instance plus, per element, the ids of the patterns it
// occurs in. Immutable; shareable across workers.
class PatternIndex {
 public:
  explicit PatternIndex(const ProblemSpec& spec);

  const ProblemSpec& spec() const { return spec_; }
  const std::vector<Pattern>& patterns() const { return patterns_; }
  std::span<const int> patterns_of(int element) const;

 private:
  ProblemSpec spec_;
  std::vector<Pattern> patterns_;
  std::vector<std::vector<int>> by_element_;  // element-1 -> pattern ids
};

// Search state for the coloring-invariant local search: always a valid
// coloring (exactly one color per element), plus the set of currently
// monochromatic patterns and the bookkeeping needed to score a recoloring
// in O(1):
//   mono_count(e)          patterns containing e that are monochromatic
//   move_delta(e, k)       net change in |unsat| if e is recolored to k
// A move only touches the patterns containing the recolored element.
class ColoringState {
 public:
  ColoringState(const PatternIndex& index, Coloring start);

  const Coloring& coloring() const { return coloring_; }
  const std::vector<int>& unsat() const { return unsat_ids_; }
  bool is_unsat(int pattern_id) const { return unsat_pos_[static_cast<std::size_t>(pattern_id)] >= 0; }

  int mono_count(int element) const { return mono_count_[static_cast<std::size_t>(element) - 1]; }
  int move_delta(int element, int new_color) const;

  // Recolors one element. Throws std::invalid_argument on a no-op recolor
  // or out-of-range arguments.
  void apply_move(int element, int new_color);

  // Full from-scratch recount of the monochromatic patterns (sorted ids).
  // Test oracle for the incremental bookkeeping.
  std::vector<int> recount_unsat() const;

 private:
  void add_unsat(int pid);
  void remove_unsat(int pid);

  const PatternIndex* index_;
  Coloring coloring_;
  std::vector<int> unsat_ids_;  // unordered
  std::vector<int> unsat_pos_;  // pattern id -> position in unsat_ids_, -1 if absent
  std::vector<int> mono_count_;
  // (element-1)*colors + (k-1) -> number of patterns containing the element
  // whose other elements are all colored k.
  std::vector<int> others_uniform_;
};

struct ColoringResult {
  Status status = Status::Unknown;  // Sat or Unknown, never Unsat
  std::optional<Coloring> coloring;
  StopReason reason = StopReason::BudgetExhausted;
  SearchStats stats;
};

// The coloring-invariant variant of local search: only valid colorings are
// visited, a move recolors a single element. The random-walk branch picks a
// random element of a random monochromatic pattern and recolors it to the
// best replacement color; the greedy branch scores every (element, color)
// move over elements occurring in monochromatic patterns. Ties are uniform
// random in both branches.
ColoringResult coloring_search(const ProblemSpec& spec, const WalksatConfig& cfg,
                               const RunLimits& limits = {});

}  // namespace rsat

#endif  // RSAT_WALKSAT_HPP
