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

#include "rsat/walksat.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "rsat/rng.hpp"

namespace rsat {

namespace {

using Clock = std::chrono::steady_clock;

void check_noise(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("WalksatConfig: noise must be in [0, 1]");
}

bool hit_limit(const RunLimits& limits, StopReason& reason) {
  if (limits.cancel && limits.cancel->load(std::memory_order_relaxed)) {
    reason = StopReason::Cancelled;
    return true;
  }
  if (limits.deadline && Clock::now() >= *limits.deadline) {
    reason = StopReason::TimedOut;
    return true;
  }
  return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Plain CNF WalkSAT
// ---------------------------------------------------------------------------

namespace {

// Flip scoring state: true_count per clause, the unsatisfied clause list,
// and per variable the number of clauses a flip would newly satisfy (make)
// or newly falsify (break).
class CnfWalkState {
 public:
  explicit CnfWalkState(const Formula& f)
      : f_(f),
        occ_(2 * static_cast<std::size_t>(f.num_vars())),
        value_(static_cast<std::size_t>(f.num_vars()) + 1, false),
        true_count_(f.num_clauses(), 0),
        unsat_pos_(f.num_clauses(), -1),
        make_(static_cast<std::size_t>(f.num_vars()) + 1, 0),
        break_(static_cast<std::size_t>(f.num_vars()) + 1, 0) {
    for (std::size_t cid = 0; cid < f.num_clauses(); ++cid)
      for (Lit l : f.clauses()[cid]) occ_[l.index()].push_back(static_cast<int>(cid));
  }

  void reset(SplitMix64& rng) {
    for (int v = 1; v <= f_.num_vars(); ++v)
      value_[static_cast<std::size_t>(v)] = rng.below(2) == 1;
    std::fill(true_count_.begin(), true_count_.end(), 0);
    std::fill(unsat_pos_.begin(), unsat_pos_.end(), -1);
    unsat_.clear();
    std::fill(make_.begin(), make_.end(), 0);
    std::fill(break_.begin(), break_.end(), 0);
    for (std::size_t cid = 0; cid < f_.num_clauses(); ++cid) {
      const Clause& c = f_.clauses()[cid];
      for (Lit l : c)
        if (truth(l)) ++true_count_[cid];
      if (true_count_[cid] == 0) {
        add_unsat(static_cast<int>(cid));
        for (Lit l : c) ++make_[static_cast<std::size_t>(l.var())];
      } else if (true_count_[cid] == 1) {
        ++break_[static_cast<std::size_t>(critical_var(cid))];
      }
    }
  }

  bool truth(Lit l) const { return value_[static_cast<std::size_t>(l.var())] == l.positive(); }
  const std::vector<int>& unsat() const { return unsat_; }
  int num_vars() const { return f_.num_vars(); }
  int score(int var) const {  // decrease in |unsat| when var is flipped
    return make_[static_cast<std::size_t>(var)] - break_[static_cast<std::size_t>(var)];
  }

  void flip(int var) {
    const bool old_val = value_[static_cast<std::size_t>(var)];
    const Lit was_true(var, old_val);
    const Lit was_false = was_true.negated();
    value_[static_cast<std::size_t>(var)] = !old_val;

    for (int cid : occ_[was_true.index()]) {  // lose a true literal
      const std::size_t c = static_cast<std::size_t>(cid);
      if (--true_count_[c] == 0) {
        add_unsat(cid);
        --break_[static_cast<std::size_t>(var)];
        for (Lit l : f_.clauses()[c]) ++make_[static_cast<std::size_t>(l.var())];
      } else if (true_count_[c] == 1) {
        ++break_[static_cast<std::size_t>(critical_var(c))];
      }
    }
    for (int cid : occ_[was_false.index()]) {  // gain a true literal
      const std::size_t c = static_cast<std::size_t>(cid);
      if (true_count_[c]++ == 0) {
        remove_unsat(cid);
        ++break_[static_cast<std::size_t>(var)];
        for (Lit l : f_.clauses()[c]) --make_[static_cast<std::size_t>(l.var())];
      } else if (true_count_[c] == 2) {
        // The other true literal is no longer critical.
        for (Lit l : f_.clauses()[c]) {
          if (l.var() != var && truth(l)) {
            --break_[static_cast<std::size_t>(l.var())];
            break;
          }
        }
      }
    }
  }

  Assignment to_assignment() const {
    Assignment a(f_.num_vars());
    for (int v = 1; v <= f_.num_vars(); ++v) a.set(v, value_[static_cast<std::size_t>(v)]);
    return a;
  }

 private:
  int critical_var(std::size_t cid) const {
    for (Lit l : f_.clauses()[cid])
      if (truth(l)) return l.var();
    throw std::logic_error("critical_var: no true literal");
  }

  void add_unsat(int cid) {
    unsat_pos_[static_cast<std::size_t>(cid)] = static_cast<int>(unsat_.size());
    unsat_.push_back(cid);
  }
  void remove_unsat(int cid) {
    const int pos = unsat_pos_[static_cast<std::size_t>(cid)];
    const int last = unsat_.back();
    unsat_[static_cast<std::size_t>(pos)] = last;
    unsat_pos_[static_cast<std::size_t>(last)] = pos;
    unsat_.pop_back();
    unsat_pos_[static_cast<std::size_t>(cid)] = -1;
  }

  const Formula& f_;
  std::vector<std::vector<int>> occ_;
  std::vector<char> value_;
  std::vector<int> true_count_;
  std::vector<int> unsat_;
  std::vector<int> unsat_pos_;
  std::vector<int> make_;
  std::vector<int> break_;
};

}  // namespace

SolveResult local_search(const Formula& f, const WalksatConfig& cfg, const RunLimits& limits) {
  check_noise(cfg.noise);
  const auto t0 = Clock::now();
  SolveResult result;
  const std::uint64_t max_flips =
      cfg.max_flips > 0 ? cfg.max_flips : 100ULL * static_cast<std::uint64_t>(f.num_vars());

  CnfWalkState state(f);
  StopReason reason = StopReason::BudgetExhausted;
  for (std::uint64_t r = 0; r < cfg.restarts; ++r) {
    SplitMix64 rng(SplitMix64::substream_seed(cfg.seed, r));
    ++result.stats.restarts;
    state.reset(rng);
    for (std::uint64_t flip = 0; flip <= max_flips; ++flip) {
      if (state.unsat().empty()) {
        result.status = Status::Sat;
        result.model = state.to_assignment();
        result.stats.elapsed = Clock::now() - t0;
        return result;
      }
      if (flip == max_flips) break;  // budget for this restart spent
      if (hit_limit(limits, reason)) {
        result.stats.elapsed = Clock::now() - t0;
        return result;
      }
      int var;
      const int cid = state.unsat()[rng.below(static_cast<std::uint32_t>(state.unsat().size()))];
      if (rng.unit() < cfg.noise) {
        const Clause& c = f.clauses()[static_cast<std::size_t>(cid)];
        var = c[rng.below(static_cast<std::uint32_t>(c.size()))].var();
      } else {
        // Best flip over all variables; ties uniform at random.
        int best_score = std::numeric_limits<int>::min();
        std::uint32_t tie = 0;
        var = 1;
        for (int v = 1; v <= state.num_vars(); ++v) {
          const int s = state.score(v);
          if (s > best_score) {
            best_score = s;
            tie = 1;
            var = v;
          } else if (s == best_score && rng.below(++tie) == 0) {
            var = v;
          }
        }
      }
      state.flip(var);
      ++result.stats.flips;
    }
  }
  result.status = Status::Unknown;
  result.stats.elapsed = Clock::now() - t0;
  return result;
}

// ---------------------------------------------------------------------------
// Coloring-invariant local search
// ---------------------------------------------------------------------------

PatternIndex::PatternIndex(const ProblemSpec& spec)
    : spec_(spec),
      patterns_(enumerate_patterns(spec)),
      by_element_(static_cast<std::size_t>(spec.element_count())) {
  for (std::size_t pid = 0; pid < patterns_.size(); ++pid)
    for (int idx = 0; idx < patterns_[pid].len; ++idx)
      by_element_[static_cast<std::size_t>(patterns_[pid].elems[static_cast<std::size_t>(idx)]) - 1]
          .push_back(static_cast<int>(pid));
}

std::span<const int> PatternIndex::patterns_of(int element) const {
  return by_element_[static_cast<std::size_t>(element) - 1];
}

ColoringState::ColoringState(const PatternIndex& index, Coloring start)
    : index_(&index),
      coloring_(std::move(start)),
      unsat_pos_(index.patterns().size(), -1),
      mono_count_(static_cast<std::size_t>(index.spec().element_count()), 0),
      others_uniform_(static_cast<std::size_t>(index.spec().element_count()) *
                          static_cast<std::size_t>(index.spec().colors),
                      0) {
  const ProblemSpec& spec = index.spec();
  if (static_cast<int>(coloring_.colors.size()) != spec.element_count())
    throw std::invalid_argument("ColoringState: coloring has wrong element count");
  for (int color : coloring_.colors)
    if (color < 1 || color > spec.colors)
      throw std::invalid_argument("ColoringState: color out of range");

  const auto& patterns = index.patterns();
  for (std::size_t pid = 0; pid < patterns.size(); ++pid) {
    const Pattern& p = patterns[pid];
    bool mono = true;
    for (int idx = 1; idx < p.len; ++idx)
      mono = mono && coloring_.color_of(p.elems[static_cast<std::size_t>(idx)]) ==
                         coloring_.color_of(p.elems[0]);
    if (mono) {
      add_unsat(static_cast<int>(pid));
      for (int idx = 0; idx < p.len; ++idx)
        ++mono_count_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(idx)]) - 1];
    }
    // others_uniform: for each member, is the rest of the pattern uniform?
    for (int idx = 0; idx < p.len; ++idx) {
      int uniform = -1;
      for (int other = 0; other < p.len; ++other) {
        if (other == idx) continue;
        const int col = coloring_.color_of(p.elems[static_cast<std::size_t>(other)]);
        if (uniform == -1)
          uniform = col;
        else if (uniform != col)
          uniform = 0;  // mixed
      }
      if (uniform > 0)
        ++others_uniform_[(static_cast<std::size_t>(p.elems[static_cast<std::size_t>(idx)]) - 1) *
                              index.spec().colors +
                          (static_cast<std::size_t>(uniform) - 1)];
    }
  }
}

int ColoringState::move_delta(int element, int new_color) const {
  const int c = index_->spec().colors;
  if (element < 1 || element > index_->spec().element_count())
    throw std::invalid_argument("move_delta: element out of range");
  if (new_color < 1 || new_color > c)
    throw std::invalid_argument("move_delta: color out of range");
  if (new_color == coloring_.color_of(element)) return 0;
  const int broken =
      others_uniform_[(static_cast<std::size_t>(element) - 1) * c +
                      (static_cast<std::size_t>(new_color) - 1)];
  return broken - mono_count(element);
}

void ColoringState::apply_move(int element, int new_color) {
  const ProblemSpec& spec = index_->spec();
  if (element < 1 || element > spec.element_count())
    throw std::invalid_argument("apply_move: element out of range");
  if (new_color < 1 || new_color > spec.colors)
    throw std::invalid_argument("apply_move: color out of range");
  const int old_color = coloring_.color_of(element);
  if (new_color == old_color) throw std::invalid_argument("apply_move: no-op recolor");

  const auto& patterns = index_->patterns();
  for (int pid : index_->patterns_of(element)) {
    const Pattern& p = patterns[static_cast<std::size_t>(pid)];
    // Color of the other members if uniform, else 0. The moved element is
    // excluded, so this is valid both before and after the recolor.
    int uniform = -1;
    for (int idx = 0; idx < p.len; ++idx) {
      const int e = p.elems[static_cast<std::size_t>(idx)];
      if (e == element) continue;
      const int col = coloring_.color_of(e);
      if (uniform == -1)
        uniform = col;
      else if (uniform != col)
        uniform = 0;
    }
    const bool was_mono = uniform == old_color && is_unsat(pid);
    const bool now_mono = uniform == new_color;
    if (was_mono && !now_mono) {
      remove_unsat(pid);
      for (int idx = 0; idx < p.len; ++idx)
        --mono_count_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(idx)]) - 1];
    } else if (!was_mono && now_mono) {
      add_unsat(pid);
      for (int idx = 0; idx < p.len; ++idx)
        ++mono_count_[static_cast<std::size_t>(p.elems[static_cast<std::size_t>(idx)]) - 1];
    }
    // Update others_uniform of the other members: their "rest of pattern"
    // contains the recolored element.
    for (int idx = 0; idx < p.len; ++idx) {
      const int o = p.elems[static_cast<std::size_t>(idx)];
      if (o == element) continue;
      int third = 0;  // color of the remaining member for triples, 0 for pairs
      if (p.len == 3) {
        for (int j = 0; j < p.len; ++j) {
          const int e = p.elems[static_cast<std::size_t>(j)];
          if (e != o && e != element) third = coloring_.color_of(e);
        }
      }
      const std::size_t base = (static_cast<std::size_t>(o) - 1) * spec.colors;
      if (p.len == 2 || third == old_color)
        --others_uniform_[base + static_cast<std::size_t>(old_color) - 1];
      if (p.len == 2 || third == new_color)
        ++others_uniform_[base + static_cast<std::size_t>(new_color) - 1];
    }
  }
  coloring_.colors[static_cast<std::size_t>(element) - 1] = new_color;
}

std::vector<int> ColoringState::recount_unsat() const {
  std::vector<int> out;
  const auto& patterns = index_->patterns();
  for (std::size_t pid = 0; pid < patterns.size(); ++pid) {
    const Pattern& p = patterns[pid];
    bool mono = true;
    for (int idx = 1; idx < p.len; ++idx)
      mono = mono && coloring_.color_of(p.elems[static_cast<std::size_t>(idx)]) ==
                         coloring_.color_of(p.elems[0]);
    if (mono) out.push_back(static_cast<int>(pid));
  }
  return out;
}

void ColoringState::add_unsat(int pid) {
  unsat_pos_[static_cast<std::size_t>(pid)] = static_cast<int>(unsat_ids_.size());
  unsat_ids_.push_back(pid);
}

void ColoringState::remove_unsat(int pid) {
  const int pos = unsat_pos_[static_cast<std::size_t>(pid)];
  const int last = unsat_ids_.back();
  unsat_ids_[static_cast<std::size_t>(pos)] = last;
  unsat_pos_[static_cast<std::size_t>(last)] = pos;
  unsat_ids_.pop_back();
  unsat_pos_[static_cast<std::size_t>(pid)] = -1;
}

ColoringResult coloring_search(const ProblemSpec& spec, const WalksatConfig& cfg,
                               const RunLimits& limits) {
  check_noise(cfg.noise);
  const auto t0 = Clock::now();
  ColoringResult result;
  const int elements = spec.element_count();
  const int c = spec.colors;
  const std::uint64_t max_flips =
      cfg.max_flips > 0
          ? cfg.max_flips
          : 100ULL * static_cast<std::uint64_t>(elements) * static_cast<std::uint64_t>(c);

  const PatternIndex index(spec);
  Coloring coloring{spec, std::vector<int>(static_cast<std::size_t>(elements), 1)};
  // Scratch for deduplicating candidate elements in the greedy branch.
  std::vector<std::uint64_t> stamp(static_cast<std::size_t>(elements) + 1, 0);
  std::uint64_t stamp_counter = 0;

  for (std::uint64_t r = 0; r < cfg.restarts; ++r) {
    SplitMix64 rng(SplitMix64::substream_seed(cfg.seed, r));
    ++result.stats.restarts;
    for (int e = 0; e < elements; ++e)
      coloring.colors[static_cast<std::size_t>(e)] =
          1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(c)));
    ColoringState state(index, coloring);

    for (std::uint64_t flip = 0; flip <= max_flips; ++flip) {
      if (state.unsat().empty()) {
        result.status = Status::Sat;
        result.coloring = state.coloring();
        result.reason = StopReason::Found;
        result.stats.elapsed = Clock::now() - t0;
        return result;
      }
      if (flip == max_flips) break;
      if (hit_limit(limits, result.reason)) {
        result.stats.elapsed = Clock::now() - t0;
        return result;
      }
      if (c < 2) break;  // no move can recolor anything

      int element = 0;
      int color = 0;
      if (rng.unit() < cfg.noise) {
        // Random member of a random monochromatic pattern, recolored to the
        // best replacement color (ties uniform).
        const auto& unsat = state.unsat();
        const Pattern& p =
            index.patterns()[static_cast<std::size_t>(unsat[rng.below(static_cast<std::uint32_t>(unsat.size()))])];
        element = p.elems[rng.below(static_cast<std::uint32_t>(p.len))];
        const int cur = state.coloring().color_of(element);
        int best_delta = std::numeric_limits<int>::max();
        std::uint32_t tie = 0;
        for (int k = 1; k <= c; ++k) {
          if (k == cur) continue;
          const int d = state.move_delta(element, k);
          if (d < best_delta) {
            best_delta = d;
            tie = 1;
            color = k;
          } else if (d == best_delta && rng.below(++tie) == 0) {
            color = k;
          }
        }
      } else {
        // Greedy over every (element, color) move with the element drawn
        // from the monochromatic patterns.
        ++stamp_counter;
        int best_delta = std::numeric_limits<int>::max();
        std::uint32_t tie = 0;
        for (int pid : state.unsat()) {
          const Pattern& p = index.patterns()[static_cast<std::size_t>(pid)];
          for (int idx = 0; idx < p.len; ++idx) {
            const int e = p.elems[static_cast<std::size_t>(idx)];
            if (stamp[static_cast<std::size_t>(e)] == stamp_counter) continue;
            stamp[static_cast<std::size_t>(e)] = stamp_counter;
            const int cur = state.coloring().color_of(e);
            for (int k = 1; k <= c; ++k) {
              if (k == cur) continue;
              const int d = state.move_delta(e, k);
              if (d < best_delta) {
                best_delta = d;
                tie = 1;
                element = e;
                color = k;
              } else if (d == best_delta && rng.below(++tie) == 0) {
                element = e;
                color = k;
              }
            }
          }
        }
      }
      state.apply_move(element, color);
      ++result.stats.flips;
    }
  }
  result.status = Status::Unknown;
  result.reason = StopReason::BudgetExhausted;
  result.stats.elapsed = Clock::now() - t0;
  return result;
}

}  // namespace rsat
