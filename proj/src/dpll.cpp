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

#include "rsat/dpll.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsat {

namespace {

using Clock = std::chrono::steady_clock;

int tarjan_node(Lit l) { return static_cast<int>(l.index()); }

}  // namespace

SolveResult two_sat(const Formula& f) {
  const auto t0 = Clock::now();
  if (!is_2cnf(f)) throw std::invalid_argument("two_sat: formula is not 2-CNF");

  const int num_nodes = 2 * f.num_vars();
  // Implication edges, CSR layout. (a or b) yields ~a -> b and ~b -> a;
  // a unit clause (a) is (a or a), i.e. the single edge ~a -> a.
  std::vector<int> head(static_cast<std::size_t>(num_nodes) + 1, 0);
  std::size_t num_edges = 0;
  for (const Clause& c : f.clauses()) num_edges += c.size() == 1 ? 1 : 2;
  std::vector<int> edges(num_edges);
  for (const Clause& c : f.clauses()) {
    Lit a = c[0];
    Lit b = c.size() == 2 ? c[1] : c[0];
    ++head[static_cast<std::size_t>(tarjan_node(a.negated())) + 1];
    if (c.size() == 2) ++head[static_cast<std::size_t>(tarjan_node(b.negated())) + 1];
  }
  for (int v = 0; v < num_nodes; ++v)
    head[static_cast<std::size_t>(v) + 1] += head[static_cast<std::size_t>(v)];
  {
    std::vector<int> cursor(head.begin(), head.end() - 1);
    for (const Clause& c : f.clauses()) {
      Lit a = c[0];
      Lit b = c.size() == 2 ? c[1] : c[0];
      edges[static_cast<std::size_t>(cursor[static_cast<std::size_t>(tarjan_node(a.negated()))]++)] =
          tarjan_node(b);
      if (c.size() == 2)
        edges[static_cast<std::size_t>(cursor[static_cast<std::size_t>(tarjan_node(b.negated()))]++)] =
            tarjan_node(a);
    }
  }

  // Iterative Tarjan. Components are numbered in reverse topological order.
  std::vector<int> order(static_cast<std::size_t>(num_nodes), -1);
  std::vector<int> low(static_cast<std::size_t>(num_nodes), 0);
  std::vector<int> comp(static_cast<std::size_t>(num_nodes), -1);
  std::vector<bool> on_stack(static_cast<std::size_t>(num_nodes), false);
  std::vector<int> scc_stack;
  struct Frame {
    int node;
    int cursor;
  };
  std::vector<Frame> frames;
  int counter = 0;
  int comp_count = 0;

  for (int root = 0; root < num_nodes; ++root) {
    if (order[static_cast<std::size_t>(root)] != -1) continue;
    frames.push_back({root, head[static_cast<std::size_t>(root)]});
    order[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = counter++;
    scc_stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!frames.empty()) {
      Frame& fr = frames.back();
      const int v = fr.node;
      if (fr.cursor < head[static_cast<std::size_t>(v) + 1]) {
        const int w = edges[static_cast<std::size_t>(fr.cursor++)];
        if (order[static_cast<std::size_t>(w)] == -1) {
          frames.push_back({w, head[static_cast<std::size_t>(w)]});
          order[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
          scc_stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = true;
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(v)] =
              std::min(low[static_cast<std::size_t>(v)], order[static_cast<std::size_t>(w)]);
        }
        continue;
      }
      if (low[static_cast<std::size_t>(v)] == order[static_cast<std::size_t>(v)]) {
        while (true) {
          const int w = scc_stack.back();
          scc_stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          comp[static_cast<std::size_t>(w)] = comp_count;
          if (w == v) break;
        }
        ++comp_count;
      }
      frames.pop_back();
      if (!frames.empty())
        low[static_cast<std::size_t>(frames.back().node)] =
            std::min(low[static_cast<std::size_t>(frames.back().node)],
                     low[static_cast<std::size_t>(v)]);
    }
  }

  SolveResult result;
  result.stats.two_sat_calls = 1;
  for (int v = 1; v <= f.num_vars(); ++v) {
    if (comp[pos(v).index()] == comp[neg(v).index()]) {
      result.status = Status::Unsat;
      result.stats.elapsed = Clock::now() - t0;
      return result;
    }
  }
  Assignment model(f.num_vars());
  // A literal whose component comes later in topological order (smaller
  // Tarjan id) can be made true.
  for (int v = 1; v <= f.num_vars(); ++v)
    model.assign(v, comp[pos(v).index()] < comp[neg(v).index()]);
  result.status = Status::Sat;
  result.model = std::move(model);
  result.stats.elapsed = Clock::now() - t0;
  return result;
}

UnitPropagationResult unit_propagate(const Formula& f, const Assignment& a) {
  UnitPropagationResult out{false, f, a, 0};
  auto reduced = reduce(f, out.assignment);
  if (!reduced) {
    out.conflict = true;
    return out;
  }
  out.formula = std::move(*reduced);
  while (true) {
    std::vector<Lit> units = unit_literals(out.formula);
    if (units.empty()) return out;
    // Assign the variable so the unit literal is satisfied.
    Lit u = units.front();
    out.assignment.assign(u.var(), u.positive());
    ++out.propagated;
    auto next = reduce(out.formula, out.assignment);
    if (!next) {
      out.conflict = true;
      return out;
    }
    out.formula = std::move(*next);
  }
}

Lit pick_branch_literal(const Formula& f) {
  if (f.clauses().empty())
    throw std::invalid_argument("pick_branch_literal: formula has no clauses");
  for (const Clause& c : f.clauses()) {
    if (c.size() == 1)
      throw std::invalid_argument("pick_branch_literal: formula has unit clauses");
  }
  for (const Clause& c : f.clauses())
    if (c.size() == 2) return c[0];

  const LiteralWeights w = literal_weights(f);
  std::size_t best = 0;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w.at_index(i) > w.at_index(best)) best = i;
  const int var = static_cast<int>(best / 2) + 1;
  return Lit(var, best % 2 == 0);
}

namespace {

// In-place DPLL engine. Instead of copying and reducing the formula at each
// node it keeps, per clause, the number of true and unassigned literals
// under the current partial assignment; the "currently reduced formula" is
// then the set of clauses with no true literal, each consisting of its
// unassigned literals in original order. All rules (first 2-clause, 1/s
// weights over reduced lengths, literal order) are evaluated against that
// view, so the engine's behavior matches the formula-rewriting description
// exactly while backtracking in O(occurrences) per assignment.
class DpllEngine {
 public:
  explicit DpllEngine(const Formula& f)
      : f_(f),
        occ_(2 * static_cast<std::size_t>(f.num_vars())),
        value_(static_cast<std::size_t>(f.num_vars()) + 1, Value::Unassigned),
        true_count_(f.num_clauses(), 0),
        unassigned_count_(f.num_clauses(), 0),
        weight_(2 * static_cast<std::size_t>(f.num_vars())),
        weight_epoch_(2 * static_cast<std::size_t>(f.num_vars()), 0) {
    for (std::size_t cid = 0; cid < f.num_clauses(); ++cid) {
      const Clause& c = f.clauses()[cid];
      unassigned_count_[cid] = static_cast<int>(c.size());
      for (Lit l : c) occ_[l.index()].push_back(static_cast<int>(cid));
      if (c.size() >= 3) ++large_active_;
      if (c.size() == 1) unit_queue_.push_back(static_cast<int>(cid));
    }
    active_clauses_ = static_cast<int>(f.num_clauses());
  }

  SolveResult solve(const Cube& assumptions, const RunLimits& limits) {
    const auto t0 = Clock::now();
    SolveResult result;
    SearchOutcome outcome = SearchOutcome::Unsat;
    if (propagate()) {
      outcome = SearchOutcome::Sat;  // tentatively; assumptions may fail
      for (Lit l : assumptions) {
        if (value_of(l) == LitValue::True) continue;
        if (value_of(l) == LitValue::False) {
          outcome = SearchOutcome::Unsat;
          break;
        }
        assign(l);
        ++stats_.decisions;
        if (!propagate()) {
          outcome = SearchOutcome::Unsat;
          break;
        }
      }
      if (outcome != SearchOutcome::Unsat) outcome = search(limits, result);
    }
    result.status = outcome == SearchOutcome::Sat     ? Status::Sat
                    : outcome == SearchOutcome::Unsat ? Status::Unsat
                                                      : Status::Unknown;
    if (result.status != Status::Sat) result.model.reset();
    result.stats = stats_;
    result.stats.elapsed = Clock::now() - t0;
    return result;
  }

  ExpandResult expand(int depth) {
    const auto t0 = Clock::now();
    ExpandResult out;
    if (!propagate()) {
      out.resolved = SolveResult{Status::Unsat, std::nullopt, stats_};
    } else {
      std::optional<SolveResult> sat;
      Cube path;
      const bool closed = expand_node(depth, path, out.cubes, sat);
      if (sat) {
        out.resolved = std::move(sat);
        out.cubes.clear();
      } else if (closed && out.cubes.empty()) {
        out.resolved = SolveResult{Status::Unsat, std::nullopt, stats_};
      }
    }
    out.stats = stats_;
    out.stats.elapsed = Clock::now() - t0;
    if (out.resolved) out.resolved->stats = out.stats;
    return out;
  }

 private:
  enum class LitValue { True, False, Unassigned };
  enum class SearchOutcome { Sat, Unsat, Aborted };

  LitValue value_of(Lit l) const {
    const Value v = value_[static_cast<std::size_t>(l.var())];
    if (v == Value::Unassigned) return LitValue::Unassigned;
    return (v == Value::True) == l.positive() ? LitValue::True : LitValue::False;
  }

  void assign(Lit l) {
    value_[static_cast<std::size_t>(l.var())] = l.positive() ? Value::True : Value::False;
    trail_.push_back(l);
    for (int cid : occ_[l.index()]) {
      const std::size_t c = static_cast<std::size_t>(cid);
      if (true_count_[c]++ == 0) {
        --active_clauses_;
        if (unassigned_count_[c] >= 3) --large_active_;
      }
    }
    for (int cid : occ_[l.negated().index()]) {
      const std::size_t c = static_cast<std::size_t>(cid);
      const int uc = --unassigned_count_[c];
      if (true_count_[c] != 0) continue;
      if (uc == 2)
        --large_active_;
      else if (uc == 1)
        unit_queue_.push_back(cid);
      else if (uc == 0)
        ++conflicts_;
    }
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const Lit l = trail_.back();
      trail_.pop_back();
      for (int cid : occ_[l.index()]) {
        const std::size_t c = static_cast<std::size_t>(cid);
        if (--true_count_[c] == 0) {
          ++active_clauses_;
          if (unassigned_count_[c] >= 3) ++large_active_;
        }
      }
      for (int cid : occ_[l.negated().index()]) {
        const std::size_t c = static_cast<std::size_t>(cid);
        const int uc = ++unassigned_count_[c];
        if (true_count_[c] != 0) continue;
        if (uc == 3)
          ++large_active_;
        else if (uc == 1)
          --conflicts_;
      }
      value_[static_cast<std::size_t>(l.var())] = Value::Unassigned;
    }
  }

  // Drains the unit queue. Returns false on conflict (queue discarded).
  bool propagate() {
    while (unit_cursor_ < unit_queue_.size()) {
      if (conflicts_ > 0) break;
      const std::size_t c = static_cast<std::size_t>(unit_queue_[unit_cursor_++]);
      if (true_count_[c] != 0 || unassigned_count_[c] != 1) continue;
      for (Lit l : f_.clauses()[c]) {
        if (value_of(l) == LitValue::Unassigned) {
          assign(l);
          ++stats_.propagations;
          break;
        }
      }
    }
    unit_queue_.clear();
    unit_cursor_ = 0;
    return conflicts_ == 0;
  }

  bool satisfied() const { return active_clauses_ == 0; }
  bool reduced_is_2cnf() const { return large_active_ == 0; }

  Lit pick_branch() {
    for (std::size_t c = 0; c < f_.num_clauses(); ++c) {
      if (true_count_[c] != 0 || unassigned_count_[c] != 2) continue;
      for (Lit l : f_.clauses()[c])
        if (value_of(l) == LitValue::Unassigned) return l;
    }
    // Weighted branch: 1/s per occurrence, s the reduced clause length.
    ++weight_epoch_counter_;
    for (std::size_t c = 0; c < f_.num_clauses(); ++c) {
      if (true_count_[c] != 0) continue;
      const long long s = unassigned_count_[c];
      for (Lit l : f_.clauses()[c]) {
        if (value_of(l) != LitValue::Unassigned) continue;
        const std::size_t i = l.index();
        if (weight_epoch_[i] != weight_epoch_counter_) {
          weight_epoch_[i] = weight_epoch_counter_;
          weight_[i] = Rational();
        }
        weight_[i].add_unit_fraction(s);
      }
    }
    std::size_t best = weight_.size();
    for (std::size_t i = 0; i < weight_.size(); ++i) {
      if (weight_epoch_[i] != weight_epoch_counter_) continue;
      if (best == weight_.size() || weight_[i] > weight_[best]) best = i;
    }
    const int var = static_cast<int>(best / 2) + 1;
    return Lit(var, best % 2 == 0);
  }

  Formula materialize_reduced() const {
    Formula out(f_.num_vars());
    std::vector<Lit> lits;
    for (std::size_t c = 0; c < f_.num_clauses(); ++c) {
      if (true_count_[c] != 0) continue;
      lits.clear();
      for (Lit l : f_.clauses()[c])
        if (value_of(l) == LitValue::Unassigned) lits.push_back(l);
      out.add_clause(lits);
    }
    return out;
  }

  Assignment total_model_default_false() const {
    Assignment a(f_.num_vars());
    for (int v = 1; v <= f_.num_vars(); ++v)
      a.set(v, value_[static_cast<std::size_t>(v)] == Value::True);
    return a;
  }

  bool aborted(const RunLimits& limits) const {
    if (limits.cancel && limits.cancel->load(std::memory_order_relaxed)) return true;
    if (limits.deadline && Clock::now() >= *limits.deadline) return true;
    return false;
  }

  // Precondition: units propagated, no conflict.
  SearchOutcome search(const RunLimits& limits, SolveResult& result) {
    if (satisfied()) {
      result.model = total_model_default_false();
      return SearchOutcome::Sat;
    }
    if (reduced_is_2cnf()) {
      ++stats_.two_sat_calls;
      SolveResult sub = two_sat(materialize_reduced());
      if (sub.status == Status::Unsat) return SearchOutcome::Unsat;
      Assignment merged(f_.num_vars());
      for (int v = 1; v <= f_.num_vars(); ++v) {
        const Value own = value_[static_cast<std::size_t>(v)];
        merged.set(v, own == Value::Unassigned ? sub.model->value(v) == Value::True
                                               : own == Value::True);
      }
      result.model = std::move(merged);
      return SearchOutcome::Sat;
    }
    const Lit branch = pick_branch();
    for (const Lit arm : {branch, branch.negated()}) {
      if (aborted(limits)) return SearchOutcome::Aborted;
      const std::size_t mark = trail_.size();
      assign(arm);
      ++stats_.decisions;
      if (propagate()) {
        const SearchOutcome sub = search(limits, result);
        if (sub != SearchOutcome::Unsat) return sub;  // Sat and Aborted bubble up
      }
      undo_to(mark);
    }
    return SearchOutcome::Unsat;
  }

  // Returns true when the subtree is fully closed (all branches refuted).
  // On finding SAT, stores the result and unwinds immediately.
  bool expand_node(int remaining_depth, Cube& path, std::vector<Cube>& cubes,
                   std::optional<SolveResult>& sat) {
    if (satisfied()) {
      SolveResult r;
      r.status = Status::Sat;
      r.model = total_model_default_false();
      sat = std::move(r);
      return false;
    }
    if (reduced_is_2cnf()) {
      ++stats_.two_sat_calls;
      SolveResult sub = two_sat(materialize_reduced());
      if (sub.status == Status::Unsat) return true;
      Assignment merged(f_.num_vars());
      for (int v = 1; v <= f_.num_vars(); ++v) {
        const Value own = value_[static_cast<std::size_t>(v)];
        merged.set(v, own == Value::Unassigned ? sub.model->value(v) == Value::True
                                               : own == Value::True);
      }
      SolveResult r;
      r.status = Status::Sat;
      r.model = std::move(merged);
      sat = std::move(r);
      return false;
    }
    if (remaining_depth == 0) {
      cubes.push_back(path);
      return false;
    }
    const Lit branch = pick_branch();
    bool closed = true;
    for (const Lit arm : {branch, branch.negated()}) {
      const std::size_t mark = trail_.size();
      assign(arm);
      ++stats_.decisions;
      path.push_back(arm);
      if (propagate()) {
        const bool sub_closed = expand_node(remaining_depth - 1, path, cubes, sat);
        closed = closed && sub_closed;
      }
      path.pop_back();
      undo_to(mark);
      if (sat) return false;
    }
    return closed;
  }

  const Formula& f_;
  std::vector<std::vector<int>> occ_;
  std::vector<Value> value_;
  std::vector<int> true_count_;
  std::vector<int> unassigned_count_;
  std::vector<Lit> trail_;
  std::vector<int> unit_queue_;
  std::size_t unit_cursor_ = 0;
  int active_clauses_ = 0;  // clauses with no true literal
  int large_active_ = 0;    // active clauses with >= 3 unassigned literals
  int conflicts_ = 0;       // active clauses with 0 unassigned literals
  std::vector<Rational> weight_;
  std::vector<std::uint32_t> weight_epoch_;
  std::uint32_t weight_epoch_counter_ = 0;
  SearchStats stats_;
};

}  // namespace

SolveResult dpll_solve_under(const Formula& f, const Cube& assumptions,
                             const RunLimits& limits) {
  DpllEngine engine(f);
  return engine.solve(assumptions, limits);
}

SolveResult dpll_solve(const Formula& f) { return dpll_solve_under(f, {}, {}); }

ExpandResult dpll_expand(const Formula& f, int depth) {
  if (depth < 0) throw std::invalid_argument("dpll_expand: negative depth");
  DpllEngine engine(f);
  return engine.expand(depth);
}

}  // namespace rsat
