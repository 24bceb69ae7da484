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

#ifndef RSAT_TESTS_SUPPORT_HPP
#define RSAT_TESTS_SUPPORT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "rsat/cnf.hpp"
#include "rsat/dpll.hpp"
#include "rsat/rng.hpp"

namespace rsat::test {

// Random CNF with clauses over distinct variables (so construction never
// produces duplicates or tautologies).
inline Formula random_formula(SplitMix64& rng, int max_vars, int max_clauses, int min_len = 1,
                              int max_len = 4) {
  const int nv = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_vars)));
  const int nc = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_clauses)));
  Formula f(nv);
  std::vector<Lit> clause;
  for (int i = 0; i < nc; ++i) {
    int len = min_len + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_len - min_len + 1)));
    if (len > nv) len = nv;
    clause.clear();
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < len) {
      const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(nv)));
      bool seen = false;
      for (int u : vars) seen = seen || u == v;
      if (!seen) vars.push_back(v);
    }
    for (int v : vars) clause.push_back(Lit(v, rng.below(2) == 0));
    f.add_clause(clause);
  }
  return f;
}

// Random 2-CNF; occasionally includes unit clauses.
inline Formula random_2cnf(SplitMix64& rng, int num_vars, int num_clauses) {
  Formula f(num_vars);
  for (int i = 0; i < num_clauses; ++i) {
    const int a = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(num_vars)));
    if (rng.below(10) == 0) {
      f.add_clause({Lit(a, rng.below(2) == 0)});
      continue;
    }
    int b = a;
    while (b == a) b = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(num_vars)));
    f.add_clause({Lit(a, rng.below(2) == 0), Lit(b, rng.below(2) == 0)});
  }
  return f;
}

// Random formula that is satisfiable by construction: every clause gets at
// least one literal true under a hidden assignment.
inline Formula random_satisfiable_formula(SplitMix64& rng, int num_vars, int num_clauses,
                                          int max_len = 3) {
  std::vector<bool> hidden(static_cast<std::size_t>(num_vars) + 1);
  for (int v = 1; v <= num_vars; ++v) hidden[static_cast<std::size_t>(v)] = rng.below(2) == 1;
  Formula f(num_vars);
  std::vector<Lit> clause;
  for (int i = 0; i < num_clauses; ++i) {
    int len = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_len)));
    if (len > num_vars) len = num_vars;
    std::vector<int> vars;
    while (static_cast<int>(vars.size()) < len) {
      const int v = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(num_vars)));
      bool seen = false;
      for (int u : vars) seen = seen || u == v;
      if (!seen) vars.push_back(v);
    }
    clause.clear();
    const std::size_t witness = rng.below(static_cast<std::uint32_t>(len));
    for (std::size_t j = 0; j < vars.size(); ++j) {
      const int v = vars[j];
      const bool polarity =
          j == witness ? hidden[static_cast<std::size_t>(v)] : rng.below(2) == 0;
      clause.push_back(Lit(v, polarity));
    }
    f.add_clause(clause);
  }
  return f;
}

// Direct recursive implementation of the solver's specification, built only
// from the public formula-rewriting operations. Slow; used as the oracle
// for the production engine (status, model and decision count must agree).
struct ReferenceResult {
  Status status = Status::Unknown;
  std::optional<Assignment> model;
  std::uint64_t decisions = 0;
};

inline std::optional<Assignment> reference_dpll_go(const Formula& f, Assignment a,
                                                   std::uint64_t& decisions) {
  auto up = unit_propagate(f, a);
  if (up.conflict) return std::nullopt;
  const Formula& cur = up.formula;
  a = up.assignment;
  if (cur.num_clauses() == 0) {
    for (int v = 1; v <= a.num_vars(); ++v)
      if (!a.assigned(v)) a.assign(v, false);
    return a;
  }
  if (is_2cnf(cur)) {
    const SolveResult r = two_sat(cur);
    if (r.status == Status::Unsat) return std::nullopt;
    for (int v = 1; v <= a.num_vars(); ++v)
      if (!a.assigned(v)) a.assign(v, r.model->value(v) == Value::True);
    return a;
  }
  const Lit branch = pick_branch_literal(cur);
  for (const Lit arm : {branch, branch.negated()}) {
    ++decisions;
    Assignment next = a;
    next.assign(arm.var(), arm.positive());
    if (auto model = reference_dpll_go(cur, std::move(next), decisions)) return model;
  }
  return std::nullopt;
}

inline ReferenceResult reference_dpll(const Formula& f) {
  ReferenceResult out;
  auto model = reference_dpll_go(f, Assignment(f.num_vars()), out.decisions);
  if (model) {
    out.status = Status::Sat;
    out.model = std::move(model);
  } else {
    out.status = Status::Unsat;
  }
  return out;
}

}  // namespace rsat::test

#endif  // RSAT_TESTS_SUPPORT_HPP
