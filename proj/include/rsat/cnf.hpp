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

#ifndef RSAT_CNF_HPP
#define RSAT_CNF_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace rsat {

// A literal: a 1-based variable index with a polarity. Stored in DIMACS
// convention (positive = var, negative = -var), never zero.
class Lit {
 public:
  Lit(int var, bool positive) : code_(positive ? var : -var) {}

  // From a signed DIMACS code (nonzero).
  static Lit from_dimacs(int code) { return Lit(code); }

  int var() const { return code_ < 0 ? -code_ : code_; }
  bool positive() const { return code_ > 0; }
  Lit negated() const { return Lit(-code_); }
  int dimacs() const { return code_; }

  // Dense index: 2*(var-1) for the positive literal, +1 for the negative.
  // Ascending index order is (x1, ~x1, x2, ~x2, ...), i.e. lowest variable
  // first and positive before negative, which is the tie-break order used
  // by the branching heuristic.
  std::size_t index() const {
    return 2 * static_cast<std::size_t>(var() - 1) + (positive() ? 0 : 1);
  }

  friend auto operator<=>(const Lit&, const Lit&) = default;

 private:
  explicit Lit(int code) : code_(code) {}
  int code_;
};

inline Lit pos(int var) { return Lit(var, true); }
inline Lit neg(int var) { return Lit(var, false); }

// Exact fraction with small terms; used for the 1/s occurrence weights so
// that heuristic comparisons are platform-independent. Always normalized
// (gcd 1, positive denominator).
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d);

  void add_unit_fraction(long long s);  // += 1/s, s >= 1
  Rational& operator+=(const Rational& o);

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
};

// A disjunction of literals. Normalized at construction: duplicate literals
// are removed (first occurrence kept, order otherwise preserved). Clauses
// are never empty; an empty clause only ever arises during reduction and is
// reported there as an explicit conflict. Tautologies (x or ~x together)
// are detected by Formula::add_clause and dropped.
class Clause {
 public:
  std::size_t size() const { return lits_.size(); }
  const Lit& operator[](std::size_t i) const { return lits_[i]; }
  std::span<const Lit> literals() const { return lits_; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  friend bool operator==(const Clause&, const Clause&) = default;

 private:
  friend class Formula;
  explicit Clause(std::vector<Lit> lits) : lits_(std::move(lits)) {}
  std::vector<Lit> lits_;
};

// A CNF formula over variables 1..num_vars. Clause order is preserved from
// construction; every "first clause / first literal" rule in the solvers
// refers to this order.
class Formula {
 public:
  explicit Formula(int num_vars);

  // Adds a clause after normalization. Returns false if the clause was a
  // tautology and was dropped. Throws std::invalid_argument on an empty
  // literal list or a variable outside [1, num_vars].
  bool add_clause(const std::vector<Lit>& lits);

  int num_vars() const { return num_vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  std::size_t num_clauses() const { return clauses_.size(); }

  friend bool operator==(const Formula&, const Formula&) = default;

 private:
  int num_vars_;
  std::vector<Clause> clauses_;
};

enum class Value : std::int8_t { False = 0, True = 1, Unassigned = 2 };

// A partial truth assignment over variables 1..num_vars.
//
// Two mutation styles, on purpose: assign/unassign enforce the backtracking
// discipline (a variable is never silently flipped; it must be unassigned
// first), while set() overwrites and is meant for local search and for
// building total assignments directly.
class Assignment {
 public:
  explicit Assignment(int num_vars);

  int num_vars() const { return static_cast<int>(values_.size()) - 1; }
  Value value(int var) const { return values_[static_cast<std::size_t>(var)]; }
  bool assigned(int var) const { return value(var) != Value::Unassigned; }

  // Throws std::logic_error if var is already assigned.
  void assign(int var, bool value);
  void unassign(int var);
  void set(int var, bool value);

  bool is_total() const;
  std::size_t num_assigned() const { return num_assigned_; }

  // Truth of a literal under this assignment.
  bool satisfies(Lit l) const {
    Value v = value(l.var());
    return v != Value::Unassigned && (v == Value::True) == l.positive();
  }
  bool falsifies(Lit l) const {
    Value v = value(l.var());
    return v != Value::Unassigned && (v == Value::True) != l.positive();
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Value> values_;  // index 0 unused
  std::size_t num_assigned_ = 0;
};

// Evaluates a total assignment. Returns std::nullopt when every clause has a
// true literal, otherwise the lowest index of a violated clause. Throws
// std::invalid_argument if the assignment leaves a variable unassigned or
// its domain does not match the formula.
std::optional<int> evaluate(const Formula& f, const Assignment& a);

// Removes satisfied clauses and deletes false literals from the rest.
// Returns std::nullopt when some clause becomes empty (conflict). num_vars
// is preserved. reduce is idempotent for a fixed assignment.
std::optional<Formula> reduce(const Formula& f, const Assignment& a);

// Literals of all unit (length-1) clauses, in clause order, deduplicated.
std::vector<Lit> unit_literals(const Formula& f);

// True iff every clause has at most two literals.
bool is_2cnf(const Formula& f);

// Occurrence weights: weight(l) = sum over clauses containing l of 1/s,
// where s is the (normalized) clause length. Positive and negative
// occurrences of a variable are tracked separately.
class LiteralWeights {
 public:
  explicit LiteralWeights(int num_vars) : weights_(2 * static_cast<std::size_t>(num_vars)) {}
  const Rational& of(Lit l) const { return weights_[l.index()]; }
  Rational& of(Lit l) { return weights_[l.index()]; }
  std::size_t size() const { return weights_.size(); }
  const Rational& at_index(std::size_t i) const { return weights_[i]; }

 private:
  std::vector<Rational> weights_;
};

LiteralWeights literal_weights(const Formula& f);

}  // namespace rsat

#endif  // RSAT_CNF_HPP
