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

#include "rsat/cnf.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace rsat {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

void Rational::add_unit_fraction(long long s) {
  if (s < 1) throw std::invalid_argument("add_unit_fraction: s must be >= 1");
  *this += Rational(1, s);
}

Rational& Rational::operator+=(const Rational& o) {
  long long g = std::gcd(den, o.den);
  long long scaled_other = o.den / g;
  num = num * scaled_other + o.num * (den / g);
  den = den * scaled_other;
  long long g2 = std::gcd(num < 0 ? -num : num, den);
  if (g2 > 1) {
    num /= g2;
    den /= g2;
  }
  return *this;
}

Formula::Formula(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 0) throw std::invalid_argument("Formula: negative num_vars");
}

bool Formula::add_clause(const std::vector<Lit>& lits) {
  if (lits.empty()) throw std::invalid_argument("add_clause: empty clause");
  std::vector<Lit> normalized;
  normalized.reserve(lits.size());
  for (Lit l : lits) {
    if (l.var() < 1 || l.var() > num_vars_)
      throw std::invalid_argument("add_clause: variable " + std::to_string(l.var()) +
                                  " outside [1, " + std::to_string(num_vars_) + "]");
    bool duplicate = false;
    for (Lit seen : normalized) {
      if (seen == l.negated()) return false;  // tautology, drop
      if (seen == l) {
        duplicate = true;
        break;
      }
    }
    if (!duplicate) normalized.push_back(l);
  }
  clauses_.push_back(Clause(std::move(normalized)));
  return true;
}

Assignment::Assignment(int num_vars)
    : values_(static_cast<std::size_t>(num_vars) + 1, Value::Unassigned) {
  if (num_vars < 0) throw std::invalid_argument("Assignment: negative num_vars");
}

void Assignment::assign(int var, bool value) {
  Value& slot = values_[static_cast<std::size_t>(var)];
  if (slot != Value::Unassigned)
    throw std::logic_error("assign: variable " + std::to_string(var) + " already assigned");
  slot = value ? Value::True : Value::False;
  ++num_assigned_;
}

void Assignment::unassign(int var) {
  Value& slot = values_[static_cast<std::size_t>(var)];
  if (slot == Value::Unassigned)
    throw std::logic_error("unassign: variable " + std::to_string(var) + " not assigned");
  slot = Value::Unassigned;
  --num_assigned_;
}

void Assignment::set(int var, bool value) {
  Value& slot = values_[static_cast<std::size_t>(var)];
  if (slot == Value::Unassigned) ++num_assigned_;
  slot = value ? Value::True : Value::False;
}

bool Assignment::is_total() const { return num_assigned_ == values_.size() - 1; }

std::optional<int> evaluate(const Formula& f, const Assignment& a) {
  if (a.num_vars() != f.num_vars())
    throw std::invalid_argument("evaluate: assignment domain does not match formula");
  if (!a.is_total())
    throw std::invalid_argument("evaluate: assignment is not total");
  for (std::size_t i = 0; i < f.clauses().size(); ++i) {
    bool sat = false;
    for (Lit l : f.clauses()[i]) {
      if (a.satisfies(l)) {
        sat = true;
        break;
      }
    }
    if (!sat) return static_cast<int>(i);
  }
  return std::nullopt;
}

std::optional<Formula> reduce(const Formula& f, const Assignment& a) {
  Formula out(f.num_vars());
  std::vector<Lit> kept;
  for (const Clause& c : f.clauses()) {
    kept.clear();
    bool satisfied = false;
    for (Lit l : c) {
      if (a.satisfies(l)) {
        satisfied = true;
        break;
      }
      if (!a.falsifies(l)) kept.push_back(l);
    }
    if (satisfied) continue;
    if (kept.empty()) return std::nullopt;  // empty clause: conflict
    out.add_clause(kept);
  }
  return out;
}

std::vector<Lit> unit_literals(const Formula& f) {
  std::vector<Lit> units;
  for (const Clause& c : f.clauses()) {
    if (c.size() != 1) continue;
    Lit l = c[0];
    bool seen = false;
    for (Lit u : units) {
      if (u == l) {
        seen = true;
        break;
      }
    }
    if (!seen) units.push_back(l);
  }
  return units;
}

bool is_2cnf(const Formula& f) {
  for (const Clause& c : f.clauses())
    if (c.size() > 2) return false;
  return true;
}

LiteralWeights literal_weights(const Formula& f) {
  LiteralWeights w(f.num_vars());
  for (const Clause& c : f.clauses()) {
    const long long s = static_cast<long long>(c.size());
    for (Lit l : c) w.of(l).add_unit_fraction(s);
  }
  return w;
}

}  // namespace rsat
