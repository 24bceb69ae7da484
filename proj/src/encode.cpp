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

#include "rsat/encode.hpp"

namespace rsat {

std::string to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::L: return "L";
    case ProblemKind::VDS: return "VDS";
    case ProblemKind::VDC: return "VDC";
  }
  throw std::logic_error("to_string: bad ProblemKind");
}

ProblemKind problem_kind_from_string(const std::string& s) {
  if (s == "L") return ProblemKind::L;
  if (s == "VDS") return ProblemKind::VDS;
  if (s == "VDC") return ProblemKind::VDC;
  throw std::invalid_argument("unknown problem kind '" + s + "' (expected L, VDS or VDC)");
}

ProblemSpec::ProblemSpec(ProblemKind kind, int n, int colors)
    : kind(kind), n(n), colors(colors) {
  if (n < 1) throw std::invalid_argument("ProblemSpec: n must be >= 1");
  if (colors < 1) throw std::invalid_argument("ProblemSpec: colors must be >= 1");
}

int ProblemSpec::element_count() const { return kind == ProblemKind::L ? n * n : n; }

int var_id(const ProblemSpec& spec, int element, int color) {
  if (element < 1 || element > spec.element_count())
    throw std::out_of_range("var_id: element " + std::to_string(element) + " out of range");
  if (color < 1 || color > spec.colors)
    throw std::out_of_range("var_id: color " + std::to_string(color) + " out of range");
  return (element - 1) * spec.colors + color;
}

int grid_element(const ProblemSpec& spec, int i, int j) {
  if (spec.kind != ProblemKind::L)
    throw std::invalid_argument("grid_element: not a grid problem");
  if (i < 1 || i > spec.n || j < 1 || j > spec.n)
    throw std::out_of_range("grid_element: point out of range");
  return (i - 1) * spec.n + j;
}

std::vector<Pattern> enumerate_patterns(const ProblemSpec& spec) {
  std::vector<Pattern> out;
  const int n = spec.n;
  if (spec.kind == ProblemKind::L) {
    for (int t = 1; t <= n - 1; ++t)
      for (int i = 1; i + t <= n; ++i)
        for (int j = 1; j + t <= n; ++j)
          out.push_back(Pattern::triple(grid_element(spec, i, j),
                                        grid_element(spec, i, j + t),
                                        grid_element(spec, i + t, j + t)));
  } else {
    const int exponent = spec.kind == ProblemKind::VDS ? 2 : 3;
    for (int k = 1;; ++k) {
      long long d = k * k;
      if (exponent == 3) d *= k;
      if (d > n - 1) break;
      for (int a = 1; a + d <= n; ++a)
        out.push_back(Pattern::pair(a, a + static_cast<int>(d)));
    }
  }
  return out;
}

Formula encode(const ProblemSpec& spec) {
  const int c = spec.colors;
  const int elements = spec.element_count();
  Formula f(c * elements);
  std::vector<Lit> clause;

  // Exactly-one color per element: at-least-one plus pairwise at-most-one.
  for (int e = 1; e <= elements; ++e) {
    clause.clear();
    for (int k = 1; k <= c; ++k) clause.push_back(pos(var_id(spec, e, k)));
    f.add_clause(clause);
    for (int k1 = 1; k1 <= c; ++k1)
      for (int k2 = k1 + 1; k2 <= c; ++k2)
        f.add_clause({neg(var_id(spec, e, k1)), neg(var_id(spec, e, k2))});
  }

  // No pattern may be monochromatic in any color.
  for (const Pattern& p : enumerate_patterns(spec)) {
    for (int k = 1; k <= c; ++k) {
      clause.clear();
      for (int idx = 0; idx < p.len; ++idx)
        clause.push_back(neg(var_id(spec, p.elems[static_cast<std::size_t>(idx)], k)));
      f.add_clause(clause);
    }
  }
  return f;
}

Coloring decode(const ProblemSpec& spec, const Assignment& a) {
  Coloring out{spec, std::vector<int>(static_cast<std::size_t>(spec.element_count()), 0)};
  for (int e = 1; e <= spec.element_count(); ++e) {
    int found = 0;
    for (int k = 1; k <= spec.colors; ++k) {
      if (a.satisfies(pos(var_id(spec, e, k)))) {
        if (found != 0)
          throw DecodeError(e, "decode: element " + std::to_string(e) +
                                   " has more than one color variable set");
        found = k;
      }
    }
    if (found == 0)
      throw DecodeError(e, "decode: element " + std::to_string(e) + " has no color variable set");
    out.colors[static_cast<std::size_t>(e) - 1] = found;
  }
  return out;
}

Assignment assignment_from_coloring(const Coloring& coloring) {
  const ProblemSpec& spec = coloring.spec;
  Assignment a(spec.colors * spec.element_count());
  for (int e = 1; e <= spec.element_count(); ++e)
    for (int k = 1; k <= spec.colors; ++k)
      a.set(var_id(spec, e, k), coloring.color_of(e) == k);
  return a;
}

}  // namespace rsat
