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

#ifndef RSAT_ENCODE_HPP
#define RSAT_ENCODE_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "rsat/cnf.hpp"

namespace rsat {

// The three problem families:
//   L    - c-color the [n]x[n] grid with no monochromatic corner
//          {(i,j), (i,j+t), (i+t,j+t)}.
//   VDS  - c-color [n] with no two same-colored integers a perfect square apart.
//   VDC  - same with perfect cubes.
enum class ProblemKind { L, VDS, VDC };

std::string to_string(ProblemKind k);
ProblemKind problem_kind_from_string(const std::string& s);

struct ProblemSpec {
  ProblemKind kind;
  int n;       // grid side (L) or sequence length (VDS/VDC)
  int colors;  // number of colors c

  ProblemSpec(ProblemKind kind, int n, int colors);

  // n*n for grids, n for sequences.
  int element_count() const;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

// A set of 2 or 3 element indices that must not be monochromatic. Elements
// are 1-based; grid point (i,j) is element (i-1)*n + j (row-major).
struct Pattern {
  std::array<int, 3> elems{0, 0, 0};
  int len = 0;

  static Pattern pair(int a, int b) { return Pattern{{a, b, 0}, 2}; }
  static Pattern triple(int a, int b, int c) { return Pattern{{a, b, c}, 3}; }

  friend bool operator==(const Pattern&, const Pattern&) = default;
};

// One color per element, values in 1..c. Grids are stored row-major.
struct Coloring {
  ProblemSpec spec;
  std::vector<int> colors;  // colors[e-1] is the color of element e

  int color_of(int element) const { return colors[static_cast<std::size_t>(element) - 1]; }
  // Grid access, 1-based coordinates.
  int at(int i, int j) const { return colors[static_cast<std::size_t>(i - 1) * spec.n + (j - 1)]; }
};

// Boolean variable for "element e has color k". The mapping is the bijection
// var = (e-1)*c + k onto [c * element_count]; for grids e = (i-1)*n + j.
int var_id(const ProblemSpec& spec, int element, int color);
int grid_element(const ProblemSpec& spec, int i, int j);

// All forbidden patterns of the instance, each exactly once.
// L: triples {(i,j),(i,j+t),(i+t,j+t)} enumerated by (t, i, j).
// VDS/VDC: pairs (a, a + k^2) resp. (a, a + k^3) enumerated by (k, a).
std::vector<Pattern> enumerate_patterns(const ProblemSpec& spec);

// CNF encoding. Per element: one at-least-one clause over its c color
// variables plus the c(c-1)/2 pairwise at-most-one clauses; then, per
// pattern and per color, one all-negative clause forbidding that
// monochromatic pattern. Satisfiable iff a pattern-free coloring exists.
Formula encode(const ProblemSpec& spec);

// Thrown by decode when an element has zero or more than one true color
// variable.
struct DecodeError : std::runtime_error {
  int element;
  DecodeError(int element, const std::string& what) : std::runtime_error(what), element(element) {}
};

// Reads a coloring back out of a total satisfying assignment of encode(spec).
Coloring decode(const ProblemSpec& spec, const Assignment& a);

// The assignment induced by a coloring: var (e,k) is true iff colors[e] == k.
Assignment assignment_from_coloring(const Coloring& coloring);

}  // namespace rsat

#endif  // RSAT_ENCODE_HPP
