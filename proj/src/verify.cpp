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

#include "rsat/verify.hpp"

#include <sstream>

namespace rsat {

namespace {

void check_coloring_shape(const Coloring& col, int expected_elements, int c, const char* who) {
  if (static_cast<int>(col.colors.size()) != expected_elements)
    throw std::invalid_argument(std::string(who) + ": expected " +
                                std::to_string(expected_elements) + " elements, got " +
                                std::to_string(col.colors.size()));
  for (int color : col.colors)
    if (color < 1 || color > c)
      throw std::invalid_argument(std::string(who) + ": color " + std::to_string(color) +
                                  " outside [1, " + std::to_string(c) + "]");
}

// True on sequences with no monochromatic pair at square/cube distance and
// on grids with no monochromatic corner; raw-array variant shared by the
// exhaustive counter so it does not allocate per coloring.
bool sequence_clean(const int* colors, int n, int exponent) {
  for (int k = 1;; ++k) {
    long long d = static_cast<long long>(k) * k;
    if (exponent == 3) d *= k;
    if (d > n - 1) return true;
    for (int a = 1; a + d <= n; ++a)
      if (colors[a - 1] == colors[a - 1 + d]) return false;
  }
}

bool grid_clean(const int* colors, int n) {
  for (int t = 1; t <= n - 1; ++t)
    for (int i = 1; i + t <= n; ++i)
      for (int j = 1; j + t <= n; ++j) {
        const int c1 = colors[(i - 1) * n + (j - 1)];
        const int c2 = colors[(i - 1) * n + (j + t - 1)];
        const int c3 = colors[(i + t - 1) * n + (j + t - 1)];
        if (c1 == c2 && c2 == c3) return false;
      }
  return true;
}

}  // namespace

std::optional<GridViolation> verify_grid(int n, int c, const Coloring& grid) {
  check_coloring_shape(grid, n * n, c, "verify_grid");
  const int* colors = grid.colors.data();
  for (int t = 1; t <= n - 1; ++t)
    for (int i = 1; i + t <= n; ++i)
      for (int j = 1; j + t <= n; ++j) {
        const int c1 = colors[(i - 1) * n + (j - 1)];
        const int c2 = colors[(i - 1) * n + (j + t - 1)];
        const int c3 = colors[(i + t - 1) * n + (j + t - 1)];
        if (c1 == c2 && c2 == c3) return GridViolation{i, j, t, c1};
      }
  return std::nullopt;
}

std::optional<SequenceViolation> verify_sequence(ProblemKind kind, int n, int c,
                                                 const Coloring& seq) {
  if (kind != ProblemKind::VDS && kind != ProblemKind::VDC)
    throw std::invalid_argument("verify_sequence: kind must be VDS or VDC");
  check_coloring_shape(seq, n, c, "verify_sequence");
  const int exponent = kind == ProblemKind::VDS ? 2 : 3;
  for (int k = 1;; ++k) {
    long long d = static_cast<long long>(k) * k;
    if (exponent == 3) d *= k;
    if (d > n - 1) return std::nullopt;
    for (int a = 1; a + d <= n; ++a) {
      const int b = a + static_cast<int>(d);
      if (seq.colors[a - 1] == seq.colors[b - 1])
        return SequenceViolation{a, b, seq.colors[a - 1]};
    }
  }
}

std::optional<std::string> verify_coloring(const Coloring& coloring) {
  const ProblemSpec& spec = coloring.spec;
  std::ostringstream msg;
  if (spec.kind == ProblemKind::L) {
    auto v = verify_grid(spec.n, spec.colors, coloring);
    if (!v) return std::nullopt;
    msg << "monochromatic corner {(" << v->i << "," << v->j << "), (" << v->i << ","
        << v->j + v->t << "), (" << v->i + v->t << "," << v->j + v->t << ")} in color "
        << v->color;
  } else {
    auto v = verify_sequence(spec.kind, spec.n, spec.colors, coloring);
    if (!v) return std::nullopt;
    msg << "monochromatic pair (" << v->a << ", " << v->b << ") in color " << v->color;
  }
  return msg.str();
}

bool brute_force_solve(const Formula& f) {
  const int n = f.num_vars();
  if (n > 25)
    throw std::invalid_argument("brute_force_solve: " + std::to_string(n) + " variables > 25");
  Assignment a(n);
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int v = 1; v <= n; ++v) a.set(v, (mask >> (v - 1)) & 1);
    if (!evaluate(f, a)) return true;
  }
  return false;
}

std::uint64_t exhaustive_coloring_search(const ProblemSpec& spec) {
  const int elements = spec.element_count();
  const int c = spec.colors;
  double total = 1.0;
  for (int e = 0; e < elements; ++e) {
    total *= c;
    if (total > 1e8)
      throw std::invalid_argument("exhaustive_coloring_search: more than 10^8 colorings");
  }

  std::vector<int> colors(static_cast<std::size_t>(elements), 1);
  const int exponent = spec.kind == ProblemKind::VDC ? 3 : 2;
  std::uint64_t count = 0;
  while (true) {
    const bool clean = spec.kind == ProblemKind::L
                           ? grid_clean(colors.data(), spec.n)
                           : sequence_clean(colors.data(), spec.n, exponent);
    if (clean) ++count;
    // Odometer increment over colors 1..c.
    int e = 0;
    while (e < elements && colors[static_cast<std::size_t>(e)] == c) {
      colors[static_cast<std::size_t>(e)] = 1;
      ++e;
    }
    if (e == elements) break;
    ++colors[static_cast<std::size_t>(e)];
  }
  return count;
}

}  // namespace rsat
