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

#ifndef RSAT_VERIFY_HPP
#define RSAT_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "rsat/encode.hpp"

namespace rsat {

// Certificate checking by direct brute-force scanning. Deliberately shares
// no pattern enumeration code with the encoder, so it can catch encoder bugs.

struct GridViolation {
  int i, j, t;  // the corner {(i,j), (i,j+t), (i+t,j+t)}
  int color;
  friend bool operator==(const GridViolation&, const GridViolation&) = default;
};

struct SequenceViolation {
  int a, b;  // the pair (a, b), b - a a perfect square resp. cube
  int color;
  friend bool operator==(const SequenceViolation&, const SequenceViolation&) = default;
};

// Scans all (t, i, j) in that (lexicographic) order; returns the first
// monochromatic corner, or nullopt if the grid is clean. Throws
// std::invalid_argument on a malformed grid (wrong size, color out of 1..c).
std::optional<GridViolation> verify_grid(int n, int c, const Coloring& grid);

// Scans all (k, a) in that order for pairs at distance k^2 (VDS) or k^3
// (VDC). kind must be VDS or VDC.
std::optional<SequenceViolation> verify_sequence(ProblemKind kind, int n, int c,
                                                 const Coloring& seq);

// Convenience: dispatches on coloring.spec.kind and reports a violation as a
// human-readable message, or nullopt when the certificate is valid.
std::optional<std::string> verify_coloring(const Coloring& coloring);

// Exhaustive truth-table SAT check. Requires num_vars <= 25 (throws
// std::invalid_argument beyond that). Returns true iff satisfiable.
bool brute_force_solve(const Formula& f);

// Counts pattern-free colorings by enumerating all c^elements of them.
// Requires c^elements <= 10^8 (throws beyond that).
std::uint64_t exhaustive_coloring_search(const ProblemSpec& spec);

}  // namespace rsat

#endif  // RSAT_VERIFY_HPP
