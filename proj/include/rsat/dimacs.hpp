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

#ifndef RSAT_DIMACS_HPP
#define RSAT_DIMACS_HPP

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "rsat/cnf.hpp"
#include "rsat/encode.hpp"

namespace rsat {

// Standard DIMACS CNF: "p cnf <vars> <clauses>" then one clause per line of
// signed variable indices terminated by 0. When a ProblemSpec is given,
// leading "c" comment lines record the instance and the variable mapping.
std::string emit_dimacs(const Formula& f);
std::string emit_dimacs(const Formula& f, const ProblemSpec& spec);

struct DimacsParseError : std::runtime_error {
  int line;
  int column;
  DimacsParseError(int line, int column, const std::string& message);
};

// Inverse of emit_dimacs up to clause normalization. Comment lines are
// allowed anywhere. Errors (bad header, literal outside 1..vars, clause not
// terminated by 0, clause count not matching the header) carry the 1-based
// line and column.
Formula parse_dimacs(const std::string& text);
Formula parse_dimacs_file(const std::string& path);

}  // namespace rsat

#endif  // RSAT_DIMACS_HPP
