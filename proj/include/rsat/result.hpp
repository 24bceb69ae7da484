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

#ifndef RSAT_RESULT_HPP
#define RSAT_RESULT_HPP

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "rsat/cnf.hpp"

namespace rsat {

enum class Status { Sat, Unsat, Unknown };

// Cooperative run limits shared by all solvers. The cancel flag and the
// deadline are checked at every decision respectively flip boundary.
struct RunLimits {
  const std::atomic<bool>* cancel = nullptr;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

std::string to_string(Status s);

struct SearchStats {
  std::uint64_t decisions = 0;     // branch literals applied (both arms count)
  std::uint64_t propagations = 0;  // variables assigned by unit propagation
  std::uint64_t two_sat_calls = 0;
  std::uint64_t flips = 0;         // local search moves
  std::uint64_t restarts = 0;      // local search restarts actually started
  std::chrono::duration<double> elapsed{0};

  SearchStats& operator+=(const SearchStats& o);
};

struct SolveResult {
  Status status = Status::Unknown;
  std::optional<Assignment> model;  // present iff status == Sat; always total
  SearchStats stats;
};

}  // namespace rsat

#endif  // RSAT_RESULT_HPP
