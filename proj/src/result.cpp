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

#include "rsat/result.hpp"

namespace rsat {

std::string to_string(Status s) {
  switch (s) {
    case Status::Sat: return "SATISFIABLE";
    case Status::Unsat: return "UNSATISFIABLE";
    case Status::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  decisions += o.decisions;
  propagations += o.propagations;
  two_sat_calls += o.two_sat_calls;
  flips += o.flips;
  restarts += o.restarts;
  elapsed += o.elapsed;
  return *this;
}

}  // namespace rsat
