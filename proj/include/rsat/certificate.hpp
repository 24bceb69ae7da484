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

#ifndef RSAT_CERTIFICATE_HPP
#define RSAT_CERTIFICATE_HPP

#include <string>

#include "rsat/encode.hpp"

namespace rsat {

// Certificate text format. Line 1: "<kind> <c> <n>". Sequences follow with
// one line of n space-separated colors in 1..c; grids with n lines of n
// colors, row-major. Colors are 1-based.
std::string write_certificate(const Coloring& coloring);
void write_certificate_file(const std::string& path, const Coloring& coloring);

// Parses and validates dimensions and color ranges.
Coloring read_certificate(const std::string& text);
Coloring read_certificate_file(const std::string& path);

}  // namespace rsat

#endif  // RSAT_CERTIFICATE_HPP
