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

#include "rsat/certificate.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rsat {

std::string write_certificate(const Coloring& coloring) {
  const ProblemSpec& spec = coloring.spec;
  if (static_cast<int>(coloring.colors.size()) != spec.element_count())
    throw std::invalid_argument("write_certificate: coloring has wrong element count");
  std::ostringstream out;
  out << to_string(spec.kind) << ' ' << spec.colors << ' ' << spec.n << '\n';
  const int per_line = spec.kind == ProblemKind::L ? spec.n : spec.element_count();
  for (int e = 1; e <= spec.element_count(); ++e) {
    out << coloring.color_of(e);
    out << (e % per_line == 0 ? '\n' : ' ');
  }
  return out.str();
}

void write_certificate_file(const std::string& path, const Coloring& coloring) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << write_certificate(coloring);
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

Coloring read_certificate(const std::string& text) {
  std::istringstream in(text);
  std::string kind_token;
  int c = 0, n = 0;
  if (!(in >> kind_token >> c >> n))
    throw std::runtime_error("certificate: bad header (expected '<kind> <c> <n>')");
  const ProblemKind kind = problem_kind_from_string(kind_token);
  if (n < 1 || c < 1) throw std::runtime_error("certificate: n and c must be positive");
  ProblemSpec spec(kind, n, c);
  Coloring coloring{spec, {}};
  coloring.colors.reserve(static_cast<std::size_t>(spec.element_count()));
  int color = 0;
  while (in >> color) {
    if (color < 1 || color > c)
      throw std::runtime_error("certificate: color " + std::to_string(color) +
                               " outside [1, " + std::to_string(c) + "]");
    coloring.colors.push_back(color);
  }
  if (!in.eof()) {
    std::string tail;
    in.clear();
    in >> tail;
    throw std::runtime_error("certificate: unexpected token '" + tail + "'");
  }
  if (static_cast<int>(coloring.colors.size()) != spec.element_count())
    throw std::runtime_error("certificate: expected " + std::to_string(spec.element_count()) +
                             " colors, got " + std::to_string(coloring.colors.size()));
  return coloring;
}

Coloring read_certificate_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return read_certificate(buffer.str());
}

}  // namespace rsat
