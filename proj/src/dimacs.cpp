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

#include "rsat/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace rsat {

std::string emit_dimacs(const Formula& f) {
  std::ostringstream out;
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses()) {
    for (Lit l : c) out << l.dimacs() << ' ';
    out << "0\n";
  }
  return out.str();
}

std::string emit_dimacs(const Formula& f, const ProblemSpec& spec) {
  std::ostringstream out;
  out << "c problem " << to_string(spec.kind) << " n=" << spec.n << " colors=" << spec.colors
      << '\n';
  if (spec.kind == ProblemKind::L)
    out << "c var((i,j), color) = ((i-1)*" << spec.n << " + (j-1))*" << spec.colors
        << " + color, 1-based row-major\n";
  else
    out << "c var(i, color) = (i-1)*" << spec.colors << " + color\n";
  out << emit_dimacs(f);
  return out.str();
}

DimacsParseError::DimacsParseError(int line, int column, const std::string& message)
    : std::runtime_error("dimacs:" + std::to_string(line) + ":" + std::to_string(column) + ": " +
                         message),
      line(line),
      column(column) {}

namespace {

// Whitespace-delimited token scanner that tracks line/column.
class Scanner {
 public:
  explicit Scanner(const std::string& text) : text_(text) {}

  // Next token, skipping whitespace and "c" comment lines. Returns false at
  // end of input.
  bool next(std::string& token, int& line, int& column) {
    while (pos_ < text_.size()) {
      const char ch = text_[pos_];
      if (ch == '\n') {
        ++line_;
        column_ = 0;
        ++pos_;
        continue;
      }
      if (ch == ' ' || ch == '\t' || ch == '\r') {
        ++column_;
        ++pos_;
        continue;
      }
      if (ch == 'c' && column_ == 0) {  // comment line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= text_.size()) return false;
    line = line_ + 1;
    column = column_ + 1;
    token.clear();
    while (pos_ < text_.size() && text_[pos_] != ' ' && text_[pos_] != '\t' &&
           text_[pos_] != '\r' && text_[pos_] != '\n') {
      token.push_back(text_[pos_++]);
      ++column_;
    }
    return true;
  }

 private:
  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 0;
  int column_ = 0;
};

int parse_int(const std::string& token, int line, int column, const char* what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(token, &used);
    if (used != token.size()) throw std::invalid_argument(token);
    return value;
  } catch (const std::exception&) {
    throw DimacsParseError(line, column, std::string("expected ") + what + ", got '" + token + "'");
  }
}

}  // namespace

Formula parse_dimacs(const std::string& text) {
  Scanner scan(text);
  std::string token;
  int line = 1, column = 1;

  if (!scan.next(token, line, column) || token != "p")
    throw DimacsParseError(line, column, "expected 'p cnf' header");
  if (!scan.next(token, line, column) || token != "cnf")
    throw DimacsParseError(line, column, "expected 'cnf' after 'p'");
  if (!scan.next(token, line, column))
    throw DimacsParseError(line, column, "expected variable count");
  const int num_vars = parse_int(token, line, column, "variable count");
  if (!scan.next(token, line, column))
    throw DimacsParseError(line, column, "expected clause count");
  const int num_clauses = parse_int(token, line, column, "clause count");
  if (num_vars < 0 || num_clauses < 0)
    throw DimacsParseError(line, column, "negative header counts");

  Formula f(num_vars);
  std::vector<Lit> clause;
  int parsed_clauses = 0;
  bool in_clause = false;
  int clause_line = line, clause_column = column;
  while (scan.next(token, line, column)) {
    const int code = parse_int(token, line, column, "literal");
    if (code == 0) {
      if (!in_clause)
        throw DimacsParseError(line, column, "empty clause");
      f.add_clause(clause);
      clause.clear();
      in_clause = false;
      ++parsed_clauses;
      continue;
    }
    const int var = code < 0 ? -code : code;
    if (var > num_vars)
      throw DimacsParseError(line, column,
                             "variable " + std::to_string(var) + " out of range (header says " +
                                 std::to_string(num_vars) + ")");
    if (!in_clause) {
      in_clause = true;
      clause_line = line;
      clause_column = column;
    }
    clause.push_back(Lit::from_dimacs(code));
  }
  if (in_clause)
    throw DimacsParseError(clause_line, clause_column, "clause not terminated by 0");
  if (parsed_clauses != num_clauses)
    throw DimacsParseError(line, column,
                           "header declares " + std::to_string(num_clauses) + " clauses, file has " +
                               std::to_string(parsed_clauses));
  return f;
}

Formula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str());
}

}  // namespace rsat
