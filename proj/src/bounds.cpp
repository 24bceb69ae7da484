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

#include "rsat/bounds.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rsat/certificate.hpp"
#include "rsat/verify.hpp"

namespace rsat {

std::string to_string(SolverChoice s) {
  switch (s) {
    case SolverChoice::Dpll: return "dpll";
    case SolverChoice::ParallelDpll: return "parallel-dpll";
    case SolverChoice::Walksat: return "walksat";
    case SolverChoice::Portfolio: return "portfolio";
  }
  throw std::logic_error("to_string: bad SolverChoice");
}

SolverChoice solver_choice_from_string(const std::string& s) {
  if (s == "dpll") return SolverChoice::Dpll;
  if (s == "parallel-dpll") return SolverChoice::ParallelDpll;
  if (s == "walksat") return SolverChoice::Walksat;
  if (s == "portfolio") return SolverChoice::Portfolio;
  throw std::invalid_argument("unknown solver '" + s + "'");
}

std::string BoundReport::conclusion_text() const {
  std::ostringstream out;
  const std::string name = "R_" + std::to_string(colors) + "(" + to_string(kind) + ")";
  switch (conclusion) {
    case BoundConclusion::Exact:
      out << name << " = " << *first_unsat_n;
      break;
    case BoundConclusion::LowerBound:
      out << name << " >= " << *largest_sat_n + 1;
      break;
    case BoundConclusion::UpperBound:
      out << name << " <= " << *first_unsat_n;
      break;
    case BoundConclusion::None:
      out << "no bound established for " << name;
      break;
  }
  return out.str();
}

std::optional<int> known_upper_bound(ProblemKind kind, int colors) {
  // Published values this tool treats as ground truth for sanity checks.
  if (kind == ProblemKind::L && colors == 2) return 5;
  if (kind == ProblemKind::L && colors == 3) return 2593;
  if (kind == ProblemKind::VDS && colors == 2) return 5;
  if (kind == ProblemKind::VDS && colors == 3) return 68;
  if (kind == ProblemKind::VDC && colors == 2) return 9;
  return std::nullopt;
}

namespace {

struct InstanceOutcome {
  Status status = Status::Unknown;
  std::optional<Coloring> coloring;
  SearchStats stats;
};

InstanceOutcome solve_instance(const ProblemSpec& spec, SolverChoice solver,
                               const SearchOptions& options) {
  InstanceOutcome out;
  switch (solver) {
    case SolverChoice::Dpll:
    case SolverChoice::ParallelDpll: {
      const Formula f = encode(spec);
      ParallelConfig pcfg = options.parallel;
      pcfg.timeout = options.per_instance_timeout;
      if (solver == SolverChoice::Dpll) {
        pcfg.workers = 1;
        pcfg.split_depth = 0;
      }
      const SolveResult r = parallel_dpll(f, pcfg);
      out.status = r.status;
      out.stats = r.stats;
      if (r.status == Status::Sat) out.coloring = decode(spec, *r.model);
      break;
    }
    case SolverChoice::Walksat: {
      RunLimits limits;
      if (options.per_instance_timeout.count() > 0)
        limits.deadline = std::chrono::steady_clock::now() + options.per_instance_timeout;
      const ColoringResult r = coloring_search(spec, options.walksat, limits);
      out.status = r.status;
      out.stats = r.stats;
      out.coloring = r.coloring;
      break;
    }
    case SolverChoice::Portfolio: {
      ParallelConfig pcfg = options.parallel;
      pcfg.timeout = options.per_instance_timeout;
      const ColoringResult r = portfolio_search(spec, options.walksat, pcfg);
      out.status = r.status;
      out.stats = r.stats;
      out.coloring = r.coloring;
      break;
    }
  }
  return out;
}

}  // namespace

BoundReport search_bound(ProblemKind kind, int colors, SolverChoice solver,
                         const SearchOptions& options, std::ostream* progress) {
  BoundReport report;
  report.kind = kind;
  report.colors = colors;
  report.solver = solver;
  const bool complete = solver == SolverChoice::Dpll || solver == SolverChoice::ParallelDpll;

  for (int n = options.start_n; n <= options.max_n; ++n) {
    const ProblemSpec spec(kind, n, colors);
    const InstanceOutcome outcome = solve_instance(spec, solver, options);
    report.stats += outcome.stats;

    if (outcome.status == Status::Sat) {
      // Never trust a solver answer without the independent check.
      if (auto violation = verify_coloring(*outcome.coloring))
        throw std::logic_error("search_bound: solver returned an invalid coloring for n=" +
                               std::to_string(n) + ": " + *violation);
      report.largest_sat_n = n;
      if (!options.certificate_dir.empty()) {
        const std::string path = options.certificate_dir + "/" + to_string(kind) + "_c" +
                                 std::to_string(colors) + "_n" + std::to_string(n) + ".cert";
        write_certificate_file(path, *outcome.coloring);
        report.certificates.push_back(path);
      }
      if (progress)
        *progress << "n=" << n << ": SAT, certificate verified ("
                  << outcome.stats.elapsed.count() << "s)\n";
      if (n == options.max_n) report.budget_exhausted = true;
      continue;
    }
    if (outcome.status == Status::Unsat) {
      report.first_unsat_n = n;
      if (progress)
        *progress << "n=" << n << ": UNSAT, proved by complete solver ("
                  << outcome.stats.elapsed.count() << "s)\n";
      break;
    }
    // Unknown: budget or timeout spent on this n.
    report.budget_exhausted = true;
    if (progress)
      *progress << "n=" << n << ": UNKNOWN, budget exhausted ("
                << outcome.stats.elapsed.count() << "s)\n";
    break;
  }

  if (report.first_unsat_n && complete && report.largest_sat_n &&
      *report.first_unsat_n == *report.largest_sat_n + 1)
    report.conclusion = BoundConclusion::Exact;
  else if (report.largest_sat_n)
    report.conclusion = BoundConclusion::LowerBound;
  else if (report.first_unsat_n && complete)
    report.conclusion = BoundConclusion::UpperBound;
  else
    report.conclusion = BoundConclusion::None;

  // Cross-check computed results against values on record.
  if (auto known = known_upper_bound(kind, colors)) {
    std::ostringstream line;
    bool ok = true;
    if (report.conclusion == BoundConclusion::Exact) {
      ok = *report.first_unsat_n <= *known;
      line << "computed value " << *report.first_unsat_n << (ok ? " is" : " is NOT")
           << " consistent with the known upper bound " << *known;
    } else if (report.largest_sat_n) {
      ok = *report.largest_sat_n + 1 <= *known;
      line << "computed lower bound " << *report.largest_sat_n + 1 << (ok ? " is" : " is NOT")
           << " consistent with the known upper bound " << *known;
    } else {
      line << "known upper bound " << *known << " on record; nothing computed to compare";
    }
    report.consistency.push_back(line.str());
    report.consistent = report.consistent && ok;
  }
  return report;
}

std::string render_report(const BoundReport& report) {
  std::ostringstream out;
  out << "family: " << to_string(report.kind) << " with " << report.colors << " colors\n"
      << "solver: " << to_string(report.solver) << "\n";
  if (report.largest_sat_n)
    out << "largest satisfiable n: " << *report.largest_sat_n << " (certificate verified)\n";
  if (report.first_unsat_n)
    out << "first unsatisfiable n: " << *report.first_unsat_n << " (complete solver)\n";
  if (report.budget_exhausted) out << "search stopped on budget/limit\n";
  out << "conclusion: " << report.conclusion_text() << "\n";
  for (const std::string& path : report.certificates) out << "certificate: " << path << "\n";
  for (const std::string& line : report.consistency) out << "consistency: " << line << "\n";
  out << "stats: decisions=" << report.stats.decisions
      << " propagations=" << report.stats.propagations
      << " two_sat_calls=" << report.stats.two_sat_calls << " flips=" << report.stats.flips
      << " restarts=" << report.stats.restarts << " elapsed=" << report.stats.elapsed.count()
      << "s\n";
  return out.str();
}

}  // namespace rsat
