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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "rsat/bounds.hpp"
#include "rsat/certificate.hpp"
#include "rsat/dimacs.hpp"
#include "rsat/verify.hpp"

namespace {

// SAT-competition convention.
constexpr int kExitSat = 10;
constexpr int kExitUnsat = 20;
constexpr int kExitUnknown = 0;
constexpr int kExitError = 1;

int default_workers() {
  if (const char* env = std::getenv("RAMSEY_SAT_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w >= 1) return w;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid RAMSEY_SAT_WORKERS='" << env << "'\n";
  }
  return 1;
}

struct SolverFlags {
  std::string solver = "dpll";
  int workers = default_workers();
  std::uint64_t seed = 0;
  double noise = 0.5;
  std::uint64_t max_flips = 0;
  std::uint64_t restarts = 50;
  int split_depth = -1;
  double timeout_seconds = 0;
};

void add_solver_flags(CLI::App* cmd, SolverFlags& flags) {
  cmd->add_option("--solver", flags.solver, "Solver: dpll (complete) or walksat (local search)")
      ->check(CLI::IsMember({"dpll", "walksat"}));
  cmd->add_option("--workers", flags.workers,
                  "Worker threads; >1 runs the parallel variant (default from "
                  "RAMSEY_SAT_WORKERS, else 1)");
  cmd->add_option("--seed", flags.seed, "Base random seed (worker i uses seed+i)");
  cmd->add_option("--noise", flags.noise, "Walksat noise p in [0,1]");
  cmd->add_option("--max-flips", flags.max_flips,
                  "Walksat flips per restart (0 = 100 * elements * colors)");
  cmd->add_option("--restarts", flags.restarts, "Walksat restarts per worker");
  cmd->add_option("--split-depth", flags.split_depth,
                  "Parallel DPLL tree split depth (-1 = auto from worker count)");
  cmd->add_option("--timeout", flags.timeout_seconds, "Wall-clock limit in seconds (0 = none)");
}

rsat::WalksatConfig walksat_config(const SolverFlags& flags) {
  rsat::WalksatConfig cfg;
  cfg.noise = flags.noise;
  cfg.max_flips = flags.max_flips;
  cfg.restarts = flags.restarts;
  cfg.seed = flags.seed;
  return cfg;
}

rsat::ParallelConfig parallel_config(const SolverFlags& flags) {
  rsat::ParallelConfig cfg;
  cfg.workers = flags.workers;
  cfg.base_seed = flags.seed;
  cfg.split_depth = flags.split_depth;
  cfg.timeout =
      std::chrono::milliseconds(static_cast<long long>(flags.timeout_seconds * 1000.0));
  return cfg;
}

void print_run_line(const std::string& what, const SolverFlags& flags) {
  std::cout << "c run: " << what << " solver=" << flags.solver << " workers=" << flags.workers
            << " seed=" << flags.seed << " noise=" << flags.noise
            << " max-flips=" << flags.max_flips << " restarts=" << flags.restarts
            << " split-depth=" << flags.split_depth << " timeout=" << flags.timeout_seconds
            << "s\n";
}

void print_stats(const rsat::SearchStats& stats) {
  std::cout << "c stats: decisions=" << stats.decisions << " propagations=" << stats.propagations
            << " two_sat_calls=" << stats.two_sat_calls << " flips=" << stats.flips
            << " restarts=" << stats.restarts << " elapsed=" << stats.elapsed.count() << "s\n";
}

void print_model(const rsat::Assignment& model) {
  std::cout << "v";
  int on_line = 0;
  for (int v = 1; v <= model.num_vars(); ++v) {
    std::cout << ' ' << (model.value(v) == rsat::Value::True ? v : -v);
    if (++on_line == 20 && v != model.num_vars()) {
      std::cout << "\nv";
      on_line = 0;
    }
  }
  std::cout << " 0\n";
}

int status_exit_code(rsat::Status status) {
  switch (status) {
    case rsat::Status::Sat: return kExitSat;
    case rsat::Status::Unsat: return kExitUnsat;
    case rsat::Status::Unknown: return kExitUnknown;
  }
  return kExitError;
}

int run_encode(const std::string& problem, int n, int colors, const std::string& output) {
  const rsat::ProblemSpec spec(rsat::problem_kind_from_string(problem), n, colors);
  const std::string text = rsat::emit_dimacs(rsat::encode(spec), spec);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + output + "'");
    out << text;
  }
  return 0;
}

int solve_cnf(const std::string& path, const SolverFlags& flags) {
  const rsat::Formula f = rsat::parse_dimacs_file(path);
  std::cout << "c instance: " << path << " vars=" << f.num_vars()
            << " clauses=" << f.num_clauses() << "\n";
  rsat::SolveResult result;
  if (flags.solver == "dpll") {
    if (flags.workers > 1 || flags.timeout_seconds > 0) {
      result = rsat::parallel_dpll(f, parallel_config(flags));
    } else {
      result = rsat::dpll_solve(f);
    }
  } else {
    if (flags.workers > 1)
      std::cout << "c note: seed portfolio applies to --problem runs; using one walksat worker\n";
    rsat::RunLimits limits;
    if (flags.timeout_seconds > 0)
      limits.deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(
                            static_cast<long long>(flags.timeout_seconds * 1000.0));
    result = rsat::local_search(f, walksat_config(flags), limits);
  }
  print_stats(result.stats);
  if (result.status == rsat::Status::Sat) {
    if (rsat::evaluate(f, *result.model))
      throw std::logic_error("internal error: model does not satisfy the formula");
    std::cout << "s SATISFIABLE\n";
    print_model(*result.model);
  } else if (result.status == rsat::Status::Unsat) {
    std::cout << "s UNSATISFIABLE\n";
  } else {
    std::cout << "s UNKNOWN\n";
    if (flags.solver == "walksat")
      std::cout << "c note: local search is incomplete; it found no assignment within its "
                   "budget, which does not prove unsatisfiability\n";
  }
  return status_exit_code(result.status);
}

int solve_problem(const std::string& problem, int n, int colors, const SolverFlags& flags,
                  const std::string& certificate_out) {
  const rsat::ProblemSpec spec(rsat::problem_kind_from_string(problem), n, colors);
  rsat::Status status = rsat::Status::Unknown;
  std::optional<rsat::Coloring> coloring;
  rsat::SearchStats stats;

  if (flags.solver == "dpll") {
    const rsat::Formula f = rsat::encode(spec);
    std::cout << "c encoded: vars=" << f.num_vars() << " clauses=" << f.num_clauses() << "\n";
    rsat::SolveResult result;
    if (flags.workers > 1 || flags.timeout_seconds > 0) {
      result = rsat::parallel_dpll(f, parallel_config(flags));
    } else {
      result = rsat::dpll_solve(f);
    }
    status = result.status;
    stats = result.stats;
    if (status == rsat::Status::Sat) coloring = rsat::decode(spec, *result.model);
  } else {
    rsat::ColoringResult result;
    if (flags.workers > 1) {
      result = rsat::portfolio_search(spec, walksat_config(flags), parallel_config(flags));
    } else {
      rsat::RunLimits limits;
      if (flags.timeout_seconds > 0)
        limits.deadline = std::chrono::steady_clock::now() +
                          std::chrono::milliseconds(
                              static_cast<long long>(flags.timeout_seconds * 1000.0));
      result = rsat::coloring_search(spec, walksat_config(flags), limits);
    }
    status = result.status;
    stats = result.stats;
    coloring = result.coloring;
  }

  print_stats(stats);
  if (status == rsat::Status::Sat) {
    if (auto violation = rsat::verify_coloring(*coloring))
      throw std::logic_error("internal error: coloring failed verification: " + *violation);
    std::cout << "c certificate verified\n";
    std::cout << "s SATISFIABLE\n";
    std::cout << rsat::write_certificate(*coloring);
    if (!certificate_out.empty()) {
      rsat::write_certificate_file(certificate_out, *coloring);
      std::cout << "c certificate written to " << certificate_out << "\n";
    }
  } else if (status == rsat::Status::Unsat) {
    std::cout << "s UNSATISFIABLE\n";
  } else {
    std::cout << "s UNKNOWN\n";
    std::cout << "c note: local search is incomplete; no coloring found within the budget, "
                 "which does not prove that none exists\n";
  }
  return status_exit_code(status);
}

int run_search(const std::string& problem, int colors, const SolverFlags& flags, int start_n,
               int max_n, const std::string& cert_dir, double instance_timeout_seconds) {
  const rsat::ProblemKind kind = rsat::problem_kind_from_string(problem);
  rsat::SolverChoice choice;
  if (flags.solver == "dpll")
    choice = flags.workers > 1 ? rsat::SolverChoice::ParallelDpll : rsat::SolverChoice::Dpll;
  else
    choice = flags.workers > 1 ? rsat::SolverChoice::Portfolio : rsat::SolverChoice::Walksat;

  rsat::SearchOptions options;
  options.start_n = start_n;
  options.max_n = max_n;
  options.certificate_dir = cert_dir;
  options.walksat = walksat_config(flags);
  options.parallel = parallel_config(flags);
  options.per_instance_timeout =
      std::chrono::milliseconds(static_cast<long long>(instance_timeout_seconds * 1000.0));

  const rsat::BoundReport report =
      rsat::search_bound(kind, colors, choice, options, &std::cout);
  std::cout << rsat::render_report(report);
  if (!report.consistent) {
    std::cerr << "error: computed bound contradicts a known value\n";
    return kExitError;
  }
  switch (report.conclusion) {
    case rsat::BoundConclusion::Exact: return kExitSat;
    case rsat::BoundConclusion::LowerBound: return kExitSat;
    case rsat::BoundConclusion::UpperBound: return kExitUnknown;
    case rsat::BoundConclusion::None: return kExitUnknown;
  }
  return kExitError;
}

int run_verify(const std::string& path) {
  const rsat::Coloring coloring = rsat::read_certificate_file(path);
  const rsat::ProblemSpec& spec = coloring.spec;
  std::cout << "c certificate: " << rsat::to_string(spec.kind) << " colors=" << spec.colors
            << " n=" << spec.n << "\n";
  if (auto violation = rsat::verify_coloring(coloring)) {
    std::cout << "s INVALID\n" << "c " << *violation << "\n";
    return kExitUnknown;  // a bad certificate proves nothing about the instance
  }
  std::cout << "s VERIFIED\n";
  return kExitSat;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ramsey-sat: SAT-based search for Ramsey-type numbers (grid corner colorings and\n"
      "polynomial van der Waerden 'square'/'cube' sequence colorings)"};
  app.require_subcommand(1);

  // encode
  auto* encode_cmd = app.add_subcommand("encode", "Emit a problem instance as DIMACS CNF");
  std::string problem = "VDS";
  int n = 4;
  int colors = 2;
  std::string output;
  encode_cmd->add_option("--problem,-p", problem, "Problem kind: L, VDS or VDC")->required();
  encode_cmd->add_option("--n,-n", n, "Grid side / sequence length")->required();
  encode_cmd->add_option("--colors,-c", colors, "Number of colors")->required();
  encode_cmd->add_option("--output,-o", output, "Output file (default stdout)");

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance");
  SolverFlags solve_flags;
  std::string cnf_path;
  std::string certificate_out;
  std::string solve_problem_kind;
  int solve_n = 0;
  int solve_colors = 0;
  solve_cmd->add_option("--problem,-p", solve_problem_kind, "Problem kind: L, VDS or VDC");
  solve_cmd->add_option("--n,-n", solve_n, "Grid side / sequence length");
  solve_cmd->add_option("--colors,-c", solve_colors, "Number of colors");
  solve_cmd->add_option("--cnf", cnf_path, "Solve a DIMACS file instead of a named problem");
  solve_cmd->add_option("--certificate-out", certificate_out,
                        "Write the verified coloring certificate to this file");
  add_solver_flags(solve_cmd, solve_flags);

  // search
  auto* search_cmd =
      app.add_subcommand("search", "Ascend n to bound a number R(kind, colors)");
  SolverFlags search_flags;
  std::string search_problem;
  int search_colors = 2;
  int start_n = 2;
  int max_n = 1 << 20;
  double instance_timeout = 0;
  std::string cert_dir;
  search_cmd->add_option("--problem,-p", search_problem, "Problem kind: L, VDS or VDC")
      ->required();
  search_cmd->add_option("--colors,-c", search_colors, "Number of colors")->required();
  search_cmd->add_option("--start", start_n, "First n to try");
  search_cmd->add_option("--max-n", max_n, "Stop after this n");
  search_cmd->add_option("--cert-dir", cert_dir, "Directory for certificates of SAT instances");
  search_cmd->add_option("--instance-timeout", instance_timeout,
                         "Per-instance wall clock in seconds (0 = none)");
  add_solver_flags(search_cmd, search_flags);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Check a certificate file");
  std::string verify_path;
  verify_cmd->add_option("certificate", verify_path, "Certificate file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (encode_cmd->parsed()) return run_encode(problem, n, colors, output);
    if (solve_cmd->parsed()) {
      const bool have_problem = !solve_problem_kind.empty();
      if (have_problem == !cnf_path.empty()) {
        std::cerr << "error: pass either --problem/--n/--colors or --cnf\n";
        return kExitError;
      }
      if (have_problem && (solve_n < 1 || solve_colors < 1)) {
        std::cerr << "error: --problem needs --n and --colors\n";
        return kExitError;
      }
      print_run_line(have_problem ? "problem=" + solve_problem_kind + " n=" +
                                        std::to_string(solve_n) + " colors=" +
                                        std::to_string(solve_colors)
                                  : "cnf=" + cnf_path,
                     solve_flags);
      return have_problem
                 ? solve_problem(solve_problem_kind, solve_n, solve_colors, solve_flags,
                                 certificate_out)
                 : solve_cnf(cnf_path, solve_flags);
    }
    if (search_cmd->parsed()) {
      print_run_line("search problem=" + search_problem + " colors=" +
                         std::to_string(search_colors) + " start=" + std::to_string(start_n) +
                         " max-n=" + std::to_string(max_n),
                     search_flags);
      return run_search(search_problem, search_colors, search_flags, start_n, max_n, cert_dir,
                        instance_timeout);
    }
    if (verify_cmd->parsed()) return run_verify(verify_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
