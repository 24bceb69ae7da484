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

#include "rsat/parallel.hpp"

#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

namespace rsat {

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> deadline_of(const ParallelConfig& pcfg, Clock::time_point t0) {
  if (pcfg.timeout.count() <= 0) return std::nullopt;
  return t0 + pcfg.timeout;
}

void check_workers(const ParallelConfig& pcfg) {
  if (pcfg.workers < 1) throw std::invalid_argument("ParallelConfig: workers must be >= 1");
}

}  // namespace

int auto_split_depth(int workers) {
  int d = 0;
  while (d < 10 && (1 << d) < 4 * workers) ++d;
  return d;
}

ColoringResult portfolio_search(const ProblemSpec& spec, const WalksatConfig& cfg,
                                const ParallelConfig& pcfg) {
  check_workers(pcfg);
  const auto t0 = Clock::now();
  const auto deadline = deadline_of(pcfg, t0);

  std::atomic<bool> cancel{false};
  std::mutex mutex;
  ColoringResult aggregate;
  bool any_timed_out = false;

  auto worker = [&](int i) {
    WalksatConfig worker_cfg = cfg;
    worker_cfg.seed = pcfg.base_seed + static_cast<std::uint64_t>(i);
    RunLimits limits{&cancel, deadline};
    ColoringResult r = coloring_search(spec, worker_cfg, limits);
    std::lock_guard<std::mutex> lock(mutex);
    aggregate.stats += r.stats;
    if (r.status == Status::Sat && aggregate.status != Status::Sat) {
      aggregate.status = Status::Sat;
      aggregate.coloring = std::move(r.coloring);
      aggregate.reason = StopReason::Found;
      cancel.store(true, std::memory_order_relaxed);
    } else if (r.reason == StopReason::TimedOut) {
      any_timed_out = true;
    }
  };

  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(pcfg.workers));
  for (int i = 0; i < pcfg.workers; ++i) threads.emplace_back(worker, i);
  for (auto& t : threads) t.join();

  if (aggregate.status != Status::Sat) {
    aggregate.status = Status::Unknown;
    aggregate.reason = any_timed_out ? StopReason::TimedOut : StopReason::BudgetExhausted;
  }
  aggregate.stats.elapsed = Clock::now() - t0;
  return aggregate;
}

SolveResult parallel_dpll(const Formula& f, const ParallelConfig& pcfg) {
  check_workers(pcfg);
  if (pcfg.split_depth < -1) throw std::invalid_argument("ParallelConfig: bad split_depth");
  const auto t0 = Clock::now();
  const auto deadline = deadline_of(pcfg, t0);
  const int depth = pcfg.split_depth >= 0 ? pcfg.split_depth : auto_split_depth(pcfg.workers);

  ExpandResult expansion = dpll_expand(f, depth);
  if (expansion.resolved) {
    expansion.resolved->stats.elapsed = Clock::now() - t0;
    return *expansion.resolved;
  }

  std::atomic<bool> cancel{false};
  std::atomic<std::size_t> next_cube{0};
  std::atomic<std::size_t> refuted{0};
  std::mutex mutex;
  SolveResult aggregate;
  aggregate.stats = expansion.stats;
  bool timed_out = false;

  auto worker = [&]() {
    SearchStats local;
    while (!cancel.load(std::memory_order_relaxed)) {
      const std::size_t i = next_cube.fetch_add(1, std::memory_order_relaxed);
      if (i >= expansion.cubes.size()) break;
      SolveResult r = dpll_solve_under(f, expansion.cubes[i], {&cancel, deadline});
      local += r.stats;
      if (r.status == Status::Sat) {
        std::lock_guard<std::mutex> lock(mutex);
        if (aggregate.status != Status::Sat) {
          aggregate.status = Status::Sat;
          aggregate.model = std::move(r.model);
        }
        cancel.store(true, std::memory_order_relaxed);
        break;
      }
      if (r.status == Status::Unsat) {
        refuted.fetch_add(1, std::memory_order_relaxed);
      } else if (deadline && Clock::now() >= *deadline) {
        std::lock_guard<std::mutex> lock(mutex);
        timed_out = true;
        break;
      }
    }
    std::lock_guard<std::mutex> lock(mutex);
    aggregate.stats += local;
  };

  std::vector<std::thread> threads;
  const int count = std::min<int>(pcfg.workers, static_cast<int>(expansion.cubes.size()));
  threads.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  if (aggregate.status != Status::Sat) {
    if (!timed_out && refuted.load() == expansion.cubes.size())
      aggregate.status = Status::Unsat;
    else
      aggregate.status = Status::Unknown;  // deadline hit; partial stats
  }
  aggregate.stats.elapsed = Clock::now() - t0;
  return aggregate;
}

}  // namespace rsat
