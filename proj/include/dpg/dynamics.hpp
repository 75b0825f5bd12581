#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dpg/game.hpp"

namespace dpg {

enum class SchedulerPolicy { RoundRobin, Random, MaxGain };

struct Scheduler {
  SchedulerPolicy policy = SchedulerPolicy::RoundRobin;
  std::uint64_t seed = 0;  // random policy only; identical seeds, identical runs
};

/// Mutable per-run scheduling state. Round-robin scans cyclically from the
/// player after the last mover; random draws uniformly among players that
/// currently have an improving move.
struct SchedulerState {
  explicit SchedulerState(const Scheduler& s) : scheduler(s), rng(s.seed) {}
  Scheduler scheduler;
  int cursor = 0;
  std::mt19937_64 rng;
};

struct Move {
  int player = 0;
  int point = 0;
  Rational delta;  // strictly negative
};

enum class Outcome { Converged, StepLimit, Cycle };

struct TraceStep {
  int step = 0;
  int player = 0;
  int from = 0;
  int to = 0;
  Rational delta;
  std::optional<Rational> potential_after;  // undirected games only
};

struct Trace {
  std::vector<TraceStep> steps;
  Outcome outcome = Outcome::Converged;
  std::optional<std::size_t> cycle_start;   // step index of first occurrence
  std::optional<std::size_t> cycle_period;
};

struct BrdResult {
  StrategyProfile profile;
  Trace trace;
};

struct CycleInfo {
  std::size_t first = 0;
  std::size_t period = 0;
};

std::size_t default_max_steps(const Game& game);

/// One improving move under the scheduler, with the mover's best response
/// (smallest point index on ties); nullopt iff z is an equilibrium.
std::optional<Move> brd_step(const Game& game, const StrategyProfile& z, SchedulerState& state);

/// Iterates brd_step from start. Undirected games track the potential, which
/// strictly decreases; directed games track visited profiles and report the
/// first repeat as a cycle.
BrdResult run_brd(const Game& game, StrategyProfile start, const Scheduler& scheduler,
                  std::size_t max_steps);
BrdResult run_brd(const Game& game, StrategyProfile start, const Scheduler& scheduler);

/// First revisited profile in a run's profile sequence (start profile first).
std::optional<CycleInfo> detect_cycle(const std::vector<StrategyProfile>& profiles);

/// CSV with header "step,player,old,new,delta,potential"; the potential
/// column is empty for directed games.
std::string trace_to_csv(const Trace& trace);

Scheduler parse_scheduler(const std::string& name, std::uint64_t seed);

}  // namespace dpg
