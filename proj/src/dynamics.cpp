#include "dpg/dynamics.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace dpg {

namespace {

/// Best improving move for one player, or nullopt if she cannot improve.
std::optional<Move> improving_move(const Game& game, const StrategyProfile& z, int i) {
  const Rational current = deviation_cost(game, z, i, z.strategy[i]);
  std::optional<Move> best;
  for (int x = 0; x < game.points(); ++x) {
    if (x == z.strategy[i]) continue;
    Rational c = deviation_cost(game, z, i, x);
    if (c < current && (!best || c - current < best->delta)) {
      best = Move{i, x, c - current};
    }
  }
  return best;
}

}  // namespace

std::size_t default_max_steps(const Game& game) {
  return static_cast<std::size_t>(game.graph.players()) *
         static_cast<std::size_t>(game.points()) * 1000;
}

std::optional<Move> brd_step(const Game& game, const StrategyProfile& z, SchedulerState& state) {
  check_profile(game, z);
  const int n = game.graph.players();
  switch (state.scheduler.policy) {
    case SchedulerPolicy::RoundRobin: {
      for (int k = 0; k < n; ++k) {
        int i = (state.cursor + k) % n;
        if (auto move = improving_move(game, z, i)) {
          state.cursor = (i + 1) % n;
          return move;
        }
      }
      return std::nullopt;
    }
    case SchedulerPolicy::Random: {
      std::vector<Move> candidates;
      for (int i = 0; i < n; ++i) {
        if (auto move = improving_move(game, z, i)) candidates.push_back(*move);
      }
      if (candidates.empty()) return std::nullopt;
      std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
      return candidates[pick(state.rng)];
    }
    case SchedulerPolicy::MaxGain: {
      std::optional<Move> best;
      for (int i = 0; i < n; ++i) {
        auto move = improving_move(game, z, i);
        if (move && (!best || move->delta < best->delta)) best = move;
      }
      return best;
    }
  }
  return std::nullopt;
}

BrdResult run_brd(const Game& game, StrategyProfile start, const Scheduler& scheduler,
                  std::size_t max_steps) {
  check_profile(game, start);
  SchedulerState state(scheduler);
  BrdResult result;
  result.profile = std::move(start);
  Trace& trace = result.trace;

  const bool track_cycles = game.graph.directed();
  std::map<StrategyProfile, std::size_t> seen;
  if (track_cycles) seen.emplace(result.profile, 0);

  std::size_t made = 0;
  while (true) {
    auto move = brd_step(game, result.profile, state);
    if (!move) {
      trace.outcome = Outcome::Converged;
      return result;
    }
    if (made == max_steps) {
      trace.outcome = Outcome::StepLimit;
      return result;
    }
    ++made;
    TraceStep step;
    step.step = static_cast<int>(made);
    step.player = move->player;
    step.from = result.profile.strategy[move->player];
    step.to = move->point;
    step.delta = move->delta;
    result.profile.strategy[move->player] = move->point;
    if (!game.graph.directed()) {
      step.potential_after = potential(game, result.profile);
    }
    trace.steps.push_back(std::move(step));

    if (track_cycles) {
      auto [it, inserted] = seen.emplace(result.profile, made);
      if (!inserted) {
        trace.outcome = Outcome::Cycle;
        trace.cycle_start = it->second;
        trace.cycle_period = made - it->second;
        return result;
      }
    }
  }
}

BrdResult run_brd(const Game& game, StrategyProfile start, const Scheduler& scheduler) {
  return run_brd(game, std::move(start), scheduler, default_max_steps(game));
}

std::optional<CycleInfo> detect_cycle(const std::vector<StrategyProfile>& profiles) {
  std::map<StrategyProfile, std::size_t> seen;
  for (std::size_t idx = 0; idx < profiles.size(); ++idx) {
    auto [it, inserted] = seen.emplace(profiles[idx], idx);
    if (!inserted) return CycleInfo{it->second, idx - it->second};
  }
  return std::nullopt;
}

std::string trace_to_csv(const Trace& trace) {
  std::ostringstream out;
  out << "step,player,old,new,delta,potential\n";
  for (const auto& s : trace.steps) {
    out << s.step << ',' << s.player << ',' << s.from << ',' << s.to << ',' << to_string(s.delta)
        << ',';
    if (s.potential_after) out << to_string(*s.potential_after);
    out << '\n';
  }
  return out.str();
}

Scheduler parse_scheduler(const std::string& name, std::uint64_t seed) {
  if (name == "round-robin") return {SchedulerPolicy::RoundRobin, seed};
  if (name == "random") return {SchedulerPolicy::Random, seed};
  if (name == "max-gain") return {SchedulerPolicy::MaxGain, seed};
  throw std::invalid_argument("unknown scheduler policy: " + name);
}

}  // namespace dpg
