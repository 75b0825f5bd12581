#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dpg/game.hpp"

namespace dpg {

/// Weighted undirected graph for the local max-cut game; each vertex has
/// degree at most five (the degree bound of the source hardness instances).
struct MaxCutInstance {
  struct Edge {
    int u = 0;
    int v = 0;
    Rational weight = 1;
    bool operator==(const Edge&) const = default;
  };

  int vertices = 0;
  std::vector<Edge> edges;

  void validate() const;
  int degree(int v) const;
  Rational total_weight() const;
};

/// Two-sided cut; side 0 is A, side 1 is B.
struct Cut {
  std::vector<int> side;
  bool operator==(const Cut&) const = default;
};

struct CutFlip {
  int vertex = 0;
  Rational gain;  // strictly positive utility increase
};

/// u_i = total weight of edges from i to the other side.
Rational local_maxcut_utility(const MaxCutInstance& inst, const Cut& cut, int i);

/// First vertex (ascending) whose flip strictly increases its own utility.
std::optional<CutFlip> find_improving_flip(const MaxCutInstance& inst, const Cut& cut);

bool is_local_maxcut(const MaxCutInstance& inst, const Cut& cut);

enum class ReductionVariant { Unweighted, Weighted };

/// Output of a reduction from local max-cut to a discrete preference game.
///
/// `game` is the full construction with auxiliary players; `restricted_game`
/// is the same correspondence under the proof's restriction assumptions (cut
/// players only, no penalties), on which the cost identities
///   unweighted: c_i = deg(i) * W - u_i
///   weighted:   c_i = 2 * sum_{j in N_i} w_ij - u_i
/// hold exactly for lifted profiles.
struct ReductionArtifact {
  ReductionVariant variant = ReductionVariant::Unweighted;
  MaxCutInstance instance;
  Game game;
  Game restricted_game;
  Rational W;
  std::optional<Rational> alpha;            // unweighted variant only
  std::vector<int> cut_player_map;          // max-cut vertex -> game player
  std::vector<std::array<int, 2>> strategy_point;  // vertex x side -> metric point
  std::vector<int> aux_players;
  std::vector<int> aux_preferred;           // aligned with aux_players
  std::vector<int> colouring;               // weighted variant only
};

/// Theorem-1 construction: per-vertex point pairs at distance W - w_ij across
/// edges (W elsewhere), a shared preferred point C, and
/// ceil(20*alpha/(1-alpha)) degree-1 auxiliaries per cut vertex split between
/// the two sides (odd remainder on the A side). Requires 1/2 < alpha < 1.
ReductionArtifact reduce_unweighted(const MaxCutInstance& inst, const Rational& alpha);

/// Theorem-2 construction: greedy proper 6-colouring, the 12-point
/// {A,B} x {a..f} metric with distances 1 across parities and 2 within, and
/// two weight-W auxiliaries per cut vertex with preference weight 11W, where
/// W = 10 * total edge weight.
ReductionArtifact reduce_weighted(const MaxCutInstance& inst);

/// Cut players at their mapped points, auxiliaries at their preferred points.
StrategyProfile lift_cut(const ReductionArtifact& artifact, const Cut& cut);

/// Same lift on the restricted game (cut players only).
StrategyProfile lift_cut_restricted(const ReductionArtifact& artifact, const Cut& cut);

/// Recovers the cut if every cut player sits on one of her two mapped points;
/// nullopt otherwise (possible only off-equilibrium).
std::optional<Cut> project_profile(const ReductionArtifact& artifact, const StrategyProfile& z);

/// Ascending-index greedy colouring; uses at most max degree + 1 colours.
std::vector<int> greedy_colouring(const MaxCutInstance& inst);

/// The 33-player directed game with no equilibrium: three cycle players on
/// the 6-point {0,1,2} x {a,b} parity metric, each forced onto her own value
/// pair by ten auxiliary players split between the two parities.
Game build_directed_counterexample();

}  // namespace dpg
