#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lpalab/graph.hpp"

namespace lpa {

struct ShiftSpec {
  int source = 0;  // u
  int range = 0;   // v; needs adjacency(u, v) >= 1, v not a sink, u != v
  bool operator==(const ShiftSpec&) const = default;
};

/// Remove one edge u -> v and add one edge u -> r(f) for every edge f leaving
/// v; as a matrix operation, row v is added to row u after decrementing the
/// (u, v) entry. Preserves the isomorphism class of the path algebra.
MultiGraph shift(const MultiGraph& g, ShiftSpec spec);

struct OrbitConfig {
  int64_t max_total_multiplicity = 64;
  int max_depth = 6;
  int max_states = 50000;  // per side
};

struct WitnessStep {
  bool from_left = true;  // applied from the first graph's orbit, else the second
  ShiftSpec spec;
};

/// Witness that both endpoints reach a common graph by forward shift moves.
/// Steps apply to the canonical form of the current graph, re-canonicalizing
/// after each move; replaying them from each endpoint lands on `meet`.
struct WitnessPath {
  MultiGraph start, end, meet;
  std::vector<WitnessStep> steps;
};

/// Bidirectional breadth-first search over canonical forms of forward shift
/// moves. States above the multiplicity bound are pruned. A miss is not
/// evidence of non-isomorphism.
std::optional<WitnessPath> orbit_search(const MultiGraph& e, const MultiGraph& f, const OrbitConfig& cfg);

/// Replays a witness from both endpoints and checks the meets agree.
bool replay_witness(const WitnessPath& w);

}  // namespace lpa
