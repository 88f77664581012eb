#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridlock/core.hpp"
#include "gridlock/followers.hpp"

namespace gridlock {

// One item taken from `source` all the way to the wise follower `target` of
// its route: every intermediate waypoint is an empty unit buffer, so the item
// can hop through them one edge at a time. `hops` are those single-edge moves
// in order; applying them leaves each intermediate vertex as empty as before.
struct WiseAdvance {
  VertexId source;
  Route route;
  VertexId target;
  MovePlan hops;

  bool operator==(const WiseAdvance&) const = default;
};

// Expands the advance of one item holding `route` (stored at its first
// waypoint) to the route's wise follower. WiseFollowerSaturated if that
// follower has no free slot; InfeasibleMove if the route is not stored.
WiseAdvance expand_wise_advance(const Network& network, const State& state,
                                const Route& route);

// Picks an advance that keeps the state (relaxed-)wise and free of weak
// deadlock sets. Candidates are scanned deterministically: free vertices that
// are wise followers in id order, then their sources in id order, then routes
// lexicographically; the first candidate whose tentative application passes
// the check is returned. NoSafeStep when the preconditions fail (state not
// (relaxed-)wise, weak deadlock set present, or nothing left to move) or no
// candidate passes.
WiseAdvance select_safe_step(const Network& network, const State& state);

// Repeats select_safe_step until the network is empty; returns the advances
// in order. PreconditionViolated unless the initial state is (relaxed-)wise
// without weak deadlock sets.
std::vector<WiseAdvance> plan_advances(const Network& network,
                                       const State& state);

// The same plan flattened to single-edge moves. The result empties the
// network and its length equals the initial potential.
MovePlan freeing_plan(const Network& network, const State& state);

State apply_advance(const Network& network, const State& state,
                    const WiseAdvance& advance);

// Plan text: one move per line, "source -> target : waypoint list", e.g.
// "A -> E : A E B".
std::string format_move(const Network& network, const Move& move);
std::string format_plan(const Network& network, const MovePlan& plan);
MovePlan parse_plan(const Network& network, std::string_view text);

}  // namespace gridlock
