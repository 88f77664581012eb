#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gridlock/core.hpp"
#include "gridlock/followers.hpp"

namespace gridlock {

// Byte encoding of the sorted (vertex, route, count) triples of a state.
// Equal states (items being indistinguishable) encode identically, so the
// encoding can key memoization tables.
struct CanonicalState {
  std::string bytes;

  bool operator==(const CanonicalState&) const = default;
};

CanonicalState canonical_state(const State& state);

struct OracleLimits {
  std::uint64_t max_states = 1'000'000;
  double max_time_seconds = 60.0;
};

enum class OracleOutcome { Safe, BoundToDeadlock, ResourceLimitExceeded };

const char* to_string(OracleOutcome outcome);

struct OracleResult {
  OracleOutcome outcome;
  std::uint64_t explored_states = 0;
  // Present iff Safe: a feasible move sequence ending at the empty state.
  std::optional<MovePlan> witness_plan;
};

// Exhaustive answer by memoized depth-first search over canonical states: the
// state is Safe iff the empty state is reachable. Moves strictly decrease the
// potential, so the reachable state graph is acyclic and plain Safe/Dead
// memoization is sound. Children are expanded in feasible_moves order, making
// the result and witness deterministic. Exceeding either limit yields
// ResourceLimitExceeded.
OracleResult oracle_decide(const Network& network, const State& state,
                           const OracleLimits& limits = {});

// True iff the plan applies move by move without an infeasible step and the
// final state is empty.
bool verify_plan(const Network& network, const State& state,
                 const MovePlan& plan);

struct DescendantSearch {
  // Present iff a state containing a deadlock set of the requested strength
  // is reachable (the start state itself counts): a shortest move sequence to
  // it and the state found.
  std::optional<MovePlan> path;
  std::optional<State> state;
  // True when the whole reachable state space was enumerated within limits.
  bool exhausted = false;
  std::uint64_t explored_states = 0;
};

// Breadth-first search over reachable states for one containing a deadlock
// set of the given strength.
DescendantSearch find_deadlocked_descendant(const Network& network,
                                            const State& state,
                                            SetStrength strength,
                                            const OracleLimits& limits = {});

}  // namespace gridlock
