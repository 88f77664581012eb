#pragma once

#include <optional>

#include "gridlock/core.hpp"
#include "gridlock/followers.hpp"

namespace gridlock {

enum class Outcome { Safe, BoundToDeadlock, Unknown };

enum class Justification {
  StrongDeadlockPresent,
  NoStrongDeadlockAllBuffersAtLeast2,
  NoWeakDeadlockWise,
  WeakDeadlockOnTree,
  TheoremInapplicable,
};

const char* to_string(Outcome outcome);
const char* to_string(Justification justification);

struct Verdict {
  Outcome outcome;
  Justification justification;
  std::optional<DeadlockSet> witness;

  bool operator==(const Verdict&) const = default;
};

// No vertex holds an item in a unit buffer (sigma(v) = b(v) = 1 nowhere).
bool is_wise(const Network& network, const State& state);

// Weaker than is_wise: vertices with a full unit buffer may exist as long as
// none of them is the wise follower of any stored route. True for every wise
// state.
bool satisfies_relaxed_wise(const Network& network, const State& state);

// On a tree: every vertex with a full unit buffer is a leaf. NotATree if the
// network is not a tree.
bool is_leaf_wise_tree(const Network& network, const State& state);

// Sound, incomplete decision procedure. Rules, in order:
//   1. a strong deadlock set exists        -> BoundToDeadlock (witness)
//   2. every capacity >= 2                 -> Safe
//   3. (relaxed-)wise and no weak set      -> Safe
//   4. tree, (leaf-)wise, weak set exists  -> BoundToDeadlock (witness)
//   5. otherwise                           -> Unknown
// Never reports Safe for a state the oracle finds bound to deadlock, and vice
// versa; Unknown is possible only when neither rule 1-4 applies.
Verdict decide(const Network& network, const State& state);

}  // namespace gridlock
