#include "gridlock/decide.hpp"

namespace gridlock {

const char* to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Safe: return "Safe";
    case Outcome::BoundToDeadlock: return "BoundToDeadlock";
    case Outcome::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Justification justification) {
  switch (justification) {
    case Justification::StrongDeadlockPresent:
      return "StrongDeadlockPresent";
    case Justification::NoStrongDeadlockAllBuffersAtLeast2:
      return "NoStrongDeadlockAllBuffersAtLeast2";
    case Justification::NoWeakDeadlockWise:
      return "NoWeakDeadlockWise";
    case Justification::WeakDeadlockOnTree:
      return "WeakDeadlockOnTree";
    case Justification::TheoremInapplicable:
      return "TheoremInapplicable";
  }
  return "?";
}

bool is_wise(const Network& network, const State& state) {
  for (VertexId v : network.vertices())
    if (network.capacity(v) == 1 && state.occupancy(v) == 1) return false;
  return true;
}

bool satisfies_relaxed_wise(const Network& network, const State& state) {
  std::vector<char> full_unit(network.size(), 0);
  bool any = false;
  for (VertexId v : network.vertices())
    if (network.capacity(v) == 1 && state.occupancy(v) == 1) {
      full_unit[v.value] = 1;
      any = true;
    }
  if (!any) return true;
  for (VertexId v : network.vertices())
    for (const PlacedRoute& item : state.routes_at(v))
      if (full_unit[wise_follower_of(network, state, item.route).value])
        return false;
  return true;
}

bool is_leaf_wise_tree(const Network& network, const State& state) {
  if (!network.is_tree())
    fail(ErrorCode::NotATree, "network is not a tree");
  for (VertexId v : network.vertices())
    if (network.capacity(v) == 1 && state.occupancy(v) == 1 &&
        network.degree(v) != 1)
      return false;
  return true;
}

Verdict decide(const Network& network, const State& state) {
  if (auto strong = find_deadlock_set(network, state, SetStrength::Strong))
    return {Outcome::BoundToDeadlock, Justification::StrongDeadlockPresent,
            std::move(strong)};

  if (network.all_capacities_at_least(2))
    return {Outcome::Safe, Justification::NoStrongDeadlockAllBuffersAtLeast2,
            std::nullopt};

  auto weak = find_deadlock_set(network, state, SetStrength::Weak);
  bool wise_enough =
      is_wise(network, state) || satisfies_relaxed_wise(network, state);
  if (wise_enough && !weak)
    return {Outcome::Safe, Justification::NoWeakDeadlockWise, std::nullopt};

  if (network.is_tree() && weak &&
      (is_wise(network, state) || is_leaf_wise_tree(network, state)))
    return {Outcome::BoundToDeadlock, Justification::WeakDeadlockOnTree,
            std::move(weak)};

  return {Outcome::Unknown, Justification::TheoremInapplicable, std::nullopt};
}

}  // namespace gridlock
