#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "gridlock/decide.hpp"
#include "gridlock/followers.hpp"
#include "gridlock/instance.hpp"

namespace gridlock::testing {

#ifndef GRIDLOCK_FIXTURE_DIR
#error "GRIDLOCK_FIXTURE_DIR must be defined by the build"
#endif

inline Instance load_fixture(const std::string& name) {
  return load_instance(std::string(GRIDLOCK_FIXTURE_DIR) + "/" + name);
}

inline Instance make_instance(std::string_view text) {
  return parse_instance(text);
}

inline VertexId id_of(const Network& network, std::string_view name) {
  auto v = network.find(name);
  if (!v) fail(ErrorCode::UnknownVertex, "no vertex " + std::string(name));
  return *v;
}

inline std::vector<std::string> names_of(const Network& network,
                                         std::span<const VertexId> vertices) {
  std::vector<std::string> out;
  for (VertexId v : vertices) out.emplace_back(network.name(v));
  return out;
}

inline std::vector<std::string> set_names(
    const Network& network, const std::optional<DeadlockSet>& set) {
  if (!set) return {};
  return names_of(network, set->vertices);
}

// Runs f and reports the ErrorCode it threw, or nullopt if it returned.
template <typename F>
std::optional<ErrorCode> thrown_code(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Reference detector: enumerate every vertex subset and keep those that are
// saturated and closed under the requested follower notion. Exponential, for
// cross-checking the dominating-set detector on small networks only.
inline std::vector<std::vector<VertexId>> deadlock_sets_by_enumeration(
    const Network& network, const State& state, SetStrength strength) {
  const int n = static_cast<int>(network.size());
  std::vector<std::vector<VertexId>> found;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (int v = 0; ok && v < n; ++v) {
      if (!(mask & (1u << v))) continue;
      VertexId vid{v};
      if (state.occupancy(vid) != network.capacity(vid)) {
        ok = false;
        break;
      }
      for (const PlacedRoute& pr : state.routes_at(vid)) {
        VertexId f = strength == SetStrength::Strong
                         ? follower_of(pr.route)
                         : wise_follower_of(network, state, pr.route);
        if (!(mask & (1u << f.value))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) continue;
    std::vector<VertexId> set;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) set.push_back(VertexId{v});
    found.push_back(std::move(set));
  }
  return found;
}

// Reference safety check: unmemoized recursion over feasible moves. Depth is
// bounded by the potential, which every move decreases.
inline bool reaches_empty_plain(const Network& network, const State& state) {
  if (state.empty()) return true;
  for (const Move& move : feasible_moves(network, state))
    if (reaches_empty_plain(network, apply_move(network, state, move)))
      return true;
  return false;
}

}  // namespace gridlock::testing
