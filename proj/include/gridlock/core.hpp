#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gridlock/errors.hpp"

namespace gridlock {

// Dense vertex index within one Network. Declaration order defines the total
// order, which is the tie-break wherever results must be deterministic.
struct VertexId {
  std::int32_t value = -1;

  constexpr auto operator<=>(const VertexId&) const = default;
};

// A simple path from an item's current vertex to its destination, as a
// waypoint list. Kept thin; whether it fits a given network is checked by
// validate().
class Route {
 public:
  Route() = default;
  explicit Route(std::vector<VertexId> waypoints)
      : waypoints_(std::move(waypoints)) {}

  std::span<const VertexId> waypoints() const { return waypoints_; }
  std::size_t length() const { return waypoints_.size(); }
  std::size_t edge_count() const {
    return waypoints_.empty() ? 0 : waypoints_.size() - 1;
  }
  VertexId at(std::size_t i) const { return waypoints_[i]; }
  VertexId origin() const { return waypoints_.front(); }
  VertexId destination() const { return waypoints_.back(); }

  // The route as seen after one move: same path without the first waypoint.
  Route tail() const {
    return Route(std::vector<VertexId>(waypoints_.begin() + 1, waypoints_.end()));
  }

  auto operator<=>(const Route&) const = default;

 private:
  std::vector<VertexId> waypoints_;
};

// Undirected network with per-vertex buffer capacities. Immutable after
// construction; construction validates shape (unique names, capacities >= 1,
// known endpoints, no self-loops or duplicate edges).
class Network {
 public:
  Network(std::vector<std::string> names, std::vector<int> capacities,
          const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t size() const { return names_.size(); }
  bool contains(VertexId v) const {
    return v.value >= 0 && static_cast<std::size_t>(v.value) < names_.size();
  }
  int capacity(VertexId v) const { return capacities_[v.value]; }
  std::string_view name(VertexId v) const { return names_[v.value]; }
  std::optional<VertexId> find(std::string_view name) const;

  std::span<const VertexId> neighbors(VertexId v) const {
    return adjacency_[v.value];
  }
  int degree(VertexId v) const {
    return static_cast<int>(adjacency_[v.value].size());
  }
  bool adjacent(VertexId u, VertexId v) const;

  // Edges with endpoints ordered by id, in declaration order.
  std::span<const std::pair<VertexId, VertexId>> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool connected() const { return connected_; }
  bool is_tree() const {
    return size() >= 1 && connected_ && edge_count() == size() - 1;
  }
  bool all_capacities_at_least(int k) const;

  std::vector<VertexId> vertices() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> capacities_;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::unordered_map<std::string, VertexId> by_name_;
  bool connected_ = false;
};

// A route together with how many identical items hold it.
struct PlacedRoute {
  Route route;
  int count = 1;

  auto operator<=>(const PlacedRoute&) const = default;
};

// Items stored per vertex. Identical routes at a vertex are merged into one
// (route, count) entry and entries are kept sorted by route, so equal states
// have equal representations regardless of insertion order.
class State {
 public:
  State() = default;
  explicit State(std::size_t vertex_count)
      : slots_(vertex_count), occupancy_(vertex_count, 0) {}

  std::size_t vertex_count() const { return slots_.size(); }
  int occupancy(VertexId v) const { return occupancy_[v.value]; }
  std::span<const PlacedRoute> routes_at(VertexId v) const {
    return slots_[v.value];
  }
  int total_items() const { return total_items_; }
  bool empty() const { return total_items_ == 0; }

  // Stores `count` items at the route's first waypoint.
  void place(Route route, int count = 1);
  // Stores items at an explicit vertex; validate() flags a mismatch with the
  // route's first waypoint as RouteStartMismatch.
  void place_at(VertexId storage, Route route, int count = 1);
  // Removes `count` items holding exactly `route`; InfeasibleMove if absent.
  void remove_at(VertexId storage, const Route& route, int count = 1);

  bool operator==(const State&) const = default;

 private:
  std::vector<std::vector<PlacedRoute>> slots_;
  std::vector<int> occupancy_;
  int total_items_ = 0;
};

// One item shifted from `source` along the first edge of `route` (which it
// holds at `source`) to `target` = second waypoint.
struct Move {
  VertexId source;
  Route route;
  VertexId target;

  bool operator==(const Move&) const = default;
};

using MovePlan = std::vector<Move>;

// Checks every state invariant against the network: routes have >= 2
// waypoints, are simple, run along existing edges, start at their storage
// vertex, and no vertex exceeds its capacity. Throws Error on the first
// violation.
void validate(const Network& network, const State& state);

// Second waypoint of the route; ZeroLengthRoute if there is none.
VertexId follower_of(const Route& route);

// All currently feasible moves, each distinct (source, route) once, sorted by
// source id then route.
std::vector<Move> feasible_moves(const Network& network, const State& state);

// Applies one move and returns the successor state. An item arriving at its
// destination leaves the network (the destination's occupancy is unchanged);
// otherwise the item re-appears at the target holding the truncated route.
State apply_move(const Network& network, const State& state, const Move& move);

// Applies moves in order; a failing step i is reported as InfeasibleMoveAt
// with index = i.
State apply_plan(const Network& network, const State& state,
                 const MovePlan& plan);

// Total number of route edges still to be travelled; every feasible move
// decreases this by exactly 1, and it is 0 exactly on the empty state.
std::int64_t potential(const State& state);

}  // namespace gridlock
