#include "gridlock/core.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace gridlock {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapacityExceeded: return "CapacityExceeded";
    case ErrorCode::ZeroLengthRoute: return "ZeroLengthRoute";
    case ErrorCode::NonSimpleRoute: return "NonSimpleRoute";
    case ErrorCode::EdgeMissing: return "EdgeMissing";
    case ErrorCode::RouteStartMismatch: return "RouteStartMismatch";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::BadCapacity: return "BadCapacity";
    case ErrorCode::BadItemCount: return "BadItemCount";
    case ErrorCode::InfeasibleMove: return "InfeasibleMove";
    case ErrorCode::InfeasibleMoveAt: return "InfeasibleMoveAt";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::WiseFollowerSaturated: return "WiseFollowerSaturated";
    case ErrorCode::NoSafeStep: return "NoSafeStep";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::GenerationInfeasible: return "GenerationInfeasible";
  }
  return "UnknownError";
}

Network::Network(std::vector<std::string> names, std::vector<int> capacities,
                 const std::vector<std::pair<VertexId, VertexId>>& edges)
    : names_(std::move(names)), capacities_(std::move(capacities)) {
  if (names_.size() != capacities_.size())
    fail(ErrorCode::BadCapacity, "one capacity per vertex required");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty())
      fail(ErrorCode::DuplicateVertex, "empty vertex name");
    auto [_, inserted] =
        by_name_.emplace(names_[i], VertexId{static_cast<std::int32_t>(i)});
    if (!inserted)
      fail(ErrorCode::DuplicateVertex, "duplicate vertex " + names_[i]);
    if (capacities_[i] < 1)
      fail(ErrorCode::BadCapacity, "vertex " + names_[i] + " has capacity " +
                                       std::to_string(capacities_[i]) +
                                       "; capacities must be >= 1");
  }

  adjacency_.resize(names_.size());
  std::set<std::pair<std::int32_t, std::int32_t>> seen;
  for (auto [a, b] : edges) {
    if (!contains(a) || !contains(b))
      fail(ErrorCode::UnknownVertex, "edge endpoint out of range");
    if (a == b)
      fail(ErrorCode::SelfLoop, "self-loop at " + names_[a.value]);
    if (b < a) std::swap(a, b);
    if (!seen.emplace(a.value, b.value).second)
      fail(ErrorCode::DuplicateEdge,
           "duplicate edge " + names_[a.value] + " " + names_[b.value]);
    edges_.emplace_back(a, b);
    adjacency_[a.value].push_back(b);
    adjacency_[b.value].push_back(a);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());

  // Cache connectivity; the network is immutable from here on.
  if (names_.empty()) {
    connected_ = true;
  } else {
    std::vector<char> visited(names_.size(), 0);
    std::vector<VertexId> stack{VertexId{0}};
    visited[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adjacency_[v.value]) {
        if (!visited[w.value]) {
          visited[w.value] = 1;
          ++reached;
          stack.push_back(w);
        }
      }
    }
    connected_ = reached == names_.size();
  }
}

std::optional<VertexId> Network::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool Network::adjacent(VertexId u, VertexId v) const {
  const auto& list = adjacency_[u.value];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Network::all_capacities_at_least(int k) const {
  return std::all_of(capacities_.begin(), capacities_.end(),
                     [k](int c) { return c >= k; });
}

std::vector<VertexId> Network::vertices() const {
  std::vector<VertexId> out(size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = VertexId{static_cast<std::int32_t>(i)};
  return out;
}

void State::place(Route route, int count) {
  if (route.length() == 0)
    fail(ErrorCode::ZeroLengthRoute, "cannot place an empty route");
  VertexId origin = route.origin();
  place_at(origin, std::move(route), count);
}

void State::place_at(VertexId storage, Route route, int count) {
  assert(storage.value >= 0 &&
         static_cast<std::size_t>(storage.value) < slots_.size());
  assert(count > 0);
  auto& list = slots_[storage.value];
  auto it = std::lower_bound(
      list.begin(), list.end(), route,
      [](const PlacedRoute& p, const Route& r) { return p.route < r; });
  if (it != list.end() && it->route == route) {
    it->count += count;
  } else {
    list.insert(it, PlacedRoute{std::move(route), count});
  }
  occupancy_[storage.value] += count;
  total_items_ += count;
}

void State::remove_at(VertexId storage, const Route& route, int count) {
  assert(count > 0);
  auto& list = slots_[storage.value];
  auto it = std::lower_bound(
      list.begin(), list.end(), route,
      [](const PlacedRoute& p, const Route& r) { return p.route < r; });
  if (it == list.end() || it->route != route || it->count < count)
    fail(ErrorCode::InfeasibleMove, "route not stored at the source vertex");
  it->count -= count;
  if (it->count == 0) list.erase(it);
  occupancy_[storage.value] -= count;
  total_items_ -= count;
}

void validate(const Network& network, const State& state) {
  if (state.vertex_count() != network.size())
    fail(ErrorCode::UnknownVertex,
         "state covers " + std::to_string(state.vertex_count()) +
             " vertices, network has " + std::to_string(network.size()));
  for (VertexId v : network.vertices()) {
    for (const PlacedRoute& item : state.routes_at(v)) {
      const Route& r = item.route;
      if (r.length() < 2)
        fail(ErrorCode::ZeroLengthRoute,
             "route at " + std::string(network.name(v)) +
                 " has fewer than two waypoints");
      for (VertexId w : r.waypoints())
        if (!network.contains(w))
          fail(ErrorCode::UnknownVertex, "route waypoint out of range");
      if (r.origin() != v)
        fail(ErrorCode::RouteStartMismatch,
             "route stored at " + std::string(network.name(v)) +
                 " starts at " + std::string(network.name(r.origin())));
      auto wps = r.waypoints();
      std::vector<VertexId> sorted(wps.begin(), wps.end());
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail(ErrorCode::NonSimpleRoute,
             "route at " + std::string(network.name(v)) +
                 " revisits a vertex");
      for (std::size_t i = 0; i + 1 < r.length(); ++i)
        if (!network.adjacent(r.at(i), r.at(i + 1)))
          fail(ErrorCode::EdgeMissing,
               "no edge " + std::string(network.name(r.at(i))) + " " +
                   std::string(network.name(r.at(i + 1))));
    }
    if (state.occupancy(v) > network.capacity(v))
      fail(ErrorCode::CapacityExceeded,
           "vertex " + std::string(network.name(v)) + " stores " +
               std::to_string(state.occupancy(v)) + " items, capacity " +
               std::to_string(network.capacity(v)));
  }
}

VertexId follower_of(const Route& route) {
  if (route.length() < 2)
    fail(ErrorCode::ZeroLengthRoute, "route has no follower");
  return route.at(1);
}

std::vector<Move> feasible_moves(const Network& network, const State& state) {
  assert(state.vertex_count() == network.size());
  std::vector<Move> out;
  for (VertexId v : network.vertices()) {
    for (const PlacedRoute& item : state.routes_at(v)) {
      VertexId next = item.route.at(1);
      if (state.occupancy(next) < network.capacity(next))
        out.push_back(Move{v, item.route, next});
    }
  }
  return out;  // sorted by construction: vertex order, then route order
}

State apply_move(const Network& network, const State& state, const Move& move) {
  if (move.route.length() < 2 || move.route.at(1) != move.target)
    fail(ErrorCode::InfeasibleMove,
         "move target does not follow the source on the route");
  if (state.occupancy(move.target) >= network.capacity(move.target))
    fail(ErrorCode::InfeasibleMove,
         "vertex " + std::string(network.name(move.target)) +
             " has no free slot");
  State next = state;
  next.remove_at(move.source, move.route, 1);
  // Arriving at the destination delivers the item; otherwise it occupies the
  // target with the rest of its route.
  if (move.target != move.route.destination())
    next.place_at(move.target, move.route.tail(), 1);
  return next;
}

State apply_plan(const Network& network, const State& state,
                 const MovePlan& plan) {
  State current = state;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    try {
      current = apply_move(network, current, plan[i]);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InfeasibleMove) throw;
      Error indexed(ErrorCode::InfeasibleMoveAt,
                    "move " + std::to_string(i) + ": " + e.what());
      indexed.index = i;
      throw indexed;
    }
  }
  return current;
}

std::int64_t potential(const State& state) {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < state.vertex_count(); ++i)
    for (const PlacedRoute& item :
         state.routes_at(VertexId{static_cast<std::int32_t>(i)}))
      total += static_cast<std::int64_t>(item.count) *
               static_cast<std::int64_t>(item.route.edge_count());
  return total;
}

}  // namespace gridlock
