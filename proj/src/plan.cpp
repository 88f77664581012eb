#include "gridlock/plan.hpp"

#include <algorithm>
#include <sstream>

#include "gridlock/decide.hpp"

namespace gridlock {

WiseAdvance expand_wise_advance(const Network& network, const State& state,
                                const Route& route) {
  if (route.length() < 2)
    fail(ErrorCode::ZeroLengthRoute, "route has no follower to advance to");
  VertexId source = route.origin();
  auto stored = state.routes_at(source);
  bool present = std::any_of(
      stored.begin(), stored.end(),
      [&](const PlacedRoute& item) { return item.route == route; });
  if (!present)
    fail(ErrorCode::InfeasibleMove, "route not stored at its first waypoint");

  VertexId target = wise_follower_of(network, state, route);
  if (state.occupancy(target) >= network.capacity(target))
    fail(ErrorCode::WiseFollowerSaturated,
         "wise follower " + std::string(network.name(target)) +
             " has no free slot");

  // Every waypoint before the wise follower is an empty unit buffer, so the
  // item can take them one edge at a time and leave them empty again.
  MovePlan hops;
  Route current = route;
  while (true) {
    VertexId next = current.at(1);
    hops.push_back(Move{current.origin(), current, next});
    if (next == target) break;
    current = current.tail();
  }
  return WiseAdvance{source, route, target, std::move(hops)};
}

State apply_advance(const Network& network, const State& state,
                    const WiseAdvance& advance) {
  return apply_plan(network, state, advance.hops);
}

WiseAdvance select_safe_step(const Network& network, const State& state) {
  if (potential(state) == 0)
    fail(ErrorCode::NoSafeStep, "nothing left to move");
  if (!satisfies_relaxed_wise(network, state))
    fail(ErrorCode::NoSafeStep, "state is not wise or relaxed-wise");
  if (find_deadlock_set(network, state, SetStrength::Weak))
    fail(ErrorCode::NoSafeStep, "weak deadlock set present");

  // Routes grouped by wise follower; each group is already ordered by source
  // id, then route, because vertices and their stored routes are scanned in
  // order.
  std::vector<std::vector<Route>> by_follower(network.size());
  for (VertexId v : network.vertices())
    for (const PlacedRoute& item : state.routes_at(v))
      by_follower[wise_follower_of(network, state, item.route).value]
          .push_back(item.route);

  for (VertexId v : network.vertices()) {
    if (state.occupancy(v) >= network.capacity(v)) continue;
    for (const Route& route : by_follower[v.value]) {
      WiseAdvance advance = expand_wise_advance(network, state, route);
      State after = apply_plan(network, state, advance.hops);
      if (satisfies_relaxed_wise(network, after) &&
          !find_deadlock_set(network, after, SetStrength::Weak))
        return advance;
    }
  }
  fail(ErrorCode::NoSafeStep, "no advance preserves the planning invariant");
}

std::vector<WiseAdvance> plan_advances(const Network& network,
                                       const State& state) {
  if (!satisfies_relaxed_wise(network, state))
    fail(ErrorCode::PreconditionViolated, "state is not wise or relaxed-wise");
  if (auto weak = find_deadlock_set(network, state, SetStrength::Weak))
    fail(ErrorCode::PreconditionViolated,
         "weak deadlock set present: " +
             format_vertex_set(network, weak->vertices));

  std::vector<WiseAdvance> advances;
  State current = state;
  while (potential(current) > 0) {
    WiseAdvance advance = select_safe_step(network, current);
    current = apply_plan(network, current, advance.hops);
    advances.push_back(std::move(advance));
  }
  return advances;
}

MovePlan freeing_plan(const Network& network, const State& state) {
  MovePlan plan;
  for (WiseAdvance& advance : plan_advances(network, state))
    for (Move& m : advance.hops) plan.push_back(std::move(m));
  return plan;
}

std::string format_move(const Network& network, const Move& move) {
  std::string out = std::string(network.name(move.source)) + " -> " +
                    std::string(network.name(move.target)) + " :";
  for (VertexId w : move.route.waypoints()) {
    out += " ";
    out += network.name(w);
  }
  return out;
}

std::string format_plan(const Network& network, const MovePlan& plan) {
  std::string out;
  for (const Move& m : plan) {
    out += format_move(network, m);
    out += "\n";
  }
  return out;
}

MovePlan parse_plan(const Network& network, std::string_view text) {
  MovePlan plan;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  auto resolve = [&](const std::string& token) {
    auto v = network.find(token);
    if (!v) fail_at_line(ErrorCode::UnknownVertex, line_no,
                         "unknown vertex " + token);
    return *v;
  };
  while (std::getline(stream, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(std::move(t));
    if (tokens.empty()) continue;
    // source -> target : w0 w1 ...
    if (tokens.size() < 6 || tokens[1] != "->" || tokens[3] != ":")
      fail_at_line(ErrorCode::SyntaxError, line_no,
                   "expected \"source -> target : waypoint list\"");
    VertexId source = resolve(tokens[0]);
    VertexId target = resolve(tokens[2]);
    std::vector<VertexId> waypoints;
    for (std::size_t i = 4; i < tokens.size(); ++i)
      waypoints.push_back(resolve(tokens[i]));
    if (waypoints.front() != source)
      fail_at_line(ErrorCode::SyntaxError, line_no,
                   "route does not start at the move's source");
    if (waypoints[1] != target)
      fail_at_line(ErrorCode::SyntaxError, line_no,
                   "move target is not the route's second waypoint");
    plan.push_back(Move{source, Route(std::move(waypoints)), target});
  }
  return plan;
}

}  // namespace gridlock
