#include "gridlock/followers.hpp"

#include <algorithm>
#include <cassert>

namespace gridlock {

const char* to_string(FollowerKind kind) {
  return kind == FollowerKind::Plain ? "Plain" : "Wise";
}

const char* to_string(SetStrength strength) {
  return strength == SetStrength::Strong ? "Strong" : "Weak";
}

bool FollowerDigraph::has_arc(VertexId from, VertexId to) const {
  const auto& list = out_[from.value];
  return std::binary_search(list.begin(), list.end(), to);
}

std::size_t FollowerDigraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& list : out_) n += list.size();
  return n;
}

std::vector<std::pair<VertexId, VertexId>> FollowerDigraph::arcs() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  out.reserve(arc_count());
  for (std::size_t i = 0; i < out_.size(); ++i)
    for (VertexId to : out_[i])
      out.emplace_back(VertexId{static_cast<std::int32_t>(i)}, to);
  return out;
}

void FollowerDigraph::add_arc(VertexId from, VertexId to) {
  auto& list = out_[from.value];
  auto it = std::lower_bound(list.begin(), list.end(), to);
  if (it == list.end() || *it != to) list.insert(it, to);
}

void FollowerDigraph::set_successors(VertexId from,
                                     std::vector<VertexId> sorted_unique) {
  assert(std::is_sorted(sorted_unique.begin(), sorted_unique.end()));
  out_[from.value] = std::move(sorted_unique);
}

std::vector<VertexId> free_vertices(const Network& network,
                                    const State& state) {
  std::vector<VertexId> out;
  for (VertexId v : network.vertices())
    if (state.occupancy(v) < network.capacity(v)) out.push_back(v);
  return out;
}

VertexId wise_follower_of(const Network& network, const State& state,
                          const Route& route) {
  if (route.length() < 2)
    fail(ErrorCode::ZeroLengthRoute, "route has no wise follower");
  for (std::size_t i = 1; i < route.length(); ++i) {
    VertexId v = route.at(i);
    if (i + 1 == route.length()) return v;  // destination always qualifies
    if (!(network.capacity(v) == 1 && state.occupancy(v) == 0)) return v;
  }
  fail(ErrorCode::ZeroLengthRoute, "unreachable");  // not reached
}

FollowerDigraph build_follower_digraph(const Network& network,
                                       const State& state, FollowerKind kind) {
  FollowerDigraph digraph(kind, network.size());
  for (VertexId v : network.vertices())
    for (const PlacedRoute& item : state.routes_at(v))
      digraph.add_arc(v, kind == FollowerKind::Plain
                             ? follower_of(item.route)
                             : wise_follower_of(network, state, item.route));
  return digraph;
}

FollowerDigraph transitive_closure(const FollowerDigraph& digraph) {
  FollowerDigraph out(digraph.kind(), digraph.size());
  std::vector<char> seen(digraph.size());
  std::vector<VertexId> stack;
  for (std::size_t i = 0; i < digraph.size(); ++i) {
    VertexId u{static_cast<std::int32_t>(i)};
    std::fill(seen.begin(), seen.end(), 0);
    stack.clear();
    // Seed with u's direct successors, not u itself, so an arc (u, u) appears
    // only when u lies on a directed cycle.
    for (VertexId w : digraph.successors(u)) stack.push_back(w);
    std::vector<VertexId> reach;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      if (seen[x.value]) continue;
      seen[x.value] = 1;
      reach.push_back(x);
      for (VertexId w : digraph.successors(x))
        if (!seen[w.value]) stack.push_back(w);
    }
    std::sort(reach.begin(), reach.end());
    out.set_successors(u, std::move(reach));
  }
  return out;
}

std::optional<DeadlockSet> find_deadlock_set(const Network& network,
                                             const State& state,
                                             SetStrength strength) {
  FollowerKind kind = strength == SetStrength::Strong ? FollowerKind::Plain
                                                      : FollowerKind::Wise;
  FollowerDigraph closure =
      transitive_closure(build_follower_digraph(network, state, kind));
  std::vector<char> is_free(network.size(), 0);
  for (VertexId v : network.vertices())
    is_free[v.value] = state.occupancy(v) < network.capacity(v) ? 1 : 0;

  std::vector<VertexId> stalled;
  for (VertexId u : network.vertices()) {
    bool dominated = is_free[u.value] != 0;
    if (!dominated)
      for (VertexId w : closure.successors(u))
        if (is_free[w.value]) {
          dominated = true;
          break;
        }
    if (!dominated) stalled.push_back(u);
  }
  if (stalled.empty()) return std::nullopt;
  return DeadlockSet{std::move(stalled), strength};
}

std::string format_vertex_set(const Network& network,
                              std::span<const VertexId> vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += network.name(vertices[i]);
  }
  out += "}";
  return out;
}

}  // namespace gridlock
