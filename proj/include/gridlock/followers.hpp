#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gridlock/core.hpp"

namespace gridlock {

enum class FollowerKind { Plain, Wise };
enum class SetStrength { Strong, Weak };

const char* to_string(FollowerKind kind);
const char* to_string(SetStrength strength);

// Directed graph over the network's vertices whose arcs join each occupied
// vertex to the (plain or wise) followers of its stored routes.
class FollowerDigraph {
 public:
  FollowerDigraph(FollowerKind kind, std::size_t node_count)
      : kind_(kind), out_(node_count) {}

  FollowerKind kind() const { return kind_; }
  std::size_t size() const { return out_.size(); }
  std::span<const VertexId> successors(VertexId v) const {
    return out_[v.value];
  }
  bool has_arc(VertexId from, VertexId to) const;
  std::size_t arc_count() const;
  // All arcs sorted by (from, to).
  std::vector<std::pair<VertexId, VertexId>> arcs() const;

  void add_arc(VertexId from, VertexId to);
  void set_successors(VertexId from, std::vector<VertexId> sorted_unique);

  bool operator==(const FollowerDigraph&) const = default;

 private:
  FollowerKind kind_;
  std::vector<std::vector<VertexId>> out_;
};

// Vertices with at least one free slot, in id order.
std::vector<VertexId> free_vertices(const Network& network, const State& state);

// First waypoint after the route's head that is either the destination or not
// an empty unit buffer. Such a vertex always exists because the destination
// qualifies.
VertexId wise_follower_of(const Network& network, const State& state,
                          const Route& route);

FollowerDigraph build_follower_digraph(const Network& network,
                                       const State& state, FollowerKind kind);

// Arc (u, v) in the result iff the input has a directed path of length >= 1
// from u to v (so u on a cycle yields the self-arc (u, u)).
FollowerDigraph transitive_closure(const FollowerDigraph& digraph);

// A non-empty set of saturated vertices closed under (plain or wise)
// followers. When one exists, the detector below returns the maximal one,
// which is the union of all such sets.
struct DeadlockSet {
  std::vector<VertexId> vertices;  // sorted by id
  SetStrength strength;

  bool operator==(const DeadlockSet&) const = default;
};

// Detection via domination: a vertex is dominated when it is free or some
// closure arc leads from it to a free vertex; the non-dominated vertices form
// the maximal deadlock set of the requested strength, and none exists iff
// every vertex is dominated.
std::optional<DeadlockSet> find_deadlock_set(const Network& network,
                                             const State& state,
                                             SetStrength strength);

// "{A,B,C}" with names in the given order; "{}" when empty.
std::string format_vertex_set(const Network& network,
                              std::span<const VertexId> vertices);

}  // namespace gridlock
