#include "gridlock/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <unordered_map>

namespace gridlock {

namespace {

void append_u32(std::string& bytes, std::uint32_t v) {
  bytes.push_back(static_cast<char>(v & 0xff));
  bytes.push_back(static_cast<char>((v >> 8) & 0xff));
  bytes.push_back(static_cast<char>((v >> 16) & 0xff));
  bytes.push_back(static_cast<char>((v >> 24) & 0xff));
}

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point start = Clock::now();
  double budget_seconds;

  bool expired() const {
    return std::chrono::duration<double>(Clock::now() - start).count() >
           budget_seconds;
  }
};

}  // namespace

const char* to_string(OracleOutcome outcome) {
  switch (outcome) {
    case OracleOutcome::Safe: return "Safe";
    case OracleOutcome::BoundToDeadlock: return "BoundToDeadlock";
    case OracleOutcome::ResourceLimitExceeded: return "ResourceLimitExceeded";
  }
  return "?";
}

CanonicalState canonical_state(const State& state) {
  // The per-vertex route lists are already sorted and merged, so serializing
  // them in vertex order is a canonical encoding.
  CanonicalState out;
  for (std::size_t i = 0; i < state.vertex_count(); ++i) {
    VertexId v{static_cast<std::int32_t>(i)};
    auto items = state.routes_at(v);
    if (items.empty()) continue;
    append_u32(out.bytes, static_cast<std::uint32_t>(i));
    append_u32(out.bytes, static_cast<std::uint32_t>(items.size()));
    for (const PlacedRoute& item : items) {
      append_u32(out.bytes, static_cast<std::uint32_t>(item.count));
      append_u32(out.bytes, static_cast<std::uint32_t>(item.route.length()));
      for (VertexId w : item.route.waypoints())
        append_u32(out.bytes, static_cast<std::uint32_t>(w.value));
    }
  }
  return out;
}

OracleResult oracle_decide(const Network& network, const State& state,
                           const OracleLimits& limits) {
  enum class Mark : std::uint8_t { Safe, Dead };
  std::unordered_map<std::string, Mark> seen;
  std::unordered_map<std::string, Move> chosen;  // first safe move per state

  struct Frame {
    State state;
    std::string key;
    std::vector<Move> moves;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  std::uint64_t explored = 0;
  Deadline deadline{Clock::now(), limits.max_time_seconds};
  bool limited = false;

  // Registers a state. Returns its mark if already decided (the empty state
  // is Safe on sight), otherwise pushes a frame and returns nothing.
  auto enter = [&](State s) -> std::optional<Mark> {
    std::string key = canonical_state(s).bytes;
    if (auto it = seen.find(key); it != seen.end()) return it->second;
    if (explored >= limits.max_states) {
      limited = true;
      return Mark::Dead;  // value unused; the loop aborts
    }
    ++explored;
    if (s.empty()) {
      seen.emplace(std::move(key), Mark::Safe);
      return Mark::Safe;
    }
    Frame frame{std::move(s), std::move(key), {}, 0};
    frame.moves = feasible_moves(network, frame.state);
    seen.emplace(frame.key, Mark::Dead);  // provisional; settled on pop
    stack.push_back(std::move(frame));
    return std::nullopt;
  };

  auto first = enter(state);
  if (limited)
    return {OracleOutcome::ResourceLimitExceeded, explored, std::nullopt};
  if (first && *first == Mark::Safe)
    return {OracleOutcome::Safe, explored, MovePlan{}};

  // Iterative DFS. Moves strictly decrease the potential, so no state can
  // reappear while still on the stack and Safe/Dead marks are final. Frames
  // are addressed by index because enter() may grow the stack.
  std::optional<Mark> returned;
  std::uint64_t ticks = 0;
  while (!stack.empty()) {
    if ((++ticks & 0x3ff) == 0 && deadline.expired()) {
      limited = true;
      break;
    }
    std::size_t fi = stack.size() - 1;
    if (returned) {
      if (*returned == Mark::Safe) {
        chosen.emplace(stack[fi].key, stack[fi].moves[stack[fi].next]);
        seen[stack[fi].key] = Mark::Safe;
        returned = Mark::Safe;
        stack.pop_back();
        continue;
      }
      returned.reset();
      ++stack[fi].next;
    }
    if (stack[fi].next >= stack[fi].moves.size()) {
      seen[stack[fi].key] = Mark::Dead;
      returned = Mark::Dead;
      stack.pop_back();
      continue;
    }
    State child =
        apply_move(network, stack[fi].state, stack[fi].moves[stack[fi].next]);
    auto verdict = enter(std::move(child));
    if (limited) break;
    if (!verdict) continue;  // descended into a new frame
    if (*verdict == Mark::Safe) {
      chosen.emplace(stack[fi].key, stack[fi].moves[stack[fi].next]);
      seen[stack[fi].key] = Mark::Safe;
      returned = Mark::Safe;
      stack.pop_back();
    } else {
      ++stack[fi].next;
    }
  }

  if (limited)
    return {OracleOutcome::ResourceLimitExceeded, explored, std::nullopt};

  if (seen.at(canonical_state(state).bytes) == Mark::Dead)
    return {OracleOutcome::BoundToDeadlock, explored, std::nullopt};

  // Replay the chosen moves to materialize the witness.
  MovePlan witness;
  State current = state;
  while (!current.empty()) {
    const Move& m = chosen.at(canonical_state(current).bytes);
    witness.push_back(m);
    current = apply_move(network, current, m);
  }
  return {OracleOutcome::Safe, explored, std::move(witness)};
}

bool verify_plan(const Network& network, const State& state,
                 const MovePlan& plan) {
  try {
    return apply_plan(network, state, plan).empty();
  } catch (const Error&) {
    return false;
  }
}

DescendantSearch find_deadlocked_descendant(const Network& network,
                                            const State& state,
                                            SetStrength strength,
                                            const OracleLimits& limits) {
  struct Origin {
    std::string parent_key;
    Move move;
  };
  std::unordered_map<std::string, Origin> origin;  // how a state was reached
  std::deque<std::pair<State, std::string>> queue;
  DescendantSearch result;
  Deadline deadline{Clock::now(), limits.max_time_seconds};

  auto trace_back = [&](std::string key) {
    MovePlan path;
    while (true) {
      auto it = origin.find(key);
      if (it == origin.end() || it->second.parent_key.empty()) break;
      path.push_back(it->second.move);
      key = it->second.parent_key;
    }
    std::reverse(path.begin(), path.end());
    return path;
  };

  std::string root_key = canonical_state(state).bytes;
  origin.emplace(root_key, Origin{});
  queue.emplace_back(state, root_key);
  result.explored_states = 1;

  while (!queue.empty()) {
    if (deadline.expired()) return result;
    auto [current, key] = std::move(queue.front());
    queue.pop_front();

    if (find_deadlock_set(network, current, strength)) {
      result.path = trace_back(key);
      result.state = std::move(current);
      return result;
    }
    for (const Move& m : feasible_moves(network, current)) {
      State child = apply_move(network, current, m);
      std::string child_key = canonical_state(child).bytes;
      if (origin.contains(child_key)) continue;
      if (result.explored_states >= limits.max_states) return result;
      ++result.explored_states;
      origin.emplace(child_key, Origin{key, m});
      queue.emplace_back(std::move(child), std::move(child_key));
    }
  }
  result.exhausted = true;
  return result;
}

}  // namespace gridlock
