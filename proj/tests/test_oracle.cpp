#include <string>
#include <vector>

#include "doctest.h"
#include "gridlock/generate.hpp"
#include "gridlock/oracle.hpp"
#include "gridlock/plan.hpp"
#include "support.hpp"

using namespace gridlock;
using namespace gridlock::testing;

namespace {

// A double buffer feeding two unit buffers; safe, but one wrong move creates
// a mutual blockade of b and c.
const char* kTrap = R"(
  version 1
  vertex a 2
  vertex b 1
  vertex c 1
  edge a b
  edge b c
  item 1 a b c
  item 1 c b a
)";

// Long line of double buffers, every item headed for the far end. Safe, with
// a reachable space in the thousands; big enough that the search cannot
// finish before its first time check.
Instance long_line() {
  std::vector<std::string> names;
  std::vector<int> caps;
  std::vector<std::pair<VertexId, VertexId>> edges;
  const int n = 60;
  for (int i = 0; i < n; ++i) {
    names.push_back("v" + std::to_string(i));
    caps.push_back(2);
    if (i > 0) edges.emplace_back(VertexId{i - 1}, VertexId{i});
  }
  Network net(std::move(names), std::move(caps), edges);
  State st(net.size());
  for (int i = 0; i < 40; ++i) {
    std::vector<VertexId> w;
    for (int j = i; j < n; ++j) w.push_back(VertexId{j});
    st.place(Route(std::move(w)));
  }
  return Instance{std::move(net), std::move(st)};
}

}  // namespace

TEST_CASE("equal states encode identically regardless of build order") {
  State s1(4), s2(4);
  std::vector<VertexId> r1{VertexId{0}, VertexId{1}};
  std::vector<VertexId> r2{VertexId{0}, VertexId{2}};
  s1.place(Route(r1));
  s1.place(Route(r2));
  s1.place(Route(r1));
  s2.place(Route(r2));
  s2.place(Route(r1), 2);
  CHECK(canonical_state(s1) == canonical_state(s2));

  s2.place(Route(r1));
  CHECK(canonical_state(s1) != canonical_state(s2));
  CHECK(canonical_state(State(4)).bytes.empty());
}

TEST_CASE("exhaustive search classifies the bundled fixtures") {
  Instance ring = load_fixture("ring.inst");
  OracleResult rr = oracle_decide(ring.network, ring.state);
  CHECK(rr.outcome == OracleOutcome::Safe);
  CHECK(rr.explored_states == 13);
  REQUIRE(rr.witness_plan);
  CHECK(rr.witness_plan->size() == 12);  // equals the initial potential
  CHECK(verify_plan(ring.network, ring.state, *rr.witness_plan));

  Instance doomed = load_fixture("path-doomed.inst");
  OracleResult dr = oracle_decide(doomed.network, doomed.state);
  CHECK(dr.outcome == OracleOutcome::BoundToDeadlock);
  CHECK(!dr.witness_plan);

  Instance dense = load_fixture("path-dense.inst");
  CHECK(oracle_decide(dense.network, dense.state).outcome ==
        OracleOutcome::BoundToDeadlock);
}

TEST_CASE("the oracle agrees with plain recursion on small instances") {
  GeneratorConfig config;
  config.vertex_count = {2, 5};
  config.capacity = {1, 3};
  config.item_count = {1, 4};
  int tested = 0;
  for (std::uint64_t seed = 0; tested < 40 && seed < 400; ++seed) {
    config.seed = seed;
    InstanceDocument doc;
    try {
      doc = generate_instance(config);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::GenerationInfeasible) continue;
      throw;
    }
    Instance inst = instantiate(doc);
    bool safe = reaches_empty_plain(inst.network, inst.state);
    OracleResult result = oracle_decide(inst.network, inst.state);
    CHECK(result.outcome ==
          (safe ? OracleOutcome::Safe : OracleOutcome::BoundToDeadlock));
    if (result.witness_plan)
      CHECK(verify_plan(inst.network, inst.state, *result.witness_plan));
    ++tested;
  }
  CHECK(tested == 40);
}

TEST_CASE("a state budget cuts the search off deterministically") {
  Instance ring = load_fixture("ring.inst");
  OracleResult one =
      oracle_decide(ring.network, ring.state, OracleLimits{1, 60.0});
  CHECK(one.outcome == OracleOutcome::ResourceLimitExceeded);
  CHECK(one.explored_states == 1);
  CHECK(!one.witness_plan);

  OracleResult five =
      oracle_decide(ring.network, ring.state, OracleLimits{5, 60.0});
  CHECK(five.outcome == OracleOutcome::ResourceLimitExceeded);
  CHECK(five.explored_states == 5);

  // the full search needs 13 states; a budget of 13 just suffices
  OracleResult enough =
      oracle_decide(ring.network, ring.state, OracleLimits{13, 60.0});
  CHECK(enough.outcome == OracleOutcome::Safe);
}

TEST_CASE("a zero time budget cuts a long search off") {
  Instance inst = long_line();
  OracleResult full = oracle_decide(inst.network, inst.state);
  CHECK(full.outcome == OracleOutcome::Safe);
  CHECK(full.explored_states > 1024);  // large enough to reach a time check

  OracleResult timed =
      oracle_decide(inst.network, inst.state, OracleLimits{1'000'000, 0.0});
  CHECK(timed.outcome == OracleOutcome::ResourceLimitExceeded);
}

TEST_CASE("verify_plan accepts exactly the plans that empty the state") {
  Instance ring = load_fixture("ring.inst");
  MovePlan witness = *oracle_decide(ring.network, ring.state).witness_plan;
  CHECK(verify_plan(ring.network, ring.state, witness));

  MovePlan truncated(witness.begin(), witness.end() - 1);
  CHECK(!verify_plan(ring.network, ring.state, truncated));

  MovePlan reordered = witness;
  std::swap(reordered.front(), reordered.back());
  CHECK(!verify_plan(ring.network, ring.state, reordered));

  CHECK(!verify_plan(ring.network, ring.state, {}));
  CHECK(verify_plan(ring.network, State(ring.network.size()), {}));
}

TEST_CASE("a safe state can still reach a strongly deadlocked descendant") {
  Instance trap = make_instance(kTrap);
  CHECK(oracle_decide(trap.network, trap.state).outcome ==
        OracleOutcome::Safe);

  DescendantSearch found = find_deadlocked_descendant(
      trap.network, trap.state, SetStrength::Strong);
  REQUIRE(found.path);
  REQUIRE(found.state);
  CHECK(found.path->size() == 1);  // one wrong move suffices
  CHECK(!found.exhausted);
  auto set =
      find_deadlock_set(trap.network, *found.state, SetStrength::Strong);
  REQUIRE(set);
  CHECK(set_names(trap.network, set) == std::vector<std::string>{"b", "c"});
  // the path is replayable
  State reached = apply_plan(trap.network, trap.state, *found.path);
  CHECK(reached == *found.state);
}

TEST_CASE("a start state containing the set is found at distance zero") {
  Instance inst = make_instance(R"(
    version 1
    vertex a 1
    vertex b 1
    edge a b
    item 1 a b
    item 1 b a
  )");
  DescendantSearch found = find_deadlocked_descendant(
      inst.network, inst.state, SetStrength::Strong);
  REQUIRE(found.path);
  CHECK(found.path->empty());
  CHECK(found.explored_states == 1);
  CHECK(*found.state == inst.state);
}

TEST_CASE("descendant search can prove absence by exhaustion") {
  Instance ring = load_fixture("ring.inst");
  DescendantSearch none = find_deadlocked_descendant(
      ring.network, ring.state, SetStrength::Strong);
  CHECK(!none.path);
  CHECK(!none.state);
  CHECK(none.exhausted);
  // the ring's full reachable space; more than the 13 states the verdict
  // search needs because nothing here can stop early
  CHECK(none.explored_states == 80);

  // under a state budget the same search gives up without the proof
  DescendantSearch cut = find_deadlocked_descendant(
      ring.network, ring.state, SetStrength::Strong, OracleLimits{3, 60.0});
  CHECK(!cut.path);
  CHECK(!cut.exhausted);
  CHECK(cut.explored_states == 3);

  // likewise under a zero time budget
  DescendantSearch timed = find_deadlocked_descendant(
      ring.network, ring.state, SetStrength::Strong,
      OracleLimits{1'000'000, 0.0});
  CHECK(!timed.path);
  CHECK(!timed.exhausted);
}
