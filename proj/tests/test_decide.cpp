#include <algorithm>

#include "doctest.h"
#include "gridlock/decide.hpp"
#include "support.hpp"

using namespace gridlock;
using namespace gridlock::testing;

namespace {

// One stored item on a full unit buffer that nothing routes through: not
// wise, but relaxed-wise.
const char* kLoneStarter = R"(
  version 1
  vertex a 1
  vertex b 1
  vertex c 1
  edge a b
  edge b c
  item 1 a b
)";

}  // namespace

TEST_CASE("wiseness of the bundled fixtures") {
  Instance ring = load_fixture("ring.inst");
  CHECK(is_wise(ring.network, ring.state));
  CHECK(satisfies_relaxed_wise(ring.network, ring.state));

  // A and E are full unit buffers
  Instance doomed = load_fixture("path-doomed.inst");
  CHECK(!is_wise(doomed.network, doomed.state));
  // and A is the wise follower of the route stored as C B A
  CHECK(!satisfies_relaxed_wise(doomed.network, doomed.state));

  Instance dense = load_fixture("path-dense.inst");
  CHECK(!is_wise(dense.network, dense.state));
  CHECK(!satisfies_relaxed_wise(dense.network, dense.state));

  CHECK(is_wise(ring.network, State(ring.network.size())));
}

TEST_CASE("relaxed wiseness tolerates unreferenced full unit buffers") {
  Instance inst = make_instance(kLoneStarter);
  CHECK(!is_wise(inst.network, inst.state));
  CHECK(satisfies_relaxed_wise(inst.network, inst.state));
}

TEST_CASE("leaf-wiseness asks every full unit buffer to be a leaf") {
  Instance doomed = load_fixture("path-doomed.inst");
  CHECK(is_leaf_wise_tree(doomed.network, doomed.state));

  // B is an internal full unit buffer
  Instance dense = load_fixture("path-dense.inst");
  CHECK(!is_leaf_wise_tree(dense.network, dense.state));

  Instance leafy = make_instance(kLoneStarter);
  CHECK(is_leaf_wise_tree(leafy.network, leafy.state));

  Instance mid = make_instance(R"(
    version 1
    vertex a 1
    vertex b 1
    vertex c 1
    edge a b
    edge b c
    item 1 b c
  )");
  CHECK(!is_leaf_wise_tree(mid.network, mid.state));

  Instance ring = load_fixture("ring.inst");
  CHECK(thrown_code([&] { is_leaf_wise_tree(ring.network, ring.state); }) ==
        ErrorCode::NotATree);
}

TEST_CASE("a strong deadlock set forces BoundToDeadlock") {
  Instance inst = make_instance(R"(
    version 1
    vertex a 1
    vertex b 1
    edge a b
    item 1 a b
    item 1 b a
  )");
  Verdict v = decide(inst.network, inst.state);
  CHECK(v.outcome == Outcome::BoundToDeadlock);
  CHECK(v.justification == Justification::StrongDeadlockPresent);
  REQUIRE(v.witness);
  CHECK(set_names(inst.network, v.witness) ==
        std::vector<std::string>{"a", "b"});
}

TEST_CASE("a strong deadlock set wins even when every buffer is large") {
  // saturated directed triangle with capacity 2 everywhere; the capacity
  // rule alone would claim Safe, so rule order matters
  Instance inst = make_instance(R"(
    version 1
    vertex a 2
    vertex b 2
    vertex c 2
    edge a b
    edge b c
    edge c a
    item 2 a b
    item 2 b c
    item 2 c a
  )");
  Verdict v = decide(inst.network, inst.state);
  CHECK(v.outcome == Outcome::BoundToDeadlock);
  CHECK(v.justification == Justification::StrongDeadlockPresent);
  REQUIRE(v.witness);
  CHECK(v.witness->vertices.size() == 3);
}

TEST_CASE("without strong sets, buffers of size two decide Safe") {
  Instance inst = make_instance(R"(
    version 1
    vertex a 2
    vertex b 2
    vertex c 2
    edge a b
    edge b c
    item 2 a b c
    item 1 b a
    item 2 c b
  )");
  Verdict v = decide(inst.network, inst.state);
  CHECK(v.outcome == Outcome::Safe);
  CHECK(v.justification == Justification::NoStrongDeadlockAllBuffersAtLeast2);
  CHECK(!v.witness);
}

TEST_CASE("wise states without weak deadlock sets decide Safe") {
  Instance inst = make_instance(R"(
    version 1
    vertex A 2
    vertex B 2
    vertex C 2
    vertex D 1
    vertex E 1
    vertex F 1
    edge A E
    edge B E
    edge B F
    edge C F
    edge C D
    edge A D
    item 1 A E B
    item 2 B F C
    item 2 C D A
  )");
  Verdict v = decide(inst.network, inst.state);
  CHECK(v.outcome == Outcome::Safe);
  CHECK(v.justification == Justification::NoWeakDeadlockWise);

  // the relaxed form of wiseness is enough
  Instance lone = make_instance(kLoneStarter);
  Verdict lv = decide(lone.network, lone.state);
  CHECK(lv.outcome == Outcome::Safe);
  CHECK(lv.justification == Justification::NoWeakDeadlockWise);
}

TEST_CASE("on trees a weak deadlock set decides BoundToDeadlock") {
  Instance doomed = load_fixture("path-doomed.inst");
  Verdict v = decide(doomed.network, doomed.state);
  CHECK(v.outcome == Outcome::BoundToDeadlock);
  CHECK(v.justification == Justification::WeakDeadlockOnTree);
  REQUIRE(v.witness);
  CHECK(set_names(doomed.network, v.witness) ==
        std::vector<std::string>{"A", "C", "E"});
}

TEST_CASE("states outside every rule stay Unknown") {
  Instance ring = load_fixture("ring.inst");
  Verdict rv = decide(ring.network, ring.state);
  CHECK(rv.outcome == Outcome::Unknown);
  CHECK(rv.justification == Justification::TheoremInapplicable);
  CHECK(!rv.witness);

  Instance dense = load_fixture("path-dense.inst");
  Verdict dv = decide(dense.network, dense.state);
  CHECK(dv.outcome == Outcome::Unknown);
  CHECK(dv.justification == Justification::TheoremInapplicable);
}

TEST_CASE("the empty state is always Safe") {
  Instance ring = load_fixture("ring.inst");
  Verdict v = decide(ring.network, State(ring.network.size()));
  CHECK(v.outcome == Outcome::Safe);
}

TEST_CASE("the verdict does not depend on declaration order") {
  Instance reordered = make_instance(R"(
    version 1
    vertex E 1
    vertex D 1
    vertex C 2
    vertex B 1
    vertex A 1
    edge A B
    edge B C
    edge C D
    edge D E
    item 1 A B C D E
    item 1 C B A
    item 1 C D E
    item 1 E D C B A
  )");
  Instance doomed = load_fixture("path-doomed.inst");
  Verdict a = decide(doomed.network, doomed.state);
  Verdict b = decide(reordered.network, reordered.state);
  CHECK(a.outcome == b.outcome);
  CHECK(a.justification == b.justification);
  REQUIRE(a.witness);
  REQUIRE(b.witness);
  auto left = set_names(doomed.network, a.witness);
  auto right = set_names(reordered.network, b.witness);
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  CHECK(left == right);
}

TEST_CASE("verdicts never contradict exhaustive search on small instances") {
  auto cases = {
      "ring.inst",
      "path-doomed.inst",
      "path-dense.inst",
  };
  for (const char* name : cases) {
    Instance inst = load_fixture(name);
    Verdict v = decide(inst.network, inst.state);
    bool safe = reaches_empty_plain(inst.network, inst.state);
    if (v.outcome == Outcome::Safe) CHECK(safe);
    if (v.outcome == Outcome::BoundToDeadlock) CHECK(!safe);
  }
}
