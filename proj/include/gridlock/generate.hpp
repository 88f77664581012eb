#pragma once

#include <cstdint>

#include "gridlock/instance.hpp"

namespace gridlock {

enum class Topology { Tree, Line, Grid, RandomConnected };

const char* to_string(Topology topology);

// Inclusive integer range.
struct IntRange {
  int lo = 0;
  int hi = 0;

  bool operator==(const IntRange&) const = default;
};

struct GeneratorConfig {
  std::uint64_t seed = 0;
  Topology topology = Topology::RandomConnected;
  IntRange vertex_count{4, 8};
  IntRange capacity{1, 3};
  IntRange item_count{1, 4};
  // Place items only on vertices with capacity >= 2, so no unit buffer ever
  // starts full.
  bool force_wise = false;
};

// Seeded, deterministic: identical configs produce identical documents, on
// any platform (all randomness comes from mt19937_64 raw output). Vertices
// are named v0, v1, ...; the drawn topology is connected; every item gets a
// random simple path to a random other vertex. GenerationInfeasible when the
// drawn item count cannot be placed within the (eligible) capacities.
InstanceDocument generate_instance(const GeneratorConfig& config);

}  // namespace gridlock
