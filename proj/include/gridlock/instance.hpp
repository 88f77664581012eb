#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gridlock/core.hpp"

namespace gridlock {

// Parsed form of the line-oriented instance text:
//
//   # comment (to end of line); blank lines ignored
//   version 1
//   vertex <name> <capacity>
//   edge <name> <name>
//   item <count> <waypoint> <waypoint> ...
//
// The version line comes first; vertex names are single tokens. Documents
// returned by the library are normalized: comments stripped, edge endpoints
// in declaration-id order, items merged by route and sorted by (first
// waypoint's declaration id, waypoint id sequence).

struct VertexDecl {
  std::string id;
  int capacity = 1;
  int line = 0;  // 0 when synthesized

  friend bool operator==(const VertexDecl& a, const VertexDecl& b) {
    return a.id == b.id && a.capacity == b.capacity;
  }
};

struct EdgeDecl {
  std::string a;
  std::string b;
  int line = 0;

  friend bool operator==(const EdgeDecl& x, const EdgeDecl& y) {
    return x.a == y.a && x.b == y.b;
  }
};

struct ItemDecl {
  std::vector<std::string> route;
  int count = 1;
  int line = 0;

  friend bool operator==(const ItemDecl& a, const ItemDecl& b) {
    return a.route == b.route && a.count == b.count;
  }
};

struct InstanceDocument {
  int format_version = 1;
  std::vector<VertexDecl> vertices;
  std::vector<EdgeDecl> edges;
  std::vector<ItemDecl> items;

  bool operator==(const InstanceDocument&) const = default;
};

struct Instance {
  Network network;
  State state;
};

// Text -> normalized document. Syntax only (line structure, keywords,
// integers); name resolution and semantic checks happen in instantiate().
// Errors carry the offending line.
InstanceDocument parse_document(std::string_view text);

// Normalized document -> text. parse_document(serialize(d)) == d for every
// valid normalized document.
std::string serialize(const InstanceDocument& document);

// Resolves names, builds the network, places the items and validates the
// whole state. Errors reuse the validation codes (UnknownVertex,
// CapacityExceeded, EdgeMissing, ...) and carry the offending line where one
// exists.
Instance instantiate(const InstanceDocument& document);

// parse_document + instantiate.
Instance parse_instance(std::string_view text);

InstanceDocument to_document(const Network& network, const State& state);

// Reads and parses a file; IoError when unreadable.
Instance load_instance(const std::string& path);
std::string read_file(const std::string& path);

}  // namespace gridlock
