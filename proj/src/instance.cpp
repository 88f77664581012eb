#include "gridlock/instance.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <unordered_map>

namespace gridlock {

namespace {

int parse_int(const std::string& token, int line) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    fail_at_line(ErrorCode::SyntaxError, line, "expected integer, got \"" +
                                                   token + "\"");
  return value;
}

// Sort-and-merge key for items and edge endpoints: declaration index of a
// vertex name, names unknown to the document ordered last by name so that
// normalization never fails on a document instantiate() would reject anyway.
struct NameOrder {
  std::unordered_map<std::string, int> index;

  explicit NameOrder(const std::vector<VertexDecl>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
      index.emplace(vertices[i].id, static_cast<int>(i));
  }

  std::pair<int, const std::string*> key(const std::string& name) const {
    auto it = index.find(name);
    if (it == index.end())
      return {std::numeric_limits<int>::max(), &name};
    return {it->second, &name};
  }

  bool less(const std::string& a, const std::string& b) const {
    auto [ia, pa] = key(a);
    auto [ib, pb] = key(b);
    if (ia != ib) return ia < ib;
    return *pa < *pb;
  }

  bool route_less(const std::vector<std::string>& a,
                  const std::vector<std::string>& b) const {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(),
        [this](const std::string& x, const std::string& y) {
          return less(x, y);
        });
  }
};

void normalize(InstanceDocument& doc) {
  NameOrder order(doc.vertices);
  for (EdgeDecl& e : doc.edges)
    if (order.less(e.b, e.a)) std::swap(e.a, e.b);
  std::stable_sort(doc.items.begin(), doc.items.end(),
                   [&](const ItemDecl& x, const ItemDecl& y) {
                     return order.route_less(x.route, y.route);
                   });
  std::vector<ItemDecl> merged;
  for (ItemDecl& item : doc.items) {
    if (!merged.empty() && merged.back().route == item.route)
      merged.back().count += item.count;
    else
      merged.push_back(std::move(item));
  }
  doc.items = std::move(merged);
}

}  // namespace

InstanceDocument parse_document(std::string_view text) {
  InstanceDocument doc;
  std::istringstream stream{std::string(text)};
  std::string raw;
  int line_no = 0;
  bool saw_version = false;
  while (std::getline(stream, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(std::move(t));
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0];
    if (!saw_version) {
      if (kw != "version")
        fail_at_line(ErrorCode::SyntaxError, line_no,
                     "expected \"version 1\" before any declaration");
      if (tokens.size() != 2)
        fail_at_line(ErrorCode::SyntaxError, line_no,
                     "version takes one integer");
      doc.format_version = parse_int(tokens[1], line_no);
      if (doc.format_version != 1)
        fail_at_line(ErrorCode::SyntaxError, line_no,
                     "unsupported format version " +
                         std::to_string(doc.format_version));
      saw_version = true;
      continue;
    }
    if (kw == "version") {
      fail_at_line(ErrorCode::SyntaxError, line_no, "duplicate version line");
    } else if (kw == "vertex") {
      if (tokens.size() != 3)
        fail_at_line(ErrorCode::SyntaxError, line_no,
                     "vertex takes a name and a capacity");
      doc.vertices.push_back(
          VertexDecl{tokens[1], parse_int(tokens[2], line_no), line_no});
    } else if (kw == "edge") {
      if (tokens.size() != 3)
        fail_at_line(ErrorCode::SyntaxError, line_no,
                     "edge takes two vertex names");
      doc.edges.push_back(EdgeDecl{tokens[1], tokens[2], line_no});
    } else if (kw == "item") {
      if (tokens.size() < 4)
        fail_at_line(ErrorCode::SyntaxError, line_no,
                     "item takes a count and at least two waypoints");
      ItemDecl item;
      item.count = parse_int(tokens[1], line_no);
      item.route.assign(tokens.begin() + 2, tokens.end());
      item.line = line_no;
      doc.items.push_back(std::move(item));
    } else {
      fail_at_line(ErrorCode::SyntaxError, line_no,
                   "unknown keyword \"" + kw + "\"");
    }
  }
  if (!saw_version)
    fail(ErrorCode::SyntaxError, "missing \"version 1\" line");
  normalize(doc);
  return doc;
}

std::string serialize(const InstanceDocument& doc) {
  std::string out = "version " + std::to_string(doc.format_version) + "\n";
  for (const VertexDecl& v : doc.vertices)
    out += "vertex " + v.id + " " + std::to_string(v.capacity) + "\n";
  for (const EdgeDecl& e : doc.edges) out += "edge " + e.a + " " + e.b + "\n";
  for (const ItemDecl& item : doc.items) {
    out += "item " + std::to_string(item.count);
    for (const std::string& w : item.route) out += " " + w;
    out += "\n";
  }
  return out;
}

Instance instantiate(const InstanceDocument& doc) {
  std::unordered_map<std::string, VertexId> ids;
  std::vector<std::string> names;
  std::vector<int> capacities;
  for (const VertexDecl& v : doc.vertices) {
    if (v.capacity < 1)
      fail_at_line(ErrorCode::BadCapacity, v.line,
                   "vertex " + v.id + " has capacity " +
                       std::to_string(v.capacity) + "; must be >= 1");
    auto [_, inserted] = ids.emplace(
        v.id, VertexId{static_cast<std::int32_t>(names.size())});
    if (!inserted)
      fail_at_line(ErrorCode::DuplicateVertex, v.line,
                   "duplicate vertex " + v.id);
    names.push_back(v.id);
    capacities.push_back(v.capacity);
  }

  auto resolve = [&](const std::string& name, int line) {
    auto it = ids.find(name);
    if (it == ids.end())
      fail_at_line(ErrorCode::UnknownVertex, line,
                   "unknown vertex " + name);
    return it->second;
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  std::set<std::pair<std::int32_t, std::int32_t>> edge_seen;
  for (const EdgeDecl& e : doc.edges) {
    VertexId a = resolve(e.a, e.line);
    VertexId b = resolve(e.b, e.line);
    if (a == b)
      fail_at_line(ErrorCode::SelfLoop, e.line, "self-loop at " + e.a);
    auto lo = std::min(a.value, b.value);
    auto hi = std::max(a.value, b.value);
    if (!edge_seen.emplace(lo, hi).second)
      fail_at_line(ErrorCode::DuplicateEdge, e.line,
                   "duplicate edge " + e.a + " " + e.b);
    edges.emplace_back(a, b);
  }

  Network network(std::move(names), std::move(capacities), edges);
  State state(network.size());
  for (const ItemDecl& item : doc.items) {
    if (item.count < 1)
      fail_at_line(ErrorCode::BadItemCount, item.line,
                   "item count must be >= 1");
    std::vector<VertexId> waypoints;
    waypoints.reserve(item.route.size());
    for (const std::string& w : item.route)
      waypoints.push_back(resolve(w, item.line));
    Route route(std::move(waypoints));
    if (route.length() < 2)
      fail_at_line(ErrorCode::ZeroLengthRoute, item.line,
                   "route needs at least two waypoints");
    for (std::size_t i = 0; i + 1 < route.length(); ++i)
      if (!network.adjacent(route.at(i), route.at(i + 1)))
        fail_at_line(ErrorCode::EdgeMissing, item.line,
                     "no edge " + item.route[i] + " " + item.route[i + 1]);
    VertexId origin = route.origin();
    state.place_at(origin, std::move(route), item.count);
    if (state.occupancy(origin) > network.capacity(origin))
      fail_at_line(ErrorCode::CapacityExceeded, item.line,
                   "vertex " + item.route.front() + " over capacity");
  }
  validate(network, state);  // authoritative recheck (simplicity and rest)
  return Instance{std::move(network), std::move(state)};
}

Instance parse_instance(std::string_view text) {
  return instantiate(parse_document(text));
}

InstanceDocument to_document(const Network& network, const State& state) {
  InstanceDocument doc;
  doc.format_version = 1;
  for (VertexId v : network.vertices())
    doc.vertices.push_back(VertexDecl{std::string(network.name(v)),
                                      network.capacity(v), 0});
  for (auto [a, b] : network.edges())
    doc.edges.push_back(EdgeDecl{std::string(network.name(a)),
                                 std::string(network.name(b)), 0});
  for (VertexId v : network.vertices()) {
    for (const PlacedRoute& item : state.routes_at(v)) {
      ItemDecl decl;
      decl.count = item.count;
      for (VertexId w : item.route.waypoints())
        decl.route.push_back(std::string(network.name(w)));
      doc.items.push_back(std::move(decl));
    }
  }
  return doc;  // already normalized: state iteration is sorted
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Instance load_instance(const std::string& path) {
  return parse_instance(read_file(path));
}

}  // namespace gridlock
