#include "gridlock/generate.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace gridlock {

namespace {

// Bounded draws use raw mt19937_64 output with a modulo, so generated
// instances are identical on every platform; the slight modulo bias is
// irrelevant here.
int draw(std::mt19937_64& rng, int lo, int hi) {
  if (lo >= hi) return lo;
  return lo + static_cast<int>(rng() %
                               static_cast<std::uint64_t>(hi - lo + 1));
}

int draw_range(std::mt19937_64& rng, IntRange range) {
  return draw(rng, range.lo, range.hi);
}

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& v) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[static_cast<std::size_t>(
                            draw(rng, 0, static_cast<int>(i) - 1))]);
}

struct Builder {
  std::mt19937_64 rng;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> adjacency;

  void add_edge(int a, int b) {
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }

  void finish_edges() {
    adjacency.assign(n, {});
    for (auto [a, b] : edges) {
      adjacency[a].push_back(b);
      adjacency[b].push_back(a);
    }
    for (auto& list : adjacency) std::sort(list.begin(), list.end());
  }

  // Randomized depth-first walk; the network is connected, so a simple path
  // to the destination always exists and the search finds one.
  bool extend_path(std::vector<int>& path, std::vector<char>& on_path,
                   int destination) {
    int current = path.back();
    if (current == destination) return true;
    std::vector<int> order = adjacency[current];
    shuffle(rng, order);
    for (int next : order) {
      if (on_path[next]) continue;
      path.push_back(next);
      on_path[next] = 1;
      if (extend_path(path, on_path, destination)) return true;
      on_path[next] = 0;
      path.pop_back();
    }
    return false;
  }

  std::vector<int> random_simple_path(int from, int to) {
    std::vector<int> path{from};
    std::vector<char> on_path(n, 0);
    on_path[from] = 1;
    extend_path(path, on_path, to);
    return path;
  }
};

}  // namespace

const char* to_string(Topology topology) {
  switch (topology) {
    case Topology::Tree: return "tree";
    case Topology::Line: return "line";
    case Topology::Grid: return "grid";
    case Topology::RandomConnected: return "random";
  }
  return "?";
}

InstanceDocument generate_instance(const GeneratorConfig& config) {
  if (config.vertex_count.lo < 1 ||
      config.vertex_count.lo > config.vertex_count.hi)
    fail(ErrorCode::GenerationInfeasible, "bad vertex count range");
  if (config.capacity.lo < 1 || config.capacity.lo > config.capacity.hi)
    fail(ErrorCode::GenerationInfeasible, "bad capacity range");
  if (config.item_count.lo < 0 || config.item_count.lo > config.item_count.hi)
    fail(ErrorCode::GenerationInfeasible, "bad item count range");

  Builder b;
  b.rng = std::mt19937_64{config.seed};
  switch (config.topology) {
    case Topology::Line:
      b.n = draw_range(b.rng, config.vertex_count);
      for (int i = 0; i + 1 < b.n; ++i) b.add_edge(i, i + 1);
      break;
    case Topology::Tree:
      b.n = draw_range(b.rng, config.vertex_count);
      // Attach each new vertex to a random earlier one.
      for (int i = 1; i < b.n; ++i) b.add_edge(i, draw(b.rng, 0, i - 1));
      break;
    case Topology::Grid: {
      std::vector<std::pair<int, int>> shapes;
      for (int rows = 1; rows <= config.vertex_count.hi; ++rows)
        for (int cols = rows;; ++cols) {
          int cells = rows * cols;
          if (cells > config.vertex_count.hi) break;
          if (cells >= config.vertex_count.lo) {
            shapes.emplace_back(rows, cols);
            if (rows != cols) shapes.emplace_back(cols, rows);
          }
        }
      if (shapes.empty())
        fail(ErrorCode::GenerationInfeasible,
             "no grid shape fits the vertex count range");
      std::sort(shapes.begin(), shapes.end());
      auto [rows, cols] =
          shapes[static_cast<std::size_t>(
              draw(b.rng, 0, static_cast<int>(shapes.size()) - 1))];
      b.n = rows * cols;
      for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
          int id = r * cols + c;
          if (c + 1 < cols) b.add_edge(id, id + 1);
          if (r + 1 < rows) b.add_edge(id, id + cols);
        }
      break;
    }
    case Topology::RandomConnected: {
      b.n = draw_range(b.rng, config.vertex_count);
      for (int i = 1; i < b.n; ++i) b.add_edge(i, draw(b.rng, 0, i - 1));
      std::vector<std::pair<int, int>> spare;
      std::set<std::pair<int, int>> used(b.edges.begin(), b.edges.end());
      for (int i = 0; i < b.n; ++i)
        for (int j = i + 1; j < b.n; ++j)
          if (!used.contains({i, j})) spare.emplace_back(i, j);
      shuffle(b.rng, spare);
      int extra = draw(b.rng, 0, std::min<int>(static_cast<int>(spare.size()),
                                               b.n));
      for (int i = 0; i < extra; ++i) b.add_edge(spare[i].first,
                                                 spare[i].second);
      break;
    }
  }
  b.finish_edges();

  std::vector<int> capacity(b.n);
  for (int& c : capacity) c = draw_range(b.rng, config.capacity);

  int items = draw_range(b.rng, config.item_count);
  auto eligible = [&](int v) {
    return !config.force_wise || capacity[v] >= 2;
  };
  int room = 0;
  for (int v = 0; v < b.n; ++v)
    if (eligible(v)) room += capacity[v];
  if (items > room)
    fail(ErrorCode::GenerationInfeasible,
         std::to_string(items) + " items drawn but only " +
             std::to_string(room) + " eligible slots");
  if (items > 0 && b.n < 2)
    fail(ErrorCode::GenerationInfeasible,
         "items need a destination distinct from their start");

  std::vector<int> occupancy(b.n, 0);
  std::vector<std::vector<int>> routes;
  for (int k = 0; k < items; ++k) {
    std::vector<int> pool;
    for (int v = 0; v < b.n; ++v)
      if (eligible(v) && occupancy[v] < capacity[v]) pool.push_back(v);
    int start = pool[static_cast<std::size_t>(
        draw(b.rng, 0, static_cast<int>(pool.size()) - 1))];
    int destination = draw(b.rng, 0, b.n - 2);
    if (destination >= start) ++destination;
    routes.push_back(b.random_simple_path(start, destination));
    ++occupancy[start];
  }

  InstanceDocument doc;
  doc.format_version = 1;
  auto name = [](int v) { return "v" + std::to_string(v); };
  for (int v = 0; v < b.n; ++v)
    doc.vertices.push_back(VertexDecl{name(v), capacity[v], 0});
  std::sort(b.edges.begin(), b.edges.end());
  for (auto [x, y] : b.edges)
    doc.edges.push_back(EdgeDecl{name(x), name(y), 0});
  // Order and merge by vertex index, matching document normalization (which
  // orders by declaration position, not by name text).
  std::sort(routes.begin(), routes.end());
  for (const auto& route : routes) {
    ItemDecl item;
    item.count = 1;
    for (int w : route) item.route.push_back(name(w));
    if (!doc.items.empty() && doc.items.back().route == item.route)
      doc.items.back().count += 1;
    else
      doc.items.push_back(std::move(item));
  }
  return doc;
}

}  // namespace gridlock
