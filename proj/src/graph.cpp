#include "proxygames/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

namespace proxygames::graph {

std::vector<std::vector<std::size_t>> strongly_connected_components(const Adjacency& graph) {
  const std::size_t n = graph.size();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t counter = 0;

  // Iterative DFS; frames hold (vertex, next successor position).
  std::vector<std::pair<std::size_t, std::size_t>> frames;
  for (std::size_t start = 0; start < n; ++start) {
    if (number[start] != unvisited) continue;
    frames.emplace_back(start, 0);
    number[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < graph[v].size()) {
        std::size_t w = graph[v][pos++];
        if (number[w] == unvisited) {
          number[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], number[w]);
        }
        continue;
      }
      std::size_t done = v;
      frames.pop_back();
      if (!frames.empty()) low[frames.back().first] = std::min(low[frames.back().first], low[done]);
      if (low[done] == number[done]) {
        std::vector<std::size_t> component;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != done);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

std::vector<std::vector<std::size_t>> closed_components(const Adjacency& graph) {
  auto components = strongly_connected_components(graph);
  std::vector<std::size_t> component_of(graph.size());
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (std::size_t v : components[c]) component_of[v] = c;
  }
  std::vector<std::vector<std::size_t>> closed;
  for (std::size_t c = 0; c < components.size(); ++c) {
    bool leaves = false;
    for (std::size_t v : components[c]) {
      for (std::size_t w : graph[v]) leaves = leaves || component_of[w] != c;
    }
    if (!leaves) closed.push_back(components[c]);
  }
  return closed;
}

std::vector<std::optional<Rational>> shortest_distances(const WeightedAdjacency& graph,
                                                        const std::vector<std::size_t>& sources) {
  std::vector<std::optional<Rational>> dist(graph.size());
  using Entry = std::pair<Rational, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  for (std::size_t s : sources) {
    dist[s] = Rational(0);
    queue.emplace(Rational(0), s);
  }
  std::vector<bool> settled(graph.size(), false);
  while (!queue.empty()) {
    auto [d, v] = queue.top();
    queue.pop();
    if (settled[v]) continue;
    settled[v] = true;
    for (const auto& arc : graph[v]) {
      Rational candidate = d + arc.weight;
      if (!dist[arc.to] || candidate < *dist[arc.to]) {
        dist[arc.to] = candidate;
        queue.emplace(std::move(candidate), arc.to);
      }
    }
  }
  return dist;
}

namespace {

struct Arc {
  std::size_t from, to;
  Rational weight;
};

// Minimum spanning out-arborescence (every non-root node has one incoming arc).
std::optional<Rational> min_out_arborescence(std::size_t n, std::size_t root, std::vector<Arc> arcs) {
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  Rational total = 0;
  while (true) {
    std::vector<std::optional<Rational>> best_in(n);
    std::vector<std::size_t> parent(n, none);
    for (const auto& arc : arcs) {
      if (arc.from == arc.to || arc.to == root) continue;
      if (!best_in[arc.to] || arc.weight < *best_in[arc.to]) {
        best_in[arc.to] = arc.weight;
        parent[arc.to] = arc.from;
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (v != root && !best_in[v]) return std::nullopt;
    }

    std::vector<std::size_t> cycle_id(n, none), visit(n, none);
    std::size_t cycles = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (v == root) continue;
      total += *best_in[v];
      std::size_t u = v;
      while (u != root && visit[u] != v && cycle_id[u] == none) {
        visit[u] = v;
        u = parent[u];
      }
      if (u != root && cycle_id[u] == none && visit[u] == v) {
        for (std::size_t x = parent[u]; x != u; x = parent[x]) cycle_id[x] = cycles;
        cycle_id[u] = cycles++;
      }
    }
    if (cycles == 0) return total;

    for (std::size_t v = 0; v < n; ++v) {
      if (cycle_id[v] == none) cycle_id[v] = cycles++;
    }
    std::vector<Arc> contracted;
    for (const auto& arc : arcs) {
      std::size_t from = cycle_id[arc.from], to = cycle_id[arc.to];
      if (from == to) continue;
      Rational weight = arc.weight;
      if (arc.to != root) weight -= *best_in[arc.to];
      contracted.push_back({from, to, std::move(weight)});
    }
    n = cycles;
    root = cycle_id[root];
    arcs = std::move(contracted);
  }
}

}  // namespace

std::optional<Rational> min_in_arborescence(const ArcMatrix& arcs, std::size_t root) {
  std::vector<Arc> reversed;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = 0; j < arcs[i].size(); ++j) {
      if (i != j && arcs[i][j]) reversed.push_back({j, i, *arcs[i][j]});
    }
  }
  return min_out_arborescence(arcs.size(), root, std::move(reversed));
}

}  // namespace proxygames::graph
