#include "igraph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "numtheory.hpp"

namespace igcensus {

bool is_valid_tuple(uint64_t n, uint64_t j, uint64_t k,
                    TupleConvention convention) {
  if (n < 3 || j < 1 || j > k || k > n / 2) return false;
  return convention == TupleConvention::kInclusive || 2 * k != n;
}

IGraphSpec make_spec(uint64_t n, uint64_t j, uint64_t k,
                     TupleConvention convention) {
  if (!is_valid_tuple(n, j, k, convention)) {
    throw std::invalid_argument(
        "invalid I-graph tuple (" + std::to_string(n) + ", " +
        std::to_string(j) + ", " + std::to_string(k) +
        "): need n >= 3, 1 <= j <= k, k " +
        (convention == TupleConvention::kInclusive ? "<= n/2" : "< n/2"));
  }
  return {static_cast<uint32_t>(n), static_cast<uint32_t>(j),
          static_cast<uint32_t>(k)};
}

Graph::Graph(uint32_t vertex_count,
             std::vector<std::pair<uint32_t, uint32_t>> edges)
    : vertex_count_(vertex_count) {
  for (auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edge_count_ = edges.size();

  std::vector<uint32_t> degree(vertex_count, 0);
  for (const auto& [u, v] : edges) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(vertex_count + 1, 0);
  for (uint32_t v = 0; v < vertex_count; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  adjacency_.resize(2 * edges.size());
  std::vector<uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    adjacency_[cursor[u]++] = v;
    adjacency_[cursor[v]++] = u;
  }
  for (uint32_t v = 0; v < vertex_count; ++v) {
    std::sort(adjacency_.begin() + offsets_[v],
              adjacency_.begin() + offsets_[v + 1]);
  }
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  const auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(edge_count_);
  for (uint32_t u = 0; u < vertex_count_; ++u) {
    for (uint32_t v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph build_igraph(const IGraphSpec& spec) {
  if (!is_valid_tuple(spec.n, spec.j, spec.k, TupleConvention::kInclusive)) {
    throw std::invalid_argument("build_igraph: invalid tuple");
  }
  const uint32_t n = spec.n;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(3 * static_cast<size_t>(n));
  for (uint32_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + spec.j) % n);          // outer rim
    edges.emplace_back(i, n + i);                     // spoke
    edges.emplace_back(n + i, n + (i + spec.k) % n);  // inner rim
  }
  Graph g(2 * n, std::move(edges));
  g.rim_size_ = n;
  return g;
}

bool is_gpg_tuple(const IGraphSpec& spec) {
  return std::gcd(spec.n, spec.j) == 1 || std::gcd(spec.n, spec.k) == 1;
}

bool is_connected_tuple(const IGraphSpec& spec) {
  return gcd3(spec.n, spec.j, spec.k) == 1;
}

uint32_t connected_components(const Graph& g) {
  const uint32_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  uint32_t components = 0;
  std::queue<uint32_t> queue;
  for (uint32_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    queue.push(start);
    while (!queue.empty()) {
      const uint32_t u = queue.front();
      queue.pop();
      for (uint32_t v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push(v);
        }
      }
    }
  }
  return components;
}

namespace {

std::string vertex_name(const Graph& g, uint32_t v) {
  const uint32_t rim = g.rim_size();
  if (rim == 0) return "v" + std::to_string(v);
  return v < rim ? "a" + std::to_string(v) : "b" + std::to_string(v - rim);
}

}  // namespace

std::string export_graph(const Graph& g, ExportFormat format) {
  std::ostringstream out;
  switch (format) {
    case ExportFormat::kEdgeList:
      for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
      }
      return out.str();
    case ExportFormat::kDot: {
      out << "graph {\n";
      for (uint32_t v = 0; v < g.vertex_count(); ++v) {
        out << "  " << vertex_name(g, v) << ";\n";
      }
      for (const auto& [u, v] : g.edges()) {
        out << "  " << vertex_name(g, u) << " -- " << vertex_name(g, v)
            << ";\n";
      }
      out << "}\n";
      return out.str();
    }
  }
  throw std::invalid_argument("export_graph: unknown format");
}

}  // namespace igcensus
