#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace igcensus {

/// Tuple domain for the outer-step bound: inclusive allows k <= floor(n/2),
/// strict requires k < n/2 (they differ only at even n).
enum class TupleConvention { kStrict, kInclusive };

/// A validated I-graph tuple (n, j, k): n outer and n inner vertices,
/// outer step j, inner step k, with 1 <= j <= k.
struct IGraphSpec {
  uint32_t n = 0;
  uint32_t j = 0;
  uint32_t k = 0;

  bool operator==(const IGraphSpec&) const = default;
};

bool is_valid_tuple(uint64_t n, uint64_t j, uint64_t k,
                    TupleConvention convention = TupleConvention::kInclusive);

/// Throws std::invalid_argument if the tuple is out of domain.
IGraphSpec make_spec(uint64_t n, uint64_t j, uint64_t k,
                     TupleConvention convention = TupleConvention::kInclusive);

/// Immutable undirected simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Deduplicates edges and drops self-loops.
  Graph(uint32_t vertex_count,
        std::vector<std::pair<uint32_t, uint32_t>> edges);

  uint32_t vertex_count() const { return vertex_count_; }
  uint64_t edge_count() const { return edge_count_; }
  std::span<const uint32_t> neighbors(uint32_t v) const {
    return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  uint32_t degree(uint32_t v) const {
    return static_cast<uint32_t>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(uint32_t u, uint32_t v) const;

  /// Sorted "u v" pairs with u < v, one per line.
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

  /// Set for graphs produced by build_igraph: vertices [0, rim) are the
  /// outer rim a_i and [rim, 2*rim) the inner rim b_i.
  uint32_t rim_size() const { return rim_size_; }

 private:
  friend Graph build_igraph(const IGraphSpec&);

  uint32_t vertex_count_ = 0;
  uint64_t edge_count_ = 0;
  uint32_t rim_size_ = 0;
  std::vector<uint32_t> offsets_{0};
  std::vector<uint32_t> adjacency_;
};

/// Vertices a_i -> i and b_i -> n + i; edges {a_i, a_{i+j}}, {a_i, b_i},
/// {b_i, b_{i+k}} for all i mod n, deduplicated into a simple graph.
Graph build_igraph(const IGraphSpec& spec);

/// True iff gcd(n,j) = 1 or gcd(n,k) = 1 (the graph is a generalised
/// Petersen graph exactly in this case).
bool is_gpg_tuple(const IGraphSpec& spec);

/// True iff gcd(n,j,k) = 1 (the graph is connected exactly in this case;
/// connected_components is the independent BFS oracle).
bool is_connected_tuple(const IGraphSpec& spec);

/// Number of connected components by BFS. An empty graph has 0.
uint32_t connected_components(const Graph& g);

enum class ExportFormat { kEdgeList, kDot };

/// kEdgeList: one "u v" line per edge, u < v, lexicographically sorted.
/// kDot: an undirected DOT document; I-graph vertices are named a0..b(n-1).
std::string export_graph(const Graph& g, ExportFormat format);

}  // namespace igcensus
