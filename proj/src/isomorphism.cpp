#include "isomorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

namespace igcensus {
namespace {

constexpr uint32_t kUnreachable = UINT32_MAX;

// Row-major adjacency bit matrix; `stride` 64-bit words per row.
struct BitMatrix {
  uint32_t stride = 0;
  std::vector<uint64_t> bits;

  explicit BitMatrix(const Graph& g)
      : stride((g.vertex_count() + 63) / 64),
        bits(static_cast<size_t>(g.vertex_count()) * stride) {
    for (uint32_t u = 0; u < g.vertex_count(); ++u) {
      for (uint32_t v : g.neighbors(u)) {
        bits[static_cast<size_t>(u) * stride + v / 64] |= uint64_t{1}
                                                          << (v % 64);
      }
    }
  }

  bool test(uint32_t u, uint32_t v) const {
    return (bits[static_cast<size_t>(u) * stride + v / 64] >> (v % 64)) & 1u;
  }
};

std::vector<uint32_t> bfs_distances(const Graph& g, uint32_t source) {
  std::vector<uint32_t> dist(g.vertex_count(), kUnreachable);
  dist[source] = 0;
  std::queue<uint32_t> queue;
  queue.push(source);
  while (!queue.empty()) {
    uint32_t u = queue.front();
    queue.pop();
    for (uint32_t v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

// One sorted BFS-distance row per vertex: a relabelling-invariant vertex
// signature that refines the degree (the count of 1s is the degree).
std::vector<std::vector<uint32_t>> distance_signatures(const Graph& g) {
  std::vector<std::vector<uint32_t>> rows(g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v) {
    rows[v] = bfs_distances(g, v);
    std::sort(rows[v].begin(), rows[v].end());
  }
  return rows;
}

// Vertices of `a` in BFS order so that all but component roots attach to an
// already-ordered vertex; keeps the backtracking tree shallow.
std::vector<uint32_t> search_order(const Graph& a) {
  std::vector<uint32_t> order;
  order.reserve(a.vertex_count());
  std::vector<bool> seen(a.vertex_count(), false);
  for (uint32_t root = 0; root < a.vertex_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<uint32_t> queue;
    queue.push(root);
    while (!queue.empty()) {
      uint32_t u = queue.front();
      queue.pop();
      order.push_back(u);
      for (uint32_t v : a.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push(v);
        }
      }
    }
  }
  return order;
}

struct MatchState {
  const BitMatrix& adj_a;
  const BitMatrix& adj_b;
  const std::vector<uint32_t>& order;
  const std::vector<uint32_t>& sig_a;                   // signature id per a-vertex
  const std::vector<std::vector<uint32_t>>& buckets_b;  // b-vertices per id
  std::vector<uint32_t> image;                          // a-vertex -> b-vertex
  std::vector<bool> used;                               // b-vertex taken

  bool extend(size_t position) {
    if (position == order.size()) return true;
    uint32_t u = order[position];
    for (uint32_t v : buckets_b[sig_a[u]]) {
      if (used[v]) continue;
      bool consistent = true;
      for (size_t earlier = 0; earlier < position; ++earlier) {
        uint32_t w = order[earlier];
        if (adj_a.test(u, w) != adj_b.test(v, image[w])) {
          consistent = false;
          break;
        }
      }
      if (!consistent) continue;
      image[u] = v;
      used[v] = true;
      if (extend(position + 1)) return true;
      used[v] = false;
    }
    return false;
  }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  if (a.edge_count() != b.edge_count()) return false;
  if (a.vertex_count() == 0) return true;

  auto degrees = [](const Graph& g) {
    std::vector<uint32_t> d(g.vertex_count());
    for (uint32_t v = 0; v < g.vertex_count(); ++v) d[v] = g.degree(v);
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degrees(a) != degrees(b)) return false;

  auto rows_a = distance_signatures(a);
  auto rows_b = distance_signatures(b);

  // Shared signature -> id table; per-id multiplicities must agree.
  std::map<std::vector<uint32_t>, uint32_t> ids;
  auto assign = [&ids](const std::vector<std::vector<uint32_t>>& rows) {
    std::vector<uint32_t> out(rows.size());
    for (size_t v = 0; v < rows.size(); ++v) {
      auto [it, inserted] =
          ids.emplace(rows[v], static_cast<uint32_t>(ids.size()));
      out[v] = it->second;
    }
    return out;
  };
  std::vector<uint32_t> sig_a = assign(rows_a);
  std::vector<uint32_t> sig_b = assign(rows_b);

  std::vector<std::vector<uint32_t>> buckets_b(ids.size());
  for (uint32_t v = 0; v < b.vertex_count(); ++v) buckets_b[sig_b[v]].push_back(v);
  std::vector<uint64_t> count_a(ids.size(), 0);
  for (uint32_t v = 0; v < a.vertex_count(); ++v) ++count_a[sig_a[v]];
  for (size_t id = 0; id < ids.size(); ++id) {
    if (count_a[id] != buckets_b[id].size()) return false;
  }

  BitMatrix adj_a(a);
  BitMatrix adj_b(b);
  std::vector<uint32_t> order = search_order(a);
  MatchState state{adj_a,
                   adj_b,
                   order,
                   sig_a,
                   buckets_b,
                   std::vector<uint32_t>(a.vertex_count(), 0),
                   std::vector<bool>(b.vertex_count(), false)};
  return state.extend(0);
}

IsoClassPartition enumerate_classes(uint32_t n, TupleConvention convention,
                                    uint32_t brute_cap) {
  constexpr uint32_t kHardCap = 20;
  if (brute_cap < 3 || brute_cap > kHardCap) {
    throw std::invalid_argument("brute_cap must be in [3, 20]");
  }
  if (n < 3 || n > brute_cap) {
    throw std::invalid_argument("n must be in [3, brute_cap]");
  }

  std::vector<IGraphSpec> tuples;
  for (uint32_t k = 1; k <= n / 2; ++k) {
    for (uint32_t j = 1; j <= k; ++j) {
      if (is_valid_tuple(n, j, k, convention)) tuples.push_back({n, j, k});
    }
  }

  std::vector<Graph> graphs;
  graphs.reserve(tuples.size());
  for (const IGraphSpec& spec : tuples) graphs.push_back(build_igraph(spec));

  std::vector<size_t> parent(tuples.size());
  std::iota(parent.begin(), parent.end(), size_t{0});
  auto find = [&parent](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (size_t i = 0; i < tuples.size(); ++i) {
    for (size_t j = i + 1; j < tuples.size(); ++j) {
      size_t ri = find(i);
      size_t rj = find(j);
      if (ri == rj) continue;
      if (are_isomorphic(graphs[i], graphs[j])) parent[rj] = ri;
    }
  }

  IsoClassPartition partition;
  partition.n = n;
  partition.convention = convention;
  std::map<size_t, size_t> root_to_class;  // keyed by smallest member index
  for (size_t i = 0; i < tuples.size(); ++i) {
    size_t root = find(i);
    auto [it, inserted] =
        root_to_class.emplace(root, partition.classes.size());
    if (inserted) partition.classes.emplace_back();
    partition.classes[it->second].push_back(tuples[i]);
  }

  // Isomorphic graphs trivially share connectivity; a mixed class would mean
  // the isomorphism test itself is broken.
  for (const auto& members : partition.classes) {
    uint32_t first = connected_components(build_igraph(members.front()));
    for (const IGraphSpec& spec : members) {
      if (connected_components(build_igraph(spec)) != first) {
        throw std::logic_error("isomorphism class mixes connectivity");
      }
    }
  }
  return partition;
}

ClassCounts class_counts(const IsoClassPartition& partition) {
  ClassCounts counts;
  counts.total = partition.classes.size();
  for (const auto& members : partition.classes) {
    if (connected_components(build_igraph(members.front())) == 1) {
      ++counts.connected;
    }
    bool gpg = std::any_of(members.begin(), members.end(), is_gpg_tuple);
    if (gpg) ++counts.gpg;
  }
  return counts;
}

}  // namespace igcensus
