#pragma once

#include <cstdint>
#include <vector>

#include "igraph.hpp"

namespace igcensus {

/// Exact isomorphism test for simple undirected graphs. Cheap invariant
/// rejects (order, size, degree sequence, sorted distance-matrix rows)
/// followed by complete backtracking search, so the answer is exact in
/// both directions. Intended for small graphs (tens of vertices).
bool are_isomorphic(const Graph& a, const Graph& b);

/// All valid tuples for one n, partitioned into isomorphism classes.
struct IsoClassPartition {
  uint32_t n = 0;
  TupleConvention convention = TupleConvention::kStrict;
  std::vector<std::vector<IGraphSpec>> classes;
};

struct ClassCounts {
  uint64_t total = 0;
  uint64_t connected = 0;  // classes whose members are connected
  uint64_t gpg = 0;        // classes containing a generalised Petersen tuple

  bool operator==(const ClassCounts&) const = default;
};

/// Pairwise isomorphism tests with union-find over every valid tuple for
/// this n. Throws std::invalid_argument when n < 3 or n > brute_cap.
/// Verifies that connectivity is uniform within each class and throws
/// std::logic_error otherwise.
IsoClassPartition enumerate_classes(uint32_t n, TupleConvention convention,
                                    uint32_t brute_cap = 16);

ClassCounts class_counts(const IsoClassPartition& partition);

}  // namespace igcensus
