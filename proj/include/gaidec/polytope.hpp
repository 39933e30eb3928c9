#pragma once

#include "gaidec/kary.hpp"
#include "gaidec/rational.hpp"

#include <functional>
#include <utility>
#include <vector>

namespace gaidec::polytope {

// An antichain of the (k+1)x(k+1) lattice with the origin excluded: points
// pairwise incomparable under the componentwise order. Stored sorted by
// first coordinate ascending, which forces the second strictly descending.
struct Antichain {
    std::vector<std::pair<int, int>> points;

    bool operator==(const Antichain&) const = default;
};

void validate_antichain(const Antichain& a, int k);

// All antichains of the pair lattice except {(0,0)}, ordered by size and
// then lexicographically; the count is C(2k+2, k+1) - 2.
std::vector<Antichain> enumerate_antichains(int k);

// An extreme point of the polytope of 2-additive k-ary capacities: a
// 0-1-valued capacity whose Mobius support touches at most two axes,
// identified by its minimal winning coalitions.
struct VertexCapacity {
    int n;
    int k;
    std::vector<int> support;                // 1 or 2 axes, ascending
    std::vector<std::vector<int>> antichain; // minimal winning coalitions in support-local coords
    kary::MobiusMap mobius;
    kary::KaryCapacity capacity;
};

// Vertex that is 1 exactly when coordinate i reaches `level`.
VertexCapacity singleton_vertex(int i, int level, int n, int k);

// Vertex on axes i < j from an antichain of local (level_i, level_j) points:
// Mobius +1 on each antichain point and -1 on each join of consecutive
// points (sorted by first coordinate); the capacity is its zeta transform.
VertexCapacity vertex_from_antichain(const Antichain& a, int i, int j, int n, int k);

// The <=-minimal grid points where a 0-1-valued game equals 1, in
// lexicographic order. Always an antichain.
std::vector<GridPoint> minimal_winning_coalitions(const kary::KaryGame& v);

struct VertexCensus {
    int n = 0;
    int k = 0;
    BigInt per_singleton; // per axis: k threshold vertices
    BigInt per_pair;      // support inside {i,j}: C(2k+2,k+1) - 2
    BigInt total;         // per_pair * n(n-1)/2 - k*n*(n-2)
};

VertexCensus count_vertices(int n, int k);

// Streams every vertex exactly once: singleton thresholds first (axis, then
// level), then per pair i<j every antichain that is not a single
// one-axis point (those were already emitted as singleton vertices).
void enumerate_vertices(int n, int k, const std::function<void(const VertexCapacity&)>& fn);
std::vector<VertexCapacity> enumerate_vertices(int n, int k);

// Extremality oracle by exact LP: v is extreme among 2-additive capacities
// iff the only 2-additive perturbation direction keeping every tight
// constraint tight is zero. One small LP per candidate Mobius atom.
bool is_extreme_bruteforce(const kary::KaryCapacity& v);

// Exhaustive oracle: every 0-1 monotone normalized game on the grid, kept
// when 2-additive. Exponential; guarded by a node budget.
std::vector<kary::KaryCapacity> enumerate_01_2additive_bruteforce(int n, int k);

} // namespace gaidec::polytope
