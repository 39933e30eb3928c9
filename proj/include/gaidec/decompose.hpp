#pragma once

#include "gaidec/kary.hpp"
#include "gaidec/lp.hpp"
#include "gaidec/polytope.hpp"
#include "gaidec/rational.hpp"

#include <utility>
#include <vector>

namespace gaidec::decompose {

// Exact sizes of the three constraint families for fitting a monotone
// 2-additive model on per-attribute level ranges 0..m_i: table slots
// (including origins), monotonicity rows over the full grid, and
// monotonicity rows per decomposed term. The point of the decomposition is
// that the third count is quadratic in n while the second is exponential.
struct ConstraintCensus {
    BigInt variables;
    BigInt full_monotonicity_constraints;
    BigInt decomposed_monotonicity_constraints;
};

ConstraintCensus constraint_census(const std::vector<int>& m);
ConstraintCensus constraint_census(int n, int k);

// A 2-additive utility split into per-attribute and per-pair tables that are
// each nonnegative, nondecreasing, [0,1]-valued and zero at their origin.
struct MonotoneGaiDecomposition {
    int n = 0;
    int k = 0;
    std::vector<std::vector<Rat>> singleton; // [i][level], level = 0..k
    std::vector<std::vector<Rat>> pair;      // [pair_index(i,j)][a*(k+1)+b]

    int pair_index(int i, int j) const; // i < j
    const Rat& pair_at(int i, int j, int a, int b) const;
    Rat& pair_at(int i, int j, int a, int b);

    // Shape plus the per-table invariants; recomposition against a source is
    // the caller's check.
    void validate() const;
};

// Pointwise sum of all tables; result must come out a capacity.
kary::KaryCapacity recompose(const MonotoneGaiDecomposition& d);

// Variable layout shared by the decomposition and elicitation LPs: one slot
// per singleton level 1..m_i and per pair cell (a,b) != (0,0); origins are
// pinned to zero and never materialized.
struct TermLayout {
    std::vector<int> m;

    explicit TermLayout(std::vector<int> m);

    int n() const { return static_cast<int>(m.size()); }
    int var_singleton(int i, int level) const;
    int var_pair(int i, int j, int a, int b) const;
    int total_vars() const { return total_; }

    // Declares every slot as a [0,1] variable, in layout order.
    void add_variables(lp::LinearProgram& prog) const;
    // One row per within-table covering pair; count equals the decomposed
    // census exactly.
    void add_monotonicity_rows(lp::LinearProgram& prog) const;
    // Sparse expansion of the model utility at a full alternative.
    std::vector<std::pair<int, Rat>> utility_terms(const std::vector<int>& x) const;

private:
    std::vector<int> singleton_offset_;
    std::vector<int> pair_offset_;
    int total_ = 0;
};

// Feasibility program of the monotone decomposition for a 2-additive
// capacity: [0,1] slots, monotonicity rows (decomposed census count), and
// one equality row per grid point with support size 1 or 2 — agreement
// there extends to the whole grid because both sides are 2-additive. With
// minimize_interaction the program additionally minimizes the sum of
// pair-table top values, biasing toward small interaction terms.
lp::LinearProgram build_monotone_lp(const kary::KaryCapacity& v, bool minimize_interaction = false);

enum class Engine {
    Direct,  // closed-form greedy solution of the same constraint system
    Simplex, // hand the program to the exact LP solver
};

struct DecomposeOptions {
    Engine engine = Engine::Direct;
    bool minimize_interaction = false; // implies Simplex
};

// Monotone nonnegative decomposition of a 2-additive capacity. Always
// succeeds on valid input; the result is verified exactly against every row
// and bound of build_monotone_lp before it is returned.
MonotoneGaiDecomposition monotone_decompose(const kary::KaryCapacity& v, const DecomposeOptions& options = {});

// A convex combination of polytope vertices reproducing a capacity.
struct ConvexCombination {
    std::vector<std::pair<polytope::VertexCapacity, Rat>> atoms; // weights > 0, summing to 1
};

// Writes v as a convex combination of enumerate_vertices(n,k) by LP over the
// vertex weights; independent route to the same decomposition result.
ConvexCombination vertex_decompose(const kary::KaryCapacity& v);

// Groups the atoms of a combination by their support to rebuild term tables.
MonotoneGaiDecomposition to_monotone_decomposition(const ConvexCombination& combo, int n, int k);

} // namespace gaidec::decompose
