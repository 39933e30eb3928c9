#pragma once

#include "gaidec/grid.hpp"
#include "gaidec/kary.hpp"
#include "gaidec/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gaidec::gai {

struct Attribute {
    std::string name;
    std::vector<std::string> levels; // worst to best; level indices 0..m_i
};

struct AttributeSpace {
    std::vector<Attribute> attributes;

    int arity() const { return static_cast<int>(attributes.size()); }
    int max_level(int i) const { return static_cast<int>(attributes[static_cast<std::size_t>(i)].levels.size()) - 1; }
    int hypercube_k() const; // max_i m_i
    LevelGrid grid() const;  // mixed-radix grid of full alternatives
    void validate() const;
};

// An alternative is a point of the mixed-radix grid: one level index per
// attribute.
using Alternative = GridPoint;

// One local utility term: a dense table over the scope's own subgrid.
struct GaiTerm {
    std::vector<int> scope; // sorted 0-based attribute indices, nonempty
    std::vector<Rat> table; // dense over the scope grid, lexicographic

    LevelGrid scope_grid(const AttributeSpace& space) const;
    const Rat& at(const AttributeSpace& space, const Alternative& x) const; // projects x
};

struct GaiModel {
    AttributeSpace space;
    std::vector<GaiTerm> terms;

    void validate() const;
};

struct TabulatedFunction {
    AttributeSpace space;
    std::vector<Rat> values; // dense over space.grid()

    const Rat& at(const Alternative& x) const;
    Rat& at(const Alternative& x);
    void validate() const;
};

Rat evaluate(const GaiModel& model, const Alternative& x);
TabulatedFunction tabulate(const GaiModel& model);

// How off-grid points of {0..k}^n are filled when some attribute has fewer
// levels than k: Clamp copies the nearest in-grid value (coordinates clamped
// to each attribute's range) and preserves 2-additivity; Constant fills with
// the value at the all-best profile.
enum class FillMode { Clamp, Constant };

// Embeds a function on the mixed grid into a capacity on {0..k}^n with
// k = max_i m_i. Requires monotonicity, value 0 at all-worst and 1 at
// all-best, all verified on the function's own grid.
kary::KaryCapacity embed(const TabulatedFunction& u, FillMode fill = FillMode::Clamp);
kary::KaryCapacity embed(const GaiModel& model, FillMode fill = FillMode::Clamp);

// Alternating-sum variation of U over the axes in P, moving them from the
// `from` levels to the `to` levels, with all other coordinates taken from
// `base`. P, from and to are aligned componentwise.
Rat delta_variation(const TabulatedFunction& u, const std::vector<int>& P, const std::vector<int>& from,
                    const std::vector<int>& to, const Alternative& base);

struct PAdditivityWitness {
    std::vector<int> scope;        // the axis set P
    std::vector<int> from, to;     // the move inside P
    Alternative context_a, context_b; // full alternatives differing off P
    Rat delta_a, delta_b;
    std::string describe() const;
};

struct PAdditivityCheck {
    bool holds = false;
    std::optional<PAdditivityWitness> witness;
};

// A function is p-additive when every variation over an axis set of size p
// is independent of the fixed context; equivalently it splits into terms of
// at most p attributes. Checks unit moves against covering context changes,
// which spans the general case by telescoping.
PAdditivityCheck is_p_additive_function(const TabulatedFunction& u, int p);

// Splits a p-additive function into terms over every scope of size 1..p via
// variations anchored at the all-worst alternative; any value the function
// takes at all-worst is folded into the first singleton term so the sum
// reproduces the input exactly.
GaiModel delta_decomposition(const TabulatedFunction& u, int p);

// Scope-order-dependent decomposition over caller-supplied scopes: each term
// reads the function at profiles where coordinates outside the running
// intersections are parked at the anchor. The scopes must cover the
// dependence structure of the input for the terms to sum back to it; this is
// the caller's responsibility.
GaiModel canonical_decomposition(const TabulatedFunction& u, const std::vector<std::vector<int>>& scopes,
                                 const Alternative& anchor);

} // namespace gaidec::gai
