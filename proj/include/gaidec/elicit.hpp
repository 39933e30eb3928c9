#pragma once

#include "gaidec/decompose.hpp"
#include "gaidec/gai.hpp"
#include "gaidec/lp.hpp"
#include "gaidec/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gaidec::elicit {

// Observed preference statements over alternatives of one attribute space:
// strict and weak pairwise comparisons, plus optional assignments of
// alternatives to ordered categories (0 = worst category).
struct PreferenceDataset {
    gai::AttributeSpace space;
    std::vector<std::pair<gai::Alternative, gai::Alternative>> strict; // (better, worse)
    std::vector<std::pair<gai::Alternative, gai::Alternative>> weak;   // (better, worse)
    struct Assignment {
        gai::Alternative alt;
        int category = 0;
    };
    std::vector<Assignment> assignments;

    void validate() const;
    int category_count() const; // max referenced category + 1, or 0
};

// Max-margin fitting program: monotone-decomposition term slots over the
// space's own level ranges, monotonicity rows (decomposed census count), a
// normalization row pinning the top utility to 1, one row per comparison,
// and for categorized alternatives interleaved threshold variables with
// U(x) in [t_{c-1} + margin, t_c]. The shared margin variable is maximized.
// The bottom category has no lower row: its floor is the structural 0.
lp::LinearProgram build_elicitation_lp(const PreferenceDataset& data);

struct ElicitationResult {
    enum class Status { Consistent, InfeasibleWithCertificate };

    Status status = Status::InfeasibleWithCertificate;
    Rat margin = 0; // best shared strict-preference separation
    // Fitted tables, clamp-embedded onto the uniform grid with k = max m_i;
    // present only when consistent.
    std::optional<decompose::MonotoneGaiDecomposition> model;
    std::vector<Rat> thresholds; // fitted category boundaries, when any

    // Exact evidence of inconsistency: either Farkas multipliers showing the
    // rows are unsatisfiable, or optimal-basis duals proving the margin
    // cannot exceed zero. Paired with `program` so callers can re-verify.
    std::string certificate_kind; // "", "farkas", "margin_bound"
    std::vector<Rat> certificate;
    lp::LinearProgram program;
};

ElicitationResult elicit(const PreferenceDataset& data);

// Fallback for inconsistent data: every comparison and category row gets its
// own nonnegative slack and the total slack is minimized, so a model always
// comes back together with the violation it cannot avoid.
struct SoftFit {
    decompose::MonotoneGaiDecomposition model;
    Rat total_violation = 0;
    std::vector<Rat> thresholds;
};

SoftFit elicit_soft(const PreferenceDataset& data);

} // namespace gaidec::elicit
