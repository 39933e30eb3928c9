#pragma once

#include "gaidec/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gaidec::lp {

enum class Rel { Le, Eq, Ge };
enum class Sense { Max, Min };

struct Row {
    std::vector<std::pair<int, Rat>> terms; // (variable index, coefficient)
    Rel rel = Rel::Le;
    Rat rhs = Rat(0);
    std::string name;
};

struct Objective {
    Sense sense = Sense::Max;
    std::vector<std::pair<int, Rat>> terms;
};

// Exact-arithmetic linear program over optionally box-bounded variables.
// Missing bounds mean unbounded on that side.
struct LinearProgram {
    std::vector<std::string> var_names;
    std::vector<std::optional<Rat>> lower;
    std::vector<std::optional<Rat>> upper;
    std::vector<Row> rows;
    std::optional<Objective> objective;

    int add_var(std::string name, std::optional<Rat> lb = Rat(0), std::optional<Rat> ub = std::nullopt);
    int n_vars() const { return static_cast<int>(var_names.size()); }
    void validate() const;
};

enum class LpStatus { Optimal, Feasible, Infeasible, Unbounded };

// Certificates are verified exactly before an outcome is returned:
//  - Optimal/Feasible: `point` satisfies every row and bound;
//  - Optimal: `row_duals` passes check_dual (complementary slackness, sign
//    conditions, bound complementarity);
//  - Infeasible: `farkas` passes check_farkas;
//  - Unbounded: `point` is feasible and `ray` passes check_ray.
struct LpOutcome {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Rat> point;
    std::optional<Rat> objective_value;
    std::vector<Rat> row_duals;
    std::vector<Rat> farkas;
    std::vector<Rat> ray;
    std::uint64_t pivots = 0;
};

struct SolveOptions {
    std::uint64_t max_pivots = 0; // 0 = automatic from problem size
};

// Two-phase primal simplex on a dense rational tableau. Variable bounds are
// handled implicitly (no extra rows). Pivoting is deterministic: largest
// reduced cost with index tie-breaks, switching permanently to Bland's rule
// if the objective stalls, which guarantees termination.
LpOutcome solve(const LinearProgram& lp, const SolveOptions& options = {});

bool check_point(const LinearProgram& lp, const std::vector<Rat>& x, std::string* why = nullptr);
bool check_farkas(const LinearProgram& lp, const std::vector<Rat>& y, std::string* why = nullptr);
bool check_ray(const LinearProgram& lp, const std::vector<Rat>& ray, std::string* why = nullptr);
bool check_dual(const LinearProgram& lp, const std::vector<Rat>& x, const std::vector<Rat>& y,
                std::string* why = nullptr);

// Debug dump in LP exchange format; values are rendered as rounded decimals,
// so the dump is for inspection, not for exact round trips.
void write_lp_format(const LinearProgram& lp, std::ostream& out);

} // namespace gaidec::lp
