#include "gaidec/elicit.hpp"

#include "gaidec/errors.hpp"

#include <algorithm>
#include <map>

namespace gaidec::elicit {

void PreferenceDataset::validate() const {
    space.validate();
    const LevelGrid g = space.grid();
    const auto check_alt = [&](const gai::Alternative& a, const std::string& where) {
        if (a.coords.size() != static_cast<std::size_t>(space.arity()))
            throw ValidationError(where + ": alternative arity does not match the space");
        if (!g.contains(a)) throw ValidationError(where + ": alternative " + grid_point_str(a) + " is out of range");
    };
    for (std::size_t p = 0; p < strict.size(); ++p) {
        check_alt(strict[p].first, "strict comparison " + std::to_string(p));
        check_alt(strict[p].second, "strict comparison " + std::to_string(p));
    }
    for (std::size_t p = 0; p < weak.size(); ++p) {
        check_alt(weak[p].first, "weak comparison " + std::to_string(p));
        check_alt(weak[p].second, "weak comparison " + std::to_string(p));
    }
    for (std::size_t q = 0; q < assignments.size(); ++q) {
        check_alt(assignments[q].alt, "assignment " + std::to_string(q));
        if (assignments[q].category < 0) throw ValidationError("category indices must be nonnegative");
    }
    if (strict.empty() && weak.empty() && assignments.empty()) throw ValidationError("dataset is empty");
}

int PreferenceDataset::category_count() const {
    int top = -1;
    for (const Assignment& a : assignments) top = std::max(top, a.category);
    return top + 1;
}

namespace {

std::vector<int> level_bounds(const gai::AttributeSpace& space) {
    std::vector<int> m(static_cast<std::size_t>(space.arity()));
    for (int i = 0; i < space.arity(); ++i) {
        m[static_cast<std::size_t>(i)] = space.max_level(i);
        if (m[static_cast<std::size_t>(i)] < 1)
            throw ValidationError("attribute '" + space.attributes[static_cast<std::size_t>(i)].name +
                                  "' needs at least two levels to elicit anything");
    }
    return m;
}

std::vector<std::pair<int, Rat>> diff_terms(const decompose::TermLayout& layout, const gai::Alternative& better,
                                            const gai::Alternative& worse) {
    std::map<int, Rat> acc;
    for (const auto& [var, coef] : layout.utility_terms(better.coords)) acc[var] += coef;
    for (const auto& [var, coef] : layout.utility_terms(worse.coords)) acc[var] -= coef;
    std::vector<std::pair<int, Rat>> terms;
    for (auto& [var, coef] : acc)
        if (coef != 0) terms.emplace_back(var, std::move(coef));
    return terms;
}

struct Build {
    lp::LinearProgram prog;
    decompose::TermLayout layout;
    int delta = -1;          // shared margin variable (hard mode only)
    int threshold_base = -1; // first category boundary variable
    int n_bounds = 0;
    std::size_t margin_rows = 0; // rows that the margin must separate
    std::vector<int> slacks;     // soft mode: one per data row
};

Build assemble(const PreferenceDataset& data, bool soft) {
    data.validate();
    Build b{{}, decompose::TermLayout(level_bounds(data.space)), -1, -1, 0, 0, {}};
    b.layout.add_variables(b.prog);
    if (!soft) b.delta = b.prog.add_var("margin", Rat(0), Rat(1));

    const int n_categories = data.category_count();
    b.n_bounds = n_categories > 1 ? n_categories - 1 : 0;
    for (int c = 0; c < b.n_bounds; ++c) {
        const int var = b.prog.add_var("t" + std::to_string(c), Rat(0), Rat(1));
        if (c == 0) b.threshold_base = var;
    }

    const auto slack = [&](const std::string& name) {
        const int var = b.prog.add_var(name, Rat(0), Rat(2));
        b.slacks.push_back(var);
        return var;
    };

    b.layout.add_monotonicity_rows(b.prog);

    {
        lp::Row row;
        row.terms = b.layout.utility_terms(b.layout.m);
        row.rel = lp::Rel::Eq;
        row.rhs = 1;
        row.name = "normalize";
        b.prog.rows.push_back(std::move(row));
    }

    for (std::size_t p = 0; p < data.strict.size(); ++p) {
        lp::Row row;
        row.terms = diff_terms(b.layout, data.strict[p].first, data.strict[p].second);
        if (soft)
            row.terms.emplace_back(slack("s_strict" + std::to_string(p)), Rat(1));
        else {
            row.terms.emplace_back(b.delta, Rat(-1));
            ++b.margin_rows;
        }
        row.rel = lp::Rel::Ge;
        row.rhs = 0;
        row.name = "strict" + std::to_string(p);
        b.prog.rows.push_back(std::move(row));
    }
    for (std::size_t p = 0; p < data.weak.size(); ++p) {
        lp::Row row;
        row.terms = diff_terms(b.layout, data.weak[p].first, data.weak[p].second);
        if (soft) row.terms.emplace_back(slack("s_weak" + std::to_string(p)), Rat(1));
        row.rel = lp::Rel::Ge;
        row.rhs = 0;
        row.name = "weak" + std::to_string(p);
        b.prog.rows.push_back(std::move(row));
    }
    for (std::size_t q = 0; q < data.assignments.size(); ++q) {
        const auto& [alt, category] = data.assignments[q];
        if (category >= 1) {
            lp::Row row;
            row.terms = b.layout.utility_terms(alt.coords);
            row.terms.emplace_back(b.threshold_base + (category - 1), Rat(-1));
            if (soft)
                row.terms.emplace_back(slack("s_cat" + std::to_string(q) + "lo"), Rat(1));
            else {
                row.terms.emplace_back(b.delta, Rat(-1));
                ++b.margin_rows;
            }
            row.rel = lp::Rel::Ge;
            row.rhs = 0;
            row.name = "cat" + std::to_string(q) + "_lo";
            b.prog.rows.push_back(std::move(row));
        }
        if (category <= n_categories - 2) {
            lp::Row row;
            row.terms = b.layout.utility_terms(alt.coords);
            row.terms.emplace_back(b.threshold_base + category, Rat(-1));
            if (soft) row.terms.emplace_back(slack("s_cat" + std::to_string(q) + "hi"), Rat(-1));
            row.rel = lp::Rel::Le;
            row.rhs = 0;
            row.name = "cat" + std::to_string(q) + "_hi";
            b.prog.rows.push_back(std::move(row));
        }
    }
    for (int c = 1; c < b.n_bounds; ++c) {
        lp::Row row;
        row.terms = {{b.threshold_base + c, Rat(1)}, {b.threshold_base + c - 1, Rat(-1)}};
        row.rel = lp::Rel::Ge;
        row.rhs = 0;
        row.name = "order" + std::to_string(c);
        b.prog.rows.push_back(std::move(row));
    }

    lp::Objective obj;
    if (soft) {
        obj.sense = lp::Sense::Min;
        for (int s : b.slacks) obj.terms.emplace_back(s, Rat(1));
    } else {
        obj.sense = lp::Sense::Max;
        obj.terms.emplace_back(b.delta, Rat(1));
    }
    b.prog.objective = std::move(obj);
    return b;
}

// Clamp-extends the fitted tables from the mixed level ranges to the uniform
// grid with k = max m_i; in-range values are untouched, so the embedded
// model reproduces every dataset utility exactly.
decompose::MonotoneGaiDecomposition embed_model(const decompose::TermLayout& layout, const std::vector<Rat>& x) {
    const int n = layout.n();
    int k = 1;
    for (int mi : layout.m) k = std::max(k, mi);

    const auto mixed_single = [&](int i, int level) -> Rat {
        if (level == 0) return Rat(0);
        return x[static_cast<std::size_t>(layout.var_singleton(i, level))];
    };
    const auto mixed_pair = [&](int i, int j, int a, int b) -> Rat {
        if (a == 0 && b == 0) return Rat(0);
        return x[static_cast<std::size_t>(layout.var_pair(i, j, a, b))];
    };

    decompose::MonotoneGaiDecomposition d;
    d.n = n;
    d.k = k;
    d.singleton.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(k) + 1));
    d.pair.assign(static_cast<std::size_t>(n) * (n - 1) / 2,
                  std::vector<Rat>((static_cast<std::size_t>(k) + 1) * (k + 1)));
    for (int i = 0; i < n; ++i)
        for (int level = 0; level <= k; ++level)
            d.singleton[static_cast<std::size_t>(i)][static_cast<std::size_t>(level)] =
                mixed_single(i, std::min(level, layout.m[static_cast<std::size_t>(i)]));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int a = 0; a <= k; ++a)
                for (int b = 0; b <= k; ++b)
                    d.pair_at(i, j, a, b) = mixed_pair(i, j, std::min(a, layout.m[static_cast<std::size_t>(i)]),
                                                       std::min(b, layout.m[static_cast<std::size_t>(j)]));
    d.validate();
    return d;
}

std::vector<Rat> extract_thresholds(const Build& b, const std::vector<Rat>& x) {
    std::vector<Rat> t;
    for (int c = 0; c < b.n_bounds; ++c) t.push_back(x[static_cast<std::size_t>(b.threshold_base + c)]);
    return t;
}

} // namespace

lp::LinearProgram build_elicitation_lp(const PreferenceDataset& data) { return assemble(data, false).prog; }

ElicitationResult elicit(const PreferenceDataset& data) {
    Build b = assemble(data, false);
    const lp::LpOutcome out = lp::solve(b.prog);

    ElicitationResult result;
    result.program = b.prog;
    if (out.status == lp::LpStatus::Infeasible) {
        result.status = ElicitationResult::Status::InfeasibleWithCertificate;
        result.certificate_kind = "farkas";
        result.certificate = out.farkas;
        return result;
    }
    if (out.status != lp::LpStatus::Optimal) throw InternalCheckError("elicitation program did not optimize");

    const Rat best = *out.objective_value;
    if (b.margin_rows > 0 && best == 0) {
        // feasible only with zero separation: strictness cannot be met, and
        // the optimal duals bound the margin by zero
        result.status = ElicitationResult::Status::InfeasibleWithCertificate;
        result.certificate_kind = "margin_bound";
        result.certificate = out.row_duals;
        return result;
    }

    result.status = ElicitationResult::Status::Consistent;
    result.margin = b.margin_rows > 0 ? best : Rat(0);
    result.model = embed_model(b.layout, out.point);
    result.thresholds = extract_thresholds(b, out.point);
    return result;
}

SoftFit elicit_soft(const PreferenceDataset& data) {
    Build b = assemble(data, true);
    const lp::LpOutcome out = lp::solve(b.prog);
    if (out.status != lp::LpStatus::Optimal) throw InternalCheckError("soft elicitation program did not optimize");
    SoftFit fit{embed_model(b.layout, out.point), *out.objective_value, extract_thresholds(b, out.point)};
    return fit;
}

} // namespace gaidec::elicit
