#include "gaidec/lp.hpp"

#include "gaidec/errors.hpp"
#include "gaidec/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

namespace gaidec::lp {

int LinearProgram::add_var(std::string name, std::optional<Rat> lb, std::optional<Rat> ub) {
    var_names.push_back(std::move(name));
    lower.push_back(std::move(lb));
    upper.push_back(std::move(ub));
    return static_cast<int>(var_names.size()) - 1;
}

void LinearProgram::validate() const {
    const int n = n_vars();
    if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n)
        throw ValidationError("lp bounds arrays out of sync with variables");
    for (int j = 0; j < n; ++j)
        if (lower[j] && upper[j] && *lower[j] > *upper[j])
            throw ValidationError("lp variable '" + var_names[j] + "' has crossed bounds");
    auto check_terms = [&](const std::vector<std::pair<int, Rat>>& terms, const std::string& where) {
        for (const auto& [j, c] : terms) {
            (void)c;
            if (j < 0 || j >= n) throw ValidationError("lp " + where + " references unknown variable");
        }
    };
    for (const Row& r : rows) check_terms(r.terms, "row '" + r.name + "'");
    if (objective) check_terms(objective->terms, "objective");
}

namespace {

Rat eval_terms(const std::vector<std::pair<int, Rat>>& terms, const std::vector<Rat>& x) {
    Rat acc(0);
    for (const auto& [j, c] : terms) acc += c * x[static_cast<std::size_t>(j)];
    return acc;
}

bool fail(std::string* why, const std::string& msg) {
    if (why) *why = msg;
    return false;
}

// The simplex below works on: minimize c.x subject to A x + s = b, where s
// holds one logical variable per row (Le: s >= 0, Ge: s <= 0, Eq: s = 0) and
// every variable carries optional box bounds. Artificial columns are added
// only for rows whose logical cannot absorb the initial residual.
class Simplex {
public:
    Simplex(const LinearProgram& lp, std::uint64_t max_pivots)
        : lp_(lp), m_(static_cast<int>(lp.rows.size())), ns_(lp.n_vars()), max_pivots_(max_pivots) {
        stride_ = ns_ + 2 * m_; // structurals + logicals + room for artificials
        if (static_cast<std::uint64_t>(m_) * static_cast<std::uint64_t>(stride_) > 60'000'000ull)
            throw BudgetError("lp tableau would exceed the 6e7 cell budget");
        build();
    }

    LpOutcome run() {
        LpOutcome out;
        // phase 1: minimize total artificial magnitude
        if (nart_ > 0) {
            set_phase1_costs();
            if (!iterate()) throw InternalCheckError("phase 1 hit an unbounded ray");
            if (objval_ != 0) {
                out.status = LpStatus::Infeasible;
                out.farkas = extract_row_duals();
                out.pivots = pivots_;
                return out;
            }
        }
        freeze_artificials();

        if (!lp_.objective) {
            out.status = LpStatus::Feasible;
            out.point = extract_point();
            out.pivots = pivots_;
            return out;
        }

        set_phase2_costs();
        if (!iterate()) {
            out.status = LpStatus::Unbounded;
            out.point = extract_point();
            out.ray = extract_ray();
            out.pivots = pivots_;
            return out;
        }
        out.status = LpStatus::Optimal;
        out.point = extract_point();
        Rat value = eval_terms(lp_.objective->terms, out.point);
        out.objective_value = value;
        out.row_duals = extract_row_duals();
        if (lp_.objective->sense == Sense::Max)
            for (Rat& y : out.row_duals) y = -y;
        out.pivots = pivots_;
        return out;
    }

private:
    enum class St : unsigned char { Basic, Lower, Upper, Free };

    const LinearProgram& lp_;
    int m_, ns_, stride_, ncols_ = 0, nart_ = 0;
    std::uint64_t max_pivots_, pivots_ = 0;
    std::vector<Rat> T_;    // m_ x stride_, row-major
    std::vector<Rat> beta_; // values of basic variables
    std::vector<int> basis_;
    std::vector<St> stat_;
    std::vector<Rat> val_; // value of each nonbasic variable
    std::vector<std::optional<Rat>> lo_, hi_;
    std::vector<Rat> cost_, d_; // current phase costs / reduced costs
    Rat objval_{0};
    bool bland_ = false;
    int stall_ = 0;

    Rat& t(int r, int j) { return T_[static_cast<std::size_t>(r) * stride_ + j]; }
    const Rat& t(int r, int j) const { return T_[static_cast<std::size_t>(r) * stride_ + j]; }

    void build() {
        T_.assign(static_cast<std::size_t>(m_) * stride_, Rat(0));
        beta_.assign(static_cast<std::size_t>(m_), Rat(0));
        basis_.assign(static_cast<std::size_t>(m_), -1);
        ncols_ = ns_ + m_;
        stat_.assign(static_cast<std::size_t>(stride_), St::Lower);
        val_.assign(static_cast<std::size_t>(stride_), Rat(0));
        lo_.assign(static_cast<std::size_t>(stride_), std::nullopt);
        hi_.assign(static_cast<std::size_t>(stride_), std::nullopt);

        for (int j = 0; j < ns_; ++j) {
            lo_[j] = lp_.lower[j];
            hi_[j] = lp_.upper[j];
            if (lo_[j]) {
                stat_[j] = St::Lower;
                val_[j] = *lo_[j];
            } else if (hi_[j]) {
                stat_[j] = St::Upper;
                val_[j] = *hi_[j];
            } else {
                stat_[j] = St::Free;
                val_[j] = 0;
            }
        }
        for (int r = 0; r < m_; ++r) {
            const Row& row = lp_.rows[static_cast<std::size_t>(r)];
            for (const auto& [j, c] : row.terms) t(r, j) += c;
            const int s = ns_ + r;
            t(r, s) = 1;
            switch (row.rel) {
            case Rel::Le: lo_[s] = Rat(0); break;
            case Rel::Ge: hi_[s] = Rat(0); break;
            case Rel::Eq: lo_[s] = Rat(0); hi_[s] = Rat(0); break;
            }
            Rat residual = row.rhs;
            for (int j = 0; j < ns_; ++j)
                if (t(r, j) != 0 && val_[j] != 0) residual -= t(r, j) * val_[j];
            const bool below = lo_[s] && residual < *lo_[s];
            const bool above = hi_[s] && residual > *hi_[s];
            if (!below && !above) {
                basis_[r] = s;
                stat_[s] = St::Basic;
                beta_[r] = residual;
                continue;
            }
            // park the logical at the violated bound and cover the gap with
            // a signed artificial
            const Rat bound = below ? *lo_[s] : *hi_[s];
            stat_[s] = below ? St::Lower : St::Upper;
            val_[s] = bound;
            const int a = ns_ + m_ + nart_;
            ++nart_;
            ++ncols_;
            t(r, a) = 1;
            basis_[r] = a;
            stat_[a] = St::Basic;
            beta_[r] = residual - bound;
            if (beta_[r] > 0)
                lo_[a] = Rat(0); // artificial in [0, inf)
            else
                hi_[a] = Rat(0); // artificial in (-inf, 0]
        }
    }

    void set_phase1_costs() {
        cost_.assign(static_cast<std::size_t>(ncols_), Rat(0));
        for (int a = 0; a < nart_; ++a) {
            const int j = ns_ + m_ + a;
            cost_[j] = lo_[j] ? Rat(1) : Rat(-1);
        }
        compute_reduced();
    }

    void set_phase2_costs() {
        cost_.assign(static_cast<std::size_t>(ncols_), Rat(0));
        const bool flip = lp_.objective->sense == Sense::Max;
        for (const auto& [j, c] : lp_.objective->terms) cost_[j] += flip ? -c : c;
        compute_reduced();
        bland_ = false;
        stall_ = 0;
    }

    void compute_reduced() {
        d_ = cost_;
        objval_ = 0;
        for (int r = 0; r < m_; ++r) {
            const Rat& cb = cost_[basis_[r]];
            if (cb == 0) continue;
            objval_ += cb * beta_[r];
            for (int j = 0; j < ncols_; ++j)
                if (t(r, j) != 0) d_[j] -= cb * t(r, j);
        }
        for (int j = 0; j < ncols_; ++j)
            if (stat_[j] != St::Basic && cost_[j] != 0 && val_[j] != 0) objval_ += cost_[j] * val_[j];
    }

    void freeze_artificials() {
        for (int a = 0; a < nart_; ++a) {
            const int j = ns_ + m_ + a;
            lo_[j] = Rat(0);
            hi_[j] = Rat(0);
            if (stat_[j] != St::Basic) {
                stat_[j] = St::Lower;
                val_[j] = 0;
            }
        }
    }

    bool entering_eligible(int j, int& dir) const {
        if (stat_[j] == St::Basic) return false;
        if (lo_[j] && hi_[j] && *lo_[j] == *hi_[j]) return false; // fixed
        const int sgn = sgn_of(d_[j]);
        switch (stat_[j]) {
        case St::Lower: dir = 1; return sgn < 0;
        case St::Upper: dir = -1; return sgn > 0;
        case St::Free:
            if (sgn == 0) return false;
            dir = sgn < 0 ? 1 : -1;
            return true;
        default: return false;
        }
    }

    static int sgn_of(const Rat& r) { return mpq_sgn(r.get_mpq_t()); }

    int choose_entering(int& dir) const {
        int best = -1, best_dir = 0;
        Rat best_mag(0);
        for (int j = 0; j < ncols_; ++j) {
            int dj;
            if (!entering_eligible(j, dj)) continue;
            if (bland_) {
                dir = dj;
                return j;
            }
            Rat mag = abs(d_[j]);
            if (best < 0 || mag > best_mag) {
                best = j;
                best_dir = dj;
                best_mag = std::move(mag);
            }
        }
        dir = best_dir;
        return best;
    }

    // One simplex phase. Returns false if an unbounded improving ray was
    // found (the entering column is left recorded in ray_col_/ray_dir_).
    bool iterate() {
        while (true) {
            int dir;
            const int e = choose_entering(dir);
            if (e < 0) return true; // optimal for this phase
            if (++pivots_ > max_pivots_)
                throw BudgetError("lp pivot budget exceeded (" + std::to_string(max_pivots_) + ")");

            // ratio test
            bool have_t = false, flip = false;
            Rat tmax(0);
            int leave_row = -1;
            Rat leave_bound(0);
            bool leave_at_upper = false;
            if (lo_[e] && hi_[e]) {
                tmax = *hi_[e] - *lo_[e];
                have_t = true;
                flip = true;
            }
            for (int r = 0; r < m_; ++r) {
                const Rat& w = t(r, e);
                const int ws = sgn_of(w);
                if (ws == 0) continue;
                const int b = basis_[r];
                // basic value moves by -dir*w per unit step
                const int move = -dir * ws;
                if (move > 0) {
                    if (!hi_[b]) continue;
                    Rat tr = (*hi_[b] - beta_[r]) / (w * -dir);
                    consider(tr, r, *hi_[b], true, have_t, tmax, flip, leave_row, leave_bound, leave_at_upper);
                } else {
                    if (!lo_[b]) continue;
                    Rat tr = (beta_[r] - *lo_[b]) / (w * dir);
                    consider(tr, r, *lo_[b], false, have_t, tmax, flip, leave_row, leave_bound, leave_at_upper);
                }
            }
            if (!have_t) {
                ray_col_ = e;
                ray_dir_ = dir;
                return false;
            }

            const int improving = sgn_of(d_[e]);
            (void)improving;
            Rat step = tmax;
            Rat objdelta = d_[e] * Rat(dir) * step;
            if (sgn_of(objdelta) == 0) {
                if (!bland_ && ++stall_ > m_ + ncols_ + 16) bland_ = true;
            } else {
                stall_ = 0;
            }
            objval_ += objdelta;

            if (step != 0)
                for (int r = 0; r < m_; ++r)
                    if (t(r, e) != 0) beta_[r] -= Rat(dir) * step * t(r, e);

            if (flip) {
                stat_[e] = stat_[e] == St::Lower ? St::Upper : St::Lower;
                val_[e] = stat_[e] == St::Lower ? *lo_[e] : *hi_[e];
                continue;
            }

            // basis change at leave_row
            const int r = leave_row;
            const int out = basis_[r];
            stat_[out] = leave_at_upper ? St::Upper : St::Lower;
            val_[out] = leave_bound;
            const Rat enter_value = val_[e] + Rat(dir) * step;
            basis_[r] = e;
            stat_[e] = St::Basic;
            beta_[r] = enter_value;
            pivot_rows(r, e);
        }
    }

    void consider(Rat tr, int r, const Rat& bound, bool at_upper, bool& have_t, Rat& tmax, bool& flip,
                  int& leave_row, Rat& leave_bound, bool& leave_at_upper) const {
        if (tr < 0) tr = 0; // degenerate overshoot cannot go backwards
        bool better = !have_t || tr < tmax;
        if (!better && !flip && tr == tmax && leave_row >= 0 && basis_[r] < basis_[leave_row])
            better = true; // deterministic tie-break: smallest basic index
        if (!better && flip && tr == tmax) better = true; // rows beat flips on ties
        if (better) {
            have_t = true;
            tmax = std::move(tr);
            flip = false;
            leave_row = r;
            leave_bound = bound;
            leave_at_upper = at_upper;
        }
    }

    void pivot_rows(int r, int e) {
        Rat p = t(r, e);
        if (p == 0) throw InternalCheckError("zero pivot element");
        if (p != 1) {
            const Rat inv = 1 / p;
            for (int j = 0; j < ncols_; ++j)
                if (t(r, j) != 0) t(r, j) *= inv;
        }
        // columns the pivot row actually touches
        std::vector<int> cols;
        cols.reserve(64);
        for (int j = 0; j < ncols_; ++j)
            if (t(r, j) != 0) cols.push_back(j);

        parallel_for(static_cast<std::size_t>(m_), [&](std::size_t ri) {
            const int i = static_cast<int>(ri);
            if (i == r) return;
            const Rat f = t(i, e);
            if (f == 0) return;
            for (int j : cols) t(i, j) -= f * t(r, j);
        });
        const Rat de = d_[e];
        if (de != 0)
            for (int j : cols) d_[j] -= de * t(r, j);
    }

    std::vector<Rat> extract_point() const {
        std::vector<Rat> x(static_cast<std::size_t>(ns_), Rat(0));
        for (int j = 0; j < ns_; ++j)
            if (stat_[j] != St::Basic) x[static_cast<std::size_t>(j)] = val_[j];
        for (int r = 0; r < m_; ++r)
            if (basis_[r] < ns_) x[static_cast<std::size_t>(basis_[r])] = beta_[r];
        return x;
    }

    // y_r = -d[logical_r] for the internal min problem
    std::vector<Rat> extract_row_duals() const {
        std::vector<Rat> y(static_cast<std::size_t>(m_), Rat(0));
        for (int r = 0; r < m_; ++r) y[static_cast<std::size_t>(r)] = -d_[ns_ + r];
        return y;
    }

    int ray_col_ = -1, ray_dir_ = 0;

    std::vector<Rat> extract_ray() const {
        std::vector<Rat> ray(static_cast<std::size_t>(ns_), Rat(0));
        if (ray_col_ < ns_) ray[static_cast<std::size_t>(ray_col_)] = ray_dir_;
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] >= ns_) continue;
            const Rat& w = t(r, ray_col_);
            if (w != 0) ray[static_cast<std::size_t>(basis_[r])] = -Rat(ray_dir_) * w;
        }
        return ray;
    }

public:
    friend LpOutcome solve(const LinearProgram&, const SolveOptions&);
};

} // namespace

bool check_point(const LinearProgram& lp, const std::vector<Rat>& x, std::string* why) {
    if (static_cast<int>(x.size()) != lp.n_vars()) return fail(why, "point arity mismatch");
    for (int j = 0; j < lp.n_vars(); ++j) {
        if (lp.lower[j] && x[static_cast<std::size_t>(j)] < *lp.lower[j])
            return fail(why, "variable '" + lp.var_names[j] + "' below its lower bound");
        if (lp.upper[j] && x[static_cast<std::size_t>(j)] > *lp.upper[j])
            return fail(why, "variable '" + lp.var_names[j] + "' above its upper bound");
    }
    for (const Row& r : lp.rows) {
        const Rat lhs = eval_terms(r.terms, x);
        const bool ok = r.rel == Rel::Le ? lhs <= r.rhs : r.rel == Rel::Ge ? lhs >= r.rhs : lhs == r.rhs;
        if (!ok)
            return fail(why, "row '" + r.name + "' violated: lhs " + rat_str(lhs) + " vs rhs " + rat_str(r.rhs));
    }
    return true;
}

// Multipliers y prove infeasibility when y respects row orientations
// (y <= 0 on Le, y >= 0 on Ge, free on Eq) and the best value of
// sum_j (y^T A)_j x_j over the variable box still falls short of y^T b.
bool check_farkas(const LinearProgram& lp, const std::vector<Rat>& y, std::string* why) {
    if (y.size() != lp.rows.size()) return fail(why, "farkas arity mismatch");
    Rat ytb(0);
    std::vector<Rat> w(static_cast<std::size_t>(lp.n_vars()), Rat(0));
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const Row& row = lp.rows[r];
        if (row.rel == Rel::Le && y[r] > 0) return fail(why, "positive multiplier on a <= row");
        if (row.rel == Rel::Ge && y[r] < 0) return fail(why, "negative multiplier on a >= row");
        if (y[r] == 0) continue;
        ytb += y[r] * row.rhs;
        for (const auto& [j, c] : row.terms) w[static_cast<std::size_t>(j)] += y[r] * c;
    }
    Rat best(0);
    for (int j = 0; j < lp.n_vars(); ++j) {
        const Rat& wj = w[static_cast<std::size_t>(j)];
        if (wj > 0) {
            if (!lp.upper[j]) return fail(why, "certificate needs a finite upper bound it lacks");
            best += wj * *lp.upper[j];
        } else if (wj < 0) {
            if (!lp.lower[j]) return fail(why, "certificate needs a finite lower bound it lacks");
            best += wj * *lp.lower[j];
        }
    }
    if (best >= ytb) return fail(why, "certificate does not separate: box max " + rat_str(best) +
                                          " >= y.b " + rat_str(ytb));
    return true;
}

bool check_ray(const LinearProgram& lp, const std::vector<Rat>& ray, std::string* why) {
    if (static_cast<int>(ray.size()) != lp.n_vars()) return fail(why, "ray arity mismatch");
    bool moves = false;
    for (int j = 0; j < lp.n_vars(); ++j) {
        const Rat& rj = ray[static_cast<std::size_t>(j)];
        if (rj > 0 && lp.upper[j]) return fail(why, "ray increases a variable with an upper bound");
        if (rj < 0 && lp.lower[j]) return fail(why, "ray decreases a variable with a lower bound");
        if (rj != 0) moves = true;
    }
    if (!moves) return fail(why, "zero ray");
    for (const Row& r : lp.rows) {
        const Rat dv = eval_terms(r.terms, ray);
        const bool ok = r.rel == Rel::Le ? dv <= 0 : r.rel == Rel::Ge ? dv >= 0 : dv == 0;
        if (!ok) return fail(why, "ray leaves the feasible cone at row '" + r.name + "'");
    }
    if (!lp.objective) return fail(why, "ray without an objective");
    const Rat gain = eval_terms(lp.objective->terms, ray);
    if (lp.objective->sense == Sense::Max ? gain <= 0 : gain >= 0)
        return fail(why, "ray does not improve the objective");
    return true;
}

bool check_dual(const LinearProgram& lp, const std::vector<Rat>& x, const std::vector<Rat>& y,
                std::string* why) {
    if (!lp.objective) return fail(why, "dual check needs an objective");
    if (y.size() != lp.rows.size()) return fail(why, "dual arity mismatch");
    if (!check_point(lp, x, why)) return false;
    const bool maxing = lp.objective->sense == Sense::Max;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const Row& row = lp.rows[r];
        if (y[r] == 0) continue;
        if (row.rel == Rel::Le && (maxing ? y[r] < 0 : y[r] > 0))
            return fail(why, "dual sign violated on <= row '" + row.name + "'");
        if (row.rel == Rel::Ge && (maxing ? y[r] > 0 : y[r] < 0))
            return fail(why, "dual sign violated on >= row '" + row.name + "'");
        if (row.rel != Rel::Eq && eval_terms(row.terms, x) != row.rhs)
            return fail(why, "nonzero dual on a slack row '" + row.name + "'");
    }
    // bound complementarity through reduced costs
    std::vector<Rat> red(static_cast<std::size_t>(lp.n_vars()), Rat(0));
    for (const auto& [j, c] : lp.objective->terms) red[static_cast<std::size_t>(j)] += c;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        if (y[r] == 0) continue;
        for (const auto& [j, c] : lp.rows[r].terms) red[static_cast<std::size_t>(j)] -= y[r] * c;
    }
    for (int j = 0; j < lp.n_vars(); ++j) {
        const Rat& rj = red[static_cast<std::size_t>(j)];
        if (rj == 0) continue;
        const bool wants_upper = maxing ? rj > 0 : rj < 0;
        if (wants_upper) {
            if (!lp.upper[j] || x[static_cast<std::size_t>(j)] != *lp.upper[j])
                return fail(why, "reduced cost incompatibility at variable '" + lp.var_names[j] + "'");
        } else {
            if (!lp.lower[j] || x[static_cast<std::size_t>(j)] != *lp.lower[j])
                return fail(why, "reduced cost incompatibility at variable '" + lp.var_names[j] + "'");
        }
    }
    return true;
}

LpOutcome solve(const LinearProgram& lp, const SolveOptions& options) {
    lp.validate();
    const std::uint64_t m = lp.rows.size();
    const std::uint64_t budget =
        options.max_pivots ? options.max_pivots
                           : 10000 + 40 * (m + static_cast<std::uint64_t>(lp.n_vars()) + m);
    Simplex s(lp, budget);
    LpOutcome out = s.run();

    std::string why;
    switch (out.status) {
    case LpStatus::Feasible:
        if (!check_point(lp, out.point, &why)) throw InternalCheckError("lp point check failed: " + why);
        break;
    case LpStatus::Optimal:
        if (!check_point(lp, out.point, &why)) throw InternalCheckError("lp point check failed: " + why);
        if (!check_dual(lp, out.point, out.row_duals, &why))
            throw InternalCheckError("lp dual certificate check failed: " + why);
        break;
    case LpStatus::Infeasible:
        if (!check_farkas(lp, out.farkas, &why))
            throw InternalCheckError("lp infeasibility certificate check failed: " + why);
        break;
    case LpStatus::Unbounded:
        if (!check_point(lp, out.point, &why)) throw InternalCheckError("lp point check failed: " + why);
        if (!check_ray(lp, out.ray, &why))
            throw InternalCheckError("lp ray certificate check failed: " + why);
        break;
    }
    return out;
}

namespace {

std::string sanitize(const std::string& name, const std::string& fallback, std::size_t index) {
    std::string s;
    for (char c : name)
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') s += c;
    if (s.empty() || std::isdigit(static_cast<unsigned char>(s.front()))) s = fallback;
    return s + "_" + std::to_string(index);
}

} // namespace

void write_lp_format(const LinearProgram& lp, std::ostream& out) {
    const int digits = 15;
    auto num = [&](const Rat& r) { return rat_decimal(r, digits); };
    std::vector<std::string> vn;
    for (std::size_t j = 0; j < lp.var_names.size(); ++j) vn.push_back(sanitize(lp.var_names[j], "x", j));

    auto emit_terms = [&](const std::vector<std::pair<int, Rat>>& terms) {
        std::string s;
        bool first = true;
        for (const auto& [j, c] : terms) {
            if (c == 0) continue;
            if (c >= 0)
                s += first ? "" : " + ";
            else
                s += first ? "- " : " - ";
            s += num(abs(c)) + " " + vn[static_cast<std::size_t>(j)];
            first = false;
        }
        if (first) s = "0 " + (vn.empty() ? std::string("x_0") : vn[0]);
        return s;
    };

    out << "\\ decimal rendering, not exact\n";
    if (lp.objective) {
        out << (lp.objective->sense == Sense::Max ? "Maximize\n" : "Minimize\n");
        out << " obj: " << emit_terms(lp.objective->terms) << "\n";
    } else {
        out << "Minimize\n obj: 0 " << (vn.empty() ? std::string("x") : vn[0]) << "\n";
    }
    out << "Subject To\n";
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
        const Row& row = lp.rows[r];
        out << " " << sanitize(row.name, "c", r) << ": " << emit_terms(row.terms);
        out << (row.rel == Rel::Le ? " <= " : row.rel == Rel::Ge ? " >= " : " = ") << num(row.rhs) << "\n";
    }
    out << "Bounds\n";
    for (int j = 0; j < lp.n_vars(); ++j) {
        const auto& lo = lp.lower[j];
        const auto& hi = lp.upper[j];
        if (!lo && !hi)
            out << " " << vn[static_cast<std::size_t>(j)] << " free\n";
        else if (lo && hi)
            out << " " << num(*lo) << " <= " << vn[static_cast<std::size_t>(j)] << " <= " << num(*hi) << "\n";
        else if (lo)
            out << " " << vn[static_cast<std::size_t>(j)] << " >= " << num(*lo) << "\n";
        else
            out << " " << vn[static_cast<std::size_t>(j)] << " <= " << num(*hi) << "\n";
    }
    out << "End\n";
}

} // namespace gaidec::lp
