#include "gaidec/decompose.hpp"

#include "gaidec/errors.hpp"

#include <algorithm>
#include <string>

namespace gaidec::decompose {

ConstraintCensus constraint_census(const std::vector<int>& m) {
    const int n = static_cast<int>(m.size());
    if (n < 2) throw ValidationError("census needs at least two attributes");
    for (int mi : m)
        if (mi < 1) throw ValidationError("census needs every level bound >= 1");

    ConstraintCensus c;
    c.variables = 0;
    c.full_monotonicity_constraints = 0;
    c.decomposed_monotonicity_constraints = 0;
    for (int i = 0; i < n; ++i) {
        c.variables += m[static_cast<std::size_t>(i)] + 1;
        c.decomposed_monotonicity_constraints += m[static_cast<std::size_t>(i)];
        BigInt others = m[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j)
            if (j != i) others *= m[static_cast<std::size_t>(j)] + 1;
        c.full_monotonicity_constraints += others;
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int mi = m[static_cast<std::size_t>(i)];
            const int mj = m[static_cast<std::size_t>(j)];
            c.variables += BigInt(mi + 1) * (mj + 1);
            c.decomposed_monotonicity_constraints += BigInt(mi) * (mj + 1) + BigInt(mj) * (mi + 1);
        }
    return c;
}

ConstraintCensus constraint_census(int n, int k) {
    if (n < 2) throw ValidationError("census needs at least two attributes");
    if (k < 1) throw ValidationError("census needs k >= 1");
    return constraint_census(std::vector<int>(static_cast<std::size_t>(n), k));
}

int MonotoneGaiDecomposition::pair_index(int i, int j) const {
    if (i < 0 || j <= i || j >= n) throw ValidationError("pair index out of range");
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

const Rat& MonotoneGaiDecomposition::pair_at(int i, int j, int a, int b) const {
    return pair[static_cast<std::size_t>(pair_index(i, j))][static_cast<std::size_t>(a * (k + 1) + b)];
}

Rat& MonotoneGaiDecomposition::pair_at(int i, int j, int a, int b) {
    return pair[static_cast<std::size_t>(pair_index(i, j))][static_cast<std::size_t>(a * (k + 1) + b)];
}

namespace {

void check_table(const std::vector<Rat>& t, int rows, int cols, const std::string& label) {
    if (t.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw ValidationError(label + " has the wrong shape");
    if (t.front() != 0) throw ValidationError(label + " is " + rat_str(t.front()) + " at its origin, expected 0");
    for (int a = 0; a < rows; ++a)
        for (int b = 0; b < cols; ++b) {
            const Rat& val = t[static_cast<std::size_t>(a * cols + b)];
            if (val < 0 || val > 1) throw ValidationError(label + " leaves [0,1]: " + rat_str(val));
            if (a > 0 && val < t[static_cast<std::size_t>((a - 1) * cols + b)])
                throw ValidationError(label + " decreases along its first coordinate");
            if (b > 0 && val < t[static_cast<std::size_t>(a * cols + b - 1)])
                throw ValidationError(label + " decreases along its second coordinate");
        }
}

} // namespace

void MonotoneGaiDecomposition::validate() const {
    if (n < 1 || k < 1) throw ValidationError("decomposition needs n >= 1 and k >= 1");
    if (singleton.size() != static_cast<std::size_t>(n)) throw ValidationError("wrong singleton table count");
    if (pair.size() != static_cast<std::size_t>(n) * (n - 1) / 2) throw ValidationError("wrong pair table count");
    for (int i = 0; i < n; ++i)
        check_table(singleton[static_cast<std::size_t>(i)], 1, k + 1, "table u_" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            check_table(pair[static_cast<std::size_t>(pair_index(i, j))], k + 1, k + 1,
                        "table u_" + std::to_string(i) + "_" + std::to_string(j));
}

kary::KaryCapacity recompose(const MonotoneGaiDecomposition& d) {
    d.validate();
    kary::KaryGame v(d.n, d.k);
    const LevelGrid g = v.grid();
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        Rat acc(0);
        for (int i = 0; i < d.n; ++i) acc += d.singleton[static_cast<std::size_t>(i)][static_cast<std::size_t>(z[i])];
        for (int i = 0; i < d.n; ++i)
            for (int j = i + 1; j < d.n; ++j) acc += d.pair_at(i, j, z[i], z[j]);
        v.values[idx++] = acc;
    } while (g.next(z));
    return kary::KaryCapacity(std::move(v));
}

TermLayout::TermLayout(std::vector<int> m_) : m(std::move(m_)) {
    if (m.empty()) throw ValidationError("term layout needs at least one attribute");
    for (int mi : m)
        if (mi < 1) throw ValidationError("term layout needs every level bound >= 1");
    int at = 0;
    singleton_offset_.resize(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        singleton_offset_[i] = at;
        at += m[i];
    }
    pair_offset_.resize(m.size() * (m.size() - 1) / 2);
    std::size_t p = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            pair_offset_[p++] = at;
            at += (m[i] + 1) * (m[j] + 1) - 1;
        }
    total_ = at;
}

int TermLayout::var_singleton(int i, int level) const {
    return singleton_offset_[static_cast<std::size_t>(i)] + level - 1;
}

int TermLayout::var_pair(int i, int j, int a, int b) const {
    const std::size_t p =
        static_cast<std::size_t>(i) * m.size() - static_cast<std::size_t>(i) * (i + 1) / 2 +
        static_cast<std::size_t>(j - i - 1);
    // cells in row-major order with the pinned (0,0) removed
    return pair_offset_[p] + a * (m[static_cast<std::size_t>(j)] + 1) + b - 1;
}

void TermLayout::add_variables(lp::LinearProgram& prog) const {
    for (std::size_t i = 0; i < m.size(); ++i)
        for (int level = 1; level <= m[i]; ++level)
            prog.add_var("u" + std::to_string(i) + "_" + std::to_string(level), Rat(0), Rat(1));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            for (int a = 0; a <= m[i]; ++a)
                for (int b = 0; b <= m[j]; ++b) {
                    if (a == 0 && b == 0) continue;
                    prog.add_var("u" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(a) +
                                     "_" + std::to_string(b),
                                 Rat(0), Rat(1));
                }
}

void TermLayout::add_monotonicity_rows(lp::LinearProgram& prog) const {
    const int n_ = n();
    const auto push = [&](std::vector<std::pair<int, Rat>> terms, std::string name) {
        lp::Row row;
        row.terms = std::move(terms);
        row.rel = lp::Rel::Ge;
        row.rhs = 0;
        row.name = std::move(name);
        prog.rows.push_back(std::move(row));
    };
    for (int i = 0; i < n_; ++i)
        for (int level = 1; level <= m[static_cast<std::size_t>(i)]; ++level) {
            std::vector<std::pair<int, Rat>> terms{{var_singleton(i, level), Rat(1)}};
            if (level > 1) terms.emplace_back(var_singleton(i, level - 1), Rat(-1));
            push(std::move(terms), "mono_u" + std::to_string(i) + "_" + std::to_string(level));
        }
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
            const int mi = m[static_cast<std::size_t>(i)];
            const int mj = m[static_cast<std::size_t>(j)];
            for (int a = 1; a <= mi; ++a)
                for (int b = 0; b <= mj; ++b) {
                    std::vector<std::pair<int, Rat>> terms{{var_pair(i, j, a, b), Rat(1)}};
                    if (!(a - 1 == 0 && b == 0)) terms.emplace_back(var_pair(i, j, a - 1, b), Rat(-1));
                    push(std::move(terms), "mono_u" + std::to_string(i) + "_" + std::to_string(j) + "_a" +
                                               std::to_string(a) + "_" + std::to_string(b));
                }
            for (int b = 1; b <= mj; ++b)
                for (int a = 0; a <= mi; ++a) {
                    std::vector<std::pair<int, Rat>> terms{{var_pair(i, j, a, b), Rat(1)}};
                    if (!(a == 0 && b - 1 == 0)) terms.emplace_back(var_pair(i, j, a, b - 1), Rat(-1));
                    push(std::move(terms), "mono_u" + std::to_string(i) + "_" + std::to_string(j) + "_b" +
                                               std::to_string(a) + "_" + std::to_string(b));
                }
        }
}

std::vector<std::pair<int, Rat>> TermLayout::utility_terms(const std::vector<int>& x) const {
    if (x.size() != m.size()) throw ValidationError("alternative arity does not match the layout");
    std::vector<std::pair<int, Rat>> terms;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (x[i] < 0 || x[i] > m[i]) throw ValidationError("level out of range in utility expansion");
        if (x[i] > 0) terms.emplace_back(var_singleton(static_cast<int>(i), x[i]), Rat(1));
    }
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j)
            if (x[i] > 0 || x[j] > 0)
                terms.emplace_back(var_pair(static_cast<int>(i), static_cast<int>(j), x[i], x[j]), Rat(1));
    return terms;
}

namespace {

// Rejects inputs whose Mobius transform touches three or more axes, naming
// the offending coefficient. Recomputed from scratch on every call.
void require_two_additive(const kary::KaryGame& v) {
    const std::vector<Rat> dense = kary::mobius_dense(v);
    const LevelGrid g = v.grid();
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        if (support_size(z) > 2 && dense[idx] != 0)
            throw ValidationError("capacity is not 2-additive: Mobius coefficient " + rat_str(dense[idx]) +
                                  " at " + grid_point_str(z) + " touches " + std::to_string(support_size(z)) +
                                  " axes");
        ++idx;
    } while (g.next(z));
}

GridPoint axis_point(int n, int i, int a) {
    GridPoint z;
    z.coords.assign(static_cast<std::size_t>(n), 0);
    z.coords[static_cast<std::size_t>(i)] = a;
    return z;
}

GridPoint pair_point(int n, int i, int a, int j, int b) {
    GridPoint z = axis_point(n, i, a);
    z.coords[static_cast<std::size_t>(j)] = b;
    return z;
}

} // namespace

lp::LinearProgram build_monotone_lp(const kary::KaryCapacity& v, bool minimize_interaction) {
    require_two_additive(v.game());
    const int n = v.n();
    const int k = v.k();
    const TermLayout layout{std::vector<int>(static_cast<std::size_t>(n), k)};

    lp::LinearProgram prog;
    layout.add_variables(prog);
    layout.add_monotonicity_rows(prog);
    if (n >= 2) {
        const ConstraintCensus census = constraint_census(n, k);
        if (census.decomposed_monotonicity_constraints != BigInt(static_cast<long>(prog.rows.size())))
            throw InternalCheckError("monotonicity row count disagrees with the census");
    }

    const auto equality = [&](const GridPoint& z) {
        lp::Row row;
        row.terms = layout.utility_terms(z.coords);
        row.rel = lp::Rel::Eq;
        row.rhs = v.at(z);
        row.name = "fit_" + grid_point_str(z);
        prog.rows.push_back(std::move(row));
    };
    for (int i = 0; i < n; ++i)
        for (int a = 1; a <= k; ++a) equality(axis_point(n, i, a));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) equality(pair_point(n, i, a, j, b));

    if (minimize_interaction) {
        lp::Objective obj;
        obj.sense = lp::Sense::Min;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) obj.terms.emplace_back(layout.var_pair(i, j, k, k), Rat(1));
        prog.objective = std::move(obj);
    }
    return prog;
}

namespace {

MonotoneGaiDecomposition tables_from_point(const TermLayout& layout, int n, int k, const std::vector<Rat>& x) {
    MonotoneGaiDecomposition d;
    d.n = n;
    d.k = k;
    d.singleton.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(k) + 1, Rat(0)));
    d.pair.assign(static_cast<std::size_t>(n) * (n - 1) / 2,
                  std::vector<Rat>((static_cast<std::size_t>(k) + 1) * (k + 1), Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int level = 1; level <= k; ++level)
            d.singleton[static_cast<std::size_t>(i)][static_cast<std::size_t>(level)] =
                x[static_cast<std::size_t>(layout.var_singleton(i, level))];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int a = 0; a <= k; ++a)
                for (int b = 0; b <= k; ++b) {
                    if (a == 0 && b == 0) continue;
                    d.pair_at(i, j, a, b) = x[static_cast<std::size_t>(layout.var_pair(i, j, a, b))];
                }
    return d;
}

std::vector<Rat> point_from_tables(const TermLayout& layout, const MonotoneGaiDecomposition& d) {
    std::vector<Rat> x(static_cast<std::size_t>(layout.total_vars()), Rat(0));
    for (int i = 0; i < d.n; ++i)
        for (int level = 1; level <= d.k; ++level)
            x[static_cast<std::size_t>(layout.var_singleton(i, level))] =
                d.singleton[static_cast<std::size_t>(i)][static_cast<std::size_t>(level)];
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j)
            for (int a = 0; a <= d.k; ++a)
                for (int b = 0; b <= d.k; ++b) {
                    if (a == 0 && b == 0) continue;
                    x[static_cast<std::size_t>(layout.var_pair(i, j, a, b))] = d.pair_at(i, j, a, b);
                }
    return x;
}

// Closed-form solution of the monotone-decomposition constraints. Start from
// the raw interaction parts w_ij(a,b) = v(a e_i + b e_j) - v(a e_i) - v(b e_j),
// which recompose v exactly but may dip below zero or decrease. Shift each
// pair table by axis corrections E chosen as the smallest cumulative amounts
// restoring monotonicity, and charge those corrections to the singleton
// tables. The singleton increments then equal minimized covering-pair
// increments of v itself, so they stay nonnegative.
MonotoneGaiDecomposition direct_decompose(const kary::KaryCapacity& v) {
    const int n = v.n();
    const int k = v.k();
    MonotoneGaiDecomposition d;
    d.n = n;
    d.k = k;
    d.singleton.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(k) + 1, Rat(0)));
    d.pair.assign(static_cast<std::size_t>(n) * (n - 1) / 2,
                  std::vector<Rat>((static_cast<std::size_t>(k) + 1) * (k + 1), Rat(0)));

    // v along each axis
    std::vector<std::vector<Rat>> axis(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(k) + 1));
    for (int i = 0; i < n; ++i)
        for (int a = 0; a <= k; ++a) axis[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] = v.at(axis_point(n, i, a));

    // total axis-correction charged against each singleton table
    std::vector<std::vector<Rat>> charge(static_cast<std::size_t>(n),
                                         std::vector<Rat>(static_cast<std::size_t>(k) + 1, Rat(0)));

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::vector<Rat> w((static_cast<std::size_t>(k) + 1) * (k + 1));
            const auto wat = [&](int a, int b) -> Rat& { return w[static_cast<std::size_t>(a * (k + 1) + b)]; };
            for (int a = 0; a <= k; ++a)
                for (int b = 0; b <= k; ++b)
                    wat(a, b) = v.at(pair_point(n, i, a, j, b)) - axis[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] -
                                axis[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)];

            // smallest cumulative shifts that keep w + E_i + E_j nondecreasing;
            // the b = 0 column (where w vanishes) makes them nonnegative
            std::vector<Rat> ei(static_cast<std::size_t>(k) + 1, Rat(0));
            std::vector<Rat> ej(static_cast<std::size_t>(k) + 1, Rat(0));
            for (int a = 1; a <= k; ++a) {
                Rat worst = wat(a - 1, 0) - wat(a, 0); // zero: the b=0 column vanishes
                for (int b = 1; b <= k; ++b) {
                    Rat cand = wat(a - 1, b) - wat(a, b);
                    if (cand > worst) worst = std::move(cand);
                }
                ei[static_cast<std::size_t>(a)] = ei[static_cast<std::size_t>(a - 1)] + worst;
            }
            for (int b = 1; b <= k; ++b) {
                Rat worst = wat(0, b - 1) - wat(0, b);
                for (int a = 1; a <= k; ++a) {
                    Rat cand = wat(a, b - 1) - wat(a, b);
                    if (cand > worst) worst = std::move(cand);
                }
                ej[static_cast<std::size_t>(b)] = ej[static_cast<std::size_t>(b - 1)] + worst;
            }

            std::vector<Rat>& table = d.pair[static_cast<std::size_t>(d.pair_index(i, j))];
            for (int a = 0; a <= k; ++a)
                for (int b = 0; b <= k; ++b)
                    table[static_cast<std::size_t>(a * (k + 1) + b)] =
                        wat(a, b) + ei[static_cast<std::size_t>(a)] + ej[static_cast<std::size_t>(b)];
            for (int a = 0; a <= k; ++a) {
                charge[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] += ei[static_cast<std::size_t>(a)];
                charge[static_cast<std::size_t>(j)][static_cast<std::size_t>(a)] += ej[static_cast<std::size_t>(a)];
            }
        }

    for (int i = 0; i < n; ++i)
        for (int a = 0; a <= k; ++a)
            d.singleton[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] =
                axis[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] - charge[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)];
    return d;
}

} // namespace

MonotoneGaiDecomposition monotone_decompose(const kary::KaryCapacity& v, const DecomposeOptions& options) {
    const bool simplex = options.engine == Engine::Simplex || options.minimize_interaction;
    lp::LinearProgram prog = build_monotone_lp(v, simplex && options.minimize_interaction);

    MonotoneGaiDecomposition d;
    const TermLayout layout{std::vector<int>(static_cast<std::size_t>(v.n()), v.k())};
    if (simplex) {
        const lp::LpOutcome out = lp::solve(prog);
        if (out.status != lp::LpStatus::Optimal && out.status != lp::LpStatus::Feasible)
            throw InternalCheckError("decomposition program unsolvable on validated input");
        d = tables_from_point(layout, v.n(), v.k(), out.point);
    } else {
        d = direct_decompose(v);
    }

    d.validate();
    std::string why;
    if (!lp::check_point(prog, point_from_tables(layout, d), &why))
        throw InternalCheckError("decomposition violates its constraint system: " + why);
    return d;
}

ConvexCombination vertex_decompose(const kary::KaryCapacity& v) {
    require_two_additive(v.game());
    const int n = v.n();
    const int k = v.k();
    const std::vector<polytope::VertexCapacity> vertices = polytope::enumerate_vertices(n, k);
    if (vertices.size() > 20000) throw BudgetError("vertex list too large for the weight program");

    lp::LinearProgram prog;
    for (std::size_t e = 0; e < vertices.size(); ++e)
        prog.add_var("w" + std::to_string(e), Rat(0), Rat(1));

    {
        lp::Row row;
        for (std::size_t e = 0; e < vertices.size(); ++e) row.terms.emplace_back(static_cast<int>(e), Rat(1));
        row.rel = lp::Rel::Eq;
        row.rhs = 1;
        row.name = "mass";
        prog.rows.push_back(std::move(row));
    }
    const auto equality = [&](const GridPoint& z) {
        lp::Row row;
        for (std::size_t e = 0; e < vertices.size(); ++e)
            if (vertices[e].capacity.at(z) == 1) row.terms.emplace_back(static_cast<int>(e), Rat(1));
        row.rel = lp::Rel::Eq;
        row.rhs = v.at(z);
        row.name = "fit_" + grid_point_str(z);
        prog.rows.push_back(std::move(row));
    };
    for (int i = 0; i < n; ++i)
        for (int a = 1; a <= k; ++a) equality(axis_point(n, i, a));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int a = 1; a <= k; ++a)
                for (int b = 1; b <= k; ++b) equality(pair_point(n, i, a, j, b));

    const lp::LpOutcome out = lp::solve(prog);
    if (out.status != lp::LpStatus::Feasible && out.status != lp::LpStatus::Optimal)
        throw InternalCheckError("vertex weight program unsolvable on validated input");

    ConvexCombination combo;
    for (std::size_t e = 0; e < vertices.size(); ++e)
        if (out.point[e] != 0) combo.atoms.emplace_back(vertices[e], out.point[e]);
    return combo;
}

MonotoneGaiDecomposition to_monotone_decomposition(const ConvexCombination& combo, int n, int k) {
    MonotoneGaiDecomposition d;
    d.n = n;
    d.k = k;
    d.singleton.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(k) + 1, Rat(0)));
    d.pair.assign(static_cast<std::size_t>(n) * (n - 1) / 2,
                  std::vector<Rat>((static_cast<std::size_t>(k) + 1) * (k + 1), Rat(0)));
    for (const auto& [vert, weight] : combo.atoms) {
        if (vert.n != n || vert.k != k) throw ValidationError("combination atom on a different grid");
        if (weight <= 0) throw ValidationError("combination weights must be positive");
        if (vert.support.size() == 1) {
            const int i = vert.support[0];
            for (int a = 0; a <= k; ++a)
                d.singleton[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)] +=
                    weight * vert.capacity.at(axis_point(n, i, a));
        } else if (vert.support.size() == 2) {
            const int i = vert.support[0];
            const int j = vert.support[1];
            for (int a = 0; a <= k; ++a)
                for (int b = 0; b <= k; ++b)
                    d.pair_at(i, j, a, b) += weight * vert.capacity.at(pair_point(n, i, a, j, b));
        } else {
            throw ValidationError("combination atom with unexpected support size");
        }
    }
    d.validate();
    return d;
}

} // namespace gaidec::decompose
