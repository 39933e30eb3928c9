#include "gaidec/polytope.hpp"

#include "gaidec/errors.hpp"
#include "gaidec/lp.hpp"

#include <algorithm>
#include <string>

namespace gaidec::polytope {

void validate_antichain(const Antichain& a, int k) {
    if (a.points.empty()) throw ValidationError("antichain must be nonempty");
    for (const auto& [x, y] : a.points) {
        if (x < 0 || x > k || y < 0 || y > k)
            throw ValidationError("antichain point (" + std::to_string(x) + "," + std::to_string(y) +
                                  ") outside the 0.." + std::to_string(k) + " lattice");
        if (x == 0 && y == 0) throw ValidationError("antichain may not contain (0,0)");
    }
    for (std::size_t s = 0; s < a.points.size(); ++s)
        for (std::size_t t = s + 1; t < a.points.size(); ++t) {
            const auto& p = a.points[s];
            const auto& q = a.points[t];
            const bool p_le_q = p.first <= q.first && p.second <= q.second;
            const bool q_le_p = q.first <= p.first && q.second <= p.second;
            if (p_le_q || q_le_p)
                throw ValidationError("antichain points (" + std::to_string(p.first) + "," +
                                      std::to_string(p.second) + ") and (" + std::to_string(q.first) + "," +
                                      std::to_string(q.second) + ") are comparable");
        }
}

namespace {

void extend_antichains(int k, std::vector<std::pair<int, int>>& chain, std::vector<Antichain>& out) {
    const auto [la, lb] = chain.back();
    for (int a = la + 1; a <= k; ++a)
        for (int b = 0; b < lb; ++b) {
            chain.emplace_back(a, b);
            out.push_back(Antichain{chain});
            extend_antichains(k, chain, out);
            chain.pop_back();
        }
}

} // namespace

std::vector<Antichain> enumerate_antichains(int k) {
    if (k < 1) throw ValidationError("level bound must be at least 1");
    std::vector<Antichain> out;
    std::vector<std::pair<int, int>> chain;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; b <= k; ++b) {
            if (a == 0 && b == 0) continue;
            chain.assign(1, {a, b});
            out.push_back(Antichain{chain});
            extend_antichains(k, chain, out);
        }
    std::sort(out.begin(), out.end(), [](const Antichain& x, const Antichain& y) {
        if (x.points.size() != y.points.size()) return x.points.size() < y.points.size();
        return x.points < y.points;
    });
    return out;
}

namespace {

VertexCapacity finish_vertex(int n, int k, kary::MobiusMap mobius) {
    kary::KaryGame game = kary::zeta(mobius);
    for (const Rat& val : game.values)
        if (val != 0 && val != 1) throw InternalCheckError("vertex capacity is not 0-1-valued");

    std::vector<int> supp = kary::support(game);
    if (supp.size() > 2) throw InternalCheckError("vertex capacity touches more than two axes");

    std::vector<std::vector<int>> local;
    for (const auto& [pt, coef] : mobius.coeffs) {
        if (coef != 1) continue; // +1 atoms are exactly the minimal winning coalitions
        std::vector<int> proj;
        for (int axis : supp) proj.push_back(pt.coords[static_cast<std::size_t>(axis)]);
        local.push_back(std::move(proj));
    }
    std::sort(local.begin(), local.end());

    VertexCapacity v{n, k, std::move(supp), std::move(local), std::move(mobius),
                     kary::KaryCapacity(std::move(game))};
    return v;
}

} // namespace

VertexCapacity singleton_vertex(int i, int level, int n, int k) {
    if (n < 1 || k < 1) throw ValidationError("need n >= 1 and k >= 1");
    if (i < 0 || i >= n) throw ValidationError("axis out of range");
    if (level < 1 || level > k) throw ValidationError("threshold level must be in 1..k");
    kary::MobiusMap m;
    m.n = n;
    m.k = k;
    GridPoint pt;
    pt.coords.assign(static_cast<std::size_t>(n), 0);
    pt.coords[static_cast<std::size_t>(i)] = level;
    m.coeffs[pt] = 1;
    return finish_vertex(n, k, std::move(m));
}

VertexCapacity vertex_from_antichain(const Antichain& a, int i, int j, int n, int k) {
    if (n < 2 || k < 1) throw ValidationError("need n >= 2 and k >= 1");
    if (i < 0 || j <= i || j >= n) throw ValidationError("need axes 0 <= i < j < n");
    validate_antichain(a, k);

    std::vector<std::pair<int, int>> pts = a.points;
    std::sort(pts.begin(), pts.end());

    kary::MobiusMap m;
    m.n = n;
    m.k = k;
    const auto embed_point = [&](int x, int y) {
        GridPoint pt;
        pt.coords.assign(static_cast<std::size_t>(n), 0);
        pt.coords[static_cast<std::size_t>(i)] = x;
        pt.coords[static_cast<std::size_t>(j)] = y;
        return pt;
    };
    for (const auto& [x, y] : pts) m.coeffs[embed_point(x, y)] += 1;
    for (std::size_t t = 0; t + 1 < pts.size(); ++t) {
        // join of consecutive points: first coordinates ascend, seconds descend
        m.coeffs[embed_point(pts[t + 1].first, pts[t].second)] -= 1;
    }
    return finish_vertex(n, k, std::move(m));
}

std::vector<GridPoint> minimal_winning_coalitions(const kary::KaryGame& v) {
    for (const Rat& val : v.values)
        if (val != 0 && val != 1) throw ValidationError("game is not 0-1-valued");
    const LevelGrid g = v.grid();
    std::vector<GridPoint> out;
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        if (v.values[idx] == 1) {
            bool minimal = true;
            for (int i = 0; i < g.arity() && minimal; ++i) {
                if (z.coords[static_cast<std::size_t>(i)] == 0) continue;
                if (v.values[idx - g.stride(i)] == 1) minimal = false;
            }
            if (minimal) out.push_back(z);
        }
        ++idx;
    } while (g.next(z));
    return out;
}

VertexCensus count_vertices(int n, int k) {
    if (n < 1 || k < 1) throw ValidationError("need n >= 1 and k >= 1");
    VertexCensus c;
    c.n = n;
    c.k = k;
    c.per_singleton = k;
    c.per_pair = binomial(2 * k + 2, k + 1) - 2;
    c.total = c.per_pair * n * (n - 1) / 2 - BigInt(k) * n * (n - 2);
    return c;
}

void enumerate_vertices(int n, int k, const std::function<void(const VertexCapacity&)>& fn) {
    if (n < 1 || k < 1) throw ValidationError("need n >= 1 and k >= 1");
    for (int i = 0; i < n; ++i)
        for (int level = 1; level <= k; ++level) fn(singleton_vertex(i, level, n, k));
    if (n < 2) return;
    const std::vector<Antichain> antichains = enumerate_antichains(k);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (const Antichain& a : antichains) {
                // one-axis antichains duplicate singleton vertices
                if (a.points.size() == 1 && (a.points[0].first == 0 || a.points[0].second == 0)) continue;
                fn(vertex_from_antichain(a, i, j, n, k));
            }
}

std::vector<VertexCapacity> enumerate_vertices(int n, int k) {
    const VertexCensus census = count_vertices(n, k);
    if (census.total > 200000) throw BudgetError("vertex list too large to materialize: " + census.total.get_str());
    std::vector<VertexCapacity> out;
    out.reserve(census.total.get_ui());
    enumerate_vertices(n, k, [&](const VertexCapacity& v) { out.push_back(v); });
    return out;
}

bool is_extreme_bruteforce(const kary::KaryCapacity& v) {
    const int deg = kary::p_additivity_degree(v.game());
    if (deg > 2) throw ValidationError("capacity is not 2-additive (degree " + std::to_string(deg) + ")");

    const LevelGrid g = v.game().grid();

    // Perturbation directions live in Mobius coordinates on the <=2-support
    // atoms; zero-grounding and 2-additivity are then automatic.
    std::vector<GridPoint> atoms;
    {
        GridPoint z = g.origin();
        do {
            const int s = support_size(z);
            if (s >= 1 && s <= 2) atoms.push_back(z);
        } while (g.next(z));
    }

    lp::LinearProgram prog;
    for (const GridPoint& atom : atoms) prog.add_var("d_" + grid_point_str(atom), Rat(-1), Rat(1));

    // Normalization must stay fixed: the perturbation vanishes at the top.
    {
        lp::Row row;
        for (std::size_t a = 0; a < atoms.size(); ++a) row.terms.emplace_back(static_cast<int>(a), Rat(1));
        row.rel = lp::Rel::Eq;
        row.rhs = 0;
        row.name = "top";
        prog.rows.push_back(std::move(row));
    }

    // Every tight monotonicity constraint must stay tight: the perturbation's
    // increment across the covering pair is zero. Atoms below z that reach
    // z_i on axis i are exactly those contributing to the increment.
    {
        GridPoint z = g.origin();
        std::size_t idx = 0;
        do {
            for (int i = 0; i < g.arity(); ++i) {
                const int zi = z.coords[static_cast<std::size_t>(i)];
                if (zi == 0) continue;
                if (v.game().values[idx] != v.game().values[idx - g.stride(i)]) continue;
                lp::Row row;
                for (std::size_t a = 0; a < atoms.size(); ++a) {
                    const GridPoint& y = atoms[a];
                    if (y.coords[static_cast<std::size_t>(i)] != zi) continue;
                    if (leq(y, z)) row.terms.emplace_back(static_cast<int>(a), Rat(1));
                }
                if (row.terms.empty()) continue;
                row.rel = lp::Rel::Eq;
                row.rhs = 0;
                row.name = "tight_" + grid_point_str(z) + "_" + std::to_string(i);
                prog.rows.push_back(std::move(row));
            }
            ++idx;
        } while (g.next(z));
    }

    for (std::size_t a = 0; a < atoms.size(); ++a) {
        prog.objective = lp::Objective{lp::Sense::Max, {{static_cast<int>(a), Rat(1)}}};
        const lp::LpOutcome out = lp::solve(prog);
        if (out.status != lp::LpStatus::Optimal) throw InternalCheckError("extremality probe LP did not solve");
        if (*out.objective_value > 0) return false;
    }
    return true;
}

std::vector<kary::KaryCapacity> enumerate_01_2additive_bruteforce(int n, int k) {
    if (n < 1 || k < 1) throw ValidationError("need n >= 1 and k >= 1");
    const LevelGrid g = LevelGrid::uniform(n, k);
    const std::size_t total = g.size();
    if (total > 32) throw BudgetError("grid too large for the exhaustive 0-1 scan");

    std::vector<kary::KaryCapacity> out;
    std::vector<Rat> values(total, Rat(0));
    std::uint64_t nodes = 0;

    // Precompute covering predecessors per index.
    std::vector<std::vector<std::size_t>> preds(total);
    {
        GridPoint z = g.origin();
        std::size_t idx = 0;
        do {
            for (int i = 0; i < n; ++i)
                if (z.coords[static_cast<std::size_t>(i)] > 0) preds[idx].push_back(idx - g.stride(i));
            ++idx;
        } while (g.next(z));
    }

    const auto dfs = [&](const auto& self, std::size_t idx) -> void {
        if (++nodes > 50'000'000) throw BudgetError("exhaustive 0-1 scan exceeded its node budget");
        if (idx == total) {
            kary::KaryGame game(n, k, values);
            if (kary::p_additivity_degree(game) <= 2) out.emplace_back(std::move(game));
            return;
        }
        bool forced_one = idx + 1 == total; // the top must be 1
        for (std::size_t p : preds[idx])
            if (values[p] == 1) forced_one = true;
        if (idx == 0) {
            values[idx] = 0;
            self(self, idx + 1);
            return;
        }
        if (!forced_one) {
            values[idx] = 0;
            self(self, idx + 1);
        }
        values[idx] = 1;
        self(self, idx + 1);
        values[idx] = 0;
    };
    dfs(dfs, 0);
    return out;
}

} // namespace gaidec::polytope
