#include "gaidec/gai.hpp"

#include "gaidec/errors.hpp"
#include "gaidec/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>

namespace gaidec::gai {

int AttributeSpace::hypercube_k() const {
    int k = 0;
    for (int i = 0; i < arity(); ++i) k = std::max(k, max_level(i));
    return k;
}

LevelGrid AttributeSpace::grid() const {
    std::vector<int> card(attributes.size());
    for (int i = 0; i < arity(); ++i) card[static_cast<std::size_t>(i)] = max_level(i) + 1;
    return LevelGrid{card};
}

void AttributeSpace::validate() const {
    if (attributes.empty()) throw ValidationError("attribute space must have at least one attribute");
    for (const auto& a : attributes)
        if (a.levels.empty()) throw ValidationError("attribute '" + a.name + "' has no levels");
}

LevelGrid GaiTerm::scope_grid(const AttributeSpace& space) const {
    std::vector<int> card(scope.size());
    for (std::size_t t = 0; t < scope.size(); ++t) card[t] = space.max_level(scope[t]) + 1;
    return LevelGrid{card};
}

const Rat& GaiTerm::at(const AttributeSpace& space, const Alternative& x) const {
    const LevelGrid g = scope_grid(space);
    GridPoint proj;
    proj.coords.resize(scope.size());
    for (std::size_t t = 0; t < scope.size(); ++t)
        proj.coords[t] = x.coords[static_cast<std::size_t>(scope[t])];
    return table[g.index_of(proj)];
}

void GaiModel::validate() const {
    space.validate();
    const int n = space.arity();
    for (const auto& term : terms) {
        if (term.scope.empty()) throw ValidationError("term scope must be nonempty");
        for (std::size_t t = 0; t < term.scope.size(); ++t) {
            const int a = term.scope[t];
            if (a < 0 || a >= n) throw ValidationError("term scope attribute index out of range");
            if (t > 0 && term.scope[t - 1] >= a)
                throw ValidationError("term scope must be strictly increasing");
        }
        if (term.table.size() != term.scope_grid(space).size())
            throw ValidationError("term table size does not match its scope grid");
    }
}

const Rat& TabulatedFunction::at(const Alternative& x) const { return values[space.grid().index_of(x)]; }
Rat& TabulatedFunction::at(const Alternative& x) { return values[space.grid().index_of(x)]; }

void TabulatedFunction::validate() const {
    space.validate();
    if (values.size() != space.grid().size())
        throw ValidationError("tabulated function has " + std::to_string(values.size()) + " values, grid has " +
                              std::to_string(space.grid().size()));
}

Rat evaluate(const GaiModel& model, const Alternative& x) {
    if (x.coords.size() != static_cast<std::size_t>(model.space.arity()))
        throw ValidationError("alternative arity does not match the attribute space");
    if (!model.space.grid().contains(x)) throw ValidationError("alternative is outside the attribute space");
    Rat total = 0;
    for (const auto& term : model.terms) total += term.at(model.space, x);
    return total;
}

TabulatedFunction tabulate(const GaiModel& model) {
    model.validate();
    const LevelGrid g = model.space.grid();
    TabulatedFunction out;
    out.space = model.space;
    out.values.assign(g.size(), Rat(0));

    // Per-term strided accumulation: project each grid index once.
    for (const auto& term : model.terms) {
        const LevelGrid sg = term.scope_grid(model.space);
        GridPoint x = g.origin();
        GridPoint proj;
        proj.coords.resize(term.scope.size());
        std::size_t idx = 0;
        do {
            for (std::size_t t = 0; t < term.scope.size(); ++t)
                proj.coords[t] = x.coords[static_cast<std::size_t>(term.scope[t])];
            out.values[idx] += term.table[sg.index_of(proj)];
            ++idx;
        } while (g.next(x));
    }
    return out;
}

namespace {

// First covering violation of monotonicity on the function's own grid, if any.
std::optional<std::pair<Alternative, Alternative>> find_monotone_violation(const TabulatedFunction& u) {
    const LevelGrid g = u.space.grid();
    GridPoint x = g.origin();
    std::size_t idx = 0;
    do {
        for (int i = 0; i < g.arity(); ++i) {
            if (x.coords[static_cast<std::size_t>(i)] >= g.card[static_cast<std::size_t>(i)] - 1) continue;
            const std::size_t up = idx + g.stride(i);
            if (u.values[idx] > u.values[up]) {
                GridPoint y = x;
                ++y.coords[static_cast<std::size_t>(i)];
                return std::make_pair(x, y);
            }
        }
        ++idx;
    } while (g.next(x));
    return std::nullopt;
}

} // namespace

kary::KaryCapacity embed(const TabulatedFunction& u, FillMode fill) {
    u.validate();
    const int n = u.space.arity();
    const int k = u.space.hypercube_k();
    if (k < 1) throw ValidationError("embedding needs at least two levels on some attribute");

    if (auto bad = find_monotone_violation(u)) {
        throw ValidationError("function is not monotone: value decreases from " + grid_point_str(bad->first) +
                              " to " + grid_point_str(bad->second));
    }
    const LevelGrid g = u.space.grid();
    if (u.values[g.index_of(g.origin())] != 0)
        throw ValidationError("function must be 0 at the all-worst profile, got " +
                              rat_str(u.values[g.index_of(g.origin())]));
    if (u.values[g.index_of(g.top())] != 1)
        throw ValidationError("function must be 1 at the all-best profile, got " +
                              rat_str(u.values[g.index_of(g.top())]));

    const LevelGrid cube = LevelGrid::uniform(n, k);
    kary::KaryGame game;
    game.n = n;
    game.k = k;
    game.values.assign(cube.size(), Rat(0));
    const Rat top_value = u.values[g.index_of(g.top())];

    parallel_for(cube.size(), [&](std::size_t idx) {
        GridPoint z = cube.point_at(idx);
        if (g.contains(z)) {
            game.values[idx] = u.values[g.index_of(z)];
        } else if (fill == FillMode::Clamp) {
            GridPoint c = z;
            for (int i = 0; i < n; ++i)
                c.coords[static_cast<std::size_t>(i)] =
                    std::min(c.coords[static_cast<std::size_t>(i)], g.card[static_cast<std::size_t>(i)] - 1);
            game.values[idx] = u.values[g.index_of(c)];
        } else {
            game.values[idx] = top_value;
        }
    });
    return kary::KaryCapacity(std::move(game));
}

kary::KaryCapacity embed(const GaiModel& model, FillMode fill) { return embed(tabulate(model), fill); }

Rat delta_variation(const TabulatedFunction& u, const std::vector<int>& P, const std::vector<int>& from,
                    const std::vector<int>& to, const Alternative& base) {
    const LevelGrid g = u.space.grid();
    const int n = g.arity();
    if (P.empty()) throw ValidationError("variation needs a nonempty axis set");
    if (P.size() > 63) throw BudgetError("variation over more than 63 axes");
    if (from.size() != P.size() || to.size() != P.size())
        throw ValidationError("from/to level lists must align with the axis set");
    for (std::size_t t = 0; t < P.size(); ++t) {
        const int a = P[t];
        if (a < 0 || a >= n) throw ValidationError("variation axis out of range");
        if (t > 0 && P[t - 1] >= a) throw ValidationError("variation axes must be strictly increasing");
        const int m = g.card[static_cast<std::size_t>(a)] - 1;
        if (from[t] < 0 || from[t] > m || to[t] < 0 || to[t] > m)
            throw ValidationError("variation level out of range on axis " + std::to_string(a));
    }
    if (!g.contains(base)) throw ValidationError("variation base point is outside the grid");

    const std::size_t p = P.size();
    Rat sum = 0;
    Alternative x = base;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << p); ++mask) {
        int flips = 0;
        for (std::size_t t = 0; t < p; ++t) {
            const bool on = (mask >> t) & 1u;
            x.coords[static_cast<std::size_t>(P[t])] = on ? to[t] : from[t];
            flips += on ? 1 : 0;
        }
        const bool even = ((static_cast<int>(p) - flips) % 2) == 0;
        if (even)
            sum += u.at(x);
        else
            sum -= u.at(x);
    }
    return sum;
}

std::string PAdditivityWitness::describe() const {
    std::ostringstream os;
    os << "variation over axes {";
    for (std::size_t t = 0; t < scope.size(); ++t) os << (t ? "," : "") << scope[t];
    os << "} from (";
    for (std::size_t t = 0; t < from.size(); ++t) os << (t ? "," : "") << from[t];
    os << ") to (";
    for (std::size_t t = 0; t < to.size(); ++t) os << (t ? "," : "") << to[t];
    os << ") is " << rat_str(delta_a) << " in context " << grid_point_str(context_a) << " but " << rat_str(delta_b)
       << " in context " << grid_point_str(context_b);
    return os.str();
}

PAdditivityCheck is_p_additive_function(const TabulatedFunction& u, int p) {
    u.validate();
    const int n = u.space.arity();
    if (p < 1 || p > n) throw ValidationError("additivity order must be between 1 and the arity");
    if (p == n) return {true, std::nullopt}; // no context left to vary

    const LevelGrid g = u.space.grid();

    // Axis-set combinations of size p, lexicographic.
    std::vector<int> P(static_cast<std::size_t>(p));
    for (int t = 0; t < p; ++t) P[static_cast<std::size_t>(t)] = t;

    const auto advance = [&]() -> bool {
        int t = p - 1;
        while (t >= 0 && P[static_cast<std::size_t>(t)] == n - p + t) --t;
        if (t < 0) return false;
        ++P[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < p; ++s) P[static_cast<std::size_t>(s)] = P[static_cast<std::size_t>(s - 1)] + 1;
        return true;
    };

    do {
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (!std::binary_search(P.begin(), P.end(), i)) rest.push_back(i);
        std::vector<int> ctx_card(rest.size());
        bool degenerate = false;
        for (std::size_t t = 0; t < P.size(); ++t)
            if (g.card[static_cast<std::size_t>(P[t])] == 1) degenerate = true;
        if (degenerate) continue; // no unit move possible on some axis of P
        for (std::size_t t = 0; t < rest.size(); ++t) ctx_card[t] = g.card[static_cast<std::size_t>(rest[t])];
        const LevelGrid ctx{ctx_card};

        // Unit cells of the P-subgrid.
        std::vector<int> cell_card(P.size());
        for (std::size_t t = 0; t < P.size(); ++t) cell_card[t] = g.card[static_cast<std::size_t>(P[t])] - 1;
        const LevelGrid cells{cell_card};

        GridPoint cell = cells.origin();
        do {
            std::vector<int> from(P.size()), to(P.size());
            for (std::size_t t = 0; t < P.size(); ++t) {
                from[t] = cell.coords[t];
                to[t] = cell.coords[t] + 1;
            }
            std::vector<Rat> deltas(ctx.size());
            parallel_for(ctx.size(), [&](std::size_t ci) {
                GridPoint c = ctx.point_at(ci);
                Alternative base = g.origin();
                for (std::size_t t = 0; t < rest.size(); ++t)
                    base.coords[static_cast<std::size_t>(rest[t])] = c.coords[t];
                deltas[ci] = delta_variation(u, P, from, to, base);
            });
            // Compare along covering context moves only; equality propagates.
            GridPoint c = ctx.origin();
            std::size_t ci = 0;
            do {
                for (int t = 0; t < ctx.arity(); ++t) {
                    if (c.coords[static_cast<std::size_t>(t)] >= ctx.card[static_cast<std::size_t>(t)] - 1) continue;
                    const std::size_t up = ci + ctx.stride(t);
                    if (deltas[ci] != deltas[up]) {
                        PAdditivityWitness w;
                        w.scope = P;
                        w.from = from;
                        w.to = to;
                        Alternative a = g.origin(), b = g.origin();
                        for (std::size_t s = 0; s < rest.size(); ++s) {
                            a.coords[static_cast<std::size_t>(rest[s])] = c.coords[s];
                            b.coords[static_cast<std::size_t>(rest[s])] = c.coords[s];
                        }
                        for (std::size_t s = 0; s < P.size(); ++s) {
                            a.coords[static_cast<std::size_t>(P[s])] = from[s];
                            b.coords[static_cast<std::size_t>(P[s])] = from[s];
                        }
                        b.coords[static_cast<std::size_t>(rest[static_cast<std::size_t>(t)])] += 1;
                        w.context_a = a;
                        w.context_b = b;
                        w.delta_a = deltas[ci];
                        w.delta_b = deltas[up];
                        return {false, w};
                    }
                }
                ++ci;
            } while (ctx.next(c));
        } while (cells.next(cell));
    } while (advance());

    return {true, std::nullopt};
}

GaiModel delta_decomposition(const TabulatedFunction& u, int p) {
    const PAdditivityCheck check = is_p_additive_function(u, p);
    if (!check.holds)
        throw ValidationError("function is not " + std::to_string(p) + "-additive: " + check.witness->describe());

    const int n = u.space.arity();
    const LevelGrid g = u.space.grid();
    GaiModel model;
    model.space = u.space;

    for (int size = 1; size <= p; ++size) {
        std::vector<int> S(static_cast<std::size_t>(size));
        for (int t = 0; t < size; ++t) S[static_cast<std::size_t>(t)] = t;
        const auto advance = [&]() -> bool {
            int t = size - 1;
            while (t >= 0 && S[static_cast<std::size_t>(t)] == n - size + t) --t;
            if (t < 0) return false;
            ++S[static_cast<std::size_t>(t)];
            for (int s = t + 1; s < size; ++s) S[static_cast<std::size_t>(s)] = S[static_cast<std::size_t>(s - 1)] + 1;
            return true;
        };
        do {
            GaiTerm term;
            term.scope = S;
            const LevelGrid sg = term.scope_grid(model.space);
            term.table.assign(sg.size(), Rat(0));
            GridPoint xs = sg.origin();
            std::size_t idx = 0;
            do {
                std::vector<int> from(S.size(), 0), to(S.size());
                for (std::size_t t = 0; t < S.size(); ++t) to[t] = xs.coords[t];
                term.table[idx] = delta_variation(u, S, from, to, g.origin());
                ++idx;
            } while (sg.next(xs));
            model.terms.push_back(std::move(term));
        } while (advance());
    }

    // The variations sum to u - u(all-worst); fold that constant into the
    // first singleton term so recomposition is exact.
    const Rat c0 = u.values[g.index_of(g.origin())];
    if (c0 != 0)
        for (auto& v : model.terms.front().table) v += c0;

    const TabulatedFunction back = tabulate(model);
    if (back.values != u.values) throw InternalCheckError("decomposition failed to recompose its input");
    return model;
}

GaiModel canonical_decomposition(const TabulatedFunction& u, const std::vector<std::vector<int>>& scopes,
                                 const Alternative& anchor) {
    u.validate();
    const int n = u.space.arity();
    const LevelGrid g = u.space.grid();
    if (scopes.empty()) throw ValidationError("need at least one scope");
    if (scopes.size() > 20) throw BudgetError("too many scopes for the inclusion-exclusion expansion");
    for (const auto& S : scopes) {
        if (S.empty()) throw ValidationError("scopes must be nonempty");
        for (std::size_t t = 0; t < S.size(); ++t) {
            if (S[t] < 0 || S[t] >= n) throw ValidationError("scope attribute index out of range");
            if (t > 0 && S[t - 1] >= S[t]) throw ValidationError("scopes must be strictly increasing");
        }
    }
    if (!g.contains(anchor)) throw ValidationError("anchor is outside the attribute space");

    GaiModel model;
    model.space = u.space;

    for (std::size_t j = 0; j < scopes.size(); ++j) {
        const std::vector<int>& Sj = scopes[j];

        // Precompute, for every nonempty K among the earlier scopes, the sign
        // and the axis set (intersection of the K scopes, then with Sj) whose
        // coordinates are read from the argument; everything else sits at the
        // anchor. K empty contributes the plain restriction to Sj.
        struct Piece {
            int sign;
            std::vector<int> axes; // subset of Sj kept from the argument
        };
        std::vector<Piece> pieces;
        pieces.push_back({1, Sj});
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << j); ++mask) {
            std::vector<int> inter;
            bool first = true;
            for (std::size_t t = 0; t < j; ++t) {
                if (!((mask >> t) & 1u)) continue;
                if (first) {
                    inter = scopes[t];
                    first = false;
                } else {
                    std::vector<int> next;
                    std::set_intersection(inter.begin(), inter.end(), scopes[t].begin(), scopes[t].end(),
                                          std::back_inserter(next));
                    inter = std::move(next);
                }
            }
            std::vector<int> kept;
            std::set_intersection(inter.begin(), inter.end(), Sj.begin(), Sj.end(), std::back_inserter(kept));
            const int bits = static_cast<int>(std::popcount(mask));
            pieces.push_back({(bits % 2) ? -1 : 1, std::move(kept)});
        }

        GaiTerm term;
        term.scope = Sj;
        const LevelGrid sg = term.scope_grid(model.space);
        term.table.assign(sg.size(), Rat(0));
        GridPoint xs = sg.origin();
        std::size_t idx = 0;
        do {
            Rat val = 0;
            Alternative full = anchor;
            for (const Piece& piece : pieces) {
                for (int a : Sj) full.coords[static_cast<std::size_t>(a)] = anchor.coords[static_cast<std::size_t>(a)];
                for (int a : piece.axes) {
                    const auto pos = std::lower_bound(Sj.begin(), Sj.end(), a) - Sj.begin();
                    full.coords[static_cast<std::size_t>(a)] = xs.coords[static_cast<std::size_t>(pos)];
                }
                if (piece.sign > 0)
                    val += u.at(full);
                else
                    val -= u.at(full);
            }
            term.table[idx] = val;
            ++idx;
        } while (sg.next(xs));
        model.terms.push_back(std::move(term));
    }
    return model;
}

} // namespace gaidec::gai
