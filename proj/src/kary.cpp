#include "gaidec/kary.hpp"

#include "gaidec/errors.hpp"
#include "gaidec/parallel.hpp"

#include <algorithm>

namespace gaidec::kary {

KaryGame::KaryGame(int n_, int k_) : n(n_), k(k_) {
    values.assign(grid().size(), Rat(0));
}

KaryGame::KaryGame(int n_, int k_, std::vector<Rat> values_) : n(n_), k(k_), values(std::move(values_)) {
    if (values.size() != grid().size())
        throw ValidationError("game table has " + std::to_string(values.size()) + " entries, expected " +
                              std::to_string(grid().size()));
}

const Rat& KaryGame::at(const GridPoint& z) const {
    return values[grid().index_of(z)];
}

Rat& KaryGame::at(const GridPoint& z) {
    return values[grid().index_of(z)];
}

CapacityReport check_capacity(const KaryGame& v) {
    CapacityReport rep;
    const LevelGrid g = v.grid();

    rep.zero_grounded = v.values.front() == 0;
    if (!rep.zero_grounded)
        rep.violations.push_back({g.origin(), std::nullopt,
                                  "value at origin is " + rat_str(v.values.front()) + ", expected 0"});

    rep.monotone = true;
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        for (int i = 0; i < v.n; ++i) {
            if (z[i] >= v.k) continue;
            const std::size_t up = idx + g.stride(i);
            if (v.values[idx] > v.values[up]) {
                rep.monotone = false;
                GridPoint to = z;
                to.coords[static_cast<std::size_t>(i)] += 1;
                rep.violations.push_back({z, to,
                                          rat_str(v.values[idx]) + " > " + rat_str(v.values[up]) +
                                              " along axis " + std::to_string(i)});
            }
        }
        ++idx;
    } while (g.next(z));

    rep.normalized = v.values.back() == 1;
    if (!rep.normalized)
        rep.violations.push_back({g.top(), std::nullopt,
                                  "value at top is " + rat_str(v.values.back()) + ", expected 1"});
    return rep;
}

KaryCapacity::KaryCapacity(KaryGame game) : game_(std::move(game)) {
    CapacityReport rep = check_capacity(game_);
    if (!rep.ok()) {
        std::string what = "not a capacity: " + rep.violations.front().what + " at " +
                           grid_point_str(rep.violations.front().at);
        throw ValidationError(what);
    }
}

KaryGame zeta_serial(const MobiusMap& m) {
    KaryGame v(m.n, m.k);
    const LevelGrid g = v.grid();
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        Rat acc(0);
        for (const auto& [y, c] : m.coeffs)
            if (leq(y, z)) acc += c;
        v.values[idx++] = acc;
    } while (g.next(z));
    return v;
}

KaryGame zeta(const MobiusMap& m) {
    KaryGame v(m.n, m.k);
    const LevelGrid g = v.grid();
    // flatten the sparse map once so iterations share nothing mutable
    std::vector<const GridPoint*> pts;
    std::vector<const Rat*> cs;
    pts.reserve(m.coeffs.size());
    cs.reserve(m.coeffs.size());
    for (const auto& [y, c] : m.coeffs) {
        pts.push_back(&y);
        cs.push_back(&c);
    }
    parallel_for(g.size(), [&](std::size_t idx) {
        const GridPoint z = g.point_at(idx);
        Rat acc(0);
        for (std::size_t a = 0; a < pts.size(); ++a)
            if (leq(*pts[a], z)) acc += *cs[a];
        v.values[idx] = acc;
    });
    return v;
}

namespace {

// m(z) as the alternating sum over the unit box below z.
Rat mobius_at(const KaryGame& v, const LevelGrid& g, std::size_t idx, const GridPoint& z) {
    std::vector<int> pos;
    for (int i = 0; i < z.dim(); ++i)
        if (z[i] > 0) pos.push_back(i);
    const unsigned bits = static_cast<unsigned>(pos.size());
    Rat acc(0);
    for (unsigned long mask = 0; mask < (1ul << bits); ++mask) {
        std::size_t j = idx;
        int lowered = 0;
        for (unsigned b = 0; b < bits; ++b)
            if (mask & (1ul << b)) {
                j -= g.stride(pos[b]);
                ++lowered;
            }
        if (lowered % 2 == 0)
            acc += v.values[j];
        else
            acc -= v.values[j];
    }
    return acc;
}

void require_shape(const KaryGame& v) {
    if (v.values.size() != v.grid().size()) throw ValidationError("malformed game table");
}

} // namespace

MobiusMap mobius_serial(const KaryGame& v) {
    require_shape(v);
    MobiusMap m{v.n, v.k, {}};
    const LevelGrid g = v.grid();
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        Rat c = mobius_at(v, g, idx, z);
        if (c != 0) m.coeffs.emplace(z, std::move(c));
        ++idx;
    } while (g.next(z));
    return m;
}

std::vector<Rat> mobius_dense(const KaryGame& v) {
    require_shape(v);
    const LevelGrid g = v.grid();
    std::vector<Rat> t = v.values;
    // Peel one axis at a time: replace t by its first difference along the
    // axis, descending so each cell reads its neighbour before it changes.
    // Chains along the axis are independent, hence the parallel loop.
    for (int i = 0; i < v.n; ++i) {
        const std::size_t stride = g.stride(i);
        const std::size_t levels = static_cast<std::size_t>(v.k) + 1;
        const std::size_t chains = g.size() / levels;
        parallel_for(chains, [&](std::size_t chain) {
            const std::size_t base = (chain / stride) * levels * stride + chain % stride;
            for (std::size_t c = levels - 1; c >= 1; --c)
                t[base + c * stride] -= t[base + (c - 1) * stride];
        });
    }
    return t;
}

MobiusMap mobius(const KaryGame& v) {
    std::vector<Rat> dense = mobius_dense(v);
    const LevelGrid g = v.grid();
    MobiusMap m{v.n, v.k, {}};
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        if (dense[idx] != 0) m.coeffs.emplace(z, std::move(dense[idx]));
        ++idx;
    } while (g.next(z));
    return m;
}

MobiusMap mobius_bruteforce(const KaryGame& v) {
    require_shape(v);
    const LevelGrid g = v.grid();
    // total work is sum over x of |{y <= x}|
    double work = 1.0;
    for (int c : g.card) work *= static_cast<double>(c) * (c + 1) / 2.0;
    if (work > 2e9)
        throw BudgetError("mobius_bruteforce work bound exceeded (budget 2e9 point pairs)");

    MobiusMap m{v.n, v.k, {}};
    GridPoint x = g.origin();
    do {
        // generic poset inversion: scan every y <= x and apply the product
        // chain Mobius function mu(y, x)
        Rat acc(0);
        LevelGrid box(std::vector<int>([&] {
            std::vector<int> c(x.coords.size());
            for (std::size_t i = 0; i < c.size(); ++i) c[i] = x.coords[i] + 1;
            return c;
        }()));
        GridPoint y = box.origin();
        do {
            int sign = 1;
            bool nonzero = true;
            for (int i = 0; i < x.dim(); ++i) {
                const int gap = x[i] - y[i];
                if (gap > 1) {
                    nonzero = false;
                    break;
                }
                if (gap == 1) sign = -sign;
            }
            if (nonzero) {
                if (sign > 0)
                    acc += v.at(y);
                else
                    acc -= v.at(y);
            }
        } while (box.next(y));
        if (acc != 0) m.coeffs.emplace(x, std::move(acc));
    } while (g.next(x));
    return m;
}

KaryCapacity unanimity(const GridPoint& x, int k) {
    const int n = x.dim();
    if (n < 1) throw ValidationError("unanimity needs at least one axis");
    if (support_size(x) == 0) throw ValidationError("unanimity at the origin is not a capacity");
    for (int i = 0; i < n; ++i)
        if (x[i] < 0 || x[i] > k) throw ValidationError("unanimity point outside the grid");
    KaryGame v(n, k);
    const LevelGrid g = v.grid();
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        if (leq(x, z)) v.values[idx] = 1;
        ++idx;
    } while (g.next(z));
    return KaryCapacity(std::move(v));
}

int p_additivity_degree(const KaryGame& v) {
    const std::vector<Rat> dense = mobius_dense(v);
    const LevelGrid g = v.grid();
    int degree = 0;
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        if (dense[idx] != 0) degree = std::max(degree, support_size(z));
        ++idx;
    } while (degree < v.n && g.next(z));
    return degree;
}

std::vector<int> support(const KaryGame& v) {
    const std::vector<Rat> dense = mobius_dense(v);
    const LevelGrid g = v.grid();
    std::vector<bool> hit(static_cast<std::size_t>(v.n), false);
    GridPoint z = g.origin();
    std::size_t idx = 0;
    do {
        if (dense[idx] != 0)
            for (int i = 0; i < z.dim(); ++i)
                if (z[i] > 0) hit[static_cast<std::size_t>(i)] = true;
        ++idx;
    } while (g.next(z));
    std::vector<int> s;
    for (int i = 0; i < v.n; ++i)
        if (hit[static_cast<std::size_t>(i)]) s.push_back(i);
    return s;
}

} // namespace gaidec::kary
