#pragma once

// Shared generators and evaluation helpers for the test suites. Everything
// is seeded explicitly so failures reproduce.

#include "gaidec/decompose.hpp"
#include "gaidec/gai.hpp"
#include "gaidec/kary.hpp"
#include "gaidec/polytope.hpp"
#include "gaidec/rational.hpp"

#include <algorithm>
#include <random>
#include <vector>

namespace testutil {

using gaidec::Rat;

inline Rat random_rat(std::mt19937_64& rng, int lo = -20, int hi = 20, int max_den = 8) {
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng)) / den(rng);
}

inline gaidec::kary::KaryGame random_game(int n, int k, std::mt19937_64& rng) {
    gaidec::kary::KaryGame v(n, k);
    for (auto& value : v.values) value = random_rat(rng);
    return v;
}

// Random point of the 2-additive capacity polytope: a convex combination of
// its enumerated vertices with small random weights.
inline gaidec::kary::KaryCapacity random_vertex_combination(int n, int k, std::mt19937_64& rng,
                                                            int max_atoms = 5) {
    const std::vector<gaidec::polytope::VertexCapacity> vertices = gaidec::polytope::enumerate_vertices(n, k);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(vertices.size()) - 1);
    std::uniform_int_distribution<int> atom_count(1, max_atoms);
    std::uniform_int_distribution<int> weight(1, 9);

    const int atoms = atom_count(rng);
    std::vector<int> chosen;
    std::vector<int> weights;
    int total = 0;
    for (int a = 0; a < atoms; ++a) {
        chosen.push_back(pick(rng));
        weights.push_back(weight(rng));
        total += weights.back();
    }
    gaidec::kary::KaryGame game(n, k);
    for (int a = 0; a < atoms; ++a) {
        const Rat lambda = Rat(weights[static_cast<std::size_t>(a)]) / total;
        const auto& atom = vertices[static_cast<std::size_t>(chosen[static_cast<std::size_t>(a)])].capacity.game();
        for (std::size_t idx = 0; idx < game.values.size(); ++idx) game.values[idx] += lambda * atom.values[idx];
    }
    return gaidec::kary::KaryCapacity(std::move(game));
}

// Ground-truth slot values for a TermLayout: every table nonnegative,
// nondecreasing, zero at its origin, with the tops summing to exactly 1.
inline std::vector<Rat> random_layout_point(const gaidec::decompose::TermLayout& layout, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> step(0, 3);
    const int n = layout.n();
    std::vector<Rat> x(static_cast<std::size_t>(layout.total_vars()), Rat(0));

    for (int i = 0; i < n; ++i) {
        Rat running = 0;
        for (int level = 1; level <= layout.m[static_cast<std::size_t>(i)]; ++level) {
            running += step(rng);
            x[static_cast<std::size_t>(layout.var_singleton(i, level))] = running;
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const int mi = layout.m[static_cast<std::size_t>(i)];
            const int mj = layout.m[static_cast<std::size_t>(j)];
            // cumulative sums of a nonnegative field are monotone in both axes
            std::vector<std::vector<Rat>> cum(static_cast<std::size_t>(mi) + 1,
                                              std::vector<Rat>(static_cast<std::size_t>(mj) + 1, Rat(0)));
            for (int a = 0; a <= mi; ++a)
                for (int b = 0; b <= mj; ++b) {
                    Rat field = (a == 0 && b == 0) ? Rat(0) : Rat(step(rng));
                    if (a > 0) field += cum[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b)];
                    if (b > 0) field += cum[static_cast<std::size_t>(a)][static_cast<std::size_t>(b) - 1];
                    if (a > 0 && b > 0)
                        field -= cum[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(b) - 1];
                    cum[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = field;
                    if (a != 0 || b != 0) x[static_cast<std::size_t>(layout.var_pair(i, j, a, b))] = field;
                }
        }

    Rat top = 0;
    for (int i = 0; i < n; ++i) top += x[static_cast<std::size_t>(layout.var_singleton(i, layout.m[static_cast<std::size_t>(i)]))];
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            top += x[static_cast<std::size_t>(
                layout.var_pair(i, j, layout.m[static_cast<std::size_t>(i)], layout.m[static_cast<std::size_t>(j)]))];
    if (top == 0) {
        // degenerate draw: fall back to a ramp on the first attribute
        for (int level = 1; level <= layout.m[0]; ++level)
            x[static_cast<std::size_t>(layout.var_singleton(0, level))] = Rat(level) / layout.m[0];
        return x;
    }
    for (auto& value : x) value /= top;
    return x;
}

inline Rat layout_utility(const gaidec::decompose::TermLayout& layout, const std::vector<Rat>& x,
                          const std::vector<int>& alt) {
    Rat total = 0;
    for (const auto& [var, coef] : layout.utility_terms(alt)) total += coef * x[static_cast<std::size_t>(var)];
    return total;
}

inline std::vector<int> random_alternative(const std::vector<int>& m, std::mt19937_64& rng) {
    std::vector<int> alt(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::uniform_int_distribution<int> level(0, m[i]);
        alt[i] = level(rng);
    }
    return alt;
}

// Utility of a monotone decomposition at a grid point, summed per term.
inline Rat decomposition_utility(const gaidec::decompose::MonotoneGaiDecomposition& d, const gaidec::GridPoint& z) {
    Rat total = 0;
    for (int i = 0; i < d.n; ++i) total += d.singleton[static_cast<std::size_t>(i)][static_cast<std::size_t>(z[i])];
    for (int i = 0; i < d.n; ++i)
        for (int j = i + 1; j < d.n; ++j) total += d.pair_at(i, j, z[i], z[j]);
    return total;
}

// Deterministic fingerprint set of capacities for set-equality checks.
inline std::vector<std::vector<Rat>> value_set(const std::vector<gaidec::kary::KaryCapacity>& list) {
    std::vector<std::vector<Rat>> out;
    out.reserve(list.size());
    for (const auto& v : list) out.push_back(v.game().values);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace testutil
