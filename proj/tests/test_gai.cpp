#include "gaidec/errors.hpp"
#include "gaidec/gai.hpp"
#include "gaidec/kary.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace gaidec;
using gai::Alternative;
using gai::AttributeSpace;
using gai::GaiModel;
using gai::GaiTerm;
using gai::TabulatedFunction;

namespace {

AttributeSpace binary_space(int n) {
    AttributeSpace space;
    for (int i = 0; i < n; ++i) space.attributes.push_back({"a" + std::to_string(i), {"0", "1"}});
    return space;
}

AttributeSpace space_with_levels(const std::vector<int>& counts) {
    AttributeSpace space;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        gai::Attribute a;
        a.name = "a" + std::to_string(i);
        for (int level = 0; level < counts[i]; ++level) a.levels.push_back("L" + std::to_string(level));
        space.attributes.push_back(std::move(a));
    }
    return space;
}

// dense table built from a callback over the scope grid
GaiTerm make_term(const AttributeSpace& space, std::vector<int> scope, const std::function<Rat(const GridPoint&)>& f) {
    GaiTerm term;
    term.scope = std::move(scope);
    const LevelGrid sg = term.scope_grid(space);
    GridPoint p = sg.origin();
    do {
        term.table.push_back(f(p));
    } while (sg.next(p));
    return term;
}

TabulatedFunction tabulate_formula(const AttributeSpace& space, const std::function<Rat(const GridPoint&)>& f) {
    TabulatedFunction u;
    u.space = space;
    const LevelGrid g = space.grid();
    GridPoint p = g.origin();
    do {
        u.values.push_back(f(p));
    } while (g.next(p));
    return u;
}

// Full-quantifier reference for the context-independence property: every
// move of the size-p axis set, compared across every pair of contexts.
bool naive_p_additive(const TabulatedFunction& u, int p) {
    const int n = u.space.arity();
    if (p == n) return true;
    std::vector<int> P(static_cast<std::size_t>(p));
    for (int t = 0; t < p; ++t) P[static_cast<std::size_t>(t)] = t;
    const auto advance = [&]() {
        int t = p - 1;
        while (t >= 0 && P[static_cast<std::size_t>(t)] == n - p + t) --t;
        if (t < 0) return false;
        ++P[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < p; ++s) P[static_cast<std::size_t>(s)] = P[static_cast<std::size_t>(s - 1)] + 1;
        return true;
    };
    const LevelGrid g = u.space.grid();
    do {
        std::vector<int> rest;
        for (int i = 0; i < n; ++i)
            if (std::find(P.begin(), P.end(), i) == P.end()) rest.push_back(i);
        std::vector<int> move_card(P.size());
        for (std::size_t t = 0; t < P.size(); ++t)
            move_card[t] = g.card[static_cast<std::size_t>(P[t])];
        const LevelGrid moves{move_card};
        std::vector<int> ctx_card(rest.size());
        for (std::size_t t = 0; t < rest.size(); ++t)
            ctx_card[t] = g.card[static_cast<std::size_t>(rest[t])];
        const LevelGrid ctx{ctx_card};

        GridPoint from = moves.origin();
        do {
            GridPoint to = moves.origin();
            do {
                bool first = true;
                Rat reference;
                GridPoint c = ctx.origin();
                do {
                    Alternative base = g.origin();
                    for (std::size_t t = 0; t < rest.size(); ++t)
                        base.coords[static_cast<std::size_t>(rest[t])] = c.coords[t];
                    const Rat delta = gai::delta_variation(u, P, from.coords, to.coords, base);
                    if (first) {
                        reference = delta;
                        first = false;
                    } else if (delta != reference) {
                        return false;
                    }
                } while (ctx.next(c));
            } while (moves.next(to));
        } while (moves.next(from));
    } while (advance());
    return true;
}

} // namespace

TEST_CASE("evaluate and tabulate agree term by term") {
    const AttributeSpace space = space_with_levels({2, 3, 2});
    GaiModel model;
    model.space = space;
    model.terms.push_back(make_term(space, {1}, [](const GridPoint& p) { return Rat(2 * p[0]); }));
    model.terms.push_back(make_term(space, {0, 2}, [](const GridPoint& p) { return Rat(p[0] * (p[1] + 1)); }));
    model.validate();

    const TabulatedFunction u = gai::tabulate(model);
    u.validate();
    const LevelGrid g = space.grid();
    GridPoint x = g.origin();
    do {
        CHECK(u.at(x) == gai::evaluate(model, x));
        CHECK(u.at(x) == Rat(2 * x[1] + x[0] * (x[2] + 1)));
    } while (g.next(x));
}

TEST_CASE("model validation rejects malformed scopes") {
    const AttributeSpace space = binary_space(2);
    GaiModel model;
    model.space = space;
    model.terms.push_back(GaiTerm{{0, 0}, {Rat(0), Rat(0), Rat(0), Rat(0)}});
    CHECK_THROWS_AS(model.validate(), ValidationError);
    model.terms.front().scope = {1, 0};
    CHECK_THROWS_AS(model.validate(), ValidationError);
    model.terms.front().scope = {0, 2};
    CHECK_THROWS_AS(model.validate(), ValidationError);
    model.terms.front() = GaiTerm{{0}, {Rat(0)}};
    CHECK_THROWS_AS(model.validate(), ValidationError); // table size mismatch
}

TEST_CASE("embedding a mixed-level function into the hypercube") {
    // levels (2, 3): m = (1, 2), so k = 2 and axis 0 needs filling
    const AttributeSpace space = space_with_levels({2, 3});
    const TabulatedFunction u =
        tabulate_formula(space, [](const GridPoint& p) -> Rat { return Rat(p[0]) / 2 + Rat(p[1]) / 4; });

    SUBCASE("clamp fill copies the nearest in-grid value") {
        const kary::KaryCapacity v = gai::embed(u, gai::FillMode::Clamp);
        CHECK(v.n() == 2);
        CHECK(v.k() == 2);
        for (int z2 = 0; z2 <= 2; ++z2) CHECK(v.at(GridPoint({2, z2})) == u.at(GridPoint({1, z2})));
        CHECK(v.at(GridPoint({1, 1})) == u.at(GridPoint({1, 1})));
        CHECK(kary::p_additivity_degree(v.game()) <= 2);
    }
    SUBCASE("constant fill uses the all-best value") {
        const kary::KaryCapacity v = gai::embed(u, gai::FillMode::Constant);
        CHECK(v.at(GridPoint({2, 0})) == 1);
        CHECK(v.at(GridPoint({2, 2})) == 1);
        CHECK(v.at(GridPoint({1, 2})) == u.at(GridPoint({1, 2})));
    }
}

TEST_CASE("clamp fill preserves 2-additivity of a 2-additive source") {
    std::mt19937_64 rng(404);
    const AttributeSpace space = space_with_levels({2, 4, 3});
    for (int trial = 0; trial < 10; ++trial) {
        // random 2-additive monotone model, normalized at the top
        GaiModel model;
        model.space = space;
        std::uniform_int_distribution<int> step(0, 3);
        for (int i = 0; i < 3; ++i) {
            GaiTerm term;
            term.scope = {i};
            Rat run = 0;
            term.table.push_back(run);
            const int m = space.max_level(i);
            for (int level = 1; level <= m; ++level) {
                run += step(rng);
                term.table.push_back(run);
            }
            model.terms.push_back(std::move(term));
        }
        model.terms.push_back(make_term(space, {0, 1}, [&](const GridPoint& p) { return Rat(p[0] * p[1]); }));
        TabulatedFunction u = gai::tabulate(model);
        const Rat top = u.values.back();
        if (top == 0) continue;
        for (auto& value : u.values) value /= top;
        const kary::KaryCapacity v = gai::embed(u, gai::FillMode::Clamp);
        CHECK(kary::p_additivity_degree(v.game()) <= 2);
    }
}

TEST_CASE("embedding validates its preconditions") {
    const AttributeSpace space = binary_space(2);
    SUBCASE("monotonicity") {
        const TabulatedFunction u = tabulate_formula(space, [](const GridPoint& p) { return Rat(1 - p[0]); });
        try {
            gai::embed(u);
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("monotone") != std::string::npos);
        }
    }
    SUBCASE("origin value") {
        const TabulatedFunction u =
            tabulate_formula(space, [](const GridPoint& p) -> Rat { return Rat(1 + p[0]) / 2; });
        try {
            gai::embed(u);
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("all-worst") != std::string::npos);
        }
    }
    SUBCASE("top value") {
        const TabulatedFunction u =
            tabulate_formula(space, [](const GridPoint& p) -> Rat { return Rat(p[0] + p[1]) / 4; });
        try {
            gai::embed(u);
            FAIL("expected a validation error");
        } catch (const ValidationError& e) {
            CHECK(std::string(e.what()).find("all-best") != std::string::npos);
        }
    }
}

TEST_CASE("delta variation on explicit formulas") {
    const AttributeSpace space = space_with_levels({3, 3});
    const TabulatedFunction u = tabulate_formula(space, [](const GridPoint& p) { return Rat(p[0] * p[1]); });
    // single axis: plain difference at the base context
    CHECK(gai::delta_variation(u, {0}, {0}, {2}, GridPoint({0, 1})) == 2);
    CHECK(gai::delta_variation(u, {0}, {0}, {2}, GridPoint({0, 2})) == 4);
    // both axes: rectangle alternating sum of the product is the area
    CHECK(gai::delta_variation(u, {0, 1}, {0, 0}, {2, 2}, GridPoint({0, 0})) == 4);
    CHECK(gai::delta_variation(u, {0, 1}, {1, 1}, {2, 2}, GridPoint({0, 0})) == 1);
    // degenerate move
    CHECK(gai::delta_variation(u, {0}, {1}, {1}, GridPoint({0, 2})) == 0);
    CHECK_THROWS_AS(gai::delta_variation(u, {}, {}, {}, GridPoint({0, 0})), ValidationError);
    CHECK_THROWS_AS(gai::delta_variation(u, {0}, {0}, {3}, GridPoint({0, 0})), ValidationError);
    CHECK_THROWS_AS(gai::delta_variation(u, {0, 1}, {0}, {1}, GridPoint({0, 0})), ValidationError);
}

TEST_CASE("reduced additivity check agrees with the full-quantifier reference") {
    std::mt19937_64 rng(505);
    int disagreements = 0;
    for (int trial = 0; trial < 30; ++trial) {
        std::uniform_int_distribution<int> pick_n(2, 3), pick_card(2, 3);
        const int n = pick_n(rng);
        std::vector<int> counts(static_cast<std::size_t>(n));
        for (auto& c : counts) c = pick_card(rng);
        const AttributeSpace space = space_with_levels(counts);
        const TabulatedFunction u =
            tabulate_formula(space, [&](const GridPoint&) { return testutil::random_rat(rng, -4, 4, 3); });
        for (int p = 1; p <= n; ++p) {
            const bool reduced = gai::is_p_additive_function(u, p).holds;
            const bool naive = naive_p_additive(u, p);
            if (reduced != naive) ++disagreements;
        }
    }
    CHECK(disagreements == 0);
}

TEST_CASE("additivity check accepts constructed models and reports witnesses otherwise") {
    const AttributeSpace space = space_with_levels({3, 3, 2});
    SUBCASE("a sum of pair terms is 2-additive") {
        GaiModel model;
        model.space = space;
        model.terms.push_back(make_term(space, {0, 1}, [](const GridPoint& p) { return Rat(p[0] * p[1]); }));
        model.terms.push_back(make_term(space, {1, 2}, [](const GridPoint& p) { return Rat(p[0] + 2 * p[1]); }));
        const TabulatedFunction u = gai::tabulate(model);
        CHECK(gai::is_p_additive_function(u, 2).holds);
        CHECK(gai::is_p_additive_function(u, 3).holds);
        CHECK_FALSE(gai::is_p_additive_function(u, 1).holds);
    }
    SUBCASE("a triple product is not 2-additive and the witness is verifiable") {
        const TabulatedFunction u =
            tabulate_formula(space, [](const GridPoint& p) { return Rat(p[0] * p[1] * p[2]); });
        const auto check = gai::is_p_additive_function(u, 2);
        REQUIRE_FALSE(check.holds);
        REQUIRE(check.witness.has_value());
        const auto& w = *check.witness;
        CHECK(gai::delta_variation(u, w.scope, w.from, w.to, w.context_a) == w.delta_a);
        CHECK(gai::delta_variation(u, w.scope, w.from, w.to, w.context_b) == w.delta_b);
        CHECK(w.delta_a != w.delta_b);
        CHECK_FALSE(w.describe().empty());
    }
    SUBCASE("degree bounds are validated") {
        const TabulatedFunction u = tabulate_formula(space, [](const GridPoint&) { return Rat(0); });
        CHECK_THROWS_AS(gai::is_p_additive_function(u, 0), ValidationError);
        CHECK_THROWS_AS(gai::is_p_additive_function(u, 4), ValidationError);
    }
}

TEST_CASE("variation-based decomposition recomposes exactly") {
    SUBCASE("2-additive with a nonzero value at the all-worst profile") {
        const AttributeSpace space = space_with_levels({3, 3});
        const TabulatedFunction u =
            tabulate_formula(space, [](const GridPoint& p) { return Rat(3 + p[0] + p[1] + p[0] * p[1]); });
        const GaiModel model = gai::delta_decomposition(u, 2);
        for (const auto& term : model.terms) CHECK(term.scope.size() <= 2);
        CHECK(gai::tabulate(model).values == u.values);
    }
    SUBCASE("1-additive input stays additive") {
        const AttributeSpace space = space_with_levels({2, 3, 2});
        const TabulatedFunction u =
            tabulate_formula(space,
                             [](const GridPoint& p) -> Rat { return Rat(p[0]) / 2 + Rat(p[1]) / 3 + Rat(p[2]) / 5; });
        const GaiModel model = gai::delta_decomposition(u, 1);
        for (const auto& term : model.terms) CHECK(term.scope.size() == 1);
        CHECK(gai::tabulate(model).values == u.values);
    }
    SUBCASE("non-additive input is rejected with the witness message") {
        const AttributeSpace space = binary_space(2);
        const TabulatedFunction u = tabulate_formula(space, [](const GridPoint& p) { return Rat(p[0] * p[1]); });
        CHECK_THROWS_AS(gai::delta_decomposition(u, 1), ValidationError);
    }
    SUBCASE("random 2-additive functions round trip") {
        std::mt19937_64 rng(606);
        for (int trial = 0; trial < 10; ++trial) {
            const AttributeSpace space = space_with_levels({3, 2, 3});
            GaiModel model;
            model.space = space;
            model.terms.push_back(
                make_term(space, {0, 2}, [&](const GridPoint&) { return testutil::random_rat(rng, -5, 5, 4); }));
            model.terms.push_back(
                make_term(space, {1}, [&](const GridPoint&) { return testutil::random_rat(rng, -5, 5, 4); }));
            const TabulatedFunction u = gai::tabulate(model);
            const GaiModel back = gai::delta_decomposition(u, 2);
            CHECK(gai::tabulate(back).values == u.values);
        }
    }
}

TEST_CASE("scope-ordered decomposition reproduces the worked three-attribute example") {
    // U(x) = x2 + x1*x3 + max(x1, x2) over {0,1,2}^3, scopes {x2}, {x1,x3}, {x1,x2}
    const AttributeSpace space = space_with_levels({3, 3, 3});
    const TabulatedFunction u = tabulate_formula(
        space, [](const GridPoint& p) { return Rat(p[1] + p[0] * p[2] + std::max(p[0], p[1])); });
    const GaiModel model = gai::canonical_decomposition(u, {{1}, {0, 2}, {0, 1}}, space.grid().origin());
    REQUIRE(model.terms.size() == 3);

    const LevelGrid axis({3});
    GridPoint p1 = axis.origin();
    std::size_t idx = 0;
    do {
        CHECK(model.terms[0].table[idx] == Rat(2 * p1[0]));
        ++idx;
    } while (axis.next(p1));

    const LevelGrid plane({3, 3});
    GridPoint p2 = plane.origin();
    idx = 0;
    do {
        CHECK(model.terms[1].table[idx] == Rat(p2[0] * (p2[1] + 1)));
        CHECK(model.terms[2].table[idx] == Rat(-std::min(p2[0], p2[1])));
        ++idx;
    } while (plane.next(p2));

    // the interaction table is nonincreasing along both axes
    for (int a = 0; a <= 2; ++a)
        for (int b = 1; b <= 2; ++b) {
            CHECK(model.terms[2].table[static_cast<std::size_t>(a * 3 + b)] <=
                  model.terms[2].table[static_cast<std::size_t>(a * 3 + b - 1)]);
            CHECK(model.terms[2].table[static_cast<std::size_t>(b * 3 + a)] <=
                  model.terms[2].table[static_cast<std::size_t>((b - 1) * 3 + a)]);
        }

    // covering scopes reproduce the input
    CHECK(gai::tabulate(model).values == u.values);
}

TEST_CASE("scope-ordered decomposition validates its arguments") {
    const AttributeSpace space = binary_space(3);
    const TabulatedFunction u = tabulate_formula(space, [](const GridPoint& p) { return Rat(p[0]); });
    CHECK_THROWS_AS(gai::canonical_decomposition(u, {}, space.grid().origin()), ValidationError);
    CHECK_THROWS_AS(gai::canonical_decomposition(u, {{0, 0}}, space.grid().origin()), ValidationError);
    CHECK_THROWS_AS(gai::canonical_decomposition(u, {{3}}, space.grid().origin()), ValidationError);
    CHECK_THROWS_AS(gai::canonical_decomposition(u, {{0}}, GridPoint({0, 0, 2})), ValidationError);
}
