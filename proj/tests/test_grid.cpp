#include "gaidec/errors.hpp"
#include "gaidec/grid.hpp"

#include <doctest.h>

using gaidec::GridPoint;
using gaidec::LevelGrid;

TEST_CASE("lexicographic indexing with the last axis fastest") {
    const LevelGrid g = LevelGrid::uniform(2, 2);
    CHECK(g.size() == 9);
    CHECK(g.index_of(GridPoint({0, 0})) == 0);
    CHECK(g.index_of(GridPoint({0, 1})) == 1);
    CHECK(g.index_of(GridPoint({1, 0})) == 3);
    CHECK(g.index_of(GridPoint({2, 2})) == 8);
    for (std::size_t idx = 0; idx < g.size(); ++idx) CHECK(g.index_of(g.point_at(idx)) == idx);
}

TEST_CASE("odometer iteration covers the grid in index order") {
    const LevelGrid g{{2, 3, 2}};
    GridPoint p = g.origin();
    std::size_t idx = 0;
    do {
        CHECK(g.index_of(p) == idx);
        ++idx;
    } while (g.next(p));
    CHECK(idx == g.size());
}

TEST_CASE("mixed cardinalities") {
    const LevelGrid g{{3, 1, 2}};
    CHECK(g.size() == 6);
    CHECK(g.arity() == 3);
    CHECK(g.top() == GridPoint({2, 0, 1}));
    CHECK(g.contains(GridPoint({2, 0, 1})));
    CHECK_FALSE(g.contains(GridPoint({2, 1, 1})));
    CHECK_FALSE(g.contains(GridPoint({0, 0})));
    CHECK(g.stride(0) == 2);
    CHECK(g.stride(1) == 2);
    CHECK(g.stride(2) == 1);
}

TEST_CASE("componentwise order and support") {
    CHECK(gaidec::leq(GridPoint({0, 1}), GridPoint({1, 1})));
    CHECK_FALSE(gaidec::leq(GridPoint({2, 0}), GridPoint({1, 1})));
    CHECK(gaidec::join(GridPoint({2, 0, 1}), GridPoint({1, 3, 1})) == GridPoint({2, 3, 1}));
    CHECK(gaidec::support(GridPoint({0, 2, 0, 1})) == std::vector<int>{1, 3});
    CHECK(gaidec::support_size(GridPoint({0, 0})) == 0);
    CHECK_THROWS_AS(gaidec::leq(GridPoint({0}), GridPoint({0, 0})), gaidec::ValidationError);
}

TEST_CASE("grid point strings") {
    CHECK(gaidec::grid_point_str(GridPoint({2, 0, 1})) == "2,0,1");
    CHECK(gaidec::grid_point_str(GridPoint({7})) == "7");
    CHECK(gaidec::grid_point_parse("2,0,1", 3) == GridPoint({2, 0, 1}));
    CHECK(gaidec::grid_point_parse("4", 1) == GridPoint({4}));
    CHECK_THROWS_AS(gaidec::grid_point_parse("2,0", 3), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::grid_point_parse("2,,1", 3), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::grid_point_parse("-1,0", 2), gaidec::ValidationError);
    CHECK_THROWS_AS(gaidec::grid_point_parse("", 1), gaidec::ValidationError);
}

TEST_CASE("degenerate grids are rejected") {
    CHECK_THROWS_AS(LevelGrid(std::vector<int>{2, 0}), gaidec::ValidationError);
    CHECK_THROWS_AS(LevelGrid::uniform(0, 1), gaidec::ValidationError);
    CHECK_THROWS_AS(LevelGrid::uniform(2, 0), gaidec::ValidationError);
}
