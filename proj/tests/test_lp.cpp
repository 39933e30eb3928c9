#include "gaidec/errors.hpp"
#include "gaidec/lp.hpp"

#include <doctest.h>

#include <sstream>

using namespace gaidec;
using lp::LinearProgram;
using lp::LpStatus;
using lp::Rel;
using lp::Sense;

TEST_CASE("one variable, one row") {
    LinearProgram prog;
    const int x = prog.add_var("x");
    prog.rows.push_back({{{x, Rat(1)}}, Rel::Le, Rat(3), "cap"});
    prog.objective = lp::Objective{Sense::Max, {{x, Rat(1)}}};

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.point[0] == 3);
    CHECK(*out.objective_value == 3);
    std::string why;
    CHECK_MESSAGE(lp::check_dual(prog, out.point, out.row_duals, &why), why);
}

TEST_CASE("feasibility problem without an objective") {
    LinearProgram prog;
    const int x = prog.add_var("x");
    const int y = prog.add_var("y");
    prog.rows.push_back({{{x, Rat(1)}, {y, Rat(1)}}, Rel::Eq, Rat(2), "sum"});
    prog.rows.push_back({{{x, Rat(1)}, {y, Rat(-1)}}, Rel::Ge, Rat(1), "gap"});

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Feasible);
    std::string why;
    CHECK_MESSAGE(lp::check_point(prog, out.point, &why), why);
    CHECK(out.point[0] + out.point[1] == 2);
    CHECK(out.point[0] - out.point[1] >= 1);
}

TEST_CASE("infeasible program produces a verified certificate") {
    LinearProgram prog;
    const int x = prog.add_var("x");
    prog.rows.push_back({{{x, Rat(1)}}, Rel::Ge, Rat(1), "low"});
    prog.rows.push_back({{{x, Rat(1)}}, Rel::Le, Rat(0), "high"});
    prog.objective = lp::Objective{Sense::Max, {{x, Rat(1)}}};

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Infeasible);
    std::string why;
    CHECK_MESSAGE(lp::check_farkas(prog, out.farkas, &why), why);
}

TEST_CASE("infeasibility caused by bounds alone") {
    LinearProgram prog;
    const int x = prog.add_var("x", Rat(2), Rat(5));
    prog.rows.push_back({{{x, Rat(1)}}, Rel::Le, Rat(1), "cap"});

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Infeasible);
    std::string why;
    CHECK_MESSAGE(lp::check_farkas(prog, out.farkas, &why), why);
}

TEST_CASE("unbounded program produces a verified ray") {
    LinearProgram prog;
    const int x = prog.add_var("x");
    const int y = prog.add_var("y");
    prog.rows.push_back({{{x, Rat(1)}, {y, Rat(-1)}}, Rel::Le, Rat(1), "diff"});
    prog.objective = lp::Objective{Sense::Max, {{x, Rat(1)}}};

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Unbounded);
    std::string why;
    CHECK_MESSAGE(lp::check_point(prog, out.point, &why), why);
    CHECK_MESSAGE(lp::check_ray(prog, out.ray, &why), why);
}

TEST_CASE("classic cycling example is solved exactly") {
    // Beale's example: Dantzig's rule cycles on it unless the solver falls
    // back to Bland's rule. Optimum -1/20 at (1/25, 0, 1, 0).
    LinearProgram prog;
    const int x1 = prog.add_var("x1");
    const int x2 = prog.add_var("x2");
    const int x3 = prog.add_var("x3");
    const int x4 = prog.add_var("x4");
    prog.rows.push_back(
        {{{x1, Rat(1) / 4}, {x2, Rat(-60)}, {x3, Rat(-1) / 25}, {x4, Rat(9)}}, Rel::Le, Rat(0), "r1"});
    prog.rows.push_back(
        {{{x1, Rat(1) / 2}, {x2, Rat(-90)}, {x3, Rat(-1) / 50}, {x4, Rat(3)}}, Rel::Le, Rat(0), "r2"});
    prog.rows.push_back({{{x3, Rat(1)}}, Rel::Le, Rat(1), "r3"});
    prog.objective =
        lp::Objective{Sense::Min, {{x1, Rat(-3) / 4}, {x2, Rat(150)}, {x3, Rat(-1) / 50}, {x4, Rat(6)}}};

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(*out.objective_value == Rat(-1) / 20);
    CHECK(out.point == std::vector<Rat>{Rat(1) / 25, Rat(0), Rat(1), Rat(0)});
    std::string why;
    CHECK_MESSAGE(lp::check_dual(prog, out.point, out.row_duals, &why), why);
}

TEST_CASE("negative and free variables") {
    LinearProgram prog;
    const int x = prog.add_var("x", Rat(-4), Rat(-1)); // entirely negative box
    const int y = prog.add_var("y", std::nullopt);     // free
    prog.rows.push_back({{{x, Rat(1)}, {y, Rat(1)}}, Rel::Eq, Rat(0), "balance"});
    prog.rows.push_back({{{y, Rat(1)}}, Rel::Le, Rat(3), "cap"});
    prog.objective = lp::Objective{Sense::Max, {{x, Rat(2)}, {y, Rat(1)}}};

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Optimal);
    // maximize 2x + y = 3x under x = -y, y <= 3, x in [-4,-1]
    CHECK(out.point[0] == -1);
    CHECK(out.point[1] == 1);
    CHECK(*out.objective_value == -1);
    std::string why;
    CHECK_MESSAGE(lp::check_dual(prog, out.point, out.row_duals, &why), why);
}

TEST_CASE("optimum on an upper bound, no rows binding") {
    LinearProgram prog;
    const int x = prog.add_var("x", Rat(0), Rat(7));
    const int y = prog.add_var("y", Rat(0), Rat(2));
    prog.rows.push_back({{{x, Rat(1)}, {y, Rat(1)}}, Rel::Le, Rat(100), "loose"});
    prog.objective = lp::Objective{Sense::Max, {{x, Rat(1)}, {y, Rat(3)}}};

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(out.point == std::vector<Rat>{Rat(7), Rat(2)});
    CHECK(*out.objective_value == 13);
    std::string why;
    CHECK_MESSAGE(lp::check_dual(prog, out.point, out.row_duals, &why), why);
}

TEST_CASE("degenerate equalities") {
    LinearProgram prog;
    const int x = prog.add_var("x");
    const int y = prog.add_var("y");
    const int z = prog.add_var("z");
    prog.rows.push_back({{{x, Rat(1)}, {y, Rat(1)}}, Rel::Eq, Rat(1), "e1"});
    prog.rows.push_back({{{y, Rat(1)}, {z, Rat(1)}}, Rel::Eq, Rat(1), "e2"});
    prog.rows.push_back({{{x, Rat(1)}, {z, Rat(-1)}}, Rel::Eq, Rat(0), "e3"}); // implied by e1,e2
    prog.objective = lp::Objective{Sense::Min, {{y, Rat(1)}}};

    const auto out = lp::solve(prog);
    REQUIRE(out.status == LpStatus::Optimal);
    CHECK(*out.objective_value == 0);
    CHECK(out.point == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
}

TEST_CASE("solves are deterministic") {
    LinearProgram prog;
    for (int i = 0; i < 6; ++i) prog.add_var("v" + std::to_string(i), Rat(0), Rat(3));
    for (int i = 0; i < 5; ++i)
        prog.rows.push_back({{{i, Rat(1)}, {i + 1, Rat(2)}}, Rel::Le, Rat(4), "r" + std::to_string(i)});
    lp::Objective obj{Sense::Max, {}};
    for (int i = 0; i < 6; ++i) obj.terms.push_back({i, Rat(i + 1)});
    prog.objective = obj;

    const auto first = lp::solve(prog);
    const auto second = lp::solve(prog);
    REQUIRE(first.status == LpStatus::Optimal);
    CHECK(first.point == second.point);
    CHECK(first.row_duals == second.row_duals);
    CHECK(first.pivots == second.pivots);
}

TEST_CASE("pivot budget is enforced") {
    LinearProgram prog;
    for (int i = 0; i < 8; ++i) prog.add_var("v" + std::to_string(i), Rat(0), Rat(1));
    for (int i = 0; i < 7; ++i)
        prog.rows.push_back({{{i, Rat(1)}, {i + 1, Rat(1)}}, Rel::Le, Rat(1), "r" + std::to_string(i)});
    lp::Objective obj{Sense::Max, {}};
    for (int i = 0; i < 8; ++i) obj.terms.push_back({i, Rat(1)});
    prog.objective = obj;

    lp::SolveOptions opts;
    opts.max_pivots = 1;
    CHECK_THROWS_AS(lp::solve(prog, opts), BudgetError);
}

TEST_CASE("program validation") {
    LinearProgram prog;
    const int x = prog.add_var("x");
    SUBCASE("out-of-range variable index in a row") {
        prog.rows.push_back({{{5, Rat(1)}}, Rel::Le, Rat(1), "bad"});
        CHECK_THROWS_AS(prog.validate(), ValidationError);
    }
    SUBCASE("crossed bounds") {
        prog.add_var("y", Rat(3), Rat(1));
        CHECK_THROWS_AS(prog.validate(), ValidationError);
    }
    SUBCASE("duplicate variable terms accumulate") {
        prog.rows.push_back({{{x, Rat(1)}, {x, Rat(2)}}, Rel::Le, Rat(6), "dup"});
        prog.objective = lp::Objective{Sense::Max, {{x, Rat(1)}}};
        const auto out = lp::solve(prog);
        REQUIRE(out.status == LpStatus::Optimal);
        CHECK(out.point[0] == 2); // 3x <= 6
    }
    SUBCASE("out-of-range index in the objective") {
        prog.objective = lp::Objective{Sense::Max, {{9, Rat(1)}}};
        CHECK_THROWS_AS(prog.validate(), ValidationError);
    }
}

TEST_CASE("certificate checkers reject wrong answers") {
    LinearProgram prog;
    const int x = prog.add_var("x", Rat(0), Rat(2));
    prog.rows.push_back({{{x, Rat(1)}}, Rel::Le, Rat(1), "cap"});
    prog.objective = lp::Objective{Sense::Max, {{x, Rat(1)}}};

    CHECK_FALSE(lp::check_point(prog, {Rat(3) / 2}));
    CHECK(lp::check_point(prog, {Rat(1) / 2}));
    CHECK_FALSE(lp::check_dual(prog, {Rat(1) / 2}, {Rat(1)})); // x not optimal
    CHECK(lp::check_dual(prog, {Rat(1)}, {Rat(1)}));
    CHECK_FALSE(lp::check_farkas(prog, {Rat(1)})); // program is feasible
}

TEST_CASE("debug dump mentions every row and variable") {
    LinearProgram prog;
    const int x = prog.add_var("alpha", Rat(0), Rat(2));
    const int y = prog.add_var("beta");
    prog.rows.push_back({{{x, Rat(1)}, {y, Rat(-1) / 3}}, Rel::Ge, Rat(1) / 2, "keel"});
    prog.objective = lp::Objective{Sense::Min, {{y, Rat(1)}}};

    std::ostringstream out;
    lp::write_lp_format(prog, out);
    const std::string text = out.str();
    CHECK(text.find("alpha") != std::string::npos);
    CHECK(text.find("beta") != std::string::npos);
    CHECK(text.find("keel") != std::string::npos);
}
