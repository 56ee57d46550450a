#include <gtest/gtest.h>

#include <random>

#include "reference.hpp"
#include "wordeq/classify.hpp"
#include "wordeq/generators.hpp"
#include "wordeq/solver.hpp"

using namespace wordeq;

TEST(Solve, IntroMinimal) {
    auto r = solve(parse_equation("X1abX2 = aX1X2b"));
    ASSERT_EQ(r.status, Status::Sat);
    EXPECT_EQ(r.total_length, 2u);
    EXPECT_EQ(*r.h, (Substitution{{1, ""}, {2, ""}}));
    ASSERT_TRUE(r.stats.first_sat_total_length);
    EXPECT_EQ(*r.stats.first_sat_total_length, 2u);
}

TEST(Solve, UnsatRegularOrdered) {
    Equation eq = parse_equation("aX1 = X1b");
    auto r = solve(eq);
    EXPECT_EQ(r.status, Status::Unsat);
    EXPECT_EQ(r.bound_used, 3u);
    EXPECT_FALSE(ref::minimal_by_enumeration(eq, 4, "ab").sat);
}

TEST(Solve, ExpFamilyTwo) {
    SolveOptions o;
    o.per_var_bound = 16;
    auto r = solve(gen_exp_family(2), o);
    ASSERT_EQ(r.status, Status::Sat);
    EXPECT_EQ(*r.h, (Substitution{{1, "aa"}, {2, "aaaa"}}));
}

TEST(Solve, BoundRequiredOutsideClass) {
    EXPECT_THROW(solve(parse_equation("X1X1 = aa")), InvalidArgument);
    SolveOptions o;
    o.per_var_bound = 0;
    EXPECT_EQ(solve(parse_equation("X1X1 = aa"), o).status, Status::Unknown);
    o.per_var_bound = 2;
    EXPECT_EQ(solve(parse_equation("X1X1 = aa"), o).status, Status::Sat);
}

TEST(Solve, LengthVectorsBalancedAndOrdered) {
    Equation eq = parse_equation("X1aX2 = X2X2b");
    std::vector<std::pair<std::size_t, LengthAssignment>> seen;
    enumerate_length_vectors(eq, 3, [&](const LengthAssignment& la, std::size_t total) {
        seen.push_back({total, la});
        return true;
    });
    for (std::size_t i = 0; i < seen.size(); ++i) {
        auto [l, r] = side_lengths(eq, seen[i].second);
        EXPECT_EQ(l, r);
        EXPECT_EQ(seen[i].first, l);
        if (i) EXPECT_LE(seen[i - 1].first, seen[i].first);
    }
    // Every unbalanced vector has different side lengths, so no solution.
    for (std::size_t a = 0; a <= 3; ++a)
        for (std::size_t b = 0; b <= 3; ++b) {
            auto [l, r] = side_lengths(eq, {{1, a}, {2, b}});
            bool listed = false;
            for (auto& s : seen) listed = listed || s.second == LengthAssignment{{1, a}, {2, b}};
            EXPECT_EQ(listed, l == r);
        }
}

TEST(Solve, Deterministic) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        RandomParams p;
        p.vars = 3;
        p.side_length = 5;
        p.seed = rng();
        Equation eq = gen_random(p);
        SolveOptions one, many;
        many.jobs = 4;
        auto a = solve(eq, one), b = solve(eq, many);
        EXPECT_EQ(a.status, b.status);
        EXPECT_EQ(a.h, b.h);
    }
}

TEST(Constraints, Examples) {
    Dfa aplus = Dfa::from_table(2, 0, {1}, {{0, 'a', 1}, {1, 'a', 1}});
    auto r = solve_with_constraints(parse_equation("X1 = X1"), {{1, aplus}});
    ASSERT_EQ(r.status, Status::Sat);
    EXPECT_EQ(r.h->at(1), "a");

    Dfa bstart = Dfa::from_table(2, 0, {1}, {{0, 'b', 1}, {1, 'a', 1}, {1, 'b', 1}});
    SolveOptions o;
    o.per_var_bound = 8;
    auto u = solve_with_constraints(parse_equation("aX1 = X1a"), {{1, bstart}}, o);
    EXPECT_NE(u.status, Status::Sat);
    // Independent check: every solution up to length 8 is a power of a.
    for (auto& w : ref::words_up_to("ab", 8))
        if (ref::solves(parse_equation("aX1 = X1a"), {{1, w}})) EXPECT_EQ(w, std::string(w.size(), 'a'));

    Dfa empty = Dfa::from_table(1, 0, {}, {{0, 'a', 0}});
    EXPECT_EQ(solve_with_constraints(parse_equation("X1 = X1"), {{1, empty}}).status, Status::Unsat);
}

TEST(Constraints, DfaParse) {
    Dfa d = Dfa::parse("states: q0 q1\ninitial: q0\naccepting: q1\nq0,a->q1\nq1,b->q0 // loop\n");
    EXPECT_TRUE(d.accepts("a"));
    EXPECT_TRUE(d.accepts("aba"));
    EXPECT_FALSE(d.accepts("ab"));
    EXPECT_FALSE(d.accepts("c"));
    EXPECT_THROW(Dfa::parse("initial: q0\n"), ParseError);
}
