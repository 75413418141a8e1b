#include "oracles.hpp"

#include <hypex/constructions.hpp>
#include <hypex/errors.hpp>
#include <hypex/turan.hpp>

#include <doctest.h>

using namespace hypex;

TEST_CASE("max_free agrees with exhaustive enumeration for n <= 5")
{
    struct Case
    {
        std::vector<Pattern> lib;
        std::vector<ThreeGraph> ref;
    };
    std::vector<Case> cases{{{loose_path()}, {oracle::path()}}, {{triangle()}, {oracle::triangle()}},
            {{matching()}, {oracle::matching()}}, {{loose_path(), triangle()}, {oracle::path(), oracle::triangle()}},
            {{two_path()}, {oracle::two_path()}}};
    for (int n = 1; n <= 5; ++n)
        for (auto & c : cases) {
            CAPTURE(n);
            auto ex = oracle::exhaustive_max_free(n, c.ref);
            auto got = max_free(TuranQuery{n, c.lib, 1, {}, false, {}, {}});
            REQUIRE(got.value);
            CHECK(*got.value == ex.value);
            CHECK(oracle::same_classes(got.extremal, ex.family));
        }
}

TEST_CASE("ladders at n = 7")
{
    auto p = ladder(7, {loose_path()}, 4);
    REQUIRE(p.complete);
    CHECK(p.values() == std::vector<std::optional<int>>{20, 15, 13, 12});
    CHECK(p.strictly_decreasing());
    CHECK(oracle::same_classes(p.orders[0].extremal, {disjoint_union(ThreeGraph::complete(6), ThreeGraph(1))}));
    CHECK(oracle::same_classes(p.orders[1].extremal, {star(7)}));
    CHECK(oracle::same_classes(p.orders[2].extremal, {g1(7), g2(7)}));
    CHECK(oracle::same_classes(p.orders[3].extremal, {g3(7), k5_plus(2)}));

    auto m = ladder(7, {matching()}, 4);
    CHECK(m.values() == std::vector<std::optional<int>>{15, 13, 12, 11});
}

TEST_CASE("connectivity and anchors")
{
    auto r = conditional(7, {loose_path()}, {triangle()}, true, 1);
    CHECK(r.value == 13);
    CHECK(oracle::same_classes(r.extremal, {g1(7), g2(7)}));
    CHECK_THROWS_AS(conditional(7, {matching()}, {loose_path()}, false, 1), InvalidParameter);
}

TEST_CASE("budget exhaustion is reported, not hidden")
{
    TuranQuery q{8, {loose_path()}, 1, {}, false, {}, SearchBudget{10, 0}};
    CHECK_THROWS_AS(max_free(q), IncompleteSearch);
    auto l = ladder(8, {loose_path()}, 5, {}, false, SearchBudget{50, 0});
    CHECK_FALSE(l.complete);
    CHECK(l.failure.has_value());
}

TEST_CASE("budget from environment")
{
    setenv("HYPEX_BUDGET_NODES", "123", 1);
    setenv("HYPEX_BUDGET_SECS", "4.5", 1);
    auto b = SearchBudget::from_env();
    CHECK(b.max_nodes == 123);
    CHECK(b.max_seconds == 4.5);
    CHECK(SearchBudget::from_env(7, 1).max_nodes == 7);
    unsetenv("HYPEX_BUDGET_NODES");
    unsetenv("HYPEX_BUDGET_SECS");
    CHECK(SearchBudget::from_env().max_nodes == 0);
}

TEST_CASE("reference tables are internally consistent")
{
    auto report = check_reference_tables(40, {});
    CHECK(report.consistency_failures.empty());
    CHECK(report.ok());
}
