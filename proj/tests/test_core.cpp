#include "oracles.hpp"

#include <hypex/canonical.hpp>
#include <hypex/embedding.hpp>
#include <hypex/errors.hpp>
#include <hypex/graph_io.hpp>
#include <hypex/pattern.hpp>
#include <hypex/three_graph.hpp>
#include <hypex/triple.hpp>

#include <doctest.h>

#include <random>

using namespace hypex;

namespace
{
    auto random_graph(int n, double p, std::mt19937_64 & rng) -> ThreeGraph
    {
        std::bernoulli_distribution coin(p);
        ThreeGraph g(n);
        for (int r = 0; r < triple_count(n); ++r)
            if (coin(rng))
                g.add_rank(r);
        return g;
    }

    auto random_perm(int n, std::mt19937_64 & rng) -> std::vector<int>
    {
        std::vector<int> p(n);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        return p;
    }
}

TEST_CASE("colex rank and unrank")
{
    CHECK(triple_rank(0, 1, 2) == 0);
    CHECK(triple_rank(4, 5, 6) == 34); // C(6,3) + C(5,2) + 4
    CHECK(triple_rank(0, 1, 3) == 1);
    CHECK(triple_count(20) == 1140);
    for (int r = 0; r < triple_count(20); ++r) {
        auto t = triple_unrank(r);
        CHECK(t.a < t.b);
        CHECK(t.b < t.c);
        CHECK(t.rank() == r);
        CHECK(binom(t.c, 3) + binom(t.b, 2) + t.a == r);
    }
    CHECK(make_triple(5, 1, 3) == Triple{1, 3, 5});
    CHECK_THROWS_AS(make_triple(1, 1, 2), InvalidTriple);
}

TEST_CASE("edge set basics")
{
    ThreeGraph g(7, {{0, 1, 2}, {2, 3, 4}});
    CHECK(g.size() == 2);
    CHECK(g.has_edge(2, 1, 0));
    CHECK_FALSE(g.add_edge(0, 1, 2));
    CHECK(g.add_edge(4, 5, 6));
    CHECK(g.degree(2) == 2);
    CHECK(g.degrees() == std::vector<int>{1, 1, 2, 1, 2, 1, 1});
    CHECK(g.remove_edge({0, 1, 2}));
    CHECK(g.size() == 2);
    CHECK(ThreeGraph::complete(6).size() == 20);
}

TEST_CASE("delete_vertex and disjoint_union")
{
    ThreeGraph g(5, {{0, 1, 2}, {1, 3, 4}, {0, 2, 4}});
    auto d = delete_vertex(g, 1);
    CHECK(d.n() == 4);
    CHECK(d == ThreeGraph(4, {{0, 1, 3}}));
    auto u = disjoint_union(ThreeGraph::complete(4), ThreeGraph(3, {{0, 1, 2}}));
    CHECK(u.n() == 7);
    CHECK(u.size() == 5);
    CHECK(u.has_edge(4, 5, 6));
    CHECK(components(u).size() == 2);
    CHECK_FALSE(is_connected(u));
    CHECK(is_connected(ThreeGraph(5, {{0, 1, 2}, {2, 3, 4}})));
}

TEST_CASE("pattern containment matches the all-injective-maps oracle")
{
    std::mt19937_64 rng(2024);
    std::vector<std::pair<Pattern, ThreeGraph>> named{{loose_path(), oracle::path()},
            {triangle(), oracle::triangle()}, {matching(), oracle::matching()}, {two_path(), oracle::two_path()},
            {two_path_plus_edge(), oracle::two_path_plus_edge()}};
    int checked = 0;
    for (int i = 0; i < 2500; ++i) {
        int n = 5 + static_cast<int>(rng() % 4);
        auto host = random_graph(n, 0.05 + 0.3 * (rng() % 100) / 100.0, rng);
        for (auto & [p, ref] : named) {
            bool expect = oracle::contains(host, ref);
            REQUIRE(contains(host, p) == expect);
            REQUIRE(contains_generic(host, p) == expect);
            REQUIRE(contains_in_edge_list(host.edges(), n, p) == expect);
            ++checked;
        }
        auto small = random_graph(4 + static_cast<int>(rng() % 2), 0.3, rng);
        auto e = contains_pattern(host, small);
        REQUIRE(e.has_value() == oracle::contains(host, small));
        if (e)
            REQUIRE(is_valid_embedding(host, small, *e));
        ++checked;
    }
    CHECK(checked >= 10000);
}

TEST_CASE("subgraph up to isomorphism")
{
    ThreeGraph a(6, {{0, 1, 2}, {3, 4, 5}});
    ThreeGraph b(6, {{0, 2, 4}, {1, 3, 5}, {0, 1, 5}});
    CHECK(is_subgraph_upto_iso(a, b, true));
    CHECK_FALSE(is_subgraph_upto_iso(b, a, true));
    CHECK_THROWS_AS(is_subgraph_upto_iso(a, ThreeGraph(7), true), DimensionError);
}

TEST_CASE("canonical form is a relabelling invariant")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 300; ++i) {
        int n = 4 + static_cast<int>(rng() % 5);
        auto g = random_graph(n, 0.35, rng);
        auto h = g.relabel(random_perm(n, rng));
        auto cg = canonical_form(g);
        CHECK(cg == canonical_form(h));
        CHECK(oracle::isomorphic(cg, g));
        CHECK(canonical_hash(cg) == canonical_hash(canonical_form(h)));
    }
    // non-isomorphic pairs separate
    for (int i = 0; i < 200; ++i) {
        int n = 5 + static_cast<int>(rng() % 2);
        auto a = random_graph(n, 0.3, rng), b = random_graph(n, 0.3, rng);
        CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
    }
    CHECK_THROWS_AS(canonical_form(ThreeGraph(14)), CapabilityError);
}

TEST_CASE(".3g round trip and errors")
{
    ThreeGraph g(6, {{0, 1, 2}, {1, 3, 5}});
    auto text = format_3g(g);
    CHECK(text == "6 2\n0 1 2\n1 3 5\n");
    CHECK(parse_3g("# comment\n" + text) == g);
    CHECK_THROWS_AS(parse_3g("6 2\n0 1 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_3g("6 1\n0 1 9\n"), ParseError);
    CHECK_THROWS_AS(parse_3g("6 2\n0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_3g("x y\n"), ParseError);
    CHECK_THROWS_AS(read_3g(std::filesystem::path("/nonexistent/g.3g")), ParseError);
}
