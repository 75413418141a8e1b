#include "oracles.hpp"

#include <hypex/audit.hpp>
#include <hypex/constructions.hpp>

#include <doctest.h>

#include <bit>

using namespace hypex;

TEST_CASE("decomposition of Co(12)")
{
    auto h = comet(12);
    auto d = decompose(h);
    CHECK(std::popcount(d.u) == 5);
    CHECK((d.u | d.w) == (1u << 12) - 1);
    CHECK((d.u & d.w) == 0u);
    CHECK((d.w0 | d.w1) == d.w);
    CHECK(((d.u >> d.x) & 1u) == 1u);
    std::size_t total = d.h_u.size() + d.h_w.size() + d.f[0].size() + d.f[1].size() + d.f[2].size() + d.mixed.size();
    CHECK(total == static_cast<std::size_t>(h.size()));
    auto r = audit_inequalities(d);
    CHECK(r.pass());
    CHECK(r.failures().empty());
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(decompose(star(9)), NotDecomposable); // M-free
    CHECK_THROWS_AS(decompose(ThreeGraph(9, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}})), NotDecomposable);
    try {
        decompose(star(9));
    }
    catch (const NotDecomposable & e) {
        CHECK_FALSE(e.predicate.empty());
    }
}

TEST_CASE("all choices of Q")
{
    auto all = decompose_all(comet(10));
    CHECK(all.size() > 1);
    for (auto & d : all)
        CHECK(audit_inequalities(d).pass());
}

TEST_CASE("random sweep")
{
    auto g = random_maximal_pc_free(12, 5);
    CHECK_FALSE(oracle::contains(g, oracle::path()));
    CHECK_FALSE(oracle::contains(g, oracle::triangle()));
    auto r = random_sweep(12, 100, 7);
    CHECK(r.pass());
    CHECK(r.audited + r.skipped == 100);
    CHECK(format_sweep(r) == format_sweep(random_sweep(12, 100, 7)));
}

TEST_CASE("anchored sweep at n = 7 is vacuous")
{
    auto l = anchored_sweep(7);
    CHECK(l.complete);
    CHECK(l.embedded == static_cast<int>(l.graphs.size()));
    CHECK(l.max_edges == 12);
    CHECK(l.decomposable == 0);
    CHECK(l.pass());
}
