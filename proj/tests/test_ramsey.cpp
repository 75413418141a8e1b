#include "oracles.hpp"

#include <hypex/errors.hpp>
#include <hypex/ramsey.hpp>

#include <doctest.h>

#include <sstream>

using namespace hypex;

namespace
{
    // Re-checks a certificate from scratch: a loose path in one colour.
    auto certificate_holds(const Coloring & c, const MonoPCertificate & cert) -> bool
    {
        auto & v = cert.vertices;
        for (int i = 0; i < 7; ++i)
            for (int j = i + 1; j < 7; ++j)
                if (v[i] == v[j])
                    return false;
        for (int k = 0; k < 3; ++k) {
            auto t = make_triple(v[2 * k], v[2 * k + 1], v[2 * k + 2]);
            if (t.rank() != cert.edges[k] || c.color(t.rank()) != cert.color)
                return false;
        }
        return true;
    }
}

TEST_CASE(".col round trip and errors")
{
    auto c = random_coloring(8, 3, 11);
    std::ostringstream out;
    write_col(out, c);
    CHECK(parse_col(out.str()) == c);
    CHECK_THROWS_AS(parse_col("4 2\n0 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_col("4 2\n0 1 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_col("4 2\n0 1 0 1 1\n"), ParseError);
    CHECK_THROWS_AS(parse_col(""), ParseError);
    Coloring bad(4, 2);
    bad.colors[0] = 5;
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}

TEST_CASE("random colourings are seeded")
{
    CHECK(random_coloring(16, 10, 42) == random_coloring(16, 10, 42));
    CHECK_FALSE(random_coloring(16, 10, 42) == random_coloring(16, 10, 43));
    CHECK(trial_seed(1, 0) != trial_seed(1, 1));
}

TEST_CASE("find_mono_P and certificates")
{
    for (std::uint64_t s = 0; s < 50; ++s) {
        auto c = random_coloring(12, 4, s);
        auto cert = find_mono_P(c);
        bool any = false;
        for (int k = 0; k < c.r; ++k)
            any = any || oracle::contains(c.color_class(k), oracle::path());
        REQUIRE(cert.has_value() == any);
        if (cert) {
            CHECK(verify_certificate(c, *cert));
            CHECK(certificate_holds(c, *cert));
            CHECK(certificate_from_json(certificate_to_json(*cert)) == *cert);
            auto broken = *cert;
            broken.color = (broken.color + 1) % c.r;
            CHECK_FALSE(verify_certificate(c, broken));
        }
    }
    CHECK_THROWS_AS(certificate_from_json("{\"color\": 0}"), ParseError);
    CHECK_THROWS_AS(certificate_from_json("not json"), ParseError);
}

TEST_CASE("reduction schedule")
{
    CHECK(reduction_schedule(16) == 560);
    CHECK(reduction_schedule(8) == 50);
    CHECK(reduction_extra_allowance(16) == 4);
    CHECK(reduction_extra_allowance(14) == 1);
    CHECK(reduction_extra_allowance(13) == 0);
    long sum = 0;
    for (auto d : k6_s10_degrees())
        sum += d;
    CHECK(sum == 3 * 56);
}

TEST_CASE("reduction trace on structured colourings")
{
    // Colour of a triple = its least vertex, capped: every colour but the last is a star.
    Coloring d(16, 10);
    for (int r = 0; r < 560; ++r)
        d.colors[r] = std::min<int>(unrank_fast(r).a, 9);
    auto t = reduction_trace(d, ReductionPolicy::Reduce);
    CHECK(t.ok());
    REQUIRE(t.certificate);
    CHECK(certificate_holds(d, *t.certificate));
    CHECK(t.steps.size() > 2);
    for (auto & s : t.steps)
        CHECK(s.total_edges >= s.required);

    auto e = reduction_trace(random_coloring(16, 10, 3));
    CHECK(e.ok());
    CHECK_THROWS_AS(reduction_trace(random_coloring(16, 9, 3)), InvalidParameter);
}

TEST_CASE("trials")
{
    auto r = run_trials(16, 10, 50, 1);
    CHECK(r.certificates() == 50);
    CHECK(r.verified() == 50);
    CHECK(r.gaps() == 0);
    CHECK(format_trials(r) == format_trials(run_trials(16, 10, 50, 1)));
}

TEST_CASE("lower-bound search")
{
    auto w = search_lower_bound(7, 2);
    REQUIRE(w.status == LowerBoundStatus::Found);
    for (int k = 0; k < 2; ++k)
        CHECK_FALSE(oracle::contains(w.coloring->color_class(k), oracle::path()));
    CHECK(search_lower_bound(8, 1).status == LowerBoundStatus::Exhausted);
    CHECK(search_lower_bound(10, 3, SearchBudget{5, 0}).status == LowerBoundStatus::Incomplete);
}
