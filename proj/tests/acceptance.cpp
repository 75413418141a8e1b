// One line per acceptance criterion. A criterion may fail only as the
// documented n = 7 order-5 family mismatch; anything else exits non-zero.

#include "oracles.hpp"

#include <hypex/audit.hpp>
#include <hypex/constructions.hpp>
#include <hypex/embedding.hpp>
#include <hypex/ramsey.hpp>
#include <hypex/reference.hpp>
#include <hypex/turan.hpp>

#include <cstdio>
#include <random>
#include <sstream>

using namespace hypex;

namespace
{
    struct Outcome
    {
        bool pass = true;
        bool documented = false; // failure matches the recorded discrepancy
        std::string detail;

        auto fail(const std::string & why) -> void
        {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + why;
        }
        auto note(const std::string & s) -> void { detail += (detail.empty() ? "" : "; ") + s; }
    };

    auto values_string(const TuranLadder & l) -> std::string
    {
        std::string s;
        for (auto & v : l.values())
            s += (s.empty() ? "" : ",") + (v ? std::to_string(*v) : std::string("none"));
        return "(" + s + ")";
    }

    auto k6_k1() -> ThreeGraph { return disjoint_union(ThreeGraph::complete(6), ThreeGraph(1)); }

    auto budget() -> SearchBudget { return SearchBudget::from_env(); }

    TuranLadder p7, m7, p8;

    auto criterion1() -> Outcome
    {
        Outcome o;
        p7 = ladder(7, {loose_path()}, 5, {}, false, budget());
        m7 = ladder(7, {matching()}, 4, {}, false, budget());
        if (! p7.complete || ! m7.complete) {
            o.fail("incomplete search");
            return o;
        }
        if (p7.values() != std::vector<std::optional<int>>{20, 15, 13, 12, 11})
            o.fail("values " + values_string(p7));
        else
            o.note("values (20,15,13,12,11)");
        std::vector<std::vector<ThreeGraph>> expected{{k6_k1()}, {star(7)}, {g1(7), g2(7)}, {g3(7), k5_plus(2)}};
        for (int s = 0; s < 4; ++s)
            if (! oracle::same_classes(p7.orders[s].extremal, expected[s]))
                o.fail("order " + std::to_string(s + 1) + " family");
        auto & ex5 = p7.orders[4].extremal;
        auto & m4 = m7.orders[3].extremal;
        if (oracle::same_classes(ex5, m4)) {
            o.note("order 5 family = Ex4(7;M)");
            return o;
        }
        // The documented shape: Ex5(7;P) is Ex4(7;M) minus graphs that sit inside K5+2.
        std::vector<ThreeGraph> missing;
        bool subset = true;
        for (auto & g : ex5) {
            bool found = false;
            for (auto & h : m4)
                found = found || oracle::isomorphic(g, h);
            subset = subset && found;
        }
        for (auto & h : m4) {
            bool found = false;
            for (auto & g : ex5)
                found = found || oracle::isomorphic(g, h);
            if (! found)
                missing.push_back(h);
        }
        bool all_in_k5 = ! missing.empty();
        for (auto & h : missing)
            all_in_k5 = all_in_k5 && oracle::contains(k5_plus(2), h);
        std::ostringstream why;
        why << "order 5 family has " << ex5.size() << " graphs, Ex4(7;M) has " << m4.size();
        o.fail(why.str());
        if (subset && all_in_k5) {
            o.documented = true;
            o.note(std::to_string(missing.size()) + " Ex4(7;M) graph(s) embed into K5+2, which is order-4 extremal");
        }
        return o;
    }

    auto criterion2() -> Outcome
    {
        Outcome o;
        if (! m7.complete) {
            o.fail("incomplete search");
            return o;
        }
        if (m7.values() != std::vector<std::optional<int>>{15, 13, 12, 11})
            o.fail("values " + values_string(m7));
        else
            o.note("values (15,13,12,11)");
        std::vector<std::vector<ThreeGraph>> expected{{star(7)}, {g1(7), g2(7)}, {g3(7)}};
        for (int s = 0; s < 3; ++s)
            if (! oracle::same_classes(m7.orders[s].extremal, expected[s]))
                o.fail("order " + std::to_string(s + 1) + " family");
        return o;
    }

    auto criterion3() -> Outcome
    {
        Outcome o;
        p8 = ladder(8, {loose_path()}, 5, {}, false, budget());
        if (! p8.complete) {
            o.fail("incomplete: " + std::string(p8.failure->what()));
            return o;
        }
        if (p8.values() != std::vector<std::optional<int>>{21, 20, 16, 14, 13})
            o.fail("values " + values_string(p8));
        else
            o.note("values (21,20,16,14,13)");
        if (! oracle::same_classes(p8.orders[4].extremal, {k5_plus(3)}))
            o.fail("order 5 family");
        else
            o.note("order 5 family {K5+3}");
        return o;
    }

    auto criterion4() -> Outcome
    {
        Outcome o;
        auto check = [&] (const std::string & label, const TuranResult & r, int expected,
                const std::vector<ThreeGraph> * family) {
            if (r.value != expected)
                o.fail(label + " = " + (r.value ? std::to_string(*r.value) : std::string("none")));
            else if (family && ! oracle::same_classes(r.extremal, *family))
                o.fail(label + " family");
            else
                o.note(label + " = " + std::to_string(expected));
        };
        try {
            auto b = budget();
            check("ex(7;{P,C}|M)", conditional(7, {loose_path(), triangle()}, {matching()}, false, 1, b), 10, nullptr);
            std::vector<ThreeGraph> g12{g1(7), g2(7)};
            check("ex_conn(7;P|C)", conditional(7, {loose_path()}, {triangle()}, true, 1, b), 13, &g12);
            std::vector<ThreeGraph> k52{k5_plus(2)};
            check("ex_conn(7;P|{C,M})", conditional(7, {loose_path()}, {triangle(), matching()}, true, 1, b), 12, &k52);
            check("ex(7;{P,C,P2uK3}|M)",
                    conditional(7, {loose_path(), triangle(), two_path_plus_edge()}, {matching()}, false, 1, b), 10,
                    nullptr);
            auto mc = ladder(7, {matching(), triangle()}, 2, {}, false, b);
            if (! mc.complete || mc.orders.size() < 2)
                o.fail("ex2(7;{M,C}) incomplete");
            else
                check("ex2(7;{M,C})", mc.orders[1], 10, nullptr);
        }
        catch (const IncompleteSearch & e) {
            o.fail(std::string("incomplete: ") + e.what());
        }
        return o;
    }

    auto criterion5() -> Outcome
    {
        Outcome o;
        auto checks = check_formulas(30);
        int counted = 0, skipped = 0, qualification_failures = 0;
        for (auto & c : checks) {
            if (c.skipped) {
                ++skipped;
                if (c.construction.rfind("Ro", 0) != 0)
                    o.fail("unexpected skip " + c.construction);
                continue;
            }
            if (c.property.rfind("ex5 candidate", 0) == 0) {
                qualification_failures += ! c.pass;
                continue;
            }
            ++counted;
            if (! c.pass)
                o.fail(c.construction + " n=" + std::to_string(c.n) + " " + c.property + ": " + c.actual);
        }
        // Closed forms re-derived here.
        for (int n = 7; n <= 30; ++n) {
            auto size = [] (const ConstructionName & c) { return static_cast<long>(construction_edges(c).size()); };
            if (size(ConstructionName::star(n)) != binom(n - 1, 2) || size(ConstructionName::comet(n)) != 4 + binom(n - 4, 2)
                    || size(ConstructionName::g1(n)) != 3 * n - 8 || size(ConstructionName::g2(n)) != 3 * n - 8
                    || size(ConstructionName::g3(n)) != 2 * n - 2 || size(ConstructionName::k5_plus(n - 5)) != n + 5)
                o.fail("closed form at n=" + std::to_string(n));
        }
        o.note(std::to_string(counted) + " edge-count and freeness checks to n=30, " + std::to_string(skipped)
                + " rocket members excluded");
        if (qualification_failures)
            o.note(std::to_string(qualification_failures) + " order-5 qualification failure(s), see criterion 1");
        return o;
    }

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

    auto criterion6() -> Outcome
    {
        Outcome o;
        const std::uint64_t seed = 42;
        int certs = 0, gaps = 0;
        for (int i = 0; i < 1000; ++i) {
            auto c = random_coloring(16, 10, trial_seed(seed, i));
            auto cert = find_mono_P(c);
            certs += cert && certificate_holds(c, *cert);
            auto t = reduction_trace(c);
            gaps += static_cast<int>(t.proof_gaps.size());
            if (! t.certificate || ! certificate_holds(c, *t.certificate))
                o.fail("trial " + std::to_string(i) + " trace ended without a valid certificate");
        }
        auto report = run_trials(16, 10, 1000, seed);
        if (certs != 1000)
            o.fail(std::to_string(certs) + " verified certificates");
        if (gaps || ! report.ok())
            o.fail(std::to_string(gaps) + " proof gaps");
        o.note(std::to_string(certs) + "/1000 certificates re-verified, " + std::to_string(gaps) + " proof gaps");
        return o;
    }

    auto criterion7() -> Outcome
    {
        Outcome o;
        auto r = search_lower_bound(7, 2, budget());
        if (r.status != LowerBoundStatus::Found) {
            o.fail("no witness found");
            return o;
        }
        std::ostringstream out;
        write_col(out, *r.coloring);
        auto c = parse_col(out.str());
        c.validate();
        for (int k = 0; k < 2; ++k)
            if (oracle::contains(c.color_class(k), oracle::path()))
                o.fail("colour " + std::to_string(k) + " contains P");
        if (find_mono_P(c))
            o.fail("find_mono_P found a path");
        o.note("2-colouring of K7 without a monochromatic P, re-verified by brute force");
        return o;
    }

    auto criterion8() -> Outcome
    {
        Outcome o;
        struct Case
        {
            std::string name;
            std::vector<Pattern> lib;
            std::vector<ThreeGraph> ref;
        };
        std::vector<Case> cases{{"P", {loose_path()}, {oracle::path()}}, {"C", {triangle()}, {oracle::triangle()}},
                {"M", {matching()}, {oracle::matching()}},
                {"P,C", {loose_path(), triangle()}, {oracle::path(), oracle::triangle()}}};
        for (int n = 1; n <= 5; ++n)
            for (auto & c : cases) {
                auto ex = oracle::exhaustive_max_free(n, c.ref);
                auto got = max_free(TuranQuery{n, c.lib, 1, {}, false, {}, {}});
                if (got.value != ex.value || ! oracle::same_classes(got.extremal, ex.family))
                    o.fail("max_free n=" + std::to_string(n) + " {" + c.name + "}");
            }
        std::mt19937_64 rng(8);
        int instances = 0, positives = 0;
        for (; instances < 12000; ++instances) {
            int n = 5 + static_cast<int>(rng() % 4);
            int k = 3 + static_cast<int>(rng() % 4);
            ThreeGraph host(n), pattern(k);
            double p = 0.02 + (rng() % 30) / 100.0;
            for (int r = 0; r < triple_count(n); ++r)
                if ((rng() % 1000) < p * 1000)
                    host.add_rank(r);
            int pe = 1 + static_cast<int>(rng() % 4);
            for (int i = 0; i < pe; ++i)
                pattern.add_rank(static_cast<int>(rng() % triple_count(k)));
            auto e = contains_pattern(host, pattern);
            bool expect = oracle::contains(host, pattern);
            positives += expect;
            if (e.has_value() != expect || (e && ! is_valid_embedding(host, pattern, *e))) {
                o.fail("contains_pattern disagrees on instance " + std::to_string(instances));
                break;
            }
        }
        o.note("max_free = exhaustive for n<=5 on {P},{C},{M},{P,C}; contains_pattern = brute force on "
                + std::to_string(instances) + " instances (" + std::to_string(positives) + " positive)");
        return o;
    }

    auto criterion9() -> Outcome
    {
        Outcome o;
        auto co = audit_inequalities(decompose(comet(12)));
        if (! co.pass())
            o.fail("Co(12): " + std::to_string(co.failures().size()) + " failures");
        auto anchored = anchored_sweep(7, budget());
        if (! anchored.pass() || ! anchored.complete)
            o.fail("n=7 anchored sweep");
        auto sweep = random_sweep(12, 1000, 7);
        if (! sweep.pass())
            o.fail(std::to_string(sweep.failures) + " random failures");
        o.note("Co(12) pass; n=7: " + std::to_string(anchored.graphs.size()) + " graph(s), "
                + std::to_string(anchored.decomposable) + " decomposable; n=12: " + std::to_string(sweep.audited)
                + " audited, " + std::to_string(sweep.skipped) + " skipped, " + std::to_string(sweep.failures)
                + " failures");
        return o;
    }

    auto criterion10() -> Outcome
    {
        Outcome o;
        for (auto * l : {&p7, &m7, &p8})
            if (l->complete && ! l->strictly_decreasing())
                o.fail("ladder n=" + std::to_string(l->n) + " " + values_string(*l));
        auto report = check_reference_tables(30, {});
        for (auto & f : report.consistency_failures)
            o.fail(f);
        for (int n = 7; n <= 30; ++n)
            for (int s = 2; s <= 5; ++s) {
                auto a = reference_ex_p(s - 1, n), b = reference_ex_p(s, n);
                if (! a || ! b || ! (*b < *a))
                    o.fail("table n=" + std::to_string(n) + " order " + std::to_string(s));
            }
        o.note("computed ladders and reference tables for 7<=n<=30 strictly decreasing");
        return o;
    }
}

auto main() -> int
{
    using Fn = Outcome (*)();
    Fn criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8,
            criterion9, criterion10};
    int unexpected = 0, documented = 0;
    for (int i = 0; i < 10; ++i) {
        Outcome o;
        try {
            o = criteria[i]();
        }
        catch (const std::exception & e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const char * status = o.pass ? "PASS" : o.documented ? "FAIL (documented discrepancy)" : "FAIL";
        std::printf("criterion %d: %s: %s\n", i + 1, status, o.detail.c_str());
        std::fflush(stdout);
        if (! o.pass)
            ++(o.documented ? documented : unexpected);
    }
    std::printf("summary: %d pass, %d documented discrepancy, %d unexpected failure\n", 10 - unexpected - documented,
            documented, unexpected);
    return unexpected ? 1 : 0;
}
