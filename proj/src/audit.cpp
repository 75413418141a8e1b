#include <hypex/audit.hpp>

#include <hypex/canonical.hpp>
#include <hypex/constructions.hpp>
#include <hypex/embedding.hpp>
#include <hypex/pattern.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

namespace hypex
{
    namespace
    {
        auto pc() -> std::vector<Pattern>
        {
            return {loose_path(), triangle()};
        }

        auto single(std::uint32_t m) -> bool
        {
            return std::has_single_bit(m);
        }

        auto check_preconditions(const ThreeGraph & h) -> void
        {
            if (contains(h, loose_path()))
                throw NotDecomposable("P-free");
            if (contains(h, triangle()))
                throw NotDecomposable("C-free");
            if (! contains(h, matching()))
                throw NotDecomposable("contains M");
            if (! contains(h, two_path_plus_edge()))
                throw NotDecomposable("contains P2 u K3");
        }

        auto build_decomposition(const ThreeGraph & h, int q1, int q2, int k3) -> Decomposition
        {
            Decomposition d;
            d.host = h;
            d.q = {q1, q2};
            d.k3 = k3;
            auto m1 = rank_mask(q1), m2 = rank_mask(q2);
            d.x = std::countr_zero(m1 & m2);
            d.u = m1 | m2;
            auto all = h.n() >= 32 ? ~0u : (1u << h.n()) - 1;
            d.w = all & ~d.u;

            std::uint32_t touched = 0;
            h.for_each_rank([&] (int r) {
                auto m = rank_mask(r);
                if ((m & d.w) == m)
                    touched |= m;
            });
            d.w1 = touched;
            d.w0 = d.w & ~touched;

            auto xbit = 1u << d.x;
            h.for_each_rank([&] (int r) {
                auto m = rank_mask(r);
                if ((m & d.u) == m) {
                    d.h_u.push_back(r);
                    return;
                }
                if ((m & d.w) == m) {
                    d.h_w.push_back(r);
                    return;
                }
                bool in0 = m & d.w0, in1 = m & d.w1;
                if (in0 && in1) {
                    d.mixed.push_back(r);
                    return;
                }
                int i = in1 ? 1 : 0;
                (i ? d.h1 : d.h0).push_back(r);
                int k = std::popcount(m & d.u & ~xbit);
                d.f[k].push_back(r);
                d.f_i[i][k].push_back(r);
            });
            return d;
        }

        auto members(std::uint32_t m) -> std::vector<Vertex>
        {
            std::vector<Vertex> v;
            for (; m; m &= m - 1)
                v.push_back(std::countr_zero(m));
            return v;
        }

        auto set_string(std::uint32_t m) -> std::string
        {
            std::string s = "{";
            for (auto v : members(m))
                s += (s.size() > 1 ? "," : "") + std::to_string(v);
            return s + "}";
        }

        auto ranks_string(const std::vector<int> & ranks) -> std::string
        {
            std::string s;
            for (auto r : ranks)
                s += (s.empty() ? "" : " ") + to_string(unrank_fast(r));
            return s.empty() ? "-" : s;
        }

        class Auditor
        {
            public:
                explicit Auditor(const Decomposition & d) : _d(d) {}

                auto run() -> AuditReport
                {
                    structure();
                    vertex_bounds();
                    global_bounds();
                    nonseparability();
                    return std::move(_r);
                }

            private:
                auto add(std::string name, long left, long right, bool holds, std::string scope = "-",
                        std::string detail = {}) -> void
                {
                    _r.entries.push_back(AuditEntry{std::move(name), std::move(scope), left, right, true, holds,
                        std::move(detail)});
                }

                auto na(std::string name, std::string why) -> void
                {
                    _r.entries.push_back(AuditEntry{std::move(name), "-", 0, 0, false, true, std::move(why)});
                }

                auto size(const std::vector<int> & v) const -> long
                {
                    return static_cast<long>(v.size());
                }

                auto h_uw0() const -> long
                {
                    return size(_d.h_u) + size(_d.h0);
                }

                auto structure() -> void
                {
                    long total = _d.host.size();
                    long parts = size(_d.h_u) + size(_d.h_w) + size(_d.h0) + size(_d.h1);
                    add("partition", total, parts, total == parts && _d.mixed.empty(), "-", "|H| = |H[U]|+|H[W]|+|H0|+|H1|");
                    long alt = h_uw0() + size(_d.h1) + size(_d.h_w);
                    add("partition-uw0", total, alt, total == alt && _d.mixed.empty(), "-",
                            "|H| = |H[U u W0]|+|H1|+|H[W]|");
                    long f = size(_d.f[0]) + size(_d.f[1]) + size(_d.f[2]);
                    add("f-cover", size(_d.h0) + size(_d.h1), f, f == size(_d.h0) + size(_d.h1), "-",
                            "H0 u H1 = F0 u F1 u F2");
                    add("no-mixed", size(_d.mixed), 0, _d.mixed.empty(), "-", "no edge meets U, W0 and W1");

                    long bad_single = 0, bad_pair = 0;
                    auto q1 = rank_mask(_d.q[0]), q2 = rank_mask(_d.q[1]);
                    for (int k = 0; k < 3; ++k)
                        for (int r : _d.f[k]) {
                            auto cut = rank_mask(r) & _d.u;
                            if (single(cut) && cut != (1u << _d.x))
                                ++bad_single;
                            if (std::popcount(cut) == 2 && (cut & q1) != cut && (cut & q2) != cut)
                                ++bad_pair;
                        }
                    add("f0-at-x", bad_single, 0, bad_single == 0, "-", "edges meeting U once meet it in x");
                    add("pair-in-q", bad_pair, 0, bad_pair == 0, "-", "U-pairs of H0 u H1 edges lie in an edge of Q");
                    add("r6", size(_d.f_i[1][1]), 0, _d.f_i[1][1].empty(), "-", "F1_1 is empty");
                }

                auto vertex_bounds() -> void
                {
                    long w0 = std::popcount(_d.w0);
                    for (auto v : members(_d.w)) {
                        auto s = std::to_string(v);
                        long f0 = _d.at(_d.f[0], v), f1 = _d.at(_d.f[1], v), f2 = _d.at(_d.f[2], v);
                        add("r2", f0 * f2, 0, f0 == 0 || f2 == 0, s, "F0(v) or F2(v) empty");
                        add("r3-f1", f1, 4, f1 <= 4, s);
                        add("r3-f2", f2, 2, f2 <= 2, s);
                    }
                    if (! w0)
                        na("hv", "W0 empty");
                    for (auto v : members(_d.w0)) {
                        auto s = std::to_string(v);
                        long deg = _d.host.degree(v);
                        long bound = 4 + std::max(2L, w0 - 1);
                        add("hv", deg, bound, deg <= bound, s, "|H(v)| <= 4 + max{2,|W0|-1}");
                        long f0 = _d.at(_d.f[0], v);
                        add("hv-f0", f0, w0 - 1, f0 <= w0 - 1, s, "|F0(v)| <= |W0|-1");
                    }
                }

                auto global_bounds() -> void
                {
                    long w0 = std::popcount(_d.w0), w1 = std::popcount(_d.w1);
                    long hu = size(_d.h_u), hw = size(_d.h_w), h1 = size(_d.h1);
                    int n = _d.host.n();

                    if (w0 >= 1)
                        add("uwstar", h_uw0(), binom(w0 + 4, 2), h_uw0() <= binom(w0 + 4, 2));
                    else
                        na("uwstar", "|W0| < 1");
                    if (w1 >= 6)
                        add("hwstar", hw, binom(w1 - 1, 2), hw <= binom(w1 - 1, 2));
                    else
                        na("hwstar", "|W1| < 6");
                    if (h1 > 0)
                        add("hu1", hu, 6, hu <= 6);
                    else
                        na("hu1", "H1 empty");
                    if (w1 >= 4)
                        add("r5", size(_d.f_i[1][2]), 2 * w1 - 4, size(_d.f_i[1][2]) <= 2 * w1 - 4);
                    else
                        na("r5", "|W1| < 4");
                    if (w1 >= 3) {
                        add("r4", h1, 2 * w1 - 3, h1 <= 2 * w1 - 3);
                        add("r1", size(_d.f_i[1][0]), w1, size(_d.f_i[1][0]) <= w1);
                    }
                    else {
                        na("r4", "|W1| < 3");
                        na("r1", "|W1| < 3");
                    }
                    if (w1 >= 7)
                        add("r7", hu + h1, 2 * w1 - 1, hu + h1 <= 2 * w1 - 1);
                    else
                        na("r7", "|W1| < 7");

                    if (_d.f_i[1][2].empty())
                        na("e4", "F2_1 empty");
                    else if (w0 == 0)
                        na("e4", "|W0| = 0 is outside the three branches");
                    else {
                        long bound = w0 == 1 ? 8 : w0 <= 4 ? 3 * w0 + 7 : binom(w0 + 2, 2) + 1;
                        add("e4", h_uw0(), bound, h_uw0() <= bound);
                    }

                    bool star_w = true;
                    if (! _d.h_w.empty()) {
                        auto common = _d.w;
                        for (int r : _d.h_w)
                            common &= rank_mask(r);
                        star_w = common != 0;
                    }
                    if (n >= 13 && w0 == 0 && ! _d.f_i[1][0].empty() && star_w) {
                        long bound = binom(n - 8, 2) + 1;
                        add("hw-nonsep", hw, bound, hw <= bound, "-", "|H[W]| <= C(n-8,2)+1");
                    }
                    else
                        na("hw-nonsep", "needs n >= 13, W0 empty, F0_1 nonempty, H[W] inside a star");
                }

                auto nonseparability() -> void
                {
                    long bad = 0;
                    for (int e : _d.f[0]) {
                        auto pair = rank_mask(e) & _d.w;
                        for (int f : _d.h_w) {
                            int c = std::popcount(rank_mask(f) & pair);
                            if (c == 1)
                                ++bad;
                        }
                    }
                    add("nonseparable", bad, 0, bad == 0, "-", "F0 pairs are nonseparable in H[W]");
                }

                const Decomposition & _d;
                AuditReport _r;
        };

        auto entry_json(const AuditEntry & e) -> nlohmann::json
        {
            return {{"name", e.name}, {"scope", e.scope}, {"left", e.left}, {"right", e.right},
                {"applicable", e.applicable}, {"pass", e.pass}, {"detail", e.detail}};
        }
    }

    NotDecomposable::NotDecomposable(std::string p) :
        std::runtime_error("not decomposable: fails " + p),
        predicate(std::move(p))
    {
    }

    auto Decomposition::at(const std::vector<int> & edges, Vertex v) const -> int
    {
        int c = 0;
        for (int r : edges)
            if ((rank_mask(r) >> v) & 1u)
                ++c;
        return c;
    }

    auto decompose(const ThreeGraph & h) -> Decomposition
    {
        check_preconditions(h);
        auto e = h.edge_ranks();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                for (std::size_t k = j + 1; k < e.size(); ++k) {
                    auto a = rank_mask(e[i]), b = rank_mask(e[j]), c = rank_mask(e[k]);
                    if (single(a & b) && ! (c & (a | b)))
                        return build_decomposition(h, e[i], e[j], e[k]);
                    if (single(a & c) && ! (b & (a | c)))
                        return build_decomposition(h, e[i], e[k], e[j]);
                    if (single(b & c) && ! (a & (b | c)))
                        return build_decomposition(h, e[j], e[k], e[i]);
                }
        throw NotDecomposable("contains P2 u K3");
    }

    auto decompose_all(const ThreeGraph & h) -> std::vector<Decomposition>
    {
        check_preconditions(h);
        std::vector<Decomposition> out;
        auto e = h.edge_ranks();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                auto a = rank_mask(e[i]), b = rank_mask(e[j]);
                if (! single(a & b))
                    continue;
                for (int r : e)
                    if (! (rank_mask(r) & (a | b))) {
                        out.push_back(build_decomposition(h, e[i], e[j], r));
                        break;
                    }
            }
        return out;
    }

    auto AuditReport::pass() const -> bool
    {
        return std::all_of(entries.begin(), entries.end(), [] (auto & e) { return ! e.applicable || e.pass; });
    }

    auto AuditReport::failures() const -> std::vector<AuditEntry>
    {
        std::vector<AuditEntry> out;
        for (auto & e : entries)
            if (e.applicable && ! e.pass)
                out.push_back(e);
        return out;
    }

    auto audit_inequalities(const Decomposition & d) -> AuditReport
    {
        return Auditor(d).run();
    }

    auto format_decomposition(const Decomposition & d) -> std::string
    {
        std::ostringstream out;
        out << "Q\t" << to_string(unrank_fast(d.q[0])) << ' ' << to_string(unrank_fast(d.q[1])) << '\n';
        out << "K3\t" << to_string(unrank_fast(d.k3)) << '\n';
        out << "x\t" << d.x << '\n';
        out << "U\t" << set_string(d.u) << '\n';
        out << "W0\t" << set_string(d.w0) << '\n';
        out << "W1\t" << set_string(d.w1) << '\n';
        out << "H[U]\t" << d.h_u.size() << '\t' << ranks_string(d.h_u) << '\n';
        out << "H[W]\t" << d.h_w.size() << '\t' << ranks_string(d.h_w) << '\n';
        out << "H0\t" << d.h0.size() << '\t' << ranks_string(d.h0) << '\n';
        out << "H1\t" << d.h1.size() << '\t' << ranks_string(d.h1) << '\n';
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 3; ++k)
                out << "F" << k << "_" << i << '\t' << d.f_i[i][k].size() << '\t' << ranks_string(d.f_i[i][k]) << '\n';
        return out.str();
    }

    auto format_audit(const AuditReport & r) -> std::string
    {
        std::ostringstream out;
        out << "check\tscope\tleft\tright\tstatus\tdetail\n";
        for (auto & e : r.entries)
            out << e.name << '\t' << e.scope << '\t' << (e.applicable ? std::to_string(e.left) : "-") << '\t'
                << (e.applicable ? std::to_string(e.right) : "-") << '\t'
                << (! e.applicable ? "n/a" : e.pass ? "pass" : "FAIL") << '\t' << e.detail << '\n';
        out << "# overall " << (r.pass() ? "pass" : "FAIL") << '\n';
        return out.str();
    }

    auto audit_to_json(const Decomposition & d, const AuditReport & r) -> std::string
    {
        nlohmann::json j;
        j["n"] = d.host.n();
        j["q"] = {d.q[0], d.q[1]};
        j["k3"] = d.k3;
        j["x"] = d.x;
        j["U"] = members(d.u);
        j["W0"] = members(d.w0);
        j["W1"] = members(d.w1);
        j["H_U"] = d.h_u;
        j["H_W"] = d.h_w;
        j["H0"] = d.h0;
        j["H1"] = d.h1;
        j["entries"] = nlohmann::json::array();
        for (auto & e : r.entries)
            j["entries"].push_back(entry_json(e));
        j["pass"] = r.pass();
        return j.dump(2);
    }

    auto AnchoredSweepReport::pass() const -> bool
    {
        return complete && embedded == static_cast<int>(graphs.size()) && max_edges == n + 5 && audit_failures == 0;
    }

    auto anchored_sweep(int n, SearchBudget budget) -> AnchoredSweepReport
    {
        AnchoredSweepReport rep;
        rep.n = n;
        TuranQuery q{n, {loose_path()}, 1, {triangle(), matching()}, true, {}, budget};
        try {
            rep.graphs = enumerate_saturated(q, 0);
        }
        catch (const IncompleteSearch &) {
            rep.complete = false;
            return rep;
        }
        auto host = build(ConstructionName::k5_plus(n - 5));
        for (auto & g : rep.graphs) {
            rep.max_edges = std::max(rep.max_edges, g.size());
            if (is_subgraph_upto_iso(g, host, true))
                ++rep.embedded;
            try {
                auto d = decompose(g);
                ++rep.decomposable;
                if (! audit_inequalities(d).pass())
                    ++rep.audit_failures;
            }
            catch (const NotDecomposable &) {
            }
        }
        return rep;
    }

    auto random_maximal_pc_free(int n, std::uint64_t seed) -> ThreeGraph
    {
        std::mt19937_64 rng(seed);
        std::vector<int> order(triple_count(n));
        std::iota(order.begin(), order.end(), 0);
        for (std::size_t i = order.size(); i > 1; --i)
            std::swap(order[i - 1], order[rng() % i]);
        ThreeGraph g(n);
        auto family = pc();
        for (int r : order) {
            g.add_rank(r);
            auto t = unrank_fast(r);
            for (auto & p : family)
                if (contains_through(g, p, t)) {
                    g.remove_rank(r);
                    break;
                }
        }
        return g;
    }

    auto random_sweep(int n, int trials, std::uint64_t seed, int retries) -> SweepReport
    {
        if (n < 8 || n > 16)
            throw InvalidParameter("random sweep needs 8 <= n <= 16");
        SweepReport rep;
        rep.n = n;
        rep.trials = trials;
        rep.seed = seed;
        std::map<std::string, int> applicable;
        std::mt19937_64 seeds(seed);
        for (int t = 0; t < trials; ++t) {
            std::optional<ThreeGraph> sample;
            for (int a = 0; a < retries && ! sample; ++a) {
                auto g = random_maximal_pc_free(n, seeds());
                if (contains(g, matching()) && contains(g, two_path_plus_edge()))
                    sample = g;
            }
            if (! sample) {
                ++rep.skipped;
                continue;
            }
            ++rep.audited;
            auto report = audit_inequalities(decompose(*sample));
            std::map<std::string, bool> seen;
            for (auto & e : report.entries)
                if (e.applicable)
                    seen[e.name] = true;
            for (auto & [name, _] : seen)
                ++applicable[name];
            for (auto & f : report.failures()) {
                ++rep.failures;
                rep.failure_details.push_back("trial " + std::to_string(t) + ": " + f.name + " at " + f.scope + ": "
                        + std::to_string(f.left) + " vs " + std::to_string(f.right) + " in " + sample->to_string());
            }
        }
        rep.applicable_counts.assign(applicable.begin(), applicable.end());
        return rep;
    }

    auto format_sweep(const SweepReport & r) -> std::string
    {
        std::ostringstream out;
        out << "check\tapplicable\n";
        for (auto & [name, count] : r.applicable_counts)
            out << name << '\t' << count << '\n';
        out << "# n=" << r.n << " trials=" << r.trials << " seed=" << r.seed << " audited=" << r.audited
            << " skipped=" << r.skipped << " failures=" << r.failures << '\n';
        for (auto & f : r.failure_details)
            out << "# FAIL " << f << '\n';
        return out.str();
    }
}
