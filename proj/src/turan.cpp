#include <hypex/turan.hpp>

#include <hypex/canonical.hpp>
#include <hypex/constructions.hpp>
#include <hypex/embedding.hpp>
#include <hypex/reference.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <unordered_set>

namespace hypex
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        constexpr int key_words = (triple_count(default_canonical_cap) + 63) / 64;
        using Key = std::array<std::uint64_t, key_words>;

        struct KeyHash
        {
            auto operator() (const Key & k) const -> std::size_t
            {
                std::uint64_t h = 1469598103934665603ull;
                for (auto w : k)
                    h = (h ^ w) * 1099511628211ull;
                return static_cast<std::size_t>(h);
            }
        };

        auto key_of(const ThreeGraph & canonical) -> Key
        {
            Key k{};
            std::copy_n(canonical.words().begin(), key_words, k.begin());
            return k;
        }

        class Search
        {
            public:
                Search(const TuranQuery & q, int floor) :
                    _q(q),
                    _best(floor),
                    _fixed(floor > 0),
                    _start(Clock::now())
                {
                    if (q.n > default_canonical_cap)
                        throw CapabilityError("exact search supports n <= " + std::to_string(default_canonical_cap));
                    if (q.n < 0)
                        throw InvalidParameter("n must be non-negative");
                }

                auto run() -> void
                {
                    ThreeGraph root(_q.n);
                    std::vector<int> addable;
                    for (int r = triple_count(_q.n) - 1; r >= 0; --r) {
                        root.add_rank(r);
                        if (free_through(root, r))
                            addable.push_back(r);
                        root.remove_rank(r);
                    }
                    _seen.insert(key_of(canonical_form(root)));
                    visit(root, addable);
                    _stats.seconds = elapsed();
                }

                auto best() const -> std::optional<int>
                {
                    if (_winners.empty())
                        return std::nullopt;
                    return _best;
                }

                auto winners() -> std::vector<ThreeGraph> &
                {
                    return _winners;
                }

                auto stats() const -> const SearchStats &
                {
                    return _stats;
                }

            private:
                auto elapsed() const -> double
                {
                    return std::chrono::duration<double>(Clock::now() - _start).count();
                }

                auto check_budget() -> void
                {
                    if (_q.budget.max_nodes > 0 && _stats.nodes > _q.budget.max_nodes)
                        fail();
                    if (_q.budget.max_seconds > 0 && (_stats.nodes & 255) == 0 && elapsed() > _q.budget.max_seconds)
                        fail();
                }

                [[noreturn]] auto fail() -> void
                {
                    _stats.seconds = elapsed();
                    throw IncompleteSearch(best(), _stats);
                }

                auto free_through(const ThreeGraph & g, int rank) const -> bool
                {
                    auto t = unrank_fast(rank);
                    for (auto & p : _q.forbidden)
                        if (contains_through(g, p, t))
                            return false;
                    return true;
                }

                auto qualifies(const ThreeGraph & g) const -> bool
                {
                    for (auto & p : _q.must_contain)
                        if (! contains(g, p))
                            return false;
                    if (_q.connected_only && ! is_connected(g))
                        return false;
                    for (auto & h : _q.excluded_hosts)
                        if (h.size() >= g.size() && is_subgraph_upto_iso(g, h, true))
                            return false;
                    return true;
                }

                auto leaf(const ThreeGraph & g) -> void
                {
                    ++_stats.saturated_leaves;
                    if (g.size() < _best || ! qualifies(g))
                        return;
                    ++_stats.qualifying_leaves;
                    if (g.size() > _best && ! _fixed) {
                        _best = g.size();
                        _winners.clear();
                    }
                    _winners.push_back(canonical_form(g));
                }

                auto visit(ThreeGraph & g, const std::vector<int> & addable) -> void
                {
                    ++_stats.nodes;
                    check_budget();
                    if (addable.empty()) {
                        leaf(g);
                        return;
                    }
                    std::vector<int> next;
                    next.reserve(addable.size());
                    for (int r : addable) {
                        g.add_rank(r);
                        auto key = key_of(canonical_form(g));
                        if (! _seen.insert(key).second) {
                            ++_stats.duplicates;
                            g.remove_rank(r);
                            continue;
                        }
                        next.clear();
                        for (int s : addable) {
                            if (s == r)
                                continue;
                            g.add_rank(s);
                            if (free_through(g, s))
                                next.push_back(s);
                            else
                                ++_stats.pruned_forbidden;
                            g.remove_rank(s);
                        }
                        if (g.size() + static_cast<int>(next.size()) < _best)
                            ++_stats.pruned_bound;
                        else
                            visit(g, next);
                        g.remove_rank(r);
                    }
                }

                const TuranQuery & _q;
                int _best;
                bool _fixed;
                Clock::time_point _start;
                SearchStats _stats;
                std::unordered_set<Key, KeyHash> _seen;
                std::vector<ThreeGraph> _winners;
        };

        auto sort_graphs(std::vector<ThreeGraph> & v) -> void
        {
            std::sort(v.begin(), v.end(), [] (const ThreeGraph & a, const ThreeGraph & b) {
                if (a.size() != b.size())
                    return a.size() > b.size();
                return a.lex_less(b);
            });
            v.erase(std::unique(v.begin(), v.end()), v.end());
        }

        auto family_canonical(const std::vector<std::string> & members, int n) -> std::optional<std::vector<ThreeGraph>>
        {
            std::vector<ThreeGraph> out;
            for (auto & m : members) {
                auto name = instantiate_family_member(m, n);
                if (name == "Ex4(7;M)") {
                    for (auto & g : order4_matching_family_n7())
                        out.push_back(g);
                    continue;
                }
                try {
                    auto c = parse_construction(name);
                    if (c.vertex_count() != n || c.kind == ConstructionKind::Rocket)
                        return std::nullopt;
                    out.push_back(canonical_form(build(c)));
                }
                catch (const std::exception &) {
                    return std::nullopt;
                }
            }
            sort_graphs(out);
            return out;
        }
    }

    auto SearchBudget::from_env(long nodes, double seconds) -> SearchBudget
    {
        SearchBudget b{nodes, seconds};
        if (auto * v = std::getenv("HYPEX_BUDGET_NODES"); v && ! nodes)
            b.max_nodes = std::strtol(v, nullptr, 10);
        if (auto * v = std::getenv("HYPEX_BUDGET_SECS"); v && seconds == 0)
            b.max_seconds = std::strtod(v, nullptr);
        return b;
    }

    IncompleteSearch::IncompleteSearch(std::optional<int> b, SearchStats s) :
        std::runtime_error("search budget exhausted after " + std::to_string(s.nodes) + " nodes"
                + (b ? "; best so far " + std::to_string(*b) : std::string{})),
        best(b),
        stats(s)
    {
    }

    auto max_free(const TuranQuery & query) -> TuranResult
    {
        Search s(query, 0);
        s.run();
        TuranResult r;
        r.value = s.best();
        r.extremal = std::move(s.winners());
        sort_graphs(r.extremal);
        r.stats = s.stats();
        return r;
    }

    auto enumerate_saturated(const TuranQuery & query, int min_edges) -> std::vector<ThreeGraph>
    {
        Search s(query, std::max(min_edges, 0));
        s.run();
        auto out = std::move(s.winners());
        sort_graphs(out);
        return out;
    }

    auto TuranLadder::values() const -> std::vector<std::optional<int>>
    {
        std::vector<std::optional<int>> v;
        for (auto & r : orders)
            v.push_back(r.value);
        return v;
    }

    auto TuranLadder::strictly_decreasing() const -> bool
    {
        for (std::size_t i = 1; i < orders.size(); ++i)
            if (orders[i].value && orders[i - 1].value && ! (*orders[i].value < *orders[i - 1].value))
                return false;
        return true;
    }

    auto ladder(int n, const std::vector<Pattern> & forbidden, int max_order, const std::vector<Pattern> & must_contain,
            bool connected_only, SearchBudget budget) -> TuranLadder
    {
        TuranLadder l;
        l.n = n;
        TuranQuery q{n, forbidden, 1, must_contain, connected_only, {}, budget};
        for (int s = 1; s <= max_order; ++s) {
            q.order = s;
            try {
                l.orders.push_back(max_free(q));
            }
            catch (const IncompleteSearch & e) {
                l.complete = false;
                l.failure = e;
                break;
            }
            auto & last = l.orders.back();
            if (! last.value)
                break;
            for (auto & g : last.extremal)
                q.excluded_hosts.push_back(g);
        }
        return l;
    }

    auto conditional(int n, const std::vector<Pattern> & forbidden, const std::vector<Pattern> & anchors,
            bool connected_only, int order, SearchBudget budget) -> TuranResult
    {
        for (auto & a : anchors)
            if (! is_free_of(a.graph, forbidden))
                throw InvalidParameter("anchor " + a.name + " is not free of the forbidden family");
        auto l = ladder(n, forbidden, order, anchors, connected_only, budget);
        if (l.failure)
            throw *l.failure;
        if (static_cast<int>(l.orders.size()) < order)
            return TuranResult{std::nullopt, {}, l.orders.empty() ? SearchStats{} : l.orders.back().stats};
        return l.orders.back();
    }

    auto ReferenceReport::ok() const -> bool
    {
        if (! consistency_failures.empty())
            return false;
        for (auto & r : rows)
            if (r.computed_complete && ! (r.value_match && r.family_match))
                return false;
        return true;
    }

    auto check_reference_tables(int max_n, const std::vector<TuranLadder> & computed) -> ReferenceReport
    {
        ReferenceReport report;
        for (auto & l : computed) {
            for (std::size_t i = 0; i < l.orders.size(); ++i) {
                int order = static_cast<int>(i) + 1;
                ReferenceComparison c;
                c.n = l.n;
                c.order = order;
                c.computed = l.orders[i].value;
                c.computed_complete = true;
                auto ref = reference_lookup("ex" + std::to_string(order), order, l.n);
                if (! ref) {
                    c.note = "no reference row";
                    c.value_match = c.family_match = true;
                    report.rows.push_back(c);
                    continue;
                }
                c.reference = ref->value;
                c.reference_family = ref->family;
                c.value_match = c.computed && *c.computed == ref->value;
                auto fam = family_canonical(ref->family, l.n);
                if (! fam) {
                    c.family_match = false;
                    c.note = "reference family not constructible";
                }
                else {
                    c.family_match = *fam == l.orders[i].extremal;
                }
                report.rows.push_back(c);
            }
        }
        for (int n = 7; n <= max_n; ++n) {
            std::optional<long> prev;
            for (int order = 1; order <= 5; ++order) {
                auto v = reference_ex_p(order, n);
                if (! v) {
                    report.consistency_failures.push_back("missing reference value n=" + std::to_string(n) + " order="
                            + std::to_string(order));
                    break;
                }
                if (prev && ! (*v < *prev))
                    report.consistency_failures.push_back("not strictly decreasing at n=" + std::to_string(n) + " order="
                            + std::to_string(order));
                auto cf = closed_form_ex_p(order, n);
                if (! cf || *cf != *v)
                    report.consistency_failures.push_back("table and closed form disagree at n=" + std::to_string(n)
                            + " order=" + std::to_string(order));
                prev = v;
            }
        }
        return report;
    }
}
