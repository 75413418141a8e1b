#include <hypex/embedding.hpp>

#include <algorithm>
#include <array>
#include <bit>

namespace hypex
{
    namespace
    {
        struct PatternInfo
        {
            int n = 0;
            // for each pattern vertex, the other two vertices of each incident edge
            std::array<std::vector<std::pair<int, int>>, max_vertices> incident;
            std::array<int, max_vertices> degree{};
            LinkTable links;

            explicit PatternInfo(const ThreeGraph & p) :
                n(p.n()),
                links(p)
            {
                p.for_each_rank([&] (int r) {
                    auto & t = unrank_fast(r);
                    incident[t.a].emplace_back(t.b, t.c);
                    incident[t.b].emplace_back(t.a, t.c);
                    incident[t.c].emplace_back(t.a, t.b);
                });
                for (int v = 0; v < n; ++v)
                    degree[v] = static_cast<int>(incident[v].size());
            }
        };

        class EmbeddingSearch
        {
            public:
                EmbeddingSearch(const ThreeGraph & host, const ThreeGraph & pattern) :
                    _host(host),
                    _host_links(host),
                    _pattern(pattern),
                    _info(pattern)
                {
                    _map.fill(-1);
                    for (int u = 0; u < _info.n; ++u)
                        if (_info.degree[u] > 0)
                            _active |= 1u << u;
                }

                auto initial_domains() const -> std::array<std::uint32_t, max_vertices>
                {
                    std::array<std::uint32_t, max_vertices> dom{};
                    for (int u = 0; u < _info.n; ++u) {
                        if (! ((_active >> u) & 1u))
                            continue;
                        for (int v = 0; v < _host.n(); ++v)
                            if (_host_links.degree(v) >= _info.degree[u])
                                dom[u] |= 1u << v;
                    }
                    return dom;
                }

                auto assign(int u, int v, std::array<std::uint32_t, max_vertices> & dom) -> bool
                {
                    _map[u] = v;
                    _assigned |= 1u << u;
                    _used |= 1u << v;
                    for (auto [a, b] : _info.incident[u]) {
                        bool a_set = (_assigned >> a) & 1u, b_set = (_assigned >> b) & 1u;
                        if (a_set && b_set)
                            continue;
                        if (a_set)
                            dom[b] &= _host_links.link(v, _map[a]);
                        else if (b_set)
                            dom[a] &= _host_links.link(v, _map[b]);
                    }
                    for (int a = 0; a < _info.n; ++a)
                        if (((_assigned >> a) & 1u) && a != u && _info.links.codegree(u, a) > _host_links.codegree(v, _map[a]))
                            return false;
                    for (int a = 0; a < _info.n; ++a)
                        if (((_active & ~_assigned) >> a) & 1u)
                            if (! (dom[a] & ~_used))
                                return false;
                    return true;
                }

                auto unassign(int u) -> void
                {
                    _assigned &= ~(1u << u);
                    _used &= ~(1u << _map[u]);
                    _map[u] = -1;
                }

                auto search(const std::array<std::uint32_t, max_vertices> & dom) -> bool
                {
                    std::uint32_t open = _active & ~_assigned;
                    if (! open)
                        return true;

                    int best = -1, best_size = 1 << 30;
                    for (auto m = open; m; m &= m - 1) {
                        int u = std::countr_zero(m);
                        int s = std::popcount(dom[u] & ~_used);
                        if (s < best_size || (s == best_size && _info.degree[u] > _info.degree[best])) {
                            best = u;
                            best_size = s;
                        }
                    }

                    for (auto cand = dom[best] & ~_used; cand; cand &= cand - 1) {
                        int v = std::countr_zero(cand);
                        auto next = dom;
                        if (assign(best, v, next) && search(next))
                            return true;
                        unassign(best);
                    }
                    return false;
                }

                auto finish() const -> Embedding
                {
                    Embedding e;
                    e.map.assign(_info.n, -1);
                    std::uint32_t used = _used;
                    for (int u = 0; u < _info.n; ++u) {
                        if ((_assigned >> u) & 1u)
                            e.map[u] = _map[u];
                        else {
                            int v = std::countr_zero(~used);
                            e.map[u] = v;
                            used |= 1u << v;
                        }
                    }
                    return e;
                }

                auto run() -> std::optional<Embedding>
                {
                    auto dom = initial_domains();
                    if (search(dom))
                        return finish();
                    return std::nullopt;
                }

                auto run_through(const Triple & through) -> std::optional<Embedding>
                {
                    auto base = initial_domains();
                    std::array<int, 3> host_vs{through.a, through.b, through.c};
                    auto pattern_edges = _pattern.edges();
                    for (auto & pe : pattern_edges) {
                        std::array<int, 3> pv{pe.a, pe.b, pe.c};
                        std::array<int, 3> order{0, 1, 2};
                        do {
                            auto dom = base;
                            bool ok = true;
                            int placed = 0;
                            for (int i = 0; i < 3 && ok; ++i) {
                                int u = pv[i], v = host_vs[order[i]];
                                if (! ((dom[u] >> v) & 1u) || ((_used >> v) & 1u)) {
                                    ok = false;
                                    break;
                                }
                                ok = assign(u, v, dom);
                                ++placed;
                            }
                            if (ok && search(dom))
                                return finish();
                            for (int i = placed - 1; i >= 0; --i)
                                unassign(pv[i]);
                        } while (std::next_permutation(order.begin(), order.end()));
                    }
                    return std::nullopt;
                }

            private:
                const ThreeGraph & _host;
                LinkTable _host_links;
                const ThreeGraph & _pattern;
                PatternInfo _info;

                std::array<int, max_vertices> _map{};
                std::uint32_t _active = 0, _assigned = 0, _used = 0;
        };
    }

    auto is_valid_embedding(const ThreeGraph & host, const ThreeGraph & pattern, const Embedding & e) -> bool
    {
        if (static_cast<int>(e.map.size()) != pattern.n())
            return false;
        std::uint32_t used = 0;
        for (auto v : e.map) {
            if (v < 0 || v >= host.n() || ((used >> v) & 1u))
                return false;
            used |= 1u << v;
        }
        bool ok = true;
        pattern.for_each_rank([&] (int r) {
            auto & t = unrank_fast(r);
            if (! host.has_edge(make_triple(e.map[t.a], e.map[t.b], e.map[t.c])))
                ok = false;
        });
        return ok;
    }

    auto contains_pattern(const ThreeGraph & host, const ThreeGraph & pattern) -> std::optional<Embedding>
    {
        if (pattern.n() > host.n() || pattern.size() > host.size())
            return std::nullopt;
        return EmbeddingSearch(host, pattern).run();
    }

    auto contains_pattern_through(const ThreeGraph & host, const ThreeGraph & pattern, const Triple & through)
        -> std::optional<Embedding>
    {
        if (pattern.n() > host.n() || pattern.size() > host.size() || ! host.has_edge(through))
            return std::nullopt;
        return EmbeddingSearch(host, pattern).run_through(through);
    }

    auto is_subgraph_upto_iso(const ThreeGraph & small, const ThreeGraph & big, bool same_n) -> bool
    {
        if (same_n && small.n() != big.n())
            throw DimensionError("bijective containment needs equal vertex counts (" + std::to_string(small.n())
                    + " vs " + std::to_string(big.n()) + ")");
        return contains_pattern(big, small).has_value();
    }
}
