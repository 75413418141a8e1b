#pragma once

// Brute-force reference implementations. They use only edge membership of
// ThreeGraph and never call the library's search, canonical or pattern code.

#include <hypex/three_graph.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle
{
    using hypex::ThreeGraph;
    using hypex::Triple;

    inline auto has(const ThreeGraph & g, int a, int b, int c) -> bool
    {
        int v[3]{a, b, c};
        std::sort(v, v + 3);
        return g.has_edge(hypex::Triple{static_cast<hypex::Vertex>(v[0]), static_cast<hypex::Vertex>(v[1]),
                static_cast<hypex::Vertex>(v[2])});
    }

    // Every injective map from pattern vertices into host vertices.
    inline auto contains(const ThreeGraph & host, const ThreeGraph & pattern) -> bool
    {
        int k = pattern.n(), n = host.n();
        if (k > n)
            return false;
        auto pe = pattern.edges();
        if (pe.empty())
            return true;
        std::vector<int> map(k, -1);
        std::vector<bool> used(n, false);
        auto rec = [&] (auto & self, int i) -> bool {
            if (i == k) {
                for (auto & e : pe)
                    if (! has(host, map[e.a], map[e.b], map[e.c]))
                        return false;
                return true;
            }
            for (int v = 0; v < n; ++v) {
                if (used[v])
                    continue;
                used[v] = true;
                map[i] = v;
                if (self(self, i + 1))
                    return true;
                used[v] = false;
            }
            return false;
        };
        return rec(rec, 0);
    }

    // Smallest sorted edge-rank list over all n! relabellings.
    inline auto canonical(const ThreeGraph & g) -> std::vector<int>
    {
        std::vector<int> perm(g.n());
        std::iota(perm.begin(), perm.end(), 0);
        auto edges = g.edges();
        std::vector<int> best;
        bool first = true;
        do {
            std::vector<int> img;
            img.reserve(edges.size());
            for (auto & e : edges) {
                int v[3]{perm[e.a], perm[e.b], perm[e.c]};
                std::sort(v, v + 3);
                img.push_back(v[2] * (v[2] - 1) * (v[2] - 2) / 6 + v[1] * (v[1] - 1) / 2 + v[0]);
            }
            std::sort(img.begin(), img.end());
            if (first || img < best) {
                best = img;
                first = false;
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    inline auto isomorphic(const ThreeGraph & a, const ThreeGraph & b) -> bool
    {
        return a.n() == b.n() && a.size() == b.size() && canonical(a) == canonical(b);
    }

    // Same multiset of isomorphism classes.
    inline auto same_classes(const std::vector<ThreeGraph> & a, const std::vector<ThreeGraph> & b) -> bool
    {
        if (a.size() != b.size())
            return false;
        std::vector<std::vector<int>> ca, cb;
        for (auto & g : a)
            ca.push_back(canonical(g));
        for (auto & g : b)
            cb.push_back(canonical(g));
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        return ca == cb;
    }

    // Loose path P on 7 vertices, triangle C on 6, matching M on 6,
    // P2 on 5, P2 u K3 on 8; written out directly.
    inline auto path() -> ThreeGraph { return ThreeGraph(7, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}}); }
    inline auto triangle() -> ThreeGraph { return ThreeGraph(6, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}); }
    inline auto matching() -> ThreeGraph { return ThreeGraph(6, {{0, 1, 2}, {3, 4, 5}}); }
    inline auto two_path() -> ThreeGraph { return ThreeGraph(5, {{0, 1, 2}, {2, 3, 4}}); }
    inline auto two_path_plus_edge() -> ThreeGraph { return ThreeGraph(8, {{0, 1, 2}, {2, 3, 4}, {5, 6, 7}}); }

    struct Extremum
    {
        int value = -1;
        std::vector<ThreeGraph> family; // one per isomorphism class
    };

    // Maximum over all 2^C(n,3) labelled graphs free of every pattern.
    inline auto exhaustive_max_free(int n, const std::vector<ThreeGraph> & forbidden) -> Extremum
    {
        int m = static_cast<int>(hypex::binom(n, 3));
        Extremum best;
        std::vector<std::vector<int>> seen;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            int size = std::popcount(mask);
            if (size < best.value)
                continue;
            ThreeGraph g(n);
            for (int r = 0; r < m; ++r)
                if (mask >> r & 1)
                    g.add_rank(r);
            bool ok = true;
            for (auto & f : forbidden)
                if (contains(g, f)) {
                    ok = false;
                    break;
                }
            if (! ok)
                continue;
            if (size > best.value) {
                best.value = size;
                best.family.clear();
                seen.clear();
            }
            auto c = canonical(g);
            if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
                seen.push_back(c);
                best.family.push_back(g);
            }
        }
        return best;
    }
}
