#include <hypex/three_graph.hpp>

#include <algorithm>
#include <numeric>

namespace hypex
{
    namespace
    {
        auto check_vertex_count(int n) -> void
        {
            if (n < 0 || n > max_vertices)
                throw CapabilityError("vertex count " + std::to_string(n) + " outside [0," + std::to_string(max_vertices) + "]");
        }
    }

    ThreeGraph::ThreeGraph(int n) :
        _n(n)
    {
        check_vertex_count(n);
    }

    ThreeGraph::ThreeGraph(int n, std::initializer_list<Triple> edges) :
        ThreeGraph(n, std::span<const Triple>(edges.begin(), edges.size()))
    {
    }

    ThreeGraph::ThreeGraph(int n, std::span<const Triple> edges) :
        ThreeGraph(n)
    {
        for (auto & e : edges)
            add_edge(e);
    }

    auto ThreeGraph::complete(int n) -> ThreeGraph
    {
        ThreeGraph g(n);
        for (int r = 0, r_end = triple_count(n); r < r_end; ++r)
            g.add_rank(r);
        return g;
    }

    auto ThreeGraph::size() const -> int
    {
        int s = 0;
        for (auto w : _words)
            s += std::popcount(w);
        return s;
    }

    auto ThreeGraph::add_edge(const Triple & t) -> bool
    {
        if (! (0 <= t.a && t.a < t.b && t.b < t.c && t.c < _n))
            throw InvalidTriple("triple " + hypex::to_string(t) + " invalid for n=" + std::to_string(_n));
        int r = t.rank();
        bool fresh = ! has_edge(r);
        add_rank(r);
        return fresh;
    }

    auto ThreeGraph::remove_edge(const Triple & t) -> bool
    {
        if (t.c >= _n)
            return false;
        int r = t.rank();
        bool had = has_edge(r);
        remove_rank(r);
        return had;
    }

    auto ThreeGraph::degree(Vertex v) const -> int
    {
        int d = 0;
        for_each_rank([&] (int r) { d += (rank_mask(r) >> v) & 1u; });
        return d;
    }

    auto ThreeGraph::degrees() const -> std::vector<int>
    {
        std::vector<int> d(_n, 0);
        for_each_rank([&] (int r) {
            auto & t = unrank_fast(r);
            ++d[t.a];
            ++d[t.b];
            ++d[t.c];
        });
        return d;
    }

    auto ThreeGraph::edges() const -> std::vector<Triple>
    {
        std::vector<Triple> result;
        for_each_rank([&] (int r) { result.push_back(unrank_fast(r)); });
        return result;
    }

    auto ThreeGraph::edge_ranks() const -> std::vector<int>
    {
        std::vector<int> result;
        for_each_rank([&] (int r) { result.push_back(r); });
        return result;
    }

    auto ThreeGraph::relabel(std::span<const int> perm) const -> ThreeGraph
    {
        if (static_cast<int>(perm.size()) != _n)
            throw DimensionError("permutation length does not match vertex count");
        ThreeGraph g(_n);
        for_each_rank([&] (int r) {
            auto & t = unrank_fast(r);
            g.add_rank(make_triple(perm[t.a], perm[t.b], perm[t.c]).rank());
        });
        return g;
    }

    auto ThreeGraph::induced(std::span<const Vertex> vertices) const -> ThreeGraph
    {
        int k = static_cast<int>(vertices.size());
        ThreeGraph g(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                for (int l = j + 1; l < k; ++l)
                    if (has_edge(make_triple(vertices[i], vertices[j], vertices[l])))
                        g.add_rank(Triple{i, j, l}.rank());
        return g;
    }

    auto ThreeGraph::covered_vertices() const -> std::uint32_t
    {
        std::uint32_t m = 0;
        for_each_rank([&] (int r) { m |= rank_mask(r); });
        return m;
    }

    auto ThreeGraph::lex_less(const ThreeGraph & other) const -> bool
    {
        for (int w = 0; w < word_count; ++w) {
            auto diff = _words[w] ^ other._words[w];
            if (diff) {
                auto low = diff & (~diff + 1);
                return (other._words[w] & low) != 0;
            }
        }
        return false;
    }

    auto ThreeGraph::hash() const -> std::size_t
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ull ^ static_cast<std::uint64_t>(_n);
        for (auto w : _words) {
            h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h ^ (h >> 33));
    }

    auto ThreeGraph::to_string() const -> std::string
    {
        std::string s = "n=" + std::to_string(_n) + " [";
        bool first = true;
        for_each_rank([&] (int r) {
            if (! first)
                s += " ";
            first = false;
            s += hypex::to_string(unrank_fast(r));
        });
        return s + "]";
    }

    auto delete_vertex(const ThreeGraph & h, Vertex v) -> ThreeGraph
    {
        if (v < 0 || v >= h.n())
            throw InvalidTriple("vertex " + std::to_string(v) + " out of range");
        std::vector<Vertex> keep;
        for (int u = 0; u < h.n(); ++u)
            if (u != v)
                keep.push_back(u);
        return h.induced(keep);
    }

    auto disjoint_union(const ThreeGraph & a, const ThreeGraph & b) -> ThreeGraph
    {
        if (a.n() + b.n() > max_vertices)
            throw CapabilityError("disjoint union needs " + std::to_string(a.n() + b.n()) + " vertices, cap is "
                    + std::to_string(max_vertices));
        ThreeGraph g(a.n() + b.n());
        g.words() = a.words();
        int shift = a.n();
        b.for_each_rank([&] (int r) {
            auto & t = unrank_fast(r);
            g.add_rank(Triple{t.a + shift, t.b + shift, t.c + shift}.rank());
        });
        return g;
    }

    auto disjoint_union(std::span<const ThreeGraph> parts) -> ThreeGraph
    {
        ThreeGraph g(0);
        for (auto & p : parts)
            g = disjoint_union(g, p);
        return g;
    }

    auto is_labelled_subgraph(const ThreeGraph & a, const ThreeGraph & b) -> bool
    {
        if (a.n() > b.n())
            return false;
        for (int w = 0; w < ThreeGraph::word_count; ++w)
            if (a.words()[w] & ~b.words()[w])
                return false;
        return true;
    }

    auto components(const ThreeGraph & h) -> std::vector<std::uint32_t>
    {
        std::vector<int> parent(h.n());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&] (int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        h.for_each_rank([&] (int r) {
            auto & t = unrank_fast(r);
            parent[find(t.b)] = find(t.a);
            parent[find(t.c)] = find(t.a);
        });

        std::vector<std::uint32_t> by_root(h.n(), 0);
        for (int v = 0; v < h.n(); ++v)
            by_root[find(v)] |= 1u << v;
        std::vector<std::uint32_t> result;
        for (auto m : by_root)
            if (m)
                result.push_back(m);
        return result;
    }

    auto is_connected(const ThreeGraph & h) -> bool
    {
        if (h.n() <= 1)
            return true;
        return components(h).size() == 1;
    }

    LinkTable::LinkTable(const ThreeGraph & h) :
        _n(h.n())
    {
        h.for_each_rank([&] (int r) {
            auto & t = unrank_fast(r);
            _link[t.a * max_vertices + t.b] |= 1u << t.c;
            _link[t.b * max_vertices + t.a] |= 1u << t.c;
            _link[t.a * max_vertices + t.c] |= 1u << t.b;
            _link[t.c * max_vertices + t.a] |= 1u << t.b;
            _link[t.b * max_vertices + t.c] |= 1u << t.a;
            _link[t.c * max_vertices + t.b] |= 1u << t.a;
            ++_degree[t.a];
            ++_degree[t.b];
            ++_degree[t.c];
        });
    }
}
