#pragma once

#include <hypex/errors.hpp>
#include <hypex/triple.hpp>

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hypex
{
    /// An n-vertex 3-uniform hypergraph stored as a bit vector over colex
    /// ranked triples. Bit i is set iff the triple of rank i is an edge; no
    /// bit at or above C(n,3) is ever set.
    class ThreeGraph
    {
        public:
            static constexpr int word_count = (max_triples + 63) / 64;
            using Words = std::array<std::uint64_t, word_count>;

            ThreeGraph() = default;
            explicit ThreeGraph(int n);
            ThreeGraph(int n, std::initializer_list<Triple> edges);
            ThreeGraph(int n, std::span<const Triple> edges);

            static auto complete(int n) -> ThreeGraph;

            auto n() const -> int { return _n; }
            auto size() const -> int;
            auto empty() const -> bool { return size() == 0; }
            auto triple_capacity() const -> int { return triple_count(_n); }

            auto has_edge(int rank) const -> bool
            {
                return (_words[rank >> 6] >> (rank & 63)) & 1u;
            }
            auto has_edge(const Triple & t) const -> bool { return has_edge(t.rank()); }
            auto has_edge(Vertex x, Vertex y, Vertex z) const -> bool { return has_edge(make_triple(x, y, z)); }

            /// Returns true if the edge was newly inserted.
            auto add_edge(const Triple & t) -> bool;
            auto add_edge(Vertex x, Vertex y, Vertex z) -> bool { return add_edge(make_triple(x, y, z)); }
            auto add_rank(int rank) -> void { _words[rank >> 6] |= std::uint64_t{1} << (rank & 63); }
            auto remove_rank(int rank) -> void { _words[rank >> 6] &= ~(std::uint64_t{1} << (rank & 63)); }
            auto remove_edge(const Triple & t) -> bool;

            auto degree(Vertex v) const -> int;
            auto degrees() const -> std::vector<int>;

            auto edges() const -> std::vector<Triple>;
            auto edge_ranks() const -> std::vector<int>;

            template <typename F_>
            auto for_each_rank(F_ && f) const -> void
            {
                for (int w = 0; w < word_count; ++w) {
                    auto bits = _words[w];
                    while (bits) {
                        int b = std::countr_zero(bits);
                        f(w * 64 + b);
                        bits &= bits - 1;
                    }
                }
            }

            /// perm[v] is the new label of vertex v; perm must be a permutation of 0..n-1.
            auto relabel(std::span<const int> perm) const -> ThreeGraph;

            /// The subgraph induced on the listed vertices, relabelled 0..k-1 in list order.
            auto induced(std::span<const Vertex> vertices) const -> ThreeGraph;

            /// Bitmask of vertices lying in at least one edge.
            auto covered_vertices() const -> std::uint32_t;

            auto words() const -> const Words & { return _words; }
            auto words() -> Words & { return _words; }

            /// Lexicographic order on the bit sequence read from rank 0 upward;
            /// a clear bit sorts before a set bit.
            auto lex_less(const ThreeGraph & other) const -> bool;

            auto operator== (const ThreeGraph &) const -> bool = default;

            auto hash() const -> std::size_t;
            auto to_string() const -> std::string;

        private:
            int _n = 0;
            Words _words{};
    };

    auto delete_vertex(const ThreeGraph & h, Vertex v) -> ThreeGraph;
    auto disjoint_union(const ThreeGraph & a, const ThreeGraph & b) -> ThreeGraph;
    auto disjoint_union(std::span<const ThreeGraph> parts) -> ThreeGraph;

    /// True iff every edge of a is an edge of b, on the same labels.
    auto is_labelled_subgraph(const ThreeGraph & a, const ThreeGraph & b) -> bool;

    /// n = 1, or no isolated vertex and the vertex/edge incidence structure is
    /// one component.
    auto is_connected(const ThreeGraph & h) -> bool;

    /// Vertex masks of the connected components, isolated vertices included
    /// as singleton components.
    auto components(const ThreeGraph & h) -> std::vector<std::uint32_t>;

    /// Co-degree table: link(a,b) is the bitmask of vertices c with {a,b,c} an edge.
    class LinkTable
    {
        public:
            explicit LinkTable(const ThreeGraph & h);

            auto link(Vertex a, Vertex b) const -> std::uint32_t { return _link[a * max_vertices + b]; }
            auto codegree(Vertex a, Vertex b) const -> int { return std::popcount(link(a, b)); }
            auto degree(Vertex v) const -> int { return _degree[v]; }
            auto n() const -> int { return _n; }

        private:
            int _n;
            std::array<std::uint32_t, max_vertices * max_vertices> _link{};
            std::array<int, max_vertices> _degree{};
    };

    struct ThreeGraphHash
    {
        auto operator() (const ThreeGraph & g) const -> std::size_t { return g.hash(); }
    };
}
