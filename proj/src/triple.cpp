#include <hypex/triple.hpp>

#include <algorithm>

namespace hypex
{
    auto triple_rank(Vertex a, Vertex b, Vertex c) -> int
    {
        if (! (0 <= a && a < b && b < c && c < max_vertices))
            throw InvalidTriple("triple (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c)
                    + ") is not strictly increasing within [0," + std::to_string(max_vertices) + ")");
        return Triple{a, b, c}.rank();
    }

    auto make_triple(Vertex x, Vertex y, Vertex z) -> Triple
    {
        std::array<Vertex, 3> v{x, y, z};
        std::sort(v.begin(), v.end());
        triple_rank(v[0], v[1], v[2]);
        return Triple{v[0], v[1], v[2]};
    }

    auto triple_unrank(int rank) -> Triple
    {
        if (rank < 0 || rank >= max_triples)
            throw InvalidTriple("rank " + std::to_string(rank) + " out of range");

        // greedy decoding of the combinatorial number system
        int c = 2;
        while (binom(c + 1, 3) <= rank)
            ++c;
        rank -= static_cast<int>(binom(c, 3));
        int b = 1;
        while (binom(b + 1, 2) <= rank)
            ++b;
        rank -= static_cast<int>(binom(b, 2));
        return Triple{rank, b, c};
    }

    namespace detail
    {
        auto triple_tables() -> const TripleTables &
        {
            static const TripleTables tables = [] {
                TripleTables t;
                for (int c = 2; c < max_vertices; ++c)
                    for (int b = 1; b < c; ++b)
                        for (int a = 0; a < b; ++a) {
                            Triple tr{a, b, c};
                            t.unrank[tr.rank()] = tr;
                            t.mask[tr.rank()] = tr.mask();
                        }
                return t;
            }();
            return tables;
        }
    }

    auto to_string(const Triple & t) -> std::string
    {
        return "{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
    }
}
