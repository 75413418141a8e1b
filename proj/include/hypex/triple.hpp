#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hypex
{
    using Vertex = int;

    inline constexpr int max_vertices = 20;

    constexpr auto binom(int n, int k) -> std::int64_t
    {
        if (k < 0 || n < k)
            return 0;
        if (k > n - k)
            k = n - k;
        std::int64_t r = 1;
        for (int i = 1; i <= k; ++i)
            r = r * (n - k + i) / i;
        return r;
    }

    constexpr auto triple_count(int n) -> int
    {
        return static_cast<int>(binom(n, 3));
    }

    inline constexpr int max_triples = 1140; // C(20,3)

    class InvalidTriple : public std::invalid_argument
    {
        public:
            using std::invalid_argument::invalid_argument;
    };

    /// A vertex triple a < b < c together with its colex rank
    /// C(c,3) + C(b,2) + C(a,1).
    struct Triple
    {
        Vertex a = 0, b = 1, c = 2;

        constexpr auto rank() const -> int
        {
            return static_cast<int>(binom(c, 3) + binom(b, 2) + a);
        }

        constexpr auto contains(Vertex v) const -> bool
        {
            return a == v || b == v || c == v;
        }

        constexpr auto mask() const -> std::uint32_t
        {
            return (1u << a) | (1u << b) | (1u << c);
        }

        auto operator== (const Triple &) const -> bool = default;
        auto operator<=> (const Triple &) const = default;
    };

    /// Rank of a strictly increasing triple; throws InvalidTriple otherwise.
    auto triple_rank(Vertex a, Vertex b, Vertex c) -> int;

    /// Sorts three distinct vertices into a Triple; throws on repeats.
    auto make_triple(Vertex x, Vertex y, Vertex z) -> Triple;

    /// Inverse of Triple::rank.
    auto triple_unrank(int rank) -> Triple;

    namespace detail
    {
        struct TripleTables
        {
            std::array<Triple, max_triples> unrank{};
            std::array<std::uint32_t, max_triples> mask{};
        };

        auto triple_tables() -> const TripleTables &;
    }

    inline auto unrank_fast(int rank) -> const Triple &
    {
        return detail::triple_tables().unrank[rank];
    }

    inline auto rank_mask(int rank) -> std::uint32_t
    {
        return detail::triple_tables().mask[rank];
    }

    auto to_string(const Triple &) -> std::string;
}
