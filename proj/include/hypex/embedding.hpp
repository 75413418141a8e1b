#pragma once

#include <hypex/three_graph.hpp>

#include <optional>
#include <vector>

namespace hypex
{
    /// An injective map from pattern vertices to host vertices carrying every
    /// pattern edge onto a host edge (non-induced).
    struct Embedding
    {
        std::vector<Vertex> map;

        auto operator== (const Embedding &) const -> bool = default;
    };

    /// Checks injectivity and edge preservation.
    auto is_valid_embedding(const ThreeGraph & host, const ThreeGraph & pattern, const Embedding & e) -> bool;

    /// Backtracking search with bitmask domains and forward checking on
    /// co-degree links. An edgeless pattern embeds trivially.
    auto contains_pattern(const ThreeGraph & host, const ThreeGraph & pattern) -> std::optional<Embedding>;

    /// As contains_pattern, restricted to embeddings that carry some pattern
    /// edge onto the host edge `through`.
    auto contains_pattern_through(const ThreeGraph & host, const ThreeGraph & pattern, const Triple & through)
        -> std::optional<Embedding>;

    /// True iff small embeds into big. With same_n the map is a bijection and
    /// unequal vertex counts throw DimensionError.
    auto is_subgraph_upto_iso(const ThreeGraph & small, const ThreeGraph & big, bool same_n) -> bool;
}
