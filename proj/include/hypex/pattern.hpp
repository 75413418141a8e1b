#pragma once

#include <hypex/embedding.hpp>
#include <hypex/three_graph.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hypex
{
    enum class PatternKind
    {
        LoosePath,       // P: {a,b,c},{c,d,e},{e,f,g}
        Triangle,        // C: {a,b,c},{c,d,e},{e,f,a}
        Matching,        // M: two disjoint edges
        TwoPath,         // P2: two edges sharing one vertex
        TwoPathPlusEdge, // P2 u K3
        Custom
    };

    /// A small forbidden 3-graph, built on its minimal vertex count.
    struct Pattern
    {
        std::string name;
        PatternKind kind = PatternKind::Custom;
        ThreeGraph graph;

        auto operator== (const Pattern & o) const -> bool { return name == o.name && graph == o.graph; }
    };

    auto loose_path() -> const Pattern &;
    auto triangle() -> const Pattern &;
    auto matching() -> const Pattern &;
    auto two_path() -> const Pattern &;
    auto two_path_plus_edge() -> const Pattern &;
    auto custom_pattern(std::string name, ThreeGraph g) -> Pattern;

    /// Accepts P, C, M, P2 and P2+K3 (also spelled P2uK3).
    auto pattern_by_name(const std::string & name) -> Pattern;

    /// Containment, using the intersection-signature fast paths for the named
    /// patterns and the generic embedding search otherwise.
    auto contains(const ThreeGraph & host, const Pattern & p) -> bool;

    /// Containment of a copy that uses the host edge e (which must be present).
    auto contains_through(const ThreeGraph & host, const Pattern & p, const Triple & e) -> bool;

    auto is_free_of(const ThreeGraph & host, std::span<const Pattern> family) -> bool;

    /// A loose path witness (edges in path order), if any.
    auto find_loose_path(const ThreeGraph & host) -> std::optional<std::array<Triple, 3>>;

    /// Containment on a bare edge list, for vertex labels up to 31 (beyond the
    /// ThreeGraph width). Only the fast-path kinds accept labels >= 20.
    auto contains_in_edge_list(std::span<const Triple> edges, int n, const Pattern & p) -> bool;

    /// The generic-search answer, ignoring fast paths.
    auto contains_generic(const ThreeGraph & host, const Pattern & p) -> bool;
}
