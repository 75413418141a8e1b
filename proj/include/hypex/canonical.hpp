#pragma once

#include <hypex/three_graph.hpp>

#include <vector>

namespace hypex
{
    inline constexpr int default_canonical_cap = 13;

    /// Canonical relabelling of h: two graphs on the same vertex count get
    /// equal results iff they are isomorphic (isolated vertices count).
    ///
    /// Labelings are generated by individualisation and equitable refinement
    /// of an ordered vertex partition (the initial split is by degree);
    /// branches related by a vertex transposition that is an automorphism are
    /// explored once. The result is the lexicographically least image (see
    /// ThreeGraph::lex_less) among the surviving leaves.
    ///
    /// Throws CapabilityError when h.n() exceeds cap.
    auto canonical_form(const ThreeGraph & h, int cap = default_canonical_cap) -> ThreeGraph;

    /// The relabelling (perm[v] = new label) that produces canonical_form(h).
    auto canonical_labelling(const ThreeGraph & h, int cap = default_canonical_cap) -> std::vector<int>;

    auto are_isomorphic(const ThreeGraph & a, const ThreeGraph & b) -> bool;

    /// Stable 16-hex-digit digest of a canonical form, used to name files.
    auto canonical_hash(const ThreeGraph & canonical) -> std::string;
}
