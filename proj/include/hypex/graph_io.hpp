#pragma once

#include <hypex/three_graph.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>

namespace hypex
{
    // ".3g" format: first non-comment line `n m`, then m lines `a b c` with
    // 0 <= a < b < c < n. Lines starting with '#' are comments. Duplicate
    // triples are rejected. Writers emit edges in increasing colex rank.

    auto read_3g(std::istream & in) -> ThreeGraph;
    auto read_3g(const std::filesystem::path & path) -> ThreeGraph;
    auto parse_3g(const std::string & text) -> ThreeGraph;

    auto write_3g(std::ostream & out, const ThreeGraph & g) -> void;
    auto write_3g(const std::filesystem::path & path, const ThreeGraph & g) -> void;
    auto format_3g(const ThreeGraph & g) -> std::string;
}
