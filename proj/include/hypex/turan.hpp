#pragma once

#include <hypex/pattern.hpp>
#include <hypex/three_graph.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypex
{
    /// Node and wall-clock limits; zero means unlimited.
    struct SearchBudget
    {
        long max_nodes = 0;
        double max_seconds = 0;

        /// Reads HYPEX_BUDGET_NODES and HYPEX_BUDGET_SECS, falling back to the arguments.
        static auto from_env(long nodes = 0, double seconds = 0) -> SearchBudget;
    };

    struct SearchStats
    {
        long nodes = 0;
        long duplicates = 0;
        long pruned_bound = 0;
        long pruned_forbidden = 0;
        long saturated_leaves = 0;
        long qualifying_leaves = 0;
        double seconds = 0;
    };

    struct TuranQuery
    {
        int n = 0;
        std::vector<Pattern> forbidden;
        int order = 1;
        std::vector<Pattern> must_contain;
        bool connected_only = false;
        std::vector<ThreeGraph> excluded_hosts;
        SearchBudget budget;
    };

    struct TuranResult
    {
        std::optional<int> value;
        std::vector<ThreeGraph> extremal; // canonical forms, sorted
        SearchStats stats;
    };

    /// Raised when a budget runs out. Carries the best value seen so far,
    /// which is only a lower bound.
    class IncompleteSearch : public std::runtime_error
    {
        public:
            IncompleteSearch(std::optional<int> best, SearchStats stats);

            std::optional<int> best;
            SearchStats stats;
    };

    /// Maximum number of edges of a forbidden-free n-vertex graph that
    /// contains every anchor, is connected if requested, and embeds
    /// bijectively into no excluded host, with all maximisers up to isomorphism.
    ///
    /// Every qualifying property is preserved by adding edges that keep the
    /// graph forbidden-free, so every maximiser is saturated. The search
    /// grows graphs one edge at a time, visits each isomorphism class once
    /// and only tests the constraints at saturated leaves.
    auto max_free(const TuranQuery & query) -> TuranResult;

    /// All saturated forbidden-free graphs with at least min_edges edges that
    /// satisfy the query's leaf constraints, up to isomorphism.
    auto enumerate_saturated(const TuranQuery & query, int min_edges) -> std::vector<ThreeGraph>;

    struct TuranLadder
    {
        int n = 0;
        std::vector<TuranResult> orders;
        bool complete = true;
        std::optional<IncompleteSearch> failure;

        auto values() const -> std::vector<std::optional<int>>;
        auto strictly_decreasing() const -> bool;
    };

    /// Orders 1..max_order; each order's extremal family joins the excluded
    /// hosts of the next. Stops at the first incomplete order or at an order
    /// with no qualifying graph.
    auto ladder(int n, const std::vector<Pattern> & forbidden, int max_order, const std::vector<Pattern> & must_contain = {},
            bool connected_only = false, SearchBudget budget = {}) -> TuranLadder;

    /// The order-s conditional number: the last rung of the conditional ladder.
    /// Throws IncompleteSearch if any rung runs out of budget.
    auto conditional(int n, const std::vector<Pattern> & forbidden, const std::vector<Pattern> & anchors,
            bool connected_only, int order, SearchBudget budget = {}) -> TuranResult;

    struct ReferenceComparison
    {
        int n = 0;
        int order = 0;
        std::optional<long> reference;
        std::optional<int> computed;
        std::vector<std::string> reference_family;
        bool computed_complete = false;
        bool value_match = false;
        bool family_match = false;
        std::string note;
    };

    struct ReferenceReport
    {
        std::vector<ReferenceComparison> rows;
        std::vector<std::string> consistency_failures;

        auto ok() const -> bool;
    };

    /// Compares computed P-ladders (supplied for small n) against the
    /// reference table, and checks the table's own strict decrease in order
    /// for 7 <= n <= max_n.
    auto check_reference_tables(int max_n, const std::vector<TuranLadder> & computed) -> ReferenceReport;
}
