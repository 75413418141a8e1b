#pragma once

#include <hypex/constructions.hpp>
#include <hypex/three_graph.hpp>
#include <hypex/turan.hpp>

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hypex
{
    /// An r-colouring of the triples of K_n; colors[i] is the colour of the
    /// triple of colex rank i.
    struct Coloring
    {
        int n = 0;
        int r = 0;
        std::vector<int> colors;

        Coloring() = default;
        Coloring(int n, int r);

        auto color(int rank) const -> int { return colors[rank]; }
        auto color_class(int c) const -> ThreeGraph;
        /// Throws InvalidParameter unless every entry lies in 0..r-1 and the length is C(n,3).
        auto validate() const -> void;

        auto operator== (const Coloring &) const -> bool = default;
    };

    // ".col" format: line 1 `n r`, line 2 the C(n,3) colours in colex order.
    auto read_col(std::istream & in) -> Coloring;
    auto read_col(const std::filesystem::path & path) -> Coloring;
    auto parse_col(const std::string & text) -> Coloring;
    auto write_col(std::ostream & out, const Coloring & c) -> void;
    auto write_col(const std::filesystem::path & path, const Coloring & c) -> void;

    /// Colex-rank-order uniform colouring from a seeded mt19937_64.
    auto random_coloring(int n, int r, std::uint64_t seed) -> Coloring;

    /// A monochromatic loose path {v0,v1,v2}, {v2,v3,v4}, {v4,v5,v6}.
    struct MonoPCertificate
    {
        int color = 0;
        std::array<Vertex, 7> vertices{};
        std::array<int, 3> edges{};

        auto operator== (const MonoPCertificate &) const -> bool = default;
    };

    auto certificate_to_json(const MonoPCertificate & cert) -> std::string;
    /// Throws ParseError on malformed input.
    auto certificate_from_json(const std::string & text) -> MonoPCertificate;

    auto find_mono_P(const Coloring & c) -> std::optional<MonoPCertificate>;
    auto verify_certificate(const Coloring & c, const MonoPCertificate & cert) -> bool;

    enum class HostKind
    {
        None,
        Star,
        Comet,
        K4Star,
        K6Star,
        Rocket,
        Other
    };

    auto to_string(HostKind k) -> std::string;

    /// Eager takes a monochromatic path as soon as one exists. Reduce prefers
    /// a structural reduction whenever some colour fits the stage's hosts and
    /// only falls back to a direct path when none does.
    enum class ReductionPolicy
    {
        Eager,
        Reduce
    };

    struct ReductionStep
    {
        int vertices = 0;
        int colors = 0;
        std::vector<int> color_edges; // indexed by original colour, -1 once removed
        long total_edges = 0;
        long required = 0;
        std::optional<int> chosen_color;
        HostKind host = HostKind::None;
        std::optional<Vertex> removed_vertex;
        std::vector<Triple> removed_extra;
        std::string note;
    };

    struct ReductionTrace
    {
        std::vector<ReductionStep> steps;
        std::optional<MonoPCertificate> certificate;
        std::vector<std::string> proof_gaps;
        std::vector<std::string> logged_gaps; // unconfigured capabilities, not failures

        auto ok() const -> bool { return certificate.has_value() && proof_gaps.empty(); }
    };

    /// Lower bound on the surviving edge count at each vertex count
    /// 16 down to 8: 560, 451, 359, 280, 214, 159, 114, 78, 50.
    auto reduction_schedule(int vertices) -> long;

    /// Extra edges a reduction at this vertex count may delete beyond the
    /// centre: 4 at 16, 1 at 15 and 14, 0 below.
    auto reduction_extra_allowance(int vertices) -> int;

    /// Vertex degrees in K6 u S10: 10 on the clique, 36 at the star centre, 8 on the leaves.
    auto k6_s10_degrees() -> std::vector<int>;

    /// Runs the vertex-and-colour reduction on a colouring of K_n with
    /// r = n - 6 colours (8 <= n <= 16).
    auto reduction_trace(const Coloring & c, ReductionPolicy policy = ReductionPolicy::Eager,
            const RocketDefinition * rocket = nullptr) -> ReductionTrace;

    auto format_trace(const ReductionTrace & t) -> std::string;
    auto trace_to_json(const ReductionTrace & t) -> std::string;

    struct TrialSummary
    {
        int index = 0;
        std::uint64_t seed = 0;
        bool certificate = false;
        bool verified = false;
        int trace_steps = 0;
        int proof_gaps = 0;
    };

    struct TrialsReport
    {
        int n = 0;
        int r = 0;
        std::uint64_t seed = 0;
        std::vector<TrialSummary> trials;
        std::vector<std::string> gap_messages;

        auto certificates() const -> int;
        auto verified() const -> int;
        auto gaps() const -> int;
        auto ok() const -> bool;
    };

    /// Per-trial seed derived from the campaign seed and the trial index.
    auto trial_seed(std::uint64_t seed, int index) -> std::uint64_t;

    auto run_trials(int n, int r, int count, std::uint64_t seed, ReductionPolicy policy = ReductionPolicy::Eager)
        -> TrialsReport;

    auto format_trials(const TrialsReport & report) -> std::string;

    enum class LowerBoundStatus
    {
        Found,
        Exhausted,
        Incomplete
    };

    struct LowerBoundResult
    {
        LowerBoundStatus status = LowerBoundStatus::Exhausted;
        std::optional<Coloring> coloring;
        long nodes = 0;
        double seconds = 0;
    };

    /// Backtracking over triples in colex order. The first triple takes
    /// colour 0 and a colour may only appear after every smaller one; no
    /// colour class may ever contain P.
    auto search_lower_bound(int n, int r, SearchBudget budget = {}) -> LowerBoundResult;
}
