#pragma once

#include <hypex/three_graph.hpp>
#include <hypex/turan.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypex
{
    /// Raised by decompose when a precondition fails; names the predicate.
    class NotDecomposable : public std::runtime_error
    {
        public:
            NotDecomposable(std::string predicate);

            std::string predicate;
    };

    /// Edge classes around a fixed copy Q of P2 taken from a copy of P2 u K3.
    /// U = V(Q), x = the vertex shared by the two edges of Q, W = V \ U,
    /// W0 = vertices isolated in H[W], W1 = W \ W0.
    struct Decomposition
    {
        ThreeGraph host;
        std::array<int, 2> q{};
        int k3 = 0; // the edge of the P2 u K3 copy disjoint from Q
        Vertex x = 0;
        std::uint32_t u = 0, w = 0, w0 = 0, w1 = 0;

        std::vector<int> h_u, h_w, h0, h1; // ranks
        std::vector<int> mixed;            // edges meeting U, W0 and W1
        std::vector<int> f[3];             // F^k
        std::vector<int> f_i[2][3];        // F_i^k

        /// Edges of the given list that contain v.
        auto at(const std::vector<int> & edges, Vertex v) const -> int;
    };

    /// Requires h to be {P,C}-free and to contain M and P2 u K3; picks the
    /// copy of P2 u K3 whose sorted edge ranks are lexicographically least.
    auto decompose(const ThreeGraph & h) -> Decomposition;

    /// One decomposition per copy of P2 that extends to P2 u K3.
    auto decompose_all(const ThreeGraph & h) -> std::vector<Decomposition>;

    struct AuditEntry
    {
        std::string name;
        std::string scope; // vertex or "-"
        long left = 0;
        long right = 0;
        bool applicable = true;
        bool pass = true;
        std::string detail;
    };

    struct AuditReport
    {
        std::vector<AuditEntry> entries;

        auto pass() const -> bool;
        auto failures() const -> std::vector<AuditEntry>;
    };

    /// Evaluates the structural properties and the inequalities uwstar,
    /// hwstar, r1-r7, hv, hu1, e4, nonseparability and the opportunistic
    /// H[W] bound. Entries whose side condition fails are not applicable.
    auto audit_inequalities(const Decomposition & d) -> AuditReport;

    auto format_decomposition(const Decomposition & d) -> std::string;
    auto format_audit(const AuditReport & r) -> std::string;
    auto audit_to_json(const Decomposition & d, const AuditReport & r) -> std::string;

    struct AnchoredSweepReport
    {
        int n = 0;
        std::vector<ThreeGraph> graphs; // saturated, connected, P-free, containing C and M
        int embedded = 0;
        int max_edges = 0;
        bool complete = true;
        int decomposable = 0; // graphs meeting decompose's preconditions
        int audit_failures = 0;

        auto pass() const -> bool;
    };

    auto anchored_sweep(int n, SearchBudget budget = {}) -> AnchoredSweepReport;

    struct SweepReport
    {
        int n = 0;
        int trials = 0;
        std::uint64_t seed = 0;
        int audited = 0;
        int skipped = 0; // no qualifying sample within the retry bound
        int failures = 0;
        std::vector<std::pair<std::string, int>> applicable_counts;
        std::vector<std::string> failure_details;

        auto pass() const -> bool { return failures == 0; }
    };

    /// Maximal {P,C}-free graphs from random greedy edge addition; samples
    /// without M or P2 u K3 are retried up to `retries` times, then skipped.
    auto random_sweep(int n, int trials, std::uint64_t seed, int retries = 20) -> SweepReport;

    /// The random greedy maximal {P,C}-free sample used by random_sweep.
    auto random_maximal_pc_free(int n, std::uint64_t seed) -> ThreeGraph;

    auto format_sweep(const SweepReport & r) -> std::string;
}
