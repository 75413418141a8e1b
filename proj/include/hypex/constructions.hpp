#pragma once

#include <hypex/pattern.hpp>
#include <hypex/three_graph.hpp>

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hypex
{
    /// Largest vertex count the edge-list builders accept (vertex masks are 32 bits).
    inline constexpr int max_construction_vertices = 32;

    enum class ConstructionKind
    {
        Complete,
        Empty,
        Star,
        Comet,
        Rocket,
        G1,
        G2,
        G3,
        K5Plus,
        Union,
        PatternConstant
    };

    /// A named 3-graph. Labelling conventions: distinguished vertices take the
    /// smallest labels (star and comet centre 0, comet head {1,2,3}; G1: v=0,
    /// {x,y,z}={1,2,3}; G2: {x,y,z}={0,1,2}; G3: x=0, y=1,2, z=3,4; K5+t: K5 on
    /// 0..4 with a=0, b=1 and pendant vertices 5..4+t). Union parts are laid
    /// out left to right.
    struct ConstructionName
    {
        ConstructionKind kind = ConstructionKind::Empty;
        int n = 0;
        int t = 0;
        std::vector<ConstructionName> parts;
        std::string pattern;

        static auto complete(int n) -> ConstructionName { return make(ConstructionKind::Complete, n); }
        static auto empty(int n) -> ConstructionName { return make(ConstructionKind::Empty, n); }
        static auto star(int n) -> ConstructionName { return make(ConstructionKind::Star, n); }
        static auto comet(int n) -> ConstructionName { return make(ConstructionKind::Comet, n); }
        static auto rocket(int n) -> ConstructionName { return make(ConstructionKind::Rocket, n); }
        static auto g1(int n) -> ConstructionName { return make(ConstructionKind::G1, n); }
        static auto g2(int n) -> ConstructionName { return make(ConstructionKind::G2, n); }
        static auto g3(int n) -> ConstructionName { return make(ConstructionKind::G3, n); }
        static auto k5_plus(int t) -> ConstructionName { return make(ConstructionKind::K5Plus, 5 + t, t); }
        static auto make(ConstructionKind kind, int n, int t = 0) -> ConstructionName
        {
            ConstructionName c;
            c.kind = kind;
            c.n = n;
            c.t = t;
            return c;
        }
        static auto of_union(std::vector<ConstructionName> parts) -> ConstructionName;
        static auto pattern_constant(const std::string & name) -> ConstructionName;

        auto vertex_count() const -> int;
        auto to_string() const -> std::string;

        auto operator== (const ConstructionName &) const -> bool = default;
    };

    /// Parses compact names: K6, E3, S10, Co13, Ro16, G1(7), G2(7), G3(7),
    /// K5+2, pattern constants P, C, M, P2, P2+K3, and unions joined by " u "
    /// (for example "K6 u S10", "2K6 u K1").
    auto parse_construction(const std::string & text) -> ConstructionName;

    /// Builds a construction from a CLI-style name and parameters (for example
    /// name "star" with n=7, name "k5plus" with t=2). Compact names are also
    /// accepted when n and t are absent.
    auto construction_from_cli(const std::string & name, std::optional<int> n, std::optional<int> t) -> ConstructionName;

    class ConstructionUndefined : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    /// The rocket has no definition in this toolkit; callers may supply one as
    /// per-n templates or a generator. Every rocket passes a validation gate:
    /// 3 + C(n-5,2) edges and no loose path.
    struct RocketDefinition
    {
        std::map<int, ThreeGraph> templates;
        std::function<std::vector<Triple>(int)> generator;

        auto edges(int n) const -> std::vector<Triple>;
    };

    /// Loads a rocket template from a .3g file; the vertex count keys it.
    auto load_rocket_template(const std::string & path) -> RocketDefinition;

    /// Edge list of a construction, valid up to max_construction_vertices.
    auto construction_edges(const ConstructionName & name, const RocketDefinition * rocket = nullptr)
        -> std::vector<Triple>;

    /// Materialises a construction as a ThreeGraph (n <= 20).
    auto build(const ConstructionName & name, const RocketDefinition * rocket = nullptr) -> ThreeGraph;

    auto star(int n) -> ThreeGraph;
    auto comet(int n) -> ThreeGraph;
    auto g1(int n) -> ThreeGraph;
    auto g2(int n) -> ThreeGraph;
    auto g3(int n) -> ThreeGraph;
    auto k5_plus(int t) -> ThreeGraph;

    /// Ex4(7;M) as produced by the turan engine and frozen here. Canonical forms.
    auto order4_matching_family_n7() -> const std::vector<ThreeGraph> &;

    /// Ex(9;{P,C}|M) as produced by the turan engine and frozen here. Canonical forms.
    auto conditional_pc_m_family_n9() -> const std::vector<ThreeGraph> &;

    /// The frozen family named by a reference-table token ("Ex4(7;M)",
    /// "Ex(9;{P,C}|M)"), or nullptr for ordinary construction names.
    auto derived_family(const std::string & token) -> const std::vector<ThreeGraph> *;

    struct FormulaCheck
    {
        std::string construction;
        int n = 0;
        std::string property;
        std::string expected;
        std::string actual;
        bool pass = false;
        bool skipped = false;
    };

    /// Closed-form edge counts and freeness predicates of every named
    /// construction for 7 <= n <= max_n, plus qualification of the order-5
    /// candidates for 7 <= n <= min(max_n, 13).
    auto check_formulas(int max_n, const RocketDefinition * rocket = nullptr) -> std::vector<FormulaCheck>;

    auto format_formula_report(const std::vector<FormulaCheck> & checks) -> std::string;
}
