#include <hypex/constructions.hpp>

#include <hypex/canonical.hpp>
#include <hypex/embedding.hpp>
#include <hypex/graph_io.hpp>
#include <hypex/reference.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hypex
{
    namespace
    {
        [[noreturn]] auto bad(const std::string & what) -> void
        {
            throw InvalidParameter(what);
        }

        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok)
                bad(what);
        }

        auto complete_edges(int n) -> std::vector<Triple>
        {
            std::vector<Triple> e;
            for (int c = 2; c < n; ++c)
                for (int b = 1; b < c; ++b)
                    for (int a = 0; a < b; ++a)
                        e.push_back({a, b, c});
            return e;
        }

        auto star_edges(int n) -> std::vector<Triple>
        {
            std::vector<Triple> e;
            for (int b = 2; b < n; ++b)
                for (int a = 1; a < b; ++a)
                    e.push_back({0, a, b});
            return e;
        }

        auto comet_edges(int n) -> std::vector<Triple>
        {
            // K4 on {0,1,2,3} and a full star centred at 0 on {0} u {4..n-1}
            std::vector<Triple> e{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
            for (int b = 5; b < n; ++b)
                for (int a = 4; a < b; ++a)
                    e.push_back({0, a, b});
            return e;
        }

        auto g1_edges(int n) -> std::vector<Triple>
        {
            // v = 0, {x,y,z} = {1,2,3}
            std::vector<Triple> e{{1, 2, 3}};
            for (int b = 2; b < n; ++b)
                for (int a = 1; a < b; ++a)
                    if (a <= 3)
                        e.push_back({0, a, b});
            return e;
        }

        auto g2_edges(int n) -> std::vector<Triple>
        {
            // {x,y,z} = {0,1,2}: the triple itself and every triple meeting it in two vertices
            std::vector<Triple> e{{0, 1, 2}};
            for (int v = 3; v < n; ++v) {
                e.push_back({0, 1, v});
                e.push_back({0, 2, v});
                e.push_back({1, 2, v});
            }
            return e;
        }

        auto g3_edges(int n) -> std::vector<Triple>
        {
            // x = 0, y1,y2 = 1,2, z1,z2 = 3,4
            std::vector<Triple> e;
            for (auto & t : complete_edges(5))
                if (! (t == Triple{1, 2, 3} || t == Triple{1, 2, 4}))
                    e.push_back(t);
            for (int v = 5; v < n; ++v) {
                e.push_back({0, 3, v});
                e.push_back({0, 4, v});
            }
            return e;
        }

        auto k5_plus_edges(int t) -> std::vector<Triple>
        {
            auto e = complete_edges(5);
            for (int v = 5; v < 5 + t; ++v)
                e.push_back({0, 1, v});
            return e;
        }

        auto parse_int(const std::string & s, std::size_t & pos) -> int
        {
            if (pos >= s.size() || ! std::isdigit(static_cast<unsigned char>(s[pos])))
                bad("expected a number in '" + s + "'");
            int v = 0;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
                v = v * 10 + (s[pos++] - '0');
            return v;
        }

        auto trim(const std::string & s) -> std::string
        {
            auto b = s.find_first_not_of(" \t");
            auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        }

        auto parse_atom(const std::string & text) -> ConstructionName
        {
            for (auto p : {"P2+K3", "P2uK3", "P2", "P", "C", "M"})
                if (text == p)
                    return ConstructionName::pattern_constant(text);

            std::size_t pos = 0;
            auto expect_end = [&] {
                if (pos != text.size())
                    bad("unexpected trailing text in '" + text + "'");
            };
            auto starts = [&] (const char * prefix) {
                std::string p(prefix);
                if (text.compare(0, p.size(), p) == 0) {
                    pos = p.size();
                    return true;
                }
                return false;
            };

            if (starts("Co")) {
                int n = parse_int(text, pos);
                expect_end();
                return ConstructionName::comet(n);
            }
            if (starts("Ro")) {
                int n = parse_int(text, pos);
                expect_end();
                return ConstructionName::rocket(n);
            }
            for (auto [prefix, kind] : {std::pair{"G1(", ConstructionKind::G1}, std::pair{"G2(", ConstructionKind::G2},
                        std::pair{"G3(", ConstructionKind::G3}}) {
                if (starts(prefix)) {
                    int n = parse_int(text, pos);
                    if (pos >= text.size() || text[pos] != ')')
                        bad("missing ) in '" + text + "'");
                    ++pos;
                    expect_end();
                    return ConstructionName::make(kind, n);
                }
            }
            if (starts("K5+")) {
                int t = parse_int(text, pos);
                expect_end();
                return ConstructionName::k5_plus(t);
            }
            if (starts("K")) {
                int n = parse_int(text, pos);
                expect_end();
                return ConstructionName::complete(n);
            }
            if (starts("S")) {
                int n = parse_int(text, pos);
                expect_end();
                return ConstructionName::star(n);
            }
            if (starts("E")) {
                int n = parse_int(text, pos);
                expect_end();
                return ConstructionName::empty(n);
            }
            bad("unknown construction '" + text + "'");
        }

        auto check_vertex_range(const ConstructionName & name) -> void
        {
            int n = name.vertex_count();
            if (n > max_construction_vertices)
                throw CapabilityError(name.to_string() + " needs " + std::to_string(n) + " vertices, builders support "
                        + std::to_string(max_construction_vertices));
        }
    }

    auto ConstructionName::of_union(std::vector<ConstructionName> parts) -> ConstructionName
    {
        auto c = ConstructionName::make(ConstructionKind::Union, 0);
        c.parts = std::move(parts);
        c.n = 0;
        for (auto & p : c.parts)
            c.n += p.vertex_count();
        return c;
    }

    auto ConstructionName::pattern_constant(const std::string & name) -> ConstructionName
    {
        auto p = pattern_by_name(name);
        auto c = ConstructionName::make(ConstructionKind::PatternConstant, p.graph.n());
        c.pattern = p.name;
        return c;
    }

    auto ConstructionName::vertex_count() const -> int
    {
        return n;
    }

    auto ConstructionName::to_string() const -> std::string
    {
        switch (kind) {
            case ConstructionKind::Complete: return "K" + std::to_string(n);
            case ConstructionKind::Empty: return "E" + std::to_string(n);
            case ConstructionKind::Star: return "S" + std::to_string(n);
            case ConstructionKind::Comet: return "Co" + std::to_string(n);
            case ConstructionKind::Rocket: return "Ro" + std::to_string(n);
            case ConstructionKind::G1: return "G1(" + std::to_string(n) + ")";
            case ConstructionKind::G2: return "G2(" + std::to_string(n) + ")";
            case ConstructionKind::G3: return "G3(" + std::to_string(n) + ")";
            case ConstructionKind::K5Plus: return "K5+" + std::to_string(t);
            case ConstructionKind::PatternConstant: return pattern;
            case ConstructionKind::Union: {
                std::string s;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    s += (i ? " u " : "") + parts[i].to_string();
                return s;
            }
        }
        return "?";
    }

    auto parse_construction(const std::string & text) -> ConstructionName
    {
        std::vector<ConstructionName> parts;
        std::string rest = text;
        while (true) {
            auto cut = rest.find(" u ");
            auto piece = trim(rest.substr(0, cut));
            if (piece.empty())
                bad("empty construction term in '" + text + "'");

            int multiplicity = 1;
            std::size_t pos = 0;
            if (std::isdigit(static_cast<unsigned char>(piece[0]))) {
                multiplicity = parse_int(piece, pos);
                piece = piece.substr(pos);
            }
            auto atom = parse_atom(piece);
            for (int i = 0; i < multiplicity; ++i)
                parts.push_back(atom);

            if (cut == std::string::npos)
                break;
            rest = rest.substr(cut + 3);
        }
        if (parts.size() == 1)
            return parts[0];
        return ConstructionName::of_union(std::move(parts));
    }

    auto construction_from_cli(const std::string & raw, std::optional<int> n, std::optional<int> t) -> ConstructionName
    {
        std::string name;
        for (char c : raw)
            name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));

        auto need_n = [&] {
            if (! n)
                bad("construction '" + raw + "' needs --n");
            return *n;
        };
        if (name == "complete")
            return ConstructionName::complete(need_n());
        if (name == "empty")
            return ConstructionName::empty(need_n());
        if (name == "star")
            return ConstructionName::star(need_n());
        if (name == "comet")
            return ConstructionName::comet(need_n());
        if (name == "rocket")
            return ConstructionName::rocket(need_n());
        if (name == "g1")
            return ConstructionName::g1(need_n());
        if (name == "g2")
            return ConstructionName::g2(need_n());
        if (name == "g3")
            return ConstructionName::g3(need_n());
        if (name == "k5plus") {
            if (t)
                return ConstructionName::k5_plus(*t);
            return ConstructionName::k5_plus(need_n() - 5);
        }
        return parse_construction(raw);
    }

    auto RocketDefinition::edges(int n) const -> std::vector<Triple>
    {
        if (auto it = templates.find(n); it != templates.end())
            return it->second.edges();
        if (generator)
            return generator(n);
        throw ConstructionUndefined("no rocket definition configured for n=" + std::to_string(n));
    }

    auto load_rocket_template(const std::string & path) -> RocketDefinition
    {
        RocketDefinition r;
        auto g = read_3g(std::filesystem::path(path));
        r.templates.emplace(g.n(), g);
        return r;
    }

    auto construction_edges(const ConstructionName & name, const RocketDefinition * rocket) -> std::vector<Triple>
    {
        check_vertex_range(name);
        int n = name.n;
        switch (name.kind) {
            case ConstructionKind::Complete:
                require(n >= 1, "K_n needs n >= 1");
                return complete_edges(n);
            case ConstructionKind::Empty:
                require(n >= 0, "E_n needs n >= 0");
                return {};
            case ConstructionKind::Star:
                require(n >= 1, "S_n needs n >= 1");
                return star_edges(n);
            case ConstructionKind::Comet:
                require(n >= 4, "Co(n) needs n >= 4");
                return comet_edges(n);
            case ConstructionKind::G1:
                require(n >= 4, "G1(n) needs n >= 4");
                return g1_edges(n);
            case ConstructionKind::G2:
                require(n >= 4, "G2(n) needs n >= 4");
                return g2_edges(n);
            case ConstructionKind::G3:
                require(n >= 5, "G3(n) needs n >= 5");
                return g3_edges(n);
            case ConstructionKind::K5Plus:
                require(name.t >= 0, "K5+t needs t >= 0");
                return k5_plus_edges(name.t);
            case ConstructionKind::PatternConstant:
                return pattern_by_name(name.pattern).graph.edges();
            case ConstructionKind::Rocket: {
                require(n >= 5, "Ro(n) needs n >= 5");
                if (! rocket)
                    throw ConstructionUndefined("rocket Ro(" + std::to_string(n)
                            + ") is not defined here; supply a rocket template or generator");
                auto e = rocket->edges(n);
                for (auto & t : e)
                    if (t.c >= n || ! (t.a < t.b && t.b < t.c) || t.a < 0)
                        throw ConstructionUndefined("rocket definition produced an invalid triple for n=" + std::to_string(n));
                std::sort(e.begin(), e.end());
                if (std::adjacent_find(e.begin(), e.end()) != e.end())
                    throw ConstructionUndefined("rocket definition produced duplicate triples");
                auto expected = 3 + binom(n - 5, 2);
                if (static_cast<std::int64_t>(e.size()) != expected)
                    throw ConstructionUndefined("rocket Ro(" + std::to_string(n) + ") has " + std::to_string(e.size())
                            + " edges, expected 3 + C(n-5,2) = " + std::to_string(expected));
                if (contains_in_edge_list(e, n, loose_path()))
                    throw ConstructionUndefined("rocket Ro(" + std::to_string(n) + ") contains a loose path");
                return e;
            }
            case ConstructionKind::Union: {
                std::vector<Triple> all;
                int shift = 0;
                for (auto & p : name.parts) {
                    for (auto & t : construction_edges(p, rocket))
                        all.push_back({t.a + shift, t.b + shift, t.c + shift});
                    shift += p.vertex_count();
                }
                return all;
            }
        }
        return {};
    }

    auto build(const ConstructionName & name, const RocketDefinition * rocket) -> ThreeGraph
    {
        if (name.vertex_count() > max_vertices)
            throw CapabilityError(name.to_string() + " has " + std::to_string(name.vertex_count())
                    + " vertices; ThreeGraph holds at most " + std::to_string(max_vertices));
        auto e = construction_edges(name, rocket);
        return ThreeGraph(name.vertex_count(), e);
    }

    auto star(int n) -> ThreeGraph { return build(ConstructionName::star(n)); }
    auto comet(int n) -> ThreeGraph { return build(ConstructionName::comet(n)); }
    auto g1(int n) -> ThreeGraph { return build(ConstructionName::g1(n)); }
    auto g2(int n) -> ThreeGraph { return build(ConstructionName::g2(n)); }
    auto g3(int n) -> ThreeGraph { return build(ConstructionName::g3(n)); }
    auto k5_plus(int t) -> ThreeGraph { return build(ConstructionName::k5_plus(t)); }
}
