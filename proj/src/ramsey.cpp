#include <hypex/ramsey.hpp>

#include <hypex/embedding.hpp>
#include <hypex/errors.hpp>
#include <hypex/pattern.hpp>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

namespace hypex
{
    namespace
    {
        using Clock = std::chrono::steady_clock;

        auto certificate_from_path(int color, const std::array<Triple, 3> & path) -> MonoPCertificate
        {
            auto [e1, e2, e3] = path;
            auto m1 = e1.mask(), m2 = e2.mask(), m3 = e3.mask();
            int c = std::countr_zero(m1 & m2);
            int e = std::countr_zero(m2 & m3);
            auto low = [] (std::uint32_t m) { return std::countr_zero(m); };
            auto high = [] (std::uint32_t m) { return 31 - std::countl_zero(m); };
            auto ab = m1 & ~(1u << c);
            auto d = m2 & ~(1u << c) & ~(1u << e);
            auto fg = m3 & ~(1u << e);
            MonoPCertificate cert;
            cert.color = color;
            cert.vertices = {low(ab), high(ab), c, low(d), e, low(fg), high(fg)};
            cert.edges = {e1.rank(), e2.rank(), e3.rank()};
            return cert;
        }

        auto mono_path(const std::vector<ThreeGraph> & classes, const std::vector<bool> & live)
            -> std::optional<MonoPCertificate>
        {
            for (std::size_t c = 0; c < classes.size(); ++c) {
                if (! live[c])
                    continue;
                if (auto p = find_loose_path(classes[c]))
                    return certificate_from_path(static_cast<int>(c), *p);
            }
            return std::nullopt;
        }

        auto splitmix(std::uint64_t x) -> std::uint64_t
        {
            x += 0x9e3779b97f4a7c15ull;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
            return x ^ (x >> 31);
        }

        struct HostMatch
        {
            HostKind kind = HostKind::None;
            Vertex centre = 0;
            std::vector<Triple> extra;
        };

        auto lowest(std::uint32_t m) -> Vertex
        {
            return std::countr_zero(m);
        }

        auto star_match(const ThreeGraph & g, std::uint32_t alive) -> std::optional<HostMatch>
        {
            auto common = alive;
            g.for_each_rank([&] (int r) { common &= rank_mask(r); });
            if (! common)
                return std::nullopt;
            return HostMatch{HostKind::Star, lowest(common), {}};
        }

        auto comet_match(const ThreeGraph & g, std::uint32_t alive) -> std::optional<HostMatch>
        {
            auto edges = g.edges();
            for (auto cm = alive; cm; cm &= cm - 1) {
                Vertex c = lowest(cm);
                std::vector<Triple> avoid;
                for (auto & e : edges)
                    if (! e.contains(c))
                        avoid.push_back(e);
                if (avoid.size() != 1)
                    continue;
                auto head = avoid[0].mask();
                bool ok = true;
                for (auto & e : edges) {
                    if (! e.contains(c))
                        continue;
                    auto rest = e.mask() & ~(1u << c);
                    if ((rest & head) != rest && (rest & head) != 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok)
                    return HostMatch{HostKind::Comet, c, avoid};
            }
            return std::nullopt;
        }

        auto k4_star_match(const ThreeGraph & g, std::uint32_t alive) -> std::optional<HostMatch>
        {
            auto edges = g.edges();
            for (auto cm = alive; cm; cm &= cm - 1) {
                Vertex c = lowest(cm);
                std::vector<Triple> avoid;
                std::uint32_t clique = 0, leaves = 0;
                for (auto & e : edges) {
                    if (e.contains(c))
                        leaves |= e.mask() & ~(1u << c);
                    else {
                        avoid.push_back(e);
                        clique |= e.mask();
                    }
                }
                if (avoid.size() > 4 || std::popcount(clique) > 4 || (clique & leaves))
                    continue;
                auto spare = alive & ~leaves & ~clique & ~(1u << c);
                if (std::popcount(clique) + std::popcount(spare) < 4)
                    continue;
                return HostMatch{HostKind::K4Star, c, avoid};
            }
            return std::nullopt;
        }

        auto is_k6_s10(const ThreeGraph & g) -> bool
        {
            if (g.n() != 16 || g.size() != 56)
                return false;
            auto deg = g.degrees();
            int centre = -1, clique = 0, leaves = 0;
            std::uint32_t clique_mask = 0;
            for (int v = 0; v < 16; ++v) {
                if (deg[v] == 36)
                    centre = v;
                else if (deg[v] == 10) {
                    ++clique;
                    clique_mask |= 1u << v;
                }
                else if (deg[v] == 8)
                    ++leaves;
            }
            if (centre < 0 || clique != 6 || leaves != 9)
                return false;
            for (auto & e : g.edges()) {
                bool in_clique = (e.mask() & clique_mask) == e.mask();
                bool in_star = e.contains(centre) && ! (e.mask() & clique_mask);
                if (! in_clique && ! in_star)
                    return false;
            }
            return true;
        }

        auto rocket_match(const ThreeGraph & g, const RocketDefinition & rocket) -> std::optional<HostMatch>
        {
            auto ro_edges = rocket.edges(g.n());
            ThreeGraph ro(g.n(), ro_edges);
            std::optional<Vertex> ro_centre;
            for (int v = 0; v < ro.n() && ! ro_centre; ++v)
                if (ro.size() - ro.degree(v) <= 4)
                    ro_centre = v;
            if (! ro_centre)
                return std::nullopt;
            auto emb = contains_pattern(ro, g);
            if (! emb)
                return std::nullopt;
            Vertex centre = 0;
            for (int v = 0; v < g.n(); ++v)
                if (emb->map[v] == *ro_centre)
                    centre = v;
            HostMatch m{HostKind::Rocket, centre, {}};
            for (auto & e : g.edges())
                if (! e.contains(centre))
                    m.extra.push_back(e);
            return m;
        }

        class Reducer
        {
            public:
                Reducer(const Coloring & c, ReductionPolicy policy, const RocketDefinition * rocket) :
                    _n(c.n),
                    _policy(policy),
                    _rocket(rocket),
                    _alive(c.n >= 32 ? ~0u : (1u << c.n) - 1),
                    _live(c.r, true)
                {
                    for (int k = 0; k < c.r; ++k)
                        _classes.push_back(c.color_class(k));
                }

                auto run() -> ReductionTrace
                {
                    int m = _n;
                    while (true) {
                        auto & step = begin_step(m);
                        if (step.total_edges < step.required) {
                            gap(step, "edge bound violated: " + std::to_string(step.total_edges) + " < "
                                    + std::to_string(step.required));
                            break;
                        }
                        if (m <= 8) {
                            endgame(step);
                            break;
                        }
                        auto cert = mono_path(_classes, _live);
                        if (cert && _policy == ReductionPolicy::Eager) {
                            finish(step, *cert, "direct monochromatic P");
                            break;
                        }
                        auto match = find_host(step, m);
                        if (! match) {
                            if (cert)
                                finish(step, *cert, "no colour fits a host; direct monochromatic P");
                            else
                                stuck(step, m);
                            break;
                        }
                        if (! reduce(step, m, *match))
                            break;
                        --m;
                    }
                    return std::move(_trace);
                }

            private:
                auto begin_step(int m) -> ReductionStep &
                {
                    ReductionStep s;
                    s.vertices = m;
                    s.colors = static_cast<int>(std::count(_live.begin(), _live.end(), true));
                    for (std::size_t k = 0; k < _classes.size(); ++k) {
                        int e = _live[k] ? _classes[k].size() : -1;
                        s.color_edges.push_back(e);
                        if (e > 0)
                            s.total_edges += e;
                    }
                    s.required = reduction_schedule(m);
                    _trace.steps.push_back(s);
                    return _trace.steps.back();
                }

                auto gap(ReductionStep & step, const std::string & what) -> void
                {
                    step.note = what;
                    _trace.proof_gaps.push_back("n=" + std::to_string(step.vertices) + ": " + what);
                }

                auto finish(ReductionStep & step, const MonoPCertificate & cert, const std::string & why) -> void
                {
                    step.note = why;
                    step.chosen_color = cert.color;
                    _trace.certificate = cert;
                }

                auto endgame(ReductionStep & step) -> void
                {
                    int heavy = -1;
                    for (std::size_t k = 0; k < _classes.size(); ++k)
                        if (_live[k] && (heavy < 0 || _classes[k].size() > _classes[heavy].size()))
                            heavy = static_cast<int>(k);
                    if (heavy >= 0) {
                        if (auto p = find_loose_path(_classes[heavy])) {
                            finish(step, certificate_from_path(heavy, *p),
                                    "pigeonhole: colour with " + std::to_string(_classes[heavy].size()) + " > 21 edges");
                            return;
                        }
                    }
                    if (auto cert = mono_path(_classes, _live)) {
                        finish(step, *cert, "direct monochromatic P");
                        return;
                    }
                    gap(step, "no monochromatic P at the final stage");
                }

                auto allowed(int m) const -> std::vector<HostKind>
                {
                    if (m == 16)
                        return {HostKind::Star, HostKind::Comet, HostKind::K4Star, HostKind::Rocket};
                    if (m == 15 || m == 14)
                        return {HostKind::Star, HostKind::Comet};
                    return {HostKind::Star};
                }

                auto find_host(ReductionStep & step, int m) -> std::optional<std::pair<int, HostMatch>>
                {
                    auto kinds = allowed(m);
                    bool wants_rocket = std::find(kinds.begin(), kinds.end(), HostKind::Rocket) != kinds.end();
                    if (wants_rocket && ! _rocket)
                        _trace.logged_gaps.push_back("n=" + std::to_string(m)
                                + ": Ro host check skipped (no rocket definition configured)");
                    std::vector<int> order;
                    for (std::size_t k = 0; k < _classes.size(); ++k)
                        if (_live[k])
                            order.push_back(static_cast<int>(k));
                    std::stable_sort(order.begin(), order.end(), [&] (int a, int b) {
                        return _classes[a].size() > _classes[b].size();
                    });
                    for (auto kind : kinds) {
                        for (int k : order) {
                            std::optional<HostMatch> hit;
                            auto & g = _classes[k];
                            switch (kind) {
                                case HostKind::Star: hit = star_match(g, _alive); break;
                                case HostKind::Comet: hit = comet_match(g, _alive); break;
                                case HostKind::K4Star: hit = k4_star_match(g, _alive); break;
                                case HostKind::Rocket:
                                    if (_rocket && _alive == (1u << m) - 1)
                                        hit = rocket_match(g, *_rocket);
                                    break;
                                default: break;
                            }
                            if (hit)
                                return std::pair{k, *hit};
                        }
                    }
                    (void) step;
                    return std::nullopt;
                }

                auto stuck(ReductionStep & step, int m) -> void
                {
                    if (m == 16) {
                        bool all = true;
                        for (std::size_t k = 0; k < _classes.size(); ++k)
                            if (_live[k] && ! is_k6_s10(_classes[k]))
                                all = false;
                        if (all) {
                            gap(step, "every colour is K6 u S10, which the degree parity argument excludes "
                                    "(105 is odd, K6 u S10 degrees are even)");
                            return;
                        }
                        gap(step, std::string("no P-free colour inside S16, Co(16), K4 u S12")
                                + (_rocket ? ", Ro(16)" : " (Ro(16) unconfigured)") + " and no monochromatic P");
                        return;
                    }
                    if (m == 13) {
                        gap(step, "no colour inside S13 and no monochromatic P; the Co(13) / 2K6 u K1 "
                                "decomposition argument should exclude this");
                        return;
                    }
                    if (m == 12) {
                        gap(step, "no colour inside S12 and no monochromatic P; the K6 u K6 argument should exclude this");
                        return;
                    }
                    gap(step, "no colour fits the stage hosts and no monochromatic P");
                }

                auto reduce(ReductionStep & step, int m, const std::pair<int, HostMatch> & hit) -> bool
                {
                    auto [k, match] = hit;
                    step.chosen_color = k;
                    step.host = match.kind;
                    step.removed_vertex = match.centre;
                    step.removed_extra = match.extra;
                    if (static_cast<int>(match.extra.size()) > reduction_extra_allowance(m)) {
                        gap(step, "reduction needs " + std::to_string(match.extra.size()) + " extra edges, allowed "
                                + std::to_string(reduction_extra_allowance(m)));
                        return false;
                    }
                    for (auto & g : _classes)
                        for (auto & e : g.edges())
                            if (e.contains(match.centre))
                                g.remove_edge(e);
                    for (auto & e : match.extra)
                        _classes[k].remove_edge(e);
                    _alive &= ~(1u << match.centre);
                    if (! _classes[k].empty()) {
                        gap(step, "colour " + std::to_string(k) + " not eliminated by the reduction");
                        return false;
                    }
                    _live[k] = false;
                    step.note = "remove centre " + std::to_string(match.centre) + " of " + to_string(match.kind);
                    return true;
                }

                int _n;
                ReductionPolicy _policy;
                const RocketDefinition * _rocket;
                std::uint32_t _alive;
                std::vector<ThreeGraph> _classes;
                std::vector<bool> _live;
                ReductionTrace _trace;
        };
    }

    Coloring::Coloring(int n_, int r_) :
        n(n_),
        r(r_),
        colors(static_cast<std::size_t>(triple_count(n_)), 0)
    {
        validate();
    }

    auto Coloring::color_class(int c) const -> ThreeGraph
    {
        ThreeGraph g(n);
        for (std::size_t i = 0; i < colors.size(); ++i)
            if (colors[i] == c)
                g.add_rank(static_cast<int>(i));
        return g;
    }

    auto Coloring::validate() const -> void
    {
        if (n < 0 || n > max_vertices)
            throw InvalidParameter("colouring needs 0 <= n <= " + std::to_string(max_vertices));
        if (r < 1)
            throw InvalidParameter("colouring needs r >= 1");
        if (static_cast<long>(colors.size()) != triple_count(n))
            throw InvalidParameter("colouring of K_" + std::to_string(n) + " needs " + std::to_string(triple_count(n))
                    + " entries, got " + std::to_string(colors.size()));
        for (auto c : colors)
            if (c < 0 || c >= r)
                throw InvalidParameter("colour " + std::to_string(c) + " outside 0.." + std::to_string(r - 1));
    }

    auto read_col(std::istream & in) -> Coloring
    {
        Coloring c;
        if (! (in >> c.n >> c.r))
            throw ParseError(".col: missing header `n r`");
        if (c.n < 0 || c.n > max_vertices || c.r < 1)
            throw ParseError(".col: header out of range");
        auto count = triple_count(c.n);
        c.colors.resize(count);
        for (long i = 0; i < count; ++i) {
            if (! (in >> c.colors[i]))
                throw ParseError(".col: expected " + std::to_string(count) + " colours, got " + std::to_string(i));
            if (c.colors[i] < 0 || c.colors[i] >= c.r)
                throw ParseError(".col: colour " + std::to_string(c.colors[i]) + " out of range at position "
                        + std::to_string(i));
        }
        std::string extra;
        if (in >> extra)
            throw ParseError(".col: trailing data");
        return c;
    }

    auto read_col(const std::filesystem::path & path) -> Coloring
    {
        std::ifstream in(path);
        if (! in)
            throw ParseError("cannot open " + path.string());
        return read_col(in);
    }

    auto parse_col(const std::string & text) -> Coloring
    {
        std::istringstream in(text);
        return read_col(in);
    }

    auto write_col(std::ostream & out, const Coloring & c) -> void
    {
        out << c.n << ' ' << c.r << '\n';
        for (std::size_t i = 0; i < c.colors.size(); ++i)
            out << (i ? " " : "") << c.colors[i];
        out << '\n';
    }

    auto write_col(const std::filesystem::path & path, const Coloring & c) -> void
    {
        std::ofstream out(path);
        if (! out)
            throw ParseError("cannot write " + path.string());
        write_col(out, c);
    }

    auto random_coloring(int n, int r, std::uint64_t seed) -> Coloring
    {
        Coloring c(n, r);
        std::mt19937_64 rng(seed);
        for (auto & x : c.colors)
            x = static_cast<int>(rng() % static_cast<std::uint64_t>(r));
        return c;
    }

    auto certificate_to_json(const MonoPCertificate & cert) -> std::string
    {
        nlohmann::json j;
        j["color"] = cert.color;
        j["vertices"] = cert.vertices;
        j["edges"] = cert.edges;
        return j.dump();
    }

    auto certificate_from_json(const std::string & text) -> MonoPCertificate
    {
        try {
            auto j = nlohmann::json::parse(text);
            MonoPCertificate cert;
            cert.color = j.at("color").get<int>();
            auto v = j.at("vertices").get<std::vector<int>>();
            auto e = j.at("edges").get<std::vector<int>>();
            if (v.size() != 7 || e.size() != 3)
                throw ParseError("certificate needs 7 vertices and 3 edges");
            std::copy(v.begin(), v.end(), cert.vertices.begin());
            std::copy(e.begin(), e.end(), cert.edges.begin());
            return cert;
        }
        catch (const nlohmann::json::exception & e) {
            throw ParseError(std::string("certificate: ") + e.what());
        }
    }

    auto find_mono_P(const Coloring & c) -> std::optional<MonoPCertificate>
    {
        c.validate();
        for (int k = 0; k < c.r; ++k)
            if (auto p = find_loose_path(c.color_class(k)))
                return certificate_from_path(k, *p);
        return std::nullopt;
    }

    auto verify_certificate(const Coloring & c, const MonoPCertificate & cert) -> bool
    {
        if (cert.color < 0 || cert.color >= c.r)
            return false;
        std::uint32_t seen = 0;
        for (auto v : cert.vertices) {
            if (v < 0 || v >= c.n || (seen >> v) & 1u)
                return false;
            seen |= 1u << v;
        }
        auto & v = cert.vertices;
        std::array<Triple, 3> want{make_triple(v[0], v[1], v[2]), make_triple(v[2], v[3], v[4]),
            make_triple(v[4], v[5], v[6])};
        for (int i = 0; i < 3; ++i) {
            int r = cert.edges[i];
            if (r < 0 || r >= triple_count(c.n) || r != want[i].rank() || c.colors[r] != cert.color)
                return false;
        }
        return true;
    }

    auto to_string(HostKind k) -> std::string
    {
        switch (k) {
            case HostKind::None: return "none";
            case HostKind::Star: return "star";
            case HostKind::Comet: return "comet";
            case HostKind::K4Star: return "K4 u S";
            case HostKind::K6Star: return "K6 u S";
            case HostKind::Rocket: return "rocket";
            case HostKind::Other: return "other";
        }
        return "?";
    }

    auto reduction_schedule(int vertices) -> long
    {
        static const std::array<long, 9> table{50, 78, 114, 159, 214, 280, 359, 451, 560};
        if (vertices < 8 || vertices > 16)
            throw InvalidParameter("reduction schedule covers 8..16 vertices");
        return table[vertices - 8];
    }

    auto reduction_extra_allowance(int vertices) -> int
    {
        if (vertices == 16)
            return 4;
        if (vertices == 15 || vertices == 14)
            return 1;
        return 0;
    }

    auto k6_s10_degrees() -> std::vector<int>
    {
        auto g = disjoint_union(ThreeGraph::complete(6), build(ConstructionName::star(10)));
        return g.degrees();
    }

    auto reduction_trace(const Coloring & c, ReductionPolicy policy, const RocketDefinition * rocket) -> ReductionTrace
    {
        c.validate();
        if (c.n < 8 || c.n > 16 || c.r != c.n - 6)
            throw InvalidParameter("reduction trace needs 8 <= n <= 16 and r = n - 6");
        return Reducer(c, policy, rocket).run();
    }

    auto format_trace(const ReductionTrace & t) -> std::string
    {
        std::ostringstream out;
        out << "vertices\tcolors\ttotal\trequired\tchosen\thost\tremoved\textra\tnote\n";
        for (auto & s : t.steps) {
            out << s.vertices << '\t' << s.colors << '\t' << s.total_edges << '\t' << s.required << '\t'
                << (s.chosen_color ? std::to_string(*s.chosen_color) : "-") << '\t' << to_string(s.host) << '\t'
                << (s.removed_vertex ? std::to_string(*s.removed_vertex) : "-") << '\t' << s.removed_extra.size() << '\t'
                << s.note << '\n';
        }
        if (t.certificate)
            out << "# certificate " << certificate_to_json(*t.certificate) << '\n';
        for (auto & g : t.logged_gaps)
            out << "# logged gap: " << g << '\n';
        for (auto & g : t.proof_gaps)
            out << "# PROOF GAP: " << g << '\n';
        return out.str();
    }

    auto trace_to_json(const ReductionTrace & t) -> std::string
    {
        nlohmann::json j;
        j["steps"] = nlohmann::json::array();
        for (auto & s : t.steps) {
            nlohmann::json js;
            js["vertices"] = s.vertices;
            js["colors"] = s.colors;
            js["color_edges"] = s.color_edges;
            js["total_edges"] = s.total_edges;
            js["required"] = s.required;
            js["chosen_color"] = s.chosen_color ? nlohmann::json(*s.chosen_color) : nlohmann::json();
            js["host"] = to_string(s.host);
            js["removed_vertex"] = s.removed_vertex ? nlohmann::json(*s.removed_vertex) : nlohmann::json();
            auto extra = nlohmann::json::array();
            for (auto & e : s.removed_extra)
                extra.push_back({e.a, e.b, e.c});
            js["removed_extra"] = extra;
            js["note"] = s.note;
            j["steps"].push_back(js);
        }
        j["certificate"] = t.certificate ? nlohmann::json::parse(certificate_to_json(*t.certificate)) : nlohmann::json();
        j["proof_gaps"] = t.proof_gaps;
        j["logged_gaps"] = t.logged_gaps;
        return j.dump(2);
    }

    auto TrialsReport::certificates() const -> int
    {
        return static_cast<int>(std::count_if(trials.begin(), trials.end(), [] (auto & t) { return t.certificate; }));
    }

    auto TrialsReport::verified() const -> int
    {
        return static_cast<int>(std::count_if(trials.begin(), trials.end(), [] (auto & t) { return t.verified; }));
    }

    auto TrialsReport::gaps() const -> int
    {
        int g = 0;
        for (auto & t : trials)
            g += t.proof_gaps;
        return g;
    }

    auto TrialsReport::ok() const -> bool
    {
        return verified() == static_cast<int>(trials.size()) && gaps() == 0;
    }

    auto trial_seed(std::uint64_t seed, int index) -> std::uint64_t
    {
        return splitmix(seed ^ splitmix(static_cast<std::uint64_t>(index)));
    }

    auto run_trials(int n, int r, int count, std::uint64_t seed, ReductionPolicy policy) -> TrialsReport
    {
        if (count < 0)
            throw InvalidParameter("trial count must be non-negative");
        TrialsReport rep{n, r, seed, {}, {}};
        bool traced = n >= 8 && n <= 16 && r == n - 6;
        for (int i = 0; i < count; ++i) {
            TrialSummary s;
            s.index = i;
            s.seed = trial_seed(seed, i);
            auto c = random_coloring(n, r, s.seed);
            auto cert = find_mono_P(c);
            s.certificate = cert.has_value();
            s.verified = cert && verify_certificate(c, *cert);
            if (traced) {
                auto t = reduction_trace(c, policy);
                s.trace_steps = static_cast<int>(t.steps.size());
                s.proof_gaps = static_cast<int>(t.proof_gaps.size());
                if (t.certificate && ! verify_certificate(c, *t.certificate))
                    ++s.proof_gaps;
                for (auto & g : t.proof_gaps)
                    rep.gap_messages.push_back("trial " + std::to_string(i) + ": " + g);
            }
            rep.trials.push_back(s);
        }
        return rep;
    }

    auto format_trials(const TrialsReport & report) -> std::string
    {
        std::ostringstream out;
        out << "trial\tseed\tcertificate\tverified\ttrace_steps\tproof_gaps\n";
        for (auto & t : report.trials)
            out << t.index << '\t' << t.seed << '\t' << (t.certificate ? "yes" : "no") << '\t'
                << (t.verified ? "yes" : "no") << '\t' << t.trace_steps << '\t' << t.proof_gaps << '\n';
        out << "# n=" << report.n << " r=" << report.r << " seed=" << report.seed << " trials=" << report.trials.size()
            << " certificates=" << report.certificates() << " verified=" << report.verified()
            << " proof_gaps=" << report.gaps() << '\n';
        for (auto & g : report.gap_messages)
            out << "# PROOF GAP: " << g << '\n';
        return out.str();
    }

    auto search_lower_bound(int n, int r, SearchBudget budget) -> LowerBoundResult
    {
        if (n < 0 || n > max_vertices || r < 1)
            throw InvalidParameter("search_lower_bound needs 0 <= n <= 20 and r >= 1");
        auto start = Clock::now();
        LowerBoundResult res;
        int total = triple_count(n);
        std::vector<ThreeGraph> classes(r, ThreeGraph(n));
        std::vector<int> assign(total, 0);
        struct OutOfBudget {};

        auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };
        std::function<bool(int, int)> go = [&] (int rank, int used) -> bool {
            ++res.nodes;
            if (budget.max_nodes > 0 && res.nodes > budget.max_nodes)
                throw OutOfBudget{};
            if (budget.max_seconds > 0 && (res.nodes & 1023) == 0 && elapsed() > budget.max_seconds)
                throw OutOfBudget{};
            if (rank == total)
                return true;
            auto t = unrank_fast(rank);
            int limit = std::min(used + 1, r);
            for (int c = 0; c < limit; ++c) {
                classes[c].add_rank(rank);
                if (! contains_through(classes[c], loose_path(), t)) {
                    assign[rank] = c;
                    if (go(rank + 1, std::max(used, c + 1)))
                        return true;
                }
                classes[c].remove_rank(rank);
            }
            return false;
        };

        try {
            if (go(0, 0)) {
                Coloring c;
                c.n = n;
                c.r = r;
                c.colors = assign;
                if (find_mono_P(c))
                    throw std::logic_error("lower-bound witness failed re-verification");
                res.status = LowerBoundStatus::Found;
                res.coloring = c;
            }
            else {
                res.status = LowerBoundStatus::Exhausted;
            }
        }
        catch (const OutOfBudget &) {
            res.status = LowerBoundStatus::Incomplete;
        }
        res.seconds = elapsed();
        return res;
    }
}
