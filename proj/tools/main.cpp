#include <hypex/audit.hpp>
#include <hypex/canonical.hpp>
#include <hypex/constructions.hpp>
#include <hypex/errors.hpp>
#include <hypex/graph_io.hpp>
#include <hypex/ramsey.hpp>
#include <hypex/reference.hpp>
#include <hypex/turan.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace hypex;

namespace
{
    enum Exit
    {
        ok = 0,
        failure = 1,
        invalid = 2
    };

    std::vector<std::string> g_argv;

    // Every exit-1 path leaves one of these behind.
    auto write_diagnostic(const fs::path & dir, const std::string & kind, const json & details) -> int
    {
        json d;
        d["kind"] = kind;
        d["argv"] = g_argv;
        d["details"] = details;
        fs::create_directories(dir);
        auto path = dir / "diagnostic.json";
        std::ofstream(path) << d.dump(2) << '\n';
        std::cerr << kind << "; diagnostic written to " << path.string() << '\n';
        return failure;
    }

    auto split_patterns(const std::vector<std::string> & raw) -> std::vector<Pattern>
    {
        std::vector<Pattern> out;
        for (auto & item : raw) {
            std::stringstream ss(item);
            std::string tok;
            while (std::getline(ss, tok, ','))
                if (! tok.empty())
                    out.push_back(pattern_by_name(tok));
        }
        return out;
    }

    auto load_rocket(const std::string & path) -> std::optional<RocketDefinition>
    {
        if (path.empty())
            return std::nullopt;
        return load_rocket_template(path);
    }

    auto parse_policy(const std::string & s) -> ReductionPolicy
    {
        if (s == "eager")
            return ReductionPolicy::Eager;
        if (s == "reduce")
            return ReductionPolicy::Reduce;
        throw InvalidParameter("unknown policy " + s);
    }

    auto stats_line(const SearchStats & s) -> std::string
    {
        std::ostringstream o;
        o << "nodes " << s.nodes << ", duplicates " << s.duplicates << ", saturated " << s.saturated_leaves << ", "
          << s.seconds << " s";
        return o.str();
    }

    // ---- zoo ----

    struct ZooBuild
    {
        std::string name;
        std::optional<int> n, t;
        std::string out, rocket;
    };

    auto run_zoo_build(const ZooBuild & a) -> int
    {
        auto rocket = load_rocket(a.rocket);
        auto c = construction_from_cli(a.name, a.n, a.t);
        auto g = build(c, rocket ? &*rocket : nullptr);
        if (! a.out.empty()) {
            if (auto parent = fs::path(a.out).parent_path(); ! parent.empty())
                fs::create_directories(parent);
            write_3g(fs::path(a.out), g);
        }
        std::cout << "name\tn\tedges\n" << c.to_string() << '\t' << g.n() << '\t' << g.size() << '\n';
        return ok;
    }

    struct ZooCheck
    {
        int max_n = 30;
        std::string out = "hypex-out", rocket;
    };

    auto run_zoo_check(const ZooCheck & a) -> int
    {
        auto rocket = load_rocket(a.rocket);
        auto checks = check_formulas(a.max_n, rocket ? &*rocket : nullptr);
        std::cout << format_formula_report(checks);
        json failed = json::array();
        for (auto & c : checks)
            if (! c.pass)
                failed.push_back({{"construction", c.construction}, {"n", c.n}, {"property", c.property},
                        {"expected", c.expected}, {"actual", c.actual}});
        if (! failed.empty())
            return write_diagnostic(a.out, "formula check failed", {{"max_n", a.max_n}, {"failures", failed}});
        return ok;
    }

    // ---- turan ----

    struct Turan
    {
        int n = 7;
        std::vector<std::string> forbid{"P"}, contain;
        int order = 1;
        bool connected = false;
        long budget_nodes = 0;
        double budget_secs = 0;
        std::string emit, out = "hypex-out";
    };

    auto run_turan(const Turan & a) -> int
    {
        auto forbidden = split_patterns(a.forbid);
        auto anchors = split_patterns(a.contain);
        if (a.order < 1)
            throw InvalidParameter("--order must be at least 1");
        auto budget = SearchBudget::from_env(a.budget_nodes, a.budget_secs);
        TuranResult r;
        try {
            r = conditional(a.n, forbidden, anchors, a.connected, a.order, budget);
        }
        catch (const IncompleteSearch & e) {
            json d{{"n", a.n}, {"order", a.order}, {"nodes", e.stats.nodes}};
            if (e.best)
                d["best_lower_bound"] = *e.best;
            std::cout << "incomplete\n";
            return write_diagnostic(a.out, "search budget exhausted", d);
        }
        std::cerr << stats_line(r.stats) << '\n';
        if (! r.value) {
            std::cout << "none\n";
            return ok;
        }
        std::cout << *r.value << '\n';
        for (auto & g : r.extremal) {
            auto h = canonical_hash(g);
            std::cout << h << '\t' << g.size() << '\t' << g.to_string() << '\n';
            if (! a.emit.empty()) {
                fs::create_directories(a.emit);
                write_3g(fs::path(a.emit) / (h + ".3g"), g);
            }
        }
        bool plain = forbidden.size() == 1 && forbidden[0].kind == PatternKind::LoosePath && anchors.empty()
            && ! a.connected;
        if (plain)
            if (auto ref = reference_ex_p(a.order, a.n); ref && *ref != *r.value)
                return write_diagnostic(a.out, "discrepancy with reference table",
                        {{"n", a.n}, {"order", a.order}, {"reference", *ref}, {"computed", *r.value}});
        return ok;
    }

    // ---- ramsey ----

    struct RamseyExtract
    {
        std::string coloring, policy = "eager", rocket, out = "hypex-out";
        bool trace = false;
    };

    auto run_ramsey_extract(const RamseyExtract & a) -> int
    {
        auto c = read_col(fs::path(a.coloring));
        c.validate();
        if (a.trace) {
            if (c.n < 8 || c.n > 16 || c.r != c.n - 6)
                throw InvalidParameter("--trace needs 8 <= n <= 16 and r = n - 6");
            auto rocket = load_rocket(a.rocket);
            auto t = reduction_trace(c, parse_policy(a.policy), rocket ? &*rocket : nullptr);
            std::cout << format_trace(t);
            if (! t.ok())
                return write_diagnostic(a.out, "proof gap", json::parse(trace_to_json(t)));
            std::cout << certificate_to_json(*t.certificate) << '\n';
            return ok;
        }
        auto cert = find_mono_P(c);
        if (! cert)
            return write_diagnostic(a.out, "no monochromatic loose path", {{"n", c.n}, {"r", c.r}});
        std::cout << certificate_to_json(*cert) << '\n';
        return ok;
    }

    struct RamseyTrials
    {
        int n = 16, colors = 10, count = 1000;
        std::uint64_t seed = 42;
        std::string policy = "eager", out = "hypex-out";
    };

    auto run_ramsey_trials(const RamseyTrials & a) -> int
    {
        auto report = run_trials(a.n, a.colors, a.count, a.seed, parse_policy(a.policy));
        std::cout << format_trials(report);
        if (! report.ok()) {
            json bad = json::array();
            for (auto & t : report.trials)
                if (! t.certificate || ! t.verified || t.proof_gaps)
                    bad.push_back({{"index", t.index}, {"seed", t.seed}, {"certificate", t.certificate},
                            {"verified", t.verified}, {"proof_gaps", t.proof_gaps}});
            return write_diagnostic(a.out, "trial failure",
                    {{"n", a.n}, {"colors", a.colors}, {"seed", a.seed}, {"failed", bad}, {"gaps", report.gap_messages}});
        }
        return ok;
    }

    struct RamseySearch
    {
        int n = 7, colors = 2;
        long budget_nodes = 0;
        double budget_secs = 0;
        std::string out;
    };

    auto run_ramsey_search(const RamseySearch & a) -> int
    {
        auto budget = SearchBudget::from_env(a.budget_nodes, a.budget_secs);
        auto r = search_lower_bound(a.n, a.colors, budget);
        auto dir = fs::path(a.out).parent_path();
        if (dir.empty())
            dir = ".";
        std::cerr << "nodes " << r.nodes << ", " << r.seconds << " s\n";
        switch (r.status) {
            case LowerBoundStatus::Found:
                fs::create_directories(dir);
                write_col(fs::path(a.out), *r.coloring);
                std::cout << "found\t" << a.n << '\t' << a.colors << '\n';
                return ok;
            case LowerBoundStatus::Exhausted:
                std::cout << "exhausted\t" << a.n << '\t' << a.colors << '\n';
                return write_diagnostic(dir, "no P-free colouring exists", {{"n", a.n}, {"colors", a.colors}, {"nodes", r.nodes}});
            case LowerBoundStatus::Incomplete:
                break;
        }
        std::cout << "incomplete\t" << a.n << '\t' << a.colors << '\n';
        return write_diagnostic(dir, "search budget exhausted", {{"n", a.n}, {"colors", a.colors}, {"nodes", r.nodes}});
    }

    struct RamseyVerify
    {
        std::string coloring, certificate, out = "hypex-out";
    };

    auto run_ramsey_verify(const RamseyVerify & a) -> int
    {
        auto c = read_col(fs::path(a.coloring));
        c.validate();
        std::ifstream in(a.certificate);
        if (! in)
            throw ParseError("cannot open " + a.certificate);
        std::stringstream ss;
        ss << in.rdbuf();
        auto cert = certificate_from_json(ss.str());
        if (! verify_certificate(c, cert)) {
            std::cout << "invalid\n";
            return write_diagnostic(a.out, "certificate rejected",
                    {{"coloring", a.coloring}, {"certificate", json::parse(certificate_to_json(cert))}});
        }
        std::cout << "valid\n";
        return ok;
    }

    // ---- audit ----

    struct AuditDecompose
    {
        std::string graph, out;
        bool all_q = false;
    };

    auto run_audit_decompose(const AuditDecompose & a) -> int
    {
        auto g = read_3g(fs::path(a.graph));
        std::vector<Decomposition> ds;
        if (a.all_q)
            ds = decompose_all(g);
        else
            ds.push_back(decompose(g));
        json all = json::array();
        bool pass = true;
        for (auto & d : ds) {
            auto r = audit_inequalities(d);
            std::cout << format_decomposition(d) << format_audit(r);
            all.push_back(json::parse(audit_to_json(d, r)));
            pass = pass && r.pass();
        }
        if (! a.out.empty()) {
            fs::create_directories(a.out);
            std::ofstream(fs::path(a.out) / "audit.json") << all.dump(2) << '\n';
        }
        if (! pass)
            return write_diagnostic(a.out.empty() ? "hypex-out" : a.out, "inequality failure", {{"graph", a.graph}, {"audits", all}});
        return ok;
    }

    struct AuditSweep
    {
        int n = 12, trials = 1000;
        std::uint64_t seed = 7;
        std::string out = "hypex-out";
    };

    auto run_audit_sweep(const AuditSweep & a) -> int
    {
        auto r = random_sweep(a.n, a.trials, a.seed);
        std::cout << format_sweep(r);
        if (! r.pass())
            return write_diagnostic(a.out, "inequality failure",
                    {{"n", a.n}, {"trials", a.trials}, {"seed", a.seed}, {"failures", r.failure_details}});
        return ok;
    }

    // ---- tables ----

    struct Tables
    {
        int max_n = 20;
        int compute = 0;
        long budget_nodes = 0;
        double budget_secs = 0;
        std::string out = "hypex-out";
    };

    auto join(const std::vector<std::string> & v) -> std::string
    {
        std::string s;
        for (auto & x : v)
            s += (s.empty() ? "" : ", ") + x;
        return "{" + s + "}";
    }

    auto run_tables(const Tables & a) -> int
    {
        if (a.max_n < 7)
            throw InvalidParameter("--max-n must be at least 7");
        std::vector<TuranLadder> computed;
        auto budget = SearchBudget::from_env(a.budget_nodes, a.budget_secs);
        for (int n = 7; n <= std::min(a.compute, a.max_n); ++n)
            computed.push_back(ladder(n, {loose_path()}, 5, {}, false, budget));
        auto report = check_reference_tables(a.max_n, computed);

        std::cout << "n\torder\treference\tfamily\tcomputed\tstatus\n";
        json diffs = json::array();
        for (int n = 7; n <= a.max_n; ++n)
            for (int order = 1; order <= 5; ++order) {
                auto ref = reference_lookup("ex" + std::to_string(order), order, n);
                std::string value = ref ? std::to_string(ref->value) : "-";
                std::string family = ref ? join(ref->family) : "-";
                if (ref)
                    for (auto & f : ref->family)
                        family.replace(family.find(f), f.size(), instantiate_family_member(f, n));
                std::string computed_v = "-", status = "ref";
                for (auto & l : computed)
                    if (l.n == n) {
                        status = "incomplete";
                        for (auto & c : report.rows)
                            if (c.n == n && c.order == order) {
                                computed_v = c.computed ? std::to_string(*c.computed) : "none";
                                status = c.value_match && c.family_match ? "match"
                                    : c.value_match                      ? "family-diff"
                                                                         : "value-diff";
                                if (status != "match")
                                    diffs.push_back({{"n", n}, {"order", order}, {"status", status},
                                            {"reference", value}, {"computed", computed_v}, {"note", c.note}});
                            }
                    }
                std::cout << n << '\t' << order << '\t' << value << '\t' << family << '\t' << computed_v << '\t' << status
                          << '\n';
            }
        for (auto & f : report.consistency_failures)
            std::cout << "# " << f << '\n';
        if (! report.ok() || ! diffs.empty())
            return write_diagnostic(a.out, "reference table discrepancy",
                    {{"rows", diffs}, {"consistency", report.consistency_failures}});
        return ok;
    }
}

auto main(int argc, char ** argv) -> int
{
    g_argv.assign(argv, argv + argc);
    CLI::App app{"Turán numbers, Ramsey certificates and structural audits for 3-uniform loose paths"};
    app.require_subcommand(1);

    auto * zoo = app.add_subcommand("zoo", "named constructions");
    zoo->require_subcommand(1);
    ZooBuild zb;
    auto * zoo_build = zoo->add_subcommand("build", "write a construction as .3g");
    zoo_build->add_option("--name", zb.name, "star, comet, rocket, g1, g2, g3, k5plus, complete, empty or a compact name")
        ->required();
    zoo_build->add_option("--n", zb.n);
    zoo_build->add_option("--t", zb.t);
    zoo_build->add_option("--out", zb.out, "output .3g file");
    zoo_build->add_option("--rocket", zb.rocket, "rocket template .3g");
    ZooCheck zc;
    auto * zoo_check = zoo->add_subcommand("check", "closed-form edge counts and freeness");
    zoo_check->add_option("--max-n", zc.max_n);
    zoo_check->add_option("--out", zc.out);
    zoo_check->add_option("--rocket", zc.rocket);

    Turan tu;
    auto * turan = app.add_subcommand("turan", "order-s Turán number");
    turan->add_option("--n", tu.n)->required();
    turan->add_option("--forbid", tu.forbid, "P, C, M, P2, P2+K3; repeat or comma-separate");
    turan->add_option("--order", tu.order);
    turan->add_option("--contain", tu.contain, "anchor patterns");
    turan->add_flag("--connected", tu.connected);
    turan->add_option("--budget-nodes", tu.budget_nodes);
    turan->add_option("--budget-secs", tu.budget_secs);
    turan->add_option("--emit-extremal", tu.emit, "directory for extremal .3g files");
    turan->add_option("--out", tu.out);

    auto * ramsey = app.add_subcommand("ramsey", "monochromatic loose paths");
    ramsey->require_subcommand(1);
    RamseyExtract re;
    auto * extract = ramsey->add_subcommand("extract", "find a monochromatic P");
    extract->add_option("--coloring", re.coloring)->required();
    extract->add_flag("--trace", re.trace);
    extract->add_option("--policy", re.policy, "eager or reduce");
    extract->add_option("--rocket", re.rocket);
    extract->add_option("--out", re.out);
    RamseyTrials rt;
    auto * trials = ramsey->add_subcommand("trials", "seeded random colourings");
    trials->add_option("--n", rt.n);
    trials->add_option("--colors", rt.colors);
    trials->add_option("--count", rt.count);
    trials->add_option("--seed", rt.seed);
    trials->add_option("--policy", rt.policy);
    trials->add_option("--out", rt.out);
    RamseySearch rs;
    auto * search = ramsey->add_subcommand("search-lower", "P-free colouring search");
    search->add_option("--n", rs.n)->required();
    search->add_option("--colors", rs.colors)->required();
    search->add_option("--budget-nodes", rs.budget_nodes);
    search->add_option("--budget-secs", rs.budget_secs);
    search->add_option("--out", rs.out, "output .col file")->required();
    RamseyVerify rv;
    auto * verify = ramsey->add_subcommand("verify", "check a certificate");
    verify->add_option("--coloring", rv.coloring)->required();
    verify->add_option("--certificate", rv.certificate)->required();
    verify->add_option("--out", rv.out);

    auto * audit = app.add_subcommand("audit", "decomposition inequalities");
    audit->require_subcommand(1);
    AuditDecompose ad;
    auto * decomp = audit->add_subcommand("decompose", "decompose and audit one graph");
    decomp->add_option("--graph", ad.graph)->required();
    decomp->add_flag("--all-q", ad.all_q);
    decomp->add_option("--out", ad.out);
    AuditSweep as;
    auto * sweep = audit->add_subcommand("sweep", "audit random maximal {P,C}-free graphs");
    sweep->add_option("--n", as.n);
    sweep->add_option("--trials", as.trials);
    sweep->add_option("--seed", as.seed);
    sweep->add_option("--out", as.out);

    Tables tb;
    auto * tables = app.add_subcommand("tables", "P-ladder reference tables");
    tables->add_option("--max-n", tb.max_n);
    tables->add_option("--compute", tb.compute, "also run the engine for 7 <= n <= this");
    tables->add_option("--budget-nodes", tb.budget_nodes);
    tables->add_option("--budget-secs", tb.budget_secs);
    tables->add_option("--out", tb.out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return invalid;
    }

    try {
        if (zoo_build->parsed())
            return run_zoo_build(zb);
        if (zoo_check->parsed())
            return run_zoo_check(zc);
        if (turan->parsed())
            return run_turan(tu);
        if (extract->parsed())
            return run_ramsey_extract(re);
        if (trials->parsed())
            return run_ramsey_trials(rt);
        if (search->parsed())
            return run_ramsey_search(rs);
        if (verify->parsed())
            return run_ramsey_verify(rv);
        if (decomp->parsed())
            return run_audit_decompose(ad);
        if (sweep->parsed())
            return run_audit_sweep(as);
        if (tables->parsed())
            return run_tables(tb);
    }
    catch (const NotDecomposable & e) {
        std::cerr << "not decomposable: " << e.predicate << '\n';
        return invalid;
    }
    catch (const ConstructionUndefined & e) {
        std::cerr << "unconfigured capability: " << e.what() << '\n';
        return invalid;
    }
    catch (const CapabilityError & e) {
        std::cerr << "unsupported: " << e.what() << '\n';
        return invalid;
    }
    catch (const std::invalid_argument & e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return invalid;
    }
    catch (const ParseError & e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return invalid;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return invalid;
    }
    return invalid;
}
