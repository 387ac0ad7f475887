// Command-line front end: enumeration, weight vectors and polytopes,
// verification checks and K-energy evaluation.

#include "hurwitz/enumeration.hpp"
#include "hurwitz/error.hpp"
#include "hurwitz/fixtures.hpp"
#include "hurwitz/gkz.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/kstability.hpp"
#include "hurwitz/prism.hpp"
#include "hurwitz/weight_polytopes.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

using namespace hurwitz;

namespace {

struct GlobalOptions {
    std::size_t jobs = 1;
    std::string checkpoint;
    std::size_t budget = 2'000'000;
    std::string out;
    std::uint64_t seed = 1;
    std::size_t stop_after = 0;

    EnumerationOptions enumeration() const
    {
        if (jobs < 1)
            throw Error(ErrorCode::InvalidArgument, "--jobs must be at least 1");
        if (budget < 1)
            throw Error(ErrorCode::InvalidArgument, "--budget must be at least 1");
        EnumerationOptions o;
        o.jobs = jobs;
        o.budget = budget;
        o.checkpoint = checkpoint;
        o.stop_after = stop_after;
        return o;
    }
};

void emit(const GlobalOptions& g, const Json& report)
{
    const std::string text = dump(report);
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(g.out, std::ios::trunc);
    if (!f)
        throw Error(ErrorCode::InvalidArgument, "cannot write " + g.out);
    f << text;
}

Json enumerate_command(const GlobalOptions& g, const std::string& source, bool prism, bool count_only)
{
    const auto config = load_config(source);
    EnumerationResult r;
    if (prism) {
        const TriangulationContext ctx(prism_configuration(config));
        r = enumerate_regular(ctx, g.enumeration());
    } else {
        r = enumerate_regular(config, g.enumeration());
    }
    Json out;
    out["count"] = r.triangulations.size();
    if (!r.complete)
        out["complete"] = false;
    if (count_only)
        return out;
    out["config"] = config.name();
    out["prism"] = prism;
    out["complete"] = r.complete;
    Json list = Json::array();
    for (const auto& t : r.triangulations)
        list.push_back(t.encode());
    out["triangulations"] = std::move(list);
    return out;
}

Json vectors_command(const GlobalOptions& g, const std::string& kind, const std::string& source, bool all)
{
    const auto config = load_config(source);
    const auto r = enumerate_regular(config, g.enumeration());
    const WeightCalculator w(config);
    Json rows = Json::array();
    std::set<IntVector> distinct;
    for (const auto& t : r.triangulations) {
        WeightVector v;
        if (kind == "gkz")
            v = w.gkz(t);
        else if (kind == "massive")
            v = w.massive_gkz(t);
        else
            v = w.hurwitz(t);
        distinct.insert(v.values);
        if (all)
            rows.push_back({{"triangulation", t.encode()}, {"vector", to_json(v.values)}});
    }
    Json out;
    out["config"] = config.name();
    out["kind"] = kind;
    out["triangulations"] = r.triangulations.size();
    out["vectors"] = to_json(std::vector<IntVector>(distinct.begin(), distinct.end()));
    if (all)
        out["by_triangulation"] = std::move(rows);
    return out;
}

Json polytope_json(const WeightPolytope& p)
{
    Json out;
    out["kind"] = std::string(to_string(p.kind));
    out["dimension"] = p.polytope.dim();
    out["triangulations"] = p.triangulations;
    out["generators"] = p.generators.size();
    out["facets"] = p.polytope.facets().size();
    out["vertices"] = to_json(p.vertices);
    Json witnesses = Json::array();
    for (const auto& v : p.vertices) {
        const auto& encs = p.sources.at(v);
        witnesses.push_back({{"vertex", to_json(v)}, {"triangulations", encs.size()}, {"first", encs.front()}});
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

Json polytope_command(const GlobalOptions& g, const std::string& kind, const std::string& source)
{
    const auto config = load_config(source);
    WeightPolytope p;
    if (kind == "secondary")
        p = secondary_polytope(config, g.enumeration());
    else if (kind == "hurwitz")
        p = hurwitz_candidate_polytope(config, g.enumeration());
    else
        p = prism_hurwitz_polytope(config, g.enumeration());
    Json out = polytope_json(p);
    out["config"] = config.name();
    return out;
}

Json conjecture_json(const ConjectureReport& r)
{
    return {{"config", r.name},
            {"triangulations", r.triangulations},
            {"prism_triangulations", r.prism_triangulations},
            {"hurwitz_vertices", r.hurwitz_vertices},
            {"normally_equivalent", r.normally_equivalent},
            {"vertices_match", r.vertices_match},
            {"xi_in_nu_hull", r.xi_in_nu_hull}};
}

Json check_command(const GlobalOptions& g, const std::string& what, const std::string& source)
{
    const auto config = load_config(source);
    if (what == "conjecture")
        return conjecture_json(check_conjecture(config, g.enumeration()));
    if (what == "degree") {
        const auto q = convex_hull(config.points());
        const auto xi = hurwitz_candidate_polytope(config, g.enumeration());
        const auto chow = secondary_polytope(config, g.enumeration());
        const Int n = static_cast<Int>(config.dim());
        const Int from_polytope = degree_from_polytope(xi, n);
        const Int formula = hurwitz_degree_formula(q);
        const Int chow_degree = degree_from_polytope(chow, n + 1);
        const Int vol = lattice_volume(q);
        return {{"config", config.name()},
                {"volume", vol},
                {"boundary_volume", boundary_lattice_volume(q)},
                {"hurwitz_degree", from_polytope},
                {"hurwitz_degree_formula", formula},
                {"chow_degree", chow_degree},
                {"consistent", from_polytope == formula && chow_degree == vol}};
    }
    if (what == "normal-equiv") {
        const auto xi = hurwitz_candidate_polytope(config, g.enumeration());
        const auto chow = secondary_polytope(config, g.enumeration());
        const auto c = vertex_edge_correspondence(xi.polytope, chow.polytope);
        return {{"config", config.name()},
                {"normally_equivalent", normally_equivalent(xi.polytope, chow.polytope)},
                {"hurwitz_vertices", c.vertices_a},
                {"chow_vertices", c.vertices_b},
                {"hurwitz_edges", c.edges_a},
                {"chow_edges", c.edges_b},
                {"matched_vertices", c.matched_vertices},
                {"parallel_edges", c.parallel_edges},
                {"edge_correspondence", c.bijective()}};
    }
    const auto s = k_semistable(config, g.enumeration());
    return {{"config", config.name()},
            {"chow_degree", s.chow_degree},
            {"hurwitz_degree", s.hurwitz_degree},
            {"k_semistable", s.semistable}};
}

Json kenergy_command(const GlobalOptions& g, const std::string& source, const std::string& function_file,
                     const std::string& method, std::size_t random)
{
    const auto config = load_config(source);
    auto evaluate = [&](const PLFunction& f) {
        Json row;
        const auto induced = induced_triangulation(f, config);
        row["dilation"] = induced.dilation;
        row["triangulation"] = induced.triangulation.encode();
        std::optional<Rational> integral;
        std::optional<Rational> pairing;
        if (method != "pairing") {
            integral = k_energy_integral(f, config);
            row["integral"] = to_json(*integral);
        }
        if (method != "integral") {
            pairing = k_energy_pairing(f, config);
            row["pairing"] = to_json(*pairing);
        }
        if (integral && pairing)
            row["agree"] = *integral == *pairing;
        return row;
    };
    Json out;
    out["config"] = config.name();
    out["method"] = method;
    if (!function_file.empty()) {
        out["result"] = evaluate(parse_pl_function(read_file(function_file), config));
        return out;
    }
    std::mt19937_64 rng(g.seed);
    Json rows = Json::array();
    bool all_agree = true;
    for (std::size_t i = 0; i < random; ++i) {
        const auto heights = random_convex_heights(config, rng);
        Json row = evaluate(PLFunction::from_heights(heights));
        Json h = Json::array();
        for (const auto& x : heights)
            h.push_back(to_json(x));
        row["heights"] = std::move(h);
        all_agree = all_agree && row.value("agree", true);
        rows.push_back(std::move(row));
    }
    out["seed"] = g.seed;
    out["results"] = std::move(rows);
    out["all_agree"] = all_agree;
    return out;
}

Json table_command(const GlobalOptions& g, bool extended)
{
    if (!g.checkpoint.empty())
        throw Error(ErrorCode::InvalidArgument, "--checkpoint applies to single enumerations only");
    Json rows = Json::array();
    for (const auto* f : reflexive_fixtures()) {
        const auto& expected = *f->reflexive;
        Json row;
        row["label"] = f->name;
        row["published"] = {{"triangulations", expected.triangulations},
                            {"prism_triangulations", expected.prism_triangulations},
                            {"hurwitz_vertices", expected.hurwitz_vertices},
                            {"normally_equivalent", expected.normally_equivalent}};
        if (expected.extended && !extended) {
            row["status"] = "skipped";
            rows.push_back(std::move(row));
            continue;
        }
        const auto r = check_conjecture(f->config(), g.enumeration());
        row["computed"] = conjecture_json(r);
        row["computed"].erase("config");
        const bool match = r.triangulations == expected.triangulations &&
                           r.prism_triangulations == expected.prism_triangulations &&
                           r.hurwitz_vertices == expected.hurwitz_vertices &&
                           r.normally_equivalent == expected.normally_equivalent;
        row["status"] = match ? "match" : "mismatch";
        rows.push_back(std::move(row));
    }
    return {{"table", "reflexive"}, {"rows", std::move(rows)}};
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Weight vectors and weight polytopes of regular triangulations"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOptions g;
    app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--checkpoint", g.checkpoint, "checkpoint file, resumed when present");
    app.add_option("--budget", g.budget, "maximum number of regular triangulations")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "write the report here instead of stdout");
    app.add_option("--seed", g.seed, "seed for randomized checks");
    app.add_option("--stop-after", g.stop_after)->group("");

    std::string source;
    std::string kind;

    auto* triang = app.add_subcommand("triang", "triangulations");
    triang->require_subcommand(1);
    auto* enumerate = triang->add_subcommand("enumerate", "enumerate all regular triangulations");
    bool prism = false;
    bool count_only = false;
    enumerate->add_option("config", source, "fixture name or configuration file")->required();
    enumerate->add_flag("--prism", prism, "enumerate the prism configuration");
    enumerate->add_flag("--count-only", count_only, "report only the count");

    auto* vectors = app.add_subcommand("vectors", "weight vectors of all regular triangulations");
    bool all = false;
    vectors->add_option("kind", kind)->required()->check(CLI::IsMember({"gkz", "massive", "hurwitz"}));
    vectors->add_option("config", source)->required();
    vectors->add_flag("--all", all, "list the vector of every triangulation");

    auto* polytope = app.add_subcommand("polytope", "weight polytopes");
    polytope->add_option("kind", kind)->required()->check(CLI::IsMember({"secondary", "hurwitz", "prism-hurwitz"}));
    polytope->add_option("config", source)->required();

    auto* check = app.add_subcommand("check", "verification checks");
    check->add_option("what", kind)
        ->required()
        ->check(CLI::IsMember({"conjecture", "degree", "normal-equiv", "k-semistable"}));
    check->add_option("config", source)->required();

    auto* kenergy = app.add_subcommand("kenergy", "toric K-energy of a convex PL function");
    std::string function_file;
    std::string method = "both";
    std::size_t random = 0;
    kenergy->add_option("config", source)->required();
    kenergy->add_option("--function", function_file, "PL function file");
    kenergy->add_option("--method", method)->check(CLI::IsMember({"integral", "pairing", "both"}));
    kenergy->add_option("--random", random, "number of seeded random convex height functions");

    auto* table = app.add_subcommand("table", "reproduce the reflexive polygon table");
    std::string table_name;
    bool extended = false;
    table->add_option("name", table_name)->required()->check(CLI::IsMember({"reflexive"}));
    table->add_flag("--extended", extended, "include the rows with about a million prism triangulations");

    CLI11_PARSE(app, argc, argv);

    try {
        Json report;
        if (*enumerate)
            report = enumerate_command(g, source, prism, count_only);
        else if (*vectors)
            report = vectors_command(g, kind, source, all);
        else if (*polytope)
            report = polytope_command(g, kind, source);
        else if (*check)
            report = check_command(g, kind, source);
        else if (*kenergy) {
            if (function_file.empty() == (random == 0))
                throw Error(ErrorCode::InvalidArgument, "kenergy needs exactly one of --function or --random");
            report = kenergy_command(g, source, function_file, method, random);
        } else
            report = table_command(g, extended);
        emit(g, report);
        return 0;
    } catch (const Error& e) {
        std::cout << dump({{"error", std::string(to_string(e.code()))}, {"message", e.what()}});
        return 2;
    } catch (const std::exception& e) {
        std::cout << dump({{"error", "Internal"}, {"message", e.what()}});
        return 3;
    }
}
