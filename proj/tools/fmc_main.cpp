// fmc: exact search and reporting for face-magic fullerene labelings.
// Subcommands cover graph validation, feasibility filtering, counting,
// enumeration, symmetry reports and principal-component export; every
// artifact-producing run drops a run-manifest.json next to its outputs.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fmc/constants.hpp"
#include "fmc/graph.hpp"
#include "fmc/pca.hpp"
#include "fmc/search.hpp"
#include "fmc/solution_io.hpp"
#include "fmc/symmetry.hpp"

namespace {

using nlohmann::json;

// Exit codes, stable for scripts.
constexpr int kOk = 0;          // success
constexpr int kUsage = 1;       // bad flags or other operational failure
constexpr int kBadInput = 2;    // graph or solution file fails validation
constexpr int kInfeasible = 3;  // requested pair violates the sum relation
constexpr int kBudget = 4;      // node budget hit, partial output written

struct Invocation {
    std::string builtin_name;
    std::string graph_file;
    std::string out;
    std::string format = "json";
    std::string solutions_file;
    int sp = 0;
    int sh = 0;
    bool have_pair = false;
    int workers = 0;  // 0 = machine parallelism
    std::uint64_t node_budget = 10'000'000'000ULL;
    bool sorted = false;
    bool store_solutions = false;
    int components = 2;
};

using Clock = std::chrono::steady_clock;

fmc::FullereneGraph load_graph(const Invocation& inv) {
    if (!inv.graph_file.empty()) {
        std::ifstream in(inv.graph_file, std::ios::binary);
        if (!in) {
            throw fmc::ParseError("cannot open graph file: " + inv.graph_file);
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        return fmc::parse_fullerene(buf.str(), inv.graph_file);
    }
    return fmc::builtin(inv.builtin_name);
}

int resolved_workers(const Invocation& inv) {
    if (inv.workers > 0) {
        return inv.workers;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// Table and report documents go to stdout unless --out redirects them.
void emit(const Invocation& inv, const std::string& doc, std::vector<std::string>& outputs) {
    std::string body = doc;
    if (body.empty() || body.back() != '\n') {
        body += '\n';
    }
    if (inv.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream os(inv.out, std::ios::binary);
    if (!os || !(os << body) || !os.flush()) {
        throw std::runtime_error("cannot write " + inv.out);
    }
    outputs.push_back(inv.out);
}

void write_run_manifest(const Invocation& inv, const std::string& command,
                        const std::string& parameters, Clock::time_point t0,
                        const std::vector<std::string>& outputs, bool partial) {
    if (outputs.empty()) {
        return;  // nothing on disk, nothing to describe
    }
    fmc::RunManifest m;
    m.command = command;
    m.graph_source = inv.graph_file.empty() ? inv.builtin_name : inv.graph_file;
    m.parameters = parameters;
    m.wall_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count());
    m.workers = resolved_workers(inv);
    m.outputs = outputs;
    m.partial = partial;
    fmc::write_manifest(m, std::filesystem::path(outputs.front()).parent_path().string());
}

std::string search_params(const Invocation& inv, bool with_pair) {
    std::ostringstream s;
    if (with_pair) {
        s << "sp=" << inv.sp << " sh=" << inv.sh << " ";
    }
    s << "workers=" << resolved_workers(inv) << " node_budget=" << inv.node_budget;
    return s.str();
}

json relation_json(const fmc::Relation& r) {
    return json{{"pentagon_coeff", r.pentagon_coeff},
                {"hexagon_coeff", r.hexagon_coeff},
                {"rhs", r.rhs}};
}

json feasibility_json(const fmc::FullereneGraph& g, const fmc::FeasibilityReport& rep) {
    json doc;
    doc["graph"] = g.id();
    doc["n"] = rep.n;
    doc["relation"] = relation_json(rep.relation);
    doc["mod8_ok"] = rep.mod8_ok;
    doc["residues"] = json::array();
    for (const fmc::Congruence& c : rep.residues) {
        doc["residues"].push_back({{"modulus", c.modulus}, {"residue", c.residue}});
    }
    doc["hexagon_bounds"] =
        rep.hex_bounds ? json{{"min", rep.hex_bounds->min}, {"max", rep.hex_bounds->max}}
                       : json(nullptr);
    doc["pentagon_bounds"] =
        rep.pent_bounds ? json{{"min", rep.pent_bounds->min}, {"max", rep.pent_bounds->max}}
                        : json(nullptr);
    doc["pairs"] = json::array();
    for (const fmc::MagicPair& p : rep.pairs) {
        doc["pairs"].push_back({{"sp", p.sp}, {"sh", p.sh}});
    }
    if (!rep.note.empty()) {
        doc["note"] = rep.note;
    }
    return doc;
}

// Solutions for orbits and pca either come back out of a prior enumerate run
// (--solutions FILE, every line re-verified) or are searched for right here
// (--store-solutions). Returns kOk or the exit code to fail with.
int gather_solutions(const Invocation& inv, const fmc::FullereneGraph& g, fmc::MagicPair p,
                     const char* command, fmc::SolutionSet& out) {
    if (!inv.solutions_file.empty()) {
        std::ifstream in(inv.solutions_file, std::ios::binary);
        if (!in) {
            throw fmc::ParseError("cannot open solutions file: " + inv.solutions_file);
        }
        std::vector<fmc::Configuration> cs = fmc::read_solution_stream(in);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (cs[i].size() != static_cast<std::size_t>(g.vertex_count()) ||
                !fmc::verify_configuration(g, cs[i], p)) {
                throw fmc::ValidationError("solution line " + std::to_string(i + 1) + " in " +
                                           inv.solutions_file +
                                           " is not a magical configuration for the requested pair");
            }
        }
        out.graph_id = g.id();
        out.pair = p;
        out.count = cs.size();
        out.solutions = std::move(cs);
        return kOk;
    }
    if (!inv.store_solutions) {
        std::cerr << command
                  << " needs the full solution set: pass --store-solutions to search for it"
                     " or --solutions FILE to load a previous enumeration\n";
        return kUsage;
    }
    fmc::EnumerateOptions opt;
    opt.mode = fmc::EnumMode::kCountOnly;
    opt.workers = inv.workers;
    opt.node_budget = inv.node_budget;
    opt.sorted = true;
    opt.store_solutions = true;
    out = fmc::enumerate_configurations(g, p, opt);
    if (out.partial) {
        std::cerr << command << ": node budget " << inv.node_budget
                  << " exhausted before the solution set was complete\n";
        return kBudget;
    }
    return kOk;
}

int cmd_validate(const Invocation& inv) {
    const auto t0 = Clock::now();
    const fmc::FullereneGraph g = load_graph(inv);
    json doc;
    doc["graph"] = g.id();
    doc["n"] = g.vertex_count();
    doc["pentagons"] = g.pentagon_count();
    doc["hexagons"] = g.hexagon_count();
    doc["edges"] = g.edges().size();
    doc["valid"] = true;
    std::vector<std::string> outputs;
    emit(inv, doc.dump(2), outputs);
    write_run_manifest(inv, "validate", "", t0, outputs, false);
    return kOk;
}

int cmd_feasible(const Invocation& inv) {
    const auto t0 = Clock::now();
    const fmc::FullereneGraph g = load_graph(inv);
    const fmc::FeasibilityReport rep = fmc::feasible_pairs(g);
    std::string doc;
    if (inv.format == "csv") {
        std::ostringstream s;
        s << "sp,sh\n";
        for (const fmc::MagicPair& p : rep.pairs) {
            s << p.sp << ',' << p.sh << '\n';
        }
        doc = s.str();
    } else {
        doc = feasibility_json(g, rep).dump(2);
    }
    std::vector<std::string> outputs;
    emit(inv, doc, outputs);
    write_run_manifest(inv, "feasible", "format=" + inv.format, t0, outputs, false);
    return kOk;
}

int cmd_count(const Invocation& inv) {
    const auto t0 = Clock::now();
    const fmc::FullereneGraph g = load_graph(inv);
    fmc::EnumerateOptions opt;
    opt.workers = inv.workers;
    opt.node_budget = inv.node_budget;
    fmc::CountTable table;
    if (inv.have_pair) {
        table.graph_id = g.id();
        table.n = g.vertex_count();
        const fmc::SolutionSet s =
            fmc::enumerate_configurations(g, {inv.sp, inv.sh}, opt);
        table.rows.push_back({s.pair, s.count, s.partial, s.nodes});
    } else {
        table = fmc::count_all(g, opt);
    }
    bool partial = false;
    for (const fmc::CountRow& r : table.rows) {
        partial = partial || r.partial;
    }
    const std::string doc =
        inv.format == "csv" ? fmc::count_table_csv(table) : fmc::count_table_json(table);
    std::vector<std::string> outputs;
    emit(inv, doc, outputs);
    write_run_manifest(inv, "count",
                       search_params(inv, inv.have_pair) + " format=" + inv.format, t0, outputs,
                       partial);
    return partial ? kBudget : kOk;
}

int cmd_enumerate(const Invocation& inv) {
    const auto t0 = Clock::now();
    const fmc::FullereneGraph g = load_graph(inv);
    fmc::EnumerateOptions opt;
    opt.mode = fmc::EnumMode::kStream;
    opt.workers = inv.workers;
    opt.node_budget = inv.node_budget;
    opt.sorted = inv.sorted;

    std::ofstream file;
    std::ostream* os = &std::cout;
    std::vector<std::string> outputs;
    if (!inv.out.empty()) {
        file.open(inv.out, std::ios::binary);
        if (!file) {
            throw std::runtime_error("cannot write " + inv.out);
        }
        os = &file;
        outputs.push_back(inv.out);
    }
    const fmc::SolutionSet s = fmc::enumerate_configurations(
        g, {inv.sp, inv.sh}, opt,
        [&](const fmc::Configuration& c) { *os << fmc::format_solution_line(c) << '\n'; });
    if (file.is_open()) {
        file.flush();
        if (!file) {
            throw std::runtime_error("cannot write " + inv.out);
        }
        file.close();
    }
    json summary{{"graph", g.id()}, {"sp", inv.sp},          {"sh", inv.sh},
                 {"count", s.count}, {"partial", s.partial}, {"nodes", s.nodes}};
    std::cerr << summary.dump() << '\n';
    std::ostringstream params;
    params << search_params(inv, true) << " sorted=" << (inv.sorted ? 1 : 0);
    write_run_manifest(inv, "enumerate", params.str(), t0, outputs, s.partial);
    return s.partial ? kBudget : kOk;
}

int cmd_aut(const Invocation& inv) {
    const auto t0 = Clock::now();
    const fmc::FullereneGraph g = load_graph(inv);
    const fmc::AutomorphismGroup grp = fmc::automorphisms(g);
    json doc;
    doc["graph"] = g.id();
    doc["n"] = g.vertex_count();
    doc["order"] = grp.order();
    doc["generators"] = json::array();
    for (const fmc::VertexPermutation& s : fmc::generators(grp)) {
        doc["generators"].push_back(s);
    }
    std::vector<std::string> outputs;
    emit(inv, doc.dump(2), outputs);
    write_run_manifest(inv, "aut", "", t0, outputs, false);
    return kOk;
}

int cmd_orbits(const Invocation& inv) {
    const auto t0 = Clock::now();
    const fmc::FullereneGraph g = load_graph(inv);
    const fmc::MagicPair p{inv.sp, inv.sh};
    fmc::SolutionSet s;
    if (const int rc = gather_solutions(inv, g, p, "orbits", s); rc != kOk) {
        return rc;
    }
    const fmc::AutomorphismGroup grp = fmc::automorphisms(g);
    const fmc::OrbitReport rep = fmc::orbit_partition(s, grp);
    const bool free_action = fmc::check_free_action(s, grp);
    json doc;
    doc["graph"] = g.id();
    doc["n"] = g.vertex_count();
    doc["sp"] = p.sp;
    doc["sh"] = p.sh;
    doc["solutions"] = s.count;
    doc["aut_order"] = grp.order();
    doc["orbit_count"] = rep.orbit_count;
    doc["orbit_size"] = rep.orbit_size;
    doc["free_action"] = free_action;
    doc["orbit_arithmetic_ok"] = s.count == rep.orbit_count * rep.orbit_size;
    doc["representatives"] = json::array();
    for (const fmc::Configuration& c : rep.representatives) {
        doc["representatives"].push_back(c);
    }
    std::vector<std::string> outputs;
    emit(inv, doc.dump(2), outputs);
    write_run_manifest(inv, "orbits", search_params(inv, true), t0, outputs, false);
    return kOk;
}

int cmd_pca(const Invocation& inv) {
    const auto t0 = Clock::now();
    if (inv.out.empty()) {
        std::cerr << "pca writes a coordinate file: pass --out PATH.csv\n";
        return kUsage;
    }
    const fmc::FullereneGraph g = load_graph(inv);
    const fmc::MagicPair p{inv.sp, inv.sh};
    fmc::SolutionSet s;
    if (const int rc = gather_solutions(inv, g, p, "pca", s); rc != kOk) {
        return rc;
    }
    const fmc::ProjectionResult pr = fmc::pca_run(s, inv.components);
    const auto [csv_path, sidecar_path] = fmc::export_projection(pr, inv.out);
    std::vector<std::string> outputs{csv_path, sidecar_path};
    json summary{{"csv", csv_path}, {"sidecar", sidecar_path}, {"count", s.count}};
    std::cerr << summary.dump() << '\n';
    std::ostringstream params;
    params << search_params(inv, true) << " components=" << inv.components;
    write_run_manifest(inv, "pca", params.str(), t0, outputs, false);
    return kOk;
}

int cmd_report(const Invocation& inv) {
    const auto t0 = Clock::now();
    const fmc::FullereneGraph g = load_graph(inv);
    const fmc::FeasibilityReport rep = fmc::feasible_pairs(g);
    const fmc::AutomorphismGroup grp = fmc::automorphisms(g);
    fmc::EnumerateOptions opt;
    opt.workers = inv.workers;
    opt.node_budget = inv.node_budget;
    const fmc::CountTable table = fmc::count_all(g, opt);

    json doc = feasibility_json(g, rep);
    doc["aut_order"] = grp.order();
    doc["rows"] = json::array();
    bool partial = false;
    for (const fmc::CountRow& r : table.rows) {
        partial = partial || r.partial;
        const fmc::MagicPair c = fmc::complement_pair(g.vertex_count(), r.pair);
        doc["rows"].push_back({{"sp", r.pair.sp},
                               {"sh", r.pair.sh},
                               {"count", r.count},
                               {"partial", r.partial},
                               {"nodes", r.nodes},
                               {"complement", {{"sp", c.sp}, {"sh", c.sh}}},
                               {"divisible_by_aut", !r.partial && r.count % grp.order() == 0}});
    }
    std::vector<std::string> outputs;
    emit(inv, doc.dump(2), outputs);
    write_run_manifest(inv, "report", search_params(inv, false), t0, outputs, partial);
    return partial ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact search and reporting for face-magic fullerene labelings"};
    app.require_subcommand(1);
    Invocation inv;

    auto add_source = [&](CLI::App* c) {
        auto* src = c->add_option_group("source", "graph to operate on");
        src->add_option("--builtin", inv.builtin_name, "embedded graph: c20, c24 or c26")
            ->check(CLI::IsMember({"c20", "c24", "c26"}, CLI::ignore_case));
        src->add_option("--graph", inv.graph_file, "fullerene face-structure file (JSON)");
        src->require_option(1);
    };
    auto add_pair = [&](CLI::App* c, bool required) {
        auto* sp = c->add_option("--sp", inv.sp, "pentagon sum");
        auto* sh = c->add_option("--sh", inv.sh, "hexagon sum");
        sp->needs(sh);
        sh->needs(sp);
        if (required) {
            sp->required();
            sh->required();
        }
        return sp;
    };
    auto add_search = [&](CLI::App* c) {
        c->add_option("--workers", inv.workers, "worker threads (0 = all hardware threads)");
        c->add_option("--node-budget", inv.node_budget, "search nodes allowed per pair");
    };
    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", inv.out, "write output to this file instead of stdout");
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", inv.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };
    auto add_solution_source = [&](CLI::App* c) {
        c->add_flag("--store-solutions", inv.store_solutions,
                    "enumerate and keep the full solution set in memory");
        c->add_option("--solutions", inv.solutions_file,
                      "load the solution set from a previous enumeration instead of searching");
    };

    CLI::App* validate =
        app.add_subcommand("validate", "parse a graph and check every face-structure invariant");
    add_source(validate);
    add_out(validate);

    CLI::App* feasible =
        app.add_subcommand("feasible", "list the constant pairs surviving the arithmetic filters");
    add_source(feasible);
    add_out(feasible);
    add_format(feasible);

    CLI::App* count =
        app.add_subcommand("count", "count magical configurations, whole table or one pair");
    add_source(count);
    CLI::Option* count_sp = add_pair(count, false);
    add_search(count);
    add_out(count);
    add_format(count);

    CLI::App* enumerate =
        app.add_subcommand("enumerate", "emit every magical configuration, one line each");
    add_source(enumerate);
    add_pair(enumerate, true);
    add_search(enumerate);
    add_out(enumerate);
    enumerate->add_flag("--sorted", inv.sorted,
                        "emit in lexicographic order (byte-identical across runs)");

    CLI::App* aut = app.add_subcommand("aut", "automorphism group of the face structure");
    add_source(aut);
    add_out(aut);

    CLI::App* orbits =
        app.add_subcommand("orbits", "partition a solution set into automorphism orbits");
    add_source(orbits);
    add_pair(orbits, true);
    add_search(orbits);
    add_solution_source(orbits);
    add_out(orbits);

    CLI::App* pca = app.add_subcommand(
        "pca", "project a solution set onto its principal components and export coordinates");
    add_source(pca);
    add_pair(pca, true);
    add_search(pca);
    add_solution_source(pca);
    add_out(pca);
    pca->add_option("--components", inv.components, "number of projection axes")
        ->check(CLI::PositiveNumber);

    CLI::App* report = app.add_subcommand(
        "report", "feasibility, counts and divisibility checks in one document");
    add_source(report);
    add_search(report);
    add_out(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }
    inv.have_pair = count_sp->count() > 0;

    try {
        if (validate->parsed()) {
            return cmd_validate(inv);
        }
        if (feasible->parsed()) {
            return cmd_feasible(inv);
        }
        if (count->parsed()) {
            return cmd_count(inv);
        }
        if (enumerate->parsed()) {
            return cmd_enumerate(inv);
        }
        if (aut->parsed()) {
            return cmd_aut(inv);
        }
        if (orbits->parsed()) {
            return cmd_orbits(inv);
        }
        if (pca->parsed()) {
            return cmd_pca(inv);
        }
        if (report->parsed()) {
            return cmd_report(inv);
        }
        std::cerr << "no subcommand\n";
        return kUsage;
    } catch (const fmc::ParseError& e) {
        std::cerr << e.what() << '\n';
        return kBadInput;
    } catch (const fmc::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kBadInput;
    } catch (const fmc::InfeasiblePairError& e) {
        std::cerr << e.what() << '\n';
        return kInfeasible;
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return kUsage;
    }
}
