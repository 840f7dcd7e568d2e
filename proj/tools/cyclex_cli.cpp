// Command-line front end: constructs the named graph families, verifies
// graph-class and Hamiltonicity properties of edge-list files, runs
// S-extendability checks, and drives randomized conjecture searches.
// Machine-readable JSON on stdout, diagnostics on stderr.
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage/input error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cyclex/constructions.hpp"
#include "cyclex/extendability.hpp"
#include "cyclex/generators.hpp"
#include "cyclex/hamiltonicity.hpp"
#include "cyclex/io.hpp"
#include "cyclex/prng.hpp"
#include "cyclex/recognition.hpp"

using json = nlohmann::ordered_json;
using namespace cyclex;

namespace {

constexpr const char* kToolName = "cyclex";
constexpr const char* kToolVersion = "0.1.0";
constexpr const char* kCapEnvVar = "CYCLE_EXT_SUBSET_CAP";

int table_cap() {
    const char* raw = std::getenv(kCapEnvVar);
    if (!raw) return kDefaultSubsetCap;
    try {
        const int cap = std::stoi(raw);
        if (cap < 3 || cap > 26) throw std::out_of_range("cap");
        return cap;
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(kCapEnvVar) +
                                    " must be an integer in [3, 26], got '" + raw + "'");
    }
}

std::vector<int> parse_size_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad size list element '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("size list is empty");
    return out;
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

json graph_info(const Graph& g) {
    return json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

struct LoadedGraph {
    Graph graph;
    json input_info;
};

LoadedGraph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io::ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string bytes = buffer.str();
    std::istringstream stream(bytes);
    Graph g = io::read_edge_list(stream);
    char hex[32];
    std::snprintf(hex, sizeof hex, "0x%016llx",
                  static_cast<unsigned long long>(io::fnv1a64(bytes)));
    json info = graph_info(g);
    info["path"] = path;
    info["fnv1a64"] = hex;
    return LoadedGraph{std::move(g), std::move(info)};
}

json report_skeleton(json input) {
    return json{{"schema", 1},
                {"tool", kToolName},
                {"version", kToolVersion},
                {"input", std::move(input)},
                {"checks", json::array()},
                {"pass", true}};
}

void add_check(json& report, const std::string& name, bool pass, double runtime_ms,
               json extra = json::object()) {
    json check{{"name", name}, {"status", pass ? "pass" : "fail"}, {"runtime_ms", runtime_ms}};
    for (auto& [key, value] : extra.items()) check[key] = value;
    report["checks"].push_back(std::move(check));
    if (!pass) report["pass"] = false;
}

// ---------------------------------------------------------------- construct

int cmd_construct(const std::string& family, int t, int k, int n, int p, int q,
                  const std::string& spec_csv, const std::string& out_path,
                  const std::string& format, const std::string& cycle_out) {
    LabeledGraph lg;
    std::optional<Cycle> cycle;
    if (family == "h_hat") {
        lg = build_H_hat();
    } else if (family == "h_hat_minus") {
        lg = build_H_hat_minus();
    } else if (family == "g") {
        lg = build_G(t);
    } else if (family == "g_minus") {
        lg = build_G_minus(t);
    } else if (family == "g_k") {
        lg = build_G_k(t, k);
    } else if (family == "star") {
        lg = build_star(p, q);
    } else if (family == "counterexample") {
        auto ce = counterexample(n, k, ExtensionSpec::of(parse_size_list(spec_csv)));
        lg = std::move(ce.graph);
        cycle = std::move(ce.cycle);
    } else {
        throw std::invalid_argument("unknown family '" + family + "'");
    }

    const std::string payload = format == "dot" ? io::to_dot(lg.graph, lg.heavy_edges)
                                                : io::to_edge_list(lg.graph);
    if (out_path == "-") {
        std::cout << payload;
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << payload;
    }
    if (!cycle_out.empty()) {
        if (!cycle)
            throw std::invalid_argument("--cycle-out applies to the counterexample family only");
        std::ofstream out(cycle_out);
        if (!out) throw std::invalid_argument("cannot write '" + cycle_out + "'");
        bool first = true;
        for (const auto& name : cycle->names(lg.graph)) {
            out << (first ? "" : " ") << name;
            first = false;
        }
        out << "\n";
    }
    std::cerr << family << ": " << lg.graph.vertex_count() << " vertices, "
              << lg.graph.edge_count() << " edges\n";
    if (cycle)
        std::cerr << "witness cycle: " << cycle->length() << " vertices (omits "
                  << lg.graph.vertex_count() - cycle->length() << ")\n";
    return 0;
}

// ------------------------------------------------------------------- verify

// "all" runs the property battery. The class-membership predicates
// (fan3-free, fan4-free, abar-free, k5e-twins, ptolemaic) are opt-in by
// name: they are hypothesis filters, not properties every input should have.
const std::vector<std::string> kAllChecks = {"chordal", "strongly-chordal", "hamiltonian",
                                             "pancyclic", "connectivity"};

void run_verify_check(json& report, const Graph& g, const std::string& name,
                      std::optional<int> expect_connectivity) {
    const auto start = std::chrono::steady_clock::now();
    json extra = json::object();
    bool pass = false;
    if (name == "chordal" || name == "strongly-chordal") {
        auto eo = name == "chordal" ? maximum_cardinality_search(g)
                                    : simple_elimination_ordering(g);
        pass = eo.has_value();
        if (pass) {
            json order = json::array();
            for (int v : eo->order) order.push_back(g.name_of(v));
            extra["witness"] = json{{"elimination_ordering", std::move(order)}};
        } else {
            extra["note"] = "exhaustive search exhausted: no such elimination ordering";
        }
    } else if (name == "hamiltonian") {
        auto cyc = hamiltonian_cycle(g);
        pass = cyc.has_value();
        if (pass)
            extra["witness"] = json{{"cycle", cyc->names(g)}};
        else
            extra["note"] = "exhaustive search exhausted: no Hamiltonian cycle";
    } else if (name == "pancyclic") {
        if (g.vertex_count() < 3) {
            pass = false;
            extra["note"] = "graph too small to contain any cycle";
        } else {
            HamTable table(g, table_cap());
            pass = is_pancyclic(g, table);
            if (!pass) {
                std::vector<char> seen(g.vertex_count() + 1, 0);
                const std::uint64_t full = ~std::uint64_t{0} >> (64 - g.vertex_count());
                for (std::uint64_t S = 0;; ++S) {
                    VertexSet W(S);
                    if (W.count() >= 3 && table.ham(W)) seen[W.count()] = 1;
                    if (S == full) break;
                }
                for (int len = 3; len <= g.vertex_count(); ++len)
                    if (!seen[len]) {
                        extra["witness"] = json{{"missing_cycle_length", len}};
                        break;
                    }
            }
        }
    } else if (name == "connectivity") {
        std::vector<int> cut;
        const int kappa = vertex_connectivity(g, cut);
        extra["value"] = kappa;
        json cut_names = json::array();
        for (int v : cut) cut_names.push_back(g.name_of(v));
        extra["witness"] = json{{"min_cut", std::move(cut_names)}};
        pass = expect_connectivity ? kappa == *expect_connectivity : true;
        if (!pass)
            extra["note"] = "expected connectivity " + std::to_string(*expect_connectivity);
    } else if (name == "fan3-free" || name == "fan4-free" || name == "abar-free") {
        const Pattern pattern = name == "fan3-free"   ? patterns::three_fan()
                                : name == "fan4-free" ? patterns::four_fan()
                                                      : patterns::a_bar();
        auto occ = find_induced_pattern(g, pattern);
        pass = !occ.has_value();
        if (occ) {
            json map = json::object();
            for (const auto& [pv, gv] : occ->name_map(pattern, g)) map[pv] = gv;
            extra["witness"] = json{{"occurrence", std::move(map)}};
        }
    } else if (name == "k5e-twins") {
        auto rep = every_k5e_has_true_twins(g);
        pass = rep.ok;
        if (!rep.ok) {
            json sets = json::array();
            for (const auto& W : rep.violations) sets.push_back(g.names_of(W));
            extra["witness"] = json{{"twinless_occurrences", std::move(sets)}};
        }
    } else if (name == "ptolemaic") {
        const bool chordal = is_chordal(g);
        auto occ = find_induced_pattern(g, patterns::three_fan());
        pass = chordal && !occ.has_value();
        if (!chordal) extra["note"] = "not chordal (exhaustive search exhausted)";
        if (occ) {
            json map = json::object();
            for (const auto& [pv, gv] : occ->name_map(patterns::three_fan(), g)) map[pv] = gv;
            extra["witness"] = json{{"occurrence", std::move(map)}};
        }
    } else {
        throw std::invalid_argument("unknown check '" + name + "'");
    }
    add_check(report, name, pass, ms_since(start), std::move(extra));
}

int cmd_verify(const std::string& path, const std::string& checks_csv,
               std::optional<int> expect_connectivity) {
    auto [g, input_info] = load_graph_file(path);
    json report = report_skeleton(std::move(input_info));
    const std::vector<std::string> checks =
        checks_csv == "all" ? kAllChecks : split_csv(checks_csv);
    if (checks.empty()) throw std::invalid_argument("no checks requested");
    for (const auto& name : checks) run_verify_check(report, g, name, expect_connectivity);
    std::cout << report.dump(2) << "\n";
    return report["pass"].get<bool>() ? 0 : 1;
}

// ------------------------------------------------------------- extend-check

int cmd_extend_check(const std::string& path, const std::string& spec_csv,
                     const std::string& cycle_csv, bool all_mode) {
    if (all_mode == !cycle_csv.empty())
        throw std::invalid_argument("pass exactly one of --cycle or --all");
    auto [g, input_info] = load_graph_file(path);
    const ExtensionSpec spec = ExtensionSpec::of(parse_size_list(spec_csv));
    json report = report_skeleton(std::move(input_info));
    report["S"] = spec.sizes();
    const auto start = std::chrono::steady_clock::now();

    if (all_mode) {
        HamTable table(g, table_cap());
        auto verdict = is_cycle_extendable_graph(g, spec, table);
        json extra;
        extra["result"] = verdict.all_extendable() ? "EXTENDABLE_ALL" : "VIOLATION";
        json violations = json::array();
        for (const auto& v : verdict.violations) {
            json item{{"cycle_vertices", g.names_of(v.vertices)},
                      {"note", v.note + " (exhaustive search exhausted)"}};
            if (auto witness = table.witness_cycle(v.vertices))
                item["witness_cycle"] = witness->names(g);
            violations.push_back(std::move(item));
        }
        extra["violations"] = std::move(violations);
        json samples = json::array();
        for (const auto& [w, z] : verdict.sample_extensions)
            samples.push_back(
                json{{"cycle_vertices", g.names_of(w)}, {"extension", g.names_of(z)}});
        extra["sample_extensions"] = std::move(samples);
        add_check(report, "all-cycles-extend", verdict.all_extendable(), ms_since(start),
                  std::move(extra));
    } else {
        Cycle cycle = Cycle::from_names(g, split_csv(cycle_csv));
        report["cycle"] = cycle.names(g);
        std::optional<HamTable> table;
        if (g.vertex_count() <= table_cap()) table.emplace(g, table_cap());
        auto z = is_set_extendable(g, cycle.vertex_set(), spec, table ? &*table : nullptr);
        json extra;
        extra["result"] = z ? "EXTENDABLE" : "NOT_EXTENDABLE";
        if (z)
            extra["witness"] = json{{"extension", g.names_of(*z)}};
        else
            extra["note"] = "exhaustive search exhausted: no extension of any size in S";
        add_check(report, "cycle-extends", z.has_value(), ms_since(start), std::move(extra));
    }
    std::cout << report.dump(2) << "\n";
    return report["pass"].get<bool>() ? 0 : 1;
}

// ------------------------------------------------------------------- search

ClassFilterSet parse_filters(const std::vector<std::string>& names) {
    ClassFilterSet f;
    for (const auto& name : names) {
        if (name == "strongly-chordal")
            f.strongly_chordal = true;
        else if (name == "fan3-free")
            f.fan3_free = true;
        else if (name == "fan4-free")
            f.fan4_free = true;
        else if (name == "abar-free")
            f.abar_free = true;
        else if (name == "k5e-twins")
            f.k5e_twins_ok = true;
        else
            throw std::invalid_argument("unknown filter '" + name + "'");
    }
    return f;
}

int cmd_search(int n, std::uint64_t seed, double density, int trials,
               const std::string& filters_csv, const std::string& spec_csv) {
    const ExtensionSpec spec = ExtensionSpec::of(parse_size_list(spec_csv));
    const ClassFilterSet filters = parse_filters(split_csv(filters_csv));
    // Theorem-backed filter combinations promise a clean run for S = {1}.
    const bool promised = spec == ExtensionSpec::of({1}) && filters.fan4_free &&
                          (filters.k5e_twins_ok || filters.abar_free);

    SplitMix64 seeder(seed);
    int in_class = 0, violations = 0;
    for (int index = 0; index < trials; ++index) {
        GenSpec gen;
        gen.n = n;
        gen.seed = seeder.next();
        gen.fill_density = density;
        Graph g = random_hamiltonian_chordal(gen);
        if (!passes_filters(g, filters)) continue;
        ++in_class;
        HamTable table(g, table_cap());
        auto verdict = is_cycle_extendable_graph(g, spec, table);
        if (!verdict.all_extendable()) {
            ++violations;
            json sets = json::array();
            for (const auto& v : verdict.violations) sets.push_back(g.names_of(v.vertices));
            std::cout << json{{"event", "violation"},
                              {"seed", seed},
                              {"index", index},
                              {"sub_seed", gen.seed},
                              {"n", n},
                              {"density", density},
                              {"violating_sets", std::move(sets)}}
                             .dump()
                      << "\n";
        }
    }
    std::cout << json{{"event", "summary"},
                      {"trials", trials},
                      {"in_class", in_class},
                      {"violations", violations},
                      {"promised_clean", promised}}
                     .dump()
              << "\n";
    return promised && violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle-extendability toolkit for chordal graph experiments"};
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
    app.require_subcommand(1);

    auto* construct = app.add_subcommand("construct", "build a named graph family");
    std::string family, out_path = "-", format = "edgelist", cycle_out, spec_csv = "1";
    int t = 1, k = 0, n = 15, p = 1, q = 1;
    construct
        ->add_option("--family", family, "h_hat|h_hat_minus|g|g_minus|g_k|counterexample|star")
        ->required();
    construct->add_option("--t", t, "path stretch (g, g_minus, g_k)");
    construct->add_option("--k", k, "star size / connectivity surplus");
    construct->add_option("--n", n, "total vertex count (counterexample)");
    construct->add_option("--p", p, "independent side size (star)");
    construct->add_option("--q", q, "clique side size (star)");
    construct->add_option("--S", spec_csv, "extension sizes, e.g. 1,2,3");
    construct->add_option("--out", out_path, "output file ('-' for stdout)");
    construct->add_option("--format", format)->check(CLI::IsMember({"edgelist", "dot"}));
    construct->add_option("--cycle-out", cycle_out, "write the witness cycle (counterexample)");

    auto* verify = app.add_subcommand("verify", "run recognition checks on an edge-list file");
    std::string verify_path, checks_csv = "all";
    int expect_connectivity = -1;
    verify->add_option("file", verify_path, "edge-list file")->required();
    verify->add_option("--checks", checks_csv, "comma list or 'all'");
    verify->add_option("--expect-connectivity", expect_connectivity,
                       "fail unless the vertex connectivity equals this");

    auto* extend =
        app.add_subcommand("extend-check", "S-extendability of a cycle or all cycles");
    std::string extend_path, extend_spec = "1", cycle_csv;
    bool all_mode = false;
    extend->add_option("file", extend_path, "edge-list file")->required();
    extend->add_option("--S", extend_spec, "extension sizes, e.g. 1,2");
    extend->add_option("--cycle", cycle_csv, "comma-separated vertex names of a cycle");
    extend->add_flag("--all", all_mode, "check every cycle vertex set");

    auto* search = app.add_subcommand("search", "randomized extendability search");
    int search_n = 10, trials = 100;
    std::uint64_t seed = 1;
    double density = 0.2;
    std::string filters_csv, search_spec = "1";
    search->add_option("--n", search_n)->check(CLI::Range(3, 22));
    search->add_option("--seed", seed);
    search->add_option("--density", density)->check(CLI::Range(0.0, 1.0));
    search->add_option("--trials", trials)->check(CLI::PositiveNumber);
    search->add_option("--filters", filters_csv,
                       "strongly-chordal,fan3-free,fan4-free,abar-free,k5e-twins");
    search->add_option("--S", search_spec, "extension sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (construct->parsed())
            return cmd_construct(family, t, k, n, p, q, spec_csv, out_path, format, cycle_out);
        if (verify->parsed())
            return cmd_verify(verify_path, checks_csv,
                              verify->count("--expect-connectivity")
                                  ? std::optional<int>(expect_connectivity)
                                  : std::nullopt);
        if (extend->parsed())
            return cmd_extend_check(extend_path, extend_spec, cycle_csv, all_mode);
        if (search->parsed())
            return cmd_search(search_n, seed, density, trials, filters_csv, search_spec);
    } catch (const std::exception& e) {
        // ParseError, capacity_error and bad arguments all land here.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
