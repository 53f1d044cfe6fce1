// modcolor: command line front end for the coloring toolkit. Subcommands
// cover decomposition, chromatic numbers, coloring construction, property
// checks with witnesses, hierarchical-coloring counts, class recognition,
// instance generation and a wall-time benchmark.
//
// Exit codes: 0 success / property true, 1 property false, 2 usage or input
// error.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modcolor/coloring_engine.hpp"
#include "modcolor/io.hpp"
#include "modcolor/oracles.hpp"
#include "modcolor/p4sparse.hpp"

namespace {

using namespace modcolor;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edge_list(std::cin);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file '" + path + "'");
    return read_edge_list(in);
}

Coloring load_coloring(const std::string& path, int n) {
    if (path == "-") return read_coloring(std::cin, n);
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open coloring file '" + path + "'");
    return read_coloring(in, n);
}

std::string load_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

struct CommonState {
    std::string caps_file;
    std::string format = "text";

    OracleCaps caps() const {
        if (caps_file.empty()) return {};
        return oracle_caps_from_json(load_text(caps_file));
    }
};

// Default binary cotree when none is supplied: the caterpillar refinement of
// the discriminating cotree with union children ordered by ascending
// chromatic number.
Cotree default_binary_cotree(const Graph& g, const OracleCaps& caps) {
    Coloring reference = modularly_minimal_coloring(g, default_prime_solver(caps));
    return binary_refine(discriminating_cotree(g), ColorSorted{&reference});
}

void print_witness(const CommonState& state, const std::string& kind, const json& data) {
    if (state.format == "json") {
        json j;
        j["verdict"] = false;
        j["witness"] = data;
        j["kind"] = kind;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "false\n" << kind << ": " << data.dump() << '\n';
    }
}

void print_verdict_true(const CommonState& state) {
    if (state.format == "json")
        std::cout << json{{"verdict", true}}.dump(2) << '\n';
    else
        std::cout << "true\n";
}

int run_decompose(const CommonState& state, const std::string& graph_path) {
    Graph g = load_graph(graph_path);
    MDTree tree = modular_decomposition(g);
    if (state.format == "dot")
        std::cout << mdtree_to_dot(tree);
    else
        std::cout << mdtree_to_json(tree) << '\n';
    return kExitTrue;
}

int run_chi(const CommonState& state, const std::string& graph_path,
            const std::string& method) {
    Graph g = load_graph(graph_path);
    const OracleCaps caps = state.caps();
    const int chi = method == "brute" ? chi_bruteforce(g, caps)
                                      : chromatic_number(g, default_prime_solver(caps));
    std::cout << chi << '\n';
    return kExitTrue;
}

int run_color(const CommonState& state, const std::string& graph_path,
              const std::string& mode, const std::string& order_csv,
              const std::string& tree_path, std::optional<std::uint64_t> seed,
              const std::string& output) {
    Graph g = load_graph(graph_path);
    const OracleCaps caps = state.caps();
    Coloring sigma;
    if (mode == "greedy") {
        std::vector<int> order(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) order[v] = v;
        if (!order_csv.empty()) {
            order.clear();
            std::istringstream in(order_csv);
            std::string token;
            while (std::getline(in, token, ',')) order.push_back(std::stoi(token));
        } else if (seed) {
            std::mt19937_64 rng(*seed);
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng() % i]);
        }
        sigma = greedy_coloring(g, order);
    } else if (mode == "tt-minimal") {
        Cotree tree = tree_path.empty()
                          ? binary_refine(discriminating_cotree(g), LeftComb{})
                          : cotree_from_json(load_text(tree_path));
        sigma = seed ? cotree_minimal_coloring(g, tree, *seed)
                     : cotree_minimal_coloring(g, tree);
    } else if (mode == "modmin") {
        PrimeSolver solver = default_prime_solver(caps);
        sigma = seed ? modularly_minimal_coloring(g, solver, *seed)
                     : modularly_minimal_coloring(g, solver);
    } else if (mode == "p4sparse") {
        if (seed) {
            try {
                sigma = modularly_minimal_coloring(g, spider_prime_solver(), *seed);
            } catch (const UnsupportedPrimeError&) {
                throw std::invalid_argument("graph is not P4-sparse");
            }
        } else {
            sigma = p4sparse_modmin_coloring(g);
        }
    } else {
        throw std::invalid_argument("unknown color mode '" + mode + "'");
    }
    if (output.empty() || output == "-") {
        write_coloring(std::cout, sigma);
    } else {
        std::ofstream out(output);
        if (!out) throw std::invalid_argument("cannot open output file '" + output + "'");
        write_coloring(out, sigma);
    }
    return kExitTrue;
}

int run_check(const CommonState& state, const std::string& graph_path,
              const std::string& coloring_path, const std::string& property,
              const std::string& tree_path) {
    Graph g = load_graph(graph_path);
    Coloring sigma = load_coloring(coloring_path, g.vertex_count());
    const OracleCaps caps = state.caps();

    std::pair<int, int> bad_edge;
    const bool proper = is_proper_coloring(g, sigma, &bad_edge);
    if (property == "proper") {
        if (proper) {
            print_verdict_true(state);
            return kExitTrue;
        }
        print_witness(state, "monochromatic edge",
                      json::array({bad_edge.first, bad_edge.second}));
        return kExitFalse;
    }
    if (!proper) {
        // nothing below is satisfiable by an improper coloring
        print_witness(state, "monochromatic edge",
                      json::array({bad_edge.first, bad_edge.second}));
        return kExitFalse;
    }

    if (property == "greedy") {
        if (is_greedy_coloring(g, sigma)) {
            print_verdict_true(state);
            return kExitTrue;
        }
        // locate a vertex missing a smaller color in its neighborhood
        json witness;
        for (int v = 0; v < g.vertex_count() && witness.is_null(); ++v) {
            std::vector<char> present(g.vertex_count() + 2, 0);
            for (int u : g.neighbors(v)) present[sigma.at(u)] = 1;
            if (sigma.at(v) > g.vertex_count()) {
                witness = json{{"vertex", v}, {"missing_color", g.vertex_count() + 1}};
                break;
            }
            for (int c = 1; c < sigma.at(v); ++c) {
                if (!present[c]) {
                    witness = json{{"vertex", v}, {"missing_color", c}};
                    break;
                }
            }
        }
        print_witness(state, "vertex without smaller neighbor color", witness);
        return kExitFalse;
    }
    if (property == "hierarchical" || property == "strict") {
        std::vector<int> module;
        const bool ok = property == "hierarchical"
                            ? is_hierarchical(g, sigma, &module)
                            : is_strictly_hierarchical(g, sigma, &module);
        if (ok) {
            print_verdict_true(state);
            return kExitTrue;
        }
        print_witness(state, "violating parallel module", json(module));
        return kExitFalse;
    }
    if (property == "modmin") {
        std::vector<int> module;
        if (is_modularly_minimal(g, sigma, default_prime_solver(caps), &module)) {
            print_verdict_true(state);
            return kExitTrue;
        }
        print_witness(state, "module not minimally colored", json(module));
        return kExitFalse;
    }
    if (property == "hc") {
        Cotree tree = tree_path.empty() ? default_binary_cotree(g, caps)
                                        : cotree_from_json(load_text(tree_path));
        const Cotree* violating = nullptr;
        if (is_hierarchical_wrt_cotree(g, sigma, tree, &violating)) {
            print_verdict_true(state);
            return kExitTrue;
        }
        json witness;
        witness["node_label"] = violating->label;
        witness["leaves"] = cotree_leaves(*violating);
        print_witness(state, "violating cotree node", witness);
        return kExitFalse;
    }
    throw std::invalid_argument("unknown property '" + property + "'");
}

int run_count(const CommonState& state, const std::string& graph_path,
              const std::string& tree_path) {
    Graph g = load_graph(graph_path);
    Cotree tree = tree_path.empty() ? default_binary_cotree(g, state.caps())
                                    : cotree_from_json(load_text(tree_path));
    std::cout << count_hierarchical_colorings(g, tree).str() << '\n';
    return kExitTrue;
}

int run_recognize(const CommonState& state, const std::string& graph_path,
                  const std::string& cls) {
    Graph g = load_graph(graph_path);
    if (cls == "cograph") {
        std::array<int, 4> witness{};
        if (is_cograph(g, &witness)) {
            print_verdict_true(state);
            return kExitTrue;
        }
        print_witness(state, "induced P4",
                      json::array({witness[0], witness[1], witness[2], witness[3]}));
        return kExitFalse;
    }
    if (cls == "p4sparse") {
        std::vector<int> module;
        if (is_p4_sparse(g, &module)) {
            print_verdict_true(state);
            return kExitTrue;
        }
        print_witness(state, "prime non-spider module", json(module));
        return kExitFalse;
    }
    if (cls == "spider") {
        auto sd = recognize_spider(g);
        if (sd) {
            if (state.format == "json")
                std::cout << spider_to_json(*sd) << '\n';
            else
                std::cout << "true\n" << spider_to_json(*sd) << '\n';
            return kExitTrue;
        }
        if (state.format == "json")
            std::cout << json{{"verdict", false}}.dump(2) << '\n';
        else
            std::cout << "none\n";
        return kExitFalse;
    }
    throw std::invalid_argument("unknown class '" + cls + "'");
}

struct GenFlags {
    std::string flavor = "er";
    int n = 1;
    std::uint64_t seed = 0;
    double p_join = 0.5;
    double spider_rate = 0.3;
    int max_head = 8;
    double edge_p = 0.5;
    int k = 2;
    bool thick = false;
    int head_n = 0;
    std::string config_file;
};

int run_gen(const GenFlags& flags) {
    GeneratorConfig config;
    if (!flags.config_file.empty()) {
        config = generator_config_from_json(load_text(flags.config_file));
    } else {
        if (flags.flavor == "cograph")
            config.flavor = GraphFlavor::Cograph;
        else if (flags.flavor == "p4sparse")
            config.flavor = GraphFlavor::P4Sparse;
        else if (flags.flavor == "er" || flags.flavor == "erdos_renyi")
            config.flavor = GraphFlavor::ErdosRenyi;
        else if (flags.flavor == "spider")
            config.flavor = GraphFlavor::Spider;
        else
            throw std::invalid_argument("unknown flavor '" + flags.flavor + "'");
        config.n = flags.n;
        config.seed = flags.seed;
        config.p_join = flags.p_join;
        config.spider_rate = flags.spider_rate;
        config.max_head = flags.max_head;
        config.edge_p = flags.edge_p;
        config.spider_k = flags.k;
        config.spider_flavor = flags.thick ? SpiderFlavor::Thick : SpiderFlavor::Thin;
        config.head_n = flags.head_n;
    }
    write_edge_list(std::cout, generate(config));
    return kExitTrue;
}

int run_bench(const std::string& flavor, const std::string& sizes_csv,
              std::uint64_t seed) {
    if (flavor != "p4sparse" && flavor != "cograph")
        throw std::invalid_argument("bench supports flavors p4sparse and cograph");
    std::vector<long long> sizes;
    std::istringstream in(sizes_csv);
    std::string token;
    while (std::getline(in, token, ',')) {
        const double parsed = std::stod(token);
        if (parsed < 1) throw std::invalid_argument("sizes must be positive");
        sizes.push_back(std::llround(parsed));
    }
    if (sizes.empty()) throw std::invalid_argument("no sizes given");

    std::cout << "flavor,n,m,millis\n";
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        GeneratorConfig config;
        config.flavor =
            flavor == "cograph" ? GraphFlavor::Cograph : GraphFlavor::P4Sparse;
        config.n = static_cast<int>(sizes[i]);
        config.seed = seed + i;
        Graph g = generate(config);
        const auto start = std::chrono::steady_clock::now();
        Coloring sigma = p4sparse_modmin_coloring(g);
        const auto stop = std::chrono::steady_clock::now();
        const double millis =
            std::chrono::duration<double, std::milli>(stop - start).count();
        if (!is_proper_coloring(g, sigma))
            throw std::runtime_error("benchmark produced an improper coloring");
        std::cout << flavor << ',' << g.vertex_count() << ',' << g.edge_count() << ','
                  << millis << '\n';
    }
    return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"modular-decomposition based graph coloring toolkit"};
    app.require_subcommand(1);

    CommonState state;
    app.add_option("--caps", state.caps_file, "JSON file overriding oracle size caps");

    std::string graph_path, coloring_path, tree_path, order_csv, output;
    std::string method = "md", mode = "modmin", property = "proper", cls = "cograph";
    std::optional<std::uint64_t> seed;
    GenFlags gen_flags;
    std::string bench_flavor = "p4sparse", bench_sizes = "1e3,1e4,1e5";
    std::uint64_t bench_seed = 1;

    auto* decompose = app.add_subcommand("decompose", "modular decomposition tree");
    decompose->add_option("graph", graph_path, "edge list file or -")->required();
    decompose->add_option("--format", state.format, "json|dot")
        ->check(CLI::IsMember({"json", "dot"}));

    auto* chi = app.add_subcommand("chi", "chromatic number");
    chi->add_option("graph", graph_path)->required();
    chi->add_option("--method", method, "md|brute")
        ->check(CLI::IsMember({"md", "brute"}));

    auto* color = app.add_subcommand("color", "construct a coloring");
    color->add_option("graph", graph_path)->required();
    color->add_option("--mode", mode, "greedy|tt-minimal|modmin|p4sparse")
        ->check(CLI::IsMember({"greedy", "tt-minimal", "modmin", "p4sparse"}));
    color->add_option("--order", order_csv, "comma separated vertex order (greedy)");
    color->add_option("--tree", tree_path, "cotree JSON file (tt-minimal)");
    color->add_option("--seed", seed, "seed for randomized choices");
    color->add_option("--output,-o", output, "output file (default stdout)");

    auto* check = app.add_subcommand("check", "verify a coloring property");
    check->add_option("graph", graph_path)->required();
    check->add_option("coloring", coloring_path)->required();
    check->add_option("--property", property,
                      "proper|greedy|hierarchical|strict|modmin|hc")
        ->required()
        ->check(CLI::IsMember(
            {"proper", "greedy", "hierarchical", "strict", "modmin", "hc"}));
    check->add_option("--tree", tree_path, "cotree JSON file (hc)");
    check->add_option("--format", state.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* count = app.add_subcommand("count", "count hierarchical colorings");
    count->add_option("graph", graph_path)->required();
    count->add_option("--tree", tree_path, "cotree JSON file");

    auto* recognize = app.add_subcommand("recognize", "class recognition");
    recognize->add_option("graph", graph_path)->required();
    recognize->add_option("--class", cls, "cograph|p4sparse|spider")
        ->required()
        ->check(CLI::IsMember({"cograph", "p4sparse", "spider"}));
    recognize->add_option("--format", state.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--flavor", gen_flags.flavor, "cograph|p4sparse|er|spider");
    gen->add_option("--n", gen_flags.n, "vertex count");
    gen->add_option("--seed", gen_flags.seed, "64-bit seed");
    gen->add_option("--p-join", gen_flags.p_join, "join probability (cograph)");
    gen->add_option("--spider-rate", gen_flags.spider_rate, "spider rate (p4sparse)");
    gen->add_option("--max-head", gen_flags.max_head, "spider head bound (p4sparse)");
    gen->add_option("--p", gen_flags.edge_p, "edge probability (er)");
    gen->add_option("--k", gen_flags.k, "body size (spider)");
    gen->add_flag("--thick", gen_flags.thick, "thick spider");
    gen->add_option("--head-n", gen_flags.head_n, "head size (spider)");
    gen->add_option("--config", gen_flags.config_file, "generator config JSON file");

    auto* bench = app.add_subcommand("bench", "wall-time scaling benchmark");
    bench->add_option("--flavor", bench_flavor, "p4sparse|cograph");
    bench->add_option("--sizes", bench_sizes, "comma separated sizes, e.g. 1e3,1e4");
    bench->add_option("--seed", bench_seed, "base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    try {
        if (decompose->parsed()) return run_decompose(state, graph_path);
        if (chi->parsed()) return run_chi(state, graph_path, method);
        if (color->parsed())
            return run_color(state, graph_path, mode, order_csv, tree_path, seed, output);
        if (check->parsed())
            return run_check(state, graph_path, coloring_path, property, tree_path);
        if (count->parsed()) return run_count(state, graph_path, tree_path);
        if (recognize->parsed()) return run_recognize(state, graph_path, cls);
        if (gen->parsed()) return run_gen(gen_flags);
        if (bench->parsed()) return run_bench(bench_flavor, bench_sizes, bench_seed);
    } catch (const UnsupportedPrimeError& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitError;
    } catch (const OracleCapExceeded& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitError;
    } catch (const std::invalid_argument& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitError;
    } catch (const std::domain_error& error) {
        std::cerr << "error: " << error.what() << '\n';
        return kExitError;
    } catch (const std::exception& error) {
        std::cerr << "internal error: " << error.what() << '\n';
        return 3;
    }
    return kExitError;
}
