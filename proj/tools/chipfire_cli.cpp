#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "chipfire/orientation.hpp"
#include "chipfire/parallel.hpp"
#include "report.hpp"

namespace {

using namespace chipfire;
using cli::Json;

enum Exit { ok = 0, usage = 1, bad_input = 2, mismatch = 3 };

struct Options {
    std::string graph;
    std::string k_range;
    std::string sink;
    std::string window;
    std::string format = "table";
    int jobs = default_jobs();
    std::uint64_t seed = 1;
    std::string divisor;
    std::string partition;
    std::string extensions;
    int blocks = 2;
    bool detail = false;
};

std::int64_t parse_int(std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) throw std::invalid_argument("not an integer: " + std::string(s));
    return v;
}

// "A..B" or "A"
std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const auto v = parse_int(text);
        return {v, v};
    }
    const auto lo = parse_int(std::string_view(text).substr(0, dots));
    const auto hi = parse_int(std::string_view(text).substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("empty range: " + text);
    return {lo, hi};
}

Multigraph need_graph(const Options& o) {
    if (o.graph.empty()) throw std::invalid_argument("--graph is required");
    return load_graph_file(o.graph);
}

std::vector<int> k_values(const Options& o, const Multigraph& g) {
    int lo = 1, hi = g.vertex_count() - 1;
    if (!o.k_range.empty()) {
        auto [a, b] = parse_range(o.k_range);
        lo = static_cast<int>(a);
        hi = static_cast<int>(b);
    }
    if (lo < 1 || hi > g.vertex_count() - 1) throw std::invalid_argument("k must lie in [1, n-1]");
    std::vector<int> ks;
    for (int k = lo; k <= hi; ++k) ks.push_back(k);
    return ks;
}

DegreeWindow window_of(const Options& o, const Multigraph& g) {
    if (o.window.empty()) return default_window(g);
    auto [lo, hi] = parse_range(o.window);
    return {lo, hi};
}

Vertex sink_of(const Options& o, const Multigraph& g) { return o.sink.empty() ? 0 : g.index_of(o.sink); }

void emit(const Options& o, const Json& j, const std::string& table) {
    if (o.format == "json") std::cout << j.dump(2) << '\n';
    else std::cout << table;
}

int cmd_verify(const Options& o) {
    const auto g = need_graph(o);
    const auto r = verify_wilmes(g, k_values(o, g), window_of(o, g), o.jobs, o.detail, sink_of(o, g));
    emit(o, cli::verification_json(g, r), cli::verification_table(g, r));
    return r.all_match() ? ok : mismatch;
}

int cmd_betti(const Options& o) {
    const auto g = need_graph(o);
    const auto ks = k_values(o, g);
    if (!o.divisor.empty()) {
        const auto d = parse_divisor(g, o.divisor);
        const int top = *std::max_element(ks.begin(), ks.end());
        const auto dims = reduced_homology_dims(complex_of_divisor(g, d), top - 1);
        Json j{{"divisor", format_divisor(g, d)}, {"betti", Json::object()}};
        std::string table;
        for (int k : ks) {
            j["betti"][std::to_string(k)] = dims[k];
            table += "beta_" + std::to_string(k) + "," + format_divisor(g, d) + " = " + std::to_string(dims[k]) + "\n";
        }
        emit(o, j, table);
        return ok;
    }
    const auto r = coarse_betti(g, ks, window_of(o, g), sink_of(o, g), o.jobs);
    emit(o, cli::betti_json(g, r), cli::betti_table(g, r));
    return ok;
}

int cmd_partitions(const Options& o) {
    const auto g = need_graph(o);
    Json j = Json::array();
    std::string table;
    for (const auto& p : enumerate_connected_partitions(g, o.blocks)) {
        j.push_back(format_partition(g, p));
        table += format_partition(g, p) + "\n";
    }
    emit(o, j, table);
    return ok;
}

int cmd_cuts(const Options& o) {
    const auto g = need_graph(o);
    Json j = Json::array();
    std::string table;
    for (const auto& p : enumerate_connected_partitions(g, 2)) {
        const auto seqs = generating_sequences(g, p);
        BoundaryDivisorChoice choice{seqs.front(), {seqs.front().front().side}};
        const auto d = boundary_divisor(g, p, choice);
        const int b1 = betti_kD(g, d, 1);
        j.push_back({{"cut", format_partition(g, p)}, {"boundary_divisor", format_divisor(g, d)}, {"beta_1", b1}});
        table += format_partition(g, p) + "  D=" + format_divisor(g, d) + "  beta_1=" + std::to_string(b1) + "\n";
    }
    emit(o, j, table);
    return ok;
}

int cmd_boundary(const Options& o) {
    const auto g = need_graph(o);
    if (o.partition.empty()) throw std::invalid_argument("--partition is required");
    const auto p = parse_partition(g, o.partition);
    const auto q = quotient(g, p);
    Json j{{"partition", format_partition(g, p)}, {"divisors", Json::array()}, {"orientations", Json::array()}};
    std::string table = "boundary divisors of " + format_partition(g, p) + "\n";
    for (const auto& d : all_boundary_divisors(g, p)) {
        j["divisors"].push_back(format_divisor(g, d));
        table += "  " + format_divisor(g, d) + "\n";
    }
    table += "unique-source orientations (source " + format_vertex_set(g, p.block(0)) + ")\n";
    for (Orientation a : enumerate_aus(q, 0)) {
        const auto f = f_map(g, q, a);
        j["orientations"].push_back({{"orientation", format_orientation(q, a)}, {"f", format_divisor(g, f)}});
        table += "  " + format_orientation(q, a) + "  f=" + format_divisor(g, f) + "\n";
    }
    j["classes"] = boundary_divisor_classes(g, p).size();
    table += "classes: " + std::to_string(boundary_divisor_classes(g, p).size()) + "\n";
    emit(o, j, table);
    return ok;
}

int cmd_linear_system(const Options& o) {
    const auto g = need_graph(o);
    if (o.divisor.empty()) throw std::invalid_argument("--divisor is required");
    const auto d = parse_divisor(g, o.divisor);
    Json j{{"divisor", format_divisor(g, d)}, {"members", Json::array()}, {"splittings", Json::array()}};
    std::string table = "|" + format_divisor(g, d) + "|:";
    for (const auto& m : linear_system(g, d)) {
        j["members"].push_back(format_divisor(g, m));
        table += " " + format_divisor(g, m);
    }
    table += "\n";
    for (const auto& s : splittings(g, d)) {
        Json side_a = Json::array(), side_b = Json::array();
        for (const auto& m : s.first) side_a.push_back(format_divisor(g, m));
        for (const auto& m : s.second) side_b.push_back(format_divisor(g, m));
        const auto rec = cut_from_splitting(g, d, s);
        j["splittings"].push_back({{"first", side_a}, {"second", side_b}, {"cut", format_partition(g, rec.cut)}});
        table += "splitting " + side_a.dump() + " | " + side_b.dump() + "  cut " + format_partition(g, rec.cut) + "\n";
    }
    emit(o, j, table);
    return ok;
}

int cmd_extension_cycle(const Options& o) {
    ExtensionSpec spec;
    if (!o.extensions.empty()) {
        std::string item;
        for (std::size_t i = 0; i <= o.extensions.size(); ++i) {
            if (i == o.extensions.size() || o.extensions[i] == ',') {
                spec.extension.push_back(static_cast<int>(parse_int(item)));
                item.clear();
            } else {
                item += o.extensions[i];
            }
        }
        spec.k = static_cast<int>(spec.extension.size());
    } else {
        std::mt19937_64 rng(o.seed);
        spec.k = o.k_range.empty() ? 3 : static_cast<int>(parse_range(o.k_range).first);
        if (spec.k < 1) throw std::invalid_argument("k must be positive");
        std::uniform_int_distribution<int> pick(spec.k + 1, 2 * spec.k);
        for (int j = 0; j < spec.k; ++j) spec.extension.push_back(pick(rng));
        std::sort(spec.extension.begin(), spec.extension.end(), std::greater<>());
    }
    const auto c = extension_cycle(spec);
    const bool closed = boundary_of_chain(c.chain).empty();
    Json e = Json::array();
    for (int x : spec.extension) e.push_back(x);
    Json j{{"k", spec.k}, {"extension", e}, {"chain", cli::chain_json(nullptr, c.chain)}, {"boundary_zero", closed}};
    std::string table = format_chain(c.chain) + "\nboundary zero: " + (closed ? "yes" : "no") + "\n";
    emit(o, j, table);
    return ok;
}

int cmd_tree_witness(const Options& o) {
    const auto g = need_graph(o);
    if (o.partition.empty()) throw std::invalid_argument("--partition is required");
    const auto p = parse_partition(g, o.partition);
    Divisor d;
    if (o.divisor.empty()) {
        const auto q = quotient(g, p);
        d = f_map(g, q, enumerate_aus(q, 0).front());
    } else {
        d = parse_divisor(g, o.divisor);
    }
    const auto w = tree_witness_cycle(g, p, d);
    auto faces = [&](const std::vector<VertexSet>& fs) {
        Json a = Json::array();
        for (auto f : fs) a.push_back(format_vertex_set(g, f));
        return a;
    };
    Json j{{"divisor", format_divisor(g, d)},
           {"base", format_vertex_set(g, w.base)},
           {"extensions", faces(w.extensions)},
           {"roofs", faces(w.roofs)},
           {"chain", cli::chain_json(&g, w.chain)},
           {"not_a_boundary", w.not_a_boundary}};
    std::string table = "D = " + format_divisor(g, d) + "\n" + format_chain(g, w.chain) +
                        "\nnot a boundary: " + (w.not_a_boundary ? "yes" : "no") + "\n";
    emit(o, j, table);
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Chip-firing divisors, boundary divisors and Betti numbers of graph toppling ideals"};
    app.require_subcommand(1);
    Options o;

    auto shared = [&](CLI::App* sub) {
        sub->add_option("--graph", o.graph, "Edge-list file");
        sub->add_option("--k", o.k_range, "Homological degrees, A..B");
        sub->add_option("--sink", o.sink, "Sink vertex for class representatives");
        sub->add_option("--degree-window", o.window, "Divisor degrees scanned, LO..HI");
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--seed", o.seed, "Seed for randomized inputs");
    };
    std::vector<std::pair<CLI::App*, std::function<int(const Options&)>>> commands;
    auto add = [&](const char* name, const char* help, std::function<int(const Options&)> fn) {
        CLI::App* sub = app.add_subcommand(name, help);
        shared(sub);
        commands.emplace_back(sub, std::move(fn));
        return sub;
    };

    auto* v = add("verify-wilmes", "Compare coarse Betti numbers with partition counts", cmd_verify);
    v->add_flag("--detail", o.detail, "Per-partition counts");
    auto* b = add("betti", "Coarse Betti numbers, or fine ones with --divisor", cmd_betti);
    b->add_option("--divisor", o.divisor, "Divisor, e.g. 0004 or a=1,b=2");
    add("cuts", "Cuts with a boundary divisor and its first Betti number", cmd_cuts);
    auto* pt = add("partitions", "Connected partitions", cmd_partitions);
    pt->add_option("--blocks", o.blocks, "Number of blocks")->check(CLI::PositiveNumber);
    auto* bd = add("boundary-divisors", "Boundary divisors and orientations of a partition", cmd_boundary);
    bd->add_option("--partition", o.partition, "Partition, e.g. {a}|{b,d}|{c}");
    auto* ls = add("linear-system", "Members and splittings of |D|", cmd_linear_system);
    ls->add_option("--divisor", o.divisor, "Divisor");
    auto* ec = add("extension-cycle", "Abstract extension cycle", cmd_extension_cycle);
    ec->add_option("--extensions", o.extensions, "Comma-separated e_1..e_k (random if omitted)");
    auto* tw = add("tree-witness", "Non-bounding cycle for a boundary divisor of a multi-edged tree", cmd_tree_witness);
    tw->add_option("--partition", o.partition, "Partition");
    tw->add_option("--divisor", o.divisor, "Boundary divisor (default: f of the root-source orientation)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }
    try {
        for (auto& [sub, fn] : commands) {
            if (sub->parsed()) return fn(o);
        }
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: unknown vertex or value: " << e.what() << '\n';
        return bad_input;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return bad_input;
    }
    return usage;
}
