// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>

#include "chipfire/cycles.hpp"
#include "chipfire/orientation.hpp"
#include "chipfire/parallel.hpp"
#include "chipfire/verify.hpp"
#include "fixtures.hpp"
#include "properties.hpp"

using namespace chipfire;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool pass, const std::string& detail) {
    std::cout << "criterion " << id << ": " << (pass ? "PASS" : "FAIL") << "  " << detail << std::endl;
    failures += !pass;
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << s << "s";
    return os.str();
}

std::vector<std::string> formatted(const Multigraph& g, const std::vector<Divisor>& ds) {
    std::vector<std::string> out;
    for (const auto& d : ds) out.push_back(format_divisor(g, d));
    std::sort(out.begin(), out.end());
    return out;
}

void criterion1() {
    const auto g = fixtures::kite();
    const auto t0 = Clock::now();
    const auto r = coarse_betti(g, {1}, default_window(g), 0, 1);
    const double t = seconds_since(t0);
    report(1, r.coarse.at(1) == 6 && t < 10.0,
           "coarse beta_1 = " + std::to_string(r.coarse.at(1)) + " (want 6), " + fmt_seconds(t) + " (limit 10s)");
}

void criterion2() {
    const auto g = fixtures::kite();
    const std::set<std::string> expected{"{a}|{b,c,d}", "{a,b}|{c,d}", "{a,c}|{b,d}",
                                         "{a,b,c}|{d}", "{a,b,d}|{c}", "{a,c,d}|{b}"};
    std::set<std::string> got;
    std::set<DivisorClassKey> keys;
    bool all_one = true;
    const auto cuts = enumerate_connected_partitions(g, 2);
    for (const auto& cut : cuts) {
        got.insert(format_partition(g, cut));
        const auto seq = generating_sequences(g, cut).front();
        const auto d = boundary_divisor(g, cut, {seq, {VertexSet::single(0)}});
        keys.insert(class_key(g, d));
        all_one = all_one && betti_kD(g, d, 1) == 1;
    }
    report(2, cuts.size() == 6 && got == expected && keys.size() == 6 && all_one,
           std::to_string(cuts.size()) + " cuts, " + std::to_string(keys.size()) + " distinct classes, beta_1,D = 1 for each: " +
               (all_one ? "yes" : "no"));
}

void criterion3() {
    const auto g = fixtures::kite();
    const auto d = parse_divisor(g, "0004");
    const auto members = formatted(g, linear_system(g, d));
    const bool members_ok = members == std::vector<std::string>{"0004", "0130", "2020"};
    const auto s = splittings(g, d);
    bool split_ok = s.size() == 1;
    std::string cut = "-";
    if (split_ok) {
        split_ok = formatted(g, s[0].first) == std::vector<std::string>{"0004"} &&
                   formatted(g, s[0].second) == std::vector<std::string>{"0130", "2020"};
        cut = format_partition(g, cut_from_splitting(g, d, s[0]).cut);
    }
    report(3, members_ok && split_ok && cut == "{a,b,c}|{d}",
           "|0004| = {" + members[0] + "," + members[1] + "," + members[2] + "}, " + std::to_string(s.size()) +
               " splitting, recovered cut " + cut);
}

void criterion4() {
    const auto g = fixtures::kite();
    const auto p = parse_partition(g, "{a}|{b,d}|{c}");
    const auto q = quotient(g, p);
    const auto aus = enumerate_aus(q, 0);
    std::set<std::string> fs;
    for (Orientation o : aus) fs.insert(format_divisor(g, f_map(g, q, o)));
    const auto classes = boundary_divisor_classes(g, p);
    report(4, aus.size() == 2 && fs == std::set<std::string>{"0160", "0313"} && classes.size() == 2,
           "AUS " + std::to_string(aus.size()) + ", f values " + *fs.begin() + " " + *fs.rbegin() + ", classes " +
               std::to_string(classes.size()));
}

void criterion5() {
    const auto t = fixtures::tree6();
    const auto p = parse_partition(t, "{1}|{2,3}|{4}|{5}|{6}");
    const auto d = parse_divisor(t, "010111");
    const auto w = tree_witness_cycle(t, p, d);
    auto face = [&](std::initializer_list<const char*> names) {
        VertexSet s;
        for (const char* n : names) s.insert(t.index_of(n));
        return s;
    };
    std::set<std::uint64_t> expected;
    for (auto f : {face({"2", "4", "5", "6"}), face({"2", "3", "4", "5"}), face({"2", "3", "4", "6"}),
                   face({"1", "2", "5", "6"}), face({"1", "4", "5", "6"}), face({"1", "2", "3", "5"}),
                   face({"1", "3", "4", "5"}), face({"1", "2", "3", "6"}), face({"1", "3", "4", "6"})})
        expected.insert(f.bits());
    std::set<std::uint64_t> got;
    for (auto f : w.chain.support()) got.insert(f.bits());
    const bool closed = boundary_of_chain(w.chain).empty();
    const int beta = betti_kD(t, d, 4);
    report(5, got == expected && w.extensions.size() == 4 && w.roofs.size() == 4 && closed && w.not_a_boundary && beta >= 1,
           std::to_string(w.chain.size()) + " faces, boundary zero: " + (closed ? "yes" : "no") +
               ", not a boundary: " + (w.not_a_boundary ? "yes" : "no") + ", beta_4,D = " + std::to_string(beta));
}

void criterion6(std::uint64_t seed) {
    const int cases = 200;
    const auto t0 = Clock::now();
    const std::vector<std::pair<std::string, props::Result>> results{
        {"extension cycles", props::extension_cycles_close(seed + 1, cases)},
        {"AUS/classes/maximal", props::orientation_bijection(seed + 2, cases)},
        {"switch vs f", props::switch_agrees_with_f(seed + 3, cases)},
        {"support obstruction", props::support_obstruction(seed + 4, cases)},
        {"superstables vs trees", props::superstables_count_trees(seed + 5, cases)},
    };
    const double t = seconds_since(t0);
    bool ok = t < 300.0;
    std::string detail;
    for (const auto& [name, r] : results) {
        ok = ok && r.ok() && r.cases >= cases;
        detail += name + " " + std::to_string(r.cases - r.failures) + "/" + std::to_string(r.cases) + "; ";
        if (!r.ok()) detail += "[" + r.first_failure + "] ";
    }
    report(6, ok, detail + fmt_seconds(t) + " (limit 300s)");
}

// Connected multigraphs with 2..max_n vertices and total multiplicity at
// most max_total, one per isomorphism class.
std::vector<Multigraph> corpus(int max_n, int max_total) {
    std::vector<Multigraph> out;
    for (int n = 2; n <= max_n; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        std::vector<int> perm(n);
        std::set<std::vector<int>> seen;
        std::vector<int> mult(pairs.size(), 0);
        auto canonical = [&] {
            std::vector<int> best;
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> image(pairs.size());
                for (std::size_t e = 0; e < pairs.size(); ++e) {
                    int a = perm[pairs[e].first], b = perm[pairs[e].second];
                    if (a > b) std::swap(a, b);
                    const auto at = std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) - pairs.begin();
                    image[at] = mult[e];
                }
                if (best.empty() || image < best) best = image;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return best;
        };
        std::function<void(std::size_t, int)> rec = [&](std::size_t e, int left) {
            if (e == pairs.size()) {
                std::vector<std::tuple<int, int, int>> edges;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if (mult[i] > 0) edges.emplace_back(pairs[i].first, pairs[i].second, mult[i]);
                if (edges.empty() || !seen.insert(canonical()).second) return;
                try {
                    out.emplace_back(gen::letters(n), edges);
                } catch (const GraphError&) {
                    // disconnected
                }
                return;
            }
            for (int m = 0; m <= left; ++m) {
                mult[e] = m;
                rec(e + 1, left - m);
            }
            mult[e] = 0;
        };
        rec(0, max_total);
    }
    return out;
}

void criterion7(const std::vector<Multigraph>& graphs, int jobs) {
    const auto t0 = Clock::now();
    std::vector<int> matched(graphs.size(), 0), rows(graphs.size(), 0);
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const auto& g = graphs[i];
        std::vector<int> ks(g.vertex_count() - 1);
        std::iota(ks.begin(), ks.end(), 1);
        const auto r = verify_wilmes(g, ks, default_window(g), 1);
        rows[i] = static_cast<int>(r.rows.size());
        for (const auto& row : r.rows) matched[i] += row.match;
    });
    const double t = seconds_since(t0);
    int total = 0, ok = 0;
    std::string first_bad;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        total += rows[i];
        ok += matched[i];
        if (matched[i] != rows[i] && first_bad.empty()) first_bad = " first mismatch: " + serialize_graph(graphs[i]);
    }
    report(7, ok == total && t < 900.0,
           std::to_string(graphs.size()) + " graphs, " + std::to_string(ok) + "/" + std::to_string(total) +
               " (graph, k) rows match, " + fmt_seconds(t) + " (limit 900s, jobs " + std::to_string(jobs) + ")" +
               first_bad);
}

void criterion8(const std::vector<Multigraph>& graphs, int jobs) {
    std::vector<int> bad(graphs.size(), 0);
    std::vector<int> alive_count(graphs.size(), 0);
    parallel_for(graphs.size(), jobs, [&](std::size_t i) {
        const auto& g = graphs[i];
        const int n = g.vertex_count();
        const int top = n - 1;
        const DegreeWindow window{0, g.total_multiplicity() + 1};

        std::set<DivisorClassKey> top_betti;
        for (const auto& row : coarse_betti(g, {top}, window).classes)
            if (row.betti.at(top) > 0) top_betti.insert(row.key);

        std::set<DivisorClassKey> minimally_alive;
        for (auto deg = window.lo; deg <= window.hi; ++deg) {
            std::set<Divisor> reps;
            for (const auto& e : effective_divisors_of_degree(n, deg)) reps.insert(q_reduce(g, e, 0));
            for (const auto& r : reps)
                if (is_minimally_alive(g, r)) minimally_alive.insert({0, r});
        }

        std::set<DivisorClassKey> full_boundary;
        const ConnectedPartition full = enumerate_connected_partitions(g, n).front();
        for (const auto& d : all_boundary_divisors(g, full)) full_boundary.insert(class_key(g, d));
        const auto q = quotient(g, full);
        for (Orientation o : enumerate_acyclic_orientations(q)) full_boundary.insert(class_key(g, f_map(g, q, o)));

        alive_count[i] = static_cast<int>(minimally_alive.size());
        bad[i] = !(top_betti == minimally_alive && full_boundary == minimally_alive);
    });
    const int failures_here = std::accumulate(bad.begin(), bad.end(), 0);
    const int classes = std::accumulate(alive_count.begin(), alive_count.end(), 0);
    std::string first_bad;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (bad[i]) {
            first_bad = " first failure: " + serialize_graph(graphs[i]);
            break;
        }
    report(8, failures_here == 0,
           std::to_string(graphs.size() - failures_here) + "/" + std::to_string(graphs.size()) +
               " graphs agree (top Betti classes = minimally alive = full-partition boundary), " +
               std::to_string(classes) + " minimally alive classes" + first_bad);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int jobs = default_jobs();
    std::uint64_t seed = 20240601;
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Seed for the property suite");
    CLI11_PARSE(app, argc, argv);

    auto guarded = [](int id, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            report(id, false, std::string("exception: ") + e.what());
        }
    };
    guarded(1, criterion1);
    guarded(2, criterion2);
    guarded(3, criterion3);
    guarded(4, criterion4);
    guarded(5, criterion5);
    guarded(6, [&] { criterion6(seed); });
    const auto graphs = corpus(4, 6);
    guarded(7, [&] { criterion7(graphs, jobs); });
    guarded(8, [&] { criterion8(graphs, jobs); });
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures;
}
