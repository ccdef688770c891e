#include "chipfire/orientation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace chipfire {

Arc arc(const QuotientGraph& q, Orientation o, int edge) {
    const auto [i, j] = q.edges[edge];
    return ((o.forward >> edge) & 1U) ? Arc{i, j} : Arc{j, i};
}

namespace {

std::vector<std::vector<int>> successors(const QuotientGraph& q, Orientation o) {
    std::vector<std::vector<int>> out(q.block_count());
    for (int e = 0; e < static_cast<int>(q.edges.size()); ++e) {
        const Arc a = arc(q, o, e);
        out[a.tail].push_back(a.head);
    }
    return out;
}

void check_edge_count(const QuotientGraph& q) {
    if (q.edges.size() > 64) throw std::length_error("quotient graph has more than 64 edges");
}

// Edges with exactly one endpoint in `blocks`, and the subset whose lower
// endpoint is inside.
struct Frontier {
    std::uint64_t edges = 0;
    std::uint64_t low_inside = 0;
};

Frontier frontier_of(const QuotientGraph& q, VertexSet blocks) {
    Frontier f;
    for (int e = 0; e < static_cast<int>(q.edges.size()); ++e) {
        const auto [i, j] = q.edges[e];
        const bool in_i = blocks.contains(i);
        const bool in_j = blocks.contains(j);
        if (in_i == in_j) continue;
        f.edges |= std::uint64_t{1} << e;
        if (in_i) f.low_inside |= std::uint64_t{1} << e;
    }
    return f;
}

// Frontier edges whose tail is inside.
std::uint64_t leaving(const Frontier& f, Orientation o) {
    return (o.forward & f.low_inside) | (~o.forward & f.edges & ~f.low_inside);
}

}  // namespace

VertexSet reachable_from(const QuotientGraph& q, Orientation o, int s) {
    const auto succ = successors(q, o);
    VertexSet seen = VertexSet::single(s);
    std::vector<int> stack{s};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : succ[v]) {
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

bool is_acyclic(const QuotientGraph& q, Orientation o) {
    // Kahn's algorithm
    const int k = q.block_count();
    const auto succ = successors(q, o);
    std::vector<int> indeg(k, 0);
    for (const auto& out : succ)
        for (int w : out) ++indeg[w];
    std::vector<int> ready;
    for (int v = 0; v < k; ++v)
        if (indeg[v] == 0) ready.push_back(v);
    int done = 0;
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        ++done;
        for (int w : succ[v])
            if (--indeg[w] == 0) ready.push_back(w);
    }
    return done == k;
}

VertexSet sources(const QuotientGraph& q, Orientation o) {
    VertexSet out = VertexSet::range(q.block_count());
    for (int e = 0; e < static_cast<int>(q.edges.size()); ++e) out.erase(arc(q, o, e).head);
    return out;
}

std::vector<Orientation> enumerate_acyclic_orientations(const QuotientGraph& q) {
    check_edge_count(q);
    const int m = static_cast<int>(q.edges.size());
    const int k = q.block_count();
    std::vector<Orientation> out;
    // reach[v]: blocks reachable from v using the arcs fixed so far
    std::vector<VertexSet> reach(k);
    for (int v = 0; v < k; ++v) reach[v] = VertexSet::single(v);
    Orientation cur;

    auto rec = [&](auto&& self, int e) -> void {
        if (e == m) {
            out.push_back(cur);
            return;
        }
        const auto [i, j] = q.edges[e];
        for (int dir = 1; dir >= 0; --dir) {
            const int tail = dir ? i : j;
            const int head = dir ? j : i;
            if (reach[head].contains(tail)) continue;  // would close a cycle
            const auto saved = reach;
            for (int v = 0; v < k; ++v) {
                if (reach[v].contains(tail)) reach[v] |= reach[head];
            }
            if (dir) cur.forward |= std::uint64_t{1} << e;
            else cur.forward &= ~(std::uint64_t{1} << e);
            self(self, e + 1);
            reach = saved;
        }
        cur.forward &= ~(std::uint64_t{1} << e);
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Orientation> enumerate_aus(const QuotientGraph& q, int source) {
    if (source < 0 || source >= q.block_count()) throw std::out_of_range("enumerate_aus: no such block");
    std::vector<Orientation> out;
    for (Orientation o : enumerate_acyclic_orientations(q)) {
        if (sources(q, o) == VertexSet::single(source)) out.push_back(o);
    }
    return out;
}

Divisor f_map(const Multigraph& g, const QuotientGraph& q, Orientation o) {
    Divisor d(g.vertex_count());
    for (int e = 0; e < static_cast<int>(q.edges.size()); ++e) {
        const Arc a = arc(q, o, e);
        const VertexSet tail = q.partition.block(a.tail);
        for (Vertex v : q.partition.block(a.head)) d[v] += g.degree_into(v, tail);
    }
    return d;
}

Divisor boundary_divisor(const Multigraph& g, const ConnectedPartition& p, const BoundaryDivisorChoice& choice) {
    if (choice.sequence.size() != choice.chosen.size()) {
        throw std::invalid_argument("boundary_divisor: one side must be chosen per cut");
    }
    const auto comps = apply_generating_sequence(g, p, choice.sequence);
    if (static_cast<int>(comps.size()) != p.size()) {
        throw std::invalid_argument("boundary_divisor: sequence does not generate the partition");
    }
    Divisor d(g.vertex_count());
    for (std::size_t i = 0; i < choice.sequence.size(); ++i) {
        const CutStep& step = choice.sequence[i];
        const VertexSet x = choice.chosen[i];
        if (x != step.side && x != step.other()) {
            throw std::invalid_argument("boundary_divisor: chosen side is not produced by its cut");
        }
        const VertexSet a = p.vertices_of(step.side);
        const VertexSet b = p.vertices_of(step.other());
        for (Vertex v : p.vertices_of(x)) d[v] += crossing_degree(g, a, b, v);
    }
    return d;
}

Orientation orientation_from_choice(const QuotientGraph& q, const BoundaryDivisorChoice& choice) {
    Orientation o;
    for (int e = 0; e < static_cast<int>(q.edges.size()); ++e) {
        const auto [i, j] = q.edges[e];
        bool found = false;
        for (std::size_t s = 0; s < choice.sequence.size() && !found; ++s) {
            const CutStep& step = choice.sequence[s];
            const bool i_side = step.side.contains(i);
            const bool j_side = step.side.contains(j);
            if (!step.component.contains(i) || !step.component.contains(j) || i_side == j_side) continue;
            found = true;
            if (choice.chosen[s].contains(j)) o.forward |= std::uint64_t{1} << e;
        }
        if (!found) throw std::invalid_argument("orientation_from_choice: edge never severed");
    }
    return o;
}

std::set<DivisorClassKey> boundary_divisor_classes(const Multigraph& g, const ConnectedPartition& p) {
    if (p.size() < 2) throw std::invalid_argument("boundary_divisor_classes: partition has one block");
    const QuotientGraph q = quotient(g, p);
    std::set<DivisorClassKey> keys;
    for (Orientation o : enumerate_aus(q, p.block_of(0))) keys.insert(class_key(g, f_map(g, q, o), 0));
    return keys;
}

std::vector<Divisor> all_boundary_divisors(const Multigraph& g, const ConnectedPartition& p) {
    std::set<Divisor> out;
    for (const auto& seq : generating_sequences(g, p)) {
        const std::size_t k = seq.size();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
            BoundaryDivisorChoice choice{seq, {}};
            for (std::size_t i = 0; i < k; ++i) {
                choice.chosen.push_back(((mask >> i) & 1U) ? seq[i].other() : seq[i].side);
            }
            out.insert(boundary_divisor(g, p, choice));
        }
    }
    return {out.begin(), out.end()};
}

bool is_critical(const QuotientGraph& q, Orientation o, VertexSet blocks) {
    const Frontier f = frontier_of(q, blocks);
    const std::uint64_t out = leaving(f, o);
    return out == 0 || out == f.edges;
}

Orientation switch_at(const QuotientGraph& q, Orientation o, VertexSet blocks) {
    if (!is_critical(q, o, blocks)) throw std::invalid_argument("switch_at: block set is not critical");
    return Orientation{o.forward ^ frontier_of(q, blocks).edges};
}

std::set<Orientation> switch_class(const QuotientGraph& q, Orientation o) {
    if (static_cast<int>(q.edges.size()) > max_switch_bfs_edges) {
        throw std::length_error("switch search limited to small quotient graphs");
    }
    // A set and its complement switch the same edges; fix block 0 inside.
    const int k = q.block_count();
    std::vector<Frontier> frontiers;
    for (std::uint64_t rest = 0; rest < (std::uint64_t{1} << (k - 1)); ++rest) {
        const VertexSet blocks{(rest << 1) | 1U};
        if (blocks == VertexSet::range(k)) continue;
        frontiers.push_back(frontier_of(q, blocks));
    }
    std::set<Orientation> seen{o};
    std::deque<Orientation> todo{o};
    while (!todo.empty()) {
        const Orientation cur = todo.front();
        todo.pop_front();
        for (const auto& f : frontiers) {
            const std::uint64_t out = leaving(f, cur);
            if (out != 0 && out != f.edges) continue;
            const Orientation next{cur.forward ^ f.edges};
            if (seen.insert(next).second) todo.push_back(next);
        }
    }
    return seen;
}

bool switch_equivalent(const QuotientGraph& q, Orientation o1, Orientation o2) {
    return switch_class(q, o1).contains(o2);
}

bool f_equivalent(const Multigraph& g, const QuotientGraph& q, Orientation o1, Orientation o2) {
    return equivalent(g, f_map(g, q, o1), f_map(g, q, o2));
}

bool orientations_equivalent(const Multigraph& g, const QuotientGraph& q, Orientation o1, Orientation o2) {
    const bool by_class = f_equivalent(g, q, o1, o2);
    if (static_cast<int>(q.edges.size()) <= max_switch_bfs_edges) {
        if (switch_equivalent(q, o1, o2) != by_class) {
            throw std::logic_error("switch search and divisor classes disagree on orientation equivalence");
        }
    }
    return by_class;
}

Orientation pump_step(const QuotientGraph& q, Orientation o, int s) {
    const VertexSet reach = reachable_from(q, o, s);
    return Orientation{o.forward ^ frontier_of(q, reach).edges};
}

std::string format_orientation(const QuotientGraph& q, Orientation o) {
    std::string out;
    for (int e = 0; e < static_cast<int>(q.edges.size()); ++e) {
        const Arc a = arc(q, o, e);
        if (e > 0) out += ',';
        out += q.multi.name(a.tail) + "->" + q.multi.name(a.head);
    }
    return out;
}

}  // namespace chipfire
