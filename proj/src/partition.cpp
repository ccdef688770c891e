#include "chipfire/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chipfire {

ConnectedPartition::ConnectedPartition(const Multigraph& g, std::vector<VertexSet> blocks)
    : blocks_(std::move(blocks)) {
    VertexSet seen;
    for (VertexSet b : blocks_) {
        if (b.empty()) throw std::invalid_argument("partition has an empty block");
        if (b.intersects(seen)) throw std::invalid_argument("partition blocks overlap");
        if (!g.is_connected_subset(b)) throw std::invalid_argument("partition block is not connected");
        seen |= b;
    }
    if (seen != g.vertices()) throw std::invalid_argument("partition does not cover every vertex");
    std::sort(blocks_.begin(), blocks_.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
}

int ConnectedPartition::block_of(Vertex v) const {
    for (int i = 0; i < size(); ++i) {
        if (blocks_[i].contains(v)) return i;
    }
    throw std::out_of_range("vertex not in partition");
}

VertexSet ConnectedPartition::vertices_of(VertexSet block_indices) const {
    VertexSet out;
    for (int i : block_indices) out |= blocks_.at(i);
    return out;
}

std::vector<ConnectedPartition> enumerate_connected_partitions(const Multigraph& g, int parts) {
    std::vector<ConnectedPartition> out;
    if (parts < 1 || parts > g.vertex_count()) return out;
    std::vector<VertexSet> blocks;
    // The block holding the least unassigned vertex is chosen first, so each
    // partition is produced once.
    auto rec = [&](auto&& self, VertexSet rest) -> void {
        const int used = static_cast<int>(blocks.size());
        if (rest.empty()) {
            if (used == parts) out.emplace_back(g, blocks);
            return;
        }
        if (used >= parts || rest.size() < parts - used) return;
        const Vertex v = rest.front();
        VertexSet others = rest;
        others.erase(v);
        for_each_subset(others, [&](VertexSet s) {
            VertexSet block = s | VertexSet::single(v);
            VertexSet left = rest - block;
            if (used + 1 == parts && !left.empty()) return;
            if (left.size() < parts - used - 1) return;
            if (!g.is_connected_subset(block)) return;
            blocks.push_back(block);
            self(self, left);
            blocks.pop_back();
        });
    };
    rec(rec, g.vertices());
    std::sort(out.begin(), out.end());
    return out;
}

int QuotientGraph::edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{i, j});
    return (it != edges.end() && *it == std::pair{i, j}) ? static_cast<int>(it - edges.begin()) : -1;
}

QuotientGraph quotient(const Multigraph& g, const ConnectedPartition& p) {
    std::vector<std::string> names;
    for (VertexSet b : p.blocks()) names.push_back(format_vertex_set(g, b));
    std::map<std::pair<int, int>, int> mult;
    for (const auto& [pair, m] : g.edges()) {
        int a = p.block_of(pair.first);
        int b = p.block_of(pair.second);
        if (a == b) continue;
        mult[{std::min(a, b), std::max(a, b)}] += m;
    }
    std::vector<std::tuple<Vertex, Vertex, int>> multi_edges;
    std::vector<std::tuple<Vertex, Vertex, int>> simple_edges;
    std::vector<std::pair<int, int>> edges;
    for (const auto& [pair, m] : mult) {
        multi_edges.emplace_back(pair.first, pair.second, m);
        simple_edges.emplace_back(pair.first, pair.second, 1);
        edges.push_back(pair);
    }
    return QuotientGraph{p, Multigraph(names, multi_edges), Multigraph(names, simple_edges), std::move(edges)};
}

namespace {

using State = std::vector<std::uint64_t>;

struct SequenceEnumerator {
    const Multigraph& blocks;  // quotient multigraph, vertices = block indices
    std::map<State, std::vector<GeneratingSequence>> memo;

    const std::vector<GeneratingSequence>& run(const State& state) {
        if (auto it = memo.find(state); it != memo.end()) return it->second;
        std::vector<GeneratingSequence> result;
        bool all_single = true;
        for (std::size_t ci = 0; ci < state.size(); ++ci) {
            const VertexSet comp{state[ci]};
            if (comp.size() < 2) continue;
            all_single = false;
            const Vertex low = comp.front();
            VertexSet rest = comp;
            rest.erase(low);
            for_each_subset(rest, [&](VertexSet s) {
                const VertexSet side = s | VertexSet::single(low);
                const VertexSet other = comp - side;
                if (other.empty()) return;
                if (!blocks.is_connected_subset(side) || !blocks.is_connected_subset(other)) return;
                State next = state;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(ci));
                next.push_back(side.bits());
                next.push_back(other.bits());
                std::sort(next.begin(), next.end());
                for (const auto& tail : run(next)) {
                    GeneratingSequence seq;
                    seq.reserve(tail.size() + 1);
                    seq.push_back({comp, side});
                    seq.insert(seq.end(), tail.begin(), tail.end());
                    result.push_back(std::move(seq));
                }
            });
        }
        if (all_single) result.emplace_back();
        return memo.emplace(state, std::move(result)).first->second;
    }
};

}  // namespace

std::vector<GeneratingSequence> generating_sequences(const Multigraph& g, const ConnectedPartition& p) {
    if (p.size() < 2) return {};
    const QuotientGraph q = quotient(g, p);
    SequenceEnumerator e{q.multi, {}};
    auto out = e.run(State{VertexSet::range(p.size()).bits()});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexSet> apply_generating_sequence(const Multigraph& g, const ConnectedPartition& p,
                                                 const GeneratingSequence& seq) {
    const QuotientGraph q = quotient(g, p);
    std::vector<VertexSet> comps{VertexSet::range(p.size())};
    for (const auto& step : seq) {
        auto it = std::find(comps.begin(), comps.end(), step.component);
        if (it == comps.end()) throw std::invalid_argument("cut step does not act on a current component");
        const VertexSet other = step.other();
        if (step.side.empty() || other.empty() || !step.side.subset_of(step.component) ||
            !q.multi.is_connected_subset(step.side) || !q.multi.is_connected_subset(other)) {
            throw std::invalid_argument("cut step is not a cut of its component");
        }
        comps.erase(it);
        comps.push_back(step.side);
        comps.push_back(other);
    }
    std::sort(comps.begin(), comps.end());
    return comps;
}

bool cuts_intersect(const ConnectedPartition& cut1, const ConnectedPartition& cut2) {
    if (cut1.size() != 2 || cut2.size() != 2) throw std::invalid_argument("cuts_intersect expects two cuts");
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            VertexSet a1 = cut1.block(i), b1 = cut1.block(1 - i);
            VertexSet a2 = cut2.block(j), b2 = cut2.block(1 - j);
            if (a1.subset_of(a2) && b2.subset_of(b1)) return false;
        }
    }
    return true;
}

VertexSet boundary_set(const Multigraph& g, const ConnectedPartition& p, int j, VertexSet others) {
    if (others.contains(j)) throw std::invalid_argument("boundary_set: block listed among its own neighbours");
    const VertexSet target = p.vertices_of(others);
    VertexSet out;
    for (Vertex v : p.block(j)) {
        if (g.degree_into(v, target) > 0) out.insert(v);
    }
    return out;
}

VertexSet partition_boundary(const Multigraph& g, const ConnectedPartition& p) {
    VertexSet out;
    const VertexSet all = VertexSet::range(p.size());
    for (int j = 0; j < p.size(); ++j) {
        VertexSet others = all;
        others.erase(j);
        out |= boundary_set(g, p, j, others);
    }
    return out;
}

std::string format_partition(const Multigraph& g, const ConnectedPartition& p) {
    std::string out;
    for (int i = 0; i < p.size(); ++i) {
        if (i > 0) out += '|';
        out += format_vertex_set(g, p.block(i));
    }
    return out;
}

ConnectedPartition parse_partition(const Multigraph& g, std::string_view text) {
    std::vector<VertexSet> blocks;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] != '{') throw std::invalid_argument("partition block must start with '{'");
        const auto close = text.find('}', pos);
        if (close == std::string_view::npos) throw std::invalid_argument("unterminated partition block");
        VertexSet block;
        std::string_view body = text.substr(pos + 1, close - pos - 1);
        std::size_t start = 0;
        while (start <= body.size()) {
            auto comma = body.find(',', start);
            if (comma == std::string_view::npos) comma = body.size();
            auto name = body.substr(start, comma - start);
            if (!name.empty()) block.insert(g.index_of(name));
            start = comma + 1;
        }
        blocks.push_back(block);
        pos = close + 1;
        if (pos < text.size()) {
            if (text[pos] != '|') throw std::invalid_argument("partition blocks must be separated by '|'");
            ++pos;
        }
    }
    return ConnectedPartition(g, std::move(blocks));
}

}  // namespace chipfire
