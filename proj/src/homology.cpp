#include "chipfire/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "chipfire/linalg.hpp"
#include "chipfire/orientation.hpp"
#include "chipfire/parallel.hpp"

namespace chipfire {

SimplicialComplex::SimplicialComplex(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    for (VertexSet s : sets) {
        const bool covered = std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return s.subset_of(f); });
        if (!covered) facets_.push_back(s);
    }
    std::sort(facets_.begin(), facets_.end(), LexLess{});
}

bool SimplicialComplex::contains(VertexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
}

VertexSet SimplicialComplex::vertices() const {
    VertexSet out;
    for (VertexSet f : facets_) out |= f;
    return out;
}

int SimplicialComplex::dimension() const {
    int d = -1;
    for (VertexSet f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

std::vector<VertexSet> SimplicialComplex::faces(int dim) const {
    std::vector<VertexSet> out;
    if (is_void()) return out;
    const int size = dim + 1;
    if (size < 0) return out;
    std::set<std::uint64_t> seen;
    for (VertexSet f : facets_) {
        if (f.size() < size) continue;
        if (f.size() == size) {
            seen.insert(f.bits());
            continue;
        }
        for_each_subset(f, [&](VertexSet s) {
            if (s.size() == size) seen.insert(s.bits());
        });
    }
    for (auto b : seen) out.emplace_back(b);
    std::sort(out.begin(), out.end(), LexLess{});
    return out;
}

std::vector<VertexSet> SimplicialComplex::components() const {
    std::vector<VertexSet> comps;
    for (VertexSet f : facets_) {
        if (f.empty()) continue;
        VertexSet merged = f;
        std::vector<VertexSet> keep;
        for (VertexSet c : comps) {
            if (c.intersects(merged)) merged |= c;
            else keep.push_back(c);
        }
        keep.push_back(merged);
        comps = std::move(keep);
    }
    std::sort(comps.begin(), comps.end(), [](VertexSet a, VertexSet b) { return a.front() < b.front(); });
    return comps;
}

SimplicialComplex complex_of_members(const std::vector<Divisor>& members) {
    std::vector<VertexSet> supports;
    supports.reserve(members.size());
    for (const auto& m : members) supports.push_back(m.support());
    return SimplicialComplex(std::move(supports));
}

SimplicialComplex complex_of_divisor(const Multigraph& g, const Divisor& d) {
    return complex_of_members(linear_system(g, d));
}

std::vector<std::vector<std::int64_t>> boundary_rows(const std::vector<VertexSet>& upper,
                                                     const std::vector<VertexSet>& lower) {
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i].bits(), i);
    std::vector<std::vector<std::int64_t>> rows;
    rows.reserve(upper.size());
    for (VertexSet face : upper) {
        std::vector<std::int64_t> row(lower.size(), 0);
        int j = 0;
        for (Vertex v : face) {
            VertexSet child = face;
            child.erase(v);
            auto it = index.find(child.bits());
            if (it == index.end()) throw std::logic_error("boundary_rows: face missing from lower dimension");
            row[it->second] = (j % 2 == 0) ? 1 : -1;
            ++j;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<int> reduced_homology_dims(const SimplicialComplex& c, int max_dim) {
    std::vector<int> dims(static_cast<std::size_t>(std::max(max_dim + 2, 0)), 0);
    if (c.is_void() || max_dim < -1) return dims;
    // faces[d + 1] holds the d-faces, d = -1..max_dim+1
    std::vector<std::vector<VertexSet>> faces;
    for (int d = -1; d <= max_dim + 1; ++d) faces.push_back(c.faces(d));
    // rank of the boundary out of dimension d, d = -1..max_dim+1
    std::vector<int> rank(faces.size(), 0);
    for (int d = 0; d <= max_dim + 1; ++d) {
        const auto& upper = faces[d + 1];
        if (upper.empty()) continue;
        rank[d + 1] = rational_rank(boundary_rows(upper, faces[d]));
    }
    for (int d = -1; d <= max_dim; ++d) {
        dims[d + 1] = static_cast<int>(faces[d + 1].size()) - rank[d + 1] - rank[d + 2];
    }
    return dims;
}

int betti_kD(const Multigraph& g, const Divisor& d, int k) {
    if (k < 1) throw std::invalid_argument("betti_kD: k must be at least 1");
    return reduced_homology_dims(complex_of_divisor(g, d), k - 1)[k];
}

DegreeWindow default_window(const Multigraph& g) { return {0, g.total_multiplicity()}; }

BettiReport coarse_betti(const Multigraph& g, const std::vector<int>& ks, DegreeWindow window, Vertex sink,
                         int jobs) {
    if (window.hi < window.lo) throw std::invalid_argument("coarse_betti: empty degree window");
    for (int k : ks) {
        if (k < 1) throw std::invalid_argument("coarse_betti: k must be at least 1");
    }
    BettiReport report{ks, window, {}, {}, {}};
    for (int k : ks) report.coarse[k] = 0;
    const int max_k = ks.empty() ? 1 : *std::max_element(ks.begin(), ks.end());

    // Group the effective divisors of each degree by class. Every class in an
    // effective degree-d class appears; the reduced key equals
    // c + (d - deg c) * 1_sink for its superstable c.
    const std::int64_t lo = std::max<std::int64_t>(window.lo, 0);
    std::vector<std::int64_t> degrees;
    for (auto d = lo; d <= window.hi; ++d) degrees.push_back(d);
    std::vector<std::map<Divisor, std::vector<Divisor>>> grouped(degrees.size());
    parallel_for(degrees.size(), jobs, [&](std::size_t i) {
        for (auto& e : effective_divisors_of_degree(g.vertex_count(), degrees[i])) {
            grouped[i][q_reduce(g, e, sink)].push_back(std::move(e));
        }
    });

    struct Task {
        std::int64_t degree;
        const Divisor* key;
        const std::vector<Divisor>* members;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        for (const auto& [key, members] : grouped[i]) tasks.push_back({degrees[i], &key, &members});
    }
    std::vector<std::vector<int>> dims(tasks.size());
    parallel_for(tasks.size(), jobs, [&](std::size_t i) {
        dims[i] = reduced_homology_dims(complex_of_members(*tasks[i].members), max_k - 1);
    });

    for (std::size_t i = 0; i < tasks.size(); ++i) {
        BettiRow row{{sink, *tasks[i].key}, tasks[i].degree, {}};
        bool nonzero = false;
        for (int k : ks) {
            const int b = dims[i][k];
            row.betti[k] = b;
            report.coarse[k] += b;
            nonzero = nonzero || b > 0;
        }
        if (!nonzero) continue;
        const bool low_edge = row.degree == window.lo && window.lo > 0;
        const bool high_edge = row.degree == window.hi && window.hi < g.total_multiplicity();
        if (low_edge || high_edge) {
            report.warnings.push_back("nonzero Betti number at window edge degree " + std::to_string(row.degree) +
                                      "; classes beyond the window were not scanned");
        }
        report.classes.push_back(std::move(row));
    }
    return report;
}

std::vector<Splitting> splittings(const Multigraph& g, const Divisor& d) {
    const auto members = linear_system(g, d);
    const SimplicialComplex c = complex_of_members(members);
    const auto comps = c.components();
    std::vector<Splitting> out;
    if (comps.size() < 2 || comps.size() > 62) return out;
    // members[0] is the smallest; its component stays on the first side
    auto component_of = [&](const Divisor& m) {
        const VertexSet s = m.support();
        for (std::size_t i = 0; i < comps.size(); ++i) {
            if (s.subset_of(comps[i])) return i;
        }
        throw std::logic_error("member support spans two components");
    };
    std::vector<std::size_t> owner;
    for (const auto& m : members) owner.push_back(component_of(m));
    const std::size_t anchor = owner[0];
    const std::size_t free_count = comps.size() - 1;
    // second side: a nonempty subset of the components other than the anchor
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free_count); ++mask) {
        Splitting s;
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::size_t slot = owner[i];
            if (slot == anchor) {
                s.first.push_back(members[i]);
                continue;
            }
            const std::size_t bit = slot < anchor ? slot : slot - 1;
            ((mask >> bit) & 1U ? s.second : s.first).push_back(members[i]);
        }
        out.push_back(std::move(s));
    }
    return out;
}

CutRecovery cut_from_splitting(const Multigraph& g, const Divisor& d, const Splitting& split) {
    if (split.first.empty() || split.second.empty()) throw std::invalid_argument("splitting has an empty side");
    const std::set<Divisor> first(split.first.begin(), split.first.end());
    const std::set<Divisor> second(split.second.begin(), split.second.end());
    auto side_of = [&](const Divisor& m) {
        if (first.contains(m)) return 0;
        if (second.contains(m)) return 1;
        throw std::runtime_error("Dhar walk left the linear system");
    };

    const auto sigma = equivalence_script(g, split.first.front(), split.second.front());
    if (!sigma) throw std::invalid_argument("splitting sides are not equivalent");
    Vertex sink = 0;
    while (sink < g.vertex_count() && (*sigma)[sink] != 0) ++sink;

    const Divisor target = q_reduce(g, split.first.front(), sink);
    const int target_side = side_of(target);
    Divisor cur = target_side == 0 ? split.second.front() : split.first.front();
    const int start_side = 1 - target_side;

    const int n = g.vertex_count();
    while (true) {
        const VertexSet unburnt = dhar_unburnt(g, cur, sink);
        if (unburnt.empty()) throw std::runtime_error("Dhar walk reached the reduced divisor without crossing sides");
        const Divisor next = apply_script(g, cur, Script::indicator(n, unburnt));
        if (side_of(cur) == start_side && side_of(next) != start_side) {
            CutRecovery rec{{}, cur, next, {}};
            const VertexSet s_t = cur.support();
            const VertexSet s_next = next.support();
            for (const auto& [pair, m] : g.edges()) {
                auto [u, v] = pair;
                if ((s_t.contains(u) && s_next.contains(v)) || (s_t.contains(v) && s_next.contains(u))) {
                    rec.severed.emplace_back(u, v);
                }
            }
            // components after deleting the severed edges
            std::vector<int> comp(n, -1);
            int count = 0;
            for (Vertex start = 0; start < n; ++start) {
                if (comp[start] >= 0) continue;
                std::vector<Vertex> stack{start};
                comp[start] = count;
                while (!stack.empty()) {
                    Vertex v = stack.back();
                    stack.pop_back();
                    for (const auto& nb : g.neighbors(v)) {
                        const bool cut_edge = (s_t.contains(v) && s_next.contains(nb.vertex)) ||
                                              (s_next.contains(v) && s_t.contains(nb.vertex));
                        if (cut_edge || comp[nb.vertex] >= 0) continue;
                        comp[nb.vertex] = count;
                        stack.push_back(nb.vertex);
                    }
                }
                ++count;
            }
            if (count != 2 || rec.severed.empty()) {
                throw std::runtime_error("recovered edge set does not split the graph in two");
            }
            VertexSet side_a;
            for (Vertex v = 0; v < n; ++v)
                if (comp[v] == comp[s_t.front()]) side_a.insert(v);
            const VertexSet side_b = g.vertices() - side_a;
            if (!s_t.subset_of(side_a) || !s_next.subset_of(side_b)) {
                throw std::runtime_error("consecutive supports are not separated by the recovered cut");
            }
            rec.cut = ConnectedPartition(g, {side_a, side_b});
            Divisor boundary(n);
            for (Vertex v : side_a) boundary[v] = crossing_degree(g, side_a, side_b, v);
            if (!equivalent(g, boundary, d)) {
                throw std::runtime_error("boundary divisor of the recovered cut is not equivalent to D");
            }
            return rec;
        }
        cur = next;
    }
}

}  // namespace chipfire
