#pragma once

// Brute-force reference implementations. They share only the graph and
// divisor containers with the library and deliberately use the most direct
// definition available.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/multigraph.hpp"

namespace oracle {

using chipfire::Divisor;
using chipfire::Multigraph;
using chipfire::Vertex;
using chipfire::VertexSet;

inline bool connected_within(const Multigraph& g, VertexSet s) {
    if (s.empty()) return false;
    VertexSet seen = VertexSet::single(s.front());
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& [pair, m] : g.edges()) {
            auto [u, v] = pair;
            if (!s.contains(u) || !s.contains(v)) continue;
            if (seen.contains(u) != seen.contains(v)) {
                seen.insert(u);
                seen.insert(v);
                grew = true;
            }
        }
    }
    return seen == s;
}

// Spanning trees counted with multiplicity: every (n-1)-subset of simple
// edges that connects the graph contributes the product of multiplicities.
inline std::int64_t spanning_trees(const Multigraph& g) {
    std::vector<std::pair<std::pair<Vertex, Vertex>, int>> es(g.edges().begin(), g.edges().end());
    const int n = g.vertex_count();
    const int m = static_cast<int>(es.size());
    std::int64_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (std::popcount(mask) != n - 1) continue;
        std::vector<int> comp(n);
        std::iota(comp.begin(), comp.end(), 0);
        std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
        bool forest = true;
        std::int64_t weight = 1;
        for (int e = 0; e < m && forest; ++e) {
            if (!((mask >> e) & 1U)) continue;
            int a = find(es[e].first.first), b = find(es[e].first.second);
            if (a == b) forest = false;
            comp[a] = b;
            weight *= es[e].second;
        }
        if (forest) total += weight;
    }
    return total;
}

// Set partitions via restricted growth strings, keeping those whose blocks
// are all connected.
inline std::vector<std::vector<VertexSet>> connected_partitions(const Multigraph& g, int parts) {
    const int n = g.vertex_count();
    std::vector<std::vector<VertexSet>> out;
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            if (used != parts) return;
            std::vector<VertexSet> blocks(parts);
            for (int v = 0; v < n; ++v) blocks[rgs[v]].insert(v);
            for (auto b : blocks)
                if (!connected_within(g, b)) return;
            out.push_back(blocks);
            return;
        }
        for (int b = 0; b <= std::min(used, parts - 1); ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    rec(0, 0);
    return out;
}

// Acyclic orientations of a simple graph on `n` nodes: all 2^m directions,
// kept when the transitive closure has no node reaching itself.
inline int acyclic_orientation_count(int n, const std::vector<std::pair<int, int>>& edges, int unique_source = -1) {
    const int m = static_cast<int>(edges.size());
    int count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
        std::vector<int> indeg(n, 0);
        for (int e = 0; e < m; ++e) {
            auto [a, b] = edges[e];
            if (!((mask >> e) & 1U)) std::swap(a, b);
            reach[a][b] = true;
            ++indeg[b];
        }
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (reach[i][k] && reach[k][j]) reach[i][j] = true;
        bool acyclic = true;
        for (int i = 0; i < n; ++i)
            if (reach[i][i]) acyclic = false;
        if (!acyclic) continue;
        if (unique_source >= 0) {
            bool ok = true;
            for (int i = 0; i < n; ++i)
                if ((indeg[i] == 0) != (i == unique_source)) ok = false;
            if (!ok) continue;
        }
        ++count;
    }
    return count;
}

inline Divisor fire(const Multigraph& g, Divisor d, const std::vector<std::int64_t>& sigma) {
    for (const auto& [pair, m] : g.edges()) {
        auto [u, v] = pair;
        const std::int64_t flow = (sigma[u] - sigma[v]) * m;
        d[u] -= flow;
        d[v] += flow;
    }
    return d;
}

// Searches scripts with entries in [0, bound] and at least one zero.
inline bool equivalent_by_search(const Multigraph& g, const Divisor& d0, const Divisor& d1, int bound) {
    if (d0.degree() != d1.degree()) return false;
    const int n = g.vertex_count();
    std::vector<std::int64_t> sigma(n, 0);
    std::function<bool(int)> rec = [&](int i) {
        if (i == n) {
            if (*std::min_element(sigma.begin(), sigma.end()) != 0) return false;
            return fire(g, d0, sigma) == d1;
        }
        for (int s = 0; s <= bound; ++s) {
            sigma[i] = s;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

inline std::vector<Divisor> linear_system(const Multigraph& g, const Divisor& d, int bound) {
    std::vector<Divisor> out;
    if (d.degree() < 0) return out;
    const int n = g.vertex_count();
    Divisor e(n);
    std::function<void(int, std::int64_t)> rec = [&](int v, std::int64_t left) {
        if (v == n - 1) {
            e[v] = left;
            if (equivalent_by_search(g, d, e, bound)) out.push_back(e);
            return;
        }
        for (std::int64_t x = 0; x <= left; ++x) {
            e[v] = x;
            rec(v + 1, left - x);
        }
    };
    rec(0, d.degree());
    return out;
}

// Superstable by definition: no nonempty S inside V - q can fire once and
// stay nonnegative on S.
inline bool superstable_by_definition(const Multigraph& g, const Divisor& c, Vertex q) {
    const VertexSet off = g.vertices() - VertexSet::single(q);
    for (Vertex v : off)
        if (c[v] < 0) return false;
    bool ok = true;
    chipfire::for_each_subset(off, [&](VertexSet s) {
        if (s.empty() || !ok) return;
        bool legal = true;
        for (Vertex v : s) {
            int out = 0;
            for (const auto& nb : g.neighbors(v))
                if (!s.contains(nb.vertex)) out += nb.mult;
            if (c[v] < out) legal = false;
        }
        if (legal) ok = false;
    });
    return ok;
}

inline std::vector<Divisor> superstables(const Multigraph& g, Vertex q) {
    const int n = g.vertex_count();
    std::vector<Divisor> out;
    Divisor c(n);
    std::function<void(int)> rec = [&](int v) {
        if (v == n) {
            if (superstable_by_definition(g, c, q)) out.push_back(c);
            return;
        }
        if (v == q) return rec(v + 1);
        for (int x = 0; x < g.degree(v); ++x) {
            c[v] = x;
            rec(v + 1);
        }
        c[v] = 0;
    };
    rec(0);
    return out;
}

inline std::vector<Divisor> maximal_superstables(const Multigraph& g, Vertex q) {
    const auto all = superstables(g, q);
    const std::set<Divisor> pool(all.begin(), all.end());
    std::vector<Divisor> out;
    for (const auto& c : all) {
        bool maximal = true;
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            if (v == q) continue;
            Divisor up = c;
            up[v] += 1;
            if (pool.contains(up)) maximal = false;
        }
        if (maximal) out.push_back(c);
    }
    return out;
}

// Rank over Q by plain Gaussian elimination on rationals.
inline int rank_q(std::vector<std::vector<mpq_class>> a) {
    int rank = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) pivot = r;
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (int j = c; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Reduced homology dimensions of the complex generated by `facets`, for
// dimensions -1..max_dim, by direct face enumeration.
inline std::vector<int> reduced_homology(const std::vector<VertexSet>& facets, int max_dim) {
    std::vector<int> out(max_dim + 2, 0);
    if (facets.empty()) return out;
    std::map<int, std::vector<VertexSet>> by_size;
    std::set<std::uint64_t> seen;
    for (auto f : facets) {
        chipfire::for_each_subset(f, [&](VertexSet s) {
            if (seen.insert(s.bits()).second) by_size[s.size()].push_back(s);
        });
    }
    for (auto& [sz, fs] : by_size) std::sort(fs.begin(), fs.end());
    auto boundary_rank = [&](int size) {
        if (size == 0 || !by_size.contains(size)) return 0;
        const auto& up = by_size[size];
        const auto& low = by_size[size - 1];
        std::vector<std::vector<mpq_class>> m(up.size(), std::vector<mpq_class>(low.size(), 0));
        for (std::size_t i = 0; i < up.size(); ++i) {
            int j = 0;
            for (Vertex v : up[i]) {
                VertexSet child = up[i];
                child.erase(v);
                const auto pos = std::lower_bound(low.begin(), low.end(), child) - low.begin();
                m[i][pos] = (j % 2 == 0) ? 1 : -1;
                ++j;
            }
        }
        return rank_q(m);
    };
    for (int d = -1; d <= max_dim; ++d) {
        const int size = d + 1;
        const int faces = by_size.contains(size) ? static_cast<int>(by_size[size].size()) : 0;
        out[d + 1] = faces - boundary_rank(size) - boundary_rank(size + 1);
    }
    return out;
}

}  // namespace oracle
