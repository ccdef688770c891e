#include "chipfire/multigraph.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "chipfire/linalg.hpp"

namespace chipfire {

Multigraph::Multigraph(std::vector<std::string> names,
                       const std::vector<std::tuple<Vertex, Vertex, int>>& edges)
    : names_(std::move(names)) {
    const int n = vertex_count();
    if (n == 0) throw GraphError(GraphErrorKind::empty_input, "graph has no vertices");
    if (n > max_vertices) {
        throw GraphError(GraphErrorKind::too_many_vertices,
                         "graph has " + std::to_string(n) + " vertices; at most 64 supported");
    }
    for (auto [u, v, m] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw GraphError(GraphErrorKind::loop, "loop at vertex '" + names_[u] + "'");
        if (m <= 0) {
            throw GraphError(GraphErrorKind::non_positive_multiplicity,
                             "edge " + names_[u] + "-" + names_[v] + " has multiplicity " + std::to_string(m));
        }
        mult_[{std::min(u, v), std::max(u, v)}] += m;
        total_ += m;
    }
    adj_.assign(n, {});
    degree_.assign(n, 0);
    for (const auto& [pair, m] : mult_) {
        adj_[pair.first].push_back({pair.second, m});
        adj_[pair.second].push_back({pair.first, m});
        degree_[pair.first] += m;
        degree_[pair.second] += m;
    }
    if (!is_connected_subset(vertices())) {
        throw GraphError(GraphErrorKind::disconnected, "graph is not connected");
    }
}

Vertex Multigraph::index_of(std::string_view name) const {
    for (int i = 0; i < vertex_count(); ++i) {
        if (names_[i] == name) return i;
    }
    throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
}

int Multigraph::mult(Vertex u, Vertex v) const {
    if (u == v) return 0;
    auto it = mult_.find({std::min(u, v), std::max(u, v)});
    return it == mult_.end() ? 0 : it->second;
}

int Multigraph::degree_into(Vertex v, VertexSet set) const {
    int d = 0;
    for (const auto& nb : adj_[v]) {
        if (set.contains(nb.vertex)) d += nb.mult;
    }
    return d;
}

bool Multigraph::is_connected_subset(VertexSet set) const {
    if (set.empty()) return false;
    VertexSet seen = VertexSet::single(set.front());
    std::vector<Vertex> stack{set.front()};
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const auto& nb : adj_[v]) {
            if (set.contains(nb.vertex) && !seen.contains(nb.vertex)) {
                seen.insert(nb.vertex);
                stack.push_back(nb.vertex);
            }
        }
    }
    return seen == set;
}

Multigraph load_graph(std::string_view text) {
    std::vector<std::string> names;
    std::unordered_map<std::string, Vertex> index;
    std::vector<std::tuple<Vertex, Vertex, int>> edges;
    auto intern = [&](const std::string& name) {
        auto [it, inserted] = index.emplace(name, static_cast<Vertex>(names.size()));
        if (inserted) names.push_back(name);
        return it->second;
    };

    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (tok.size() < 2 || tok.size() > 3) {
            throw GraphError(GraphErrorKind::malformed_line,
                             "line " + std::to_string(line_no) + ": expected '<u> <v> [m]'");
        }
        long m = 1;
        if (tok.size() == 3) {
            std::size_t used = 0;
            try {
                m = std::stol(tok[2], &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok[2].size()) {
                throw GraphError(GraphErrorKind::malformed_line,
                                 "line " + std::to_string(line_no) + ": bad multiplicity '" + tok[2] + "'");
            }
        }
        if (tok[0] == tok[1]) {
            throw GraphError(GraphErrorKind::loop,
                             "line " + std::to_string(line_no) + ": loop at vertex '" + tok[0] + "'");
        }
        if (m <= 0) {
            throw GraphError(GraphErrorKind::non_positive_multiplicity,
                             "line " + std::to_string(line_no) + ": multiplicity must be positive");
        }
        Vertex u = intern(tok[0]);
        Vertex v = intern(tok[1]);
        edges.emplace_back(u, v, static_cast<int>(m));
    }
    if (edges.empty()) throw GraphError(GraphErrorKind::empty_input, "no edges in input");
    return Multigraph(std::move(names), edges);
}

Multigraph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_graph(buf.str());
}

std::string serialize_graph(const Multigraph& g) {
    // Emit edges grouped by their later endpoint so every vertex first shows
    // up in index order. A vertex with no earlier neighbour is introduced
    // together with its successor.
    std::ostringstream out;
    const int n = g.vertex_count();
    std::vector<bool> emitted_pair(n, false);
    auto line = [&](Vertex u, Vertex v) {
        out << g.name(u) << ' ' << g.name(v) << ' ' << g.mult(u, v) << '\n';
    };
    for (Vertex j = 1; j < n; ++j) {
        bool has_earlier = false;
        for (Vertex i = 0; i < j; ++i) {
            if (g.mult(i, j) > 0) has_earlier = true;
        }
        if (!has_earlier && j + 1 < n && g.mult(j, j + 1) > 0) {
            line(j, j + 1);
            emitted_pair[j + 1] = true;
            continue;
        }
        for (Vertex i = 0; i < j; ++i) {
            if (g.mult(i, j) == 0) continue;
            if (i == j - 1 && emitted_pair[j]) continue;
            line(i, j);
        }
    }
    return out.str();
}

IntMatrix laplacian(const Multigraph& g) {
    const int n = g.vertex_count();
    IntMatrix lap(n, n);
    for (Vertex v = 0; v < n; ++v) lap(v, v) = g.degree(v);
    for (const auto& [pair, m] : g.edges()) {
        lap(pair.first, pair.second) = -m;
        lap(pair.second, pair.first) = -m;
    }
    return lap;
}

std::int64_t spanning_tree_count(const Multigraph& g) {
    const int n = g.vertex_count();
    IntMatrix lap = laplacian(g);
    IntMatrix reduced(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) reduced(i - 1, j - 1) = lap(i, j);
    return exact_determinant(reduced);
}

int crossing_degree(const Multigraph& g, VertexSet a, VertexSet b, Vertex v) {
    if (a.intersects(b)) throw std::invalid_argument("crossing_degree: sets are not disjoint");
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("crossing_degree: unknown vertex");
    if (a.contains(v)) return g.degree_into(v, b);
    if (b.contains(v)) return g.degree_into(v, a);
    return 0;
}

VertexSet neighbor_set(const Multigraph& g, VertexSet set) {
    VertexSet out;
    for (Vertex v : set) {
        for (const auto& nb : g.neighbors(v)) out.insert(nb.vertex);
    }
    return out - set;
}

std::vector<VertexSet> components_within(const Multigraph& g, VertexSet within) {
    std::vector<VertexSet> comps;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.front());
        std::vector<Vertex> stack{left.front()};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (const auto& nb : g.neighbors(v)) {
                if (within.contains(nb.vertex) && !comp.contains(nb.vertex)) {
                    comp.insert(nb.vertex);
                    stack.push_back(nb.vertex);
                }
            }
        }
        comps.push_back(comp);
        left = left - comp;
    }
    return comps;
}

std::string format_vertex_set(const Multigraph& g, VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first) out += ',';
        out += g.name(v);
        first = false;
    }
    return out + "}";
}

}  // namespace chipfire
