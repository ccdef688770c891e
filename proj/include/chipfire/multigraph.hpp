#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "chipfire/vertex_set.hpp"

namespace chipfire {

enum class GraphErrorKind {
    empty_input,
    malformed_line,
    loop,
    non_positive_multiplicity,
    disconnected,
    too_many_vertices,
};

class GraphError : public std::runtime_error {
public:
    GraphError(GraphErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    GraphErrorKind kind() const { return kind_; }

private:
    GraphErrorKind kind_;
};

// Dense square integer matrix, row-major.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> data;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

struct Neighbor {
    Vertex vertex;
    int mult;
};

// Undirected, connected, loopless multigraph on named vertices.
//
// Vertex indices follow the order the names were supplied in; for graphs read
// with load_graph that is first-appearance order. Immutable once built.
class Multigraph {
public:
    static constexpr int max_vertices = 64;

    // Throws GraphError on loops, non-positive multiplicities, unknown names
    // or a disconnected result. Repeated pairs accumulate.
    Multigraph(std::vector<std::string> names,
               const std::vector<std::tuple<Vertex, Vertex, int>>& edges);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    VertexSet vertices() const { return VertexSet::range(vertex_count()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Vertex v) const { return names_.at(v); }
    Vertex index_of(std::string_view name) const;  // throws std::out_of_range

    int mult(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return degree_[v]; }
    const std::vector<Neighbor>& neighbors(Vertex v) const { return adj_[v]; }

    // Pair-keyed multiplicities, keys (u, v) with u < v.
    const std::map<std::pair<Vertex, Vertex>, int>& edges() const { return mult_; }
    std::int64_t total_multiplicity() const { return total_; }
    int simple_edge_count() const { return static_cast<int>(mult_.size()); }

    // Edges (with multiplicity) from v into the set.
    int degree_into(Vertex v, VertexSet set) const;
    bool is_connected_subset(VertexSet set) const;
    // Underlying simple graph is a tree.
    bool is_multi_edged_tree() const { return simple_edge_count() == vertex_count() - 1; }

    friend bool operator==(const Multigraph& a, const Multigraph& b) {
        return a.names_ == b.names_ && a.mult_ == b.mult_;
    }

private:
    std::vector<std::string> names_;
    std::map<std::pair<Vertex, Vertex>, int> mult_;
    std::vector<std::vector<Neighbor>> adj_;
    std::vector<int> degree_;
    std::int64_t total_ = 0;
};

// Parses the edge-list format: `<u> <v> [m]` per line, `#` comments,
// repeated pairs accumulate.
Multigraph load_graph(std::string_view text);
Multigraph load_graph_file(const std::string& path);

// Inverse of load_graph for graphs whose vertex order is reachable as a
// first-appearance order (all graphs produced by load_graph are).
std::string serialize_graph(const Multigraph& g);

IntMatrix laplacian(const Multigraph& g);

// Matrix-tree theorem: determinant of the Laplacian with one row/column removed.
std::int64_t spanning_tree_count(const Multigraph& g);

// Edges at v (with multiplicity) running between a and b.
int crossing_degree(const Multigraph& g, VertexSet a, VertexSet b, Vertex v);

// Vertices at distance exactly one from the set.
VertexSet neighbor_set(const Multigraph& g, VertexSet set);

// Connected components of the subgraph induced on `within`.
std::vector<VertexSet> components_within(const Multigraph& g, VertexSet within);

std::string format_vertex_set(const Multigraph& g, VertexSet s);

}  // namespace chipfire
