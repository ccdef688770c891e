#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chipfire/multigraph.hpp"

namespace chipfire {

// Disjoint connected blocks covering V, ordered by least vertex index.
class ConnectedPartition {
public:
    ConnectedPartition() = default;
    // Sorts the blocks; throws std::invalid_argument unless they are
    // nonempty, disjoint, connected and cover every vertex of g.
    ConnectedPartition(const Multigraph& g, std::vector<VertexSet> blocks);

    int size() const { return static_cast<int>(blocks_.size()); }
    const std::vector<VertexSet>& blocks() const { return blocks_; }
    VertexSet block(int i) const { return blocks_.at(i); }
    int block_of(Vertex v) const;
    // Vertices of the union of the blocks indexed by `block_indices`.
    VertexSet vertices_of(VertexSet block_indices) const;

    friend bool operator==(const ConnectedPartition&, const ConnectedPartition&) = default;
    friend auto operator<=>(const ConnectedPartition&, const ConnectedPartition&) = default;

private:
    std::vector<VertexSet> blocks_;
};

std::vector<ConnectedPartition> enumerate_connected_partitions(const Multigraph& g, int parts);

// G_Pi (block multigraph) and its simple version, with blocks as vertices
// named by their serialized form.
struct QuotientGraph {
    ConnectedPartition partition;
    Multigraph multi;
    Multigraph simple;
    // Simple edges (i, j), i < j, in lexicographic order; indices used by
    // Orientation.
    std::vector<std::pair<int, int>> edges;

    int block_count() const { return partition.size(); }
    int edge_index(int i, int j) const;  // -1 when not adjacent
};

QuotientGraph quotient(const Multigraph& g, const ConnectedPartition& p);

// One step of a generating sequence: `component` (a set of block indices)
// split into `side` and component - side. Stored with `side` the half that
// holds the smaller block index.
struct CutStep {
    VertexSet component;
    VertexSet side;

    VertexSet other() const { return component - side; }
    friend bool operator==(const CutStep&, const CutStep&) = default;
    friend auto operator<=>(const CutStep&, const CutStep&) = default;
};

using GeneratingSequence = std::vector<CutStep>;

std::vector<GeneratingSequence> generating_sequences(const Multigraph& g, const ConnectedPartition& p);

// Applies the steps and returns the resulting components (sets of block
// indices); throws std::invalid_argument when a step does not split a current
// component into two connected parts.
std::vector<VertexSet> apply_generating_sequence(const Multigraph& g, const ConnectedPartition& p,
                                                 const GeneratingSequence& seq);

bool cuts_intersect(const ConnectedPartition& cut1, const ConnectedPartition& cut2);

// Vertices of block j with an edge into the blocks listed in `others`.
VertexSet boundary_set(const Multigraph& g, const ConnectedPartition& p, int j, VertexSet others);

// Union of the block boundaries.
VertexSet partition_boundary(const Multigraph& g, const ConnectedPartition& p);

std::string format_partition(const Multigraph& g, const ConnectedPartition& p);
ConnectedPartition parse_partition(const Multigraph& g, std::string_view text);

}  // namespace chipfire
