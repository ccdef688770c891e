#pragma once

#include <cstdint>
#include <vector>

#include "chipfire/homology.hpp"
#include "chipfire/partition.hpp"

namespace chipfire {

struct PartitionCount {
    ConnectedPartition partition;
    std::int64_t maximal_superstables = 0;  // on G_Pi, sink at the block of vertex 0
    std::int64_t unique_source_orientations = 0;
};

struct ConjectureRow {
    int k = 0;
    std::int64_t lhs = 0;  // coarse beta_k from the homology scan
    std::int64_t rhs = 0;  // sum over (k+1)-block partitions
    bool match = false;
    std::vector<PartitionCount> partitions;  // filled when detail is requested
};

struct VerificationReport {
    BettiReport betti;
    std::vector<ConjectureRow> rows;

    bool all_match() const;
};

// Right-hand side for one k: sum over connected (k+1)-partitions of the
// number of maximal superstables of the quotient multigraph.
ConjectureRow partition_side(const Multigraph& g, int k, bool detail, int jobs = 1);

// Compares coarse beta_k with the partition count for every k in ks.
// Throws std::invalid_argument for k outside [1, n-1].
VerificationReport verify_wilmes(const Multigraph& g, const std::vector<int>& ks, DegreeWindow window, int jobs = 1,
                                 bool detail = false, Vertex sink = 0);

}  // namespace chipfire
