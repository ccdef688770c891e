#include "chipfire/verify.hpp"

#include <stdexcept>

#include "chipfire/orientation.hpp"
#include "chipfire/parallel.hpp"

namespace chipfire {

bool VerificationReport::all_match() const {
    for (const auto& r : rows)
        if (!r.match) return false;
    return true;
}

ConjectureRow partition_side(const Multigraph& g, int k, bool detail, int jobs) {
    ConjectureRow row;
    row.k = k;
    const auto parts = enumerate_connected_partitions(g, k + 1);
    std::vector<PartitionCount> counts(parts.size());
    parallel_for(parts.size(), jobs, [&](std::size_t i) {
        const QuotientGraph q = quotient(g, parts[i]);
        counts[i].partition = parts[i];
        counts[i].maximal_superstables =
            static_cast<std::int64_t>(enumerate_maximal_superstables(q.multi, parts[i].block_of(0)).size());
        if (detail) {
            counts[i].unique_source_orientations =
                static_cast<std::int64_t>(enumerate_aus(q, parts[i].block_of(0)).size());
        }
    });
    for (const auto& c : counts) row.rhs += c.maximal_superstables;
    if (detail) row.partitions = std::move(counts);
    return row;
}

VerificationReport verify_wilmes(const Multigraph& g, const std::vector<int>& ks, DegreeWindow window, int jobs,
                                 bool detail, Vertex sink) {
    for (int k : ks) {
        if (k < 1 || k > g.vertex_count() - 1) throw std::invalid_argument("k must lie in [1, n-1]");
    }
    VerificationReport report;
    report.betti = coarse_betti(g, ks, window, sink, jobs);
    for (int k : ks) {
        ConjectureRow row = partition_side(g, k, detail, jobs);
        row.lhs = report.betti.coarse.at(k);
        row.match = row.lhs == row.rhs;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace chipfire
