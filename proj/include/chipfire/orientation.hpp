#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/partition.hpp"

namespace chipfire {

// Direction of every simple edge of a quotient graph. Bit e set means edge
// q.edges[e] = (i, j) is directed i -> j, otherwise j -> i.
struct Orientation {
    std::uint64_t forward = 0;

    friend bool operator==(Orientation, Orientation) = default;
    friend auto operator<=>(Orientation, Orientation) = default;
};

struct Arc {
    int tail;
    int head;
};

Arc arc(const QuotientGraph& q, Orientation o, int edge);
bool is_acyclic(const QuotientGraph& q, Orientation o);
VertexSet sources(const QuotientGraph& q, Orientation o);
// Blocks reachable from s along directed edges (s included).
VertexSet reachable_from(const QuotientGraph& q, Orientation o, int s);

std::vector<Orientation> enumerate_acyclic_orientations(const QuotientGraph& q);
std::vector<Orientation> enumerate_aus(const QuotientGraph& q, int source);

// Each vertex receives, for every arc into its block, its number of edges to
// the arc's tail block.
Divisor f_map(const Multigraph& g, const QuotientGraph& q, Orientation o);

// A generating sequence with one side X_i chosen per cut (as block indices).
struct BoundaryDivisorChoice {
    GeneratingSequence sequence;
    std::vector<VertexSet> chosen;
};

// sum_i deg_{A_i B_i}(v) * [v in X_i]; validates the choice.
Divisor boundary_divisor(const Multigraph& g, const ConnectedPartition& p, const BoundaryDivisorChoice& choice);

// Orients each quotient edge toward the chosen side of the cut that severs it.
Orientation orientation_from_choice(const QuotientGraph& q, const BoundaryDivisorChoice& choice);

// Class keys (sink = vertex 0) of f(o) over acyclic orientations whose unique
// source is the block holding vertex 0.
std::set<DivisorClassKey> boundary_divisor_classes(const Multigraph& g, const ConnectedPartition& p);

// All Pi-boundary divisors obtainable from generating sequences and side
// choices, deduplicated.
std::vector<Divisor> all_boundary_divisors(const Multigraph& g, const ConnectedPartition& p);

bool is_critical(const QuotientGraph& q, Orientation o, VertexSet blocks);
// Reverses every edge between `blocks` and the rest; throws
// std::invalid_argument if the set is not critical.
Orientation switch_at(const QuotientGraph& q, Orientation o, VertexSet blocks);

// Orientations reachable through switches; throws std::length_error above
// max_switch_bfs_edges quotient edges.
inline constexpr int max_switch_bfs_edges = 12;
std::set<Orientation> switch_class(const QuotientGraph& q, Orientation o);
bool switch_equivalent(const QuotientGraph& q, Orientation o1, Orientation o2);
bool f_equivalent(const Multigraph& g, const QuotientGraph& q, Orientation o1, Orientation o2);

// Runs the switch search (when small enough) and the divisor-class test and
// throws std::logic_error if they disagree.
bool orientations_equivalent(const Multigraph& g, const QuotientGraph& q, Orientation o1, Orientation o2);

// Reverses the edges leaving R(o) = blocks reachable from s so they point away
// from it.
Orientation pump_step(const QuotientGraph& q, Orientation o, int s);

std::string format_orientation(const QuotientGraph& q, Orientation o);

}  // namespace chipfire
