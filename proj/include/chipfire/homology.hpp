#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chipfire/divisor.hpp"
#include "chipfire/partition.hpp"

namespace chipfire {

// Downward-closed family of vertex sets, stored by its facets. The void
// complex has no faces at all; the complex {{}} has only the empty face.
class SimplicialComplex {
public:
    SimplicialComplex() = default;  // void
    // Keeps the inclusion-maximal members of `sets`.
    explicit SimplicialComplex(std::vector<VertexSet> sets);

    bool is_void() const { return facets_.empty(); }
    const std::vector<VertexSet>& facets() const { return facets_; }
    bool contains(VertexSet face) const;
    VertexSet vertices() const;
    int dimension() const;  // -1 for {{}} and the void complex

    // Faces with dim+1 vertices, in lexicographic order.
    std::vector<VertexSet> faces(int dim) const;
    // Vertex sets of the connected components (the empty face is ignored).
    std::vector<VertexSet> components() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::vector<VertexSet> facets_;  // sorted, pairwise non-nested
};

SimplicialComplex complex_of_divisor(const Multigraph& g, const Divisor& d);
SimplicialComplex complex_of_members(const std::vector<Divisor>& members);

// dim H~_i over Q for i = -1..max_dim; entry 0 holds H~_{-1}.
std::vector<int> reduced_homology_dims(const SimplicialComplex& c, int max_dim);

// Integer boundary matrix of the d-faces, one row per d-face over the
// (d-1)-faces listed in `lower`. Sign convention: removing the j-th smallest
// vertex (0-based) contributes (-1)^j.
std::vector<std::vector<std::int64_t>> boundary_rows(const std::vector<VertexSet>& upper,
                                                     const std::vector<VertexSet>& lower);

int betti_kD(const Multigraph& g, const Divisor& d, int k);

struct DegreeWindow {
    std::int64_t lo = 0;
    std::int64_t hi = 0;
};

struct BettiRow {
    DivisorClassKey key;
    std::int64_t degree = 0;
    std::map<int, int> betti;  // k -> beta_{k,D}
};

struct BettiReport {
    std::vector<int> ks;
    DegreeWindow window;
    std::vector<BettiRow> classes;  // classes with some nonzero requested beta
    std::map<int, std::int64_t> coarse;
    std::vector<std::string> warnings;
};

// Scans every divisor class with degree in the window (one per
// superstable and degree) and sums beta_{k,D}. Classes with no effective
// member are skipped since their complex is void.
BettiReport coarse_betti(const Multigraph& g, const std::vector<int>& ks, DegreeWindow window,
                         Vertex sink = 0, int jobs = 1);

// Default window [0, total edge multiplicity].
DegreeWindow default_window(const Multigraph& g);

struct Splitting {
    std::vector<Divisor> first;   // holds the smallest member of |D|
    std::vector<Divisor> second;
};

std::vector<Splitting> splittings(const Multigraph& g, const Divisor& d);

struct CutRecovery {
    ConnectedPartition cut;
    Divisor before;  // D_t, member of one side
    Divisor after;   // D_{t+1}, member of the other side
    std::vector<std::pair<Vertex, Vertex>> severed;  // E_t as vertex pairs
};

// Walks Dhar firings from a member of one side toward the reduced divisor
// and reads the cut off the first crossing between the sides. Throws
// std::runtime_error if the recovered edges are not a cut whose boundary
// divisors are equivalent to d.
CutRecovery cut_from_splitting(const Multigraph& g, const Divisor& d, const Splitting& split);

}  // namespace chipfire
