#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "chipfire/homology.hpp"
#include "chipfire/partition.hpp"

namespace chipfire {

// Formal rational combination of faces of one common size.
class SignedChain {
public:
    using Terms = std::map<VertexSet, mpq_class, LexLess>;

    SignedChain() = default;

    // Adds c * face; zero coefficients are dropped. Throws
    // std::invalid_argument on a face of the wrong size.
    void add(VertexSet face, const mpq_class& c);

    const Terms& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int face_size() const { return face_size_; }  // -1 while empty
    mpq_class coefficient(VertexSet face) const;
    std::vector<VertexSet> support() const;

    SignedChain& operator+=(const SignedChain& o);
    SignedChain& operator*=(const mpq_class& c);
    friend bool operator==(const SignedChain& a, const SignedChain& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
    int face_size_ = -1;
};

// Linear extension of d[i_1..i_m] = sum_j (-1)^(j-1) [..^i_j..]. The
// boundary of a vertex is the empty face.
SignedChain boundary_of_chain(const SignedChain& chain);

// "+[2,4,5,6] -[2,3,4,5]" in lexicographic face order; non-unit
// coefficients are written before the bracket ("+2/3[1,2]").
std::string format_chain(const SignedChain& chain);
std::string format_chain(const Multigraph& g, const SignedChain& chain);

// Abstract extension data on labels 1..2k: base B = {1..k}; extension[j-1]
// is e_j in [k+1, 2k], non-increasing in j.
struct ExtensionSpec {
    int k = 0;
    std::vector<int> extension;
};

// Throws std::invalid_argument unless k in [1, 31] and the e_j satisfy the
// range and ordering conventions.
void validate(const ExtensionSpec& spec);

VertexSet base_face(const ExtensionSpec& spec);
// B_j = B - {j}, the base vertices of A_j.
VertexSet base_of_extension(const ExtensionSpec& spec, int j);
// Index sets J (as sets of labels 1..k) with pairwise distinct e_j.
std::vector<VertexSet> admissible_sets(const ExtensionSpec& spec);
// A_J = (B - J) + {e_j : j in J}.
VertexSet extension_face(const ExtensionSpec& spec, VertexSet index_set);
// eps_J = prod_{j in J} (-1)^(j-1+k).
int extension_sign(const ExtensionSpec& spec, VertexSet index_set);

struct ExtensionFace {
    VertexSet index_set;  // J
    VertexSet face;       // A_J
    int sign = 1;         // eps_J
    int layer = 0;        // #J: 0 base, 1 extension, >= 2 roof
};

struct ExtensionCycle {
    ExtensionSpec spec;
    std::vector<ExtensionFace> faces;  // ordered by layer, then J
    SignedChain chain;                 // sum eps_J A_J
};

ExtensionCycle extension_cycle(const ExtensionSpec& spec);

// Extension cycle on concrete vertices: base[i] is a base vertex and
// extension[i] the vertex replacing it in its extension face. The labels are
// assigned so that the ordering convention holds, and the image is
// re-signed so that the base face has coefficient +1.
struct ConcreteExtensionCycle {
    ExtensionCycle abstract;
    std::vector<Vertex> label_vertex;  // label -> vertex; index 0 unused
    std::vector<ExtensionFace> faces;  // faces and signs on the vertices
    SignedChain chain;
};

ConcreteExtensionCycle relabel_extension_cycle(const std::vector<Vertex>& base, const std::vector<Vertex>& extension);

// face has one vertex in each block of p except `distinguished`, and
// p.size() - 1 vertices in total.
bool is_essential(const ConnectedPartition& p, VertexSet face, int distinguished);

// Parent block toward `root` in the tree G~_Pi; the root maps to itself.
// Throws std::invalid_argument unless g is a multi-edged tree.
std::vector<int> T_map(const Multigraph& g, const ConnectedPartition& p, int root = 0);

// Facets supp f(o) over acyclic orientations o of G~_Pi with f(o) ~ d.
// Throws std::invalid_argument if there is none.
SimplicialComplex boundary_complex(const Multigraph& g, const ConnectedPartition& p, const Divisor& d);

// True iff the chain (integer coefficients, faces in c) is not in the image
// of the boundary map from the next dimension of c.
bool certify_not_boundary(const SimplicialComplex& c, const SignedChain& chain);

struct TreeWitness {
    int root = 0;
    std::vector<Vertex> base_vertices;       // b_j for the non-root blocks, in block order
    std::vector<Vertex> extension_vertices;  // e_j, aligned with base_vertices
    VertexSet base;
    std::vector<VertexSet> extensions;  // lexicographic
    std::vector<VertexSet> roofs;       // lexicographic
    SignedChain chain;
    bool not_a_boundary = false;  // certified against the complex of d
};

// Cycle in the boundary complex of d with exactly one root-essential face.
// Throws std::invalid_argument on bad input (not a tree, d not a Pi-boundary
// divisor, fewer than two blocks) and std::runtime_error if a membership
// check of the construction fails.
TreeWitness tree_witness_cycle(const Multigraph& g, const ConnectedPartition& p, const Divisor& d, int root = 0);

}  // namespace chipfire
