#include "chipfire/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "chipfire/linalg.hpp"
#include "chipfire/orientation.hpp"

namespace chipfire {

void SignedChain::add(VertexSet face, const mpq_class& c) {
    if (face_size_ < 0) face_size_ = face.size();
    if (face.size() != face_size_) throw std::invalid_argument("SignedChain: faces must have equal size");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(face, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

mpq_class SignedChain::coefficient(VertexSet face) const {
    auto it = terms_.find(face);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

std::vector<VertexSet> SignedChain::support() const {
    std::vector<VertexSet> out;
    for (const auto& [face, c] : terms_) out.push_back(face);
    return out;
}

SignedChain& SignedChain::operator+=(const SignedChain& o) {
    for (const auto& [face, c] : o.terms_) add(face, c);
    return *this;
}

SignedChain& SignedChain::operator*=(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [face, coef] : terms_) coef *= c;
    return *this;
}

SignedChain boundary_of_chain(const SignedChain& chain) {
    SignedChain out;
    for (const auto& [face, c] : chain.terms()) {
        int j = 0;
        for (Vertex v : face) {
            VertexSet child = face;
            child.erase(v);
            out.add(child, j % 2 == 0 ? c : mpq_class(-c));
            ++j;
        }
    }
    return out;
}

namespace {

template <class Label>
std::string format_terms(const SignedChain& chain, Label label) {
    std::string out;
    for (const auto& [face, c] : chain.terms()) {
        if (!out.empty()) out += ' ';
        out += sgn(c) < 0 ? '-' : '+';
        const mpq_class mag = abs(c);
        if (mag != 1) out += mag.get_str();
        out += '[';
        bool first = true;
        for (Vertex v : face) {
            if (!first) out += ',';
            first = false;
            out += label(v);
        }
        out += ']';
    }
    return out.empty() ? "0" : out;
}

int parity_sign(const std::vector<Vertex>& seq) {
    int inversions = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::string format_chain(const SignedChain& chain) {
    return format_terms(chain, [](Vertex v) { return std::to_string(v); });
}

std::string format_chain(const Multigraph& g, const SignedChain& chain) {
    return format_terms(chain, [&](Vertex v) { return g.name(v); });
}

void validate(const ExtensionSpec& spec) {
    if (spec.k < 1 || spec.k > 31) throw std::invalid_argument("extension spec: k must be in [1, 31]");
    if (static_cast<int>(spec.extension.size()) != spec.k) {
        throw std::invalid_argument("extension spec: need one extension vertex per base vertex");
    }
    for (int j = 0; j < spec.k; ++j) {
        const int e = spec.extension[j];
        if (e <= spec.k || e > 2 * spec.k) {
            throw std::invalid_argument("extension spec: e_" + std::to_string(j + 1) + " outside [k+1, 2k]");
        }
        if (j > 0 && e > spec.extension[j - 1]) {
            throw std::invalid_argument("extension spec: e_j must be non-increasing in j");
        }
    }
}

VertexSet base_face(const ExtensionSpec& spec) { return VertexSet::range(spec.k + 1) - VertexSet::single(0); }

VertexSet base_of_extension(const ExtensionSpec& spec, int j) {
    VertexSet b = base_face(spec);
    b.erase(j);
    return b;
}

std::vector<VertexSet> admissible_sets(const ExtensionSpec& spec) {
    validate(spec);
    std::vector<VertexSet> out;
    for_each_subset(base_face(spec), [&](VertexSet j_set) {
        VertexSet used;
        for (Vertex j : j_set) {
            const int e = spec.extension[j - 1];
            if (used.contains(e)) return;
            used.insert(e);
        }
        out.push_back(j_set);
    });
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
    });
    return out;
}

VertexSet extension_face(const ExtensionSpec& spec, VertexSet index_set) {
    VertexSet face = base_face(spec) - index_set;
    for (Vertex j : index_set) face.insert(spec.extension[j - 1]);
    return face;
}

int extension_sign(const ExtensionSpec& spec, VertexSet index_set) {
    int sign = 1;
    for (Vertex j : index_set) {
        if ((j - 1 + spec.k) % 2 != 0) sign = -sign;
    }
    return sign;
}

ExtensionCycle extension_cycle(const ExtensionSpec& spec) {
    ExtensionCycle cycle{spec, {}, {}};
    for (VertexSet j_set : admissible_sets(spec)) {
        ExtensionFace f{j_set, extension_face(spec, j_set), extension_sign(spec, j_set), j_set.size()};
        cycle.chain.add(f.face, f.sign);
        cycle.faces.push_back(f);
    }
    return cycle;
}

ConcreteExtensionCycle relabel_extension_cycle(const std::vector<Vertex>& base, const std::vector<Vertex>& extension) {
    const int k = static_cast<int>(base.size());
    if (k == 0 || extension.size() != base.size()) {
        throw std::invalid_argument("relabel: need matching nonempty base and extension lists");
    }
    VertexSet base_set;
    for (Vertex v : base) {
        if (v < 0 || v >= 64 || base_set.contains(v)) throw std::invalid_argument("relabel: bad or repeated base vertex");
        base_set.insert(v);
    }
    for (Vertex e : extension) {
        if (e < 0 || e >= 64 || base_set.contains(e)) {
            throw std::invalid_argument("relabel: extension vertex must lie outside the base");
        }
    }

    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return extension[a] > extension[b]; });
    std::vector<Vertex> distinct(extension.begin(), extension.end());
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    const int groups = static_cast<int>(distinct.size());

    ConcreteExtensionCycle out;
    out.label_vertex.assign(2 * k + 1, -1);
    ExtensionSpec spec{k, std::vector<int>(k)};
    for (int r = 0; r < groups; ++r) out.label_vertex[k + groups - r] = distinct[r];
    for (int t = 0; t < k; ++t) {
        const int pos = order[t];
        out.label_vertex[t + 1] = base[pos];
        const auto rank = std::find(distinct.begin(), distinct.end(), extension[pos]) - distinct.begin();
        spec.extension[t] = k + groups - static_cast<int>(rank);
    }
    out.abstract = extension_cycle(spec);

    int normalize = 1;
    for (const auto& f : out.abstract.faces) {
        std::vector<Vertex> seq;
        for (Vertex label : f.face) seq.push_back(out.label_vertex[label]);
        ExtensionFace cf{f.index_set, VertexSet::of(seq), f.sign * parity_sign(seq), f.layer};
        if (f.layer == 0) normalize = cf.sign;
        out.faces.push_back(cf);
    }
    for (auto& f : out.faces) {
        f.sign *= normalize;
        out.chain.add(f.face, f.sign);
    }
    return out;
}

bool is_essential(const ConnectedPartition& p, VertexSet face, int distinguished) {
    if (face.size() != p.size() - 1) return false;
    VertexSet hit;
    for (Vertex v : face) {
        const int b = p.block_of(v);
        if (b == distinguished || hit.contains(b)) return false;
        hit.insert(b);
    }
    return true;
}

std::vector<int> T_map(const Multigraph& g, const ConnectedPartition& p, int root) {
    if (!g.is_multi_edged_tree()) throw std::invalid_argument("T_map: graph is not a multi-edged tree");
    if (root < 0 || root >= p.size()) throw std::invalid_argument("T_map: root block out of range");
    const QuotientGraph q = quotient(g, p);
    std::vector<int> parent(p.size(), -1);
    parent[root] = root;
    std::queue<int> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
        const int b = frontier.front();
        frontier.pop();
        for (const auto& [i, j] : q.edges) {
            const int other = i == b ? j : (j == b ? i : -1);
            if (other < 0 || parent[other] >= 0) continue;
            parent[other] = b;
            frontier.push(other);
        }
    }
    return parent;
}

SimplicialComplex boundary_complex(const Multigraph& g, const ConnectedPartition& p, const Divisor& d) {
    const QuotientGraph q = quotient(g, p);
    const DivisorClassKey key = class_key(g, d);
    std::vector<VertexSet> supports;
    for (Orientation o : enumerate_acyclic_orientations(q)) {
        const Divisor f = f_map(g, q, o);
        if (class_key(g, f) == key) supports.push_back(f.support());
    }
    if (supports.empty()) throw std::invalid_argument("boundary_complex: divisor has no orientation class");
    return SimplicialComplex(std::move(supports));
}

bool certify_not_boundary(const SimplicialComplex& c, const SignedChain& chain) {
    if (chain.empty()) return false;
    const int dim = chain.face_size() - 1;
    const auto lower = c.faces(dim);
    const auto upper = c.faces(dim + 1);
    std::unordered_map<std::uint64_t, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i].bits(), i);

    mpz_class scale = 1;
    for (const auto& [face, coef] : chain.terms()) scale = lcm(scale, mpz_class(coef.get_den()));
    std::vector<std::int64_t> target(lower.size(), 0);
    for (const auto& [face, coef] : chain.terms()) {
        auto it = index.find(face.bits());
        if (it == index.end()) throw std::invalid_argument("certify_not_boundary: chain leaves the complex");
        const mpq_class scaled = coef * scale;
        const mpz_class num = scaled.get_num();
        if (!num.fits_slong_p()) throw std::overflow_error("certify_not_boundary: coefficient too large");
        target[it->second] = num.get_si();
    }
    return !in_column_span(boundary_rows(upper, lower), target);
}

TreeWitness tree_witness_cycle(const Multigraph& g, const ConnectedPartition& p, const Divisor& d, int root) {
    if (p.size() < 2) throw std::invalid_argument("tree witness: partition needs at least two blocks");
    const std::vector<int> T = T_map(g, p, root);
    const QuotientGraph q = quotient(g, p);

    const auto aus = enumerate_aus(q, root);
    if (aus.size() != 1) throw std::logic_error("tree witness: expected one orientation with the root as source");
    const Divisor f1 = f_map(g, q, aus.front());
    if (!equivalent(g, f1, d)) throw std::invalid_argument("tree witness: divisor is not a boundary divisor of the partition");

    // vertices of block `from` with an edge into block `to`
    auto facing = [&](int from, int to) {
        VertexSet out;
        for (Vertex v : p.block(from))
            if (g.degree_into(v, p.block(to)) > 0) out.insert(v);
        return out;
    };

    TreeWitness w;
    w.root = root;
    std::vector<int> others;
    for (int j = 0; j < p.size(); ++j) {
        if (j == root) continue;
        others.push_back(j);
        const Vertex b = facing(j, T[j]).front();
        w.base_vertices.push_back(b);
        w.base.insert(b);
    }
    for (int j : others) {
        int child = j;
        while (true) {
            const int parent = T[child];
            const VertexSet cand = facing(parent, child) - w.base;
            if (!cand.empty()) {
                w.extension_vertices.push_back(cand.front());
                break;
            }
            if (parent == root) throw std::runtime_error("tree witness: no extension vertex found");
            child = parent;
        }
    }

    const auto concrete = relabel_extension_cycle(w.base_vertices, w.extension_vertices);
    w.chain = concrete.chain;
    for (const auto& f : concrete.faces) {
        if (f.layer == 1) w.extensions.push_back(f.face);
        if (f.layer >= 2) w.roofs.push_back(f.face);
    }
    std::sort(w.extensions.begin(), w.extensions.end(), LexLess{});
    std::sort(w.roofs.begin(), w.roofs.end(), LexLess{});

    if (!boundary_of_chain(w.chain).empty()) throw std::logic_error("tree witness: chain is not a cycle");
    const SimplicialComplex bc = boundary_complex(g, p, d);
    for (VertexSet face : w.chain.support()) {
        if (!bc.contains(face)) throw std::runtime_error("tree witness: face outside the boundary complex");
        if (face != w.base && is_essential(p, face, root)) {
            throw std::runtime_error("tree witness: second essential face in the cycle");
        }
    }
    w.not_a_boundary = certify_not_boundary(complex_of_divisor(g, d), w.chain);
    return w;
}

}  // namespace chipfire
