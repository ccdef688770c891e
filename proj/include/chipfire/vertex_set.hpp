#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace chipfire {

using Vertex = int;

// Subset of at most 64 vertices (or block indices, or abstract face labels),
// stored as a bitmask. Iteration is in ascending index order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
    static constexpr VertexSet range(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    static VertexSet of(const std::vector<Vertex>& vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr Vertex front() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    // numeric order on the mask; use lex_less for the printed face order
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) = default;
    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

// Lexicographic comparison of the ascending element sequences.
inline bool lex_less(VertexSet a, VertexSet b) {
    auto ia = a.begin(), ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib) return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

struct LexLess {
    bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

// Calls fn(sub) for every subset of `set`, including the empty set and `set`.
template <class Fn>
void for_each_subset(VertexSet set, Fn&& fn) {
    const std::uint64_t full = set.bits();
    std::uint64_t sub = full;
    while (true) {
        fn(VertexSet{sub});
        if (sub == 0) break;
        sub = (sub - 1) & full;
    }
}

}  // namespace chipfire
