#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chipfire/multigraph.hpp"

namespace chipfire {

// Chip count per vertex, indexed by the graph's vertex order.
struct Divisor {
    std::vector<std::int64_t> chips;

    Divisor() = default;
    explicit Divisor(int n) : chips(n, 0) {}
    explicit Divisor(std::vector<std::int64_t> c) : chips(std::move(c)) {}

    int size() const { return static_cast<int>(chips.size()); }
    std::int64_t operator[](Vertex v) const { return chips[v]; }
    std::int64_t& operator[](Vertex v) { return chips[v]; }

    std::int64_t degree() const;
    VertexSet support() const;
    bool effective() const;

    static Divisor unit(int n, Vertex v);

    Divisor& operator+=(const Divisor& o);
    Divisor& operator-=(const Divisor& o);
    friend Divisor operator+(Divisor a, const Divisor& b) { return a += b; }
    friend Divisor operator-(Divisor a, const Divisor& b) { return a -= b; }
    friend bool operator==(const Divisor&, const Divisor&) = default;
    friend auto operator<=>(const Divisor&, const Divisor&) = default;
};

// Firing frequency per vertex. Canonical scripts are >= 0 with minimum 0.
struct Script {
    std::vector<std::int64_t> fires;

    Script() = default;
    explicit Script(int n) : fires(n, 0) {}
    explicit Script(std::vector<std::int64_t> f) : fires(std::move(f)) {}

    static Script indicator(int n, VertexSet set);

    std::int64_t operator[](Vertex v) const { return fires[v]; }
    VertexSet support() const;
    Script normalized() const;  // subtract the minimum entry

    friend bool operator==(const Script&, const Script&) = default;
};

// Unique sink-reduced representative of a divisor class.
struct DivisorClassKey {
    Vertex sink = 0;
    Divisor reduced;

    friend bool operator==(const DivisorClassKey&, const DivisorClassKey&) = default;
    friend auto operator<=>(const DivisorClassKey&, const DivisorClassKey&) = default;
};

// D - L*sigma.
Divisor apply_script(const Multigraph& g, const Divisor& d, const Script& sigma);

// Dhar's burning algorithm from sink q: the vertices left unburnt.
// Throws std::invalid_argument if d is negative off the sink.
VertexSet dhar_unburnt(const Multigraph& g, const Divisor& d, Vertex q);

struct Reduction {
    Divisor reduced;
    Script script;  // d - L*script == reduced; not normalized
};

// Equivalent divisor that is nonnegative and superstable off q.
Reduction q_reduce_with_script(const Multigraph& g, const Divisor& d, Vertex q);
Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q);

DivisorClassKey class_key(const Multigraph& g, const Divisor& d, Vertex sink = 0);

// The canonical script sigma with d0 - L*sigma == d1, if d0 ~ d1.
std::optional<Script> equivalence_script(const Multigraph& g, const Divisor& d0, const Divisor& d1);
bool equivalent(const Multigraph& g, const Divisor& d0, const Divisor& d1);

// All nonnegative divisors of degree d, in lexicographic order.
std::vector<Divisor> effective_divisors_of_degree(int n, std::int64_t degree);

// |D|: effective divisors equivalent to D, sorted.
std::vector<Divisor> linear_system(const Multigraph& g, const Divisor& d);

bool is_superstable(const Multigraph& g, const Divisor& d, Vertex q);
std::vector<Divisor> enumerate_superstables(const Multigraph& g, Vertex q);
std::vector<Divisor> enumerate_maximal_superstables(const Multigraph& g, Vertex q);

bool is_stable(const Multigraph& g, const Divisor& d);
bool is_alive(const Multigraph& g, const Divisor& d);
bool is_minimally_alive(const Multigraph& g, const Divisor& d);

// Compact digit form ("0004", characters in alphabetical vertex order) when
// every name is one character and every entry is in 0..9; otherwise
// `name=count` pairs separated by commas, in vertex order.
std::string format_divisor(const Multigraph& g, const Divisor& d);
Divisor parse_divisor(const Multigraph& g, std::string_view text);

}  // namespace chipfire
