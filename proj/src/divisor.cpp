#include "chipfire/divisor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chipfire {

std::int64_t Divisor::degree() const {
    return std::accumulate(chips.begin(), chips.end(), std::int64_t{0});
}

VertexSet Divisor::support() const {
    VertexSet s;
    for (int v = 0; v < size(); ++v) {
        if (chips[v] != 0) s.insert(v);
    }
    return s;
}

bool Divisor::effective() const {
    return std::all_of(chips.begin(), chips.end(), [](auto c) { return c >= 0; });
}

Divisor Divisor::unit(int n, Vertex v) {
    Divisor d(n);
    d.chips[v] = 1;
    return d;
}

Divisor& Divisor::operator+=(const Divisor& o) {
    for (int v = 0; v < size(); ++v) chips[v] += o.chips[v];
    return *this;
}

Divisor& Divisor::operator-=(const Divisor& o) {
    for (int v = 0; v < size(); ++v) chips[v] -= o.chips[v];
    return *this;
}

Script Script::indicator(int n, VertexSet set) {
    Script s(n);
    for (Vertex v : set) s.fires[v] = 1;
    return s;
}

VertexSet Script::support() const {
    VertexSet s;
    for (int v = 0; v < static_cast<int>(fires.size()); ++v) {
        if (fires[v] != 0) s.insert(v);
    }
    return s;
}

Script Script::normalized() const {
    if (fires.empty()) return *this;
    const auto lo = *std::min_element(fires.begin(), fires.end());
    Script s = *this;
    for (auto& f : s.fires) f -= lo;
    return s;
}

Divisor apply_script(const Multigraph& g, const Divisor& d, const Script& sigma) {
    Divisor out = d;
    for (const auto& [pair, m] : g.edges()) {
        auto [u, v] = pair;
        // each firing of u sends m chips to v and vice versa
        const std::int64_t flow = m * (sigma[u] - sigma[v]);
        out[u] -= flow;
        out[v] += flow;
    }
    return out;
}

namespace {

// Fire every vertex of `set` `times` times.
void fire_set(const Multigraph& g, Divisor& d, Script& script, VertexSet set, std::int64_t times) {
    for (Vertex v : set) {
        script.fires[v] += times;
        for (const auto& nb : g.neighbors(v)) {
            if (set.contains(nb.vertex)) continue;
            d[v] -= times * nb.mult;
            d[nb.vertex] += times * nb.mult;
        }
    }
}

std::vector<int> distances_from(const Multigraph& g, Vertex q) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::vector<Vertex> frontier{q};
    dist[q] = 0;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
        Vertex v = frontier[i];
        for (const auto& nb : g.neighbors(v)) {
            if (dist[nb.vertex] < 0) {
                dist[nb.vertex] = dist[v] + 1;
                frontier.push_back(nb.vertex);
            }
        }
    }
    return dist;
}

}  // namespace

VertexSet dhar_unburnt(const Multigraph& g, const Divisor& d, Vertex q) {
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        if (v != q && d[v] < 0) throw std::invalid_argument("dhar_unburnt: divisor negative off the sink");
    }
    std::vector<std::int64_t> burnt_edges(n, 0);
    VertexSet unburnt = g.vertices();
    unburnt.erase(q);
    std::vector<Vertex> fire{q};
    while (!fire.empty()) {
        Vertex v = fire.back();
        fire.pop_back();
        for (const auto& nb : g.neighbors(v)) {
            if (!unburnt.contains(nb.vertex)) continue;
            burnt_edges[nb.vertex] += nb.mult;
            if (burnt_edges[nb.vertex] > d[nb.vertex]) {
                unburnt.erase(nb.vertex);
                fire.push_back(nb.vertex);
            }
        }
    }
    return unburnt;
}

Reduction q_reduce_with_script(const Multigraph& g, const Divisor& d, Vertex q) {
    const int n = g.vertex_count();
    Reduction r{d, Script(n)};
    Divisor& cur = r.reduced;

    // Make every off-sink vertex nonnegative. Firing the ball of radius k-1
    // around q feeds the distance-k shell and only drains shell k-1, so the
    // shells can be fixed outermost first.
    const auto dist = distances_from(g, q);
    const int max_dist = *std::max_element(dist.begin(), dist.end());
    for (int k = max_dist; k >= 1; --k) {
        VertexSet ball;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] < k) ball.insert(v);
        }
        std::int64_t needed = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (dist[v] != k || cur[v] >= 0) continue;
            const int gain = g.degree_into(v, ball);
            needed = std::max(needed, (-cur[v] + gain - 1) / gain);
        }
        if (needed > 0) fire_set(g, cur, r.script, ball, needed);
    }

    // Dhar loop: fire the unburnt set as often as it stays nonnegative.
    while (true) {
        VertexSet unburnt = dhar_unburnt(g, cur, q);
        if (unburnt.empty()) break;
        std::int64_t times = -1;
        for (Vertex v : unburnt) {
            const int out = g.degree(v) - g.degree_into(v, unburnt);
            if (out == 0) continue;
            const std::int64_t t = cur[v] / out;
            times = times < 0 ? t : std::min(times, t);
        }
        fire_set(g, cur, r.script, unburnt, std::max<std::int64_t>(times, 1));
    }
    return r;
}

Divisor q_reduce(const Multigraph& g, const Divisor& d, Vertex q) {
    return q_reduce_with_script(g, d, q).reduced;
}

DivisorClassKey class_key(const Multigraph& g, const Divisor& d, Vertex sink) {
    return {sink, q_reduce(g, d, sink)};
}

std::optional<Script> equivalence_script(const Multigraph& g, const Divisor& d0, const Divisor& d1) {
    if (d0.degree() != d1.degree()) return std::nullopt;
    const auto r0 = q_reduce_with_script(g, d0, 0);
    const auto r1 = q_reduce_with_script(g, d1, 0);
    if (r0.reduced != r1.reduced) return std::nullopt;
    Script s(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) s.fires[v] = r0.script[v] - r1.script[v];
    return s.normalized();
}

bool equivalent(const Multigraph& g, const Divisor& d0, const Divisor& d1) {
    return d0.degree() == d1.degree() && q_reduce(g, d0, 0) == q_reduce(g, d1, 0);
}

std::vector<Divisor> effective_divisors_of_degree(int n, std::int64_t degree) {
    std::vector<Divisor> out;
    if (degree < 0 || n <= 0) return out;
    Divisor cur(n);
    // weak compositions in lexicographic order
    auto rec = [&](auto&& self, int pos, std::int64_t left) -> void {
        if (pos == n - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (std::int64_t c = 0; c <= left; ++c) {
            cur[pos] = c;
            self(self, pos + 1, left - c);
        }
    };
    rec(rec, 0, degree);
    return out;
}

std::vector<Divisor> linear_system(const Multigraph& g, const Divisor& d) {
    const auto deg = d.degree();
    if (deg < 0) return {};
    const Divisor key = q_reduce(g, d, 0);
    if (key[0] < 0) return {};  // a reduced divisor is in an effective class iff it is >= 0
    std::vector<Divisor> out;
    for (auto& e : effective_divisors_of_degree(g.vertex_count(), deg)) {
        if (q_reduce(g, e, 0) == key) out.push_back(std::move(e));
    }
    return out;
}

bool is_superstable(const Multigraph& g, const Divisor& d, Vertex q) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v != q && d[v] < 0) return false;
    }
    return dhar_unburnt(g, d, q).empty();
}

std::vector<Divisor> enumerate_superstables(const Multigraph& g, Vertex q) {
    const int n = g.vertex_count();
    std::vector<Divisor> out;
    Divisor cur(n);
    auto rec = [&](auto&& self, Vertex v) -> void {
        if (v == n) {
            if (dhar_unburnt(g, cur, q).empty()) out.push_back(cur);
            return;
        }
        if (v == q) {
            self(self, v + 1);
            return;
        }
        for (int c = 0; c < g.degree(v); ++c) {
            cur[v] = c;
            self(self, v + 1);
        }
        cur[v] = 0;
    };
    rec(rec, 0);
    return out;
}

std::vector<Divisor> enumerate_maximal_superstables(const Multigraph& g, Vertex q) {
    std::vector<Divisor> out;
    for (auto& c : enumerate_superstables(g, q)) {
        bool maximal = true;
        for (Vertex v = 0; v < g.vertex_count() && maximal; ++v) {
            if (v == q) continue;
            Divisor bumped = c;
            bumped[v] += 1;
            if (is_superstable(g, bumped, q)) maximal = false;
        }
        if (maximal) out.push_back(std::move(c));
    }
    return out;
}

bool is_stable(const Multigraph& g, const Divisor& d) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (d[v] >= g.degree(v)) return false;
    }
    return true;
}

bool is_alive(const Multigraph& g, const Divisor& d) {
    for (const auto& e : linear_system(g, d)) {
        if (is_stable(g, e)) return false;
    }
    return true;
}

bool is_minimally_alive(const Multigraph& g, const Divisor& d) {
    if (!is_alive(g, d)) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (is_alive(g, d - Divisor::unit(g.vertex_count(), v))) return false;
    }
    return true;
}

namespace {

bool compact_names(const Multigraph& g) {
    return std::all_of(g.names().begin(), g.names().end(), [](const auto& s) { return s.size() == 1; });
}

std::vector<Vertex> alphabetical_order(const Multigraph& g) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.name(a) < g.name(b); });
    return order;
}

}  // namespace

std::string format_divisor(const Multigraph& g, const Divisor& d) {
    const bool digits = compact_names(g) &&
        std::all_of(d.chips.begin(), d.chips.end(), [](auto c) { return c >= 0 && c <= 9; });
    std::string out;
    if (digits) {
        for (Vertex v : alphabetical_order(g)) out += static_cast<char>('0' + d[v]);
        return out;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (v > 0) out += ',';
        out += g.name(v) + "=" + std::to_string(d[v]);
    }
    return out;
}

Divisor parse_divisor(const Multigraph& g, std::string_view text) {
    const int n = g.vertex_count();
    Divisor d(n);
    if (text.find('=') == std::string_view::npos) {
        if (!compact_names(g) || static_cast<int>(text.size()) != n ||
            !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("divisor '" + std::string(text) + "' is not a digit string for this graph");
        }
        const auto order = alphabetical_order(g);
        for (int i = 0; i < n; ++i) d[order[i]] = text[i] - '0';
        return d;
    }
    std::istringstream in{std::string(text)};
    for (std::string item; std::getline(in, item, ',');) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad divisor entry '" + item + "'");
        const Vertex v = g.index_of(item.substr(0, eq));
        std::size_t used = 0;
        const std::string count = item.substr(eq + 1);
        long long c = 0;
        try {
            c = std::stoll(count, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != count.size() || count.empty()) throw std::invalid_argument("bad chip count '" + count + "'");
        d[v] = c;
    }
    return d;
}

}  // namespace chipfire
