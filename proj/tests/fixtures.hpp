#pragma once

#include "chipfire/multigraph.hpp"

namespace fixtures {

// Four vertices, six cuts, 26 spanning trees.
inline chipfire::Multigraph kite() { return chipfire::load_graph("a b 1\na c 1\nb c 2\nb d 1\nc d 3\n"); }

// Multi-edged tree on vertices 1..6 with a triple edge 2-3.
inline chipfire::Multigraph tree6() { return chipfire::load_graph("1 2\n2 3 3\n2 4\n3 5\n5 6\n"); }

inline chipfire::Multigraph triangle() { return chipfire::load_graph("a b\nb c\na c\n"); }
inline chipfire::Multigraph square() { return chipfire::load_graph("a b\nb c\nc d\nd a\n"); }
inline chipfire::Multigraph path(int n) {
    std::string text;
    for (int i = 0; i + 1 < n; ++i) text += std::string(1, char('a' + i)) + " " + char('a' + i + 1) + "\n";
    return chipfire::load_graph(text);
}
inline chipfire::Multigraph dipole(int m) { return chipfire::load_graph("a b " + std::to_string(m) + "\n"); }

}  // namespace fixtures
