#pragma once

#include "isk4/graph.hpp"

namespace fixtures {

inline isk4::Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return isk4::build_graph(n, edges);
}

inline isk4::Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return isk4::build_graph(n, edges);
}

inline isk4::Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return isk4::build_graph(n, edges);
}

inline isk4::Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
    return isk4::build_graph(a + b, edges);
}

// outer C5 0..4, inner pentagram 5..9
inline isk4::Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, 5 + (i + 2) % 5);
    }
    return isk4::build_graph(10, edges);
}

// C8 rim 0..7 plus center 8 adjacent to the even rim vertices
inline isk4::Graph c8_wheel() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
    for (int s : {0, 2, 4, 6}) edges.emplace_back(s, 8);
    return isk4::build_graph(9, edges);
}

// C6 rim 0..5 plus center 6 adjacent to the even rim vertices
inline isk4::Graph c6_wheel3() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 6; ++i) edges.emplace_back(i, (i + 1) % 6);
    for (int s : {0, 2, 4}) edges.emplace_back(s, 6);
    return isk4::build_graph(7, edges);
}

}  // namespace fixtures
