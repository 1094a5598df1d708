#pragma once

#include <string>
#include <utility>
#include <vector>

namespace bord::chart {

/// A class at (stem, filtration). Colors are provenance only.
struct Dot {
    int stem = 0;
    int s = 0;
    std::string color;
    bool circled = false;
    friend auto operator<=>(const Dot&, const Dot&) = default;
};

/// h0: (stem, s) -> (stem, s+1); h1: (stem, s) -> (stem+1, s+1). Endpoints are (stem, s).
struct Edge {
    std::string type;
    std::pair<int, int> from;
    std::pair<int, int> to;
    std::string color;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct AdamsChart {
    int s_max = 6;
    int stem_max = 7;
    std::vector<Dot> dots;   // a bidegree of dimension n carries n dots
    std::vector<Edge> edges; // an edge of rank r between two bidegrees appears r times
    friend bool operator==(const AdamsChart&, const AdamsChart&) = default;
};

} // namespace bord::chart
