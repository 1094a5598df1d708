#pragma once

#include "bord/a1/module.hpp"
#include "bord/chart/types.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bord::resolution {

using a1::A1Module;
using f2::BitVector;
using f2::Matrix;

/// Filtrations 0..s_max and stems 0..stem_max.
struct Window {
    int s_max = 6;
    int stem_max = 7;
    int t_max() const { return s_max + stem_max; }
    friend bool operator==(const Window&, const Window&) = default;
};

/// Largest stem that a module truncated at `ceiling` determines: the discarded part lives in
/// degrees > ceiling and only reaches stems >= ceiling through the long exact sequence.
int reliable_stem_max(const A1Module& m);

/// Level s of the resolution: generators of F_s and their images under d_s.
struct Level {
    std::vector<int> degrees;
    // images[k]: d_s(g_k) in degree degrees[k] of the target (M for s = 0, F_{s-1} otherwise)
    std::vector<BitVector> images;
};

class MinimalResolution {
public:
    /// Resolves m through internal degree window.t_max(). RangeError when the window asks for
    /// stems the truncation of m does not determine.
    MinimalResolution(A1Module m, Window window);

    const A1Module& module() const { return module_; }
    const Window& window() const { return window_; }
    int t_max() const { return window_.t_max(); }
    std::size_t num_levels() const { return levels_.size(); }
    const Level& level(std::size_t s) const { return levels_.at(s); }
    /// F_s, kept through t_max.
    const A1Module& free(std::size_t s) const { return free_.at(s); }
    /// Matrix of d_s in internal degree t: F_s,t -> (M or F_{s-1})_t.
    Matrix differential(std::size_t s, int t) const;

    /// Number of level-s generators in degree t.
    std::size_t ext_dim(int s, int t) const;

private:
    const A1Module& target(std::size_t s) const { return s == 0 ? module_ : free_[s - 1]; }

    A1Module module_;
    Window window_;
    std::vector<Level> levels_;
    std::vector<A1Module> free_;
};

MinimalResolution minimal_resolution(const A1Module& m, Window window = {});

/// d_{s} d_{s+1} = 0 in every degree, including the augmentation at s = 0.
steenrod::CheckReport verify_exactness(const MinimalResolution& r);
/// Exactness at each F_s and onto-ness of the augmentation, by ranks.
steenrod::CheckReport verify_acyclicity(const MinimalResolution& r);
/// No differential d_s (s >= 1) has a unit coefficient on a generator.
steenrod::CheckReport verify_minimality(const MinimalResolution& r);

/// Multiplication by h0 or h1 from Ext^{s,t} to Ext^{s+1,t+1} or Ext^{s+1,t+2}.
struct Product {
    std::string type; // "h0" or "h1"
    int s = 0;
    int t = 0;
    std::size_t rank = 0;
    Matrix matrix; // rows: targets, cols: sources (dual generator bases)
};

struct ExtTable {
    Window window;
    std::map<std::pair<int, int>, std::size_t> dims; // (s, t) -> dimension, nonzero entries in the window
    std::vector<Product> products;                    // nonzero ranks, both ends in the window

    std::size_t dim(int s, int t) const;
    friend bool operator==(const ExtTable& a, const ExtTable& b) { return a.dims == b.dims && a.ranks() == b.ranks(); }
    std::map<std::tuple<std::string, int, int>, std::size_t> ranks() const;
};

ExtTable ext_table(const MinimalResolution& r);
inline ExtTable ext_table(const A1Module& m, Window window = {}) { return ext_table(minimal_resolution(m, window)); }

/// Dots and edges of a table in one color.
chart::AdamsChart to_chart(const ExtTable& table, const std::string& color = "", bool circled = false);

struct ColoredModule {
    std::string color;
    A1Module module;
};

/// Overlay of the parts' charts. A part whose module is free carries circled dots; a free
/// part with a dot outside filtration 0 is an invariant failure.
chart::AdamsChart ext_of_sum(const std::vector<ColoredModule>& parts, Window window = {});

nlohmann::json to_json(const ExtTable& t);

} // namespace bord::resolution
