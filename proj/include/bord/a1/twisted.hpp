#pragma once

#include "bord/a1/module.hpp"
#include "bord/steenrod/steenrod.hpp"

#include <json.hpp>

namespace bord::a1 {

using steenrod::SteenrodSpec;

/// The cohomology of the ring through `ceiling`, with Sq1 and Sq2 as action matrices over the
/// monomial bases. Needs ceiling <= degree_bound - 2 so every action lands inside the bound.
A1Module module_from_cohomology(const SteenrodSpec& spec, int ceiling);

/// Multiplication by a homogeneous class, one matrix per degree 0..ceiling (targets above the
/// ceiling have no rows).
std::vector<f2::Matrix> multiplication_maps(const SteenrodSpec& spec, const ring::Polynomial& cls, int ceiling);

/// Adds the given degree-raising-by-2 maps to sq2.
A1Module twist_action(const A1Module& m, const std::vector<f2::Matrix>& by_degree);

/// Module on the symbols U m: sq1(Um) = U Sq1 m and sq2(Um) = U (Sq2 m + twist m).
A1Module thom_twist(const SteenrodSpec& spec, const ring::Polynomial& twist, int ceiling);

struct FigureLabel {
    int degree = 0;
    std::string text; // "U", "Ux2", "U(x5+x2x3)"
};

struct FigureModuleSpec {
    std::string color;
    std::vector<FigureLabel> labels; // the first label of lowest degree is the generator
};

/// A summand of the twisted module together with its inclusion, one matrix per degree.
struct FigurePart {
    std::string color;
    A1Module module;
    std::vector<f2::Matrix> inclusion; // inclusion[d - twisted.lo()]: twisted.dim(d) x module.dim(d)
};

/// Coordinates of a label "U p" in the twisted module.
f2::BitVector label_vector(const SteenrodSpec& spec, const A1Module& twisted, const FigureLabel& label);

/// The submodule generated by the lowest label, in the basis of the listed labels. Throws
/// DataError when the labels are dependent, vanish, or do not span exactly that submodule.
FigurePart figure_module(const SteenrodSpec& spec, const FigureModuleSpec& fig, const A1Module& twisted);

/// (a) the parts meet trivially, (b) they fill the twisted module in degrees <= equal_through,
/// (c) sq1 and sq2 of every part element agree with the twisted action when the target degree
/// is <= action_through.
CheckReport verify_decomposition(const A1Module& twisted, const std::vector<FigurePart>& parts, int equal_through = 7,
                                 int action_through = 8);

FigureModuleSpec figure_spec_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FigureModuleSpec& fig);

} // namespace bord::a1
