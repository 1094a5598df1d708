#pragma once

#include "bord/a1/twisted.hpp"
#include "bord/steenrod/steenrod.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bord::catalogue {

/// One of the data files compiled into the library ("rings", "figures", "charts", "groups",
/// "manifolds"), parsed once.
const nlohmann::json& data(std::string_view file);

/// Ring and Steenrod action by catalogue key: BSp4modZ2, BSU8modZ2, BSs16, B2Z2, BSp4, BSU8,
/// BSpin16, BSO2..BSO16, and the manifold model rings (HP1, CP2, Wu, ...).
steenrod::SteenrodSpec preset_ring(std::string_view name);
std::vector<std::string> preset_names();

/// The three structure groups, in report order.
const std::vector<std::string>& group_names();
/// Accepts "Sp4", "SU8", "Spin16" and the spellings "Sp(4)", "SU(8)", "Spin(16)".
std::string canonical_group(std::string_view name);

struct GroupSetup {
    std::string group;
    std::string ring;  // catalogue key of the quotient's cohomology ring
    std::string twist; // degree-2 class, as a polynomial string
    int ceiling = 8;
    std::vector<a1::FigureModuleSpec> parts;
};
GroupSetup group_setup(std::string_view group);

} // namespace bord::catalogue
