#pragma once

#include "bord/chart/types.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bord::chart {

/// Sorts dots and edges so equal charts compare equal.
AdamsChart normalized(AdamsChart c);

/// The chart shipped in the data directory for Sp4, SU8 or Spin16.
AdamsChart expected_chart(std::string_view group);

/// Count of Z and Z2 summands in one stem.
struct StemGroup {
    int z = 0;
    int z2 = 0;
    friend bool operator==(const StemGroup&, const StemGroup&) = default;
};

struct GroupDescriptor {
    std::vector<StemGroup> stems; // index = stem
    /// Without the odd-torsion input a tower only proves a 2-adic integer summand.
    bool two_complete = false;
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// "0", "Z", "Z^2", "Z2", "Z + Z2^2"; 2-adic towers print as "Z_2^" and "(Z_2^)^2".
std::string to_string(const StemGroup& g, bool two_complete = false);

/// Groups of a collapsed chart: each h0 tower reaching s_max is one Z, every other dot one Z2.
/// Throws InvariantError ("ambiguous extension") on a finite h0 chain of two or more dots.
GroupDescriptor read_off_groups(const AdamsChart& c, bool no_odd_torsion = true);

/// The table shipped in the data directory.
GroupDescriptor expected_groups(std::string_view group);

/// Multiset differences. `extra` is in the actual chart only, `missing` in the expected only.
struct ChartDiff {
    std::vector<Dot> extra_dots;
    std::vector<Dot> missing_dots;
    std::vector<Edge> extra_edges;
    std::vector<Edge> missing_edges;
    bool empty() const
    {
        return extra_dots.empty() && missing_dots.empty() && extra_edges.empty() && missing_edges.empty();
    }
};

enum class DiffMode { Colorblind, ColorAware };

/// InputError when the two charts cover different ranges.
ChartDiff diff(const AdamsChart& actual, const AdamsChart& expected, DiffMode mode = DiffMode::Colorblind);
std::string to_string(const ChartDiff& d);

/// format is "text", "svg" or "json"; anything else is an InputError.
std::string render(const AdamsChart& c, std::string_view format);

nlohmann::json to_json(const AdamsChart& c);
AdamsChart chart_from_json(const nlohmann::json& j);
/// Inverse of render(c, "json").
AdamsChart parse(std::string_view json_text);

nlohmann::json to_json(const GroupDescriptor& g);

} // namespace bord::chart
