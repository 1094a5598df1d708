#pragma once

#include "bord/a1/twisted.hpp"
#include "bord/chart/chart.hpp"
#include "bord/charnum/charnum.hpp"
#include "bord/resolution/resolution.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace bord::pipeline {

struct RunConfig {
    std::vector<std::string> groups = {"Sp4"}; // canonical names
    resolution::Window window;
    std::filesystem::path out_dir; // empty: write nothing
    std::vector<std::string> formats = {"text", "json", "svg"};
    bool no_odd_torsion = true;
};

/// Key-value lines, '#' starts a comment:
///   group = Sp4 | SU8 | Spin16 | all
///   window = 6,7          (s_max, stem_max)
///   out = results
///   formats = text,json,svg
///   no_odd_torsion = true
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& file);
/// "6,7" -> {6, 7}
resolution::Window parse_window(std::string_view text);
/// "all" expands to the three groups.
std::vector<std::string> parse_groups(std::string_view text);

struct StageResult {
    std::string stage;
    bool ok = true;
    std::vector<std::string> lines;
};

/// Everything computed for one structure group.
struct GroupRun {
    std::string group;
    steenrod::SteenrodSpec spec;
    a1::A1Module twisted;
    std::vector<a1::FigurePart> parts;
    chart::AdamsChart whole;   // Ext of the twisted module, uncolored
    chart::AdamsChart overlay; // Ext of the parts, colored
};

/// Builds the twisted module and its summands (throws on malformed fixtures).
GroupRun build(const std::string& group, const resolution::Window& window);

StageResult ring_stage(const steenrod::SteenrodSpec& spec, int adem_degree = 11);
StageResult lemma_stage(const std::string& group, const steenrod::SteenrodSpec& spec);
StageResult decomposition_stage(const GroupRun& run);
StageResult resolution_stage(GroupRun& run, const resolution::Window& window);
StageResult chart_stage(const GroupRun& run, chart::ChartDiff* colorblind = nullptr);
StageResult groups_stage(const GroupRun& run, bool no_odd_torsion, chart::GroupDescriptor* out = nullptr);
StageResult certificate_stage(const std::string& group, const chart::AdamsChart& chart);

struct GroupReport {
    std::string group;
    std::vector<StageResult> stages;
    chart::AdamsChart chart;
    chart::GroupDescriptor groups;
    bool ok() const;
};

struct Report {
    RunConfig config;
    std::vector<GroupReport> groups;
    std::vector<StageResult> global; // lemma and cross-group checks
    std::vector<std::string> assumptions;
    bool ok() const;
};

GroupReport run_group(const std::string& group, const RunConfig& config);
/// Groups run concurrently. RangeError before any work when the window exceeds what the
/// truncated modules determine.
Report run(const RunConfig& config);

std::string to_text(const Report& r);
nlohmann::json to_json(const Report& r);
/// report.txt, groups.json and charts/<group>.{txt,json,svg} per the configured formats.
void write_artifacts(const Report& r, const std::filesystem::path& dir);

} // namespace bord::pipeline
