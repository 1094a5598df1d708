#include "bord/a1/twisted.hpp"
#include "bord/catalogue/catalogue.hpp"
#include "bord/chart/chart.hpp"
#include "bord/errors.hpp"
#include "bord/pipeline/pipeline.hpp"
#include "bord/resolution/resolution.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>

using namespace bord;
namespace fs = std::filesystem;

namespace {

struct Globals {
    std::string out;
    std::string format = "text";
    std::string window;
};

resolution::Window window_of(const Globals& g)
{
    return g.window.empty() ? resolution::Window{} : pipeline::parse_window(g.window);
}

// Writes to --out/<name> when an output directory is set, otherwise to stdout.
void emit(const Globals& g, const std::string& name, const std::string& text)
{
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    fs::create_directories(g.out);
    std::ofstream(fs::path(g.out) / name, std::ios::binary) << text;
    std::cout << fmt::format("wrote {}\n", (fs::path(g.out) / name).string());
}

std::string ext_of(const std::string& format) { return format == "text" ? "txt" : format; }

int ring_verify(const Globals& g, const std::string& name, int adem_degree)
{
    const auto spec = catalogue::preset_ring(name);
    auto r = pipeline::ring_stage(spec, std::min(adem_degree, spec.ring().degree_bound()));
    std::string text;
    for (const auto& l : r.lines)
        text += l + "\n";
    text += fmt::format("{}\n", r.ok ? "PASS" : "FAIL");
    emit(g, fmt::format("ring-{}.txt", name), text);
    return r.ok ? 0 : 1;
}

int module_build(const Globals& g, const std::string& group)
{
    const auto run = pipeline::build(catalogue::canonical_group(group), window_of(g));
    const auto& m = run.twisted;
    std::string text;
    if (g.format == "json") {
        text = a1::to_json(m).dump(2) + "\n";
    } else {
        text = fmt::format("Thom-twisted module for {} (ring {}, kept through degree {})\n", run.group,
                           run.spec.ring().name(), *m.ceiling());
        for (int d = m.lo(); d <= m.hi(); ++d)
            text += fmt::format("  degree {:>2}: dim {:>2}  {}\n", d, m.dim(d), fmt::join(m.labels(d), ", "));
        const auto v = m.validate();
        text += fmt::format("A(1) relations: {} checks, {}\n", v.checked, v.ok() ? "all hold" : "VIOLATED");
    }
    emit(g, fmt::format("module-{}.{}", run.group, g.format == "json" ? "json" : "txt"), text);
    return 0;
}

int module_decompose(const Globals& g, const std::string& group)
{
    const auto run = pipeline::build(catalogue::canonical_group(group), window_of(g));
    const auto r = pipeline::decomposition_stage(run);
    std::string text;
    if (g.format == "json") {
        nlohmann::json parts = nlohmann::json::array();
        for (const auto& p : run.parts)
            parts.push_back({{"color", p.color}, {"module", a1::to_json(p.module)}});
        text = nlohmann::json{{"group", run.group}, {"ok", r.ok}, {"parts", parts}}.dump(2) + "\n";
    } else {
        for (const auto& l : r.lines)
            text += l + "\n";
        text += fmt::format("{}\n", r.ok ? "PASS" : "FAIL");
    }
    emit(g, fmt::format("decompose-{}.{}", run.group, g.format == "json" ? "json" : "txt"), text);
    return r.ok ? 0 : 1;
}

int ext_compute(const Globals& g, const std::string& group)
{
    const auto w = window_of(g);
    auto run = pipeline::build(catalogue::canonical_group(group), w);
    const auto r = pipeline::resolution_stage(run, w);
    if (!r.ok)
        for (const auto& l : r.lines)
            std::cerr << l << "\n";
    emit(g, fmt::format("{}.{}", run.group, ext_of(g.format)), chart::render(run.overlay, g.format));
    return r.ok ? 0 : 1;
}

int chart_compare(const Globals& g, const std::string& group)
{
    const auto w = window_of(g);
    auto run = pipeline::build(catalogue::canonical_group(group), w);
    auto r = pipeline::resolution_stage(run, w);
    if (r.ok)
        r = pipeline::chart_stage(run);
    std::string text;
    for (const auto& l : r.lines)
        text += l + (l.empty() || l.back() != '\n' ? "\n" : "");
    emit(g, fmt::format("compare-{}.txt", run.group), text);
    return r.ok ? 0 : 1;
}

int generators_certify(const Globals& g, const std::string& group)
{
    const auto w = window_of(g);
    auto run = pipeline::build(catalogue::canonical_group(group), w);
    pipeline::resolution_stage(run, w);
    const auto r = pipeline::certificate_stage(run.group, run.overlay);
    std::string text;
    for (const auto& l : r.lines)
        text += l + "\n";
    text += fmt::format("{}\n", r.ok ? "PASS" : "FAIL");
    emit(g, fmt::format("certificates-{}.txt", run.group), text);
    return r.ok ? 0 : 1;
}

int bordism_report(const Globals& g, const std::string& config_file, const std::string& group, bool all,
                   bool odd_torsion)
{
    pipeline::RunConfig c = config_file.empty() ? pipeline::RunConfig{} : pipeline::load_config(config_file);
    if (all)
        c.groups = catalogue::group_names();
    else if (!group.empty())
        c.groups = pipeline::parse_groups(group);
    if (!g.window.empty())
        c.window = pipeline::parse_window(g.window);
    if (!g.out.empty())
        c.out_dir = g.out;
    if (odd_torsion)
        c.no_odd_torsion = false;
    const auto report = pipeline::run(c);
    if (g.format == "json")
        std::cout << pipeline::to_json(report).dump(2) << "\n";
    else
        std::cout << pipeline::to_text(report);
    if (!c.out_dir.empty())
        pipeline::write_artifacts(report, c.out_dir);
    return report.ok() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Twisted spin bordism via Adams charts over A(1)"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--out", g.out, "Output directory");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "svg"}));
    app.add_option("--window", g.window, "Window S,T: filtrations 0..S, stems 0..T");

    std::string name, config_file, group;
    int adem_degree = 11;
    bool all = false, odd_torsion = false;
    std::function<int()> action;

    auto* ring = app.add_subcommand("ring", "Cohomology rings and Steenrod actions")->require_subcommand(1);
    auto* ring_verify_cmd = ring->add_subcommand("verify", "Run the Steenrod checks on a catalogued ring");
    ring_verify_cmd->add_option("name", name, "Ring name")->required();
    ring_verify_cmd->add_option("--adem-degree", adem_degree, "Largest source degree for Adem checks");
    ring_verify_cmd->callback([&] { action = [&] { return ring_verify(g, name, adem_degree); }; });

    auto* module = app.add_subcommand("module", "Thom-twisted A(1)-modules")->require_subcommand(1);
    auto* build_cmd = module->add_subcommand("build", "Build the twisted module of a group");
    build_cmd->add_option("group", name)->required();
    build_cmd->callback([&] { action = [&] { return module_build(g, name); }; });
    auto* decompose_cmd = module->add_subcommand("decompose", "Regenerate and check the colored summands");
    decompose_cmd->add_option("group", name)->required();
    decompose_cmd->callback([&] { action = [&] { return module_decompose(g, name); }; });

    auto* ext = app.add_subcommand("ext", "Ext over A(1)")->require_subcommand(1);
    auto* ext_cmd = ext->add_subcommand("compute", "Compute the Adams chart of a group");
    ext_cmd->add_option("group", name)->required();
    ext_cmd->callback([&] { action = [&] { return ext_compute(g, name); }; });

    auto* chart = app.add_subcommand("chart", "Adams charts")->require_subcommand(1);
    auto* compare_cmd = chart->add_subcommand("compare", "Diff the computed chart against the shipped one");
    compare_cmd->add_option("group", name)->required();
    compare_cmd->callback([&] { action = [&] { return chart_compare(g, name); }; });

    auto* bordism = app.add_subcommand("bordism", "Bordism groups")->require_subcommand(1);
    auto* report_cmd = bordism->add_subcommand("report", "Full run with all verifications");
    auto* group_opt = report_cmd->add_option("--group", group, "Sp4, SU8 or Spin16");
    report_cmd->add_flag("--all", all, "All three groups")->excludes(group_opt);
    report_cmd->add_option("--config", config_file, "Key-value config file");
    report_cmd->add_flag("--allow-odd-torsion", odd_torsion, "Read towers as 2-adic integers only");
    report_cmd->callback([&] { action = [&] { return bordism_report(g, config_file, group, all, odd_torsion); }; });

    auto* generators = app.add_subcommand("generators", "Generator manifolds")->require_subcommand(1);
    auto* certify_cmd = generators->add_subcommand("certify", "Check the characteristic-number certificates");
    certify_cmd->add_option("group", name)->required();
    certify_cmd->callback([&] { action = [&] { return generators_certify(g, name); }; });

    for (auto* sub : {ring, module, ext, chart, bordism, generators}) {
        sub->fallthrough();
        for (auto* leaf : sub->get_subcommands({}))
            leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return action();
    } catch (const RangeError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "failed: " << e.what() << "\n";
        return 1;
    }
}
