#include "bord/pipeline/pipeline.hpp"

#include "bord/catalogue/catalogue.hpp"
#include "bord/errors.hpp"
#include "bord/steenrod/wu.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <sstream>

namespace bord::pipeline {

using nlohmann::json;

namespace {

std::string trim(std::string_view s)
{
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return std::string(s);
}

std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t p = s.find(sep, start);
        out.push_back(trim(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start)));
        if (p == std::string_view::npos)
            return out;
        start = p + 1;
    }
}

int to_int(std::string_view s, std::string_view what)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InputError(fmt::format("{}: '{}' is not an integer", what, s));
    return v;
}

bool to_bool(std::string_view s)
{
    if (s == "true" || s == "on" || s == "yes" || s == "1")
        return true;
    if (s == "false" || s == "off" || s == "no" || s == "0")
        return false;
    throw InputError(fmt::format("'{}' is not a boolean", s));
}

StageResult from_check(const std::string& stage, const steenrod::CheckReport& rep)
{
    StageResult r{stage, rep.ok(), {}};
    r.lines.push_back(fmt::format("{}: {} checks, {} violations", rep.name, rep.checked, rep.violations.size()));
    for (const auto& v : rep.violations)
        r.lines.push_back("  " + v);
    return r;
}

void merge(StageResult& into, const steenrod::CheckReport& rep)
{
    StageResult part = from_check(into.stage, rep);
    into.ok = into.ok && part.ok;
    into.lines.insert(into.lines.end(), part.lines.begin(), part.lines.end());
}

// Runs a stage body, turning any library error into a failed stage.
template <class F>
StageResult guarded(const std::string& stage, F&& body)
{
    try {
        return body();
    } catch (const RangeError&) {
        throw;
    } catch (const std::exception& e) {
        return {stage, false, {fmt::format("error: {}", e.what())}};
    }
}

chart::AdamsChart crop(const chart::AdamsChart& c, const resolution::Window& w)
{
    chart::AdamsChart out;
    out.s_max = w.s_max;
    out.stem_max = w.stem_max;
    auto inside = [&](int stem, int s) { return stem >= 0 && stem <= w.stem_max && s >= 0 && s <= w.s_max; };
    for (const auto& d : c.dots)
        if (inside(d.stem, d.s))
            out.dots.push_back(d);
    for (const auto& e : c.edges)
        if (inside(e.from.first, e.from.second) && inside(e.to.first, e.to.second))
            out.edges.push_back(e);
    return chart::normalized(out);
}

} // namespace

resolution::Window parse_window(std::string_view text)
{
    const auto parts = split(text, ',');
    if (parts.size() != 2)
        throw InputError(fmt::format("window '{}' must be S,T", text));
    return {to_int(parts[0], "window"), to_int(parts[1], "window")};
}

std::vector<std::string> parse_groups(std::string_view text)
{
    if (trim(text) == "all")
        return catalogue::group_names();
    std::vector<std::string> out;
    for (const auto& g : split(text, ','))
        out.push_back(catalogue::canonical_group(g));
    return out;
}

RunConfig parse_config(std::string_view text)
{
    RunConfig c;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (trim(line).empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw InputError(fmt::format("config line {}: expected key = value", number));
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key == "group")
            c.groups = parse_groups(value);
        else if (key == "window")
            c.window = parse_window(value);
        else if (key == "out")
            c.out_dir = value;
        else if (key == "formats") {
            c.formats = split(value, ',');
            for (const auto& f : c.formats)
                if (f != "text" && f != "json" && f != "svg")
                    throw InputError(fmt::format("config line {}: unknown format '{}'", number, f));
        } else if (key == "no_odd_torsion")
            c.no_odd_torsion = to_bool(value);
        else
            throw InputError(fmt::format("config line {}: unknown key '{}'", number, key));
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& file)
{
    std::ifstream in(file);
    if (!in)
        throw InputError(fmt::format("cannot read config {}", file.string()));
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

GroupRun build(const std::string& group, const resolution::Window& window)
{
    const auto setup = catalogue::group_setup(group);
    GroupRun run;
    run.group = setup.group;
    run.spec = catalogue::preset_ring(setup.ring);
    run.twisted = a1::thom_twist(run.spec, run.spec.ring().parse(setup.twist), setup.ceiling);
    if (const int safe = resolution::reliable_stem_max(run.twisted); window.stem_max > safe)
        throw RangeError(fmt::format("{}: stems up to {} requested, but the module is truncated above degree {}; "
                                     "maximal safe window is {},{}",
                                     run.group, window.stem_max, setup.ceiling, window.s_max, safe));
    for (const auto& fig : setup.parts)
        run.parts.push_back(a1::figure_module(run.spec, fig, run.twisted));
    return run;
}

StageResult ring_stage(const steenrod::SteenrodSpec& spec, int adem_degree)
{
    return guarded("ring", [&] {
        StageResult r{"ring", true, {fmt::format("ring {}", spec.ring().name())}};
        merge(r, steenrod::verify_instability(spec));
        merge(r, steenrod::verify_adem(spec, adem_degree));
        merge(r, steenrod::verify_low_adem(spec, adem_degree));
        merge(r, steenrod::verify_relation_stability(spec));
        merge(r, steenrod::verify_sq1_derivation(spec));
        return r;
    });
}

StageResult lemma_stage(const std::string& group, const steenrod::SteenrodSpec& spec)
{
    return guarded("lemma", [&] {
        const auto& ring = spec.ring();
        const std::string want = catalogue::data("groups").at("sq2_y4").at(group).get<std::string>();
        const auto got = spec.sq(2, ring.generator("y4"));
        const bool ok = ring.normal_form(got + ring.parse(want)).is_zero();
        return StageResult{"lemma", ok, {fmt::format("Sq2(y4) = {} (expected {})", ring.format(got), want)}};
    });
}

StageResult decomposition_stage(const GroupRun& run)
{
    return guarded("decomposition", [&] {
        StageResult r{"decomposition", true, {}};
        const int c = *run.twisted.ceiling();
        for (const auto& p : run.parts) {
            std::string dims;
            for (int d = p.module.lo(); d <= p.module.hi(); ++d)
                dims += fmt::format("{}{}", dims.empty() ? "" : " ", p.module.dim(d));
            r.lines.push_back(fmt::format("{}: generated in degree {}, dims [{}], {}", p.color, p.module.lo(), dims,
                                          a1::to_string(a1::is_free(p.module).outcome)));
        }
        merge(r, a1::verify_decomposition(run.twisted, run.parts, c - 1, c));
        return r;
    });
}

StageResult resolution_stage(GroupRun& run, const resolution::Window& window)
{
    return guarded("resolution", [&] {
        StageResult r{"resolution", true, {}};
        const auto res = resolution::minimal_resolution(run.twisted, window);
        merge(r, resolution::verify_exactness(res));
        merge(r, resolution::verify_acyclicity(res));
        merge(r, resolution::verify_minimality(res));
        run.whole = resolution::to_chart(resolution::ext_table(res));
        std::vector<resolution::ColoredModule> parts;
        for (const auto& p : run.parts)
            parts.push_back({p.color, p.module});
        run.overlay = resolution::ext_of_sum(parts, window);
        const auto d = chart::diff(run.overlay, run.whole, chart::DiffMode::Colorblind);
        r.lines.push_back(fmt::format("overlay of the summands against the whole module: {}",
                                      d.empty() ? "identical" : "differs"));
        if (!d.empty()) {
            r.ok = false;
            r.lines.push_back(chart::to_string(d));
        }
        return r;
    });
}

StageResult chart_stage(const GroupRun& run, chart::ChartDiff* colorblind)
{
    return guarded("chart", [&] {
        StageResult r{"chart", true, {}};
        const auto fixture = chart::expected_chart(run.group);
        const resolution::Window mine{run.overlay.s_max, run.overlay.stem_max};
        const resolution::Window common{std::min(mine.s_max, fixture.s_max),
                                        std::min(mine.stem_max, fixture.stem_max)};
        if (!(common == mine))
            r.lines.push_back(fmt::format("only s <= {}, stems <= {} are covered by the fixture", common.s_max,
                                          common.stem_max));
        const auto a = crop(run.overlay, common);
        const auto b = crop(fixture, common);
        for (auto mode : {chart::DiffMode::Colorblind, chart::DiffMode::ColorAware}) {
            const auto d = chart::diff(a, b, mode);
            const char* name = mode == chart::DiffMode::Colorblind ? "colorblind" : "color-aware";
            r.lines.push_back(fmt::format("{} diff: {}", name, d.empty() ? "empty" : "NONEMPTY"));
            if (!d.empty()) {
                r.ok = false;
                r.lines.push_back(chart::to_string(d));
            }
            if (colorblind && mode == chart::DiffMode::Colorblind)
                *colorblind = d;
        }
        return r;
    });
}

StageResult groups_stage(const GroupRun& run, bool no_odd_torsion, chart::GroupDescriptor* out)
{
    return guarded("groups", [&] {
        StageResult r{"groups", true, {}};
        const auto got = chart::read_off_groups(run.overlay, no_odd_torsion);
        const auto want = chart::expected_groups(run.group);
        for (std::size_t k = 0; k < got.stems.size(); ++k) {
            std::string line = fmt::format("stem {}: {}", k, chart::to_string(got.stems[k], got.two_complete));
            if (k < want.stems.size() && !(want.stems[k] == got.stems[k])) {
                r.ok = false;
                line += fmt::format("  (expected {})", chart::to_string(want.stems[k], got.two_complete));
            }
            r.lines.push_back(line);
        }
        if (out)
            *out = got;
        return r;
    });
}

StageResult certificate_stage(const std::string& group, const chart::AdamsChart& chart)
{
    return guarded("certificates", [&] {
        StageResult r{"certificates", true, {}};
        auto check = [&](bool ok, const std::string& line) {
            r.ok = r.ok && ok;
            r.lines.push_back(fmt::format("[{}] {}", ok ? "ok" : "FAIL", line));
        };
        const json& gens = catalogue::data("groups").at("generators").at(group);
        const auto table = chart::expected_groups(group);

        for (const auto& [stem_key, names] : gens.items()) {
            const int stem = std::stoi(stem_key);
            const auto want = table.stems.at(static_cast<std::size_t>(stem));
            check(static_cast<int>(names.size()) == want.z + want.z2,
                  fmt::format("stem {}: {} generators for {}", stem, names.size(), chart::to_string(want)));

            std::vector<std::pair<long long, long long>> pairs;
            long long x2y4_hits = 0;
            for (const auto& n : names) {
                const auto name = n.get<std::string>();
                const auto m = charnum::preset_manifold(name);
                const auto& model = m.model;
                if (model.dimension != stem) {
                    check(false, fmt::format("{} has dimension {}", name, model.dimension));
                    continue;
                }
                if (!m.map) {
                    check(charnum::integrate(model, model.f2.ring().one()) == 1, fmt::format("{}: [pt] = 1", name));
                    continue;
                }
                const auto& f = *m.map;
                check(charnum::spin_g_check(model, f), fmt::format("{}: f*x2 = w2", name));
                for (const auto& rep : {charnum::naturality_check(model, f), charnum::reduction_check(model, f),
                                        charnum::lift_check(model, f)}) {
                    if (rep.checked == 0)
                        continue;
                    check(rep.ok(), fmt::format("{} ({} checks)", rep.name, rep.checked));
                    for (const auto& v : rep.violations)
                        r.lines.push_back("    " + v);
                }
                if (stem == 4) {
                    pairs.push_back(charnum::deg4_invariants(model, f));
                    r.lines.push_back(fmt::format("     {}: (signature, z4) = ({}, {})", name, pairs.back().first,
                                                  pairs.back().second));
                }
                if (stem == 6) {
                    check(charnum::wu_parity_check(model, f), fmt::format("{}: Wu parity", name));
                    if (f.integral.count("z6")) {
                        pairs.push_back(charnum::deg6_invariants(model, f));
                        r.lines.push_back(fmt::format("     {}: (z6/2, x2y4) = ({}, {})", name, pairs.back().first,
                                                      pairs.back().second));
                        x2y4_hits += pairs.back().second;
                    }
                }
            }
            if (stem == 4 || (stem == 6 && want.z == 1)) {
                if (pairs.size() == 2) {
                    const long long det =
                        pairs[0].first * pairs[1].second - pairs[0].second * pairs[1].first;
                    check(det == 1 || det == -1, fmt::format("stem {}: invariant matrix has determinant {}", stem, det));
                } else {
                    check(false, fmt::format("stem {}: need two invariant pairs, have {}", stem, pairs.size()));
                }
            } else if (stem == 6) {
                check(x2y4_hits >= 1, "stem 6: a generator with odd x2y4 pairing");
            }
        }

        auto certs = charnum::deg5_certificates(chart);
        if (group != "Sp4")
            certs.resize(2); // the S1 multiples of HP1 only survive for Sp4
        for (const auto& c : certs) {
            if (c.bidegree.first > chart.stem_max || c.bidegree.second > chart.s_max)
                continue; // outside the computed window
            check(c.ok(), fmt::format("{} = {}{}", c.name, c.value, c.note.empty() ? "" : "  (" + c.note + ")"));
        }
        return r;
    });
}

bool GroupReport::ok() const
{
    return std::all_of(stages.begin(), stages.end(), [](const StageResult& s) { return s.ok; });
}

bool Report::ok() const
{
    return std::all_of(groups.begin(), groups.end(), [](const GroupReport& g) { return g.ok(); }) &&
           std::all_of(global.begin(), global.end(), [](const StageResult& s) { return s.ok; });
}

GroupReport run_group(const std::string& group, const RunConfig& config)
{
    GroupReport out;
    out.group = catalogue::canonical_group(group);
    GroupRun run = build(out.group, config.window);
    out.stages.push_back(ring_stage(run.spec));
    out.stages.push_back(lemma_stage(out.group, run.spec));
    out.stages.push_back(decomposition_stage(run));
    out.stages.push_back(resolution_stage(run, config.window));
    if (!out.stages.back().ok)
        return out;
    out.chart = run.overlay;
    out.stages.push_back(chart_stage(run));
    out.stages.push_back(groups_stage(run, config.no_odd_torsion, &out.groups));
    out.stages.push_back(certificate_stage(out.group, run.overlay));
    return out;
}

Report run(const RunConfig& config)
{
    Report report;
    report.config = config;
    if (config.groups.empty())
        throw InputError("no groups to run");
    // fail fast on the window before spawning work
    for (const auto& g : config.groups)
        build(g, config.window);

    std::vector<std::future<GroupReport>> jobs;
    for (const auto& g : config.groups)
        jobs.push_back(std::async(std::launch::async, [g, &config] { return run_group(g, config); }));
    for (auto& j : jobs)
        report.groups.push_back(j.get());

    report.global.push_back(guarded("wu lemma", [] {
        const bool ok = steenrod::wu_manifold_lemma_check();
        return StageResult{"wu lemma", ok, {"w5w2^2 + w3^3 from the Wu formula, nonzero"}};
    }));
    if (report.groups.size() > 1) {
        StageResult s{"low degrees", true, {}};
        const int through = std::min(4, config.window.stem_max);
        const auto& first = report.groups.front();
        for (const auto& g : report.groups) {
            if (g.groups.stems.size() <= static_cast<std::size_t>(through)) {
                s.ok = false;
                s.lines.push_back(fmt::format("{}: no group table", g.group));
                continue;
            }
            for (int k = 0; k <= through; ++k)
                if (!(g.groups.stems[k] == first.groups.stems[k])) {
                    s.ok = false;
                    s.lines.push_back(fmt::format("stem {}: {} and {} differ", k, first.group, g.group));
                }
        }
        s.lines.push_back(fmt::format("stems 0..{} agree across {} groups: {}", through, report.groups.size(),
                                      s.ok ? "yes" : "no"));
        report.global.push_back(s);
    }

    report.assumptions = {
        "collapse: no Adams differentials are computed; the spectral sequence is taken to collapse in the window",
        fmt::format("tower extrapolation: an h0 tower reaching s = {} is read as infinite", config.window.s_max),
        config.no_odd_torsion ? "odd torsion: taken to vanish, so each tower is a copy of Z"
                              : "odd torsion: not assumed away, so each tower is only a 2-adic integer summand",
        "truncation: a module kept through degree c determines stems up to c - 1",
    };
    return report;
}

std::string to_text(const Report& r)
{
    std::string out = "twisted spin bordism report\n";
    out += fmt::format("window: s <= {}, stems 0..{}\n", r.config.window.s_max, r.config.window.stem_max);
    for (const auto& g : r.groups) {
        out += fmt::format("\n== {} ==\n", g.group);
        for (const auto& s : g.stages) {
            out += fmt::format("[{}] {}\n", s.ok ? "PASS" : "FAIL", s.stage);
            for (const auto& l : s.lines) {
                std::string_view rest = l;
                while (!rest.empty()) {
                    const auto nl = rest.find('\n');
                    out += fmt::format("    {}\n", rest.substr(0, nl));
                    if (nl == std::string_view::npos)
                        break;
                    rest.remove_prefix(nl + 1);
                }
            }
        }
        out += "chart:\n" + chart::render(g.chart, "text");
    }
    out += "\n== global ==\n";
    for (const auto& s : r.global) {
        out += fmt::format("[{}] {}\n", s.ok ? "PASS" : "FAIL", s.stage);
        for (const auto& l : s.lines)
            out += fmt::format("    {}\n", l);
    }
    out += "\nassumptions:\n";
    for (const auto& a : r.assumptions)
        out += "  - " + a + "\n";
    out += fmt::format("\nresult: {}\n", r.ok() ? "PASS" : "FAIL");
    return out;
}

json to_json(const Report& r)
{
    json groups = json::object();
    for (const auto& g : r.groups) {
        json stages = json::array();
        for (const auto& s : g.stages)
            stages.push_back({{"stage", s.stage}, {"ok", s.ok}, {"lines", s.lines}});
        groups[g.group] = {{"ok", g.ok()}, {"stages", stages}, {"groups", chart::to_json(g.groups)}};
    }
    json global = json::array();
    for (const auto& s : r.global)
        global.push_back({{"stage", s.stage}, {"ok", s.ok}, {"lines", s.lines}});
    return {{"window", {r.config.window.s_max, r.config.window.stem_max}},
            {"no_odd_torsion", r.config.no_odd_torsion},
            {"ok", r.ok()},
            {"groups", groups},
            {"global", global},
            {"assumptions", r.assumptions}};
}

namespace {

void write_file(const std::filesystem::path& p, const std::string& text)
{
    std::ofstream out(p, std::ios::binary);
    if (!out)
        throw InputError(fmt::format("cannot write {}", p.string()));
    out << text;
}

} // namespace

void write_artifacts(const Report& r, const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir / "charts");
    write_file(dir / "report.txt", to_text(r));
    json groups = json::object();
    for (const auto& g : r.groups)
        groups[g.group] = chart::to_json(g.groups);
    write_file(dir / "groups.json", groups.dump(2) + "\n");
    for (const auto& g : r.groups)
        for (const auto& f : r.config.formats) {
            const std::string ext = f == "text" ? "txt" : f;
            write_file(dir / "charts" / fmt::format("{}.{}", g.group, ext), chart::render(g.chart, f));
        }
}

} // namespace bord::pipeline
