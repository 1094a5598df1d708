// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include "bord/a1/algebra.hpp"
#include "bord/a1/twisted.hpp"
#include "bord/catalogue/catalogue.hpp"
#include "bord/charnum/charnum.hpp"
#include "bord/chart/chart.hpp"
#include "bord/errors.hpp"
#include "bord/f2/matrix.hpp"
#include "bord/pipeline/pipeline.hpp"
#include "bord/resolution/resolution.hpp"
#include "bord/steenrod/steenrod.hpp"
#include "bord/steenrod/wu.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <random>
#include <set>

using namespace bord;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

Outcome table_reproduction()
{
    Outcome o;
    pipeline::RunConfig cfg;
    cfg.groups = pipeline::parse_groups("all");
    const auto start = std::chrono::steady_clock::now();
    const auto report = pipeline::run(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    using G = chart::StemGroup;
    const std::map<std::string, std::vector<G>> expected = {
        {"Sp4", {{1, 0}, {}, {}, {}, {2, 0}, {0, 2}, {0, 2}, {}}},
        {"SU8", {{1, 0}, {}, {}, {}, {2, 0}, {0, 1}, {1, 1}, {}}},
        {"Spin16", {{1, 0}, {}, {}, {}, {2, 0}, {0, 1}, {0, 1}, {}}},
    };
    o.require(report.ok(), "report has failing stages");
    for (const auto& g : report.groups)
        o.require(g.groups.stems == expected.at(g.group), g.group + " groups differ");
    o.require(report.groups.size() == 3, "missing groups");
    o.require(secs < 60.0, fmt::format("took {:.1f}s", secs));
    if (o.ok)
        o.detail = fmt::format("3 groups, stems 0-7, {:.2f}s", secs);
    return o;
}

Outcome chart_reproduction()
{
    Outcome o;
    for (const auto& g : catalogue::group_names()) {
        auto run = pipeline::build(g, {});
        pipeline::resolution_stage(run, {});
        const auto expected = chart::expected_chart(g);
        o.require(chart::diff(run.whole, expected).empty(), g + ": colorblind diff not empty");
        o.require(chart::diff(run.overlay, expected, chart::DiffMode::ColorAware).empty(), g + ": colored diff");
        for (auto [stem, s] : {std::pair{5, 0}, std::pair{6, 0}})
            o.require(std::count_if(run.overlay.dots.begin(), run.overlay.dots.end(),
                                    [&](const chart::Dot& d) { return d.stem == stem && d.s == s && d.circled; }) == 1,
                      fmt::format("{}: no circled dot at ({},{})", g, stem, s));
        if (g == "Sp4")
            for (auto [from, to] : {std::pair{std::pair{4, 0}, std::pair{5, 1}}, std::pair{std::pair{5, 1}, std::pair{6, 2}}})
                o.require(std::count_if(run.overlay.edges.begin(), run.overlay.edges.end(),
                                        [&](const chart::Edge& e) { return e.type == "h1" && e.from == from && e.to == to; }) == 1,
                          "Sp4: missing h1 edge");
    }
    if (o.ok)
        o.detail = "empty diffs for Sp4, SU8, Spin16";
    return o;
}

Outcome steenrod_verification()
{
    Outcome o;
    for (const char* name : {"BSp4modZ2", "BSU8modZ2", "BSs16"}) {
        const auto s = catalogue::preset_ring(name);
        o.require(steenrod::verify_instability(s).ok(), std::string(name) + ": instability");
        o.require(steenrod::verify_adem(s, 11).ok(), std::string(name) + ": Adem");
        o.require(steenrod::verify_low_adem(s, 11).ok(), std::string(name) + ": low Adem");
        o.require(steenrod::verify_relation_stability(s).ok(), std::string(name) + ": relation stability");
    }
    const auto sp = catalogue::preset_ring("BSp4modZ2");
    const auto& r = sp.ring();
    o.require(sp.sq(2, r.parse("y4")) == r.normal_form(r.parse("x2y4")), "Sq2 y4 != x2y4");
    o.require(steenrod::wu_manifold_lemma_check(), "Wu-manifold expression");
    if (o.ok)
        o.detail = "3 presets, Sq2 y4 = x2y4, w5 w2^2 + w3^3 != 0";
    return o;
}

Outcome figure_verification()
{
    Outcome o;
    std::size_t total = 0;
    for (const auto& g : catalogue::group_names()) {
        const auto setup = catalogue::group_setup(g);
        const auto spec = catalogue::preset_ring(setup.ring);
        const auto tw = a1::thom_twist(spec, spec.ring().parse(setup.twist), setup.ceiling);
        std::vector<a1::FigurePart> parts;
        for (const auto& fig : setup.parts) {
            parts.push_back(a1::figure_module(spec, fig, tw));
            std::map<int, std::size_t> listed;
            for (const auto& l : fig.labels)
                ++listed[l.degree];
            for (const auto& [d, n] : listed)
                o.require(parts.back().module.dim(d) == n, g + " " + fig.color + ": degrees differ from labels");
            o.require(parts.back().module.total_dim() == fig.labels.size(), g + " " + fig.color + ": extra classes");
        }
        total += parts.size();
        o.require(a1::verify_decomposition(tw, parts, 7, 8).ok(), g + ": decomposition");
    }
    o.require(total == 15, fmt::format("{} summands", total));
    if (o.ok)
        o.detail = "15 summands, decompositions verified";
    return o;
}

Outcome oracle_equivalences()
{
    Outcome o;
    const auto& a = a1::A1Algebra::instance();
    std::vector<int> degs;
    for (std::size_t i = 0; i < a.dim(); ++i)
        degs.push_back(a.degree(i));
    std::sort(degs.begin(), degs.end());
    o.require(degs == std::vector<int>{0, 1, 2, 3, 3, 4, 5, 6}, "A(1) degrees");

    const auto ext = resolution::ext_table(a1::trivial_module(0), {6, 7});
    std::map<std::pair<int, int>, std::size_t> known;
    for (int s = 0; s <= 6; ++s)
        known[{s, s}] = 1;
    known[{1, 2}] = 1;
    known[{2, 4}] = 1;
    for (int s = 3; s <= 6; ++s)
        known[{s, s + 4}] = 1;
    o.require(ext.dims == known, "Ext(F2) pattern");

    std::mt19937_64 rng(20261016);
    for (int trial = 0; trial < 200 && o.ok; ++trial) {
        const std::size_t rows = 1 + rng() % 8, cols = 1 + rng() % 8;
        f2::Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (rng() % 2)
                    m.set(i, j);
        std::set<f2::BitVector> kernel, image;
        for (unsigned mask = 0; mask < (1u << cols); ++mask) {
            f2::BitVector x(cols);
            for (std::size_t j = 0; j < cols; ++j)
                if (mask >> j & 1u)
                    x.set(j);
            const auto y = m.apply(x);
            if (y.none())
                kernel.insert(x);
            image.insert(y);
        }
        const auto k = f2::kernel_basis(m);
        const auto im = f2::image(m);
        o.require(kernel.size() == (std::size_t{1} << k.dim()) && image.size() == (std::size_t{1} << im.dim()),
                  "f2 dimensions");
        for (const auto& v : kernel)
            o.require(k.contains(v), "f2 kernel");
        for (const auto& v : image)
            o.require(im.contains(v), "f2 image");
    }
    if (o.ok)
        o.detail = "A(1), Ext(F2), 200 enumerated matrices";
    return o;
}

Outcome characteristic_numbers()
{
    Outcome o;
    using charnum::preset_manifold;
    const auto cp21 = preset_manifold("CP2xCP1");
    o.require(charnum::integrate(cp21.model, "a^2b", charnum::Layer::Integral) == 1, "c1^2 c1' != 1");
    const auto c3 = preset_manifold("CP1cubed");
    o.require(charnum::integrate(c3.model, c3.map->integral.at("z6")) == -2, "(CP1)^3 value");
    o.require(charnum::signature(preset_manifold("CP2").model) == 1, "sign CP2");
    o.require(charnum::signature(preset_manifold("HP1").model) == 0, "sign HP1");
    const auto hp = preset_manifold("HP1");
    const auto cp = preset_manifold("CP2");
    o.require(charnum::deg4_invariants(hp.model, *hp.map) == std::pair<long long, long long>{0, 1}, "HP1 pair");
    o.require(charnum::deg4_invariants(cp.model, *cp.map) == std::pair<long long, long long>{1, 1}, "CP2 pair");
    const auto certs = charnum::deg5_certificates();
    o.require(!certs.empty() && certs.front().value == 1, "Wu pairing");
    for (const auto& name : charnum::manifold_names()) {
        const auto m = preset_manifold(name);
        if (m.model.dimension == 6 && m.map)
            o.require(charnum::wu_parity_check(m.model, *m.map), name + ": Wu parity");
    }
    if (o.ok)
        o.detail = "all integer values match";
    return o;
}

Outcome property_suites(const char* binary)
{
    Outcome o;
    const int rc = std::system(fmt::format("\"{}\" --minimal >/dev/null 2>&1", binary).c_str());
    o.require(rc == 0, fmt::format("{} exited with {}", binary, rc));
    if (o.ok)
        o.detail = "500 cases per property";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const char* props = argc > 1 ? argv[1] : BORD_PROPERTY_TESTS;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"bordism table reproduction", table_reproduction},
        {"chart reproduction", chart_reproduction},
        {"Steenrod verification", steenrod_verification},
        {"figure verification", figure_verification},
        {"oracle equivalences", oracle_equivalences},
        {"characteristic-number certificates", characteristic_numbers},
        {"property suites", [props] { return property_suites(props); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.ok ? 0 : 1;
        fmt::print("{} {}. {}: {}\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail);
    }
    return failed == 0 ? 0 : 1;
}
