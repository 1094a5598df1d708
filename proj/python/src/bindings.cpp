#include "bord/a1/algebra.hpp"
#include "bord/catalogue/catalogue.hpp"
#include "bord/charnum/charnum.hpp"
#include "bord/chart/chart.hpp"
#include "bord/errors.hpp"
#include "bord/pipeline/pipeline.hpp"
#include "bord/resolution/resolution.hpp"
#include "bord/steenrod/steenrod.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bord;

namespace {

// JSON crosses the boundary as text; the package decodes it.
std::string report_json(const std::vector<std::string>& groups, std::pair<int, int> window, bool no_odd_torsion)
{
    pipeline::RunConfig cfg;
    cfg.groups.clear();
    for (const auto& g : groups)
        for (const auto& c : pipeline::parse_groups(g))
            cfg.groups.push_back(c);
    cfg.window = {window.first, window.second};
    cfg.no_odd_torsion = no_odd_torsion;
    py::gil_scoped_release release;
    return pipeline::to_json(pipeline::run(cfg)).dump();
}

std::string report_text(const std::vector<std::string>& groups, std::pair<int, int> window)
{
    pipeline::RunConfig cfg;
    cfg.groups.clear();
    for (const auto& g : groups)
        for (const auto& c : pipeline::parse_groups(g))
            cfg.groups.push_back(c);
    cfg.window = {window.first, window.second};
    py::gil_scoped_release release;
    return pipeline::to_text(pipeline::run(cfg));
}

std::vector<std::pair<int, int>> expected_groups(const std::string& group)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& s : chart::expected_groups(catalogue::canonical_group(group)).stems)
        out.emplace_back(s.z, s.z2);
    return out;
}

std::string computed_chart(const std::string& group, const std::string& format, std::pair<int, int> window)
{
    const resolution::Window w{window.first, window.second};
    auto run = pipeline::build(catalogue::canonical_group(group), w);
    pipeline::resolution_stage(run, w);
    return chart::render(run.overlay, format);
}

std::string sq(const std::string& ring, int i, const std::string& cls)
{
    const auto spec = catalogue::preset_ring(ring);
    return spec.ring().format(spec.sq(i, spec.ring().parse(cls)));
}

std::map<std::string, long long> invariants(const std::string& name)
{
    const auto m = charnum::preset_manifold(name);
    std::map<std::string, long long> out;
    out["dimension"] = m.model.dimension;
    if (m.model.integral && m.model.dimension % 4 == 0)
        out["signature"] = charnum::signature(m.model);
    if (!m.map)
        return out;
    if (m.model.dimension == 4 && m.map->integral.count("z4")) {
        const auto [sig, z4] = charnum::deg4_invariants(m.model, *m.map);
        out["z4"] = z4;
    }
    if (m.model.dimension == 6) {
        const auto [half_z6, x2y4] = charnum::deg6_invariants(m.model, *m.map);
        out["half_z6"] = half_z6;
        out["x2y4"] = x2y4;
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Ext over A(1) and twisted spin bordism tables in low degrees";

    static py::exception<InputError> input_error(m, "InputError", PyExc_ValueError);
    static py::exception<RangeError> range_error(m, "RangeError", PyExc_ValueError);
    static py::exception<DataError> data_error(m, "DataError", PyExc_RuntimeError);
    static py::exception<InvariantError> invariant_error(m, "InvariantError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p)
                std::rethrow_exception(p);
        } catch (const InputError& e) {
            input_error(e.what());
        } catch (const RangeError& e) {
            range_error(e.what());
        } catch (const DataError& e) {
            data_error(e.what());
        } catch (const InvariantError& e) {
            invariant_error(e.what());
        }
    });

    m.def("group_names", [] { return catalogue::group_names(); });
    m.def("manifold_names", &charnum::manifold_names);
    m.def("report_json", &report_json, py::arg("groups"), py::arg("window") = std::pair{6, 7},
          py::arg("no_odd_torsion") = true);
    m.def("report_text", &report_text, py::arg("groups"), py::arg("window") = std::pair{6, 7});
    m.def("expected_groups", &expected_groups, "(Z, Z2) counts per stem from the shipped table");
    m.def("computed_chart", &computed_chart, py::arg("group"), py::arg("format") = "json",
          py::arg("window") = std::pair{6, 7});
    m.def("expected_chart", [](const std::string& g, const std::string& format) {
        return chart::render(chart::expected_chart(g), format);
    }, py::arg("group"), py::arg("format") = "json");
    m.def("sq", &sq, py::arg("ring"), py::arg("i"), py::arg("cls"));
    m.def("a1_degrees", [] {
        const auto& a = a1::A1Algebra::instance();
        std::vector<int> out;
        for (std::size_t i = 0; i < a.dim(); ++i)
            out.push_back(a.degree(i));
        return out;
    });
    m.def("invariants", &invariants, py::arg("manifold"));
}
