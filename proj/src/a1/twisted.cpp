#include "bord/a1/twisted.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace bord::a1 {

using f2::BitVector;
using f2::Matrix;
using ring::Polynomial;

namespace {

void check_ceiling(const SteenrodSpec& spec, int ceiling)
{
    if (ceiling < 0)
        throw InputError("ceiling must be nonnegative");
    if (ceiling > spec.ring().degree_bound() - 2)
        throw RangeError(fmt::format("ceiling {} needs the ring {} through degree {}, but it is presented through {}",
                                     ceiling, spec.ring().name(), ceiling + 2, spec.ring().degree_bound()));
}

Matrix operation_matrix(const ring::RingPresentation& ring, int d, int shift,
                        const std::function<Polynomial(const Polynomial&)>& f)
{
    const auto& src = ring.monomial_basis(d);
    Matrix m(ring.dim(d + shift), src.dim());
    for (std::size_t c = 0; c < src.dim(); ++c)
        m.set_column(c, ring.reduce(f(Polynomial(src.monomials[c])), d + shift));
    return m;
}

} // namespace

A1Module module_from_cohomology(const SteenrodSpec& spec, int ceiling)
{
    check_ceiling(spec, ceiling);
    const auto& ring = spec.ring();
    std::vector<std::size_t> dims;
    for (int d = 0; d <= ceiling; ++d)
        dims.push_back(ring.dim(d));
    A1Module m(0, dims, ceiling);
    for (int d = 0; d <= ceiling; ++d) {
        std::vector<std::string> labels;
        for (const auto& mono : ring.monomial_basis(d).monomials)
            labels.push_back(ring.format(mono));
        m.set_labels(d, std::move(labels));
        for (int op : {1, 2})
            if (d + op <= ceiling)
                m.set_sq(op, d, operation_matrix(ring, d, op, [&](const Polynomial& p) { return spec.sq(op, p); }));
    }
    return m;
}

std::vector<Matrix> multiplication_maps(const SteenrodSpec& spec, const Polynomial& cls, int ceiling)
{
    check_ceiling(spec, ceiling);
    const auto& ring = spec.ring();
    const auto e = ring.degree(cls);
    std::vector<Matrix> out;
    for (int d = 0; d <= ceiling; ++d) {
        if (!e) {
            out.emplace_back(0, ring.dim(d));
            continue;
        }
        if (d + *e > ceiling) {
            out.emplace_back(0, ring.dim(d));
            continue;
        }
        out.push_back(operation_matrix(ring, d, *e, [&](const Polynomial& p) { return ring.normal_form(p * cls); }));
    }
    return out;
}

A1Module twist_action(const A1Module& m, const std::vector<Matrix>& by_degree)
{
    A1Module out = m;
    for (int d = m.lo(); d <= m.hi(); ++d) {
        const std::size_t slot = static_cast<std::size_t>(d - m.lo());
        if (slot >= by_degree.size())
            break;
        const Matrix& t = by_degree[slot];
        if (t.rows() == 0 || t.cols() == 0)
            continue;
        out.set_sq(2, d, m.sq2(d) + t);
    }
    return out;
}

A1Module thom_twist(const SteenrodSpec& spec, const Polynomial& twist, int ceiling)
{
    const auto e = spec.ring().degree(twist);
    if (e && *e != 2)
        throw InputError(fmt::format("twist class {} has degree {}, expected 2", spec.ring().format(twist), *e));
    A1Module m = twist_action(module_from_cohomology(spec, ceiling), multiplication_maps(spec, twist, ceiling));
    for (int d = 0; d <= ceiling; ++d) {
        std::vector<std::string> labels;
        for (const auto& l : m.labels(d))
            labels.push_back(l == "1" ? "U" : "U" + l);
        if (!labels.empty())
            m.set_labels(d, std::move(labels));
    }
    return m;
}

BitVector label_vector(const SteenrodSpec& spec, const A1Module& twisted, const FigureLabel& label)
{
    const auto& ring = spec.ring();
    std::string_view text = label.text;
    if (text.empty() || text.front() != 'U')
        throw InputError(fmt::format("label '{}' must start with the Thom class U", label.text));
    text.remove_prefix(1);
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    const Polynomial p = text.empty() ? ring.one() : ring.parse(text);
    const auto d = ring.degree(p);
    if (!d)
        throw DataError(fmt::format("label '{}' is zero", label.text));
    if (*d != label.degree)
        throw DataError(fmt::format("label '{}' has degree {}, listed as {}", label.text, *d, label.degree));
    if (*d > twisted.hi())
        throw RangeError(fmt::format("label '{}' lies above the module", label.text));
    BitVector v = ring.reduce(p, *d);
    if (v.size() != twisted.dim(*d))
        throw InputError("label_vector: module does not come from this ring");
    return v;
}

FigurePart figure_module(const SteenrodSpec& spec, const FigureModuleSpec& fig, const A1Module& twisted)
{
    if (fig.labels.empty())
        throw DataError(fmt::format("{}: no labels", fig.color));
    const auto& alg = A1Algebra::instance();

    std::map<int, std::vector<std::pair<std::string, BitVector>>> by_degree;
    for (const auto& l : fig.labels) {
        BitVector v = label_vector(spec, twisted, l);
        if (v.none())
            throw DataError(fmt::format("{}: label {} vanishes in the module", fig.color, l.text));
        by_degree[l.degree].emplace_back(l.text, std::move(v));
    }
    const int g_deg = by_degree.begin()->first;
    const BitVector g = by_degree.begin()->second.front().second;
    const int top = twisted.hi();

    // generated submodule and the listed labels, degree by degree
    std::vector<std::size_t> dims;
    std::vector<Matrix> basis; // columns are label vectors
    for (int d = g_deg; d <= top; ++d) {
        f2::Subspace generated(twisted.dim(d));
        for (auto a : alg.in_degree(d - g_deg))
            generated.insert(twisted.act(alg.word(a), g_deg, g));
        const auto& listed = by_degree[d];
        f2::Subspace span(twisted.dim(d));
        std::vector<BitVector> cols;
        for (const auto& [text, v] : listed) {
            if (!generated.contains(v))
                throw DataError(fmt::format("{}: label {} is not generated by {}", fig.color, text,
                                            fig.labels.front().text));
            if (!span.insert(v))
                throw DataError(fmt::format("{}: label {} depends on the other labels of degree {}", fig.color, text, d));
            cols.push_back(v);
        }
        if (generated.dim() != listed.size())
            throw DataError(fmt::format("{}: the generated submodule has dimension {} in degree {}, {} labels listed",
                                        fig.color, generated.dim(), d, listed.size()));
        dims.push_back(listed.size());
        basis.push_back(Matrix::from_columns(twisted.dim(d), cols));
    }

    FigurePart part;
    part.color = fig.color;
    part.module = A1Module(g_deg, dims, twisted.ceiling());
    for (int d = g_deg; d <= top; ++d) {
        std::vector<std::string> texts;
        for (const auto& [text, v] : by_degree[d])
            texts.push_back(text);
        if (!texts.empty())
            part.module.set_labels(d, texts);
        for (int op : {1, 2}) {
            if (d + op > top)
                continue;
            Matrix m(dims[d + op - g_deg], dims[d - g_deg]);
            for (std::size_t c = 0; c < dims[d - g_deg]; ++c) {
                const BitVector image = twisted.act(op, d, basis[d - g_deg].column(c));
                const auto x = f2::solve(basis[d + op - g_deg], image);
                if (!x)
                    throw DataError(fmt::format("{}: Sq{} of {} leaves the part", fig.color, op,
                                                by_degree[d][c].first));
                m.set_column(c, *x);
            }
            part.module.set_sq(op, d, std::move(m));
        }
    }
    for (int d = twisted.lo(); d <= twisted.hi(); ++d)
        part.inclusion.push_back(d >= g_deg ? basis[d - g_deg] : Matrix(twisted.dim(d), 0));
    return part;
}

CheckReport verify_decomposition(const A1Module& twisted, const std::vector<FigurePart>& parts, int equal_through,
                                 int action_through)
{
    CheckReport rep{"decomposition", 0, {}};
    for (int d = twisted.lo(); d <= twisted.hi(); ++d) {
        const std::size_t slot = static_cast<std::size_t>(d - twisted.lo());
        f2::Subspace total(twisted.dim(d));
        std::size_t count = 0;
        for (const auto& p : parts) {
            const Matrix& inc = p.inclusion.at(slot);
            for (std::size_t c = 0; c < inc.cols(); ++c) {
                ++count;
                total.insert(inc.column(c));
            }
        }
        ++rep.checked;
        if (total.dim() != count)
            rep.violations.push_back(fmt::format("degree {}: the parts are not independent", d));
        if (d <= equal_through) {
            ++rep.checked;
            if (total.dim() != twisted.dim(d))
                rep.violations.push_back(fmt::format("degree {}: the parts span {} of {} dimensions", d, total.dim(),
                                                     twisted.dim(d)));
        }
        for (const auto& p : parts)
            for (int op : {1, 2}) {
                if (d + op > action_through || d + op > twisted.hi())
                    continue;
                const Matrix& inc = p.inclusion.at(slot);
                const Matrix& inc_up = p.inclusion.at(slot + op);
                for (std::size_t c = 0; c < inc.cols(); ++c) {
                    ++rep.checked;
                    const BitVector in_twisted = twisted.act(op, d, inc.column(c));
                    const BitVector via_part =
                        inc_up.apply(p.module.act(op, d, BitVector::unit(p.module.dim(d), c)));
                    if (in_twisted != via_part)
                        rep.violations.push_back(
                            fmt::format("{}: Sq{} on degree-{} element {} disagrees with the twisted action", p.color,
                                        op, d, c));
                }
            }
    }
    return rep;
}

FigureModuleSpec figure_spec_from_json(const nlohmann::json& j)
{
    FigureModuleSpec fig;
    fig.color = j.at("color").get<std::string>();
    for (const auto& l : j.at("labels"))
        fig.labels.push_back({l.at(0).get<int>(), l.at(1).get<std::string>()});
    return fig;
}

nlohmann::json to_json(const FigureModuleSpec& fig)
{
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& l : fig.labels)
        labels.push_back({l.degree, l.text});
    return {{"color", fig.color}, {"labels", labels}};
}

} // namespace bord::a1
