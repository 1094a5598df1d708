#include "bord/charnum/charnum.hpp"

#include "bord/catalogue/catalogue.hpp"
#include "bord/chart/chart.hpp"
#include "bord/errors.hpp"
#include "bord/ring/json.hpp"

#include <boost/rational.hpp>
#include <fmt/format.h>

#include <algorithm>

namespace bord::charnum {

using nlohmann::json;

Polynomial ManifoldModel::v2() const { return f2.ring().normal_form(w2 + f2.ring().multiply(w1, w1)); }

Polynomial BHMap::f2_image(const ManifoldModel& m, const std::string& g) const
{
    auto it = f2.find(g);
    return it == f2.end() ? m.f2.ring().zero() : it->second;
}

namespace {

// Degrees of the named classes of every quotient ring.
int class_degree(const std::string& g)
{
    static const std::map<std::string, int> degrees = {{"x2", 2}, {"x3", 3}, {"y4", 4}, {"y6", 6},
                                                       {"z4", 4}, {"z6", 6}};
    auto it = degrees.find(g);
    if (it == degrees.end())
        throw InputError(fmt::format("map images: unknown class '{}'", g));
    return it->second;
}

void check_degree(const std::string& model, const std::string& g, std::optional<int> d)
{
    if (d && *d != class_degree(g))
        throw InputError(fmt::format("{}: image of {} has degree {}, expected {}", model, g, *d, class_degree(g)));
}

const IntegralRing& integral_of(const ManifoldModel& m)
{
    if (!m.integral)
        throw InputError(fmt::format("{} has no integral cohomology model", m.name));
    return *m.integral;
}

IntegralPolynomial integral_image(const ManifoldModel& m, const BHMap& f, const std::string& g)
{
    auto it = f.integral.find(g);
    if (it == f.integral.end())
        throw InputError(fmt::format("{}: the map does not declare the image of {}", m.name, g));
    return it->second;
}

bool equal_in(const ManifoldModel& m, const Polynomial& a, const Polynomial& b)
{
    return m.f2.ring().normal_form(a + b).is_zero();
}

} // namespace

Manifold manifold_from_json(const std::string& name, const json& j)
{
    try {
        Manifold out;
        ManifoldModel& m = out.model;
        m.name = name;
        m.dimension = j.at("dimension").get<int>();
        json r = {{"name", name},
                  {"generators", j.at("generators")},
                  {"relations", j.value("relations", json::array())},
                  {"degree_bound", m.dimension}};
        const auto ring = ring::ring_from_json(r);
        m.f2 = steenrod::spec_from_json(ring, j.value("steenrod", json::object()));

        const Polynomial fundamental = ring.parse(j.at("fundamental").get<std::string>());
        if (fundamental.size() != 1)
            throw InputError(fmt::format("{}: the fundamental class must be one monomial", name));
        m.fundamental = *fundamental.terms().begin();
        if (ring.degree(m.fundamental) != m.dimension)
            throw InputError(fmt::format("{}: fundamental monomial has degree {}", name, ring.degree(m.fundamental)));
        if (ring.dim(m.dimension) != 1 || ring.reduce(fundamental, m.dimension).none())
            throw InputError(fmt::format("{}: top cohomology is not spanned by {}", name, ring.format(m.fundamental)));

        const json w = j.value("w", json::object());
        for (auto [key, slot, deg] : {std::tuple{"w1", &m.w1, 1}, std::tuple{"w2", &m.w2, 2},
                                      std::tuple{"w3", &m.w3, 3}}) {
            *slot = ring.parse(w.value(key, std::string("0")));
            if (auto d = ring.degree(*slot); d && *d != deg)
                throw InputError(fmt::format("{}: {} has degree {}", name, key, *d));
        }

        if (j.contains("integral")) {
            std::map<std::string, int> trunc;
            const json truncation = j.at("integral").value("truncation", json::object());
            for (const auto& [g, k] : truncation.items())
                trunc[g] = k.get<int>();
            m.integral = IntegralRing(ring.generators(), trunc, m.dimension);
            const auto top = m.integral->basis(m.dimension);
            if (top.size() != 1 || top.front() != m.fundamental)
                throw InputError(fmt::format("{}: integral top degree is not spanned by the fundamental monomial", name));
        }

        if (j.contains("map")) {
            const json& mj = j.at("map");
            BHMap f;
            f.target = mj.at("target").get<std::string>();
            f.through = mj.value("through", std::string());
            const json f2 = mj.value("f2", json::object());
            for (const auto& [g, v] : f2.items()) {
                Polynomial p = ring.parse(v.get<std::string>());
                check_degree(name, g, ring.degree(p));
                f.f2.emplace(g, std::move(p));
            }
            const json integral = mj.value("integral", json::object());
            for (const auto& [g, v] : integral.items()) {
                IntegralPolynomial p = integral_of(m).parse(v.get<std::string>());
                for (const auto& [mono, c] : p.terms())
                    check_degree(name, g, m.integral->degree(mono));
                f.integral.emplace(g, std::move(p));
            }
            if (mj.contains("lift")) {
                Lift lift;
                lift.kind = mj.at("lift").at("kind").get<std::string>();
                if (lift.kind != "orthogonal_pair" && lift.kind != "unitary")
                    throw InputError(fmt::format("{}: unknown lift kind '{}'", name, lift.kind));
                for (const auto& bundle : mj.at("lift").at("bundles")) {
                    std::vector<IntegralPolynomial> roots;
                    for (const auto& root : bundle)
                        roots.push_back(integral_of(m).parse(root.get<std::string>()));
                    lift.bundles.push_back(std::move(roots));
                }
                f.lift = std::move(lift);
            }
            out.map = std::move(f);
        }
        return out;
    } catch (const json::exception& e) {
        throw InputError(fmt::format("manifold {}: {}", name, e.what()));
    }
}

Manifold preset_manifold(std::string_view name)
{
    const json& all = catalogue::data("manifolds").at("manifolds");
    auto it = all.find(name);
    if (it == all.end())
        throw InputError(fmt::format("unknown manifold '{}'", name));
    return manifold_from_json(std::string(name), *it);
}

std::vector<std::string> manifold_names()
{
    std::vector<std::string> out;
    for (const auto& [k, v] : catalogue::data("manifolds").at("manifolds").items())
        out.push_back(k);
    return out;
}

long long integrate(const ManifoldModel& m, const Polynomial& cls)
{
    const auto& ring = m.f2.ring();
    const Polynomial p = ring.normal_form(cls);
    if (p.is_zero())
        return 0;
    if (const auto d = ring.degree(p); *d != m.dimension)
        throw InputError(fmt::format("{}: cannot integrate a class of degree {} over a {}-manifold", m.name, *d,
                                     m.dimension));
    return ring.reduce(p, m.dimension).get(0) ? 1 : 0;
}

long long integrate(const ManifoldModel& m, const IntegralPolynomial& cls)
{
    const IntegralRing& ring = integral_of(m);
    for (const auto& [mono, c] : cls.terms())
        if (const int d = ring.degree(mono); d != m.dimension)
            throw InputError(fmt::format("{}: cannot integrate a class of degree {} over a {}-manifold", m.name, d,
                                         m.dimension));
    return ring.normal_form(cls).coefficient(m.fundamental);
}

long long integrate(const ManifoldModel& m, std::string_view cls, Layer layer)
{
    if (layer == Layer::F2)
        return integrate(m, m.f2.ring().parse(cls));
    return integrate(m, integral_of(m).parse(cls));
}

bool spin_g_check(const ManifoldModel& m, const BHMap& f) { return equal_in(m, f.f2_image(m, "x2"), m.w2); }

long long signature(const ManifoldModel& m)
{
    if (m.dimension % 4 != 0)
        throw InputError(fmt::format("{}: signature needs dimension divisible by 4, got {}", m.name, m.dimension));
    const IntegralRing& ring = integral_of(m);
    const auto basis = ring.basis(m.dimension / 2);
    const std::size_t n = basis.size();
    using Q = boost::rational<long long>;
    std::vector<std::vector<Q>> a(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = integrate(m, ring.multiply(ring.monomial(basis[i]), ring.monomial(basis[j])));

    // congruence diagonalization: symmetric row and column operations
    long long positive = 0, negative = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][p] == Q(0))
            ++p;
        if (p == n) {
            // zero diagonal: replace row k by row k + row j for some j with a[k][j] != 0
            std::size_t i = n, j = n;
            for (std::size_t r = k; r < n && i == n; ++r)
                for (std::size_t c = r + 1; c < n; ++c)
                    if (a[r][c] != Q(0)) {
                        i = r;
                        j = c;
                        break;
                    }
            if (i == n)
                break; // the rest is zero
            for (std::size_t c = 0; c < n; ++c)
                a[i][c] += a[j][c];
            for (std::size_t r = 0; r < n; ++r)
                a[r][i] += a[r][j];
            p = i;
        }
        std::swap(a[k], a[p]);
        for (auto& row : a)
            std::swap(row[k], row[p]);
        const Q pivot = a[k][k];
        (pivot > Q(0) ? positive : negative) += 1;
        for (std::size_t r = k + 1; r < n; ++r) {
            const Q factor = a[r][k] / pivot;
            if (factor == Q(0))
                continue;
            for (std::size_t c = 0; c < n; ++c)
                a[r][c] -= factor * a[k][c];
            for (std::size_t c = 0; c < n; ++c)
                a[c][r] -= factor * a[c][k];
        }
    }
    return positive - negative;
}

std::pair<long long, long long> deg4_invariants(const ManifoldModel& m, const BHMap& f)
{
    if (m.dimension != 4)
        throw InputError(fmt::format("{}: degree-4 invariants need a 4-manifold", m.name));
    if (!spin_g_check(m, f))
        throw InputError(fmt::format("{}: spin_g_check failed (f*x2 != w2)", m.name));
    return {signature(m), integrate(m, integral_image(m, f, "z4"))};
}

bool wu_parity_check(const ManifoldModel& m, const BHMap& f)
{
    if (m.dimension != 6)
        throw InputError(fmt::format("{}: the parity check needs a 6-manifold", m.name));
    const auto& ring = m.f2.ring();
    const Polynomial y4 = f.f2_image(m, "y4");
    const long long a = integrate(m, f.f2_image(m, "y6"));
    const long long b = integrate(m, m.f2.sq(2, y4));
    const long long c = integrate(m, ring.multiply(m.v2(), y4));
    const long long d = integrate(m, ring.multiply(f.f2_image(m, "x2"), y4));
    return a == b && b == c && c == d;
}

std::pair<long long, long long> deg6_invariants(const ManifoldModel& m, const BHMap& f)
{
    if (m.dimension != 6)
        throw InputError(fmt::format("{}: degree-6 invariants need a 6-manifold", m.name));
    if (!spin_g_check(m, f))
        throw InputError(fmt::format("{}: spin_g_check failed (f*x2 != w2)", m.name));
    if (!wu_parity_check(m, f))
        throw InputError(fmt::format("{}: wu_parity_check failed", m.name));
    const long long z6 = integrate(m, integral_image(m, f, "z6"));
    if (z6 % 2 != 0)
        throw InvariantError(fmt::format("{}: the integral of f*z6 is {}, which is odd", m.name, z6));
    const long long x2y4 = integrate(m, m.f2.ring().multiply(f.f2_image(m, "x2"), f.f2_image(m, "y4")));
    return {z6 / 2, x2y4};
}

CheckReport naturality_check(const ManifoldModel& m, const BHMap& f)
{
    CheckReport rep{fmt::format("{}: naturality", m.name), 0, {}};
    const SteenrodSpec target = catalogue::preset_ring(f.target);
    const auto& tr = target.ring();
    const auto& mr = m.f2.ring();

    std::vector<Polynomial> images;
    std::vector<bool> known;
    for (const auto& g : tr.generators()) {
        known.push_back(f.declares(g.name));
        images.push_back(f.f2_image(m, g.name));
    }
    auto expressible = [&](const Polynomial& p) {
        for (const auto& mono : p.terms())
            for (std::size_t i = 0; i < mono.size(); ++i)
                if (mono[i] != 0 && !known[i])
                    return false;
        return true;
    };
    auto pull_back = [&](const Polynomial& p) {
        return mr.normal_form(ring::substitute(p, images, mr.num_generators()));
    };

    for (std::size_t g = 0; g < tr.num_generators(); ++g) {
        if (!known[g])
            continue;
        const auto& gen = tr.generators()[g];
        for (int i = 1; gen.degree + i <= m.dimension; ++i) {
            const Polynomial up = target.sq(i, tr.generator(gen.name));
            if (!expressible(up))
                continue;
            ++rep.checked;
            if (!equal_in(m, m.f2.sq(i, images[g]), pull_back(up)))
                rep.violations.push_back(fmt::format("Sq{} f*{} = {} but f*Sq{} {} = {}", i, gen.name,
                                                     mr.format(mr.normal_form(m.f2.sq(i, images[g]))), i, gen.name,
                                                     mr.format(pull_back(up))));
        }
    }
    for (const auto& rel : tr.relations()) {
        const auto d = tr.degree(rel);
        if (!d || *d > m.dimension || !expressible(rel))
            continue;
        ++rep.checked;
        if (!pull_back(rel).is_zero())
            rep.violations.push_back(fmt::format("relation {} pulls back to {}", tr.format(rel),
                                                 mr.format(pull_back(rel))));
    }
    return rep;
}

CheckReport reduction_check(const ManifoldModel& m, const BHMap& f)
{
    CheckReport rep{fmt::format("{}: mod-2 reductions", m.name), 0, {}};
    const auto& ring = m.f2.ring();
    if (f.integral.count("z4") && f.declares("y4")) {
        ++rep.checked;
        const Polynomial diff = ring.normal_form(f.integral.at("z4").mod2() + f.f2_image(m, "y4"));
        const Polynomial x2sq = ring.normal_form(ring.multiply(f.f2_image(m, "x2"), f.f2_image(m, "x2")));
        if (!diff.is_zero() && diff != x2sq)
            rep.violations.push_back(fmt::format("z4 mod 2 differs from f*y4 by {}", ring.format(diff)));
    }
    if (f.integral.count("z6") && f.declares("y6") && f.declares("y4")) {
        ++rep.checked;
        const Polynomial want = f.f2_image(m, "y6") + ring.multiply(f.f2_image(m, "x2"), f.f2_image(m, "y4"));
        if (!equal_in(m, f.integral.at("z6").mod2(), want))
            rep.violations.push_back(fmt::format("z6 mod 2 is {}, f*(y6 + x2y4) is {}",
                                                 ring.format(ring.normal_form(f.integral.at("z6").mod2())),
                                                 ring.format(ring.normal_form(want))));
    }
    return rep;
}

namespace {

// e_0 .. e_r of a list of roots.
std::vector<IntegralPolynomial> elementary(const IntegralRing& ring, const std::vector<IntegralPolynomial>& roots)
{
    std::vector<IntegralPolynomial> e = {ring.one()};
    for (const auto& r : roots) {
        e.push_back(IntegralPolynomial(ring.num_generators()));
        for (std::size_t k = e.size() - 1; k >= 1; --k)
            e[k] += ring.multiply(e[k - 1], r);
    }
    return e;
}

IntegralPolynomial e_k(const std::vector<IntegralPolynomial>& e, std::size_t k, std::size_t n)
{
    return k < e.size() ? e[k] : IntegralPolynomial(n);
}

} // namespace

CheckReport lift_check(const ManifoldModel& m, const BHMap& f)
{
    CheckReport rep{fmt::format("{}: lift", m.name), 0, {}};
    if (!f.lift)
        return rep;
    const IntegralRing& ring = integral_of(m);
    const auto& fr = m.f2.ring();
    const std::size_t n = ring.num_generators();
    auto expect = [&](const std::string& what, const Polynomial& derived, const std::string& g) {
        ++rep.checked;
        if (!equal_in(m, derived, f.f2_image(m, g)))
            rep.violations.push_back(fmt::format("{} gives f*{} = {}, declared {}", what, g,
                                                 fr.format(fr.normal_form(derived)),
                                                 fr.format(fr.normal_form(f.f2_image(m, g)))));
    };
    const Lift& lift = *f.lift;
    if (lift.kind == "orthogonal_pair") {
        if (lift.bundles.size() != 2)
            throw InputError(fmt::format("{}: an orthogonal pair lift needs two bundles", m.name));
        const auto e1 = elementary(ring, lift.bundles[0]);
        const auto e2 = elementary(ring, lift.bundles[1]);
        ++rep.checked;
        if (!fr.normal_form((e_k(e1, 1, n) + e_k(e2, 1, n)).mod2()).is_zero())
            rep.violations.push_back("first Chern classes of the pair do not agree mod 2");
        expect("e1 of the first bundle", e_k(e1, 1, n).mod2(), "x2");
        if (f.declares("y4"))
            expect("e2 of the pair", (e_k(e1, 2, n) + e_k(e2, 2, n)).mod2(), "y4");
    } else {
        if (lift.bundles.size() != 1)
            throw InputError(fmt::format("{}: a unitary lift needs one bundle", m.name));
        const auto e = elementary(ring, lift.bundles[0]);
        ++rep.checked;
        if (!ring.normal_form(e_k(e, 1, n)).is_zero())
            rep.violations.push_back(fmt::format("c1 = {} is not zero", ring.format(ring.normal_form(e_k(e, 1, n)))));
        expect("c1", e_k(e, 1, n).mod2(), "x2");
        if (f.declares("y4"))
            expect("c2", e_k(e, 2, n).mod2(), "y4");
        if (f.integral.count("z6")) {
            ++rep.checked;
            const IntegralPolynomial c3 = ring.normal_form(e_k(e, 3, n));
            if (c3 != ring.normal_form(f.integral.at("z6")))
                rep.violations.push_back(fmt::format("c3 = {}, declared f*z6 = {}", ring.format(c3),
                                                     ring.format(f.integral.at("z6"))));
        }
    }
    return rep;
}

std::vector<Certificate> deg5_certificates(const chart::AdamsChart& sp4)
{
    std::vector<Certificate> out;
    auto count_dots = [&](int stem, int s, bool circled) {
        return std::count_if(sp4.dots.begin(), sp4.dots.end(),
                             [&](const chart::Dot& d) { return d.stem == stem && d.s == s && d.circled == circled; });
    };
    auto count_h1 = [&](std::pair<int, int> from, std::pair<int, int> to) {
        return std::count_if(sp4.edges.begin(), sp4.edges.end(),
                             [&](const chart::Edge& e) { return e.type == "h1" && e.from == from && e.to == to; });
    };

    {
        const Manifold wu = preset_manifold("Wu");
        const auto& r = wu.model.f2.ring();
        const long long v =
            integrate(wu.model, r.multiply(wu.map->f2_image(wu.model, "x2"), wu.map->f2_image(wu.model, "x3")));
        out.push_back({"Wu: f*(x2 x3) paired with [W]", v, 1, "detects the circled class at (5,0)", {5, 0}});
        out.push_back({"chart: circled dot at (5,0)", count_dots(5, 0, true), 1, "", {5, 0}});
    }
    {
        const Manifold m = preset_manifold("HP1xS1");
        const IntegralRing& ring = *m.model.integral;
        const long long v = integrate(m.model, ring.multiply(integral_image(m.model, *m.map, "z4"), ring.parse("s")));
        out.push_back({"HP1xS1: f*z4 s paired with [M]", v, 1, "S1 multiple of HP1, dot (5,1)", {5, 1}});
        out.push_back({"chart: h1 edge (4,0)->(5,1)", count_h1({4, 0}, {5, 1}), 1, "", {5, 1}});
    }
    {
        const Manifold m = preset_manifold("HP1xS1xS1");
        const IntegralRing& ring = *m.model.integral;
        const long long v =
            integrate(m.model, ring.multiply(integral_image(m.model, *m.map, "z4"), ring.parse("st")));
        out.push_back({"HP1xS1xS1: f*z4 st paired with [M]", v, 1, "S1 multiple of HP1xS1, dot (6,2)", {6, 2}});
        out.push_back({"chart: h1 edge (5,1)->(6,2)", count_h1({5, 1}, {6, 2}), 1, "", {6, 2}});
    }
    return out;
}

std::vector<Certificate> deg5_certificates() { return deg5_certificates(chart::expected_chart("Sp4")); }

} // namespace bord::charnum
