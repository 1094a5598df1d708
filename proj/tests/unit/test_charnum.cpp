#include "bord/charnum/charnum.hpp"
#include "bord/chart/chart.hpp"
#include "bord/errors.hpp"

#include <doctest.h>

#include <cstdlib>

using namespace bord;
using namespace bord::charnum;

namespace {

BHMap map_of(const Manifold& m)
{
    REQUIRE(m.map.has_value());
    return *m.map;
}

} // namespace

TEST_CASE("integral rings of products")
{
    const auto m = preset_manifold("HP1xS1xS1");
    const auto& z = *m.model.integral;
    CHECK(z.parse("ts") == -z.parse("st"));
    CHECK(z.parse("s^2").is_zero());
    CHECK(z.format(z.parse("ust")) == "ust");
    const auto c = preset_manifold("CP1cubed");
    const auto& zc = *c.model.integral;
    // c3 of roots a, b + c, -a - b - c with a^2 = b^2 = c^2 = 0 is -a (b + c)^2 = -2abc
    const auto e3 = zc.multiply(zc.multiply(zc.parse("a"), zc.parse("b+c")), zc.parse("-a-b-c"));
    CHECK(e3 == zc.parse("-2abc"));
    CHECK(zc.format(e3) == "-2abc");
    CHECK(zc.basis(2).size() == 3);
    CHECK(zc.basis(6).size() == 1);
}

TEST_CASE("signatures")
{
    CHECK(signature(preset_manifold("point").model) == 1);
    CHECK(signature(preset_manifold("HP1").model) == 0);
    CHECK(signature(preset_manifold("CP2").model) == 1);
    CHECK(signature(preset_manifold("CP1xCP1").model) == 0);
    CHECK_THROWS_AS(signature(preset_manifold("Wu").model), InputError);
}

TEST_CASE("degree-4 generators")
{
    const auto hp = preset_manifold("HP1");
    CHECK(deg4_invariants(hp.model, map_of(hp)) == std::pair<long long, long long>{0, 1});
    const auto cp = preset_manifold("CP2");
    CHECK(deg4_invariants(cp.model, map_of(cp)) == std::pair<long long, long long>{1, 1});
    // HP1 and CP2 give a unimodular pair of invariants
    const auto a = deg4_invariants(hp.model, map_of(hp));
    const auto b = deg4_invariants(cp.model, map_of(cp));
    CHECK(std::abs(a.first * b.second - a.second * b.first) == 1);
}

TEST_CASE("degree-6 generators")
{
    const auto cp = preset_manifold("CP2xCP1");
    CHECK(integrate(cp.model, "a^2b", Layer::F2) == 1);
    CHECK(integrate(cp.model, "a^2b", Layer::Integral) == 1);
    CHECK(deg6_invariants(cp.model, map_of(cp)) == std::pair<long long, long long>{0, 1});
    const auto c3 = preset_manifold("CP1cubed");
    CHECK(deg6_invariants(c3.model, map_of(c3)) == std::pair<long long, long long>{-1, 0});
    const auto hs = preset_manifold("HP1xS1xS1");
    CHECK(deg6_invariants(hs.model, map_of(hs)) == std::pair<long long, long long>{0, 0});
}

TEST_CASE("consistency checks pass on every catalogued map")
{
    for (const auto& name : manifold_names()) {
        const auto m = preset_manifold(name);
        if (!m.map)
            continue;
        CAPTURE(name);
        CHECK(spin_g_check(m.model, *m.map));
        CHECK(naturality_check(m.model, *m.map).ok());
        CHECK(reduction_check(m.model, *m.map).ok());
        CHECK(lift_check(m.model, *m.map).ok());
        if (m.model.dimension == 6)
            CHECK(wu_parity_check(m.model, *m.map));
    }
}

TEST_CASE("seeded faults")
{
    auto cp = preset_manifold("CP2");
    auto f = map_of(cp);
    f.f2["x2"] = cp.model.f2.ring().zero();
    CHECK_FALSE(spin_g_check(cp.model, f));
    CHECK_THROWS_AS(deg4_invariants(cp.model, f), InputError);

    auto wu = preset_manifold("Wu");
    auto g = map_of(wu);
    CHECK(integrate(wu.model, g.f2_image(wu.model, "x2") * g.f2_image(wu.model, "x3")) == 1);
    g.f2["x3"] = wu.model.f2.ring().zero();
    CHECK(integrate(wu.model, g.f2_image(wu.model, "x2") * g.f2_image(wu.model, "x3")) == 0);
    CHECK_FALSE(naturality_check(wu.model, g).ok()); // Sq1 x2 = x3 no longer commutes

    auto hs = preset_manifold("HP1xS1xS1");
    auto h = map_of(hs);
    h.f2["y4"] = hs.model.f2.ring().zero();
    h.integral["z4"] = charnum::IntegralPolynomial(hs.model.integral->num_generators());
    CHECK(deg6_invariants(hs.model, h) == std::pair<long long, long long>{0, 0});
    CHECK(reduction_check(hs.model, h).ok());

    auto c3 = preset_manifold("CP1cubed");
    auto k = map_of(c3);
    k.integral["z6"] = c3.model.integral->parse("-abc");
    CHECK_THROWS_AS(deg6_invariants(c3.model, k), InvariantError);
    CHECK_FALSE(lift_check(c3.model, k).ok());
}

TEST_CASE("integration only pairs with top-degree classes")
{
    const auto cp = preset_manifold("CP2");
    CHECK_THROWS_AS(integrate(cp.model, "c", Layer::F2), InputError);
    CHECK_THROWS_AS(integrate(cp.model, "c", Layer::Integral), InputError);
    CHECK(integrate(cp.model, "c^2", Layer::Integral) == 1);
    CHECK(integrate(cp.model, "0", Layer::F2) == 0);
    CHECK_THROWS_AS(preset_manifold("RP2"), InputError);
}

TEST_CASE("degree-5 certificates")
{
    const auto certs = deg5_certificates();
    REQUIRE(certs.size() == 6);
    for (const auto& c : certs) {
        CAPTURE(c.name);
        CHECK(c.ok());
    }
    CHECK(certs[0].value == 1);

    auto broken = chart::expected_chart("Sp4");
    std::erase_if(broken.edges, [](const chart::Edge& e) { return e.type == "h1" && e.from == std::pair{4, 0}; });
    const auto bad = deg5_certificates(broken);
    CHECK_FALSE(bad[3].ok());
}
