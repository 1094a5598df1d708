#include "bord/catalogue/catalogue.hpp"
#include "bord/errors.hpp"
#include "bord/ring/json.hpp"
#include "bord/ring/presentation.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace bord;
using ring::Polynomial;
using ring::RingPresentation;

namespace {

RingPresentation toy()
{
    return RingPresentation("toy", {{"a", 1}, {"b", 2}}, {}, 8);
}

std::vector<int> degrees_of(const RingPresentation& r)
{
    std::vector<int> d;
    for (const auto& g : r.generators())
        d.push_back(g.degree);
    return d;
}

} // namespace

TEST_CASE("parse and format round trip")
{
    const auto r = toy();
    CHECK(r.format(r.parse("a^2b + b")) == "a^2b + b");
    CHECK(r.format(r.parse("0")) == "0");
    CHECK(r.format(r.parse("1")) == "1");
    CHECK(r.parse("a + a").is_zero());
    CHECK(r.parse("(a + b)a") == r.parse("a^2 + ab"));
    CHECK_THROWS_AS(r.parse("c"), InputError);
    CHECK_THROWS_AS(r.parse("a +"), InputError);
}

TEST_CASE("degrees")
{
    const auto r = toy();
    CHECK(r.degree(r.parse("a^2b")) == 4);
    CHECK_FALSE(r.degree(r.parse("0")).has_value());
    CHECK_THROWS_AS(r.degree(r.parse("a + b")), InputError);
}

TEST_CASE("monomial counts of free algebras match the generating function")
{
    for (const char* name : {"B2Z2", "BSO6", "BSp4", "BSU8"}) {
        const auto spec = catalogue::preset_ring(name);
        const auto& r = spec.ring();
        for (int d = 0; d <= r.degree_bound(); ++d) {
            CHECK(static_cast<long long>(r.monomials_of_degree(d).size()) == oracle::free_count(degrees_of(r), d));
            if (r.relations().empty())
                CHECK(static_cast<long long>(r.dim(d)) == oracle::free_count(degrees_of(r), d));
        }
    }
}

TEST_CASE("one relation in a polynomial ring cuts dimension by a shifted copy")
{
    // a polynomial ring is a domain, so (r) in degree d is r times everything of degree d - deg r
    for (const char* name : {"BSp4modZ2", "BSU8modZ2", "BSs16"}) {
        const auto spec = catalogue::preset_ring(name);
        const auto& r = spec.ring();
        REQUIRE(r.relations().size() == 1);
        const int rd = *r.degree(r.relations().front());
        CHECK(rd == 9);
        for (int d = 0; d <= r.degree_bound(); ++d)
            CHECK(static_cast<long long>(r.dim(d)) ==
                  oracle::free_count(degrees_of(r), d) - oracle::free_count(degrees_of(r), d - rd));
    }
}

TEST_CASE("presented rings from the cohomology computation")
{
    const auto sp = catalogue::preset_ring("BSp4modZ2").ring();
    CHECK(sp.in_ideal(sp.parse("x5y4 + x2x3y4")));
    CHECK_FALSE(sp.in_ideal(sp.parse("x5y4")));
    CHECK(sp.dim(2) == 1);
    CHECK(sp.dim(4) == 2);
    const auto su = catalogue::preset_ring("BSU8modZ2").ring();
    CHECK(su.in_ideal(su.parse("x5y4 + x3y6")));
    const auto ss = catalogue::preset_ring("BSs16").ring();
    CHECK(ss.in_ideal(ss.parse("x5y4 + x2x3y4 + x3y6 + x2y7")));
}

TEST_CASE("reduce and from_coordinates are inverse on normal forms")
{
    const auto r = catalogue::preset_ring("BSp4modZ2").ring();
    std::mt19937_64 rng(3);
    for (int d = 0; d <= 11; ++d) {
        const auto& mons = r.monomials_of_degree(d);
        for (int trial = 0; trial < 10 && !mons.empty(); ++trial) {
            Polynomial p(r.num_generators());
            for (const auto& m : mons)
                if (rng() % 2)
                    p.toggle(m);
            const auto v = r.reduce(p, d);
            CHECK(r.reduce(r.from_coordinates(d, v), d) == v);
            CHECK(r.normal_form(p) == r.from_coordinates(d, v));
        }
    }
}

TEST_CASE("queries above the degree bound are refused")
{
    const auto r = catalogue::preset_ring("BSp4modZ2").ring();
    CHECK_THROWS_AS(r.monomial_basis(12), RangeError);
}

TEST_CASE("ring json round trip")
{
    for (const char* name : {"BSp4modZ2", "BSU8modZ2", "BSs16", "B2Z2"}) {
        const auto r = catalogue::preset_ring(name).ring();
        const auto back = ring::ring_from_json(ring::to_json(r));
        CHECK(back.generators() == r.generators());
        CHECK(back.relations() == r.relations());
        CHECK(back.degree_bound() == r.degree_bound());
        CHECK(ring::to_json(back) == ring::to_json(r));
    }
}

TEST_CASE("unknown catalogue names")
{
    CHECK_THROWS_AS(catalogue::preset_ring("BFoo"), InputError);
    CHECK_THROWS_AS(catalogue::preset_ring("BSO17"), InputError);
    CHECK(catalogue::canonical_group("Sp(4)") == "Sp4");
    CHECK(catalogue::canonical_group("Spin(16)") == "Spin16");
    CHECK_THROWS_AS(catalogue::canonical_group("SO3"), InputError);
}
