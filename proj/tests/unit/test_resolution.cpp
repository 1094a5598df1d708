#include "bord/a1/module.hpp"
#include "bord/errors.hpp"
#include "bord/resolution/resolution.hpp"

#include "oracle.hpp"

#include <doctest.h>

using namespace bord;
using namespace bord::resolution;

namespace {

// dim of F_s in degree t, from the generator degrees and |A(1)| = 1 + x + x^2 + 2x^3 + x^4 + x^5 + x^6
std::size_t free_dim(const std::vector<int>& gens, int t)
{
    static const int a1[] = {1, 1, 1, 2, 1, 1, 1};
    std::size_t n = 0;
    for (int g : gens)
        if (t - g >= 0 && t - g <= 6)
            n += a1[t - g];
    return n;
}

} // namespace

TEST_CASE("Ext of F2 has the ko pattern")
{
    const Window w{6, 7};
    const auto table = ext_table(a1::trivial_module(0), w);
    std::map<std::pair<int, int>, std::size_t> expected;
    for (int s = 0; s <= 6; ++s)
        expected[{s, s}] = 1; // h0 tower in stem 0
    expected[{1, 2}] = 1;     // h1
    expected[{2, 4}] = 1;     // h1^2
    for (int s = 3; s <= 6; ++s)
        expected[{s, s + 4}] = 1; // tower in stem 4
    CHECK(table.dims == expected);

    const auto ranks = table.ranks();
    for (int s = 0; s < 6; ++s)
        CHECK(ranks.at({"h0", s, s}) == 1);
    CHECK(ranks.at({"h1", 0, 0}) == 1);
    CHECK(ranks.at({"h1", 1, 2}) == 1);
    CHECK(ranks.count({"h0", 1, 2}) == 0);
    CHECK(ranks.count({"h1", 2, 4}) == 0);
    for (int s = 3; s < 6; ++s)
        CHECK(ranks.at({"h0", s, s + 4}) == 1);
}

TEST_CASE("Ext of A(1) itself is one circled dot")
{
    const auto f = a1::free_module({0}, 13);
    const auto table = ext_table(f);
    CHECK(table.dims.size() == 1);
    CHECK(table.dim(0, 0) == 1);
    CHECK(table.products.empty());
    const auto c = ext_of_sum({{"BrickRed", f}});
    REQUIRE(c.dots.size() == 1);
    CHECK(c.dots.front().circled);
}

TEST_CASE("resolutions are exact and minimal")
{
    for (const auto& m : {a1::trivial_module(0), a1::direct_sum({a1::trivial_module(0), a1::trivial_module(2)}),
                          a1::free_module({0, 1}, 13)}) {
        const auto r = minimal_resolution(m, {5, 6});
        CHECK(verify_exactness(r).ok());
        CHECK(verify_acyclicity(r).ok());
        CHECK(verify_minimality(r).ok());
        // Euler characteristic: the alternating sum of free dims is dim M in each degree
        for (int t = 0; t <= 6; ++t) {
            long long chi = 0;
            for (std::size_t s = 0; s < r.num_levels(); ++s)
                chi += (s % 2 ? -1 : 1) * static_cast<long long>(free_dim(r.level(s).degrees, t));
            if (static_cast<int>(r.num_levels()) > t) // a length t + 1 resolution determines degree t
                CHECK(chi == static_cast<long long>(m.dim(t)));
            CHECK(r.free(0).dim(t) == free_dim(r.level(0).degrees, t));
        }
    }
}

TEST_CASE("windows beyond the truncation are refused")
{
    auto m = a1::trivial_module(0);
    m.set_ceiling(5);
    CHECK(reliable_stem_max(m) == 4);
    CHECK_NOTHROW(minimal_resolution(m, {4, 4}));
    CHECK_THROWS_AS(minimal_resolution(m, {4, 5}), RangeError);
}

TEST_CASE("ext table json")
{
    const auto table = ext_table(a1::trivial_module(0), {3, 4});
    const auto j = to_json(table);
    CHECK(j.dump().find("h0") != std::string::npos);
}
