#include "bord/catalogue/catalogue.hpp"
#include "bord/errors.hpp"
#include "bord/steenrod/steenrod.hpp"
#include "bord/steenrod/wu.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace bord;
using steenrod::SteenrodSpec;

namespace {

bool sq_is(const SteenrodSpec& s, int i, const char* x, const char* y)
{
    const auto& r = s.ring();
    return s.sq(i, r.parse(x)) == r.normal_form(r.parse(y));
}

// w_k -> e_k(t_1..t_n): the splitting principle embeds Z2[w] into Z2[t].
oracle::Poly split(const ring::Polynomial& p, int n)
{
    oracle::Poly out;
    for (const auto& m : p.terms()) {
        oracle::Poly term{oracle::Mono(n, 0)};
        for (std::size_t k = 0; k < m.size(); ++k)
            for (int e = 0; e < m[k]; ++e)
                term = oracle::mul(term, oracle::elementary(n, static_cast<int>(k) + 1));
        out = oracle::add(out, term);
    }
    return out;
}

} // namespace

TEST_CASE("tabulated squares of the quotient of BSp4")
{
    const auto s = catalogue::preset_ring("BSp4modZ2");
    CHECK(sq_is(s, 2, "x3", "x5"));
    CHECK(sq_is(s, 1, "x5", "x3^2"));
    CHECK(sq_is(s, 4, "x5", "x9"));
    CHECK(sq_is(s, 1, "x9", "x5^2"));
    CHECK(sq_is(s, 2, "y4", "x2y4"));
    CHECK(sq_is(s, 3, "y4", "x3y4"));
    CHECK(sq_is(s, 1, "x2", "x3"));
    CHECK(sq_is(s, 2, "x2", "x2^2"));
}

TEST_CASE("tabulated squares of the quotient of BSU8")
{
    const auto s = catalogue::preset_ring("BSU8modZ2");
    CHECK(sq_is(s, 2, "y4", "y6"));
    CHECK(sq_is(s, 1, "y6", "x3y4"));
    CHECK(sq_is(s, 5, "y6", "x5y6 + x3y4^2"));
}

TEST_CASE("the verification suites pass on the presets")
{
    for (const char* name : {"BSp4modZ2", "BSU8modZ2", "BSs16"}) {
        const auto s = catalogue::preset_ring(name);
        CHECK(steenrod::verify_instability(s).ok());
        CHECK(steenrod::verify_adem(s, 9).ok());
        CHECK(steenrod::verify_low_adem(s, 9).ok());
        CHECK(steenrod::verify_relation_stability(s).ok());
        CHECK(steenrod::verify_sq1_derivation(s).ok());
    }
}

TEST_CASE("a seeded fault is caught")
{
    const auto s = catalogue::preset_ring("BSp4modZ2");
    const auto& r = s.ring();
    const auto bad = s.with_entry(*r.generator_index("x3"), 2, r.zero());
    const bool caught = !steenrod::verify_adem(bad, 9).ok() || !steenrod::verify_relation_stability(bad).ok();
    CHECK(caught);
    const auto wrong_degree = s.with_entry(*r.generator_index("x2"), 1, r.parse("x2^2"));
    CHECK_FALSE(steenrod::verify_instability(wrong_degree).ok());
}

TEST_CASE("binomials mod 2")
{
    for (int n = 0; n < 64; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(steenrod::binom_mod2(n, k) == oracle::binom2(n, k));
    for (int k = 0; k < 10; ++k)
        CHECK(steenrod::binom_mod2(-1, k)); // (-1)^k
    CHECK_FALSE(steenrod::binom_mod2(-2, 1));
    CHECK_FALSE(steenrod::binom_mod2(3, 4));
}

TEST_CASE("the Wu formula agrees with the splitting principle")
{
    // Sq^i(w_j) computed in Z2[t_1..t_n] from Sq(t) = t + t^2
    for (int n = 1; n <= 6; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i <= j; ++i)
                CHECK(split(steenrod::wu_sq(n, i, j), n) == oracle::sq(i, oracle::elementary(n, j)));
}

TEST_CASE("the Wu action extends by Cartan in agreement with the oracle")
{
    const int n = 5;
    const auto s = steenrod::bo_spec(n, 12);
    const auto& r = s.ring();
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int d = 1; d <= 7; ++d) {
        const auto mons = r.monomials_of_degree(d);
        for (int trial = 0; trial < 8; ++trial) {
            ring::Polynomial p(r.num_generators());
            for (const auto& m : mons)
                if (rng() % 2)
                    p.toggle(m);
            for (int i = 0; i <= d && d + i <= 12; ++i) {
                CHECK(split(s.sq(i, p), n) == oracle::sq(i, split(p, n)));
                ++checked;
            }
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("the degree-2 lemma")
{
    CHECK(steenrod::wu_manifold_lemma_check());
    const auto s = steenrod::wu_type_spec("BSO5", 5, {2, 3, 4, 5}, 1, "w", 11);
    const auto& r = s.ring();
    const auto e = steenrod::wu_lemma_expression(s, r.generator("w2"));
    CHECK(e == r.normal_form(r.parse("w5w2^2 + w3^3")));
    CHECK_FALSE(e.is_zero());
}

TEST_CASE("squares outside the bound are refused")
{
    const auto s = catalogue::preset_ring("BSp4modZ2");
    CHECK_THROWS(s.sq(4, s.ring().parse("x9")));
}
