#include "bord/a1/algebra.hpp"
#include "bord/a1/module.hpp"
#include "bord/a1/twisted.hpp"
#include "bord/catalogue/catalogue.hpp"
#include "bord/errors.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace bord;
using namespace bord::a1;
using f2::BitVector;
using f2::Matrix;

namespace {

// Sq1 and Sq2 acting on Z2[t_1..t_n], |t_i| = 1; words act rightmost letter first.
oracle::Poly act_oracle(const Word& w, oracle::Poly p)
{
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        p = oracle::sq(*it, p);
    return p;
}

// Test inputs: every monomial of degree <= 4 in 6 variables with exponents <= 2.
// A(1) acts faithfully on these, so operator rank per degree is the algebra dimension.
std::vector<oracle::Mono> probes()
{
    std::vector<oracle::Mono> out;
    oracle::Mono m(6, 0);
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
        if (k == m.size()) {
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= std::min(2, left); ++e) {
            m[k] = e;
            self(self, k + 1, left - e);
        }
        m[k] = 0;
    };
    rec(rec, 0, 4);
    return out;
}

// Operator of a word as a set of (probe index, image monomial) pairs.
std::set<std::pair<std::size_t, oracle::Mono>> signature(const Word& w, const std::vector<oracle::Mono>& in)
{
    std::set<std::pair<std::size_t, oracle::Mono>> out;
    for (std::size_t i = 0; i < in.size(); ++i)
        for (const auto& m : act_oracle(w, oracle::Poly{in[i]}))
            out.insert({i, m});
    return out;
}

// Rank over F2 of a family of operators, each a set of coordinates.
std::size_t operator_rank(const std::vector<std::set<std::pair<std::size_t, oracle::Mono>>>& ops)
{
    std::map<std::pair<std::size_t, oracle::Mono>, std::size_t> index;
    for (const auto& op : ops)
        for (const auto& c : op)
            index.emplace(c, index.size());
    Matrix m(ops.size(), std::max<std::size_t>(index.size(), 1));
    for (std::size_t r = 0; r < ops.size(); ++r)
        for (const auto& c : ops[r])
            m.set(r, index.at(c));
    return f2::rank(m);
}

} // namespace

TEST_CASE("A(1) has the expected size and degrees")
{
    const auto& a = A1Algebra::instance();
    CHECK(a.dim() == 8);
    CHECK(a.top_degree() == 6);
    std::vector<int> degs;
    for (std::size_t i = 0; i < a.dim(); ++i)
        degs.push_back(a.degree(i));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{0, 1, 2, 3, 3, 4, 5, 6});
    CHECK(a.checked_through() >= 7);
}

TEST_CASE("A(1) agrees with its action on a polynomial ring")
{
    const auto& a = A1Algebra::instance();
    const auto in = probes();
    for (int d = 0; d <= 8; ++d) {
        std::vector<std::set<std::pair<std::size_t, oracle::Mono>>> ops;
        for (const auto& w : words_of_degree(d))
            ops.push_back(signature(w, in));
        CHECK(operator_rank(ops) == a.in_degree(d).size());

        // every relation the algebra finds among words also holds for the operators
        for (const auto& w : words_of_degree(d)) {
            const auto sig = signature(w, in);
            std::set<std::pair<std::size_t, oracle::Mono>> combo;
            const BitVector coords = a.reduce(w);
            for (std::size_t i = 0; i < a.dim(); ++i)
                if (coords.get(i))
                    for (const auto& c : signature(a.word(i), in))
                        if (!combo.erase(c))
                            combo.insert(c);
            CHECK(combo == sig);
        }
    }
}

TEST_CASE("multiplication is the composite of words")
{
    const auto& a = A1Algebra::instance();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Word w = a.word(i);
            w.insert(w.end(), a.word(j).begin(), a.word(j).end());
            CHECK(a.multiply(i, j) == a.reduce(w));
        }
    const BitVector one = a.reduce({});
    for (std::size_t i = 0; i < a.dim(); ++i) {
        CHECK(a.multiply(one, a.reduce(a.word(i))) == a.reduce(a.word(i)));
    }
    CHECK(a.reduce({1, 1}).none());
    CHECK(a.reduce({2, 2}) == a.reduce({1, 2, 1}));
}

TEST_CASE("free modules, trivial modules and freeness")
{
    const auto f = free_module({0, 3}, 12);
    CHECK(f.validate().ok());
    CHECK(f.total_dim() == 16);
    CHECK(is_free(f).outcome == Freeness::Free);
    CHECK(minimal_generator_degrees(f) == std::vector<int>{0, 3});
    const auto t = trivial_module(2);
    CHECK(t.validate().ok());
    CHECK(is_free(t).outcome == Freeness::NotFree);
    CHECK(minimal_generator_degrees(direct_sum({t, shift(t, 3)})) == std::vector<int>{2, 5});
}

TEST_CASE("json round trip of modules")
{
    const auto f = free_module({1}, 9);
    CHECK(module_from_json(to_json(f)) == f);
}

TEST_CASE("the twisted modules decompose into the listed parts")
{
    for (const auto& g : catalogue::group_names()) {
        const auto setup = catalogue::group_setup(g);
        const auto spec = catalogue::preset_ring(setup.ring);
        const auto& r = spec.ring();
        const auto tw = thom_twist(spec, r.parse(setup.twist), setup.ceiling);
        CHECK(tw.validate().ok());
        for (int d = 0; d <= setup.ceiling; ++d)
            CHECK(tw.dim(d) == r.dim(d));

        std::vector<FigurePart> parts;
        for (const auto& fig : setup.parts) {
            parts.push_back(figure_module(spec, fig, tw));
            CHECK(parts.back().module.validate().ok());
        }
        const auto report = verify_decomposition(tw, parts, 7, 8);
        CHECK_MESSAGE(report.ok(), g);
        for (int d = 0; d <= 7; ++d) {
            std::size_t total = 0;
            for (const auto& p : parts)
                total += p.module.dim(d);
            CHECK(total == tw.dim(d));
        }
    }
}

TEST_CASE("a wrong figure is rejected")
{
    const auto setup = catalogue::group_setup("Sp4");
    const auto spec = catalogue::preset_ring(setup.ring);
    const auto tw = thom_twist(spec, spec.ring().parse(setup.twist), setup.ceiling);
    FigureModuleSpec bad = setup.parts.front();
    bad.labels.pop_back(); // drops a class the generator reaches
    CHECK_THROWS_AS(figure_module(spec, bad, tw), DataError);
}

TEST_CASE("the ceiling must leave room for Sq2")
{
    const auto spec = catalogue::preset_ring("BSp4modZ2");
    CHECK_THROWS(module_from_cohomology(spec, spec.ring().degree_bound()));
}
