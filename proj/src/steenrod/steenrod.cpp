#include "bord/steenrod/steenrod.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

namespace bord::steenrod {

using ring::Monomial;

bool binom_mod2(int n, int k)
{
    if (k < 0)
        return false;
    if (n < 0)
        n = k - n - 1; // binom(n,k) = (-1)^k binom(k-n-1,k)
    if (k > n)
        return false;
    return (k & ~n) == 0;
}

SteenrodSpec::SteenrodSpec(RingPresentation ring, std::vector<std::map<int, Polynomial>> squares)
    : ring_(std::move(ring)), squares_(std::move(squares))
{
    if (squares_.size() != ring_.num_generators())
        throw InputError(fmt::format("steenrod {}: need one row per generator", ring_.name()));
    for (std::size_t g = 0; g < squares_.size(); ++g)
        for (const auto& [i, value] : squares_[g]) {
            if (i < 1)
                throw InputError(fmt::format("steenrod {}: Sq^{} stored for {}", ring_.name(), i,
                                             ring_.generators()[g].name));
            if (value.num_generators() != ring_.num_generators())
                throw InputError(fmt::format("steenrod {}: entry over the wrong generator set", ring_.name()));
            ring_.degree(value); // rejects inhomogeneous entries
        }
}

std::optional<Polynomial> SteenrodSpec::on_generator(std::size_t generator, int i) const
{
    const int d = ring_.generator_degrees().at(generator);
    const Polynomial g = Polynomial::generator(ring_.num_generators(), generator);
    if (i == 0)
        return g;
    if (i < 0 || i > d)
        return ring_.zero();
    const auto it = squares_[generator].find(i);
    if (it != squares_[generator].end())
        return it->second;
    if (i == d)
        return g * g;
    return std::nullopt;
}

Polynomial SteenrodSpec::sq_free(int i, const Monomial& m) const
{
    // acc[j] = degree-j part of the total square of the factors processed so far
    std::vector<Polynomial> acc(i + 1, ring_.zero());
    acc[0] = ring_.one();
    for (std::size_t g = 0; g < m.size(); ++g) {
        if (m[g] == 0)
            continue;
        const int dg = ring_.generator_degrees()[g];
        std::vector<std::optional<Polynomial>> row;
        for (int j = 0; j <= std::min(i, dg); ++j)
            row.push_back(on_generator(g, j));
        for (int e = 0; e < m[g]; ++e) {
            std::vector<Polynomial> next(i + 1, ring_.zero());
            for (int a = 0; a <= i; ++a) {
                if (acc[a].is_zero())
                    continue;
                for (int j = 0; j < static_cast<int>(row.size()) && a + j <= i; ++j) {
                    if (!row[j])
                        throw DataError(fmt::format("steenrod {}: Sq^{}({}) is blank but needed", ring_.name(), j,
                                                    ring_.generators()[g].name));
                    next[a + j] += acc[a] * *row[j];
                }
            }
            acc = std::move(next);
        }
    }
    return acc[i];
}

Polynomial SteenrodSpec::sq(int i, const Polynomial& p) const
{
    const auto d = ring_.degree(p);
    if (!d)
        return ring_.zero();
    if (i < 0)
        throw InputError("steenrod: negative square");
    if (*d + i > ring_.degree_bound())
        throw RangeError(fmt::format("steenrod {}: Sq^{} of a degree-{} class leaves the bound {}", ring_.name(), i,
                                     *d, ring_.degree_bound()));
    if (i > *d)
        return ring_.zero();
    Polynomial out = ring_.zero();
    for (const auto& m : p.terms())
        out += sq_free(i, m);
    return ring_.normal_form(out);
}

Polynomial SteenrodSpec::sq_sequence(const std::vector<int>& ops, const Polynomial& p) const
{
    Polynomial x = p;
    for (auto it = ops.rbegin(); it != ops.rend(); ++it)
        x = sq(*it, x);
    return x;
}

SteenrodSpec SteenrodSpec::with_entry(std::size_t generator, int i, Polynomial value) const
{
    auto squares = squares_;
    squares.at(generator)[i] = std::move(value);
    return SteenrodSpec(ring_, std::move(squares));
}

CheckReport verify_instability(const SteenrodSpec& spec)
{
    const auto& ring = spec.ring();
    CheckReport rep{"instability", 0, {}};
    for (std::size_t g = 0; g < ring.num_generators(); ++g) {
        const auto& gen = ring.generators()[g];
        const Polynomial x = Polynomial::generator(ring.num_generators(), g);
        for (const auto& [i, value] : spec.entries(g)) {
            ++rep.checked;
            const auto d = ring.degree(value);
            if (d && *d != gen.degree + i)
                rep.violations.push_back(fmt::format("Sq^{}({}) = {} has degree {}, expected {}", i, gen.name,
                                                     ring.format(value), *d, gen.degree + i));
            if (i > gen.degree && !value.is_zero())
                rep.violations.push_back(
                    fmt::format("Sq^{}({}) = {} but must vanish above degree", i, gen.name, ring.format(value)));
            if (i == gen.degree) {
                const bool in_range = 2 * gen.degree <= ring.degree_bound();
                const bool equal = in_range ? ring.normal_form(value + x * x).is_zero() : value == x * x;
                if (!equal)
                    rep.violations.push_back(fmt::format("Sq^{}({}) = {} is not the square {}", i, gen.name,
                                                         ring.format(value), ring.format(x * x)));
            }
        }
    }
    return rep;
}

namespace {

// Basis elements of every degree up to max_deg, as polynomials.
std::vector<std::pair<int, Polynomial>> basis_elements(const RingPresentation& ring, int max_deg)
{
    std::vector<std::pair<int, Polynomial>> out;
    for (int d = 0; d <= std::min(max_deg, ring.degree_bound()); ++d)
        for (const auto& m : ring.monomial_basis(d).monomials)
            out.emplace_back(d, Polynomial(m));
    return out;
}

Polynomial adem_rhs(const SteenrodSpec& spec, int a, int b, const Polynomial& x)
{
    Polynomial out = spec.ring().zero();
    for (int c = 0; 2 * c <= a; ++c)
        if (binom_mod2(b - c - 1, a - 2 * c))
            out += spec.sq_sequence({a + b - c, c}, x);
    return out;
}

} // namespace

CheckReport verify_adem(const SteenrodSpec& spec, int max_deg)
{
    const auto& ring = spec.ring();
    CheckReport rep{"adem", 0, {}};
    for (const auto& [d, x] : basis_elements(ring, max_deg)) {
        for (int b = 1; d + b <= ring.degree_bound(); ++b)
            for (int a = 1; a < 2 * b && d + a + b <= ring.degree_bound(); ++a) {
                ++rep.checked;
                const Polynomial lhs = spec.sq_sequence({a, b}, x);
                const Polynomial rhs = adem_rhs(spec, a, b, x);
                if (lhs != rhs)
                    rep.violations.push_back(fmt::format("Sq^{}Sq^{}({}) = {} but the Adem sum gives {}", a, b,
                                                         ring.format(x), ring.format(lhs), ring.format(rhs)));
            }
    }
    return rep;
}

CheckReport verify_low_adem(const SteenrodSpec& spec, int max_deg)
{
    struct Rel {
        const char* text;
        std::vector<int> lhs;
        std::vector<std::vector<int>> rhs;
    };
    const std::vector<Rel> rels = {
        {"Sq1Sq1 = 0", {1, 1}, {}},
        {"Sq1Sq2 = Sq3", {1, 2}, {{3}}},
        {"Sq2Sq2 = Sq3Sq1", {2, 2}, {{3, 1}}},
        {"Sq3Sq2 = 0", {3, 2}, {}},
        {"Sq2Sq3 = Sq5 + Sq4Sq1", {2, 3}, {{5}, {4, 1}}},
    };
    const auto& ring = spec.ring();
    CheckReport rep{"adem-low", 0, {}};
    for (const auto& [d, x] : basis_elements(ring, max_deg))
        for (const auto& r : rels) {
            int shift = 0;
            for (int op : r.lhs)
                shift += op;
            if (d + shift > ring.degree_bound())
                continue;
            ++rep.checked;
            const Polynomial lhs = spec.sq_sequence(r.lhs, x);
            Polynomial rhs = ring.zero();
            for (const auto& term : r.rhs)
                rhs += spec.sq_sequence(term, x);
            if (lhs != rhs)
                rep.violations.push_back(fmt::format("{} fails on {}: {} vs {}", r.text, ring.format(x),
                                                     ring.format(lhs), ring.format(rhs)));
        }
    return rep;
}

CheckReport verify_relation_stability(const SteenrodSpec& spec)
{
    const auto& ring = spec.ring();
    CheckReport rep{"relation-stability", 0, {}};
    for (const auto& r : ring.relations()) {
        const int d = *ring.degree(r);
        for (int i = 0; d + i <= ring.degree_bound() && i <= d; ++i) {
            ++rep.checked;
            const Polynomial image = spec.sq(i, r);
            if (!image.is_zero())
                rep.violations.push_back(
                    fmt::format("Sq^{}({}) = {} is not in the ideal", i, ring.format(r), ring.format(image)));
        }
    }
    return rep;
}

CheckReport verify_sq1_derivation(const SteenrodSpec& spec)
{
    const auto& ring = spec.ring();
    CheckReport rep{"sq1-derivation", 0, {}};
    const auto elems = basis_elements(ring, ring.degree_bound());
    for (const auto& [d, x] : elems) {
        if (d + 2 <= ring.degree_bound()) {
            ++rep.checked;
            if (!spec.sq_sequence({1, 1}, x).is_zero())
                rep.violations.push_back(fmt::format("Sq1Sq1({}) != 0", ring.format(x)));
        }
        for (const auto& [e, y] : elems) {
            if (d + e + 1 > ring.degree_bound())
                continue;
            ++rep.checked;
            const Polynomial lhs = spec.sq(1, x * y);
            const Polynomial rhs = ring.normal_form(spec.sq(1, x) * y + x * spec.sq(1, y));
            if (lhs != rhs)
                rep.violations.push_back(fmt::format("Sq1({} * {}) breaks the Leibniz rule", ring.format(x),
                                                     ring.format(y)));
        }
    }
    return rep;
}

} // namespace bord::steenrod
