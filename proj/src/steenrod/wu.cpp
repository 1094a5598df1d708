#include "bord/steenrod/wu.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace bord::steenrod {

Polynomial wu_sq(int n, int i, int j)
{
    if (n < 1 || i < 0 || j < 1 || i > j || j > n)
        throw InputError(fmt::format("wu_sq: need 0 <= i <= j <= n, got i={} j={} n={}", i, j, n));
    const auto w = [n](int k) {
        if (k == 0)
            return Polynomial::one(n);
        if (k > n)
            return Polynomial::zero(n);
        return Polynomial::generator(n, k - 1);
    };
    Polynomial out = Polynomial::zero(n);
    for (int k = 0; k <= i; ++k)
        if (binom_mod2(j - i + k - 1, k))
            out += w(i - k) * w(j + k);
    return out;
}

SteenrodSpec wu_type_spec(const std::string& name, int n, const std::vector<int>& kept, int scale,
                          const std::string& prefix, int degree_bound)
{
    std::vector<ring::Generator> gens;
    std::vector<int> position(n + 1, -1);
    for (int k : kept) {
        if (k < 1 || k > n)
            throw InputError(fmt::format("wu_type_spec: class index {} outside 1..{}", k, n));
        position[k] = static_cast<int>(gens.size());
        gens.push_back({fmt::format("{}{}", prefix, k), scale * k});
    }
    const std::size_t m = gens.size();
    std::vector<Polynomial> images;
    for (int k = 1; k <= n; ++k)
        images.push_back(position[k] < 0 ? Polynomial::zero(m) : Polynomial::generator(m, position[k]));

    RingPresentation ring(name, gens, {}, degree_bound);
    std::vector<std::map<int, Polynomial>> squares(m);
    for (int k : kept)
        for (int i = 1; i <= k; ++i) {
            const Polynomial v = ring::substitute(wu_sq(n, i, k), images, m);
            squares[position[k]][scale * i] = v;
        }
    return SteenrodSpec(std::move(ring), std::move(squares));
}

SteenrodSpec bo_spec(int n, int degree_bound)
{
    std::vector<int> all(n);
    for (int k = 1; k <= n; ++k)
        all[k - 1] = k;
    return wu_type_spec(fmt::format("BO{}", n), n, all, 1, "w", degree_bound);
}

Polynomial wu_lemma_expression(const SteenrodSpec& spec, const Polynomial& x)
{
    const auto& ring = spec.ring();
    const Polynomial x2 = x * x;
    const Polynomial sq1x = spec.sq(1, x);
    const Polynomial first = (spec.sq(2, sq1x) + x * sq1x) * x2;
    return ring.normal_form(first + sq1x * spec.sq(2, x2) + x * spec.sq(3, x2));
}

bool wu_manifold_lemma_check()
{
    const SteenrodSpec spec = wu_type_spec("BSO5", 5, {2, 3, 4, 5}, 1, "w", 11);
    const auto& ring = spec.ring();
    const Polynomial value = wu_lemma_expression(spec, ring.generator("w2"));
    const Polynomial expected = ring.parse("w5 w2^2 + w3^3");
    return value == ring.normal_form(expected) && !value.is_zero();
}

} // namespace bord::steenrod
