#pragma once

// Independent reference code for the tests: polynomials over F2 in n variables of degree 1,
// with Sq computed from Sq(t) = t + t^2 and the Cartan formula. Nothing from the library.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Mono = std::vector<int>;
using Poly = std::set<Mono>; // F2 sum of monomials

inline void toggle(Poly& p, const Mono& m)
{
    if (!p.erase(m))
        p.insert(m);
}

inline Poly add(Poly a, const Poly& b)
{
    for (const auto& m : b)
        toggle(a, m);
    return a;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& x : a)
        for (const auto& y : b) {
            Mono m(x.size());
            for (std::size_t i = 0; i < x.size(); ++i)
                m[i] = x[i] + y[i];
            toggle(out, m);
        }
    return out;
}

inline bool binom2(int n, int k) { return k >= 0 && k <= n && (k & ~n) == 0; }

inline int degree(const Mono& m)
{
    int d = 0;
    for (int e : m)
        d += e;
    return d;
}

/// Sq^i of a monomial in degree-1 variables: coefficient of t^{a+j} is prod binom(a_k, j_k).
inline Poly sq(int i, const Mono& m)
{
    Poly out;
    Mono cur = m;
    auto rec = [&](auto&& self, std::size_t k, int left) -> void {
        if (k == m.size()) {
            if (left == 0)
                toggle(out, cur);
            return;
        }
        for (int j = 0; j <= std::min(left, m[k]); ++j) {
            if (!binom2(m[k], j))
                continue;
            cur[k] = m[k] + j;
            self(self, k + 1, left - j);
        }
        cur[k] = m[k];
    };
    rec(rec, 0, i);
    return out;
}

inline Poly sq(int i, const Poly& p)
{
    Poly out;
    for (const auto& m : p)
        out = add(out, sq(i, m));
    return out;
}

/// Elementary symmetric polynomial e_j(t_1..t_n).
inline Poly elementary(int n, int j)
{
    Poly out;
    for (unsigned mask = 0; mask < (1u << n); ++mask)
        if (__builtin_popcount(mask) == j) {
            Mono m(n);
            for (int i = 0; i < n; ++i)
                m[i] = mask >> i & 1u;
            out.insert(m);
        }
    return out;
}

/// Number of monomials of degree d in generators of the given degrees.
inline long long free_count(const std::vector<int>& degrees, int d)
{
    if (d < 0)
        return 0;
    std::vector<long long> c(static_cast<std::size_t>(d + 1), 0);
    c[0] = 1;
    for (int g : degrees)
        for (int k = g; k <= d; ++k)
            c[k] += c[k - g];
    return c[d];
}

} // namespace oracle
