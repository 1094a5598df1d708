#include "bord/ring/polynomial.hpp"

#include "bord/errors.hpp"

#include <algorithm>

namespace bord::ring {

bool Monomial::is_one() const
{
    return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

int Monomial::degree(const std::vector<int>& generator_degrees) const
{
    if (generator_degrees.size() != exponents.size())
        throw InputError("monomial: generator count mismatch");
    int d = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i)
        d += exponents[i] * generator_degrees[i];
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    if (a.size() != b.size())
        throw InputError("monomial: generator count mismatch");
    Monomial out = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

Polynomial::Polynomial(const Monomial& m) : n_(m.size()) { terms_.insert(m); }

Polynomial Polynomial::one(std::size_t n) { return Polynomial(Monomial(n)); }

Polynomial Polynomial::generator(std::size_t n, std::size_t index, int exponent)
{
    Monomial m(n);
    m[index] = exponent;
    return Polynomial(m);
}

void Polynomial::toggle(const Monomial& m)
{
    if (m.size() != n_)
        throw InputError("polynomial: generator count mismatch");
    auto [it, inserted] = terms_.insert(m);
    if (!inserted)
        terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (other.n_ != n_)
        throw InputError("polynomial: generator count mismatch");
    for (const auto& m : other.terms_)
        toggle(m);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.n_ != b.n_)
        throw InputError("polynomial: generator count mismatch");
    Polynomial out(a.n_);
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            out.toggle(x * y);
    return out;
}

Polynomial Polynomial::pow(int e) const
{
    if (e < 0)
        throw InputError("polynomial: negative exponent");
    Polynomial out = one(n_);
    for (int k = 0; k < e; ++k)
        out = out * *this;
    return out;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images, std::size_t target_generators)
{
    if (images.size() != p.num_generators())
        throw InputError("substitute: one image per generator required");
    Polynomial out(target_generators);
    for (const auto& m : p.terms()) {
        Polynomial term = Polynomial::one(target_generators);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0)
                term = term * images[i].pow(m[i]);
        out += term;
    }
    return out;
}

} // namespace bord::ring
