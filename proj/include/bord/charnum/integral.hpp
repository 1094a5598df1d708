#pragma once

#include "bord/ring/polynomial.hpp"
#include "bord/ring/presentation.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace bord::charnum {

using ring::Monomial;

/// Integer linear combination of monomials. Zero coefficients are never stored.
class IntegralPolynomial {
public:
    IntegralPolynomial() = default;
    explicit IntegralPolynomial(std::size_t num_generators) : n_(num_generators) {}

    std::size_t num_generators() const { return n_; }
    const std::map<Monomial, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const Monomial& m) const;

    void add(const Monomial& m, long long c);
    IntegralPolynomial& operator+=(const IntegralPolynomial& o);
    friend IntegralPolynomial operator+(IntegralPolynomial a, const IntegralPolynomial& b) { return a += b; }
    IntegralPolynomial operator-() const;
    IntegralPolynomial scaled(long long c) const;
    friend bool operator==(const IntegralPolynomial&, const IntegralPolynomial&) = default;

    /// Odd coefficients, as an element of the free F2 algebra on the same generators.
    ring::Polynomial mod2() const;

private:
    std::size_t n_ = 0;
    std::map<Monomial, long long> terms_;
};

/// Integral cohomology of a product of truncated polynomial rings and exterior factors:
/// generator g satisfies g^k = 0 for its truncation k, odd-degree generators anticommute, and
/// everything above the dimension vanishes.
class IntegralRing {
public:
    IntegralRing() = default;
    /// truncation: exponent k with g^k = 0 per generator name; a missing name means no truncation
    /// below the dimension (odd generators always square to zero).
    IntegralRing(std::vector<ring::Generator> generators, const std::map<std::string, int>& truncation,
                 int dimension);

    const std::vector<ring::Generator>& generators() const { return generators_; }
    std::size_t num_generators() const { return generators_.size(); }
    int dimension() const { return dimension_; }
    int degree(const Monomial& m) const;
    const std::map<std::string, int>& truncation() const { return truncation_; }

    bool vanishes(const Monomial& m) const;
    IntegralPolynomial normal_form(const IntegralPolynomial& p) const;
    IntegralPolynomial multiply(const IntegralPolynomial& a, const IntegralPolynomial& b) const;
    IntegralPolynomial one() const;
    IntegralPolynomial monomial(const Monomial& m, long long c = 1) const;

    /// Nonvanishing monomials of degree d, lexicographically ascending.
    std::vector<Monomial> basis(int d) const;

    /// Integer sums of products, e.g. "-2abc", "ab + ac", "-a-b-c", "3u", "0".
    IntegralPolynomial parse(std::string_view text) const;
    std::string format(const IntegralPolynomial& p) const;

private:
    std::vector<ring::Generator> generators_;
    std::map<std::string, int> truncation_;
    std::vector<int> limit_; // exponent bound per generator (exclusive), 0 = none
    int dimension_ = 0;
};

} // namespace bord::charnum
