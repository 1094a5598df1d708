#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

namespace bord::ring {

/// Exponent vector over a fixed, ordered generator list.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::size_t num_generators) : exponents(num_generators, 0) {}
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    std::size_t size() const { return exponents.size(); }
    int operator[](std::size_t i) const { return exponents[i]; }
    int& operator[](std::size_t i) { return exponents[i]; }

    bool is_one() const;
    int degree(const std::vector<int>& generator_degrees) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Element of the free commutative F2-algebra on n generators: a set of monomials
/// (addition is symmetric difference).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::size_t num_generators) : n_(num_generators) {}
    explicit Polynomial(const Monomial& m);

    static Polynomial zero(std::size_t n) { return Polynomial(n); }
    static Polynomial one(std::size_t n);
    static Polynomial generator(std::size_t n, std::size_t index, int exponent = 1);

    std::size_t num_generators() const { return n_; }
    const std::set<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Adds one monomial (F2: toggles its presence).
    void toggle(const Monomial& m);

    Polynomial& operator+=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    Polynomial pow(int e) const;

private:
    std::size_t n_ = 0;
    std::set<Monomial> terms_;
};

/// Ring homomorphism out of a free polynomial ring: generator i is sent to images[i].
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images, std::size_t target_generators);

} // namespace bord::ring
