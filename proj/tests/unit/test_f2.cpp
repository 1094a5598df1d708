#include "bord/f2/matrix.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace bord::f2;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, double density = 0.5)
{
    std::bernoulli_distribution bit(density);
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (bit(rng))
                m.set(i, j);
    return m;
}

BitVector from_mask(std::size_t n, unsigned mask)
{
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u)
            v.set(i);
    return v;
}

// Brute force: every x in F2^cols.
struct Enumerated {
    std::set<BitVector> kernel;
    std::set<BitVector> image;
};

Enumerated enumerate(const Matrix& m)
{
    Enumerated e;
    for (unsigned mask = 0; mask < (1u << m.cols()); ++mask) {
        const BitVector x = from_mask(m.cols(), mask);
        const BitVector y = m.apply(x);
        if (y.none())
            e.kernel.insert(x);
        e.image.insert(y);
    }
    return e;
}

std::set<BitVector> span_set(std::size_t n, const std::vector<BitVector>& basis)
{
    std::set<BitVector> out;
    for (unsigned mask = 0; mask < (1u << basis.size()); ++mask) {
        BitVector v(n);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (mask >> i & 1u)
                v ^= basis[i];
        out.insert(v);
    }
    return out;
}

} // namespace

TEST_CASE("bit vector basics")
{
    BitVector v{1, 0, 1, 1};
    CHECK(v.size() == 4);
    CHECK(v.popcount() == 3);
    CHECK(v.first_set() == 0);
    v.flip(0);
    CHECK(v.first_set() == 2);
    CHECK(BitVector(70).none());
    CHECK(BitVector(70).first_set() == 70);
    BitVector w(130);
    w.set(129);
    CHECK(w.any());
    CHECK(w.concat(BitVector{1}).size() == 131);
    CHECK(w.slice(128, 130) == BitVector({0, 1}));
    CHECK(BitVector({1, 1, 0}).dot(BitVector({1, 1, 1})) == false);
}

TEST_CASE("matrix products and transpose")
{
    const Matrix a{{1, 1, 0}, {0, 1, 1}};
    const Matrix b{{1, 0}, {1, 1}, {0, 1}};
    CHECK(a * b == Matrix{{0, 1}, {1, 0}});
    CHECK(a.transpose().transpose() == a);
    CHECK(a.apply(BitVector{1, 1, 1}) == BitVector({0, 0}));
    CHECK(Matrix::identity(3) * b == b);
    CHECK((a + a).is_zero());
}

TEST_CASE("kernels and images agree with exhaustive enumeration")
{
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> size(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t r = size(rng), c = size(rng);
        const Matrix m = random_matrix(rng, r, c, trial % 3 == 0 ? 0.2 : 0.5);
        const Enumerated e = enumerate(m);

        const Subspace k = kernel_basis(m);
        const Subspace im = image(m);
        CHECK(span_set(c, k.basis()) == e.kernel);
        CHECK(span_set(r, im.basis()) == e.image);
        CHECK(e.image.size() == (1u << rank(m)));
        CHECK(rank(m) + k.dim() == c);
        CHECK(rank(m) == rank(m.transpose()));

        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            const BitVector y = from_mask(r, mask);
            const auto x = solve(m, y);
            CHECK(x.has_value() == (e.image.count(y) == 1));
            if (x)
                CHECK(m.apply(*x) == y);
        }
    }
}

TEST_CASE("inverse of random square matrices")
{
    std::mt19937_64 rng(7);
    int invertible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const Matrix m = random_matrix(rng, n, n);
        const auto inv = inverse(m);
        CHECK(inv.has_value() == (rank(m) == n));
        if (inv) {
            ++invertible;
            CHECK(*inv * m == Matrix::identity(n));
            CHECK(m * *inv == Matrix::identity(n));
        }
    }
    CHECK(invertible > 20);
}

TEST_CASE("rref pivots are the lowest available columns")
{
    const Matrix m{{0, 1, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}};
    const Echelon e = rref(m);
    CHECK(e.pivots == std::vector<std::size_t>{1, 2});
    CHECK(rank(m) == 2);
}

TEST_CASE("subspace insertion")
{
    Subspace s(4);
    CHECK(s.insert(BitVector{1, 1, 0, 0}));
    CHECK(s.insert(BitVector{0, 1, 1, 0}));
    CHECK_FALSE(s.insert(BitVector{1, 0, 1, 0}));
    CHECK(s.dim() == 2);
    CHECK(s.contains(BitVector{1, 0, 1, 0}));
    CHECK_FALSE(s.contains(BitVector{0, 0, 0, 1}));
    CHECK(Subspace::full(5).dim() == 5);
    CHECK(Subspace::span(3, {BitVector{1, 0, 0}, BitVector{1, 0, 0}}).dim() == 1);
}

TEST_CASE("large matrices cross word boundaries")
{
    std::mt19937_64 rng(99);
    const Matrix m = random_matrix(rng, 150, 140, 0.05);
    const Subspace k = kernel_basis(m);
    for (const auto& v : k.basis())
        CHECK(m.apply(v).none());
    CHECK(rank(m) + k.dim() == 140);
}
