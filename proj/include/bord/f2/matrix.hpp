#pragma once

// Dense linear algebra over the two-element field. Rows are bit-packed into
// 64-bit words and eliminated with word-wide XOR.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace bord::f2 {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size);
    BitVector(std::initializer_list<int> bits);

    static BitVector unit(std::size_t size, std::size_t index);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i);

    bool any() const;
    bool none() const { return !any(); }
    std::size_t popcount() const;
    /// Index of the lowest set bit, or size() when the vector is zero.
    std::size_t first_set() const;
    bool dot(const BitVector& other) const;

    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
    friend bool operator==(const BitVector& a, const BitVector& b) = default;
    friend bool operator<(const BitVector& a, const BitVector& b);

    /// Concatenation [this | other].
    BitVector concat(const BitVector& other) const;
    BitVector slice(std::size_t begin, std::size_t end) const;
    std::string to_string() const;

private:
    friend class Matrix;
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::initializer_list<std::initializer_list<int>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::size_t cols, const std::vector<BitVector>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<BitVector>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value = true);

    const BitVector& row(std::size_t r) const { return data_[r]; }
    BitVector& row(std::size_t r) { return data_[r]; }
    BitVector column(std::size_t c) const;
    void set_column(std::size_t c, const BitVector& v);

    bool is_zero() const;
    Matrix transpose() const;
    /// this * v, with v of length cols().
    BitVector apply(const BitVector& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BitVector> data_;
};

struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivots are chosen at the lowest available column.
Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// A subspace of F2^n held as reduced echelon rows (pivot-sorted, distinct pivots).
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<BitVector>& vectors);
    static Subspace full(std::size_t ambient_dim);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<BitVector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// Residue of v after clearing every pivot position; zero iff v lies in the subspace.
    BitVector reduce(BitVector v) const;
    bool contains(const BitVector& v) const { return reduce(v).none(); }
    /// Adds v; returns false (and leaves the space unchanged) when v is already contained.
    bool insert(BitVector v);

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<BitVector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
/// Column space of m, as a subspace of F2^rows.
Subspace image(const Matrix& m);
/// Some x with m*x = v, or nothing when v is outside the column space.
std::optional<BitVector> solve(const Matrix& m, const BitVector& v);
/// Inverse of a square invertible matrix; nothing when singular.
std::optional<Matrix> inverse(const Matrix& m);

} // namespace bord::f2
