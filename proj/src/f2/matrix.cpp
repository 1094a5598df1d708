#include "bord/f2/matrix.hpp"

#include "bord/errors.hpp"

#include <algorithm>
#include <bit>

namespace bord::f2 {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

void check_same_size(std::size_t a, std::size_t b, const char* what)
{
    if (a != b)
        throw InputError(std::string("f2: dimension mismatch in ") + what);
}

} // namespace

BitVector::BitVector(std::size_t size) : words_(word_count(size), 0), size_(size) {}

BitVector::BitVector(std::initializer_list<int> bits) : BitVector(bits.size())
{
    std::size_t i = 0;
    for (int b : bits)
        set(i++, b != 0);
}

BitVector BitVector::unit(std::size_t size, std::size_t index)
{
    BitVector v(size);
    v.set(index);
    return v;
}

bool BitVector::get(std::size_t i) const
{
    if (i >= size_)
        throw InputError("f2: bit index out of bounds");
    return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::set(std::size_t i, bool value)
{
    if (i >= size_)
        throw InputError("f2: bit index out of bounds");
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (value)
        words_[i / kWordBits] |= mask;
    else
        words_[i / kWordBits] &= ~mask;
}

void BitVector::flip(std::size_t i)
{
    if (i >= size_)
        throw InputError("f2: bit index out of bounds");
    words_[i / kWordBits] ^= std::uint64_t{1} << (i % kWordBits);
}

bool BitVector::any() const
{
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitVector::popcount() const
{
    std::size_t n = 0;
    for (auto w : words_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t BitVector::first_set() const
{
    for (std::size_t k = 0; k < words_.size(); ++k)
        if (words_[k])
            return k * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[k]));
    return size_;
}

bool BitVector::dot(const BitVector& other) const
{
    check_same_size(size_, other.size_, "dot");
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < words_.size(); ++k)
        acc ^= words_[k] & other.words_[k];
    return std::popcount(acc) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other)
{
    check_same_size(size_, other.size_, "xor");
    for (std::size_t k = 0; k < words_.size(); ++k)
        words_[k] ^= other.words_[k];
    return *this;
}

bool operator<(const BitVector& a, const BitVector& b)
{
    if (a.size_ != b.size_)
        return a.size_ < b.size_;
    return a.words_ < b.words_;
}

BitVector BitVector::concat(const BitVector& other) const
{
    BitVector out(size_ + other.size_);
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i))
            out.set(i);
    for (std::size_t i = 0; i < other.size_; ++i)
        if (other.get(i))
            out.set(size_ + i);
    return out;
}

BitVector BitVector::slice(std::size_t begin, std::size_t end) const
{
    if (begin > end || end > size_)
        throw InputError("f2: bad slice");
    BitVector out(end - begin);
    for (std::size_t i = begin; i < end; ++i)
        if (get(i))
            out.set(i - begin);
    return out;
}

std::string BitVector::to_string() const
{
    std::string s;
    s.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i)
        s.push_back(get(i) ? '1' : '0');
    return s;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitVector(cols)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<int>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw InputError("f2: ragged matrix literal");
        data_.emplace_back(r);
    }
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i);
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<BitVector>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        check_same_size(rows[r].size(), cols, "from_rows");
        m.data_[r] = rows[r];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<BitVector>& cols)
{
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
        m.set_column(c, cols[c]);
    return m;
}

bool Matrix::get(std::size_t r, std::size_t c) const
{
    if (r >= rows_ || c >= cols_)
        throw InputError("f2: matrix index out of bounds");
    return data_[r].get(c);
}

void Matrix::set(std::size_t r, std::size_t c, bool value)
{
    if (r >= rows_ || c >= cols_)
        throw InputError("f2: matrix index out of bounds");
    data_[r].set(c, value);
}

BitVector Matrix::column(std::size_t c) const
{
    BitVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].get(c))
            v.set(r);
    return v;
}

void Matrix::set_column(std::size_t c, const BitVector& v)
{
    check_same_size(v.size(), rows_, "set_column");
    for (std::size_t r = 0; r < rows_; ++r)
        data_[r].set(c, v.get(r));
}

bool Matrix::is_zero() const
{
    return std::none_of(data_.begin(), data_.end(), [](const BitVector& r) { return r.any(); });
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (data_[r].get(c))
                t.set(c, r);
    return t;
}

BitVector Matrix::apply(const BitVector& v) const
{
    check_same_size(v.size(), cols_, "apply");
    BitVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        if (data_[r].dot(v))
            out.set(r);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    check_same_size(a.cols_, b.rows_, "multiply");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (a.data_[r].get(k))
                out.data_[r] ^= b.data_[k];
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    check_same_size(a.rows_, b.rows_, "add");
    check_same_size(a.cols_, b.cols_, "add");
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows_; ++r)
        out.data_[r] ^= b.data_[r];
    return out;
}

std::string Matrix::to_string() const
{
    std::string s;
    for (const auto& r : data_) {
        s += r.to_string();
        s += '\n';
    }
    return s;
}

Echelon rref(const Matrix& m)
{
    Echelon e{m, {}};
    Matrix& a = e.reduced;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t p = lead;
        while (p < a.rows() && !a.row(p).get(c))
            ++p;
        if (p == a.rows())
            continue;
        std::swap(a.row(p), a.row(lead));
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != lead && a.row(r).get(c))
                a.row(r) ^= a.row(lead);
        e.pivots.push_back(c);
        ++lead;
    }
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<BitVector>& vectors)
{
    Subspace s(ambient_dim);
    for (const auto& v : vectors)
        s.insert(v);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim)
{
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(BitVector::unit(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

BitVector Subspace::reduce(BitVector v) const
{
    check_same_size(v.size(), ambient_dim_, "subspace reduce");
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (v.get(pivots_[k]))
            v ^= basis_[k];
    return v;
}

bool Subspace::insert(BitVector v)
{
    v = reduce(std::move(v));
    if (v.none())
        return false;
    const std::size_t p = v.first_set();
    for (auto& b : basis_)
        if (b.get(p))
            b ^= v;
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(v));
    return true;
}

Subspace kernel_basis(const Matrix& m)
{
    const Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<BitVector> vectors;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        BitVector v = BitVector::unit(m.cols(), f);
        for (std::size_t i = 0; i < e.pivots.size(); ++i)
            if (e.reduced.row(i).get(f))
                v.set(e.pivots[i]);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(m.cols(), vectors);
}

Subspace image(const Matrix& m)
{
    std::vector<BitVector> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c)
        cols.push_back(m.column(c));
    return Subspace::span(m.rows(), cols);
}

std::optional<BitVector> solve(const Matrix& m, const BitVector& v)
{
    check_same_size(v.size(), m.rows(), "solve");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        aug.row(r) = m.row(r).concat(BitVector{v.get(r) ? 1 : 0});
    }
    const Echelon e = rref(aug);
    BitVector x(m.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == m.cols())
            return std::nullopt;
        if (e.reduced.row(i).get(m.cols()))
            x.set(e.pivots[i]);
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw InputError("f2: inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r)
        aug.row(r) = m.row(r).concat(BitVector::unit(n, r));
    const Echelon e = rref(aug);
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n))
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        inv.row(r) = e.reduced.row(r).slice(n, 2 * n);
    return inv;
}

} // namespace bord::f2
