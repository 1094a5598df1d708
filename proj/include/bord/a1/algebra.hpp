#pragma once

#include "bord/f2/matrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace bord::a1 {

/// A word in Sq1 and Sq2, written left to right (so {1,2} is Sq1 Sq2).
using Word = std::vector<int>;

int word_degree(const Word& w);
std::string format_word(const Word& w);

/// The subalgebra of the Steenrod algebra generated by Sq1 and Sq2, presented as words modulo
/// the two-sided ideal of Sq1Sq1 and Sq2Sq2 + Sq1Sq2Sq1. Each degree is a quotient of the span
/// of its words; columns are ordered by length then lexicographically (Sq1 < Sq2), and the
/// lowest column of every ideal row is eliminated.
class A1Algebra {
public:
    static const A1Algebra& instance();

    std::size_t dim() const { return basis_.size(); }
    const Word& word(std::size_t i) const { return basis_[i]; }
    int degree(std::size_t i) const { return word_degree(basis_[i]); }
    int top_degree() const { return top_; }
    /// Basis indices of degree d (empty outside 0..top).
    const std::vector<std::size_t>& in_degree(int d) const;

    std::size_t unit() const { return in_degree(0).front(); }
    std::size_t sq1() const { return in_degree(1).front(); }
    std::size_t sq2() const { return in_degree(2).front(); }

    /// Coordinates (length dim()) of the class of a word.
    f2::BitVector reduce(const Word& w) const;
    f2::BitVector multiply(std::size_t i, std::size_t j) const { return table_[i][j]; }
    f2::BitVector multiply(const f2::BitVector& a, const f2::BitVector& b) const;

    /// Words of degree d that were checked to lie in the ideal, for d above the top degree.
    int checked_through() const { return checked_through_; }

private:
    A1Algebra();

    struct Degree {
        std::vector<Word> words;
        std::map<Word, std::size_t> column;
        f2::Subspace ideal;
        std::vector<std::size_t> basis_columns;
        std::vector<std::size_t> basis_index; // global index of each surviving column
    };

    std::vector<Degree> degrees_;
    std::vector<Word> basis_;
    std::vector<std::vector<std::size_t>> by_degree_;
    std::vector<std::vector<f2::BitVector>> table_;
    int top_ = 0;
    int checked_through_ = 0;
};

/// All words of degree d in Sq1 (degree 1) and Sq2 (degree 2), by length then lexicographically.
std::vector<Word> words_of_degree(int d);

} // namespace bord::a1
