#include "bord/a1/algebra.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace bord::a1 {

int word_degree(const Word& w)
{
    int d = 0;
    for (int x : w)
        d += x;
    return d;
}

std::string format_word(const Word& w)
{
    if (w.empty())
        return "1";
    std::string s;
    for (int x : w)
        s += fmt::format("Sq{}", x);
    return s;
}

std::vector<Word> words_of_degree(int d)
{
    std::vector<Word> out;
    if (d < 0)
        return out;
    Word cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int x : {1, 2}) {
            if (x > remaining)
                continue;
            cur.push_back(x);
            self(self, remaining - x);
            cur.pop_back();
        }
    };
    rec(rec, d);
    std::stable_sort(out.begin(), out.end(),
                     [](const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
    return out;
}

namespace {

Word concat(const Word& a, const Word& b)
{
    Word w = a;
    w.insert(w.end(), b.begin(), b.end());
    return w;
}

// Relations as sums of words.
const std::vector<std::vector<Word>>& relations()
{
    static const std::vector<std::vector<Word>> rels = {{{1, 1}}, {{2, 2}, {1, 2, 1}}};
    return rels;
}

// Degrees past the top that must vanish for the presentation to be finite: every longer word
// has a prefix in one of them.
constexpr int kMaxDegree = 8;

} // namespace

A1Algebra::A1Algebra()
{
    for (int d = 0; d <= kMaxDegree; ++d) {
        Degree deg;
        deg.words = words_of_degree(d);
        for (std::size_t i = 0; i < deg.words.size(); ++i)
            deg.column.emplace(deg.words[i], i);
        deg.ideal = f2::Subspace(deg.words.size());
        for (const auto& rel : relations()) {
            const int rd = word_degree(rel.front());
            for (int du = 0; du + rd <= d; ++du)
                for (const auto& u : words_of_degree(du))
                    for (const auto& v : words_of_degree(d - du - rd)) {
                        f2::BitVector row(deg.words.size());
                        for (const auto& term : rel)
                            row.flip(deg.column.at(concat(concat(u, term), v)));
                        deg.ideal.insert(std::move(row));
                    }
        }
        std::vector<bool> pivot(deg.words.size(), false);
        for (auto p : deg.ideal.pivots())
            pivot[p] = true;
        for (std::size_t c = 0; c < deg.words.size(); ++c)
            if (!pivot[c])
                deg.basis_columns.push_back(c);
        degrees_.push_back(std::move(deg));
    }
    for (int d = 7; d <= kMaxDegree; ++d)
        if (!degrees_[d].basis_columns.empty())
            throw InvariantError(fmt::format("A(1): degree {} does not vanish", d));
    checked_through_ = kMaxDegree;

    by_degree_.assign(kMaxDegree + 1, {});
    for (int d = 0; d <= kMaxDegree; ++d)
        for (auto c : degrees_[d].basis_columns) {
            degrees_[d].basis_index.push_back(basis_.size());
            by_degree_[d].push_back(basis_.size());
            basis_.push_back(degrees_[d].words[c]);
            top_ = d;
        }

    table_.assign(basis_.size(), std::vector<f2::BitVector>(basis_.size()));
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = 0; j < basis_.size(); ++j)
            table_[i][j] = reduce(concat(basis_[i], basis_[j]));
}

const A1Algebra& A1Algebra::instance()
{
    static const A1Algebra algebra;
    return algebra;
}

const std::vector<std::size_t>& A1Algebra::in_degree(int d) const
{
    static const std::vector<std::size_t> none;
    if (d < 0 || d >= static_cast<int>(by_degree_.size()))
        return none;
    return by_degree_[d];
}

f2::BitVector A1Algebra::reduce(const Word& w) const
{
    for (int x : w)
        if (x != 1 && x != 2)
            throw InputError("A(1): words use only Sq1 and Sq2");
    f2::BitVector out(basis_.size());
    const int d = word_degree(w);
    if (d > kMaxDegree)
        return out;
    const Degree& deg = degrees_[d];
    f2::BitVector v(deg.words.size());
    v.set(deg.column.at(w));
    v = deg.ideal.reduce(std::move(v));
    for (std::size_t k = 0; k < deg.basis_columns.size(); ++k)
        if (v.get(deg.basis_columns[k]))
            out.set(deg.basis_index[k]);
    return out;
}

f2::BitVector A1Algebra::multiply(const f2::BitVector& a, const f2::BitVector& b) const
{
    f2::BitVector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (!a.get(i))
            continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (b.get(j))
                out ^= table_[i][j];
    }
    return out;
}

} // namespace bord::a1
