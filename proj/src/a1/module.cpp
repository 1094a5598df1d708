#include "bord/a1/module.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace bord::a1 {

using f2::BitVector;
using f2::Matrix;

A1Module::A1Module(int lo, std::vector<std::size_t> dims, std::optional<int> ceiling)
    : lo_(lo), dims_(std::move(dims)), ceiling_(ceiling)
{
    for (int d = lo_; d <= hi(); ++d) {
        sq1_.emplace_back(dim(d + 1), dim(d));
        sq2_.emplace_back(dim(d + 2), dim(d));
        labels_.emplace_back();
    }
}

std::size_t A1Module::dim(int d) const { return in_range(d) ? dims_[slot(d)] : 0; }

std::size_t A1Module::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0}); }

Matrix A1Module::sq(int op, int d) const
{
    if (op != 1 && op != 2)
        throw InputError(fmt::format("A1Module: no operation Sq{}", op));
    if (!in_range(d))
        return Matrix(dim(d + op), 0);
    return op == 1 ? sq1_[slot(d)] : sq2_[slot(d)];
}

void A1Module::set_sq(int op, int d, Matrix m)
{
    if (op != 1 && op != 2)
        throw InputError(fmt::format("A1Module: no operation Sq{}", op));
    if (!in_range(d)) {
        if (m.rows() * m.cols() == 0)
            return;
        throw InputError(fmt::format("A1Module: degree {} outside {}..{}", d, lo_, hi()));
    }
    if (m.rows() != dim(d + op) || m.cols() != dim(d))
        throw InputError(fmt::format("A1Module: Sq{} matrix at degree {} should be {}x{}, got {}x{}", op, d,
                                     dim(d + op), dim(d), m.rows(), m.cols()));
    (op == 1 ? sq1_ : sq2_)[slot(d)] = std::move(m);
}

const std::vector<std::string>& A1Module::labels(int d) const
{
    static const std::vector<std::string> none;
    return in_range(d) ? labels_[slot(d)] : none;
}

void A1Module::set_labels(int d, std::vector<std::string> labels)
{
    if (!in_range(d) || labels.size() != dim(d))
        throw InputError(fmt::format("A1Module: {} labels for degree {} of dimension {}", labels.size(), d, dim(d)));
    labels_[slot(d)] = std::move(labels);
}

BitVector A1Module::act(int op, int d, const BitVector& v) const
{
    if (v.size() != dim(d))
        throw InputError(fmt::format("A1Module: vector of length {} in degree {} of dimension {}", v.size(), d, dim(d)));
    if (!in_range(d))
        return BitVector(dim(d + op));
    return (op == 1 ? sq1_ : sq2_)[slot(d)].apply(v);
}

BitVector A1Module::act(const Word& w, int d, const BitVector& v) const
{
    BitVector x = v;
    int deg = d;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        x = act(*it, deg, x);
        deg += *it;
    }
    return x;
}

BitVector A1Module::act(const BitVector& a, int e, int d, const BitVector& v) const
{
    const auto& alg = A1Algebra::instance();
    BitVector out(dim(d + e));
    for (std::size_t i = 0; i < alg.dim(); ++i)
        if (a.get(i)) {
            if (alg.degree(i) != e)
                throw InputError("A1Module: algebra element is not of the stated degree");
            out ^= act(alg.word(i), d, v);
        }
    return out;
}

Matrix A1Module::word_matrix(const Word& w, int d) const
{
    Matrix m(dim(d + word_degree(w)), dim(d));
    for (std::size_t c = 0; c < dim(d); ++c)
        m.set_column(c, act(w, d, BitVector::unit(dim(d), c)));
    return m;
}

CheckReport A1Module::validate() const
{
    CheckReport rep{"a1-relations", 0, {}};
    for (int d = lo_; d <= hi(); ++d) {
        ++rep.checked;
        if (!word_matrix({1, 1}, d).is_zero())
            rep.violations.push_back(fmt::format("sq1 sq1 != 0 from degree {}", d));
        ++rep.checked;
        if (!(word_matrix({2, 2}, d) + word_matrix({1, 2, 1}, d)).is_zero())
            rep.violations.push_back(fmt::format("sq2 sq2 != sq1 sq2 sq1 from degree {}", d));
    }
    return rep;
}

std::size_t free_index(const std::vector<int>& gens, std::size_t k, std::size_t a)
{
    const auto& alg = A1Algebra::instance();
    const int t = gens.at(k) + alg.degree(a);
    std::size_t offset = 0;
    for (std::size_t j = 0; j < k; ++j)
        offset += alg.in_degree(t - gens[j]).size();
    const auto& same = alg.in_degree(alg.degree(a));
    return offset + static_cast<std::size_t>(std::find(same.begin(), same.end(), a) - same.begin());
}

A1Module free_module(const std::vector<int>& gens, int through)
{
    const auto& alg = A1Algebra::instance();
    const int lo = gens.empty() ? 0 : *std::min_element(gens.begin(), gens.end());
    std::vector<std::size_t> dims;
    for (int t = lo; t <= through; ++t) {
        std::size_t n = 0;
        for (int g : gens)
            n += alg.in_degree(t - g).size();
        dims.push_back(n);
    }
    A1Module m(lo, dims);
    for (int t = lo; t <= through; ++t) {
        std::vector<std::string> labels;
        Matrix s1(m.dim(t + 1), m.dim(t)), s2(m.dim(t + 2), m.dim(t));
        for (std::size_t k = 0; k < gens.size(); ++k)
            for (auto a : alg.in_degree(t - gens[k])) {
                const std::size_t col = free_index(gens, k, a);
                labels.push_back(alg.degree(a) == 0 ? fmt::format("g{}", k)
                                                    : fmt::format("{}*g{}", format_word(alg.word(a)), k));
                for (int op : {1, 2}) {
                    if (t + op > through)
                        continue;
                    const BitVector prod = alg.multiply(op == 1 ? alg.sq1() : alg.sq2(), a);
                    for (std::size_t b = 0; b < alg.dim(); ++b)
                        if (prod.get(b))
                            (op == 1 ? s1 : s2).set(free_index(gens, k, b), col);
                }
            }
        m.set_sq(1, t, std::move(s1));
        m.set_sq(2, t, std::move(s2));
        m.set_labels(t, std::move(labels));
    }
    return m;
}

A1Module trivial_module(int degree)
{
    A1Module m(degree, {1});
    m.set_labels(degree, {"1"});
    return m;
}

namespace {

bool has_labels(const A1Module& m)
{
    for (int d = m.lo(); d <= m.hi(); ++d)
        if (m.dim(d) > 0 && m.labels(d).size() != m.dim(d))
            return false;
    return true;
}

} // namespace

A1Module direct_sum(const std::vector<A1Module>& parts)
{
    int lo = 0, hi = -1;
    bool first = true;
    std::optional<int> ceiling;
    for (const auto& p : parts) {
        if (p.total_dim() == 0)
            continue;
        lo = first ? p.lo() : std::min(lo, p.lo());
        hi = first ? p.hi() : std::max(hi, p.hi());
        first = false;
        if (p.ceiling())
            ceiling = ceiling ? std::min(*ceiling, *p.ceiling()) : *p.ceiling();
    }
    std::vector<std::size_t> dims;
    for (int d = lo; d <= hi; ++d) {
        std::size_t n = 0;
        for (const auto& p : parts)
            n += p.dim(d);
        dims.push_back(n);
    }
    A1Module out(lo, dims, ceiling);
    const bool labelled = std::all_of(parts.begin(), parts.end(), has_labels);
    for (int d = lo; d <= hi; ++d) {
        for (int op : {1, 2}) {
            Matrix m(out.dim(d + op), out.dim(d));
            std::size_t row0 = 0, col0 = 0;
            for (const auto& p : parts) {
                const Matrix block = p.sq(op, d);
                for (std::size_t r = 0; r < block.rows(); ++r)
                    for (std::size_t c = 0; c < block.cols(); ++c)
                        if (block.get(r, c))
                            m.set(row0 + r, col0 + c);
                row0 += p.dim(d + op);
                col0 += p.dim(d);
            }
            out.set_sq(op, d, std::move(m));
        }
        if (labelled) {
            std::vector<std::string> labels;
            for (const auto& p : parts)
                for (const auto& l : p.labels(d))
                    labels.push_back(l);
            out.set_labels(d, std::move(labels));
        }
    }
    return out;
}

A1Module change_of_basis(const A1Module& m, const std::vector<Matrix>& change)
{
    if (static_cast<int>(change.size()) != m.hi() - m.lo() + 1)
        throw InputError("change_of_basis: one matrix per degree required");
    std::vector<Matrix> inv;
    for (int d = m.lo(); d <= m.hi(); ++d) {
        const Matrix& p = change[d - m.lo()];
        if (p.rows() != m.dim(d) || p.cols() != m.dim(d))
            throw InputError(fmt::format("change_of_basis: wrong size at degree {}", d));
        auto q = f2::inverse(p);
        if (!q)
            throw InputError(fmt::format("change_of_basis: singular matrix at degree {}", d));
        inv.push_back(std::move(*q));
    }
    std::vector<std::size_t> dims;
    for (int d = m.lo(); d <= m.hi(); ++d)
        dims.push_back(m.dim(d));
    A1Module out(m.lo(), dims, m.ceiling());
    for (int d = m.lo(); d <= m.hi(); ++d)
        for (int op : {1, 2}) {
            if (d + op > m.hi() || m.dim(d + op) == 0 || m.dim(d) == 0)
                continue;
            out.set_sq(op, d, inv[d + op - m.lo()] * m.sq(op, d) * change[d - m.lo()]);
        }
    return out;
}

A1Module shift(const A1Module& m, int k)
{
    std::vector<std::size_t> dims;
    for (int d = m.lo(); d <= m.hi(); ++d)
        dims.push_back(m.dim(d));
    std::optional<int> c = m.ceiling();
    if (c)
        *c += k;
    A1Module out(m.lo() + k, dims, c);
    for (int d = m.lo(); d <= m.hi(); ++d) {
        for (int op : {1, 2})
            out.set_sq(op, d + k, m.sq(op, d));
        if (m.labels(d).size() == m.dim(d) && m.dim(d) > 0)
            out.set_labels(d + k, m.labels(d));
    }
    return out;
}

std::string to_string(Freeness f)
{
    switch (f) {
    case Freeness::Free:
        return "free";
    case Freeness::NotFree:
        return "not free";
    case Freeness::Unknown:
        return "unknown (truncated)";
    }
    return "?";
}

namespace {

// Chosen generator vectors, degree by degree: basis vectors completing the decomposables.
std::vector<std::pair<int, BitVector>> choose_generators(const A1Module& m, int through)
{
    std::vector<std::pair<int, BitVector>> gens;
    for (int d = m.lo(); d <= std::min(through, m.hi()); ++d) {
        f2::Subspace dec(m.dim(d));
        for (int op : {1, 2}) {
            const Matrix s = m.sq(op, d - op);
            for (std::size_t c = 0; c < s.cols(); ++c)
                dec.insert(s.column(c));
        }
        for (std::size_t i = 0; i < m.dim(d); ++i) {
            BitVector e = BitVector::unit(m.dim(d), i);
            if (dec.insert(e))
                gens.emplace_back(d, std::move(e));
        }
    }
    return gens;
}

std::size_t homology_dim(const Matrix& in, const Matrix& out, std::size_t dim)
{
    // ker(out) / im(in) inside a space of dimension dim
    const std::size_t ker = dim - f2::rank(out);
    return ker - f2::rank(in);
}

} // namespace

std::vector<int> minimal_generator_degrees(const A1Module& m)
{
    std::vector<int> out;
    for (const auto& [d, v] : choose_generators(m, m.hi()))
        out.push_back(d);
    return out;
}

FreenessReport is_free(const A1Module& m)
{
    const auto& alg = A1Algebra::instance();
    FreenessReport rep;
    const int c = m.ceiling().value_or(m.hi());
    const bool truncated = m.truncated();
    auto known = [&](int d) { return !truncated || d <= c; };

    const auto gens = choose_generators(m, c);
    std::vector<int> gdeg;
    for (const auto& [d, v] : gens)
        gdeg.push_back(d);
    rep.generator_degrees = gdeg;

    for (int d = m.lo(); d <= m.hi(); ++d) {
        if (known(d + 1)) {
            const std::size_t h = homology_dim(m.sq(1, d - 1), m.sq(1, d), m.dim(d));
            if (h > 0)
                rep.q0_homology_degrees.push_back(d);
        }
        if (known(d + 3)) {
            const Matrix q_in = m.word_matrix({1, 2}, d - 3) + m.word_matrix({2, 1}, d - 3);
            const Matrix q_out = m.word_matrix({1, 2}, d) + m.word_matrix({2, 1}, d);
            if (homology_dim(q_in, q_out, m.dim(d)) > 0)
                rep.q1_homology_degrees.push_back(d);
        }
    }

    // kernel of the cover F -> m, degree by degree
    const int top = truncated ? c : (gdeg.empty() ? m.hi() : std::max(m.hi(), gdeg.back() + alg.top_degree()));
    for (int t = m.lo(); t <= top; ++t) {
        std::vector<BitVector> cols;
        for (std::size_t k = 0; k < gens.size(); ++k)
            for (auto a : alg.in_degree(t - gens[k].first))
                cols.push_back(m.act(alg.word(a), gens[k].first, gens[k].second));
        const Matrix cover = Matrix::from_columns(m.dim(t), cols);
        if (f2::rank(cover) < cols.size()) {
            rep.outcome = Freeness::NotFree;
            rep.reason = fmt::format("the minimal free cover has a kernel in degree {}", t);
            return rep;
        }
    }
    if (!rep.q0_homology_degrees.empty() || !rep.q1_homology_degrees.empty()) {
        rep.outcome = Freeness::NotFree;
        rep.reason = "nonzero Margolis homology";
        return rep;
    }
    if (!truncated) {
        rep.outcome = Freeness::Free;
        rep.reason = "isomorphic to its minimal free cover";
        return rep;
    }
    for (int g : gdeg)
        if (g + 1 > c) {
            rep.outcome = Freeness::Unknown;
            rep.reason = fmt::format("generator in degree {} sits at the ceiling {}", g, c);
            return rep;
        }
    rep.outcome = Freeness::Free;
    rep.reason = fmt::format("agrees with its free cover through the ceiling {}", c);
    return rep;
}

namespace {

nlohmann::json matrix_to_json(const Matrix& m)
{
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        rows.push_back(m.row(r).to_string());
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols)
{
    Matrix m(rows, cols);
    if (j.size() != rows)
        throw InputError("module json: matrix has the wrong number of rows");
    for (std::size_t r = 0; r < rows; ++r) {
        const auto s = j[r].get<std::string>();
        if (s.size() != cols)
            throw InputError("module json: matrix row has the wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            if (s[c] == '1')
                m.set(r, c);
            else if (s[c] != '0')
                throw InputError("module json: matrix entries must be 0 or 1");
    }
    return m;
}

} // namespace

nlohmann::json to_json(const A1Module& m)
{
    nlohmann::json dims = nlohmann::json::object(), s1 = nlohmann::json::object(), s2 = nlohmann::json::object(),
                   labels = nlohmann::json::object();
    for (int d = m.lo(); d <= m.hi(); ++d) {
        const auto key = std::to_string(d);
        dims[key] = m.dim(d);
        s1[key] = matrix_to_json(m.sq1(d));
        s2[key] = matrix_to_json(m.sq2(d));
        if (m.dim(d) > 0 && m.labels(d).size() == m.dim(d))
            labels[key] = m.labels(d);
    }
    nlohmann::json out = {{"dims", dims}, {"sq1", s1}, {"sq2", s2}, {"labels", labels}};
    if (m.ceiling())
        out["ceiling"] = *m.ceiling();
    return out;
}

A1Module module_from_json(const nlohmann::json& j)
{
    try {
        std::map<int, std::size_t> dim_map;
        for (const auto& [k, v] : j.at("dims").items())
            dim_map[std::stoi(k)] = v.get<std::size_t>();
        std::optional<int> ceiling;
        if (j.contains("ceiling"))
            ceiling = j.at("ceiling").get<int>();
        if (dim_map.empty())
            return A1Module(0, {}, ceiling);
        const int lo = dim_map.begin()->first, hi = dim_map.rbegin()->first;
        std::vector<std::size_t> dims;
        for (int d = lo; d <= hi; ++d)
            dims.push_back(dim_map.count(d) ? dim_map[d] : 0);
        A1Module m(lo, dims, ceiling);
        for (int d = lo; d <= hi; ++d) {
            const auto key = std::to_string(d);
            if (j.at("sq1").contains(key))
                m.set_sq(1, d, matrix_from_json(j["sq1"][key], m.dim(d + 1), m.dim(d)));
            if (j.at("sq2").contains(key))
                m.set_sq(2, d, matrix_from_json(j["sq2"][key], m.dim(d + 2), m.dim(d)));
            if (j.contains("labels") && j["labels"].contains(key))
                m.set_labels(d, j["labels"][key].get<std::vector<std::string>>());
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(fmt::format("module json: {}", e.what()));
    }
}

} // namespace bord::a1
