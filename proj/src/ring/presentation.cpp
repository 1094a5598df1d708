#include "bord/ring/presentation.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

#include <cctype>
#include <functional>

namespace bord::ring {

RingPresentation::RingPresentation(std::string name, std::vector<Generator> generators,
                                   std::vector<Polynomial> relations, int degree_bound)
    : name_(std::move(name)), generators_(std::move(generators)), relations_(std::move(relations)),
      degree_bound_(degree_bound)
{
    for (const auto& g : generators_) {
        if (g.degree < 1)
            throw InputError(fmt::format("ring {}: generator {} must have degree >= 1", name_, g.name));
        degrees_.push_back(g.degree);
    }
    for (std::size_t i = 0; i < generators_.size(); ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i].name == generators_[j].name)
                throw InputError(fmt::format("ring {}: duplicate generator {}", name_, generators_[i].name));
    for (const auto& r : relations_) {
        if (r.num_generators() != generators_.size())
            throw InputError(fmt::format("ring {}: relation over the wrong generator set", name_));
        const auto d = degree(r);
        if (!d)
            throw InputError(fmt::format("ring {}: zero relation", name_));
        if (*d > degree_bound_)
            throw InputError(fmt::format("ring {}: relation of degree {} beyond bound {}", name_, *d, degree_bound_));
    }
}

std::optional<std::size_t> RingPresentation::generator_index(std::string_view name) const
{
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name)
            return i;
    return std::nullopt;
}

Polynomial RingPresentation::generator(std::string_view name) const
{
    const auto i = generator_index(name);
    if (!i)
        throw InputError(fmt::format("ring {}: unknown generator '{}'", name_, name));
    return Polynomial::generator(num_generators(), *i);
}

std::optional<int> RingPresentation::degree(const Polynomial& p) const
{
    if (p.num_generators() != num_generators())
        throw InputError(fmt::format("ring {}: polynomial over the wrong generator set", name_));
    std::optional<int> d;
    for (const auto& m : p.terms()) {
        const int dm = degree(m);
        if (d && *d != dm)
            throw InputError(fmt::format("ring {}: inhomogeneous polynomial {}", name_, format(p)));
        d = dm;
    }
    return d;
}

std::vector<Monomial> RingPresentation::monomials_of_degree(int d) const
{
    std::vector<Monomial> out;
    if (d < 0)
        return out;
    Monomial current(num_generators());
    // Generators are filled from the first one so the output comes out lexicographically
    // descending; reversed at the end.
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == num_generators()) {
            if (remaining == 0)
                out.push_back(current);
            return;
        }
        for (int e = remaining / degrees_[i]; e >= 0; --e) {
            current[i] = e;
            rec(i + 1, remaining - e * degrees_[i]);
        }
        current[i] = 0;
    };
    rec(0, d);
    std::reverse(out.begin(), out.end());
    return out;
}

RingPresentation::DegreeData RingPresentation::build(int d) const
{
    DegreeData dd;
    dd.monomials = monomials_of_degree(d);
    for (std::size_t i = 0; i < dd.monomials.size(); ++i)
        dd.index.emplace(dd.monomials[i], i);
    dd.relation_span = f2::Subspace(dd.monomials.size());
    for (const auto& r : relations_) {
        const int e = *degree(r);
        if (e > d)
            continue;
        for (const auto& m : monomials_of_degree(d - e)) {
            const Polynomial product = r * Polynomial(m);
            f2::BitVector v(dd.monomials.size());
            for (const auto& t : product.terms())
                v.flip(dd.index.at(t));
            dd.relation_span.insert(std::move(v));
        }
    }
    std::vector<bool> pivot(dd.monomials.size(), false);
    for (auto p : dd.relation_span.pivots())
        pivot[p] = true;
    dd.basis.degree = d;
    for (std::size_t i = 0; i < dd.monomials.size(); ++i)
        if (!pivot[i]) {
            dd.basis_columns.push_back(i);
            dd.basis.monomials.push_back(dd.monomials[i]);
        }
    return dd;
}

const RingPresentation::DegreeData& RingPresentation::data(int d) const
{
    if (d > degree_bound_)
        throw RangeError(fmt::format("ring {}: degree {} is beyond the asserted bound {}", name_, d, degree_bound_));
    if (d < 0)
        throw InputError(fmt::format("ring {}: negative degree {}", name_, d));
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->by_degree.find(d);
    if (it == cache_->by_degree.end())
        it = cache_->by_degree.emplace(d, std::make_shared<const DegreeData>(build(d))).first;
    return *it->second;
}

const DegreeBasis& RingPresentation::monomial_basis(int d) const { return data(d).basis; }

f2::BitVector RingPresentation::monomial_vector(const Polynomial& p, const DegreeData& dd) const
{
    f2::BitVector v(dd.monomials.size());
    for (const auto& t : p.terms())
        v.flip(dd.index.at(t));
    return v;
}

f2::BitVector RingPresentation::reduce(const Polynomial& p) const
{
    const auto d = degree(p);
    if (!d)
        return f2::BitVector();
    return reduce(p, *d);
}

f2::BitVector RingPresentation::reduce(const Polynomial& p, int d) const
{
    const auto pd = degree(p);
    if (pd && *pd != d)
        throw InputError(fmt::format("ring {}: {} is not of degree {}", name_, format(p), d));
    const DegreeData& dd = data(d);
    const f2::BitVector residue = dd.relation_span.reduce(monomial_vector(p, dd));
    f2::BitVector coords(dd.basis_columns.size());
    for (std::size_t k = 0; k < dd.basis_columns.size(); ++k)
        if (residue.get(dd.basis_columns[k]))
            coords.set(k);
    return coords;
}

Polynomial RingPresentation::from_coordinates(int d, const f2::BitVector& coords) const
{
    const DegreeBasis& b = monomial_basis(d);
    if (coords.size() != b.dim())
        throw InputError(fmt::format("ring {}: coordinate vector has wrong length for degree {}", name_, d));
    Polynomial p = zero();
    for (std::size_t k = 0; k < b.dim(); ++k)
        if (coords.get(k))
            p.toggle(b.monomials[k]);
    return p;
}

Polynomial RingPresentation::normal_form(const Polynomial& p) const
{
    const auto d = degree(p);
    if (!d)
        return zero();
    return from_coordinates(*d, reduce(p, *d));
}

Polynomial RingPresentation::multiply(const Polynomial& a, const Polynomial& b) const
{
    const auto da = degree(a);
    const auto db = degree(b);
    if (da && db && *da + *db > degree_bound_)
        throw RangeError(fmt::format("ring {}: product degree {} is beyond the asserted bound {}", name_,
                                     *da + *db, degree_bound_));
    return normal_form(a * b);
}

namespace {

class Parser {
public:
    Parser(const RingPresentation& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial run()
    {
        Polynomial p = sum();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character");
        return p;
    }

private:
    Polynomial sum()
    {
        Polynomial acc = product();
        while (peek() == '+') {
            ++pos_;
            acc += product();
        }
        return acc;
    }

    Polynomial product()
    {
        Polynomial acc = factor();
        for (;;) {
            const char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '(' || is_letter(c) || std::isdigit(static_cast<unsigned char>(c))) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    Polynomial factor()
    {
        Polynomial base = atom();
        if (peek() == '^') {
            ++pos_;
            base = base.pow(integer());
        }
        return base;
    }

    Polynomial atom()
    {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Polynomial inner = sum();
            if (peek() != ')')
                fail("missing ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const int n = integer();
            return (n % 2) ? ring_.one() : ring_.zero();
        }
        if (is_letter(c)) {
            std::size_t end = pos_ + 1;
            // a non-ASCII letter spans its UTF-8 continuation bytes
            while (end < text_.size() && (static_cast<unsigned char>(text_[end]) & 0xC0) == 0x80)
                ++end;
            while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
                ++end;
            const std::string_view name = text_.substr(pos_, end - pos_);
            pos_ = end;
            return ring_.generator(name);
        }
        fail("expected a term");
    }

    int integer()
    {
        skip_space();
        std::size_t end = pos_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])))
            ++end;
        if (end == pos_)
            fail("expected an integer");
        const int n = std::stoi(std::string(text_.substr(pos_, end - pos_)));
        pos_ = end;
        return n;
    }

    static bool is_letter(char c)
    {
        return std::isalpha(static_cast<unsigned char>(c)) || static_cast<unsigned char>(c) >= 0xC0;
    }

    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    [[noreturn]] void fail(const char* what)
    {
        throw InputError(fmt::format("ring {}: cannot parse '{}' at offset {}: {}", ring_.name(), text_, pos_, what));
    }

    const RingPresentation& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial RingPresentation::parse(std::string_view text) const { return Parser(*this, text).run(); }

std::string RingPresentation::format(const Monomial& m) const
{
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        s += generators_[i].name;
        if (m[i] > 1)
            s += fmt::format("^{}", m[i]);
    }
    return s.empty() ? "1" : s;
}

std::string RingPresentation::format(const Polynomial& p) const
{
    if (p.is_zero())
        return "0";
    std::string s;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!s.empty())
            s += " + ";
        s += format(*it);
    }
    return s;
}

} // namespace bord::ring
