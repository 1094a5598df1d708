#include "bord/charnum/integral.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cstdlib>

namespace bord::charnum {

long long IntegralPolynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void IntegralPolynomial::add(const Monomial& m, long long c)
{
    if (c == 0)
        return;
    if (m.size() != n_)
        throw InputError("integral polynomial: monomial over the wrong generators");
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh && (it->second += c) == 0)
        terms_.erase(it);
}

IntegralPolynomial& IntegralPolynomial::operator+=(const IntegralPolynomial& o)
{
    if (o.n_ != n_)
        throw InputError("integral polynomial: generator counts differ");
    for (const auto& [m, c] : o.terms_)
        add(m, c);
    return *this;
}

IntegralPolynomial IntegralPolynomial::operator-() const { return scaled(-1); }

IntegralPolynomial IntegralPolynomial::scaled(long long c) const
{
    IntegralPolynomial out(n_);
    for (const auto& [m, k] : terms_)
        out.add(m, k * c);
    return out;
}

ring::Polynomial IntegralPolynomial::mod2() const
{
    ring::Polynomial out(n_);
    for (const auto& [m, c] : terms_)
        if (c % 2 != 0)
            out.toggle(m);
    return out;
}

IntegralRing::IntegralRing(std::vector<ring::Generator> generators, const std::map<std::string, int>& truncation,
                           int dimension)
    : generators_(std::move(generators)), truncation_(truncation), dimension_(dimension)
{
    for (const auto& [name, k] : truncation_) {
        bool found = false;
        for (const auto& g : generators_)
            found = found || g.name == name;
        if (!found)
            throw InputError(fmt::format("integral ring: truncation names unknown generator '{}'", name));
        if (k < 1)
            throw InputError(fmt::format("integral ring: truncation of {} must be positive", name));
    }
    for (const auto& g : generators_) {
        if (g.degree <= 0)
            throw InputError(fmt::format("integral ring: generator {} needs positive degree", g.name));
        auto it = truncation_.find(g.name);
        int k = it == truncation_.end() ? 0 : it->second;
        if (g.degree % 2 != 0)
            k = k == 0 ? 2 : std::min(k, 2);
        limit_.push_back(k);
    }
}

int IntegralRing::degree(const Monomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += m[i] * generators_[i].degree;
    return d;
}

bool IntegralRing::vanishes(const Monomial& m) const
{
    if (degree(m) > dimension_)
        return true;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (limit_[i] != 0 && m[i] >= limit_[i])
            return true;
    return false;
}

IntegralPolynomial IntegralRing::normal_form(const IntegralPolynomial& p) const
{
    IntegralPolynomial out(num_generators());
    for (const auto& [m, c] : p.terms())
        if (!vanishes(m))
            out.add(m, c);
    return out;
}

IntegralPolynomial IntegralRing::multiply(const IntegralPolynomial& a, const IntegralPolynomial& b) const
{
    IntegralPolynomial out(num_generators());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            const Monomial m = ma * mb;
            if (vanishes(m))
                continue;
            // moving each odd factor of b left past the odd factors of a that come after it
            int swaps = 0;
            for (std::size_t j = 0; j < mb.size(); ++j) {
                if (mb[j] == 0 || generators_[j].degree % 2 == 0)
                    continue;
                for (std::size_t i = j + 1; i < ma.size(); ++i)
                    if (generators_[i].degree % 2 != 0)
                        swaps += ma[i] * mb[j];
            }
            out.add(m, (swaps % 2 ? -1 : 1) * ca * cb);
        }
    return out;
}

IntegralPolynomial IntegralRing::one() const { return monomial(Monomial(num_generators())); }

IntegralPolynomial IntegralRing::monomial(const Monomial& m, long long c) const
{
    IntegralPolynomial p(num_generators());
    if (!vanishes(m))
        p.add(m, c);
    return p;
}

std::vector<Monomial> IntegralRing::basis(int d) const
{
    std::vector<Monomial> out;
    if (d < 0 || d > dimension_)
        return out;
    Monomial m(num_generators());
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == m.size()) {
            if (left == 0 && !vanishes(m))
                out.push_back(m);
            return;
        }
        const int deg = generators_[i].degree;
        for (int e = 0; e * deg <= left; ++e) {
            if (limit_[i] != 0 && e >= limit_[i])
                break;
            m[i] = e;
            self(self, i + 1, left - e * deg);
        }
        m[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

class Parser {
public:
    Parser(const IntegralRing& ring, std::string_view text) : ring_(ring), text_(text) {}

    IntegralPolynomial run()
    {
        IntegralPolynomial out(ring_.num_generators());
        skip();
        if (done())
            fail("empty polynomial");
        bool first = true;
        while (!done()) {
            long long sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            long long coeff = 1;
            bool have_number = false;
            if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff = number();
                have_number = true;
                skip();
            }
            IntegralPolynomial term(ring_.num_generators());
            term.add(Monomial(ring_.num_generators()), coeff);
            bool have_factor = false;
            while (!done() && peek() != '+' && peek() != '-') {
                Monomial g(ring_.num_generators());
                const std::size_t index = generator();
                g[index] = 1;
                skip();
                if (!done() && peek() == '^') {
                    ++pos_;
                    skip();
                    g[index] = static_cast<int>(number());
                    skip();
                }
                // multiplying in the ring gives odd generators their signs
                term = ring_.multiply(term, ring_.monomial(g));
                have_factor = true;
            }
            if (!have_factor && !have_number)
                fail("expected a term");
            out += term.scaled(sign);
        }
        return out;
    }

private:
    bool done() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip()
    {
        while (!done() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }
    [[noreturn]] void fail(std::string_view what) const
    {
        throw InputError(fmt::format("cannot parse '{}' at offset {}: {}", text_, pos_, what));
    }
    long long number()
    {
        const std::size_t start = pos_;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }
    std::size_t generator()
    {
        const std::size_t start = pos_;
        const unsigned char c = static_cast<unsigned char>(peek());
        if (c < 0x80) {
            if (!std::isalpha(c))
                fail("expected a generator name");
            ++pos_;
        } else {
            ++pos_;
            while (!done() && (static_cast<unsigned char>(peek()) & 0xC0) == 0x80)
                ++pos_;
        }
        while (!done() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        const std::string_view name = text_.substr(start, pos_ - start);
        const auto& gens = ring_.generators();
        for (std::size_t i = 0; i < gens.size(); ++i)
            if (gens[i].name == name)
                return i;
        pos_ = start;
        fail(fmt::format("unknown generator '{}'", name));
    }

    const IntegralRing& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

IntegralPolynomial IntegralRing::parse(std::string_view text) const { return Parser(*this, text).run(); }

std::string IntegralRing::format(const IntegralPolynomial& p) const
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            mono += generators_[i].name;
            if (m[i] > 1)
                mono += fmt::format("^{}", m[i]);
        }
        const long long a = std::llabs(c);
        std::string term = mono.empty() ? std::to_string(a) : (a == 1 ? mono : std::to_string(a) + mono);
        if (out.empty())
            out = (c < 0 ? "-" : "") + term;
        else
            out += (c < 0 ? " - " : " + ") + term;
    }
    return out;
}

} // namespace bord::charnum
