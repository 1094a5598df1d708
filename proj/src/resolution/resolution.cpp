#include "bord/resolution/resolution.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <limits>

namespace bord::resolution {

using a1::A1Algebra;
using steenrod::CheckReport;

int reliable_stem_max(const A1Module& m)
{
    if (!m.truncated())
        return std::numeric_limits<int>::max();
    return *m.ceiling() - 1;
}

MinimalResolution::MinimalResolution(A1Module m, Window window) : module_(std::move(m)), window_(window)
{
    if (window_.s_max < 0 || window_.stem_max < 0)
        throw InputError(fmt::format("window s<={}, stem<={} is empty", window_.s_max, window_.stem_max));
    if (module_.lo() < 0 && !module_.is_zero())
        throw InputError("resolution: modules must live in degrees >= 0");
    if (const int safe = reliable_stem_max(module_); window_.stem_max > safe)
        throw RangeError(fmt::format("stems up to {} requested, but a module truncated above degree {} only determines "
                                     "stems up to {}; maximal safe window is {},{}",
                                     window_.stem_max, *module_.ceiling(), safe, window_.s_max, safe));
    if (const auto v = module_.validate(); !v.ok())
        throw InputError(fmt::format("resolution: input is not an A(1)-module: {}", v.violations.front()));

    const auto& alg = A1Algebra::instance();
    const int t_max = window_.t_max();
    for (int s = 0; s <= window_.s_max; ++s) {
        const A1Module& tgt = target(static_cast<std::size_t>(s));
        Level level;
        const int start = std::max(tgt.lo(), 0);
        for (int t = start; t <= t_max; ++t) {
            const std::size_t n = tgt.dim(t);
            if (n == 0)
                continue;
            f2::Subspace kernel =
                s == 0 ? f2::Subspace::full(n) : f2::kernel_basis(differential(static_cast<std::size_t>(s - 1), t));
            f2::Subspace covered(n);
            for (std::size_t k = 0; k < level.degrees.size(); ++k)
                for (auto a : alg.in_degree(t - level.degrees[k]))
                    covered.insert(tgt.act(alg.word(a), level.degrees[k], level.images[k]));
            for (const auto& v : kernel.basis())
                if (covered.insert(v)) {
                    level.degrees.push_back(t);
                    level.images.push_back(v);
                }
        }
        free_.push_back(a1::free_module(level.degrees, t_max));
        levels_.push_back(std::move(level));
    }
}

Matrix MinimalResolution::differential(std::size_t s, int t) const
{
    const auto& alg = A1Algebra::instance();
    const Level& lv = levels_.at(s);
    const A1Module& tgt = target(s);
    const A1Module& src = free_.at(s);
    Matrix d(tgt.dim(t), src.dim(t));
    for (std::size_t k = 0; k < lv.degrees.size(); ++k)
        for (auto a : alg.in_degree(t - lv.degrees[k]))
            d.set_column(a1::free_index(lv.degrees, k, a), tgt.act(alg.word(a), lv.degrees[k], lv.images[k]));
    return d;
}

std::size_t MinimalResolution::ext_dim(int s, int t) const
{
    if (s < 0 || s >= static_cast<int>(levels_.size()))
        return 0;
    const auto& deg = levels_[s].degrees;
    return static_cast<std::size_t>(std::count(deg.begin(), deg.end(), t));
}

MinimalResolution minimal_resolution(const A1Module& m, Window window) { return MinimalResolution(m, window); }

CheckReport verify_exactness(const MinimalResolution& r)
{
    CheckReport rep{"d o d = 0", 0, {}};
    for (std::size_t s = 1; s < r.num_levels(); ++s)
        for (int t = 0; t <= r.t_max(); ++t) {
            ++rep.checked;
            if (!(r.differential(s - 1, t) * r.differential(s, t)).is_zero())
                rep.violations.push_back(fmt::format("d{} d{} != 0 in degree {}", s - 1, s, t));
        }
    return rep;
}

CheckReport verify_acyclicity(const MinimalResolution& r)
{
    CheckReport rep{"exactness", 0, {}};
    for (int t = 0; t <= r.t_max(); ++t) {
        ++rep.checked;
        if (f2::rank(r.differential(0, t)) != r.module().dim(t))
            rep.violations.push_back(fmt::format("augmentation not onto in degree {}", t));
        for (std::size_t s = 1; s < r.num_levels(); ++s) {
            ++rep.checked;
            const Matrix below = r.differential(s - 1, t);
            if (f2::rank(r.differential(s, t)) != below.cols() - f2::rank(below))
                rep.violations.push_back(fmt::format("homology at F{} in degree {}", s - 1, t));
        }
    }
    return rep;
}

CheckReport verify_minimality(const MinimalResolution& r)
{
    const auto& alg = A1Algebra::instance();
    CheckReport rep{"minimality", 0, {}};
    for (std::size_t s = 1; s < r.num_levels(); ++s) {
        const Level& lv = r.level(s);
        const Level& below = r.level(s - 1);
        for (std::size_t k = 0; k < lv.degrees.size(); ++k)
            for (std::size_t j = 0; j < below.degrees.size(); ++j) {
                if (below.degrees[j] != lv.degrees[k])
                    continue;
                ++rep.checked;
                if (lv.images[k].get(a1::free_index(below.degrees, j, alg.unit())))
                    rep.violations.push_back(
                        fmt::format("d{} of generator {} hits generator {} with a unit coefficient", s, k, j));
            }
    }
    return rep;
}

std::size_t ExtTable::dim(int s, int t) const
{
    auto it = dims.find({s, t});
    return it == dims.end() ? 0 : it->second;
}

std::map<std::tuple<std::string, int, int>, std::size_t> ExtTable::ranks() const
{
    std::map<std::tuple<std::string, int, int>, std::size_t> out;
    for (const auto& p : products)
        out[{p.type, p.s, p.t}] = p.rank;
    return out;
}

ExtTable ext_table(const MinimalResolution& r)
{
    const auto& alg = A1Algebra::instance();
    const Window w = r.window();
    ExtTable table;
    table.window = w;
    auto in_window = [&](int s, int t) { return s >= 0 && s <= w.s_max && t - s >= 0 && t - s <= w.stem_max; };

    for (std::size_t s = 0; s < r.num_levels(); ++s)
        for (int t : r.level(s).degrees)
            if (in_window(static_cast<int>(s), t))
                ++table.dims[{static_cast<int>(s), t}];

    for (std::size_t s = 0; s + 1 < r.num_levels(); ++s) {
        const Level& src = r.level(s);
        const Level& dst = r.level(s + 1);
        for (const auto& [type, op, shift] : {std::tuple{"h0", alg.sq1(), 1}, std::tuple{"h1", alg.sq2(), 2}}) {
            std::map<int, std::vector<std::size_t>> src_by_t, dst_by_t;
            for (std::size_t j = 0; j < src.degrees.size(); ++j)
                src_by_t[src.degrees[j]].push_back(j);
            for (std::size_t k = 0; k < dst.degrees.size(); ++k)
                dst_by_t[dst.degrees[k]].push_back(k);
            for (const auto& [t, cols] : src_by_t) {
                const int s_i = static_cast<int>(s);
                if (!in_window(s_i, t) || !in_window(s_i + 1, t + shift))
                    continue;
                auto it = dst_by_t.find(t + shift);
                if (it == dst_by_t.end())
                    continue;
                const auto& rows = it->second;
                Matrix m(rows.size(), cols.size());
                for (std::size_t r_i = 0; r_i < rows.size(); ++r_i)
                    for (std::size_t c_i = 0; c_i < cols.size(); ++c_i)
                        if (dst.images[rows[r_i]].get(a1::free_index(src.degrees, cols[c_i], op)))
                            m.set(r_i, c_i);
                const std::size_t rk = f2::rank(m);
                if (rk > 0)
                    table.products.push_back({type, s_i, t, rk, std::move(m)});
            }
        }
    }
    return table;
}

chart::AdamsChart to_chart(const ExtTable& table, const std::string& color, bool circled)
{
    chart::AdamsChart c;
    c.s_max = table.window.s_max;
    c.stem_max = table.window.stem_max;
    for (const auto& [st, n] : table.dims)
        for (std::size_t i = 0; i < n; ++i)
            c.dots.push_back({st.second - st.first, st.first, color, circled});
    for (const auto& p : table.products) {
        const int stem = p.t - p.s;
        const std::pair<int, int> to = p.type == "h0" ? std::pair{stem, p.s + 1} : std::pair{stem + 1, p.s + 1};
        for (std::size_t i = 0; i < p.rank; ++i)
            c.edges.push_back({p.type, {stem, p.s}, to, color});
    }
    std::sort(c.dots.begin(), c.dots.end());
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

chart::AdamsChart ext_of_sum(const std::vector<ColoredModule>& parts, Window window)
{
    chart::AdamsChart out;
    out.s_max = window.s_max;
    out.stem_max = window.stem_max;
    for (const auto& p : parts) {
        const bool circled = a1::is_free(p.module).outcome == a1::Freeness::Free;
        const chart::AdamsChart c = to_chart(ext_table(p.module, window), p.color, circled);
        if (circled)
            for (const auto& d : c.dots)
                if (d.s != 0)
                    throw InvariantError(fmt::format("{}: free part has a class in filtration {}", p.color, d.s));
        out.dots.insert(out.dots.end(), c.dots.begin(), c.dots.end());
        out.edges.insert(out.edges.end(), c.edges.begin(), c.edges.end());
    }
    std::sort(out.dots.begin(), out.dots.end());
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

nlohmann::json to_json(const ExtTable& t)
{
    nlohmann::json dims = nlohmann::json::array();
    for (const auto& [st, n] : t.dims)
        dims.push_back({{"s", st.first}, {"t", st.second}, {"dim", n}});
    nlohmann::json products = nlohmann::json::array();
    for (const auto& p : t.products)
        products.push_back({{"type", p.type}, {"s", p.s}, {"t", p.t}, {"rank", p.rank}});
    return {{"s_max", t.window.s_max}, {"stem_max", t.window.stem_max}, {"dims", dims}, {"products", products}};
}

} // namespace bord::resolution
