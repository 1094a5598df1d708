#include "bord/chart/chart.hpp"

#include "bord/catalogue/catalogue.hpp"
#include "bord/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <iterator>
#include <map>

namespace bord::chart {

using nlohmann::json;

AdamsChart normalized(AdamsChart c)
{
    std::sort(c.dots.begin(), c.dots.end());
    std::sort(c.edges.begin(), c.edges.end());
    return c;
}

AdamsChart expected_chart(std::string_view group)
{
    const std::string g = catalogue::canonical_group(group);
    return normalized(chart_from_json(catalogue::data("charts").at("charts").at(g)));
}

std::string to_string(const StemGroup& g, bool two_complete)
{
    std::vector<std::string> parts;
    const char* z = two_complete ? "Z_2^" : "Z";
    if (g.z == 1)
        parts.emplace_back(z);
    else if (g.z > 1)
        parts.push_back(two_complete ? fmt::format("({})^{}", z, g.z) : fmt::format("{}^{}", z, g.z));
    if (g.z2 == 1)
        parts.emplace_back("Z2");
    else if (g.z2 > 1)
        parts.push_back(fmt::format("Z2^{}", g.z2));
    if (parts.empty())
        return "0";
    return fmt::format("{}", fmt::join(parts, " + "));
}

GroupDescriptor read_off_groups(const AdamsChart& c, bool no_odd_torsion)
{
    GroupDescriptor out;
    out.two_complete = !no_odd_torsion;
    out.stems.assign(static_cast<std::size_t>(std::max(c.stem_max + 1, 0)), {});
    // dots[stem][s] and h0 edges leaving (stem, s)
    std::map<std::pair<int, int>, int> dots, up;
    for (const auto& d : c.dots)
        ++dots[{d.stem, d.s}];
    for (const auto& e : c.edges)
        if (e.type == "h0")
            ++up[e.from];
    for (int stem = 0; stem <= c.stem_max; ++stem) {
        auto n = [&](int s) {
            auto it = dots.find({stem, s});
            return it == dots.end() ? 0 : it->second;
        };
        auto e = [&](int s) {
            auto it = up.find({stem, s});
            return it == up.end() ? 0 : it->second;
        };
        // towers through filtration s, from the top down
        int towers = n(c.s_max);
        int other = 0;
        for (int s = c.s_max - 1; s >= 0; --s) {
            if (e(s) > towers)
                throw InvariantError(fmt::format("ambiguous extension in stem {}: a finite h0 chain starts at "
                                                 "filtration {}",
                                                 stem, s));
            if (e(s) > n(s))
                throw InputError(fmt::format("stem {}: more h0 edges than dots at filtration {}", stem, s));
            other += n(s) - e(s);
            towers = e(s);
        }
        out.stems[static_cast<std::size_t>(stem)] = {n(c.s_max), other};
    }
    return out;
}

GroupDescriptor expected_groups(std::string_view group)
{
    const std::string g = catalogue::canonical_group(group);
    GroupDescriptor out;
    for (const auto& row : catalogue::data("groups").at("groups").at(g))
        out.stems.push_back({row.at("Z").get<int>(), row.at("Z2").get<int>()});
    return out;
}

namespace {

template <class T>
void multiset_difference(std::vector<T> a, std::vector<T> b, std::vector<T>& a_only, std::vector<T>& b_only)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(a_only));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(b_only));
}

AdamsChart strip(AdamsChart c)
{
    for (auto& d : c.dots) {
        d.color.clear();
        d.circled = false;
    }
    for (auto& e : c.edges)
        e.color.clear();
    return c;
}

} // namespace

ChartDiff diff(const AdamsChart& actual, const AdamsChart& expected, DiffMode mode)
{
    if (actual.s_max != expected.s_max || actual.stem_max != expected.stem_max)
        throw InputError(fmt::format("chart ranges differ: s<={}, stem<={} against s<={}, stem<={}", actual.s_max,
                                     actual.stem_max, expected.s_max, expected.stem_max));
    const AdamsChart a = mode == DiffMode::Colorblind ? strip(actual) : actual;
    const AdamsChart b = mode == DiffMode::Colorblind ? strip(expected) : expected;
    ChartDiff d;
    multiset_difference(a.dots, b.dots, d.extra_dots, d.missing_dots);
    multiset_difference(a.edges, b.edges, d.extra_edges, d.missing_edges);
    return d;
}

std::string to_string(const ChartDiff& d)
{
    if (d.empty())
        return "no differences\n";
    std::string out;
    auto dot = [](const Dot& x) {
        std::string s = fmt::format("({},{})", x.stem, x.s);
        if (!x.color.empty())
            s += " " + x.color;
        if (x.circled)
            s += " circled";
        return s;
    };
    auto edge = [](const Edge& x) {
        std::string s = fmt::format("{} ({},{})->({},{})", x.type, x.from.first, x.from.second, x.to.first, x.to.second);
        if (!x.color.empty())
            s += " " + x.color;
        return s;
    };
    for (const auto& x : d.extra_dots)
        out += "+ dot " + dot(x) + "\n";
    for (const auto& x : d.missing_dots)
        out += "- dot " + dot(x) + "\n";
    for (const auto& x : d.extra_edges)
        out += "+ edge " + edge(x) + "\n";
    for (const auto& x : d.missing_edges)
        out += "- edge " + edge(x) + "\n";
    return out;
}

namespace {

std::string render_text(const AdamsChart& c)
{
    std::map<std::pair<int, int>, std::pair<int, bool>> cells;
    int top = -1;
    for (const auto& d : c.dots) {
        auto& cell = cells[{d.stem, d.s}];
        ++cell.first;
        cell.second = cell.second || d.circled;
        top = std::max(top, d.s);
    }
    std::string out = "  s |";
    for (int stem = 0; stem <= c.stem_max; ++stem)
        out += fmt::format("{:>4}", stem);
    out += "\n";
    for (int s = top; s >= 0; --s) {
        out += fmt::format("{:>3} |", s);
        for (int stem = 0; stem <= c.stem_max; ++stem) {
            auto it = cells.find({stem, s});
            if (it == cells.end())
                out += "   .";
            else
                out += fmt::format("{:>4}", fmt::format("{}{}", it->second.first, it->second.second ? "o" : ""));
        }
        out += "\n";
    }
    return out;
}

std::string svg_color(const std::string& name)
{
    static const std::map<std::string, std::string> colors = {{"BrickRed", "#b6321c"},  {"Brown", "#792500"},
                                                              {"Fuchsia", "#c0208f"},   {"MidnightBlue", "#006795"},
                                                              {"OliveGreen", "#3c8031"}};
    auto it = colors.find(name);
    return it == colors.end() ? "#000000" : it->second;
}

std::string render_svg(const AdamsChart& c)
{
    constexpr int cell = 48, margin = 40, r = 4, spread = 10;
    const int width = 2 * margin + (c.stem_max + 1) * cell;
    const int height = 2 * margin + (c.s_max + 1) * cell;

    // dots of one bidegree sit side by side
    std::map<std::pair<int, int>, std::vector<const Dot*>> at;
    for (const auto& d : c.dots)
        at[{d.stem, d.s}].push_back(&d);
    auto position = [&](std::pair<int, int> bideg, std::size_t slot) {
        const std::size_t n = std::max<std::size_t>(at[bideg].size(), 1);
        const double x = margin + bideg.first * cell + cell / 2.0 + (slot - (n - 1) / 2.0) * spread;
        const double y = height - margin - bideg.second * cell - cell / 2.0;
        return std::pair{x, y};
    };
    auto slot_of = [&](std::pair<int, int> bideg, const std::string& color, std::size_t nth) {
        const auto& v = at[bideg];
        std::size_t seen = 0;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (v[i]->color == color && seen++ == nth)
                return i;
        return v.empty() ? 0 : nth % v.size();
    };

    std::string out = fmt::format("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                                  "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{}\" "
                                  "height=\"{}\" viewBox=\"0 0 {} {}\">\n",
                                  width, height, width, height);
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
    for (int stem = 0; stem <= c.stem_max + 1; ++stem) {
        const int x = margin + stem * cell;
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\"/>\n", x, margin, x,
                           height - margin);
        if (stem <= c.stem_max)
            out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
                               x + cell / 2, height - margin + 16, stem);
    }
    for (int s = 0; s <= c.s_max + 1; ++s) {
        const int y = height - margin - s * cell;
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\"/>\n", margin, y,
                           width - margin, y);
        if (s <= c.s_max)
            out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"end\">{}</text>\n",
                               margin - 6, y - cell / 2 + 4, s);
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">t - s</text>\n", width / 2,
                       height - 8);

    std::map<std::tuple<std::pair<int, int>, std::pair<int, int>, std::string, std::string>, std::size_t> used;
    for (const auto& e : c.edges) {
        const std::size_t nth = used[{e.from, e.to, e.type, e.color}]++;
        const auto [x1, y1] = position(e.from, slot_of(e.from, e.color, nth));
        const auto [x2, y2] = position(e.to, slot_of(e.to, e.color, nth));
        out += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"{}\" "
                           "stroke-width=\"1.5\"/>\n",
                           x1, y1, x2, y2, svg_color(e.color));
    }
    for (const auto& [bideg, v] : at)
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto [x, y] = position(bideg, i);
            const std::string col = svg_color(v[i]->color);
            if (v[i]->circled)
                out += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"{}\" fill=\"white\" stroke=\"{}\" "
                                   "stroke-width=\"2\"/>\n",
                                   x, y, r + 2, col);
            else
                out += fmt::format("<circle cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"{}\" fill=\"{}\"/>\n", x, y, r, col);
        }
    out += "</svg>\n";
    return out;
}

} // namespace

std::string render(const AdamsChart& c, std::string_view format)
{
    if (format == "text")
        return render_text(c);
    if (format == "svg")
        return render_svg(c);
    if (format == "json")
        return to_json(c).dump(2) + "\n";
    throw InputError(fmt::format("unknown chart format '{}' (text, svg or json)", format));
}

json to_json(const AdamsChart& c)
{
    json dots = json::array();
    for (const auto& d : c.dots)
        dots.push_back({{"stem", d.stem}, {"s", d.s}, {"color", d.color}, {"circled", d.circled}});
    json edges = json::array();
    for (const auto& e : c.edges)
        edges.push_back({{"type", e.type},
                         {"from", {e.from.first, e.from.second}},
                         {"to", {e.to.first, e.to.second}},
                         {"color", e.color}});
    return {{"s_max", c.s_max}, {"stem_max", c.stem_max}, {"dots", dots}, {"edges", edges}};
}

AdamsChart chart_from_json(const json& j)
{
    try {
        AdamsChart c;
        c.s_max = j.value("s_max", 6);
        c.stem_max = j.value("stem_max", 7);
        for (const auto& d : j.at("dots"))
            c.dots.push_back({d.at("stem").get<int>(), d.at("s").get<int>(), d.value("color", std::string()),
                              d.value("circled", false)});
        for (const auto& e : j.value("edges", json::array())) {
            const std::string type = e.at("type").get<std::string>();
            if (type != "h0" && type != "h1")
                throw InputError(fmt::format("chart json: unknown edge type '{}'", type));
            c.edges.push_back({type,
                               {e.at("from").at(0).get<int>(), e.at("from").at(1).get<int>()},
                               {e.at("to").at(0).get<int>(), e.at("to").at(1).get<int>()},
                               e.value("color", std::string())});
        }
        return c;
    } catch (const json::exception& e) {
        throw InputError(fmt::format("chart json: {}", e.what()));
    }
}

AdamsChart parse(std::string_view json_text)
{
    try {
        return chart_from_json(json::parse(json_text));
    } catch (const json::parse_error& e) {
        throw InputError(fmt::format("chart json: {}", e.what()));
    }
}

json to_json(const GroupDescriptor& g)
{
    json stems = json::array();
    for (std::size_t k = 0; k < g.stems.size(); ++k)
        stems.push_back({{"stem", k},
                         {"Z", g.stems[k].z},
                         {"Z2", g.stems[k].z2},
                         {"group", to_string(g.stems[k], g.two_complete)}});
    return {{"two_complete", g.two_complete}, {"stems", stems}};
}

} // namespace bord::chart
