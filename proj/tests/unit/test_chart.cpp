#include "bord/chart/chart.hpp"
#include "bord/errors.hpp"

#include <doctest.h>

#include <algorithm>

using namespace bord;
using namespace bord::chart;

namespace {

AdamsChart tower(int stem, int from, std::string color = "BrickRed", int s_max = 6)
{
    AdamsChart c;
    c.s_max = s_max;
    for (int s = from; s <= s_max; ++s) {
        c.dots.push_back({stem, s, color, false});
        if (s < s_max)
            c.edges.push_back({"h0", {stem, s}, {stem, s + 1}, color});
    }
    return c;
}

AdamsChart merge(AdamsChart a, const AdamsChart& b)
{
    a.dots.insert(a.dots.end(), b.dots.begin(), b.dots.end());
    a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
    return a;
}

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1))
        ++n;
    return n;
}

} // namespace

TEST_CASE("towers are Z and lone dots Z2")
{
    AdamsChart c = merge(tower(0, 0), tower(4, 3));
    c = merge(c, tower(4, 4, "Brown"));
    c.dots.push_back({1, 1, "BrickRed", false});
    c.dots.push_back({1, 2, "Brown", false}); // two dots, no h0 between them
    c.edges.push_back({"h1", {0, 0}, {1, 1}, "BrickRed"});
    const auto g = read_off_groups(c);
    REQUIRE(g.stems.size() == 8);
    CHECK(g.stems[0] == StemGroup{1, 0});
    CHECK(g.stems[1] == StemGroup{0, 2});
    CHECK(g.stems[4] == StemGroup{2, 0});
    CHECK(g.stems[7] == StemGroup{});
    CHECK_FALSE(g.two_complete);
    CHECK(read_off_groups(c, false).two_complete);
}

TEST_CASE("a finite h0 chain is an ambiguous extension")
{
    AdamsChart c;
    c.dots = {{2, 1, "", false}, {2, 2, "", false}};
    c.edges = {{"h0", {2, 1}, {2, 2}, ""}};
    CHECK_THROWS_AS(read_off_groups(c), InvariantError);
}

TEST_CASE("group strings")
{
    CHECK(to_string(StemGroup{}) == "0");
    CHECK(to_string(StemGroup{1, 0}) == "Z");
    CHECK(to_string(StemGroup{2, 0}) == "Z^2");
    CHECK(to_string(StemGroup{0, 2}) == "Z2^2");
    CHECK(to_string(StemGroup{1, 1}) == "Z + Z2");
    CHECK(to_string(StemGroup{1, 0}, true) == "Z_2^");
    CHECK(to_string(StemGroup{2, 0}, true) == "(Z_2^)^2");
}

TEST_CASE("the shipped charts read off to the shipped table")
{
    for (const char* g : {"Sp4", "SU8", "Spin16"})
        CHECK(read_off_groups(expected_chart(g)) == expected_groups(g));
    const auto sp = expected_groups("Sp4");
    CHECK(sp.stems[4] == StemGroup{2, 0});
    CHECK(sp.stems[5] == StemGroup{0, 2});
    CHECK(sp.stems[6] == StemGroup{0, 2});
    const auto su = expected_groups("SU8");
    CHECK(su.stems[5] == StemGroup{0, 1});
    CHECK(su.stems[6] == StemGroup{1, 1});
    const auto ss = expected_groups("Spin16");
    CHECK(ss.stems[6] == StemGroup{0, 1});
    for (const char* g : {"Sp4", "SU8", "Spin16"}) {
        const auto t = expected_groups(g);
        CHECK(t.stems[0] == StemGroup{1, 0});
        for (int k : {1, 2, 3, 7})
            CHECK(t.stems[static_cast<std::size_t>(k)] == StemGroup{});
    }
}

TEST_CASE("diffs")
{
    const auto sp = expected_chart("Sp4");
    CHECK(diff(sp, sp).empty());
    const auto d = diff(sp, expected_chart("Spin16"));
    CHECK_FALSE(d.empty());
    CHECK(d.extra_dots.size() == 2); // 25 dots against 23
    CHECK(d.missing_dots.empty());

    auto recolored = sp;
    for (auto& dot : recolored.dots)
        dot.color = "Fuchsia";
    for (auto& e : recolored.edges)
        e.color = "Fuchsia";
    CHECK(diff(recolored, sp, DiffMode::Colorblind).empty());
    CHECK_FALSE(diff(recolored, sp, DiffMode::ColorAware).empty());

    auto narrower = sp;
    narrower.stem_max = 6;
    CHECK_THROWS_AS(diff(narrower, sp), InputError);
}

TEST_CASE("rendering")
{
    const auto sp = expected_chart("Sp4");
    const auto svg = render(sp, "svg");
    CHECK(count(svg, "<circle") == 25);
    CHECK(count(svg, "<line") >= sp.edges.size());
    CHECK(svg.find("#b6321c") != std::string::npos);

    const auto text = render(sp, "text");
    CHECK(text.rfind("  s |", 0) == 0);
    CHECK(count(text, "\n") == 8); // header and filtrations 6..0

    AdamsChart empty;
    CHECK(render(empty, "text") == "  s |   0   1   2   3   4   5   6   7\n");
    CHECK_THROWS_AS(render(sp, "png"), InputError);
}

TEST_CASE("json round trip")
{
    for (const char* g : {"Sp4", "SU8", "Spin16"}) {
        const auto c = expected_chart(g);
        CHECK(parse(render(c, "json")) == c);
        CHECK(chart_from_json(to_json(c)) == c);
    }
    CHECK_THROWS(parse("{\"dots\": 3}"));
}

TEST_CASE("normalization ignores order")
{
    auto c = expected_chart("SU8");
    auto shuffled = c;
    std::reverse(shuffled.dots.begin(), shuffled.dots.end());
    std::reverse(shuffled.edges.begin(), shuffled.edges.end());
    CHECK(normalized(shuffled) == normalized(c));
}
