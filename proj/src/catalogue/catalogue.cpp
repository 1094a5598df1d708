#include "bord/catalogue/catalogue.hpp"

#include "bord/errors.hpp"
#include "bord/ring/json.hpp"
#include "bord/steenrod/wu.hpp"

#include <fmt/format.h>

#include <charconv>
#include <map>
#include <mutex>

namespace bord::catalogue {

namespace detail {
const std::map<std::string, std::string_view, std::less<>>& embedded_files();
}

using nlohmann::json;

const json& data(std::string_view file)
{
    static std::mutex mutex;
    static std::map<std::string, json, std::less<>> parsed;
    std::lock_guard lock(mutex);
    if (auto it = parsed.find(file); it != parsed.end())
        return it->second;
    const auto& files = detail::embedded_files();
    auto src = files.find(file);
    if (src == files.end())
        throw InputError(fmt::format("no data file '{}'", file));
    return parsed.emplace(std::string(file), json::parse(src->second)).first->second;
}

namespace {

std::optional<int> bso_rank(std::string_view name)
{
    if (name.substr(0, 3) != "BSO" || name.size() < 4)
        return std::nullopt;
    int n = 0;
    auto tail = name.substr(3);
    auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), n);
    if (ec != std::errc() || ptr != tail.data() + tail.size())
        return std::nullopt;
    return n;
}

steenrod::SteenrodSpec manifold_ring(std::string_view name, const json& m)
{
    json r = {{"name", name},
              {"generators", m.at("generators")},
              {"relations", m.value("relations", json::array())},
              {"degree_bound", m.at("dimension")}};
    const auto ring = ring::ring_from_json(r);
    return steenrod::spec_from_json(ring, m.value("steenrod", json::object()));
}

} // namespace

steenrod::SteenrodSpec preset_ring(std::string_view name)
{
    const json& rings = data("rings");
    if (auto it = rings.at("rings").find(name); it != rings.at("rings").end()) {
        json r = *it;
        r["name"] = name;
        const auto ring = ring::ring_from_json(r);
        return steenrod::spec_from_json(ring, it->at("steenrod"));
    }
    if (auto it = rings.at("wu_type").find(name); it != rings.at("wu_type").end())
        return steenrod::wu_type_spec(std::string(name), it->at("n"), it->at("kept").get<std::vector<int>>(),
                                      it->at("scale"), it->at("prefix"), it->at("degree_bound"));
    if (auto n = bso_rank(name)) {
        if (*n < 2 || *n > 16)
            throw InputError(fmt::format("{}: rank must be 2..16", name));
        std::vector<int> kept;
        for (int k = 2; k <= *n; ++k)
            kept.push_back(k);
        return steenrod::wu_type_spec(std::string(name), *n, kept, 1, "w", 11);
    }
    const json& manifolds = data("manifolds").at("manifolds");
    if (auto it = manifolds.find(name); it != manifolds.end())
        return manifold_ring(name, *it);
    throw InputError(fmt::format("unknown ring '{}'", name));
}

std::vector<std::string> preset_names()
{
    std::vector<std::string> out;
    const json& rings = data("rings");
    for (const auto& [k, v] : rings.at("rings").items())
        out.push_back(k);
    for (const auto& [k, v] : rings.at("wu_type").items())
        out.push_back(k);
    for (int n = 2; n <= 16; ++n)
        out.push_back(fmt::format("BSO{}", n));
    for (const auto& [k, v] : data("manifolds").at("manifolds").items())
        out.push_back(k);
    return out;
}

const std::vector<std::string>& group_names()
{
    static const std::vector<std::string> names = {"Sp4", "SU8", "Spin16"};
    return names;
}

std::string canonical_group(std::string_view name)
{
    std::string s;
    for (char c : name)
        if (c != '(' && c != ')')
            s += c;
    for (const auto& g : group_names())
        if (s == g)
            return g;
    throw InputError(fmt::format("unknown group '{}' (expected Sp4, SU8 or Spin16)", name));
}

GroupSetup group_setup(std::string_view group)
{
    const std::string g = canonical_group(group);
    const json& figs = data("figures");
    const json& entry = figs.at("groups").at(g);
    GroupSetup out;
    out.group = g;
    out.ring = entry.at("ring").get<std::string>();
    out.twist = entry.at("twist").get<std::string>();
    out.ceiling = figs.at("ceiling").get<int>();
    for (const auto& p : entry.at("parts"))
        out.parts.push_back(a1::figure_spec_from_json(p));
    return out;
}

} // namespace bord::catalogue
