#include "bord/ring/json.hpp"

#include "bord/errors.hpp"

#include <fmt/format.h>

namespace bord::ring {

using nlohmann::json;

json polynomial_to_json(const Polynomial& p)
{
    json out = json::array();
    for (const auto& m : p.terms())
        out.push_back(m.exponents);
    return out;
}

Polynomial polynomial_from_json(const RingPresentation& ring, const json& j)
{
    if (j.is_string())
        return ring.parse(j.get<std::string>());
    if (!j.is_array())
        throw InputError("polynomial must be a string or a list of exponent vectors");
    Polynomial p = ring.zero();
    for (const auto& e : j) {
        auto exps = e.get<std::vector<int>>();
        if (exps.size() != ring.num_generators())
            throw InputError(fmt::format("ring {}: exponent vector of length {}", ring.name(), exps.size()));
        if (std::any_of(exps.begin(), exps.end(), [](int x) { return x < 0; }))
            throw InputError("negative exponent");
        p.toggle(Monomial(std::move(exps)));
    }
    return p;
}

json to_json(const RingPresentation& ring)
{
    json gens = json::array();
    for (const auto& g : ring.generators())
        gens.push_back({{"name", g.name}, {"degree", g.degree}});
    json rels = json::array();
    for (const auto& r : ring.relations())
        rels.push_back(polynomial_to_json(r));
    return {{"name", ring.name()}, {"generators", gens}, {"relations", rels}, {"degree_bound", ring.degree_bound()}};
}

RingPresentation ring_from_json(const json& j)
{
    try {
        std::vector<Generator> gens;
        for (const auto& g : j.at("generators"))
            gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
        const std::string name = j.value("name", std::string("ring"));
        const int bound = j.at("degree_bound").get<int>();
        // relations are parsed against the relation-free ring on the same generators
        const RingPresentation free(name, gens, {}, bound);
        std::vector<Polynomial> rels;
        for (const auto& r : j.value("relations", json::array()))
            rels.push_back(polynomial_from_json(free, r));
        return RingPresentation(name, std::move(gens), std::move(rels), bound);
    } catch (const json::exception& e) {
        throw InputError(fmt::format("ring json: {}", e.what()));
    }
}

} // namespace bord::ring

namespace bord::steenrod {

using nlohmann::json;

json to_json(const SteenrodSpec& spec)
{
    const auto& ring = spec.ring();
    json out = json::object();
    for (std::size_t g = 0; g < ring.num_generators(); ++g) {
        json row = json::object();
        for (const auto& [i, v] : spec.entries(g))
            row[std::to_string(i)] = ring.format(v);
        out[ring.generators()[g].name] = row;
    }
    return out;
}

SteenrodSpec spec_from_json(const ring::RingPresentation& ring, const json& j)
{
    try {
        std::vector<std::map<int, Polynomial>> squares(ring.num_generators());
        for (const auto& [gname, row] : j.items()) {
            const auto g = ring.generator_index(gname);
            if (!g)
                throw InputError(fmt::format("steenrod json: unknown generator {}", gname));
            for (const auto& [key, value] : row.items())
                squares[*g][std::stoi(key)] = ring::polynomial_from_json(ring, value);
        }
        return SteenrodSpec(ring, std::move(squares));
    } catch (const json::exception& e) {
        throw InputError(fmt::format("steenrod json: {}", e.what()));
    }
}

} // namespace bord::steenrod
