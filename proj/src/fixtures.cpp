#include "grex/fixtures.hpp"

#include <fstream>

#include <json.hpp>

namespace grex {

namespace {

using nlohmann::json;

IntPoly poly_from_json(const json& j) {
    std::vector<mpz_class> c;
    for (const auto& v : j)
        c.emplace_back(v.get<long>());
    return IntPoly(std::move(c));
}

IntPoly poly_product(const json& factors) {
    IntPoly p = IntPoly::constant(1);
    for (const auto& f : factors)
        p = p * poly_from_json(f);
    return p;
}

RationalSeries series_from_json(const json& j) {
    return RationalSeries(poly_product(j.at("num")), poly_product(j.at("den")));
}

Presentation presentation_from_json(const json& j) {
    std::vector<F2Generator> gens;
    for (const auto& g : j.at("generators"))
        gens.push_back({g.at(0).get<std::string>(), g.at(1).get<unsigned>()});

    Presentation shape(gens, {});
    std::vector<Exponents> rels;
    for (const auto& r : j.at("relations")) {
        Exponents e(gens.size(), 0);
        for (const auto& [name, exp] : r.items()) {
            int idx = shape.generator_index(name);
            if (idx < 0)
                throw FixtureError("unknown generator in relation: " + name);
            e[static_cast<std::size_t>(idx)] = exp.get<unsigned>();
        }
        rels.push_back(std::move(e));
    }
    return Presentation(std::move(gens), std::move(rels));
}

F2Poly f2poly_from_json(const Presentation& pres, const json& j) {
    std::vector<Exponents> monos;
    for (const auto& m : j) {
        Exponents e(pres.ngens(), 0);
        for (const auto& [name, exp] : m.items()) {
            int idx = pres.generator_index(name);
            if (idx < 0)
                throw FixtureError("unknown generator in polynomial: " + name);
            e[static_cast<std::size_t>(idx)] = exp.get<unsigned>();
        }
        monos.push_back(std::move(e));
    }
    return F2Poly(std::move(monos));
}

mpq_class rational_from_json(const json& j) {
    if (j.is_number_integer())
        return mpq_class(j.get<long>());
    if (j.is_string()) {
        mpq_class q(j.get<std::string>());
        q.canonicalize();
        return q;
    }
    throw FixtureError("rational entries must be integers or \"p/q\" strings");
}

Mat4 matrix_from_json(const json& j) {
    if (j.size() != 4)
        throw FixtureError("matrix must have 4 rows");
    Mat4 m{};
    for (std::size_t i = 0; i < 4; ++i) {
        if (j[i].size() != 4)
            throw FixtureError("matrix row must have 4 entries");
        for (std::size_t k = 0; k < 4; ++k) {
            const json& entry = j[i][k];
            if (!entry.is_array() || entry.size() != 2)
                throw FixtureError("matrix entry must be [a, b] meaning a + b*sqrt2");
            m.at(i, k) = QSqrt2(rational_from_json(entry[0]), rational_from_json(entry[1]));
        }
    }
    return m;
}

GradedActionFixture graded_action_from_json(const json& j) {
    Presentation pres = presentation_from_json(j);
    std::vector<F2Poly> images;
    const json& act = j.at("action");
    for (const F2Generator& g : pres.generators()) {
        if (!act.contains(g.name))
            throw FixtureError("action missing image of generator " + g.name);
        images.push_back(f2poly_from_json(pres, act.at(g.name)));
    }
    RingMap map(pres, std::move(images));
    GradedAction ga(pres, std::move(map), j.at("group_order").get<unsigned>());

    GradedActionFixture out{j.at("name").get<std::string>(), j.value("description", ""),
                            std::move(ga), {}, j.value("t_max", 20u)};
    if (j.contains("rows")) {
        for (const auto& r : j.at("rows")) {
            out.rows.push_back({r.at("s_from").get<unsigned>(), r.at("s_to").get<unsigned>(),
                                r.value("s_step", 1u), series_from_json(r.at("series"))});
        }
    }
    return out;
}

PresentationFixture presentation_fixture_from_json(const json& j) {
    PresentationFixture out{j.at("name").get<std::string>(), j.value("description", ""),
                            presentation_from_json(j), std::nullopt, j.value("max_degree", 20u)};
    if (j.contains("series"))
        out.series = series_from_json(j.at("series"));
    return out;
}

RepGroupFixture rep_group_from_json(const json& j) {
    RepGroupFixture out{j.at("name").get<std::string>(), j.value("description", ""), {},
                        j.at("order").get<std::size_t>(), std::nullopt};
    for (const auto& g : j.at("generators"))
        out.generators.push_back({g.at("name").get<std::string>(), matrix_from_json(g.at("matrix"))});
    if (j.contains("expected_bound"))
        out.expected_bound = j.at("expected_bound").get<unsigned>();
    return out;
}

IdentityListFixture identity_list_from_json(const json& j) {
    IdentityListFixture out{j.at("name").get<std::string>(), {}};
    for (const auto& id : j.at("identities")) {
        SeriesIdentity si{id.at("name").get<std::string>(), {},
                          series_from_json(id.at("rhs"))};
        for (const auto& term : id.at("lhs")) {
            int sign = term.value("sign", 1);
            si.lhs.emplace_back(sign, series_from_json(term));
        }
        out.identities.push_back(std::move(si));
    }
    return out;
}

} // namespace

Fixture load_fixture(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw FixtureError("cannot open fixture file: " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw FixtureError(path + ": " + e.what());
    }
    try {
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "graded_action")
            return graded_action_from_json(j);
        if (kind == "presentation")
            return presentation_fixture_from_json(j);
        if (kind == "rep_group")
            return rep_group_from_json(j);
        if (kind == "identity_list")
            return identity_list_from_json(j);
        throw FixtureError("unknown fixture kind: " + kind);
    } catch (const json::exception& e) {
        throw FixtureError(path + ": " + e.what());
    }
}

const char* fixture_kind(const Fixture& f) {
    switch (f.index()) {
    case 0: return "graded_action";
    case 1: return "presentation";
    case 2: return "rep_group";
    default: return "identity_list";
    }
}

const std::string& fixture_name(const Fixture& f) {
    return std::visit([](const auto& x) -> const std::string& { return x.name; }, f);
}

} // namespace grex
