#include "rainbowdom/serialize.hpp"

namespace rainbowdom {

namespace {

Json optional_value(const std::optional<int>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json optional_flag(const std::optional<bool>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const RainbowAssignment& f)
{
    Json colors = Json::array();
    for (ColorSet c : f.colors) {
        Json set = Json::array();
        for (int color = 1; color <= kMaxColors; ++color)
            if (c.contains(color))
                set.push_back(color);
        colors.push_back(std::move(set));
    }
    return Json{{"k", f.k}, {"colors", std::move(colors)}};
}

RainbowAssignment rainbow_from_json(const Json& j)
{
    try {
        RainbowAssignment f;
        f.k = j.at("k").get<int>();
        if (f.k < 1 || f.k > kMaxColors)
            throw InputError("assignment JSON: k must be in 1..8");
        for (const auto& set : j.at("colors")) {
            ColorSet c;
            for (const auto& color : set) {
                int x = color.get<int>();
                if (x < 1 || x > f.k)
                    throw InputError("assignment JSON: color " + std::to_string(x) + " outside 1..k");
                c.insert(x);
            }
            f.colors.push_back(c);
        }
        return f;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("assignment JSON: ") + e.what());
    }
}

Json to_json(const RomanAssignment& f)
{
    return Json{{"values", f.values}};
}

RomanAssignment roman_from_json(const Json& j)
{
    try {
        return RomanAssignment{j.at("values").get<std::vector<int>>()};
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("Roman JSON: ") + e.what());
    }
}

Json to_json(const VertexSet& s)
{
    return Json{{"set", s.elements()}};
}

Json to_json(const SolveResult& r, std::string_view invariant)
{
    Json witness = std::visit([](const auto& w) { return to_json(w); }, r.witness);
    return Json{{"invariant", invariant},
                {"value", r.value},
                {"method", to_string(r.method)},
                {"witness", std::move(witness)},
                {"nodes", r.nodes_explored}};
}

Json to_json(const ConstructedRdf& c)
{
    Json j = to_json(c.assignment);
    j["weight"] = weight(c.assignment);
    j["claimed_bound"] = c.bound_expression;
    j["claimed_bound_value"] = c.claimed_bound.str();
    j["provenance"] = to_string(c.provenance);
    return j;
}

Json to_json(const P4Certificate& c)
{
    Json parts = Json::array();
    for (const auto& p : c.parts)
        parts.push_back(Json(std::vector<Vertex>(p.begin(), p.end())));
    return Json{{"parts", std::move(parts)}, {"centers", c.centers}};
}

P4Certificate certificate_from_json(const Json& j)
{
    try {
        P4Certificate c;
        for (const auto& part : j.at("parts")) {
            auto vs = part.get<std::vector<Vertex>>();
            if (vs.size() != 4)
                throw InputError("certificate JSON: each part needs four vertices");
            c.parts.push_back({vs[0], vs[1], vs[2], vs[3]});
        }
        c.centers = j.at("centers").get<std::vector<Vertex>>();
        return c;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("certificate JSON: ") + e.what());
    }
}

Json to_json(const BoundReport& r)
{
    Json bounds = Json::array();
    for (const auto& e : r.entries) {
        Json entry{{"name", e.name},
                   {"lhs", e.lhs ? Json(*e.lhs) : Json(nullptr)},
                   {"rhs", e.rhs ? Json(e.rhs->str()) : Json(nullptr)}};
        if (e.known()) {
            entry["holds"] = e.holds();
            entry["tight"] = e.tight();
        } else {
            entry["holds"] = nullptr;
            entry["tight"] = nullptr;
            entry["status"] = "unknown";
        }
        bounds.push_back(std::move(entry));
    }
    return Json{{"graph", {{"n", r.order}}},
                {"values",
                 {{"gamma", optional_value(r.values.gamma)},
                  {"gamma_r2", optional_value(r.values.gamma_r2)},
                  {"gamma_R", optional_value(r.values.gamma_roman)}}},
                {"bounds", std::move(bounds)}};
}

Json to_json(const ProductReport& r)
{
    return Json{{"values",
                 {{"gamma_G", optional_value(r.gamma_g)},
                  {"gamma_H", optional_value(r.gamma_h)},
                  {"gamma_product", optional_value(r.gamma_product)},
                  {"gamma_r2_product", optional_value(r.gamma_r2_product)},
                  {"gamma_R_product", optional_value(r.gamma_roman_product)}}},
                {"verdicts",
                 {{"rainbow_vizing", optional_flag(r.rainbow_vizing)},
                  {"roman_vizing", optional_flag(r.roman_vizing)},
                  {"clark_suen", optional_flag(r.clark_suen)}}},
                {"complete", r.complete()}};
}

}  // namespace rainbowdom
