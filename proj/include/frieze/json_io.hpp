#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "frieze/diagonal_map.hpp"
#include "frieze/pattern.hpp"
#include "frieze/polygon.hpp"

namespace frieze {

struct PolygonSpec {
    Polygon polygon;
    Dissection dissection;
};

// {"n": 9, "dissection": [[1,6],[2,5]]}; pairs may come in either order and
// the dissection may be omitted.
inline PolygonSpec load_polygon_spec(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_integer())
        throw ValidationError("input document needs an integer field \"n\"");
    Polygon p{doc["n"].get<int>()};
    std::vector<Diagonal> ds;
    if (doc.contains("dissection")) {
        if (!doc["dissection"].is_array())
            throw ValidationError("\"dissection\" must be an array of vertex pairs");
        for (const auto& item : doc["dissection"]) {
            if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
                !item[1].is_number_integer())
                throw ValidationError("dissection entries must be pairs of integers");
            ds.emplace_back(item[0].get<int>(), item[1].get<int>());
        }
    }
    return PolygonSpec{p, Dissection::validate(p, std::move(ds))};
}

template <Semifield K>
K scalar_from_json(const nlohmann::json& v);

// "p/q", "p", or an integer shorthand
template <>
inline PositiveRational scalar_from_json<PositiveRational>(const nlohmann::json& v) {
    if (v.is_string()) {
        try {
            return PositiveRational::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw ValidationError("bad rational " + v.dump() + ": " + e.what());
        }
    }
    if (v.is_number_unsigned() || v.is_number_integer()) {
        auto i = v.get<std::int64_t>();
        if (i <= 0) throw ValidationError("rational values must be positive, got " + v.dump());
        return PositiveRational::from_int(static_cast<std::uint64_t>(i));
    }
    throw ValidationError("expected a rational scalar, got " + v.dump());
}

template <>
inline TropicalInt scalar_from_json<TropicalInt>(const nlohmann::json& v) {
    if (v.is_number_integer() || v.is_number_unsigned()) return TropicalInt{v.get<std::int64_t>()};
    if (v.is_string()) {
        try {
            return TropicalInt::parse(v.get<std::string>());
        } catch (const std::exception& e) {
            throw ValidationError("bad integer " + v.dump() + ": " + e.what());
        }
    }
    throw ValidationError("expected an integer scalar, got " + v.dump());
}

template <Semifield K>
nlohmann::json scalar_to_json(const K& v) {
    return v.str();
}

template <>
inline nlohmann::json scalar_to_json<TropicalInt>(const TropicalInt& v) {
    return v.value().to_i64();
}

inline void require_semifield(const nlohmann::json& doc, std::string_view name) {
    std::string got = doc.value("semifield", "rational");
    if (got != name)
        throw ValidationError("document semifield is \"" + got + "\", expected \"" +
                              std::string{name} + "\"");
}

inline std::string document_semifield(const nlohmann::json& doc) {
    std::string name = doc.value("semifield", "rational");
    if (name != "rational" && name != "tropical")
        throw ValidationError("unknown semifield \"" + name + "\"");
    return name;
}

// key "i-j" with i < j (either order accepted)
inline Diagonal diagonal_from_key(const std::string& key) {
    auto dash = key.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
        throw ValidationError("bad diagonal key \"" + key + "\", expected \"i-j\"");
    try {
        return Diagonal{std::stoi(key.substr(0, dash)), std::stoi(key.substr(dash + 1))};
    } catch (const std::exception&) {
        throw ValidationError("bad diagonal key \"" + key + "\", expected \"i-j\"");
    }
}

inline std::string diagonal_key(Diagonal d) {
    return std::to_string(d.a) + "-" + std::to_string(d.b);
}

template <Semifield K>
PartialDiagonalMap<K> load_value_object(const Polygon& p, const nlohmann::json& obj) {
    if (!obj.is_object()) throw ValidationError("expected an object of diagonal values");
    PartialDiagonalMap<K> out{p};
    for (const auto& [key, value] : obj.items())
        out.set(diagonal_from_key(key), scalar_from_json<K>(value));
    return out;
}

// full values document; every one of the n(n-1)/2 diagonals must be present
template <Semifield K>
DiagonalMap<K> load_values(const PolygonSpec& spec, const nlohmann::json& doc) {
    require_semifield(doc, K::name());
    if (!doc.contains("values")) throw ValidationError("values document needs a \"values\" object");
    return load_value_object<K>(spec.polygon, doc["values"]).to_total();
}

template <Semifield K>
std::vector<PartialDiagonalMap<K>> load_pieces(const PolygonSpec& spec,
                                               const nlohmann::json& doc) {
    require_semifield(doc, K::name());
    if (!doc.contains("pieces") || !doc["pieces"].is_array())
        throw ValidationError("glue document needs a \"pieces\" array");
    std::vector<PartialDiagonalMap<K>> out;
    for (const auto& piece : doc["pieces"]) out.push_back(load_value_object<K>(spec.polygon, piece));
    return out;
}

inline nlohmann::json dissection_to_json(const Dissection& d) {
    nlohmann::json arr = nlohmann::json::array();
    for (Diagonal m : d.members()) arr.push_back({m.a, m.b});
    return arr;
}

template <Semifield K>
nlohmann::json values_to_json(const DiagonalMap<K>& f, const Dissection& d) {
    nlohmann::json values = nlohmann::json::object();
    const Polygon& p = f.polygon();
    for (int a = 0; a < p.size(); ++a)
        for (int b = a + 1; b < p.size(); ++b)
            values[diagonal_key(Diagonal{a, b})] = scalar_to_json<K>(f.value(a, b));
    return nlohmann::json{{"n", p.size()},
                          {"semifield", std::string{K::name()}},
                          {"dissection", dissection_to_json(d)},
                          {"values", values}};
}

template <Semifield K>
nlohmann::json grid_to_json(const PatternGrid<K>& grid) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : grid.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const K& v : row) r.push_back(scalar_to_json<K>(v));
        rows.push_back(std::move(r));
    }
    return nlohmann::json{{"n", grid.n}, {"semifield", std::string{K::name()}}, {"rows", rows}};
}

inline nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in{path};
    if (!in) throw ValidationError("cannot open input file " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
    return doc;
}

} // namespace frieze
