#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "element.hpp"

namespace cuntz {

namespace detail {

inline std::string rational_field_str(const Rational& r) { return rational_str(r); }

inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational string");
    try {
        return Rational(s);  // accepts "p" and "p/q"
    } catch (const std::exception&) {
        throw std::invalid_argument("bad rational string: " + s);
    }
}

}  // namespace detail

/**
 * JSON form of an element:
 *
 *   { "d": 2,
 *     "terms": [ { "coeff": {"a": "1/2", "b": "0", "c": "0", "d": "0"},
 *                  "creators": [1, 2], "annihilators": [2] }, ... ] }
 *
 * Coefficient components are exact rationals rendered as strings (the value
 * (a + b sqrt2) + (c + d sqrt2) i); word letters are 1-based generator
 * indices in creator order.  Field names are stable.
 */
inline nlohmann::json element_to_json(const Element& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : x.terms()) {
        nlohmann::json t;
        t["coeff"] = {{"a", detail::rational_field_str(c.a)},
                      {"b", detail::rational_field_str(c.b)},
                      {"c", detail::rational_field_str(c.c)},
                      {"d", detail::rational_field_str(c.d)}};
        t["creators"] = nlohmann::json::array();
        for (auto l : m.creators) t["creators"].push_back(int(l));
        t["annihilators"] = nlohmann::json::array();
        for (auto l : m.annihilators) t["annihilators"].push_back(int(l));
        terms.push_back(std::move(t));
    }
    return nlohmann::json{{"d", x.generator_count()}, {"terms", std::move(terms)}};
}

inline Element element_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("terms"))
        throw std::invalid_argument("element json: expected {d, terms}");
    const int d = j.at("d").get<int>();
    if (d < 2) throw std::invalid_argument("element json: need d >= 2");
    Element x(d);
    for (const auto& t : j.at("terms")) {
        const auto& coeff = t.at("coeff");
        Scalar c{detail::rational_from_string(coeff.at("a").get<std::string>()),
                 detail::rational_from_string(coeff.at("b").get<std::string>()),
                 detail::rational_from_string(coeff.at("c").get<std::string>()),
                 detail::rational_from_string(coeff.at("d").get<std::string>())};
        Monomial m;
        for (const auto& l : t.at("creators")) {
            const int v = l.get<int>();
            if (v < 1 || v > d)
                throw std::invalid_argument("element json: letter out of range");
            m.creators.push_back(std::uint8_t(v));
        }
        for (const auto& l : t.at("annihilators")) {
            const int v = l.get<int>();
            if (v < 1 || v > d)
                throw std::invalid_argument("element json: letter out of range");
            m.annihilators.push_back(std::uint8_t(v));
        }
        x.add_term(m, c);
    }
    return x;
}

}  // namespace cuntz
