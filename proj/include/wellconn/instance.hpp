#pragma once

// Instance files: a JSON object with exactly the keys "arities" (array of
// integers, each at least 2) and "strings" (array of 0-based coordinate
// tuples, no duplicates). Emission is canonical and byte-stable: keys in
// that order, no insignificant whitespace, members in canonical order,
// newline-terminated.

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wellconn/errors.hpp"
#include "wellconn/strings.hpp"

namespace wellconn {

inline StringSet parse_instance(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(e.what());
    }

    if (!doc.is_object())
        throw std::invalid_argument("instance must be an object with keys "
                                    "\"arities\" and \"strings\"");
    for (const auto& item : doc.items())
        if (item.key() != "arities" && item.key() != "strings")
            throw std::invalid_argument("unexpected key \"" + item.key() + "\"");
    if (!doc.contains("arities") || !doc.contains("strings"))
        throw std::invalid_argument("instance needs both \"arities\" and \"strings\"");

    const nlohmann::json& ja = doc["arities"];
    if (!ja.is_array() || ja.empty())
        throw std::invalid_argument("\"arities\" must be a nonempty array of integers");
    std::vector<std::uint32_t> dims;
    for (std::size_t i = 0; i < ja.size(); ++i) {
        if (!ja[i].is_number_integer() || ja[i].get<std::int64_t>() < 2)
            throw std::invalid_argument("arities[" + std::to_string(i) +
                                        "] must be an integer of at least 2");
        dims.push_back(ja[i].get<std::uint32_t>());
    }
    Arities arities(std::move(dims));

    const nlohmann::json& js = doc["strings"];
    if (!js.is_array())
        throw std::invalid_argument("\"strings\" must be an array of coordinate tuples");
    std::vector<StringT> members;
    std::map<StringT, std::size_t> seen;
    for (std::size_t i = 0; i < js.size(); ++i) {
        const nlohmann::json& jt = js[i];
        if (!jt.is_array() || jt.size() != arities.size())
            throw std::invalid_argument("strings[" + std::to_string(i) + "] must be a tuple of " +
                                        std::to_string(arities.size()) + " coordinates");
        StringT x;
        for (std::size_t j = 0; j < jt.size(); ++j) {
            if (!jt[j].is_number_integer() || jt[j].get<std::int64_t>() < 0 ||
                jt[j].get<std::int64_t>() >= static_cast<std::int64_t>(arities.dim(j)))
                throw std::invalid_argument("strings[" + std::to_string(i) + "][" +
                                            std::to_string(j) + "] out of range (axis size " +
                                            std::to_string(arities.dim(j)) + ")");
            x.push_back(jt[j].get<std::uint32_t>());
        }
        auto [it, fresh] = seen.emplace(std::move(x), i);
        if (!fresh)
            throw std::invalid_argument("strings[" + std::to_string(i) + "] duplicates strings[" +
                                        std::to_string(it->second) + "]");
        members.push_back(it->first);
    }
    return StringSet(std::move(arities), std::move(members));
}

inline std::string emit_instance(const StringSet& set) {
    std::ostringstream out;
    out << "{\"arities\":[";
    for (std::size_t i = 0; i < set.arities().size(); ++i) {
        if (i) out << ',';
        out << set.arities().dim(i);
    }
    out << "],\"strings\":[";
    for (std::size_t i = 0; i < set.members().size(); ++i) {
        if (i) out << ',';
        out << '[';
        const StringT& x = set.members()[i];
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (j) out << ',';
            out << x[j];
        }
        out << ']';
    }
    out << "]}\n";
    return out.str();
}

}  // namespace wellconn
