#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "permpoly/counting.hpp"
#include "permpoly/field.hpp"
#include "permpoly/groups.hpp"
#include "permpoly/latin.hpp"
#include "permpoly/perm.hpp"
#include "permpoly/poly.hpp"

namespace permpoly {

using json = nlohmann::json;

// ---- field ----

inline json to_json(const Field& f) {
    return json{{"p", f.p()}, {"n", f.n()}, {"modulus", f.modulus()}};
}

inline Field field_from_json(const json& j) {
    return Field(j.at("p").get<int>(), j.at("n").get<int>(),
                 j.at("modulus").get<std::vector<int>>());
}

// ---- permutation: JSON is the image table ----

inline json to_json(const Permutation& f) { return json(f.images()); }

inline Permutation permutation_from_json(const json& j) {
    return Permutation(j.get<std::vector<int>>());
}

// ---- ordered group ----

inline json to_json(const OrderedGroup& g) {
    json gens = json::array(), elems = json::array();
    for (const auto& p : g.gens()) gens.push_back(p.images());
    for (const auto& p : g.elements()) elems.push_back(p.images());
    return json{{"q", g.q()}, {"bounds", g.bounds()}, {"gens", gens}, {"elements", elems}};
}

inline OrderedGroup group_from_json(const json& j) {
    std::vector<Permutation> gens;
    for (const auto& g : j.at("gens")) gens.push_back(Permutation(g.get<std::vector<int>>()));
    auto bounds = j.at("bounds").get<std::vector<int>>();
    OrderedGroup g = OrderedGroup::enumerate(std::move(gens), std::move(bounds));
    if (j.contains("elements")) {
        const auto& elems = j.at("elements");
        if (static_cast<int>(elems.size()) != g.q())
            throw Error("element list does not match the bounds");
        for (int t = 0; t < g.q(); ++t)
            if (elems[t].get<std::vector<int>>() != g.element(t).images())
                throw Error("element list disagrees with the generator products");
    }
    return g;
}

// ---- Latin square ----

inline json to_json(const LatinSquare& s) { return json{{"q", s.q()}, {"cells", s.cells()}}; }

inline LatinSquare square_from_json(const json& j) {
    LatinSquare s(j.at("cells").get<std::vector<std::vector<int>>>());
    if (j.contains("q") && j.at("q").get<int>() != s.q())
        throw Error("declared q does not match the grid");
    return s;
}

/// q lines of q space-separated symbols.
inline std::string square_to_text(const LatinSquare& s) {
    std::ostringstream out;
    for (int x = 0; x < s.q(); ++x) {
        for (int y = 0; y < s.q(); ++y) {
            if (y) out << ' ';
            out << s.cell(x, y);
        }
        out << '\n';
    }
    return out.str();
}

inline std::string square_to_csv(const LatinSquare& s) {
    std::ostringstream out;
    for (int x = 0; x < s.q(); ++x) {
        for (int y = 0; y < s.q(); ++y) {
            if (y) out << ',';
            out << s.cell(x, y);
        }
        out << '\n';
    }
    return out.str();
}

/// Accepts the text, csv, or JSON form; the format is sniffed from the
/// content.
inline LatinSquare parse_square(const std::string& content) {
    std::size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw Error("empty square file");
    if (content[first] == '{') return square_from_json(json::parse(content));
    std::vector<std::vector<int>> cells;
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        for (char& c : line)
            if (c == ',') c = ' ';
        std::istringstream row(line);
        std::vector<int> cur;
        int v;
        while (row >> v) cur.push_back(v);
        if (!row.eof()) throw Error("malformed square row: " + line);
        if (!cur.empty()) cells.push_back(std::move(cur));
    }
    return LatinSquare(std::move(cells));
}

/// Two squares plus the orthogonality attestation.
inline json pair_to_json(const LatinSquare& s, const LatinSquare& companion, bool orthogonal,
                         const std::string& method) {
    return json{{"q", s.q()},
                {"square", s.cells()},
                {"companion", companion.cells()},
                {"orthogonal", orthogonal},
                {"method", method}};
}

// ---- bivariate polynomial ----

inline json to_json(const BivariatePoly& P) {
    return json{{"field", to_json(P.field())}, {"coeffs", P.coeffs()}};
}

inline BivariatePoly poly_from_json(const json& j) {
    return BivariatePoly(field_from_json(j.at("field")),
                         j.at("coeffs").get<std::vector<std::vector<int>>>());
}

// ---- count report ----

inline json count_report(const std::string& family, const json& params,
                         const BigCount& closed_form, const BigCount* oracle) {
    json rep{{"family", family},
             {"params", params},
             {"closed_form", closed_form.str()},
             {"oracle", nullptr},
             {"match", true}};
    if (oracle) {
        rep["oracle"] = oracle->str();
        rep["match"] = (*oracle == closed_form);
    }
    return rep;
}

}  // namespace permpoly
