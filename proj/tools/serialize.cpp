/*
 * Copyright (c) 2026 vvjack contributors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "serialize.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace vvjack::io {

namespace {

BigRat coeff_from(const Json& c) {
    if (c.is_string()) {
        BigRat q(c.get<std::string>(), 10);
        q.canonicalize();
        return q;
    }
    if (c.is_number_integer()) return BigRat(c.get<long>());
    throw std::invalid_argument("coefficient must be an integer or a string");
}

AlphaPoly poly_part_from(const Json& arr) {
    if (!arr.is_array())
        throw std::invalid_argument("coefficient list must be an array");
    std::vector<BigRat> coeffs;
    coeffs.reserve(arr.size());
    for (const auto& c : arr) coeffs.push_back(coeff_from(c));
    return AlphaPoly(std::move(coeffs));
}

std::vector<int> int_list_from(const Json& arr, const char* what) {
    if (!arr.is_array())
        throw std::invalid_argument(std::string(what) + " must be an array");
    std::vector<int> out;
    out.reserve(arr.size());
    for (const auto& c : arr) {
        if (!c.is_number_integer())
            throw std::invalid_argument(std::string(what) +
                                        " entries must be integers");
        out.push_back(c.get<int>());
    }
    return out;
}

}  // namespace

Json frac_json(const AlphaFrac& f) {
    Json j;
    j["num"] = f.num().integer_strings();
    j["den"] = f.den().integer_strings();
    return j;
}

AlphaFrac frac_from_json(const Json& j) {
    AlphaPoly num = poly_part_from(j.at("num"));
    AlphaPoly den = j.contains("den") ? poly_part_from(j.at("den"))
                                      : AlphaPoly(1);
    return AlphaFrac(std::move(num), std::move(den));
}

Json tableau_json(const Tableau& tau) {
    Json j;
    j["shape"] = tau.shape;
    j["rows"] = tau.rows;
    return j;
}

Tableau tableau_from_json(const Json& j) {
    const Json& rows = j.at("rows");
    if (!rows.is_array())
        throw std::invalid_argument("tableau rows must be an array");
    std::vector<std::vector<int>> grid;
    grid.reserve(rows.size());
    for (const auto& r : rows) grid.push_back(int_list_from(r, "tableau row"));
    Tableau tau = make_tableau(std::move(grid));
    if (j.contains("shape") && Shape(int_list_from(j.at("shape"), "shape")) !=
                                   tau.shape)
        throw std::invalid_argument("tableau shape disagrees with its rows");
    return tau;
}

Json spectral_json(const std::vector<AlphaFrac>& zeta) {
    Json arr = Json::array();
    for (const auto& z : zeta) arr.push_back(frac_json(z));
    return arr;
}

Json poly_json(const VvPoly& p) {
    Json j;
    j["shape"] = p.shape();
    j["N"] = p.vars();
    Json terms = Json::array();
    for (const auto& [key, c] : p.terms()) {
        Json t;
        t["exp"] = key.exp;
        t["tableau"] = key.tab;
        t["coeff"] = frac_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

VvPoly poly_from_json(const Json& j) {
    Shape shape = int_list_from(j.at("shape"), "shape");
    validate_shape(shape);
    VvPoly p(shape);
    const int count = ShapeContext::get(shape).count();
    const int n = p.vars();
    for (const auto& t : j.at("terms")) {
        std::vector<int> exp = int_list_from(t.at("exp"), "exponent");
        if (static_cast<int>(exp.size()) != n)
            throw std::invalid_argument("exponent length disagrees with N");
        const int tab = t.at("tableau").get<int>();
        if (tab < 0 || tab >= count)
            throw std::invalid_argument("tableau index out of range");
        p.add_term(std::move(exp), tab, frac_from_json(t.at("coeff")));
    }
    if (j.contains("N") && j.at("N").get<int>() != n)
        throw std::invalid_argument("N disagrees with the shape");
    return p;
}

Json vanishing_json(const VanishingVector& v) {
    Json j;
    j["entries"] = spectral_json(v.entries);
    j["pivot"] = v.pivot;
    return j;
}

namespace {

const char* kind_name(EdgeKind k) {
    switch (k) {
        case EdgeKind::Step: return "step";
        case EdgeKind::Jump: return "jump";
        case EdgeKind::Fall: return "fall";
        case EdgeKind::Affine: return "affine";
        default: return "none";
    }
}

}  // namespace

Json component_json(const ComponentHT& comp) {
    Json j;
    j["filling"] = Json{{"shape", comp.filling.shape},
                        {"rows", comp.filling.rows}};
    Json verts = Json::array();
    for (const auto& x : comp.vertices) {
        verts.push_back(Json::array({tableau_json(x.tableau),
                                     spectral_json(x.spectral), x.weight,
                                     x.rank}));
    }
    j["vertices"] = std::move(verts);
    Json edges = Json::array();
    for (const auto& e : comp.edges)
        edges.push_back(Json::array({e.from, e.to, kind_name(e.kind),
                                     e.index}));
    j["edges"] = std::move(edges);
    j["root"] = comp.root;
    j["sink"] = comp.sink;
    return j;
}

std::string component_dot(const ComponentHT& comp) {
    std::ostringstream out;
    out << "digraph component {\n";
    out << "  rankdir=BT;\n";
    for (size_t k = 0; k < comp.vertices.size(); ++k) {
        const auto& x = comp.vertices[k];
        out << "  v" << k << " [label=\"[";
        for (size_t i = 0; i < x.weight.size(); ++i) {
            if (i) out << ",";
            out << x.weight[i];
        }
        out << "] T" << ShapeContext::get(x.tableau.shape).index_of(x.tableau)
            << "\"];\n";
    }
    for (const auto& e : comp.edges) {
        out << "  v" << e.from << " -> v" << e.to << " [label=\""
            << kind_name(e.kind) << " " << e.index << "\"";
        if (e.kind == EdgeKind::Jump) out << " style=dashed";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace vvjack::io
