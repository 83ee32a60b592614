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

// JSON and DOT encodings of the library types.  Output is canonical: key
// order is fixed, coefficients appear in the unique reduced form, and two
// equal values always serialize to the same bytes.  Parsing accepts
// un-normalized coefficient data and canonicalizes on the way in.

#ifndef VVJACK_TOOLS_SERIALIZE_HPP
#define VVJACK_TOOLS_SERIALIZE_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "vvjack/alpha.hpp"
#include "vvjack/combinatorics.hpp"
#include "vvjack/jack.hpp"
#include "vvjack/vvpoly.hpp"
#include "vvjack/ybgraph.hpp"

namespace vvjack::io {

using Json = nlohmann::ordered_json;

// {"num": [...], "den": [...]}, integer coefficient strings ascending by
// degree; the zero polynomial is the empty list.
Json frac_json(const AlphaFrac& f);
// Accepts coefficient entries as integers or strings (strings may carry a
// fraction bar); numerator and denominator need not be reduced.
AlphaFrac frac_from_json(const Json& j);

// {"shape": [...], "rows": [[...], ...]}
Json tableau_json(const Tableau& tau);
Tableau tableau_from_json(const Json& j);

Json spectral_json(const std::vector<AlphaFrac>& zeta);

// {"shape": [...], "N": n, "terms": [{"exp": [...], "tableau": t,
//  "coeff": {...}}, ...]} with terms in the polynomial's term order
// (dominance-refining, largest first).
Json poly_json(const VvPoly& p);
VvPoly poly_from_json(const Json& j);

// {"entries": [...], "pivot": k}
Json vanishing_json(const VanishingVector& v);

// Vertices as 4-element tuples [tableau, spectral, weight, rank]; edges as
// [from, to, kind, index] with kind "step" or "jump".
Json component_json(const ComponentHT& comp);
std::string component_dot(const ComponentHT& comp);

}  // namespace vvjack::io

#endif  // VVJACK_TOOLS_SERIALIZE_HPP
