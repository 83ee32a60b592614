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

// Jack polynomial families built by walking the construction graph:
// nonsymmetric, symmetric, antisymmetric and shifted polynomials, their
// norms, minimal-degree representatives, restriction to fewer variables,
// and the vanishing points of the shifted family.

#ifndef VVJACK_JACK_HPP
#define VVJACK_JACK_HPP

#include <vector>

#include "vvjack/alpha.hpp"
#include "vvjack/combinatorics.hpp"
#include "vvjack/vvpoly.hpp"
#include "vvjack/ybgraph.hpp"

namespace vvjack {

struct JackIndex {
    Weight weight;
    Tableau tableau;

    bool operator==(const JackIndex&) const = default;
};

// Simultaneous eigenfunction of the deformed Cherednik operators with
// spectral_vector(tau, v) as its eigenvalue list and x^v tensor tau as its
// leading term with coefficient 1.  Built from 1 tensor tau by applying,
// along canonical_path(v), the factor (s_i (x) s_i + 1/(z[i+1]-z[i])) for a
// step labelled i (z the spectral vector of the vertex the edge leaves) and
// the raising operator for an affine edge.
VvPoly nonsymmetric_jack(const Weight& v, const Tableau& tau);
// Same walk along a caller-supplied path from the zero weight; used to
// check path independence.  The path may contain step, jump and affine
// labels.  Throws std::invalid_argument when a label does not give an edge.
VvPoly nonsymmetric_jack(const Tableau& tau, const Path& path);

// Product over the walk of (g-1)(g+1)/g^2 per step, with g the spectral gap
// z[i+1]-z[i] at the vertex the step arrives at, and z[1]/a + 1 per affine
// edge, with z taken where the edge departs.  norm_squared multiplies the
// ratio by the squared length tableau_norm(tau) of the starting tableau
// and equals pairing(J, J).
AlphaFrac norm_ratio(const Weight& v, const Tableau& tau);
AlphaFrac norm_ratio(const Tableau& tau, const Path& path);
AlphaFrac norm_squared(const Weight& v, const Tableau& tau);

enum class SymKind { E, F };

// Scalar weights attached to the vertices of one component.  The root gets
// 1 and every step or jump out of a vertex with spectral vector z and label
// i multiplies by d/(d+1) for kind E and by d/(1-d) for kind F, where
// d = z[i] - z[i+1].  Revisits along different edge sequences are checked
// for consistency.  depth[k] is the edge distance from the root.
struct SymCoefficientTable {
    ComponentHT component;
    SymKind kind = SymKind::E;
    std::vector<AlphaFrac> values;
    std::vector<int> depth;
};

SymCoefficientTable sym_coefficients(const Filling& T, SymKind kind);

// Sum over the component of T of value * nonsymmetric_jack(vertex), with E
// values for the symmetric family (requires a column-strict T) and F values
// for the antisymmetric one (requires a row-strict T); each vertex's Jack
// is built in its own graph rather than transported across jumps.  The
// symmetric result is fixed by every s_i (x) s_i, the antisymmetric one is
// negated.  Throws NotCompatible.
VvPoly symmetric_jack(const Filling& T);
VvPoly antisymmetric_jack(const Filling& T);

// Index of the lowest-degree member of each family over a given shape: the
// filling whose row r holds r-1 (symmetric) or whose column c holds c-1
// (antisymmetric) together with its sorted weight vector.
struct MinimalIndex {
    Filling filling;
    Weight weight;
};

MinimalIndex minimal_symmetric(const Shape& shape);
MinimalIndex minimal_antisymmetric(const Shape& shape);

// Image of nonsymmetric_jack(v, tau) under x_i -> 0 for i > M and the
// linear extension of tableau truncation to the entries 1..M.  Requires the
// boxes of 1..M in tau to form a translated partition (PropertyRViolation)
// and v to vanish past M (NonzeroTail).  The surviving terms all land in
// the module of the truncated shape and the result is the M-variable Jack
// indexed by the truncations.
VvPoly restrict_jack(const Weight& v, const Tableau& tau, int M);

// Inhomogeneous analogue: same walk as nonsymmetric_jack with the step
// factor acting as (varsigma_i + 1/(z[i+1]-z[i])) and the affine edge as
// the shifted raising map.  Eigenfunction of the shifted Cherednik
// operators; its top-degree part is nonsymmetric_jack(v, tau).
VvPoly shifted_jack(const Weight& v, const Tableau& tau);
VvPoly shifted_jack(const Tableau& tau, const Path& path);

// E- resp. F-weighted sums of shifted Jacks over a component, with the same
// compatibility requirements as the homogeneous versions.
VvPoly shifted_symmetric_jack(const Filling& T);
VvPoly shifted_antisymmetric_jack(const Filling& T);

// Substitution point annihilating shifted_jack(v, tau): with m the first
// position of the largest entry of v, entries[m-1..N-1] pinned and the
// earlier variables left free give the zero polynomial.  entries[m-1] is
// always 1-N.
struct VanishingVector {
    std::vector<AlphaFrac> entries;
    int pivot = 1;

    bool operator==(const VanishingVector&) const = default;
};

// entries[i-1] = a(max(v) - v[i]) + CT[1] - CT[sigma_v[i]] - N + 1.  The
// vanishing statement applies to nonzero weights; for the zero weight the
// vector is returned as the seed of the propagation below.
VanishingVector vanishing_vector(const Weight& v, const Tableau& tau);

// Transport of vanishing points along canonical_path(v): the main vector
// follows the affine rule (rotate and subtract a from the moved front entry
// when the maximum of the departing weight sits past position 1, rotate and
// add a to the other entries when it sits at position 1) and swaps across
// steps; fully pinned points collected at pivot-1 vertices ride along,
// rotating with +a on affine edges and swapping across a step only when
// their gap matches the step's spectral gap.  Entry 0 is the vanishing
// vector of v itself, later entries are extra fully pinned points.  Throws
// DomainError for the zero weight.
std::vector<VanishingVector> propagate_vanishings(const Weight& v,
                                                  const Tableau& tau);

}  // namespace vvjack

#endif  // VVJACK_JACK_HPP
