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

// The construction graph: vertices are 4-tuples (tableau, spectral vector,
// weight, rank permutation).  The full graph over a shape is infinite and is
// never materialized; paths are generated lazily and only the finite
// components attached to a fixed filling are built explicitly.

#ifndef VVJACK_YBGRAPH_HPP
#define VVJACK_YBGRAPH_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "vvjack/alpha.hpp"
#include "vvjack/combinatorics.hpp"

namespace vvjack {

struct Vertex {
    Tableau tableau;
    std::vector<AlphaFrac> spectral;
    Weight weight;
    Perm rank;

    bool operator==(const Vertex&) const = default;
};

enum class EdgeKind { Step, Jump, Fall, Affine, NoEdge };

struct EdgeLabel {
    EdgeKind kind = EdgeKind::Affine;
    int index = 0;  // generator index for Step/Jump/Fall; 0 for Affine

    bool operator==(const EdgeLabel&) const = default;
};

using Path = std::vector<EdgeLabel>;

struct ApplyResult {
    std::optional<Vertex> vertex;  // empty on Fall and NoEdge
    EdgeLabel label;
};

struct ComponentEdge {
    int from = 0;
    int to = 0;
    EdgeKind kind = EdgeKind::Step;
    int index = 0;
};

// Finite component attached to a filling: every vertex writes the same
// values into its tableau, edges are the steps and jumps between them.
struct ComponentHT {
    Filling filling;
    std::vector<Vertex> vertices;  // sorted by (weight, tableau rows)
    std::vector<ComponentEdge> edges;
    int root = 0;  // unique vertex with no inward edge
    int sink = 0;  // (standardize(filling), sorted weight, identity)
};

// spectral[i] = weight[i] * a + CT[rank[i]].
std::vector<AlphaFrac> spectral_vector(const Tableau& tau, const Weight& v);
Vertex make_vertex(const Tableau& tau, const Weight& v);
Vertex root_vertex(const Shape& shape);
bool verify_vertex(const Vertex& x);

// Apply s_i, 1 <= i < N.  Step when weight[i] < weight[i+1]; on tied
// weights, Jump when the two entries of matching value can swap with the
// contents decreasing across the swap, Fall when they cannot swap at all
// (the move fixes the vertex), NoEdge when the swap runs against the
// content order; NoEdge also on weight[i] > weight[i+1].
ApplyResult apply_generator(const Vertex& x, int i);
// Apply the affine move: weight rotates to [v2, ..., vN, v1 + 1].
ApplyResult apply_affine(const Vertex& x);

// Deterministic move sequence from the zero weight to v, steps and affine
// moves only, of length exactly step_count(v).
Path canonical_path(const Weight& v);
// Uniformly random legal move sequence with the same endpoints and length.
Path random_path(const Weight& v, std::uint64_t seed);

ComponentHT component(const Filling& T);

}  // namespace vvjack

#endif  // VVJACK_YBGRAPH_HPP
