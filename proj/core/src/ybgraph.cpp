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

#include "vvjack/ybgraph.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

#include "vvjack/errors.hpp"

namespace vvjack {

std::vector<AlphaFrac> spectral_vector(const Tableau& tau, const Weight& v) {
    auto ct = content_vector(tau);
    if (ct.size() != v.size())
        throw ShapeMismatch("weight length does not match tableau size");
    Perm sigma = rank_permutation(v);
    std::vector<AlphaFrac> zeta;
    zeta.reserve(v.size());
    for (size_t i = 0; i < v.size(); ++i)
        zeta.push_back(AlphaFrac::linear(v[i], ct[sigma[i] - 1]));
    return zeta;
}

Vertex make_vertex(const Tableau& tau, const Weight& v) {
    return Vertex{tau, spectral_vector(tau, v), v, rank_permutation(v)};
}

Vertex root_vertex(const Shape& shape) {
    return make_vertex(tau_lambda(shape), Weight(shape_size(shape), 0));
}

bool verify_vertex(const Vertex& x) {
    if (!is_valid_rst(x.tableau.rows)) return false;
    if (x.weight.size() != x.spectral.size()) return false;
    for (int e : x.weight)
        if (e < 0) return false;
    if (x.rank != rank_permutation(x.weight)) return false;
    return x.spectral == spectral_vector(x.tableau, x.weight);
}

ApplyResult apply_generator(const Vertex& x, int i) {
    int n = static_cast<int>(x.weight.size());
    if (i < 1 || i >= n) throw DomainError("generator index out of range");
    if (x.weight[i - 1] < x.weight[i]) {
        Vertex next = x;
        std::swap(next.spectral[i - 1], next.spectral[i]);
        std::swap(next.weight[i - 1], next.weight[i]);
        std::swap(next.rank[i - 1], next.rank[i]);
        return {std::move(next), {EdgeKind::Step, i}};
    }
    if (x.weight[i - 1] > x.weight[i]) return {std::nullopt, {EdgeKind::NoEdge, i}};
    // tied weights: the move acts on the tableau through the shared rank;
    // when the swapped grid is not a tableau the move fixes the vertex (a
    // fall), and when the contents run the wrong way the arrow belongs to
    // the opposite vertex, so this side gets no edge
    int k = x.rank[i - 1];
    auto swapped = swap_entries(x.tableau, k);
    if (!swapped) return {std::nullopt, {EdgeKind::Fall, i}};
    auto ct = content_vector(x.tableau);
    if (ct[k - 1] - ct[k] < 2) return {std::nullopt, {EdgeKind::NoEdge, i}};
    Vertex next = x;
    next.tableau = std::move(*swapped);
    std::swap(next.spectral[i - 1], next.spectral[i]);
    return {std::move(next), {EdgeKind::Jump, i}};
}

ApplyResult apply_affine(const Vertex& x) {
    Vertex next = x;
    next.weight = affine_psi(x.weight);
    std::rotate(next.spectral.begin(), next.spectral.begin() + 1, next.spectral.end());
    next.spectral.back() += AlphaFrac::alpha();
    std::rotate(next.rank.begin(), next.rank.begin() + 1, next.rank.end());
    return {std::move(next), {EdgeKind::Affine, 0}};
}

Path canonical_path(const Weight& v) {
    Weight cur = v;
    Path reversed;
    for (;;) {
        int descent = 0;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                descent = static_cast<int>(i) + 1;
                break;
            }
        }
        if (descent > 0) {
            std::swap(cur[descent - 1], cur[descent]);
            reversed.push_back({EdgeKind::Step, descent});
            continue;
        }
        // weakly increasing: peel one affine move if anything is left
        bool zero = std::all_of(cur.begin(), cur.end(), [](int e) { return e == 0; });
        if (zero) break;
        int last = cur.back();
        cur.pop_back();
        cur.insert(cur.begin(), last - 1);
        reversed.push_back({EdgeKind::Affine, 0});
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

Path random_path(const Weight& v, std::uint64_t seed) {
    std::mt19937 rng(static_cast<std::uint32_t>(seed));
    Weight cur = v;
    Path reversed;
    for (;;) {
        std::vector<int> moves;  // positive: undo step s_i; 0: undo affine
        for (size_t i = 0; i + 1 < cur.size(); ++i)
            if (cur[i] > cur[i + 1]) moves.push_back(static_cast<int>(i) + 1);
        if (cur.back() >= 1) moves.push_back(0);
        if (moves.empty()) break;
        int pick = moves[std::uniform_int_distribution<size_t>(0, moves.size() - 1)(rng)];
        if (pick > 0) {
            std::swap(cur[pick - 1], cur[pick]);
            reversed.push_back({EdgeKind::Step, pick});
        } else {
            int last = cur.back();
            cur.pop_back();
            cur.insert(cur.begin(), last - 1);
            reversed.push_back({EdgeKind::Affine, 0});
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

ComponentHT component(const Filling& T) {
    validate_shape(T.shape);
    for (const auto& row : T.rows)
        for (int e : row)
            if (e < 0) throw InvalidFilling("filling values must be non-negative");
    Tableau sink_tab = standardize(T);
    Weight sink_weight = filling_weight(T);
    if (filling(sink_tab, sink_weight) != T)
        throw InvalidFilling("filling is not reachable from its standardization");

    // closure under steps and jumps in both directions; every neighbor
    // writes the same values into its tableau, so the walk stays inside the
    // component
    std::map<std::pair<Weight, std::vector<std::vector<int>>>, int> index;
    std::vector<Vertex> verts;
    auto intern = [&](Vertex vx) -> int {
        auto key = std::make_pair(vx.weight, vx.tableau.rows);
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(verts.size());
        index.emplace(std::move(key), id);
        verts.push_back(std::move(vx));
        return id;
    };
    intern(make_vertex(sink_tab, sink_weight));
    for (size_t head = 0; head < verts.size(); ++head) {
        int n = static_cast<int>(verts[head].weight.size());
        for (int i = 1; i < n; ++i) {
            Vertex x = verts[head];  // copy: intern may reallocate verts
            Vertex next = x;
            if (x.weight[i - 1] != x.weight[i]) {
                std::swap(next.spectral[i - 1], next.spectral[i]);
                std::swap(next.weight[i - 1], next.weight[i]);
                std::swap(next.rank[i - 1], next.rank[i]);
            } else {
                auto swapped = swap_entries(x.tableau, x.rank[i - 1]);
                if (!swapped) continue;
                next.tableau = std::move(*swapped);
                std::swap(next.spectral[i - 1], next.spectral[i]);
            }
            if (filling(next.tableau, next.weight) != T)
                throw InvalidFilling("component closure left the filling class");
            intern(std::move(next));
        }
    }

    ComponentHT out;
    out.filling = T;
    std::sort(verts.begin(), verts.end(), [](const Vertex& a, const Vertex& b) {
        return std::tie(a.weight, a.tableau.rows) < std::tie(b.weight, b.tableau.rows);
    });
    out.vertices = std::move(verts);

    std::map<std::pair<Weight, std::vector<std::vector<int>>>, int> order;
    for (size_t id = 0; id < out.vertices.size(); ++id)
        order[{out.vertices[id].weight, out.vertices[id].tableau.rows}] =
            static_cast<int>(id);

    std::vector<bool> has_in(out.vertices.size(), false);
    std::vector<bool> has_out(out.vertices.size(), false);
    for (size_t id = 0; id < out.vertices.size(); ++id) {
        int n = static_cast<int>(out.vertices[id].weight.size());
        for (int i = 1; i < n; ++i) {
            ApplyResult res = apply_generator(out.vertices[id], i);
            if (!res.vertex) continue;
            auto it = order.find({res.vertex->weight, res.vertex->tableau.rows});
            if (it == order.end())
                throw InvalidFilling("component closure missed a vertex");
            out.edges.push_back(
                {static_cast<int>(id), it->second, res.label.kind, res.label.index});
            has_in[it->second] = true;
            has_out[id] = true;
        }
    }

    int roots = 0;
    for (size_t id = 0; id < out.vertices.size(); ++id) {
        if (!has_in[id]) {
            out.root = static_cast<int>(id);
            ++roots;
        }
    }
    if (roots != 1) throw InvalidFilling("component does not have a unique root");
    out.sink = order.at({sink_weight, sink_tab.rows});
    if (has_out[out.sink]) throw InvalidFilling("component sink has an outward edge");
    return out;
}

}  // namespace vvjack
