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

#include "vvjack/jack.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

#include "vvjack/errors.hpp"
#include "vvjack/shape_context.hpp"

namespace vvjack {

namespace {

// Follows one edge label from x; throws when the label is not an edge of
// the graph at x.
Vertex follow(const Vertex& x, const EdgeLabel& label) {
    if (label.kind == EdgeKind::Affine) {
        ApplyResult res = apply_affine(x);
        return *res.vertex;
    }
    if (label.kind != EdgeKind::Step && label.kind != EdgeKind::Jump) {
        throw std::invalid_argument("path may only hold steps, jumps and affine edges");
    }
    ApplyResult res = apply_generator(x, label.index);
    if (!res.vertex.has_value()) {
        throw std::invalid_argument("path label is not an edge at its vertex");
    }
    return *std::move(res.vertex);
}

// Spectral gap z[i+1] - z[i] at x, 1-based i; zero would make the step
// factor undefined, which no graph edge produces.
AlphaFrac spectral_gap(const Vertex& x, int i) {
    AlphaFrac gap = x.spectral[i] - x.spectral[i - 1];
    if (gap.is_zero()) {
        throw std::logic_error("degenerate spectral gap on a graph edge");
    }
    return gap;
}

int weight_pivot(const Weight& v) {
    int m = 1;
    for (int i = 1; i < static_cast<int>(v.size()); ++i) {
        if (v[i] > v[m - 1]) m = i + 1;
    }
    return m;
}

bool is_zero_weight(const Weight& v) {
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

AlphaFrac edge_value_factor(SymKind kind, const Vertex& from, int i) {
    AlphaFrac d = from.spectral[i - 1] - from.spectral[i];
    if (kind == SymKind::E) return d / (d + AlphaFrac(1));
    return d / (AlphaFrac(1) - d);
}

VvPoly assemble_family(const Filling& T, SymKind kind, bool shifted) {
    SymCoefficientTable table = sym_coefficients(T, kind);
    VvPoly sum((Shape(T.shape)));
    for (std::size_t k = 0; k < table.component.vertices.size(); ++k) {
        const Vertex& x = table.component.vertices[k];
        VvPoly jack = shifted ? shifted_jack(x.weight, x.tableau)
                              : nonsymmetric_jack(x.weight, x.tableau);
        sum.add_scaled(jack, table.values[k]);
    }
    return sum;
}

void require_weight_size(const Weight& v, const Tableau& tau) {
    if (static_cast<int>(v.size()) != shape_size(tau.shape)) {
        throw ShapeMismatch("weight length does not match the tableau size");
    }
    for (int x : v) {
        if (x < 0) throw DomainError("weight entries must be non-negative");
    }
}

}  // namespace

VvPoly nonsymmetric_jack(const Tableau& tau, const Path& path) {
    validate_tableau(tau);
    const auto& ctx = ShapeContext::get(tau.shape);
    Vertex at = make_vertex(tau, Weight(ctx.size(), 0));
    VvPoly jack = VvPoly::unit(tau.shape, ctx.index_of(tau));
    for (const EdgeLabel& label : path) {
        if (label.kind == EdgeKind::Affine) {
            jack = act_affine(jack);
        } else {
            AlphaFrac gap = spectral_gap(at, label.index);
            VvPoly next = act_si(jack, label.index);
            next.add_scaled(jack, gap.inverse());
            jack = std::move(next);
        }
        at = follow(at, label);
    }
    return jack;
}

VvPoly nonsymmetric_jack(const Weight& v, const Tableau& tau) {
    require_weight_size(v, tau);
    return nonsymmetric_jack(tau, canonical_path(v));
}

AlphaFrac norm_ratio(const Tableau& tau, const Path& path) {
    validate_tableau(tau);
    Vertex at = make_vertex(tau, Weight(shape_size(tau.shape), 0));
    const AlphaFrac alpha = AlphaFrac::alpha();
    AlphaFrac ratio(1);
    for (const EdgeLabel& label : path) {
        if (label.kind == EdgeKind::Affine) {
            ratio *= at.spectral[0] / alpha + AlphaFrac(1);
            at = follow(at, label);
        } else {
            at = follow(at, label);
            AlphaFrac g = spectral_gap(at, label.index);
            ratio *= (g - AlphaFrac(1)) * (g + AlphaFrac(1)) / (g * g);
        }
    }
    return ratio;
}

AlphaFrac norm_ratio(const Weight& v, const Tableau& tau) {
    require_weight_size(v, tau);
    return norm_ratio(tau, canonical_path(v));
}

AlphaFrac norm_squared(const Weight& v, const Tableau& tau) {
    return norm_ratio(v, tau) * tableau_norm(tau);
}

SymCoefficientTable sym_coefficients(const Filling& T, SymKind kind) {
    SymCoefficientTable table;
    table.component = component(T);
    table.kind = kind;
    const auto& comp = table.component;
    int n = static_cast<int>(comp.vertices.size());
    table.values.assign(n, AlphaFrac(0));
    table.depth.assign(n, -1);
    table.values[comp.root] = AlphaFrac(1);
    table.depth[comp.root] = 0;

    bool changed = true;
    while (changed) {
        changed = false;
        for (const ComponentEdge& e : comp.edges) {
            if (table.depth[e.from] < 0) continue;
            AlphaFrac value = table.values[e.from] *
                              edge_value_factor(kind, comp.vertices[e.from], e.index);
            if (table.depth[e.to] < 0) {
                table.values[e.to] = value;
                table.depth[e.to] = table.depth[e.from] + 1;
                changed = true;
            } else if (table.values[e.to] != value) {
                throw std::logic_error("coefficient recursion disagrees across paths");
            }
        }
    }
    for (int k = 0; k < n; ++k) {
        if (table.depth[k] < 0) {
            throw std::logic_error("component vertex unreachable from the root");
        }
    }
    return table;
}

VvPoly symmetric_jack(const Filling& T) {
    if (!is_column_strict(T)) {
        throw NotCompatible("symmetric family needs a column-strict filling");
    }
    return assemble_family(T, SymKind::E, false);
}

VvPoly antisymmetric_jack(const Filling& T) {
    if (!is_row_strict(T)) {
        throw NotCompatible("antisymmetric family needs a row-strict filling");
    }
    return assemble_family(T, SymKind::F, false);
}

MinimalIndex minimal_symmetric(const Shape& shape) {
    validate_shape(shape);
    MinimalIndex out;
    out.filling.shape = shape;
    for (std::size_t r = 0; r < shape.size(); ++r) {
        out.filling.rows.emplace_back(shape[r], static_cast<int>(r));
    }
    for (int l = static_cast<int>(shape.size()); l >= 1; --l) {
        out.weight.insert(out.weight.end(), shape[l - 1], l - 1);
    }
    return out;
}

MinimalIndex minimal_antisymmetric(const Shape& shape) {
    validate_shape(shape);
    MinimalIndex out;
    out.filling.shape = shape;
    for (int part : shape) {
        std::vector<int> row(part);
        for (int c = 0; c < part; ++c) row[c] = c;
        out.filling.rows.push_back(std::move(row));
    }
    Shape conj = conjugate_shape(shape);
    for (int c = shape[0]; c >= 1; --c) {
        out.weight.insert(out.weight.end(), conj[c - 1], c - 1);
    }
    return out;
}

VvPoly restrict_jack(const Weight& v, const Tableau& tau, int M) {
    require_weight_size(v, tau);
    int n = shape_size(tau.shape);
    if (M < 1 || M > n) throw DomainError("restriction size out of range");
    if (!has_property_R(tau, M)) {
        throw PropertyRViolation("tableau does not restrict to a partition");
    }
    for (int i = M; i < n; ++i) {
        if (v[i] != 0) {
            throw NonzeroTail("weight must vanish past the restriction size");
        }
    }
    Tableau small = restrict_tableau(tau, M);
    const Shape& gamma = small.shape;
    const auto& big_ctx = ShapeContext::get(tau.shape);
    const auto& small_ctx = ShapeContext::get(gamma);

    VvPoly big = nonsymmetric_jack(v, tau);
    VvPoly out((Shape(gamma)));
    // Terms whose truncated tableau is not a translated partition of the
    // target shape have to cancel among themselves; they are keyed by the
    // translated box positions of 1..M.
    std::map<std::pair<std::vector<int>, std::vector<std::pair<int, int>>>,
             AlphaFrac>
        leftovers;
    for (const auto& [key, c] : big.terms()) {
        bool survives = true;
        for (int i = M; i < n; ++i) {
            if (key.exp[i] != 0) {
                survives = false;
                break;
            }
        }
        if (!survives) continue;
        std::vector<int> exp(key.exp.begin(), key.exp.begin() + M);
        const Tableau& rho = big_ctx.tableau(key.tab);
        if (has_property_R(rho, M)) {
            Tableau cut = restrict_tableau(rho, M);
            if (cut.shape == gamma) {
                out.add_term(std::move(exp), small_ctx.index_of(cut), c);
                continue;
            }
        }
        auto pos = entry_positions(rho);
        pos.resize(M);
        int r0 = pos[0].first, c0 = pos[0].second;
        for (const auto& [r, cc] : pos) {
            r0 = std::min(r0, r);
            c0 = std::min(c0, cc);
        }
        for (auto& [r, cc] : pos) {
            r -= r0 - 1;
            cc -= c0 - 1;
        }
        auto& slot = leftovers[{std::move(exp), std::move(pos)}];
        slot += c;
    }
    for (const auto& [key, c] : leftovers) {
        if (!c.is_zero()) {
            throw std::logic_error("restriction left a stray skew term");
        }
    }
    return out;
}

VvPoly shifted_jack(const Tableau& tau, const Path& path) {
    validate_tableau(tau);
    const auto& ctx = ShapeContext::get(tau.shape);
    Vertex at = make_vertex(tau, Weight(ctx.size(), 0));
    VvPoly jack = VvPoly::unit(tau.shape, ctx.index_of(tau));
    for (const EdgeLabel& label : path) {
        if (label.kind == EdgeKind::Affine) {
            jack = shifted_psi_hat(jack);
        } else {
            AlphaFrac gap = spectral_gap(at, label.index);
            VvPoly next = varsigma(jack, label.index);
            next.add_scaled(jack, gap.inverse());
            jack = std::move(next);
        }
        at = follow(at, label);
    }
    return jack;
}

VvPoly shifted_jack(const Weight& v, const Tableau& tau) {
    require_weight_size(v, tau);
    return shifted_jack(tau, canonical_path(v));
}

VvPoly shifted_symmetric_jack(const Filling& T) {
    if (!is_column_strict(T)) {
        throw NotCompatible("symmetric family needs a column-strict filling");
    }
    return assemble_family(T, SymKind::E, true);
}

VvPoly shifted_antisymmetric_jack(const Filling& T) {
    if (!is_row_strict(T)) {
        throw NotCompatible("antisymmetric family needs a row-strict filling");
    }
    return assemble_family(T, SymKind::F, true);
}

VanishingVector vanishing_vector(const Weight& v, const Tableau& tau) {
    require_weight_size(v, tau);
    int n = static_cast<int>(v.size());
    const std::vector<int> ct = content_vector(tau);
    const Perm sigma = rank_permutation(v);
    int top = *std::max_element(v.begin(), v.end());
    VanishingVector out;
    out.pivot = weight_pivot(v);
    out.entries.reserve(n);
    for (int i = 0; i < n; ++i) {
        out.entries.push_back(AlphaFrac::linear(
            top - v[i], ct[0] - ct[sigma[i] - 1] - n + 1));
    }
    return out;
}

std::vector<VanishingVector> propagate_vanishings(const Weight& v,
                                                  const Tableau& tau) {
    require_weight_size(v, tau);
    if (is_zero_weight(v)) {
        throw DomainError("zero weight has no vanishing point");
    }
    int n = static_cast<int>(v.size());
    const AlphaFrac alpha = AlphaFrac::alpha();
    Vertex at = make_vertex(tau, Weight(n, 0));
    std::vector<AlphaFrac> cur = vanishing_vector(at.weight, tau).entries;
    std::vector<std::vector<AlphaFrac>> fulls;

    auto enroll = [&]() {
        if (weight_pivot(at.weight) != 1) return;
        if (std::find(fulls.begin(), fulls.end(), cur) == fulls.end()) {
            fulls.push_back(cur);
        }
    };

    for (const EdgeLabel& label : canonical_path(v)) {
        if (label.kind == EdgeKind::Affine) {
            for (auto& p : fulls) {
                std::rotate(p.begin(), p.begin() + 1, p.end());
                p.back() += alpha;
            }
            int m = weight_pivot(at.weight);
            std::rotate(cur.begin(), cur.begin() + 1, cur.end());
            if (m > 1) {
                cur.back() -= alpha;
            } else {
                for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
                    cur[k] += alpha;
                }
            }
        } else {
            int i = label.index;
            AlphaFrac gap = spectral_gap(at, i);
            std::vector<std::vector<AlphaFrac>> kept;
            for (auto& p : fulls) {
                if (p[i - 1] - p[i] == gap) {
                    std::swap(p[i - 1], p[i]);
                    kept.push_back(std::move(p));
                }
            }
            fulls = std::move(kept);
            std::swap(cur[i - 1], cur[i]);
        }
        at = follow(at, label);
        enroll();
    }

    VanishingVector main = vanishing_vector(v, tau);
    if (cur != main.entries) {
        throw std::logic_error("vanishing transport drifted from the formula");
    }
    std::vector<VanishingVector> out{main};
    for (auto& p : fulls) {
        if (main.pivot == 1 && p == main.entries) continue;
        out.push_back(VanishingVector{std::move(p), 1});
    }
    return out;
}

}  // namespace vvjack
