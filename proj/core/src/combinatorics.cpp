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

#include "vvjack/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "vvjack/errors.hpp"

namespace vvjack {

int shape_size(const Shape& shape) {
    int n = 0;
    for (int part : shape) n += part;
    return n;
}

void validate_shape(const Shape& shape) {
    if (shape.empty()) throw InvalidShape("shape must have at least one part");
    for (size_t r = 0; r < shape.size(); ++r) {
        if (shape[r] < 1) throw InvalidShape("shape parts must be positive");
        if (r + 1 < shape.size() && shape[r + 1] > shape[r])
            throw InvalidShape("shape parts must be weakly decreasing");
    }
}

Shape conjugate_shape(const Shape& shape) {
    Shape cols(shape.empty() ? 0 : shape[0], 0);
    for (int part : shape)
        for (int c = 0; c < part; ++c) ++cols[c];
    return cols;
}

bool is_valid_rst(const std::vector<std::vector<int>>& rows) {
    int n = 0;
    for (const auto& row : rows) n += static_cast<int>(row.size());
    std::vector<bool> seen(n + 1, false);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) return false;
        if (r + 1 < rows.size() && rows[r + 1].size() > rows[r].size()) return false;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            int e = rows[r][c];
            if (e < 1 || e > n || seen[e]) return false;
            seen[e] = true;
            if (c + 1 < rows[r].size() && rows[r][c + 1] >= e) return false;
            if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] >= e)
                return false;
        }
    }
    return true;
}

Tableau make_tableau(std::vector<std::vector<int>> rows) {
    Tableau tau;
    for (const auto& row : rows) tau.shape.push_back(static_cast<int>(row.size()));
    tau.rows = std::move(rows);
    validate_tableau(tau);
    return tau;
}

void validate_tableau(const Tableau& tau) {
    validate_shape(tau.shape);
    if (tau.rows.size() != tau.shape.size())
        throw InvalidFilling("row count does not match shape");
    for (size_t r = 0; r < tau.rows.size(); ++r)
        if (static_cast<int>(tau.rows[r].size()) != tau.shape[r])
            throw InvalidFilling("row length does not match shape");
    if (!is_valid_rst(tau.rows))
        throw InvalidFilling("entries are not strictly decreasing along rows and columns");
}

std::vector<std::pair<int, int>> entry_positions(const Tableau& tau) {
    int n = shape_size(tau.shape);
    std::vector<std::pair<int, int>> pos(n);
    for (size_t r = 0; r < tau.rows.size(); ++r)
        for (size_t c = 0; c < tau.rows[r].size(); ++c)
            pos[tau.rows[r][c] - 1] = {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
    return pos;
}

std::vector<int> content_vector(const Tableau& tau) {
    auto pos = entry_positions(tau);
    std::vector<int> ct(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) ct[i] = pos[i].second - pos[i].first;
    return ct;
}

int inversions(const Tableau& tau) {
    auto pos = entry_positions(tau);
    int count = 0;
    for (size_t i = 0; i < pos.size(); ++i)
        for (size_t j = i + 1; j < pos.size(); ++j)
            if (pos[i].first > pos[j].first) ++count;
    return count;
}

Tableau transpose(const Tableau& tau) {
    Tableau out;
    out.shape = conjugate_shape(tau.shape);
    out.rows.resize(out.shape.size());
    for (size_t r = 0; r < out.rows.size(); ++r) out.rows[r].resize(out.shape[r]);
    for (size_t r = 0; r < tau.rows.size(); ++r)
        for (size_t c = 0; c < tau.rows[r].size(); ++c)
            out.rows[c][r] = tau.rows[r][c];
    return out;
}

namespace {

// Every tableau places 1 in a removable corner; recurse on the shape with
// that corner deleted, then relabel the smaller tableau up by one.
std::vector<std::vector<std::vector<int>>> all_rst_grids(const Shape& shape) {
    if (shape.empty()) return {{}};
    std::vector<std::vector<std::vector<int>>> result;
    for (size_t r = 0; r < shape.size(); ++r) {
        bool corner = (r + 1 == shape.size()) || shape[r + 1] < shape[r];
        if (!corner) continue;
        Shape smaller = shape;
        if (--smaller[r] == 0) smaller.pop_back();
        for (auto sub : all_rst_grids(smaller)) {
            for (auto& row : sub)
                for (int& e : row) ++e;
            if (r == sub.size()) sub.emplace_back();
            sub[r].push_back(1);
            result.push_back(std::move(sub));
        }
    }
    return result;
}

}  // namespace

std::vector<Tableau> enumerate_rst(const Shape& shape) {
    validate_shape(shape);
    auto grids = all_rst_grids(shape);
    std::vector<Tableau> tabs;
    tabs.reserve(grids.size());
    for (auto& grid : grids) tabs.push_back(Tableau{shape, std::move(grid)});
    std::sort(tabs.begin(), tabs.end());
    return tabs;
}

Tableau tau_lambda(const Shape& shape) {
    validate_shape(shape);
    Tableau tau;
    tau.shape = shape;
    tau.rows.resize(shape.size());
    for (size_t r = 0; r < shape.size(); ++r) tau.rows[r].resize(shape[r]);
    Shape cols = conjugate_shape(shape);
    int next = shape_size(shape);
    for (size_t c = 0; c < cols.size(); ++c)
        for (int r = 0; r < cols[c]; ++r) tau.rows[r][c] = next--;
    return tau;
}

std::optional<Tableau> swap_entries(const Tableau& tau, int i) {
    auto pos = entry_positions(tau);
    int n = static_cast<int>(pos.size());
    if (i < 1 || i >= n) return std::nullopt;
    Tableau swapped = tau;
    auto [r1, c1] = pos[i - 1];
    auto [r2, c2] = pos[i];
    swapped.rows[r1 - 1][c1 - 1] = i + 1;
    swapped.rows[r2 - 1][c2 - 1] = i;
    if (!is_valid_rst(swapped.rows)) return std::nullopt;
    return swapped;
}

BigRat b_coefficient(const Tableau& tau, int i) {
    auto ct = content_vector(tau);
    BigRat b(1, ct[i - 1] - ct[i]);
    b.canonicalize();
    return b;
}

AlphaFrac tableau_norm(const Tableau& tau) {
    auto ct = content_vector(tau);
    BigRat prod(1);
    for (size_t i = 0; i < ct.size(); ++i)
        for (size_t j = i + 1; j < ct.size(); ++j) {
            if (ct[i] > ct[j] - 2) continue;
            long d = ct[i] - ct[j];
            BigRat factor((d - 1) * (d + 1), d * d);
            factor.canonicalize();
            prod *= factor;
        }
    return AlphaFrac(prod);
}

Weight sorted_weight(const Weight& v) {
    Weight sorted = v;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    return sorted;
}

Perm rank_permutation(const Weight& v) {
    int n = static_cast<int>(v.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&v](int a, int b) { return v[a] > v[b]; });
    Perm sigma(n);
    for (int rank = 0; rank < n; ++rank) sigma[order[rank]] = rank + 1;
    return sigma;
}

Weight affine_psi(const Weight& v) {
    Weight out(v.begin() + 1, v.end());
    out.push_back(v[0] + 1);
    return out;
}

long step_eps(long x) { return x >= 0 ? x : -x - 1; }

long step_count(const Weight& v) {
    long total = 0;
    for (int e : v) total += e;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) total += step_eps(v[i] - v[j]);
    return total;
}

Filling filling(const Tableau& tau, const Weight& v) {
    int n = shape_size(tau.shape);
    if (static_cast<int>(v.size()) != n)
        throw ShapeMismatch("weight length does not match tableau size");
    Weight vplus = sorted_weight(v);
    Filling T;
    T.shape = tau.shape;
    T.rows = tau.rows;
    for (auto& row : T.rows)
        for (int& e : row) e = vplus[e - 1];
    return T;
}

Weight filling_weight(const Filling& T) {
    Weight values;
    for (const auto& row : T.rows) values.insert(values.end(), row.begin(), row.end());
    std::sort(values.begin(), values.end(), std::greater<int>());
    return values;
}

Tableau standardize(const Filling& T) {
    std::vector<int> values;
    for (const auto& row : T.rows) values.insert(values.end(), row.begin(), row.end());
    int n = static_cast<int>(values.size());
    // Entry for a box: one plus the number of strictly larger values anywhere
    // plus the number of equal values strictly later in reading order.
    std::vector<int> labels(n);
    for (int k = 0; k < n; ++k) {
        int larger = 0, equal_after = 0;
        for (int m = 0; m < n; ++m) {
            if (values[m] > values[k]) ++larger;
            else if (values[m] == values[k] && m > k) ++equal_after;
        }
        labels[k] = larger + equal_after + 1;
    }
    Tableau tau;
    tau.shape = T.shape;
    tau.rows.resize(T.rows.size());
    int k = 0;
    for (size_t r = 0; r < T.rows.size(); ++r)
        for (size_t c = 0; c < T.rows[r].size(); ++c) tau.rows[r].push_back(labels[k++]);
    if (!is_valid_rst(tau.rows))
        throw InvalidFilling("filling does not standardize to a tableau");
    return tau;
}

bool is_column_strict(const Filling& T) {
    for (size_t r = 1; r < T.rows.size(); ++r)
        for (size_t c = 0; c < T.rows[r].size(); ++c)
            if (T.rows[r][c] <= T.rows[r - 1][c]) return false;
    return true;
}

bool is_row_strict(const Filling& T) {
    for (const auto& row : T.rows)
        for (size_t c = 1; c < row.size(); ++c)
            if (row[c] <= row[c - 1]) return false;
    return true;
}

bool has_property_R(const Tableau& tau, int M) {
    int n = shape_size(tau.shape);
    if (M < 1 || M > n) throw DomainError("restriction index out of range");
    auto pos = entry_positions(tau);
    int rmin = pos[0].first, cmin = pos[0].second;
    for (int e = 1; e < M; ++e) {
        rmin = std::min(rmin, pos[e].first);
        cmin = std::min(cmin, pos[e].second);
    }
    std::map<int, std::set<int>> cols_by_row;
    for (int e = 0; e < M; ++e)
        cols_by_row[pos[e].first - rmin].insert(pos[e].second - cmin);
    int prev_len = -1;
    int expected_row = 0;
    for (const auto& [row, cols] : cols_by_row) {
        if (row != expected_row++) return false;
        int len = static_cast<int>(cols.size());
        if (*cols.begin() != 0 || *cols.rbegin() != len - 1) return false;
        if (prev_len >= 0 && len > prev_len) return false;
        prev_len = len;
    }
    return true;
}

Tableau restrict_tableau(const Tableau& tau, int M) {
    if (!has_property_R(tau, M))
        throw PropertyRViolation("boxes holding 1.." + std::to_string(M) +
                                 " do not form a translated partition");
    auto pos = entry_positions(tau);
    int rmin = pos[0].first, cmin = pos[0].second;
    for (int e = 1; e < M; ++e) {
        rmin = std::min(rmin, pos[e].first);
        cmin = std::min(cmin, pos[e].second);
    }
    int rmax = 0;
    for (int e = 0; e < M; ++e) rmax = std::max(rmax, pos[e].first - rmin);
    std::vector<std::vector<int>> rows(rmax + 1);
    for (int e = 0; e < M; ++e) {
        auto& row = rows[pos[e].first - rmin];
        size_t c = pos[e].second - cmin;
        if (row.size() <= c) row.resize(c + 1);
        row[c] = e + 1;
    }
    return make_tableau(std::move(rows));
}

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Perm compose(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (size_t i = 0; i < b.size(); ++i) out[i] = a[b[i] - 1];
    return out;
}

Perm inverse_perm(const Perm& p) {
    Perm out(p.size());
    for (size_t i = 0; i < p.size(); ++i) out[p[i] - 1] = static_cast<int>(i) + 1;
    return out;
}

long perm_inversions(const Perm& p) {
    long count = 0;
    for (size_t i = 0; i < p.size(); ++i)
        for (size_t j = i + 1; j < p.size(); ++j)
            if (p[i] > p[j]) ++count;
    return count;
}

std::vector<int> sorting_word(const Perm& p) {
    Perm cur = p;
    std::vector<int> swaps;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] > cur[i + 1]) {
                std::swap(cur[i], cur[i + 1]);
                swaps.push_back(static_cast<int>(i) + 1);
                moved = true;
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

}  // namespace vvjack
