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

// Partitions, reverse standard tableaux, contents, rank permutations and
// the small combinatorial maps the rest of the library is built on.
//
// Conventions used everywhere:
//   - A Shape is a weakly decreasing list of positive parts; row 1 (index 0)
//     is the longest row.  The box in row r, column c (1-based) has content
//     c - r.
//   - A Tableau of size N holds each of 1..N exactly once, strictly
//     decreasing left to right in every row and strictly decreasing down
//     every column.
//   - Permutations are 1-based image lists; compose(a, b)[i] = a[b[i]].

#ifndef VVJACK_COMBINATORICS_HPP
#define VVJACK_COMBINATORICS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "vvjack/alpha.hpp"

namespace vvjack {

using Shape = std::vector<int>;
using Weight = std::vector<int>;
using Perm = std::vector<int>;

struct Tableau {
    Shape shape;
    std::vector<std::vector<int>> rows;

    bool operator==(const Tableau&) const = default;
    bool operator<(const Tableau& other) const { return rows < other.rows; }
};

// Arbitrary non-negative grid over a shape; produced by writing the sorted
// weight into a tableau entry by entry.
struct Filling {
    Shape shape;
    std::vector<std::vector<int>> rows;

    bool operator==(const Filling&) const = default;
    bool operator<(const Filling& other) const { return rows < other.rows; }
};

int shape_size(const Shape& shape);
void validate_shape(const Shape& shape);  // throws InvalidShape
Shape conjugate_shape(const Shape& shape);

Tableau make_tableau(std::vector<std::vector<int>> rows);  // validates
void validate_tableau(const Tableau& tau);  // throws InvalidFilling
bool is_valid_rst(const std::vector<std::vector<int>>& rows);

// (row, col) of each entry, 1-based; slot i-1 describes entry i.
std::vector<std::pair<int, int>> entry_positions(const Tableau& tau);
std::vector<int> content_vector(const Tableau& tau);
int inversions(const Tableau& tau);
Tableau transpose(const Tableau& tau);

// All tableaux of the given shape, sorted by their concatenated row word
// (row 1 first).  Indices into this list are the stable tableau ids used in
// serialized output.
std::vector<Tableau> enumerate_rst(const Shape& shape);

// Root tableau: fill columns left to right, each column from row 1 down,
// with N, N-1, ..., 1.
Tableau tau_lambda(const Shape& shape);

// Swap the boxes holding i and i+1 when the result is again a tableau.
std::optional<Tableau> swap_entries(const Tableau& tau, int i);

// 1/(CT[i] - CT[i+1]), 1 <= i <= N-1.
BigRat b_coefficient(const Tableau& tau, int i);

// Product over pairs i < j with CT[i] <= CT[j] - 2 of
// (d - 1)(d + 1)/d^2 where d = CT[i] - CT[j]; a rational constant.
AlphaFrac tableau_norm(const Tableau& tau);

Weight sorted_weight(const Weight& v);  // decreasing rearrangement
// Unique shortest sigma with v[i] = sorted[sigma[i]]; equal values ranked
// left to right.
Perm rank_permutation(const Weight& v);
Weight affine_psi(const Weight& v);  // [v2, ..., vN, v1 + 1]
// Distance from the zero weight in the construction graph: |v| plus, for
// every pair i < j, eps(v[i] - v[j]) with eps(x) = (|x| + |x+1| - 1)/2.
long step_count(const Weight& v);
long step_eps(long x);

Filling filling(const Tableau& tau, const Weight& v);
Weight filling_weight(const Filling& T);  // grid values, sorted decreasing
Tableau standardize(const Filling& T);
bool is_column_strict(const Filling& T);
bool is_row_strict(const Filling& T);

bool has_property_R(const Tableau& tau, int M);
// Boxes holding 1..M, translated back to a partition shape.  Throws
// PropertyRViolation when those boxes do not form one.
Tableau restrict_tableau(const Tableau& tau, int M);

Perm identity_perm(int n);
Perm compose(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& p);
long perm_inversions(const Perm& p);
// Adjacent-transposition word w with p = s_{w[0]} s_{w[1]} ... (applied
// leftmost first under a right action); length equals perm_inversions(p).
std::vector<int> sorting_word(const Perm& p);

}  // namespace vvjack

#endif  // VVJACK_COMBINATORICS_HPP
