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

// Per-shape lookup tables: the tableau list (whose positions are the stable
// indices used by module vectors and serialized output), contents, entry
// swaps and the Murphy coefficients.  Built once per shape and shared.

#ifndef VVJACK_SHAPE_CONTEXT_HPP
#define VVJACK_SHAPE_CONTEXT_HPP

#include <map>
#include <vector>

#include "vvjack/alpha.hpp"
#include "vvjack/combinatorics.hpp"

namespace vvjack {

class ShapeContext {
public:
    static const ShapeContext& get(const Shape& shape);

    const Shape& shape() const { return shape_; }
    int size() const { return n_; }  // number of boxes
    int count() const { return static_cast<int>(tableaux_.size()); }
    const std::vector<Tableau>& tableaux() const { return tableaux_; }
    const Tableau& tableau(int t) const { return tableaux_[t]; }
    int index_of(const Tableau& tau) const;  // throws InvalidFilling
    const std::vector<int>& contents(int t) const { return contents_[t]; }
    // index of the tableau with entries k, k+1 swapped, or -1
    int swap_target(int t, int k) const { return swaps_[t][k - 1]; }
    // 1/(CT[k] - CT[k+1])
    const BigRat& b_coeff(int t, int k) const { return bs_[t][k - 1]; }
    const AlphaFrac& norm(int t) const { return norms_[t]; }
    int root() const { return root_; }  // index of the column-filled tableau

private:
    explicit ShapeContext(const Shape& shape);

    Shape shape_;
    int n_ = 0;
    std::vector<Tableau> tableaux_;
    std::map<std::vector<std::vector<int>>, int> index_;
    std::vector<std::vector<int>> contents_;
    std::vector<std::vector<int>> swaps_;
    std::vector<std::vector<BigRat>> bs_;
    std::vector<AlphaFrac> norms_;
    int root_ = 0;
};

}  // namespace vvjack

#endif  // VVJACK_SHAPE_CONTEXT_HPP
