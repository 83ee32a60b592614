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

#include "vvjack/shape_context.hpp"

#include <memory>
#include <mutex>

#include "vvjack/errors.hpp"

namespace vvjack {

ShapeContext::ShapeContext(const Shape& shape) : shape_(shape) {
    validate_shape(shape);
    n_ = shape_size(shape);
    tableaux_ = enumerate_rst(shape);
    const int count = static_cast<int>(tableaux_.size());
    contents_.resize(count);
    swaps_.resize(count);
    bs_.resize(count);
    norms_.reserve(count);
    for (int t = 0; t < count; ++t) {
        index_[tableaux_[t].rows] = t;
        contents_[t] = content_vector(tableaux_[t]);
        norms_.push_back(tableau_norm(tableaux_[t]));
    }
    const Tableau root_tab = tau_lambda(shape);
    root_ = index_.at(root_tab.rows);
    for (int t = 0; t < count; ++t) {
        swaps_[t].assign(n_ > 0 ? n_ - 1 : 0, -1);
        bs_[t].reserve(n_ > 0 ? n_ - 1 : 0);
        for (int k = 1; k < n_; ++k) {
            if (auto swapped = swap_entries(tableaux_[t], k))
                swaps_[t][k - 1] = index_.at(swapped->rows);
            bs_[t].push_back(b_coefficient(tableaux_[t], k));
        }
    }
}

const ShapeContext& ShapeContext::get(const Shape& shape) {
    static std::mutex mutex;
    static std::map<Shape, std::unique_ptr<ShapeContext>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = registry.find(shape);
    if (it == registry.end()) {
        auto ctx = std::unique_ptr<ShapeContext>(new ShapeContext(shape));
        it = registry.emplace(shape, std::move(ctx)).first;
    }
    return *it->second;
}

int ShapeContext::index_of(const Tableau& tau) const {
    auto it = index_.find(tau.rows);
    if (it == index_.end())
        throw InvalidFilling("tableau does not belong to this shape");
    return it->second;
}

}  // namespace vvjack
