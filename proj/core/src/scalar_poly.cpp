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

#include "vvjack/scalar_poly.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <sstream>

#include "vvjack/errors.hpp"
#include "vvjack/shape_context.hpp"

namespace vvjack {

namespace {

int total(const std::vector<int>& v) {
    return std::accumulate(v.begin(), v.end(), 0);
}

std::vector<int> sorted_desc(std::vector<int> v) {
    std::sort(v.begin(), v.end(), std::greater<int>());
    return v;
}

// Partial sums of u never exceed those of v.
bool sums_below(const std::vector<int>& u, const std::vector<int>& v) {
    int su = 0, sv = 0;
    for (size_t k = 0; k < u.size(); ++k) {
        su += u[k];
        sv += v[k];
        if (su > sv) return false;
    }
    return true;
}

}  // namespace

bool ExpOrder::operator()(const std::vector<int>& a,
                          const std::vector<int>& b) const {
    const int da = total(a), db = total(b);
    if (da != db) return da > db;
    const auto sa = sorted_desc(a), sb = sorted_desc(b);
    if (sa != sb) return sa > sb;
    return a > b;
}

bool dominated_by(const Weight& u, const Weight& v) {
    if (u.size() != v.size())
        throw ShapeMismatch("dominance needs equal lengths");
    if (u == v) return true;
    const auto su = sorted_desc(u), sv = sorted_desc(v);
    if (su == sv) return sums_below(u, v);
    return sums_below(su, sv);
}

ScalarPoly ScalarPoly::one(int vars) {
    ScalarPoly p(vars);
    p.add_term(std::vector<int>(vars, 0), 1);
    return p;
}

ScalarPoly ScalarPoly::variable(int vars, int i) {
    ScalarPoly p(vars);
    std::vector<int> exp(vars, 0);
    exp[i - 1] = 1;
    p.add_term(std::move(exp), 1);
    return p;
}

void ScalarPoly::add_term(std::vector<int> exp, const BigRat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(std::move(exp), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ScalarPoly ScalarPoly::operator-() const {
    ScalarPoly r(vars_);
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, -c);
    return r;
}

ScalarPoly& ScalarPoly::operator+=(const ScalarPoly& o) {
    if (vars_ != o.vars_)
        throw ShapeMismatch("polynomials in different variable counts");
    for (const auto& [exp, c] : o.terms_) add_term(exp, c);
    return *this;
}

ScalarPoly& ScalarPoly::operator-=(const ScalarPoly& o) {
    if (vars_ != o.vars_)
        throw ShapeMismatch("polynomials in different variable counts");
    for (const auto& [exp, c] : o.terms_) add_term(exp, -c);
    return *this;
}

ScalarPoly ScalarPoly::operator*(const ScalarPoly& o) const {
    if (vars_ != o.vars_)
        throw ShapeMismatch("polynomials in different variable counts");
    ScalarPoly r(vars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            std::vector<int> exp(vars_);
            for (int k = 0; k < vars_; ++k) exp[k] = ea[k] + eb[k];
            r.add_term(std::move(exp), ca * cb);
        }
    return r;
}

ScalarPoly ScalarPoly::scale(const BigRat& s) const {
    ScalarPoly r(vars_);
    if (s == 0) return r;
    for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, c * s);
    return r;
}

ScalarPoly ScalarPoly::swap_vars(int i, int j) const {
    ScalarPoly r(vars_);
    for (const auto& [exp, c] : terms_) {
        std::vector<int> e = exp;
        std::swap(e[i - 1], e[j - 1]);
        r.add_term(std::move(e), c);
    }
    return r;
}

std::pair<std::vector<int>, BigRat> ScalarPoly::leading() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
    return *terms_.begin();
}

std::string ScalarPoly::to_string(const char* var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exp, c] : terms_) {
        BigRat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        const bool constant =
            std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
        if (a != 1 || constant) {
            out << a.get_str();
            if (!constant) out << "*";
        }
        bool started = false;
        for (int k = 0; k < vars_; ++k) {
            if (exp[k] == 0) continue;
            if (started) out << "*";
            started = true;
            out << var << (k + 1);
            if (exp[k] > 1) out << "^" << exp[k];
        }
    }
    return out.str();
}

ScalarPoly scalar_jucys_murphy(const ScalarPoly& p, int i) {
    ScalarPoly r(p.vars());
    for (int j = i + 1; j <= p.vars(); ++j) r += p.swap_vars(i, j);
    return r;
}

ScalarPoly seminormal(const Tableau& tau) {
    const auto& ctx = ShapeContext::get(tau.shape);
    const int n = ctx.size();
    const int target = ctx.index_of(tau);

    std::vector<ScalarPoly> found(ctx.count());
    std::vector<bool> have(ctx.count(), false);

    // Product over columns of the differences t_lower - t_upper, one factor
    // per pair of boxes in a column (the deeper box first).
    ScalarPoly start = ScalarPoly::one(n);
    const Tableau root = ctx.tableau(ctx.root());
    const int cols = root.shape.empty() ? 0 : root.shape[0];
    for (int c = 0; c < cols; ++c) {
        std::vector<int> column;
        for (const auto& row : root.rows)
            if (c < static_cast<int>(row.size())) column.push_back(row[c]);
        for (size_t hi = 0; hi < column.size(); ++hi)
            for (size_t lo = 0; lo < hi; ++lo)
                start = start * (ScalarPoly::variable(n, column[hi]) -
                                 ScalarPoly::variable(n, column[lo]));
    }
    found[ctx.root()] = start;
    have[ctx.root()] = true;

    std::deque<int> queue = {ctx.root()};
    while (!queue.empty() && !have[target]) {
        const int t = queue.front();
        queue.pop_front();
        const auto& ct = ctx.contents(t);
        for (int k = 1; k < n; ++k) {
            const int t2 = ctx.swap_target(t, k);
            if (t2 < 0 || have[t2]) continue;
            if (ct[k - 1] - ct[k] < 2) continue;  // forward direction only
            const BigRat b = ctx.b_coeff(t, k);
            found[t2] = found[t].swap_vars(k, k + 1) - found[t].scale(b);
            have[t2] = true;
            queue.push_back(t2);
        }
    }
    return found[target];
}

ScalarPoly restrict_scalar(const ScalarPoly& p, const Tableau& tau, int M) {
    const int n = shape_size(tau.shape);
    if (p.vars() != n)
        throw ShapeMismatch("polynomial and tableau sizes differ");
    if (!has_property_R(tau, M))
        throw PropertyRViolation("tableau does not restrict at this M");
    const Shape colsum = conjugate_shape(tau.shape);
    const auto pos = entry_positions(tau);
    std::vector<int> tail(n - M);
    for (int i = M + 1; i <= n; ++i) {
        const auto [row, col] = pos[i - 1];
        tail[i - M - 1] = colsum[col - 1] - row;
    }
    ScalarPoly r(M);
    for (const auto& [exp, c] : p.terms()) {
        bool match = true;
        for (int i = M; i < n && match; ++i) match = exp[i] == tail[i - M];
        if (!match) continue;
        r.add_term(std::vector<int>(exp.begin(), exp.begin() + M), c);
    }
    return r;
}

}  // namespace vvjack
