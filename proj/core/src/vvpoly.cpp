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

#include "vvjack/vvpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "vvjack/errors.hpp"

namespace vvjack {

namespace {

const AlphaFrac& inverse_alpha() {
    static const AlphaFrac v(AlphaPoly(1), AlphaPoly::variable());
    return v;
}

// s_i s_{i+1} ... s_{j-1} ... s_{i+1} s_i, the transposition (i j) for i < j.
std::vector<int> transposition_word(int i, int j) {
    std::vector<int> word;
    word.reserve(2 * (j - i) - 1);
    for (int k = i; k < j; ++k) word.push_back(k);
    for (int k = j - 2; k >= i; --k) word.push_back(k);
    return word;
}

// Terms of (x^u - x^{u with slots i, j exchanged}) / (x_i - x_j); every
// coefficient is +1 or -1. The denominator is ordered, so exchanging the
// roles of i and j flips the sign.
std::vector<std::pair<std::vector<int>, int>> divided_diff(
    const std::vector<int>& u, int i, int j) {
    const int a = u[i - 1], b = u[j - 1];
    std::vector<std::pair<std::vector<int>, int>> out;
    if (a == b) return out;
    const int lo = std::min(a, b), hi = std::max(a, b);
    const int sign = a > b ? 1 : -1;
    out.reserve(hi - lo);
    for (int k = lo; k < hi; ++k) {
        std::vector<int> e = u;
        e[i - 1] = k;
        e[j - 1] = a + b - 1 - k;
        out.emplace_back(std::move(e), sign);
    }
    return out;
}

BigInt binomial(unsigned n, unsigned k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace

void ModuleVector::add(int tab, const AlphaFrac& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coords.emplace(tab, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coords.erase(it);
    }
}

ModuleVector module_unit(const Shape& shape, int tab) {
    const auto& ctx = ShapeContext::get(shape);
    if (tab < 0 || tab >= ctx.count())
        throw std::invalid_argument("tableau id out of range");
    ModuleVector m{shape, {}};
    m.coords.emplace(tab, AlphaFrac(1));
    return m;
}

ModuleVector module_scale(const ModuleVector& m, const AlphaFrac& c) {
    ModuleVector r{m.shape, {}};
    for (const auto& [t, v] : m.coords) r.add(t, v * c);
    return r;
}

ModuleVector module_add(const ModuleVector& x, const ModuleVector& y) {
    if (x.shape != y.shape)
        throw ShapeMismatch("module vectors over different shapes");
    ModuleVector r = x;
    for (const auto& [t, v] : y.coords) r.add(t, v);
    return r;
}

ModuleVector murphy_si(const ModuleVector& m, int i) {
    const auto& ctx = ShapeContext::get(m.shape);
    if (i < 1 || i >= ctx.size())
        throw std::invalid_argument("generator index out of range");
    ModuleVector r{m.shape, {}};
    for (const auto& [t, c] : m.coords) {
        const BigRat& b = ctx.b_coeff(t, i);
        const int t2 = ctx.swap_target(t, i);
        r.add(t, c * b);
        if (t2 < 0) continue;
        if (sgn(b) > 0) {
            r.add(t2, c);
        } else {
            const BigRat w = BigRat(1) - b * b;
            r.add(t2, c * w);
        }
    }
    return r;
}

ModuleVector murphy_word(const ModuleVector& m, const std::vector<int>& word) {
    ModuleVector r = m;
    for (int k : word) r = murphy_si(r, k);
    return r;
}

ModuleVector murphy_perm(const ModuleVector& m, const Perm& p) {
    return murphy_word(m, sorting_word(p));
}

ModuleVector jucys_murphy(const ModuleVector& m, int i) {
    const auto& ctx = ShapeContext::get(m.shape);
    const int n = ctx.size();
    if (i < 1 || i > n)
        throw std::invalid_argument("operator index out of range");
    ModuleVector r{m.shape, {}};
    for (int j = i + 1; j <= n; ++j)
        r = module_add(r, murphy_word(m, transposition_word(i, j)));
    return r;
}

VvPoly::VvPoly(Shape shape) : shape_(std::move(shape)) {
    n_ = ShapeContext::get(shape_).size();
}

VvPoly VvPoly::unit(const Shape& shape, int tab) {
    return monomial(shape, std::vector<int>(shape_size(shape), 0), tab, 1);
}

VvPoly VvPoly::monomial(const Shape& shape, std::vector<int> exp, int tab,
                        const AlphaFrac& c) {
    VvPoly p(shape);
    p.add_term(std::move(exp), tab, c);
    return p;
}

AlphaFrac VvPoly::coeff(const std::vector<int>& exp, int tab) const {
    auto it = terms_.find(TermKey{exp, tab});
    return it == terms_.end() ? AlphaFrac() : it->second;
}

ModuleVector VvPoly::coeff_vector(const std::vector<int>& exp) const {
    ModuleVector m{shape_, {}};
    for (auto it = terms_.lower_bound(TermKey{exp, -1});
         it != terms_.end() && it->first.exp == exp; ++it)
        m.coords.emplace(it->first.tab, it->second);
    return m;
}

int VvPoly::degree() const {
    if (terms_.empty()) return -1;
    const auto& exp = terms_.begin()->first.exp;
    return std::accumulate(exp.begin(), exp.end(), 0);
}

void VvPoly::add_term(std::vector<int> exp, int tab, const AlphaFrac& c) {
    if (static_cast<int>(exp.size()) != n_)
        throw std::invalid_argument("exponent length differs from box count");
    if (tab < 0 || tab >= ShapeContext::get(shape_).count())
        throw std::invalid_argument("tableau id out of range");
    if (std::any_of(exp.begin(), exp.end(), [](int e) { return e < 0; }))
        throw std::invalid_argument("negative exponent");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(TermKey{std::move(exp), tab}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void VvPoly::add_scaled(const VvPoly& o, const AlphaFrac& c) {
    if (shape_ != o.shape_)
        throw ShapeMismatch("polynomials over different shapes");
    if (c.is_zero()) return;
    for (const auto& [key, v] : o.terms_) add_term(key.exp, key.tab, v * c);
}

VvPoly VvPoly::operator-() const {
    VvPoly r(shape_);
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, -v);
    return r;
}

VvPoly& VvPoly::operator+=(const VvPoly& o) {
    add_scaled(o, 1);
    return *this;
}

VvPoly& VvPoly::operator-=(const VvPoly& o) {
    add_scaled(o, -1);
    return *this;
}

VvPoly VvPoly::scale(const AlphaFrac& c) const {
    VvPoly r(shape_);
    if (c.is_zero()) return r;
    for (const auto& [key, v] : terms_) r.terms_.emplace(key, v * c);
    return r;
}

std::string VvPoly::to_string(const char* var) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "[" << c.to_string() << "]";
        for (int k = 0; k < n_; ++k) {
            if (key.exp[k] == 0) continue;
            out << "*" << var << (k + 1);
            if (key.exp[k] > 1) out << "^" << key.exp[k];
        }
        out << " (x) T" << key.tab;
    }
    return out.str();
}

VvPoly multiply_x(const VvPoly& p, int i) {
    if (i < 1 || i > p.vars())
        throw std::invalid_argument("variable index out of range");
    VvPoly r(p.shape());
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> exp = key.exp;
        ++exp[i - 1];
        r.add_term(std::move(exp), key.tab, c);
    }
    return r;
}

VvPoly act_si(const VvPoly& p, int i) {
    const auto& ctx = ShapeContext::get(p.shape());
    if (i < 1 || i >= ctx.size())
        throw std::invalid_argument("generator index out of range");
    VvPoly r(p.shape());
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> exp = key.exp;
        std::swap(exp[i - 1], exp[i]);
        const ModuleVector m = murphy_si(module_unit(p.shape(), key.tab), i);
        for (const auto& [t2, b] : m.coords) r.add_term(exp, t2, c * b);
    }
    return r;
}

VvPoly act_transposition(const VvPoly& p, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > p.vars() || i == j)
        throw std::invalid_argument("transposition indices out of range");
    const auto word = transposition_word(i, j);
    VvPoly r(p.shape());
    for (const auto& [key, c] : p.terms()) {
        std::vector<int> exp = key.exp;
        std::swap(exp[i - 1], exp[j - 1]);
        const ModuleVector m =
            murphy_word(module_unit(p.shape(), key.tab), word);
        for (const auto& [t2, b] : m.coords) r.add_term(exp, t2, c * b);
    }
    return r;
}

VvPoly act_word(const VvPoly& p, const std::vector<int>& word) {
    VvPoly r = p;
    for (int k : word) r = act_si(r, k);
    return r;
}

VvPoly act_perm(const VvPoly& p, const Perm& w) {
    if (static_cast<int>(w.size()) != p.vars())
        throw std::invalid_argument("permutation size differs from box count");
    return act_word(p, sorting_word(w));
}

VvPoly act_affine(const VvPoly& p) {
    std::vector<int> word(p.vars() > 0 ? p.vars() - 1 : 0);
    std::iota(word.begin(), word.end(), 1);
    return multiply_x(act_word(p, word), p.vars());
}

VvPoly dunkl(const VvPoly& p, int i) {
    const int n = p.vars();
    if (i < 1 || i > n)
        throw std::invalid_argument("operator index out of range");
    VvPoly r(p.shape());
    for (const auto& [key, c] : p.terms()) {
        if (key.exp[i - 1] > 0) {
            std::vector<int> exp = key.exp;
            --exp[i - 1];
            r.add_term(std::move(exp), key.tab, c * key.exp[i - 1]);
        }
    }
    std::map<std::pair<int, int>, ModuleVector> images;
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        const auto word = transposition_word(std::min(i, j), std::max(i, j));
        for (const auto& [key, c] : p.terms()) {
            const auto pieces = divided_diff(key.exp, i, j);
            if (pieces.empty()) continue;
            auto it = images.find({j, key.tab});
            if (it == images.end())
                it = images
                         .emplace(std::make_pair(j, key.tab),
                                  murphy_word(module_unit(p.shape(), key.tab),
                                              word))
                         .first;
            const AlphaFrac base = c * inverse_alpha();
            for (const auto& [exp, sign] : pieces) {
                const AlphaFrac signed_base = sign > 0 ? base : -base;
                for (const auto& [t2, b] : it->second.coords)
                    r.add_term(exp, t2, signed_base * b);
            }
        }
    }
    return r;
}

VvPoly cherednik_u(const VvPoly& p, int i) {
    VvPoly r = dunkl(multiply_x(p, i), i);
    for (int j = 1; j < i; ++j)
        r.add_scaled(act_transposition(p, j, i), -inverse_alpha());
    return r;
}

VvPoly xi_tilde(const VvPoly& p, int i) {
    const AlphaFrac alpha = AlphaFrac::alpha();
    VvPoly r = cherednik_u(p, i).scale(alpha);
    r.add_scaled(p, -alpha);
    return r;
}

std::optional<LeadingMonomial> leading_monomial(const VvPoly& p) {
    if (p.is_zero()) return std::nullopt;
    const std::vector<int> top = p.terms().begin()->first.exp;
    for (const auto& [key, c] : p.terms())
        if (!dominated_by(key.exp, top)) return std::nullopt;
    const ModuleVector m = p.coeff_vector(top);
    const auto word = sorting_word(rank_permutation(top));
    const auto& ctx = ShapeContext::get(p.shape());
    for (int t = 0; t < ctx.count(); ++t) {
        const ModuleVector img =
            murphy_word(module_unit(p.shape(), t), word);
        const auto& [t0, c0] = *img.coords.begin();
        auto it = m.coords.find(t0);
        if (it == m.coords.end()) continue;
        const AlphaFrac c = it->second / c0;
        if (m == module_scale(img, c))
            return LeadingMonomial{top, t, c, img};
    }
    return std::nullopt;
}

AlphaFrac pairing(const VvPoly& p, const VvPoly& q) {
    if (p.shape() != q.shape())
        throw ShapeMismatch("pairing of polynomials over different shapes");
    const int n = p.vars();
    // Least variable with a positive exponent anywhere in p.
    int var = n + 1;
    for (const auto& [key, c] : p.terms())
        for (int k = 0; k + 1 < var; ++k)
            if (key.exp[k] > 0) {
                var = k + 1;
                break;
            }
    if (var > n) {
        // Constant against the degree-zero part of q.
        const auto& ctx = ShapeContext::get(p.shape());
        const std::vector<int> zero(n, 0);
        AlphaFrac total;
        for (const auto& [t, c] : p.coeff_vector(zero).coords) {
            const AlphaFrac qc = q.coeff(zero, t);
            if (!qc.is_zero()) total += c * qc * ctx.norm(t);
        }
        return total;
    }
    VvPoly lowered(p.shape()), rest(p.shape());
    for (const auto& [key, c] : p.terms()) {
        if (key.exp[var - 1] > 0) {
            std::vector<int> exp = key.exp;
            --exp[var - 1];
            lowered.add_term(std::move(exp), key.tab, c);
        } else {
            rest.add_term(key.exp, key.tab, c);
        }
    }
    return pairing(lowered, dunkl(q, var)) + pairing(rest, q);
}

VvPoly substitute(const VvPoly& p, int i, const AlphaFrac& value) {
    if (i < 1 || i > p.vars())
        throw std::invalid_argument("variable index out of range");
    std::vector<AlphaFrac> powers = {AlphaFrac(1)};
    VvPoly r(p.shape());
    for (const auto& [key, c] : p.terms()) {
        const int e = key.exp[i - 1];
        while (static_cast<int>(powers.size()) <= e)
            powers.push_back(powers.back() * value);
        std::vector<int> exp = key.exp;
        exp[i - 1] = 0;
        r.add_term(std::move(exp), key.tab, c * powers[e]);
    }
    return r;
}

VvPoly varsigma(const VvPoly& p, int i) {
    if (i < 1 || i >= p.vars())
        throw std::invalid_argument("generator index out of range");
    VvPoly r = act_si(p, i);
    for (const auto& [key, c] : p.terms())
        for (const auto& [exp, sign] : divided_diff(key.exp, i, i + 1))
            r.add_term(exp, key.tab, sign > 0 ? c : -c);
    return r;
}

VvPoly shifted_psi_hat(const VvPoly& p) {
    const int n = p.vars();
    std::vector<int> word(n > 0 ? n - 1 : 0);
    std::iota(word.begin(), word.end(), 1);
    VvPoly shifted(p.shape());
    std::map<int, ModuleVector> images;
    for (const auto& [key, c] : p.terms()) {
        auto it = images.find(key.tab);
        if (it == images.end())
            it = images
                     .emplace(key.tab,
                              murphy_word(module_unit(p.shape(), key.tab),
                                          word))
                     .first;
        // x_1^a turns into (x_N - alpha)^a, the other variables shift down.
        const int a = key.exp[0];
        std::vector<int> base(key.exp.begin() + 1, key.exp.end());
        base.push_back(0);
        for (int k = 0; k <= a; ++k) {
            std::vector<BigRat> coeffs(a - k + 1, BigRat(0));
            coeffs[a - k] = BigRat(binomial(a, k));
            if ((a - k) % 2 != 0) coeffs[a - k] = -coeffs[a - k];
            const AlphaFrac factor{AlphaPoly(std::move(coeffs))};
            std::vector<int> exp = base;
            exp[n - 1] = k;
            for (const auto& [t2, b] : it->second.coords)
                shifted.add_term(exp, t2, c * factor * b);
        }
    }
    VvPoly r = multiply_x(shifted, n);
    r.add_scaled(shifted, n - 1);
    return r;
}

VvPoly xi_hat(const VvPoly& p, int i) {
    const int n = p.vars();
    if (i < 1 || i > n)
        throw std::invalid_argument("operator index out of range");
    // The composite applies right to left: the low exchanges first, then
    // the shifted raising map, then the high exchanges.
    VvPoly tail = p;
    for (int k = i - 1; k >= 1; --k) tail = varsigma(tail, k);
    tail = shifted_psi_hat(tail);
    for (int k = n - 1; k >= i; --k) tail = varsigma(tail, k);
    VvPoly r = multiply_x(p, i);
    r.add_scaled(p, n - 1);
    r -= tail;
    return r;
}

}  // namespace vvjack
