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

#include "vvjack/alpha.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace vvjack {

namespace {
const BigRat kZero(0);
}

AlphaPoly::AlphaPoly(const BigRat& c) {
    if (c != 0) c_.push_back(c);
}

AlphaPoly::AlphaPoly(std::vector<BigRat> coeffs) : c_(std::move(coeffs)) {
    trim();
}

AlphaPoly AlphaPoly::variable() { return linear(1, 0); }

AlphaPoly AlphaPoly::linear(const BigRat& a, const BigRat& b) {
    if (a == 0) return AlphaPoly(b);
    AlphaPoly p;
    p.c_ = {b, a};
    return p;
}

void AlphaPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const BigRat& AlphaPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[k];
}

const BigRat& AlphaPoly::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

AlphaPoly AlphaPoly::operator-() const {
    AlphaPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

AlphaPoly AlphaPoly::operator+(const AlphaPoly& o) const {
    AlphaPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) + o.coeff(k);
    r.trim();
    return r;
}

AlphaPoly AlphaPoly::operator-(const AlphaPoly& o) const {
    AlphaPoly r;
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = coeff(k) - o.coeff(k);
    r.trim();
    return r;
}

AlphaPoly AlphaPoly::operator*(const AlphaPoly& o) const {
    if (is_zero() || o.is_zero()) return AlphaPoly();
    AlphaPoly r;
    r.c_.assign(c_.size() + o.c_.size() - 1, BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
    r.trim();
    return r;
}

AlphaPoly AlphaPoly::scale(const BigRat& s) const {
    if (s == 0) return AlphaPoly();
    AlphaPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

void AlphaPoly::divmod(const AlphaPoly& a, const AlphaPoly& b, AlphaPoly& q,
                       AlphaPoly& r) {
    if (b.is_zero()) throw DivisionByZero();
    q = AlphaPoly();
    r = a;
    const int db = b.degree();
    if (r.degree() >= db) q.c_.assign(r.degree() - db + 1, BigRat(0));
    while (r.degree() >= db) {
        const int shift = r.degree() - db;
        BigRat f = r.leading() / b.leading();
        q.c_[shift] = f;
        for (int k = 0; k <= db; ++k) r.c_[shift + k] -= f * b.c_[k];
        r.trim();
    }
    q.trim();
}

AlphaPoly AlphaPoly::div_exact(const AlphaPoly& a, const AlphaPoly& b) {
    AlphaPoly q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw DomainError("inexact polynomial division");
    return q;
}

AlphaPoly AlphaPoly::gcd(AlphaPoly a, AlphaPoly b) {
    while (!b.is_zero()) {
        AlphaPoly q, r;
        divmod(a, b, q, r);
        // Keep remainders monic to bound coefficient growth.
        if (!r.is_zero()) r = r.scale(1 / r.leading());
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    BigRat content;
    AlphaPoly prim;
    a.split_content(content, prim);
    return prim;
}

void AlphaPoly::split_content(BigRat& content, AlphaPoly& primitive) const {
    if (is_zero()) {
        content = 0;
        primitive = AlphaPoly();
        return;
    }
    BigInt den_lcm(1), num_gcd(0);
    for (const auto& x : c_) {
        if (x == 0) continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                x.get_den().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
                x.get_num().get_mpz_t());
    }
    BigRat scale(num_gcd, den_lcm);  // positive; mpq canonicalizes
    scale.canonicalize();
    if (leading() < 0) scale = -scale;
    content = scale;
    primitive = this->scale(1 / scale);
}

BigRat AlphaPoly::evaluate(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<std::string> AlphaPoly::integer_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const auto& x : c_) {
        if (x.get_den() != 1)
            throw DomainError("non-integer coefficient in canonical part");
        out.push_back(x.get_num().get_str());
    }
    return out;
}

std::string AlphaPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigRat& x = c_[k];
        if (x == 0) continue;
        BigRat ax = x < 0 ? BigRat(-x) : x;
        if (first) {
            if (x < 0) os << "-";
            first = false;
        } else {
            os << (x < 0 ? " - " : " + ");
        }
        const bool unit = (ax == 1);
        if (k == 0 || !unit) os << ax.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

AlphaFrac::AlphaFrac(const BigRat& v) : num_(v), den_(1) { canonicalize(); }

AlphaFrac::AlphaFrac(AlphaPoly num, AlphaPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    canonicalize();
}

AlphaFrac AlphaFrac::alpha() { return AlphaFrac(AlphaPoly::variable()); }

AlphaFrac AlphaFrac::linear(const BigRat& a, const BigRat& b) {
    return AlphaFrac(AlphaPoly::linear(a, b));
}

void AlphaFrac::canonicalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = AlphaPoly(1);
        return;
    }
    if (den_.degree() > 0 && num_.degree() > 0) {
        AlphaPoly g = AlphaPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = AlphaPoly::div_exact(num_, g);
            den_ = AlphaPoly::div_exact(den_, g);
        }
    }
    BigRat cn, cd;
    AlphaPoly pn, pd;
    num_.split_content(cn, pn);
    den_.split_content(cd, pd);
    BigRat ratio = cn / cd;  // mpq keeps this reduced with positive den
    num_ = pn.scale(BigRat(ratio.get_num()));
    den_ = pd.scale(BigRat(ratio.get_den()));
}

bool AlphaFrac::is_one() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.coeff(0) == 1 &&
           den_.coeff(0) == 1;
}

bool AlphaFrac::is_constant() const {
    return num_.degree() <= 0 && den_.degree() <= 0;
}

BigRat AlphaFrac::constant_value() const {
    if (!is_constant()) throw DomainError("fraction is not constant");
    if (num_.is_zero()) return BigRat(0);
    return num_.coeff(0) / den_.coeff(0);
}

AlphaFrac AlphaFrac::operator-() const {
    AlphaFrac r(*this);
    r.num_ = -r.num_;
    return r;
}

AlphaFrac operator+(const AlphaFrac& x, const AlphaFrac& y) {
    return AlphaFrac(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
}

AlphaFrac operator-(const AlphaFrac& x, const AlphaFrac& y) {
    return AlphaFrac(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
}

AlphaFrac operator*(const AlphaFrac& x, const AlphaFrac& y) {
    return AlphaFrac(x.num_ * y.num_, x.den_ * y.den_);
}

AlphaFrac operator/(const AlphaFrac& x, const AlphaFrac& y) {
    if (y.is_zero()) throw DivisionByZero();
    return AlphaFrac(x.num_ * y.den_, x.den_ * y.num_);
}

AlphaFrac AlphaFrac::inverse() const {
    if (is_zero()) throw DivisionByZero();
    return AlphaFrac(den_, num_);
}

BigRat AlphaFrac::evaluate_at(const BigRat& x) const {
    BigRat d = den_.evaluate(x);
    if (d == 0)
        throw SingularValue("pole of " + to_string() + " at a = " +
                            x.get_str());
    return num_.evaluate(x) / d;
}

std::string AlphaFrac::to_string(const char* var) const {
    if (den_.degree() == 0 && den_.coeff(0) == 1) {
        if (num_.degree() <= 0) return num_.to_string(var);
        return num_.to_string(var);
    }
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    if (num_.degree() > 0) n = "(" + n + ")";
    if (den_.degree() > 0) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace vvjack
