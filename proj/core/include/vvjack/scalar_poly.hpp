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

// Sparse multivariate polynomials with rational coefficients, used for the
// seminormal basis of the group algebra written in commuting variables.

#ifndef VVJACK_SCALAR_POLY_HPP
#define VVJACK_SCALAR_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vvjack/alpha.hpp"
#include "vvjack/combinatorics.hpp"

namespace vvjack {

// Total order on exponent vectors, largest term first: higher total degree
// wins, then the multiset of exponents sorted descending compares
// lexicographically, then the raw vector does. Whenever u is dominated by v
// (partial sums of the decreasing rearrangements, with the raw vectors as
// tie break), v sorts strictly earlier, so the first key of a map ordered
// this way is the only candidate for a dominance-leading term.
struct ExpOrder {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

// True when u is dominated by v: partial sums of the decreasing
// rearrangement of u never exceed those of v, and when the rearrangements
// coincide the raw partial sums decide. Reflexive.
bool dominated_by(const Weight& u, const Weight& v);

class ScalarPoly {
  public:
    using TermMap = std::map<std::vector<int>, BigRat, ExpOrder>;

    ScalarPoly() = default;
    explicit ScalarPoly(int vars) : vars_(vars) {}
    static ScalarPoly one(int vars);
    static ScalarPoly variable(int vars, int i);  // 1-based

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(std::vector<int> exp, const BigRat& c);

    ScalarPoly operator-() const;
    ScalarPoly& operator+=(const ScalarPoly& o);
    ScalarPoly& operator-=(const ScalarPoly& o);
    friend ScalarPoly operator+(ScalarPoly x, const ScalarPoly& y) {
        return x += y;
    }
    friend ScalarPoly operator-(ScalarPoly x, const ScalarPoly& y) {
        return x -= y;
    }
    ScalarPoly operator*(const ScalarPoly& o) const;
    ScalarPoly scale(const BigRat& s) const;
    bool operator==(const ScalarPoly& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }
    bool operator!=(const ScalarPoly& o) const { return !(*this == o); }

    // Exchange of two variables (1-based indices).
    ScalarPoly swap_vars(int i, int j) const;

    // Largest term in the ExpOrder sense; requires a nonzero polynomial.
    std::pair<std::vector<int>, BigRat> leading() const;

    std::string to_string(const char* var = "t") const;

  private:
    int vars_ = 0;
    TermMap terms_;
};

// Sum of variable exchanges (i j) over j > i; zero for i = vars.
ScalarPoly scalar_jucys_murphy(const ScalarPoly& p, int i);

// Basis element of the group algebra attached to a tableau, written in
// commuting variables: the column-filled tableau of a shape gets the product
// of in-column differences, and swapping the entries k, k+1 of a tableau
// (toward larger content gap) multiplies on the right by the variable
// exchange minus the Murphy coefficient.
ScalarPoly seminormal(const Tableau& tau);

// Coefficient of the forced tail monomial in the variables past M, as a
// polynomial in the first M variables. The tableau must restrict to M.
ScalarPoly restrict_scalar(const ScalarPoly& p, const Tableau& tau, int M);

}  // namespace vvjack

#endif  // VVJACK_SCALAR_POLY_HPP
