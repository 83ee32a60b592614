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

// Polynomials in N variables with coefficients in the irreducible module of
// a shape, together with the operators that act on them: the diagonal
// exchange, the raising map, Dunkl and Cherednik operators, their shifted
// variants, and the contravariant pairing.
//
// Everything acts on the right; words of generators apply leftmost first.

#ifndef VVJACK_VVPOLY_HPP
#define VVJACK_VVPOLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "vvjack/alpha.hpp"
#include "vvjack/combinatorics.hpp"
#include "vvjack/scalar_poly.hpp"
#include "vvjack/shape_context.hpp"

namespace vvjack {

// Element of the module of a shape: coordinates over the tableau basis,
// indexed by position in the enumeration order of the shape.
struct ModuleVector {
    Shape shape;
    std::map<int, AlphaFrac> coords;

    bool is_zero() const { return coords.empty(); }
    void add(int tab, const AlphaFrac& c);
    bool operator==(const ModuleVector&) const = default;
};

ModuleVector module_unit(const Shape& shape, int tab);
ModuleVector module_scale(const ModuleVector& m, const AlphaFrac& c);
ModuleVector module_add(const ModuleVector& x, const ModuleVector& y);

// Right action of the adjacent transposition i on the module, in the
// seminormal (orthogonal) form: with b = 1/(CT[i] - CT[i+1]) a basis
// tableau goes to b times itself when its entries i, i+1 cannot be swapped,
// to b*self + swapped when 0 < b <= 1/2, and to b*self + (1-b^2)*swapped
// when -1/2 <= b < 0.
ModuleVector murphy_si(const ModuleVector& m, int i);
ModuleVector murphy_word(const ModuleVector& m, const std::vector<int>& word);
ModuleVector murphy_perm(const ModuleVector& m, const Perm& p);
// Sum of transpositions (i j) over j > i; diagonal with eigenvalue CT[i] on
// basis tableaux, and zero for i = N.
ModuleVector jucys_murphy(const ModuleVector& m, int i);

struct TermKey {
    std::vector<int> exp;
    int tab = 0;

    bool operator==(const TermKey&) const = default;
};

// Largest term first; see ExpOrder. Ties at one exponent list by tableau id.
struct TermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const {
        ExpOrder less;
        if (less(a.exp, b.exp)) return true;
        if (less(b.exp, a.exp)) return false;
        return a.tab < b.tab;
    }
};

class VvPoly {
  public:
    using TermMap = std::map<TermKey, AlphaFrac, TermOrder>;

    VvPoly() = default;
    explicit VvPoly(Shape shape);
    // 1 tensor the tableau with the given id.
    static VvPoly unit(const Shape& shape, int tab);
    static VvPoly monomial(const Shape& shape, std::vector<int> exp, int tab,
                           const AlphaFrac& c);

    const Shape& shape() const { return shape_; }
    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    AlphaFrac coeff(const std::vector<int>& exp, int tab) const;
    // Module coordinates sitting at one exponent.
    ModuleVector coeff_vector(const std::vector<int>& exp) const;
    int degree() const;  // total degree of the largest term, -1 when zero

    void add_term(std::vector<int> exp, int tab, const AlphaFrac& c);
    void add_scaled(const VvPoly& o, const AlphaFrac& c);

    VvPoly operator-() const;
    VvPoly& operator+=(const VvPoly& o);
    VvPoly& operator-=(const VvPoly& o);
    friend VvPoly operator+(VvPoly x, const VvPoly& y) { return x += y; }
    friend VvPoly operator-(VvPoly x, const VvPoly& y) { return x -= y; }
    VvPoly scale(const AlphaFrac& c) const;
    friend VvPoly operator*(const AlphaFrac& c, const VvPoly& p) {
        return p.scale(c);
    }
    bool operator==(const VvPoly& o) const {
        return shape_ == o.shape_ && terms_ == o.terms_;
    }
    bool operator!=(const VvPoly& o) const { return !(*this == o); }

    std::string to_string(const char* var = "x") const;

  private:
    Shape shape_;
    int n_ = 0;
    TermMap terms_;
};

// x_i times p.
VvPoly multiply_x(const VvPoly& p, int i);
// Diagonal right action of the adjacent transposition i on both slots.
VvPoly act_si(const VvPoly& p, int i);
// Diagonal right action of the transposition (i j), i < j.
VvPoly act_transposition(const VvPoly& p, int i, int j);
VvPoly act_word(const VvPoly& p, const std::vector<int>& word);
VvPoly act_perm(const VvPoly& p, const Perm& w);
// Raising map: act by the full cycle on both slots, then multiply by x_N.
VvPoly act_affine(const VvPoly& p);

// Dunkl operator: the plain partial derivative on the polynomial slot plus
// 1/alpha times every divided difference paired with the matching module
// transposition.
VvPoly dunkl(const VvPoly& p, int i);
// Cherednik operator: multiply by x_i, apply the Dunkl operator, subtract
// 1/alpha times the diagonal transpositions (j i) over j < i.
VvPoly cherednik_u(const VvPoly& p, int i);
// alpha times the Cherednik operator minus alpha.
VvPoly xi_tilde(const VvPoly& p, int i);

struct LeadingMonomial {
    Weight weight;
    int tab = 0;           // tableau id rho
    AlphaFrac scalar;      // p = scalar * x^weight (x) rho.sigma + lower
    ModuleVector witness;  // rho acted on by the rank permutation of weight

    bool operator==(const LeadingMonomial&) const = default;
};

// The dominance-leading term when it exists: one exponent v dominating all
// others whose module coordinate vector is proportional to some basis
// tableau acted on by the rank permutation of v.
std::optional<LeadingMonomial> leading_monomial(const VvPoly& p);

// Contravariant pairing: bilinear over rationals in the parameter, basis
// tableaux at degree zero pair to their squared norms, and multiplication
// by x_i on the left is adjoint to the Dunkl operator on the right.
AlphaFrac pairing(const VvPoly& p, const VvPoly& q);

// Evaluate the variable x_i at a fixed value of the parameter field.
VvPoly substitute(const VvPoly& p, int i, const AlphaFrac& value);

// Divided difference on the polynomial slot plus the diagonal exchange.
VvPoly varsigma(const VvPoly& p, int i);
// Shifted raising map: substitute x_1 -> x_N - alpha, x_i -> x_{i-1} in the
// polynomial slot, act by the full cycle on the module slot, then multiply
// by x_N + N - 1.
VvPoly shifted_psi_hat(const VvPoly& p);
// Shifted Cherednik operator; diagonal with eigenvalue CT[i] on constants.
VvPoly xi_hat(const VvPoly& p, int i);

}  // namespace vvjack

#endif  // VVJACK_VVPOLY_HPP
