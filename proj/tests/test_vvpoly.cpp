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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "vvjack/scalar_poly.hpp"
#include "vvjack/vvpoly.hpp"

using namespace vvjack;

namespace {

using Exp = std::vector<int>;

const AlphaFrac kAlpha = AlphaFrac::alpha();
const AlphaFrac kInvAlpha{AlphaPoly(1), AlphaPoly::variable()};

AlphaFrac rat(long num, long den) { return AlphaFrac(BigRat(num, den)); }

// p(a)/q(a) given as coefficient lists, constant term first.
AlphaFrac frac(std::vector<BigRat> num, std::vector<BigRat> den) {
    return AlphaFrac(AlphaPoly(std::move(num)), AlphaPoly(std::move(den)));
}

VvPoly make_poly(const Shape& shape,
                 const std::vector<std::tuple<Exp, int, AlphaFrac>>& terms) {
    VvPoly p(shape);
    for (const auto& [exp, tab, c] : terms) p.add_term(exp, tab, c);
    return p;
}

VvPoly random_poly(const Shape& shape, int per_var_deg, int nterms,
                   std::mt19937& rng) {
    const auto& ctx = ShapeContext::get(shape);
    std::uniform_int_distribution<int> dexp(0, per_var_deg);
    std::uniform_int_distribution<int> dtab(0, ctx.count() - 1);
    std::uniform_int_distribution<int> dcoef(-4, 4);
    VvPoly p(shape);
    for (int k = 0; k < nterms; ++k) {
        Exp exp(ctx.size());
        for (auto& e : exp) e = dexp(rng);
        int c = dcoef(rng);
        if (c == 0) c = 3;
        p.add_term(exp, dtab(rng), k % 2 ? kAlpha * c : AlphaFrac(c));
    }
    return p;
}

VvPoly random_homogeneous(const Shape& shape, int deg, int nterms,
                          std::mt19937& rng) {
    const auto& ctx = ShapeContext::get(shape);
    std::uniform_int_distribution<int> dvar(0, ctx.size() - 1);
    std::uniform_int_distribution<int> dtab(0, ctx.count() - 1);
    std::uniform_int_distribution<int> dcoef(1, 4);
    VvPoly p(shape);
    for (int k = 0; k < nterms; ++k) {
        Exp exp(ctx.size(), 0);
        for (int d = 0; d < deg; ++d) ++exp[dvar(rng)];
        p.add_term(exp, dtab(rng), dcoef(rng));
    }
    return p;
}

VvPoly top_part(const VvPoly& p) {
    VvPoly r(p.shape());
    const int d = p.degree();
    for (const auto& [key, c] : p.terms())
        if (std::accumulate(key.exp.begin(), key.exp.end(), 0) == d)
            r.add_term(key.exp, key.tab, c);
    return r;
}

// The parameter sent to its negative, coefficient by coefficient.
AlphaFrac negate_alpha(const AlphaFrac& f) {
    auto flip = [](const AlphaPoly& p) {
        std::vector<BigRat> c = p.coeffs();
        for (size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
        return AlphaPoly(std::move(c));
    };
    return AlphaFrac(flip(f.num()), flip(f.den()));
}

const std::vector<Shape> kShapesOf4 = {
    {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};

}  // namespace

TEST_CASE("module action of the adjacent exchanges") {
    const Shape s21{2, 1};
    // Tableau ids for shape [2,1]: 0 has rows {3,1},{2}; 1 has rows {3,2},{1}.
    CHECK(ShapeContext::get(s21).tableau(0).rows ==
          std::vector<std::vector<int>>{{3, 1}, {2}});
    CHECK(ShapeContext::get(s21).tableau(1).rows ==
          std::vector<std::vector<int>>{{3, 2}, {1}});

    ModuleVector m0 = murphy_si(module_unit(s21, 0), 1);
    CHECK(m0.coords == std::map<int, AlphaFrac>{{0, rat(1, 2)}, {1, 1}});
    ModuleVector m1 = murphy_si(module_unit(s21, 1), 1);
    CHECK(m1.coords == std::map<int, AlphaFrac>{{0, rat(3, 4)}, {1, rat(-1, 2)}});
    // Entries 2,3 sit in one column of tableau 0 and one row of tableau 1.
    CHECK(murphy_si(module_unit(s21, 0), 2).coords ==
          std::map<int, AlphaFrac>{{0, -1}});
    CHECK(murphy_si(module_unit(s21, 1), 2).coords ==
          std::map<int, AlphaFrac>{{1, 1}});

    std::mt19937 rng(7);
    for (const Shape& shape : {Shape{2, 2}, Shape{3, 1}, Shape{2, 1, 1}}) {
        const auto& ctx = ShapeContext::get(shape);
        std::uniform_int_distribution<int> dcoef(-5, 5);
        for (int trial = 0; trial < 20; ++trial) {
            ModuleVector m{shape, {}};
            for (int t = 0; t < ctx.count(); ++t)
                m.add(t, dcoef(rng) + kAlpha * dcoef(rng));
            for (int i = 1; i < ctx.size(); ++i) {
                CHECK(murphy_si(murphy_si(m, i), i) == m);
                if (i + 1 < ctx.size()) {
                    CHECK(murphy_word(m, {i, i + 1, i}) ==
                          murphy_word(m, {i + 1, i, i + 1}));
                }
                for (int j = i + 2; j < ctx.size(); ++j)
                    CHECK(murphy_word(m, {i, j}) == murphy_word(m, {j, i}));
            }
        }
    }
}

TEST_CASE("module Jucys-Murphy elements are diagonal with content eigenvalues") {
    for (const Shape& shape : kShapesOf4) {
        const auto& ctx = ShapeContext::get(shape);
        for (int t = 0; t < ctx.count(); ++t) {
            const ModuleVector unit = module_unit(shape, t);
            for (int i = 1; i <= ctx.size(); ++i) {
                const AlphaFrac expected = ctx.contents(t)[i - 1];
                CHECK(jucys_murphy(unit, i) == module_scale(unit, expected));
            }
            CHECK(jucys_murphy(unit, ctx.size()).is_zero());
        }
    }
}

TEST_CASE("diagonal exchange action on polynomials") {
    const Shape s21{2, 1};
    const VvPoly p = VvPoly::monomial(s21, {3, 1, 0}, 0, 1);

    // Entries 2,3 of tableau 0 share a column, so the exchange acts by -1
    // there while the variables swap.
    CHECK(act_si(p, 2) == VvPoly::monomial(s21, {3, 0, 1}, 0, -1));
    CHECK(act_si(p, 1) == make_poly(s21, {{{1, 3, 0}, 0, rat(1, 2)},
                                          {{1, 3, 0}, 1, 1}}));

    std::mt19937 rng(11);
    for (const Shape& shape : {Shape{2, 2}, Shape{3, 1}}) {
        for (int trial = 0; trial < 10; ++trial) {
            const VvPoly q = random_poly(shape, 3, 4, rng);
            const int n = shape_size(shape);
            for (int i = 1; i < n; ++i) {
                CHECK(act_si(act_si(q, i), i) == q);
                if (i + 1 < n)
                    CHECK(act_word(q, {i, i + 1, i}) ==
                          act_word(q, {i + 1, i, i + 1}));
            }
            // A non-adjacent transposition agrees with its exchange word.
            CHECK(act_transposition(q, 1, 3) == act_word(q, {1, 2, 1}));
        }
    }
}

TEST_CASE("affine raising map") {
    const Shape s21{2, 1};
    CHECK(act_affine(VvPoly::unit(s21, 0)) ==
          make_poly(s21, {{{0, 0, 1}, 0, rat(-1, 2)}, {{0, 0, 1}, 1, 1}}));
    CHECK(act_affine(VvPoly::unit(s21, 1)) ==
          make_poly(s21, {{{0, 0, 1}, 0, rat(-3, 4)}, {{0, 0, 1}, 1, rat(-1, 2)}}));

    // On the one-dimensional module of a single row the map realizes the
    // affine shift of the exponent vector.
    const Shape s3{3};
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> dexp(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Exp u{dexp(rng), dexp(rng), dexp(rng)};
        const VvPoly q = VvPoly::monomial(s3, u, 0, 1);
        CHECK(act_affine(q) == VvPoly::monomial(s3, affine_psi(u), 0, 1));
    }
}

TEST_CASE("Dunkl operators") {
    const Shape s21{2, 1};
    std::mt19937 rng(17);

    for (int i = 1; i <= 3; ++i) CHECK(dunkl(VvPoly::unit(s21, 0), i).is_zero());

    for (int trial = 0; trial < 8; ++trial) {
        const VvPoly p = random_poly(s21, 2, 3, rng);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                CHECK(dunkl(dunkl(p, i), j) == dunkl(dunkl(p, j), i));
    }

    // Multiplication by x_i is adjoint to the i-th operator, at every i.
    for (const Shape& shape : {Shape{2, 1}, Shape{2, 2}}) {
        const int n = shape_size(shape);
        for (int trial = 0; trial < 4; ++trial) {
            const VvPoly p = random_poly(shape, 1, 3, rng);
            const VvPoly q = random_poly(shape, 2, 3, rng);
            for (int i = 1; i <= n; ++i)
                CHECK(pairing(multiply_x(p, i), q) == pairing(p, dunkl(q, i)));
        }
    }
}

TEST_CASE("single-column modules reduce to the scalar theory at a negated parameter") {
    // On one row every exchange fixes the module; on one column it negates.
    // The operators therefore agree after the substitution a -> -a.
    const Shape row{3}, col{1, 1, 1};
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> dexp(0, 3);
    for (int trial = 0; trial < 10; ++trial) {
        Exp u{dexp(rng), dexp(rng), dexp(rng)};
        for (int i = 1; i <= 3; ++i) {
            const VvPoly from_row = dunkl(VvPoly::monomial(row, u, 0, 1), i);
            const VvPoly from_col = dunkl(VvPoly::monomial(col, u, 0, 1), i);
            VvPoly expected(col);
            for (const auto& [key, c] : from_row.terms())
                expected.add_term(key.exp, 0, negate_alpha(c));
            CHECK(from_col == expected);
        }
    }
}

TEST_CASE("Cherednik operators") {
    std::mt19937 rng(31);

    for (const Shape& shape : kShapesOf4) {
        const auto& ctx = ShapeContext::get(shape);
        for (int t = 0; t < ctx.count(); ++t) {
            const VvPoly unit = VvPoly::unit(shape, t);
            for (int i = 1; i <= ctx.size(); ++i) {
                const AlphaFrac ct = ctx.contents(t)[i - 1];
                CHECK(cherednik_u(unit, i) ==
                      unit.scale(AlphaFrac(1) + ct * kInvAlpha));
                CHECK(xi_tilde(unit, i) == unit.scale(ct));
            }
        }
    }

    const Shape s21{2, 1};
    for (int trial = 0; trial < 5; ++trial) {
        const VvPoly p = random_poly(s21, 2, 3, rng);

        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                CHECK(cherednik_u(cherednik_u(p, i), j) ==
                      cherednik_u(cherednik_u(p, j), i));

        // Exchange relation: acting by the exchange and then the i-th
        // operator equals the (i+1)-st operator followed by the exchange,
        // plus 1/a times the identity.
        for (int i = 1; i < 3; ++i) {
            VvPoly rhs = act_si(cherednik_u(p, i + 1), i);
            rhs.add_scaled(p, kInvAlpha);
            CHECK(cherednik_u(act_si(p, i), i) == rhs);
        }
        CHECK(cherednik_u(act_si(p, 1), 3) == act_si(cherednik_u(p, 3), 1));

        // Conjugation by the raising map shifts the index cyclically.
        for (int i = 1; i < 3; ++i)
            CHECK(xi_tilde(act_affine(p), i) == act_affine(xi_tilde(p, i + 1)));
        VvPoly wrap = act_affine(xi_tilde(p, 1));
        wrap.add_scaled(act_affine(p), kAlpha);
        CHECK(xi_tilde(act_affine(p), 3) == wrap);
    }

    for (int trial = 0; trial < 3; ++trial) {
        const VvPoly p = random_poly(s21, 1, 2, rng);
        const VvPoly q = random_poly(s21, 1, 2, rng);
        for (int i = 1; i <= 3; ++i)
            CHECK(pairing(cherednik_u(p, i), q) == pairing(p, cherednik_u(q, i)));
    }
}

TEST_CASE("dominance order on exponents") {
    CHECK(dominated_by({0, 3, 1}, {3, 1, 0}));
    CHECK_FALSE(dominated_by({3, 1, 0}, {0, 3, 1}));
    CHECK(dominated_by({1, 1, 0}, {0, 2, 0}));
    CHECK(dominated_by({0, 0, 0}, {0, 1, 0}));
    CHECK(dominated_by({2, 1, 0}, {2, 1, 0}));
    // Crossing partial sums: incomparable in both directions.
    CHECK_FALSE(dominated_by({4, 1, 1}, {3, 3, 0}));
    CHECK_FALSE(dominated_by({3, 3, 0}, {4, 1, 1}));
    // Equal rearrangements, raw vectors decide.
    CHECK(dominated_by({0, 1}, {1, 0}));
    CHECK_FALSE(dominated_by({1, 0}, {0, 1}));
}

TEST_CASE("leading monomials") {
    const Shape s21{2, 1};
    const Weight v{0, 2, 0};
    const ModuleVector witness =
        murphy_perm(module_unit(s21, 0), rank_permutation(v));

    VvPoly p(s21);
    for (const auto& [t, c] : witness.coords) p.add_term(v, t, c * kAlpha);
    p.add_term({1, 1, 0}, 1, rat(7, 2));  // dominated filler
    p.add_term({0, 0, 0}, 0, 5);

    auto lead = leading_monomial(p);
    REQUIRE(lead.has_value());
    CHECK(lead->weight == v);
    CHECK(lead->tab == 0);
    CHECK(lead->scalar == kAlpha);
    CHECK(lead->witness == witness);

    // Incomparable exponents leave the leading term undefined.
    CHECK_FALSE(leading_monomial(
                    make_poly(s21, {{{4, 1, 1}, 0, 1}, {{3, 3, 0}, 0, 1}}))
                    .has_value());
    // A mixed module coordinate at the top is not of the required form.
    CHECK_FALSE(leading_monomial(
                    make_poly(s21, {{{0, 0, 0}, 0, 1}, {{0, 0, 0}, 1, 1}}))
                    .has_value());

    // Plain monomials with the identity rank permutation.
    auto basic = leading_monomial(VvPoly::monomial(s21, {2, 1, 0}, 1, rat(1, 3)));
    REQUIRE(basic.has_value());
    CHECK(basic->tab == 1);
    CHECK(basic->scalar == rat(1, 3));
}

TEST_CASE("contravariant pairing") {
    const Shape s21{2, 1};
    CHECK(pairing(VvPoly::unit(s21, 0), VvPoly::unit(s21, 0)) == AlphaFrac(1));
    CHECK(pairing(VvPoly::unit(s21, 1), VvPoly::unit(s21, 1)) == rat(3, 4));
    CHECK(pairing(VvPoly::unit(s21, 0), VvPoly::unit(s21, 1)).is_zero());

    const Shape s22{2, 2};
    CHECK(pairing(VvPoly::unit(s22, 0), VvPoly::unit(s22, 0)) == AlphaFrac(1));
    CHECK(pairing(VvPoly::unit(s22, 1), VvPoly::unit(s22, 1)) == rat(3, 4));

    const VvPoly x1t = VvPoly::monomial(s21, {1, 0, 0}, 0, 1);
    CHECK(pairing(x1t, x1t) == frac({1, 1}, {0, 1}));  // (a+1)/a

    std::mt19937 rng(41);
    for (int trial = 0; trial < 5; ++trial) {
        const VvPoly p = random_poly(s21, 2, 3, rng);
        const VvPoly q = random_poly(s21, 2, 3, rng);
        const VvPoly r = random_poly(s21, 2, 2, rng);
        CHECK(pairing(p, q) == pairing(q, p));
        CHECK(pairing(p + r, q) == pairing(p, q) + pairing(r, q));
    }
}

TEST_CASE("shifted exchange generators") {
    const Shape s21{2, 1};
    std::mt19937 rng(47);

    for (int t = 0; t < 2; ++t)
        for (int i = 1; i < 3; ++i)
            CHECK(varsigma(VvPoly::unit(s21, t), i) ==
                  act_si(VvPoly::unit(s21, t), i));

    for (int trial = 0; trial < 6; ++trial) {
        const VvPoly p = random_poly(s21, 3, 4, rng);
        for (int i = 1; i < 3; ++i) {
            CHECK(varsigma(varsigma(p, i), i) == p);

            // x_i then the exchange equals the exchange then x_{i+1}, plus 1.
            VvPoly first = multiply_x(varsigma(p, i), i + 1);
            first += p;
            CHECK(varsigma(multiply_x(p, i), i) == first);

            VvPoly second = multiply_x(varsigma(p, i), i);
            second -= p;
            CHECK(varsigma(multiply_x(p, i + 1), i) == second);
        }
        CHECK(act_word(p, {1, 2, 1}) == act_word(p, {2, 1, 2}));
        CHECK(varsigma(varsigma(varsigma(p, 1), 2), 1) ==
              varsigma(varsigma(varsigma(p, 2), 1), 2));
        CHECK(varsigma(multiply_x(p, 3), 1) == multiply_x(varsigma(p, 1), 3));
    }
}

TEST_CASE("shifted raising map") {
    const Shape s21{2, 1};
    CHECK(shifted_psi_hat(VvPoly::unit(s21, 0)) ==
          make_poly(s21, {{{0, 0, 1}, 0, rat(-1, 2)},
                          {{0, 0, 1}, 1, 1},
                          {{0, 0, 0}, 0, -1},
                          {{0, 0, 0}, 1, 2}}));

    // One variable: x_1 goes to x_1 - a before the final multiplication.
    const Shape s1{1};
    CHECK(shifted_psi_hat(VvPoly::monomial(s1, {1}, 0, 1)) ==
          make_poly(s1, {{{2}, 0, 1}, {{1}, 0, -kAlpha}}));

    // The top degree part of the shifted map is the plain raising map.
    std::mt19937 rng(53);
    for (const Shape& shape : {Shape{2, 1}, Shape{2, 2}}) {
        for (int deg = 1; deg <= 3; ++deg) {
            const VvPoly p = random_homogeneous(shape, deg, 3, rng);
            if (p.is_zero()) continue;
            CHECK(top_part(shifted_psi_hat(p)) == act_affine(p));
        }
    }
}

TEST_CASE("shifted Cherednik operators") {
    for (const Shape& shape :
         {Shape{2, 1}, Shape{3}, Shape{1, 1, 1}, Shape{2, 2}}) {
        const auto& ctx = ShapeContext::get(shape);
        for (int t = 0; t < ctx.count(); ++t) {
            const VvPoly unit = VvPoly::unit(shape, t);
            for (int i = 1; i <= ctx.size(); ++i)
                CHECK(xi_hat(unit, i) ==
                      unit.scale(AlphaFrac(ctx.contents(t)[i - 1])));
        }
    }

    // First shifted basis elements of the smallest two-tableau shape,
    // printed coefficients pinned exactly.
    const Shape s21{2, 1};
    const VvPoly j001 = shifted_psi_hat(VvPoly::unit(s21, 0));
    const AlphaFrac inv_a1 = frac({1}, {1, 1});  // 1/(a+1)
    VvPoly j010 = varsigma(j001, 2);
    j010.add_scaled(j001, inv_a1);
    CHECK(j010 == make_poly(s21, {{{0, 1, 0}, 0, rat(1, 2)},
                                  {{0, 0, 1}, 0, frac({-1}, {2, 2})},
                                  {{0, 0, 0}, 0, frac({1, 3}, {2, 2})},
                                  {{0, 1, 0}, 1, 1},
                                  {{0, 0, 1}, 1, frac({1}, {1, 1})},
                                  {{0, 0, 0}, 1, frac({3, 1}, {1, 1})}}));

    const std::vector<AlphaFrac> zeta001 = {-1, 0, kAlpha + 1};
    const std::vector<AlphaFrac> zeta010 = {-1, kAlpha + 1, 0};
    for (int i = 1; i <= 3; ++i) {
        CHECK(xi_hat(j001, i) == j001.scale(zeta001[i - 1]));
        CHECK(xi_hat(j010, i) == j010.scale(zeta010[i - 1]));
    }

    std::mt19937 rng(59);
    for (int trial = 0; trial < 3; ++trial) {
        const VvPoly p = random_poly(s21, 2, 3, rng);
        for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 3; ++j)
                CHECK(xi_hat(xi_hat(p, i), j) == xi_hat(xi_hat(p, j), i));

        // Exchange relations, applied right to left like the composite
        // inside the operator itself.
        for (int i = 1; i < 3; ++i) {
            VvPoly rule1 = xi_hat(varsigma(p, i), i);
            rule1 -= p;
            CHECK(varsigma(xi_hat(p, i + 1), i) == rule1);
            VvPoly rule2 = xi_hat(varsigma(p, i), i + 1);
            rule2 += p;
            CHECK(varsigma(xi_hat(p, i), i) == rule2);
        }
        CHECK(varsigma(xi_hat(p, 3), 1) == xi_hat(varsigma(p, 1), 3));

        for (int i = 2; i <= 3; ++i)
            CHECK(shifted_psi_hat(xi_hat(p, i)) ==
                  xi_hat(shifted_psi_hat(p), i - 1));
        VvPoly wrap = xi_hat(shifted_psi_hat(p), 3);
        wrap.add_scaled(shifted_psi_hat(p), -kAlpha);
        CHECK(shifted_psi_hat(xi_hat(p, 1)) == wrap);
    }
}

TEST_CASE("seminormal basis polynomials") {
    // A single row carries the trivial module: the polynomial is 1.
    CHECK(seminormal(tau_lambda({3})) == ScalarPoly::one(3));

    const auto& c22 = ShapeContext::get({2, 2});
    ScalarPoly p0(4);  // (t3 - t4)(t1 - t2)
    p0.add_term({1, 0, 1, 0}, 1);
    p0.add_term({0, 1, 1, 0}, -1);
    p0.add_term({1, 0, 0, 1}, -1);
    p0.add_term({0, 1, 0, 1}, 1);
    CHECK(seminormal(c22.tableau(0)) == p0);

    ScalarPoly p1(4);
    p1.add_term({1, 1, 0, 0}, 1);
    p1.add_term({1, 0, 0, 1}, BigRat(-1, 2));
    p1.add_term({0, 1, 1, 0}, BigRat(-1, 2));
    p1.add_term({0, 0, 1, 1}, 1);
    p1.add_term({0, 1, 0, 1}, BigRat(-1, 2));
    p1.add_term({1, 0, 1, 0}, BigRat(-1, 2));
    CHECK(seminormal(c22.tableau(1)) == p1);

    // Leading term: one less than the row index, in every slot, coeff 1.
    for (const Shape& shape : {Shape{2, 1}, Shape{2, 2}, Shape{3, 2}}) {
        const auto& ctx = ShapeContext::get(shape);
        for (int t = 0; t < ctx.count(); ++t) {
            const Tableau& tau = ctx.tableau(t);
            const auto pos = entry_positions(tau);
            Exp expected(ctx.size());
            for (int e = 1; e <= ctx.size(); ++e)
                expected[e - 1] = pos[e - 1].first - 1;
            const auto [exp, coeff] = seminormal(tau).leading();
            CHECK(exp == expected);
            CHECK(coeff == 1);
        }
    }

    // Variable Jucys-Murphy sums are diagonal on the basis.
    for (const Shape& shape : {Shape{2, 2}, Shape{3, 2}}) {
        const auto& ctx = ShapeContext::get(shape);
        for (int t = 0; t < ctx.count(); ++t) {
            const ScalarPoly p = seminormal(ctx.tableau(t));
            for (int i = 1; i <= ctx.size(); ++i)
                CHECK(scalar_jucys_murphy(p, i) ==
                      p.scale(BigRat(ctx.contents(t)[i - 1])));
        }
    }

    // A taller example: the nine-box tableau used below for restriction.
    const Tableau big = make_tableau({{9, 8, 6, 4}, {7, 3, 2}, {5, 1}});
    const auto [exp, coeff] = seminormal(big).leading();
    CHECK(exp == Exp{2, 1, 1, 0, 2, 0, 1, 0, 0});
    CHECK(coeff == 1);
}

TEST_CASE("scalar restriction") {
    const Tableau big = make_tableau({{9, 8, 6, 4}, {7, 3, 2}, {5, 1}});
    const ScalarPoly restricted = restrict_scalar(seminormal(big), big, 3);
    const Tableau small = restrict_tableau(big, 3);
    CHECK(small.rows == std::vector<std::vector<int>>{{3, 2}, {1}});
    CHECK(restricted == seminormal(small).scale(BigRat(1, 6)));

    // Restriction at the full size returns the polynomial unchanged.
    const auto& c21 = ShapeContext::get({2, 1});
    for (int t = 0; t < 2; ++t) {
        const ScalarPoly p = seminormal(c21.tableau(t));
        CHECK(restrict_scalar(p, c21.tableau(t), 3) == p);
    }

    CHECK_THROWS_AS(restrict_scalar(seminormal(c21.tableau(0)),
                                    c21.tableau(0), 2),
                    PropertyRViolation);

    // Wherever the tableau restricts, the basis restricts to the basis.
    const auto& c32 = ShapeContext::get({3, 2});
    for (int t = 0; t < c32.count(); ++t) {
        const Tableau& tau = c32.tableau(t);
        const ScalarPoly p = seminormal(tau);
        for (int m = 1; m < 5; ++m) {
            if (!has_property_R(tau, m)) continue;
            const ScalarPoly cut = restrict_scalar(p, tau, m);
            REQUIRE_FALSE(cut.is_zero());
            const ScalarPoly base = seminormal(restrict_tableau(tau, m));
            const BigRat ratio = cut.leading().second / base.leading().second;
            CHECK(cut == base.scale(ratio));
        }
    }
}

TEST_CASE("variable evaluation") {
    const Shape s21{2, 1};
    const VvPoly p = make_poly(s21, {{{2, 1, 0}, 0, 1}, {{0, 1, 0}, 0, 1}});
    const VvPoly at_alpha = substitute(p, 1, kAlpha);
    CHECK(at_alpha ==
          make_poly(s21, {{{0, 1, 0}, 0, kAlpha * kAlpha + 1}}));
    CHECK(substitute(p, 2, 0).is_zero());
    CHECK(substitute(p, 3, rat(5, 1)) == p);
}
