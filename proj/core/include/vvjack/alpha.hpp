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

// Exact arithmetic over Q(a), the field of rational functions in one
// transcendental parameter. Every coefficient in the library lives here.

#ifndef VVJACK_ALPHA_HPP
#define VVJACK_ALPHA_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "vvjack/errors.hpp"

namespace vvjack {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Dense univariate polynomial over Q in the parameter, coefficients stored
// ascending by degree with no trailing zero. The zero polynomial is the
// empty coefficient list (degree -1).
class AlphaPoly {
  public:
    AlphaPoly() = default;
    AlphaPoly(const BigRat& c);           // NOLINT: implicit by design
    AlphaPoly(long c) : AlphaPoly(BigRat(c)) {}
    explicit AlphaPoly(std::vector<BigRat> coeffs);

    static AlphaPoly variable();                       // the parameter itself
    static AlphaPoly linear(const BigRat& a, const BigRat& b);  // a*x + b

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const BigRat& coeff(int k) const;  // zero outside the stored range
    const std::vector<BigRat>& coeffs() const { return c_; }
    const BigRat& leading() const;

    AlphaPoly operator-() const;
    AlphaPoly operator+(const AlphaPoly& o) const;
    AlphaPoly operator-(const AlphaPoly& o) const;
    AlphaPoly operator*(const AlphaPoly& o) const;
    AlphaPoly scale(const BigRat& s) const;
    bool operator==(const AlphaPoly& o) const { return c_ == o.c_; }
    bool operator!=(const AlphaPoly& o) const { return !(*this == o); }

    // Quotient and remainder over Q; divisor must be nonzero.
    static void divmod(const AlphaPoly& a, const AlphaPoly& b, AlphaPoly& q,
                       AlphaPoly& r);
    // Division known to be exact; throws DomainError on a nonzero remainder.
    static AlphaPoly div_exact(const AlphaPoly& a, const AlphaPoly& b);
    // Gcd by the Euclidean algorithm, returned primitive with integer
    // coefficients and positive leading coefficient; gcd(0,0) = 0.
    static AlphaPoly gcd(AlphaPoly a, AlphaPoly b);

    // Writes *this = content * primitive, where primitive has coprime
    // integer coefficients and positive leading coefficient. content
    // carries the sign; zero has content 0 and primitive 0.
    void split_content(BigRat& content, AlphaPoly& primitive) const;

    BigRat evaluate(const BigRat& x) const;
    // Coefficients as integer strings, ascending. Only valid once the
    // polynomial has integer coefficients (canonical fraction parts do).
    std::vector<std::string> integer_strings() const;

    std::string to_string(const char* var = "a") const;

  private:
    void trim();
    std::vector<BigRat> c_;
};

// Element of Q(a) in a unique canonical form: numerator and denominator are
// integer-coefficient polynomials, coprime over Q[a], with coprime contents
// and positive leading coefficient in the denominator. Zero is 0/1.
class AlphaFrac {
  public:
    AlphaFrac() : num_(), den_(1) {}
    AlphaFrac(long v) : num_(v), den_(1) {}  // NOLINT: implicit by design
    AlphaFrac(const BigRat& v);              // NOLINT: implicit by design
    AlphaFrac(const AlphaPoly& p) : num_(p), den_(1) { canonicalize(); }
    AlphaFrac(AlphaPoly num, AlphaPoly den);

    static AlphaFrac alpha();                                  // the parameter
    static AlphaFrac linear(const BigRat& a, const BigRat& b);  // a*alpha + b

    const AlphaPoly& num() const { return num_; }
    const AlphaPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // True when the value is a plain rational (denominator degree 0 too).
    bool is_constant() const;
    BigRat constant_value() const;  // requires is_constant()

    AlphaFrac operator-() const;
    friend AlphaFrac operator+(const AlphaFrac& x, const AlphaFrac& y);
    friend AlphaFrac operator-(const AlphaFrac& x, const AlphaFrac& y);
    friend AlphaFrac operator*(const AlphaFrac& x, const AlphaFrac& y);
    friend AlphaFrac operator/(const AlphaFrac& x, const AlphaFrac& y);
    AlphaFrac& operator+=(const AlphaFrac& o) { return *this = *this + o; }
    AlphaFrac& operator-=(const AlphaFrac& o) { return *this = *this - o; }
    AlphaFrac& operator*=(const AlphaFrac& o) { return *this = *this * o; }
    AlphaFrac& operator/=(const AlphaFrac& o) { return *this = *this / o; }
    AlphaFrac inverse() const;
    friend bool operator==(const AlphaFrac& x, const AlphaFrac& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const AlphaFrac& x, const AlphaFrac& y) {
        return !(x == y);
    }

    // Exact value at a rational parameter; throws SingularValue at a pole.
    BigRat evaluate_at(const BigRat& x) const;

    std::string to_string(const char* var = "a") const;

  private:
    void canonicalize();
    AlphaPoly num_, den_;
};

}  // namespace vvjack

#endif
