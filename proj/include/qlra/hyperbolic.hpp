// Copyright 2026 The QLRA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>

namespace qlra {

/// Mixed relative/absolute comparison threshold.
///
/// Two reals a, b are "near" when |a - b| <= max(absolute, relative * max(|a|, |b|)).
struct Tolerance {
    double relative = 1e-9;
    double absolute = 1e-12;

    /// Uses `tol` for both the relative and the absolute part.
    static constexpr Tolerance uniform(double tol) { return Tolerance{tol, tol}; }
};

bool near(double a, double b, Tolerance tol = {});

/// An element x + j*y of the hyperbolic (split-complex) algebra, j^2 = 1.
///
/// Values are stored in light-cone coordinates
///
///     plus  = x + y,   minus = x - y,
///
/// in which the algebra splits into two copies of the reals: products,
/// conjugation and |z|^2 = x^2 - y^2 = plus * minus are exact componentwise
/// operations, and e^{j theta} = (e^theta, e^-theta) keeps full relative
/// precision even where cosh(theta) and sinh(theta) agree to every stored
/// digit. The Cartesian parts are available through re() and hy().
///
/// Every constructed value is finite; the public constructors throw
/// NonFiniteError otherwise. Arithmetic on finite values is unchecked.
class HNumber {
   public:
    constexpr HNumber() = default;

    /// Real number embedded in G. Implicit so that reals mix freely with G.
    HNumber(double re);  // NOLINT(google-explicit-constructor)
    HNumber(double re, double hy);

    static HNumber from_light_cone(double plus, double minus);
    static HNumber j() { return from_light_cone(1.0, -1.0); }

    double re() const { return 0.5 * (plus_ + minus_); }
    double hy() const { return 0.5 * (plus_ - minus_); }
    double plus() const { return plus_; }
    double minus() const { return minus_; }

    HNumber& operator+=(const HNumber& o) {
        plus_ += o.plus_;
        minus_ += o.minus_;
        return *this;
    }
    HNumber& operator-=(const HNumber& o) {
        plus_ -= o.plus_;
        minus_ -= o.minus_;
        return *this;
    }
    HNumber& operator*=(const HNumber& o) {
        plus_ *= o.plus_;
        minus_ *= o.minus_;
        return *this;
    }
    HNumber& operator*=(double s) {
        plus_ *= s;
        minus_ *= s;
        return *this;
    }

    friend HNumber operator+(HNumber a, const HNumber& b) { return a += b; }
    friend HNumber operator-(HNumber a, const HNumber& b) { return a -= b; }
    friend HNumber operator*(HNumber a, const HNumber& b) { return a *= b; }
    friend HNumber operator*(HNumber a, double s) { return a *= s; }
    friend HNumber operator*(double s, HNumber a) { return a *= s; }
    friend HNumber operator-(const HNumber& a) { return raw(-a.plus_, -a.minus_); }

    /// Exact equality of the stored representation.
    friend bool operator==(const HNumber& a, const HNumber& b) {
        return a.plus_ == b.plus_ && a.minus_ == b.minus_;
    }

   private:
    static HNumber raw(double plus, double minus) {
        HNumber z;
        z.plus_ = plus;
        z.minus_ = minus;
        return z;
    }
    friend HNumber conj(const HNumber& z);
    friend HNumber inverse(const HNumber& z);

    double plus_ = 0.0;
    double minus_ = 0.0;
};

/// x - j*y.
HNumber conj(const HNumber& z);

/// |z|^2 = z * conj(z) = x^2 - y^2. Negative off the positive cone, zero on the null cone.
double sq_modulus(const HNumber& z);

/// e^{j theta} = cosh(theta) + j*sinh(theta). Throws OverflowError when cosh(theta) overflows.
HNumber exp_j(double theta);

/// Hyperbolic argument arctanh(y/x) = ln((x+y)/(x-y)) / 2 on G+* (|z|^2 > 0), both branches x > 0
/// and x < 0. Satisfies z = sign(x) * sqrt(|z|^2) * exp_j(arg(z)). Throws DomainError off G+*.
double arg(const HNumber& z);

/// conj(z) / |z|^2. Throws ZeroDivisorError on the null cone.
HNumber inverse(const HNumber& z);

/// Componentwise comparison of the Cartesian parts, scaled by the larger magnitude of the two.
bool near(const HNumber& a, const HNumber& b, Tolerance tol = {});

/// Largest absolute difference of the Cartesian parts.
double max_abs_diff(const HNumber& a, const HNumber& b);

std::ostream& operator<<(std::ostream& os, const HNumber& z);

}  // namespace qlra
