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

#include <array>
#include <iosfwd>

#include "qlra/hyperbolic.hpp"

namespace qlra {

/// Coordinates of a vector in the two dimensional hyperbolic Hilbert space,
/// taken in a labeled orthonormal basis.
struct HVector2 {
    std::array<HNumber, 2> c{};

    HNumber& operator[](std::size_t i) { return c[i]; }
    const HNumber& operator[](std::size_t i) const { return c[i]; }

    friend HVector2 operator+(const HVector2& a, const HVector2& b) { return {{a[0] + b[0], a[1] + b[1]}}; }
    friend HVector2 operator-(const HVector2& a, const HVector2& b) { return {{a[0] - b[0], a[1] - b[1]}}; }
    friend HVector2 operator*(const HNumber& s, const HVector2& v) { return {{s * v[0], s * v[1]}}; }
    friend HVector2 operator*(double s, const HVector2& v) { return {{s * v[0], s * v[1]}}; }
    friend bool operator==(const HVector2&, const HVector2&) = default;
};

/// 2x2 matrix over G, row-major: rows index the output basis, columns the input basis.
struct HMatrix2 {
    std::array<std::array<HNumber, 2>, 2> m{};

    static HMatrix2 identity() { return {{{{HNumber(1.0), HNumber(0.0)}, {HNumber(0.0), HNumber(1.0)}}}}; }

    std::array<HNumber, 2>& operator[](std::size_t r) { return m[r]; }
    const std::array<HNumber, 2>& operator[](std::size_t r) const { return m[r]; }

    friend bool operator==(const HMatrix2&, const HMatrix2&) = default;
};

/// <u, v> = sum_i u_i * conj(v_i). Linear in the first argument, conjugate symmetric, indefinite.
HNumber inner_product(const HVector2& u, const HVector2& v);

/// <v, v>, which is real for every v (its j-part vanishes identically). May be zero or negative.
double sq_norm(const HVector2& v);

HVector2 mat_apply(const HMatrix2& m, const HVector2& v);
HMatrix2 mat_mul(const HMatrix2& a, const HMatrix2& b);

/// Transpose with every entry conjugated.
HMatrix2 mat_adjoint(const HMatrix2& m);

/// True iff m * adjoint(m) and adjoint(m) * m both equal the identity entrywise within `tol`
/// (absolute). Throws PreconditionError unless tol > 0.
bool is_h_unitary(const HMatrix2& m, double tol);

/// Largest absolute difference over the Cartesian parts of both components.
double max_abs_diff(const HVector2& a, const HVector2& b);

std::ostream& operator<<(std::ostream& os, const HVector2& v);

}  // namespace qlra
