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

#include "qlra/linear.hpp"

#include <algorithm>
#include <ostream>

#include "qlra/errors.hpp"

namespace qlra {

HNumber inner_product(const HVector2& u, const HVector2& v) { return u[0] * conj(v[0]) + u[1] * conj(v[1]); }

double sq_norm(const HVector2& v) {
    // In light-cone coordinates z * conj(z) has equal components, so the j-part is exactly zero.
    return inner_product(v, v).re();
}

HVector2 mat_apply(const HMatrix2& m, const HVector2& v) {
    return {{m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]}};
}

HMatrix2 mat_mul(const HMatrix2& a, const HMatrix2& b) {
    HMatrix2 out;
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
        }
    }
    return out;
}

HMatrix2 mat_adjoint(const HMatrix2& m) {
    return {{{{conj(m[0][0]), conj(m[1][0])}, {conj(m[0][1]), conj(m[1][1])}}}};
}

bool is_h_unitary(const HMatrix2& m, double tol) {
    if (!(tol > 0.0)) {
        throw PreconditionError("is_h_unitary: tolerance must be positive");
    }
    const HMatrix2 adj = mat_adjoint(m);
    const HMatrix2 id = HMatrix2::identity();
    for (const HMatrix2& product : {mat_mul(m, adj), mat_mul(adj, m)}) {
        for (std::size_t r = 0; r < 2; ++r) {
            for (std::size_t c = 0; c < 2; ++c) {
                if (max_abs_diff(product[r][c], id[r][c]) > tol) {
                    return false;
                }
            }
        }
    }
    return true;
}

double max_abs_diff(const HVector2& a, const HVector2& b) {
    return std::max(max_abs_diff(a[0], b[0]), max_abs_diff(a[1], b[1]));
}

std::ostream& operator<<(std::ostream& os, const HVector2& v) { return os << "(" << v[0] << ", " << v[1] << ")"; }

}  // namespace qlra
