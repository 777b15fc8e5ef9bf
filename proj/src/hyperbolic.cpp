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

#include "qlra/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "qlra/errors.hpp"

namespace qlra {

namespace {

void require_finite(double a, double b, const char* what) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        std::ostringstream msg;
        msg << what << ": non-finite component (" << a << ", " << b << ")";
        throw NonFiniteError(msg.str());
    }
}

}  // namespace

bool near(double a, double b, Tolerance tol) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= std::max(tol.absolute, tol.relative * scale);
}

HNumber::HNumber(double re) : HNumber(re, 0.0) {}

HNumber::HNumber(double re, double hy) {
    require_finite(re, hy, "HNumber");
    plus_ = re + hy;
    minus_ = re - hy;
}

HNumber HNumber::from_light_cone(double plus, double minus) {
    require_finite(plus, minus, "HNumber::from_light_cone");
    return raw(plus, minus);
}

HNumber conj(const HNumber& z) { return HNumber::raw(z.minus_, z.plus_); }

double sq_modulus(const HNumber& z) { return z.plus() * z.minus(); }

HNumber exp_j(double theta) {
    if (!std::isfinite(theta)) {
        throw NonFiniteError("exp_j: non-finite phase");
    }
    const double up = std::exp(theta);
    const double down = std::exp(-theta);
    if (!std::isfinite(up) || !std::isfinite(down) || !std::isfinite(std::cosh(theta))) {
        std::ostringstream msg;
        msg << "exp_j: cosh(" << theta << ") overflows";
        throw OverflowError(msg.str());
    }
    return HNumber::from_light_cone(up, down);
}

double arg(const HNumber& z) {
    // plus/minus = (x+y)/(x-y); both share the sign of x on the positive cone.
    if (!(z.plus() * z.minus() > 0.0)) {
        std::ostringstream msg;
        msg << "arg: " << z << " is not in the positive cone (|z|^2 = " << sq_modulus(z) << ")";
        throw DomainError(msg.str());
    }
    return 0.5 * (std::log(std::abs(z.plus())) - std::log(std::abs(z.minus())));
}

HNumber inverse(const HNumber& z) {
    if (z.plus_ == 0.0 || z.minus_ == 0.0) {
        std::ostringstream msg;
        msg << "inverse: " << z << " lies on the null cone";
        throw ZeroDivisorError(msg.str());
    }
    const double plus = 1.0 / z.plus_;
    const double minus = 1.0 / z.minus_;
    if (!std::isfinite(plus) || !std::isfinite(minus)) {
        std::ostringstream msg;
        msg << "inverse: " << z << " is too close to the null cone";
        throw ZeroDivisorError(msg.str());
    }
    return HNumber::raw(plus, minus);
}

bool near(const HNumber& a, const HNumber& b, Tolerance tol) {
    const double scale = std::max({std::abs(a.re()), std::abs(a.hy()), std::abs(b.re()), std::abs(b.hy())});
    const double bound = std::max(tol.absolute, tol.relative * scale);
    return max_abs_diff(a, b) <= bound;
}

double max_abs_diff(const HNumber& a, const HNumber& b) {
    return std::max(std::abs(a.re() - b.re()), std::abs(a.hy() - b.hy()));
}

std::ostream& operator<<(std::ostream& os, const HNumber& z) {
    const double y = z.hy();
    return os << z.re() << (std::signbit(y) ? " - " : " + ") << std::abs(y) << "j";
}

}  // namespace qlra
