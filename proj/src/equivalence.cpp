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

#include "qlra/equivalence.hpp"

#include <cmath>
#include <sstream>

#include "qlra/errors.hpp"

namespace qlra {

HMatrix2 transition_unitary(const ProbMatrix& P, double tol) {
    if (!is_doubly_stochastic(P, tol)) {
        throw StochasticityError("transition_unitary: P_b_given_a is not doubly stochastic");
    }
    HMatrix2 u;
    u[0][0] = HNumber(std::sqrt(P[0][0]));
    u[0][1] = HNumber(std::sqrt(P[0][1]));
    u[1][0] = HNumber(std::sqrt(P[1][0]));
    u[1][1] = HNumber(-std::sqrt(P[1][1]));
    return u;
}

EquivalenceVerdict states_equivalent(const HVector2& v1, const HVector2& v2, double tol) {
    for (const HVector2* v : {&v1, &v2}) {
        const double norm = sq_norm(*v);
        if (!(std::abs(norm - 1.0) <= tol)) {
            std::ostringstream msg;
            msg << "states_equivalent: " << *v << " has squared norm " << norm << ", expected 1";
            throw PreconditionError(msg.str());
        }
    }

    const std::size_t k = std::abs(sq_modulus(v2[1])) > std::abs(sq_modulus(v2[0])) ? 1 : 0;
    if (!(std::abs(sq_modulus(v2[k])) > kNullConeGuard)) {
        std::ostringstream msg;
        msg << "states_equivalent: every component of " << v2 << " lies on the null cone";
        throw DegenerateError(msg.str());
    }

    const HNumber c = v1[k] * inverse(v2[k]);
    EquivalenceVerdict verdict;
    verdict.multiplier = c;
    verdict.max_component_deviation = max_abs_diff(v1, c * v2);
    verdict.equivalent = std::abs(sq_modulus(c) - 1.0) <= tol && verdict.max_component_deviation <= tol;
    if (verdict.equivalent) {
        // |c|^2 = 1 puts c on the unit hyperbola, so |re c| >= 1 and the sign is well defined.
        const int s = c.re() < 0.0 ? -1 : 1;
        verdict.sign = s;
        verdict.gamma = arg(static_cast<double>(s) * c);
    }
    return verdict;
}

namespace {

bool symmetric_pair(const ProbMatrix& b_given_a, const ProbMatrix& a_given_b, double tol) {
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            if (!(std::abs(b_given_a[i][j] - a_given_b[j][i]) <= tol)) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

EquivalenceVerdict check_consistency(const ProbContext& ctx, const ConsistencyOptions& options) {
    const QlraState b_given_a = run_qlra(ctx, Direction::BgivenA, {options.tol, options.b_given_a_branch});
    const QlraState a_given_b = run_qlra(ctx, Direction::AgivenB, {options.tol, options.a_given_b_branch});
    const HVector2 mapped = mat_apply(transition_unitary(ctx.P_b_given_a, options.tol), b_given_a.psi);

    EquivalenceVerdict verdict = states_equivalent(a_given_b.psi, mapped, options.tol);
    verdict.symmetry_holds = symmetric_pair(ctx.P_b_given_a, ctx.a_given_b(), options.tol);
    verdict.relative_phase = arg(a_given_b.psi[1]) - arg(a_given_b.psi[0]);
    const HVector2 mirrored{{conj(mapped[0]), conj(mapped[1])}};
    verdict.conjugate_equivalent = states_equivalent(a_given_b.psi, mirrored, options.tol).equivalent;
    return verdict;
}

double proof_relation_residual(const ProbContext& ctx, double tol) {
    const QlraState a_given_b = run_qlra(ctx, Direction::AgivenB, {tol, SignBranch::Plus});
    const InterferenceProfile b_given_a = interference_coefficients(ctx, Direction::BgivenA);
    if (b_given_a.regime != Regime::Hyperbolic) {
        throw RegimeError("proof_relation_residual: b|a data is not hyperbolic");
    }
    const double relative = arg(a_given_b.psi[1]) - arg(a_given_b.psi[0]);
    return std::abs(std::cosh(relative) - std::cosh(b_given_a.theta[0]));
}

}  // namespace qlra
