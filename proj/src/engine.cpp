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

#include "qlra/engine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qlra/errors.hpp"

namespace qlra {

namespace {

void require_valid_marginals(const ProbPair& p, const char* name, double tol) {
    for (double x : p) {
        if (!(x >= kPositivityMargin && x <= 1.0 - kPositivityMargin)) {
            std::ostringstream msg;
            msg << "run_qlra: " << name << " has an entry outside (0, 1): " << x;
            throw PreconditionError(msg.str());
        }
    }
    if (!(std::abs(p[0] + p[1] - 1.0) <= tol)) {
        std::ostringstream msg;
        msg << "run_qlra: " << name << " sums to " << p[0] + p[1];
        throw PreconditionError(msg.str());
    }
}

}  // namespace

std::array<HVector2, 2> conditioning_basis(const ProbMatrix& m, double tol) {
    if (!is_doubly_stochastic(m, tol)) {
        throw StochasticityError("conditioning_basis: transition matrix is not doubly stochastic");
    }
    return {{
        {{HNumber(std::sqrt(m[0][0])), HNumber(std::sqrt(m[1][0]))}},
        {{HNumber(std::sqrt(m[0][1])), HNumber(-std::sqrt(m[1][1]))}},
    }};
}

QlraState run_qlra(const ProbContext& ctx, Direction d, const QlraOptions& options) {
    const DirectionalData data = directional(ctx, d);
    require_valid_marginals(data.conditioning, d == Direction::BgivenA ? "p_a" : "p_b", options.tol);
    require_valid_marginals(data.conditioned, d == Direction::BgivenA ? "p_b" : "p_a", options.tol);
    if (!is_doubly_stochastic(data.transition, options.tol)) {
        std::ostringstream msg;
        msg << "run_qlra(" << to_string(d) << "): transition matrix is not doubly stochastic";
        throw StochasticityError(msg.str());
    }

    QlraState state;
    state.direction = d;
    state.profile = interference_coefficients(ctx, d);
    if (state.profile.regime != Regime::Hyperbolic) {
        std::ostringstream msg;
        msg << "run_qlra(" << to_string(d) << "): data is " << to_string(state.profile.regime) << ", |lambda| = ("
            << std::abs(state.profile.lambda[0]) << ", " << std::abs(state.profile.lambda[1])
            << "); a hyperbolic representation needs both above 1";
        throw RegimeError(msg.str());
    }
    state.conditioning_basis = conditioning_basis(data.transition, options.tol);
    state.conditioning_marginals = data.conditioning;
    state.sign_choice = sign_value(options.branch);

    const ProbPair& m = data.conditioning;
    const ProbMatrix& t = data.transition;
    const HNumber phase = static_cast<double>(state.interference_sign()) * exp_j(state.phase());
    const HVector2 raw{{
        HNumber(std::sqrt(m[0] * t[0][0])) + phase * std::sqrt(m[1] * t[0][1]),
        HNumber(std::sqrt(m[0] * t[1][0])) - phase * std::sqrt(m[1] * t[1][1]),
    }};
    state.psi = static_cast<double>(state.sign_choice) * raw;
    return state;
}

BornReport verify_born_rule(const QlraState& state, const ProbContext& ctx) {
    const DirectionalData data = directional(ctx, state.direction);
    BornReport report;
    for (std::size_t k = 0; k < 2; ++k) {
        report.conditioned_residuals[k] = std::abs(sq_modulus(state.psi[k]) - data.conditioned[k]);
        const HNumber overlap = inner_product(state.psi, state.conditioning_basis[k]);
        report.conditioning_residuals[k] = std::abs(sq_modulus(overlap) - data.conditioning[k]);
    }
    report.max_residual = std::max({report.conditioned_residuals[0], report.conditioned_residuals[1],
                                    report.conditioning_residuals[0], report.conditioning_residuals[1]});
    return report;
}

double expansion_consistency(const QlraState& state) {
    const ProbPair& m = state.conditioning_marginals;
    const HNumber phase = static_cast<double>(state.interference_sign()) * exp_j(state.phase());
    const HVector2 expansion = static_cast<double>(state.sign_choice) *
                               (std::sqrt(m[0]) * state.conditioning_basis[0] +
                                (phase * std::sqrt(m[1])) * state.conditioning_basis[1]);
    return max_abs_diff(state.psi, expansion);
}

ViolationDemo born_violation_demo(double p, double p_a1, double p_b1) {
    if (!(p > 0.0 && p < 1.0)) {
        std::ostringstream msg;
        msg << "born_violation_demo: p = " << p << " must lie in (0, 1)";
        throw PreconditionError(msg.str());
    }
    for (double x : {p_a1, p_b1}) {
        if (!(x > 0.0 && x < 1.0)) {
            throw PreconditionError("born_violation_demo: marginals must lie in (0, 1)");
        }
    }
    const double q = 1.0 - p;
    if (std::abs(p - q) <= kPositivityMargin) {
        throw PreconditionError(
            "born_violation_demo: p = 1/2 makes [[p, p], [q, q]] doubly stochastic, so Born's rule is not violated");
    }

    ViolationDemo demo;
    demo.p = p;
    demo.q = q;
    demo.transition = {{{p, p}, {q, q}}};
    demo.basis = {{
        {{HNumber(std::sqrt(p)), HNumber(std::sqrt(q))}},
        {{HNumber(std::sqrt(p)), HNumber(-(q / p) * std::sqrt(q))}},
    }};
    demo.p_a = {p_a1, 1.0 - p_a1};
    demo.p_b = {p_b1, 1.0 - p_b1};

    ProbContext ctx;
    ctx.p_a = demo.p_a;
    ctx.p_b = demo.p_b;
    ctx.P_b_given_a = demo.transition;
    demo.lambda = interference_coefficients(ctx, Direction::BgivenA).lambda;
    demo.lambda_relation_residual = std::abs(demo.lambda[0] + (q / p) * demo.lambda[1]);

    demo.overlap = inner_product(demo.basis[0], demo.basis[1]);
    demo.overlap_sq_modulus = sq_modulus(demo.overlap);
    demo.residual = demo.overlap.re();
    demo.expected_residual = p - q * q / p;
    return demo;
}

}  // namespace qlra
