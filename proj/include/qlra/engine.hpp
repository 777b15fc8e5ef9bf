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
#include <cstdint>

#include "qlra/context.hpp"
#include "qlra/linear.hpp"

namespace qlra {

/// Global sign of the reconstructed amplitude. Both branches represent the same quantum-like
/// state and reproduce the same probabilities.
enum class SignBranch : std::uint8_t { Plus, Minus };

inline int sign_value(SignBranch b) { return b == SignBranch::Plus ? 1 : -1; }

/// A reconstructed hyperbolic amplitude for one conditioning order.
///
/// psi holds coordinates in the canonical basis of the conditioned observable (the b-basis of
/// H^{b|a} for BgivenA, the a-basis of H^{a|b} for AgivenB). conditioning_basis holds the basis
/// of the other observable in the same space.
struct QlraState {
    HVector2 psi;
    Direction direction = Direction::BgivenA;
    InterferenceProfile profile;
    std::array<HVector2, 2> conditioning_basis;
    ProbPair conditioning_marginals{};
    int sign_choice = 1;

    /// The interference sign s = epsilon of the first conditioned outcome.
    int interference_sign() const { return profile.epsilon[0]; }
    double phase() const { return profile.theta[0]; }
};

struct QlraOptions {
    double tol = kDefaultTolerance;
    SignBranch branch = SignBranch::Plus;
};

/// Basis of the conditioning observable built from a doubly stochastic transition matrix:
///
///     e_1 = ( sqrt(M[0][0]),  sqrt(M[1][0]) ),   e_2 = ( sqrt(M[0][1]), -sqrt(M[1][1]) ).
///
/// Throws StochasticityError if M is not doubly stochastic within tol, since the pair is then
/// no longer orthonormal.
std::array<HVector2, 2> conditioning_basis(const ProbMatrix& m, double tol = kDefaultTolerance);

/// Runs the representation algorithm for one conditioning order. With s the sign of the first
/// coefficient of interference and theta = arccosh|lambda_1|,
///
///     psi_1 = sqrt(m_1 M[0][0]) + s e^{j theta} sqrt(m_2 M[0][1])
///     psi_2 = sqrt(m_1 M[1][0]) - s e^{j theta} sqrt(m_2 M[1][1])
///
/// multiplied by the global sign of options.branch.
///
/// Throws PreconditionError for invalid marginals, StochasticityError when the transition matrix
/// is not doubly stochastic, and RegimeError unless both |lambda| exceed 1.
QlraState run_qlra(const ProbContext& ctx, Direction d, const QlraOptions& options = {});

struct BornReport {
    ProbPair conditioned_residuals{};   ///< | |psi_k|^2 - p_k | for the conditioned observable
    ProbPair conditioning_residuals{};  ///< | |<psi, e_k>|^2 - p_k | for the conditioning basis
    double max_residual = 0.0;
};

/// Born's rule for both observables of the state's direction, measured against ctx.
BornReport verify_born_rule(const QlraState& state, const ProbContext& ctx);

/// Largest componentwise deviation between psi and its expansion
/// sign * (sqrt(m_1) e_1 + s e^{j theta} sqrt(m_2) e_2) in the conditioning basis.
double expansion_consistency(const QlraState& state);

struct ViolationDemo {
    double p = 0.0;
    double q = 0.0;
    ProbMatrix transition{};               ///< [[p, p], [q, q]], column stochastic only
    std::array<HVector2, 2> basis;         ///< (sqrt p, sqrt q) and (sqrt p, -(q/p) sqrt q)
    ProbPair p_a{};
    ProbPair p_b{};
    ProbPair lambda{};
    double lambda_relation_residual = 0.0; ///< |lambda_1 + (q/p) lambda_2|
    HNumber overlap;                       ///< <e_1, e_2>
    double overlap_sq_modulus = 0.0;       ///< |<e_1, e_2>|^2
    double residual = 0.0;                 ///< real overlap, equal to p - q^2/p
    double expected_residual = 0.0;        ///< p - q^2/p evaluated directly
};

/// Counterexample for a transition matrix that is column stochastic but not doubly stochastic:
/// the modified basis pair fails to be orthogonal unless p == q. The coefficients of interference
/// are evaluated for marginals p^a = (p_a1, 1 - p_a1) and p^b = (p_b1, 1 - p_b1).
/// Throws PreconditionError for p outside (0, 1) and for p == 1/2, where the matrix is doubly
/// stochastic.
ViolationDemo born_violation_demo(double p, double p_a1 = 0.5, double p_b1 = 0.5);

}  // namespace qlra
