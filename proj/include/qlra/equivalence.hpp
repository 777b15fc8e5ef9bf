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

#include <optional>

#include "qlra/context.hpp"
#include "qlra/engine.hpp"
#include "qlra/linear.hpp"

namespace qlra {

/// Components of v2 with |v2_k|^2 at or below this magnitude are never divided by.
inline constexpr double kNullConeGuard = 1e-6;

/// Outcome of comparing two unit vectors up to a multiplier s * e^{j gamma}, s = +-1.
struct EquivalenceVerdict {
    bool equivalent = false;
    std::optional<double> gamma;       ///< phase of the multiplier: v1 = sign * e^{j gamma} * v2
    std::optional<int> sign;           ///< the s above
    std::optional<HNumber> multiplier; ///< raw c = v1_k / v2_k for the selected component k
    /// Whether P^{b|a}[i][j] == P^{a|b}[j][i]; only set by check_consistency.
    std::optional<bool> symmetry_holds;
    /// gamma_{alpha_2} - gamma_{alpha_1} of the a|b amplitude; only set by check_consistency.
    std::optional<double> relative_phase;
    /// Whether the a|b amplitude matches conj(U psi^{b|a}) up to a multiplier; only set by check_consistency.
    /// With theta >= 0 this is the case exactly when lambda_{alpha_1} and lambda_{beta_1} share a sign.
    std::optional<bool> conjugate_equivalent;
    double max_component_deviation = 0.0;

    /// The unitary maps one state onto the other exactly when the symmetry condition holds.
    bool agrees_with_symmetry() const { return symmetry_holds && equivalent == *symmetry_holds; }
};

/// The operator carrying the a-basis of H^{b|a} onto the a-basis of H^{a|b}:
///
///     [[ sqrt(P[0][0]),  sqrt(P[0][1]) ],
///      [ sqrt(P[1][0]), -sqrt(P[1][1]) ]].
///
/// Throws StochasticityError unless P is doubly stochastic within tol.
HMatrix2 transition_unitary(const ProbMatrix& P_b_given_a, double tol = kDefaultTolerance);

/// Decides whether v1 = +-e^{j gamma} v2. The multiplier is read off the component of v2 with the
/// largest |.|^2, and accepted when |c|^2 = 1 and v1 = c v2 componentwise, both within tol.
/// Throws PreconditionError unless both vectors have unit squared norm within tol, and
/// DegenerateError when every component of v2 sits on the null cone.
EquivalenceVerdict states_equivalent(const HVector2& v1, const HVector2& v2, double tol = kDefaultTolerance);

struct ConsistencyOptions {
    double tol = kDefaultTolerance;
    SignBranch b_given_a_branch = SignBranch::Plus;
    SignBranch a_given_b_branch = SignBranch::Plus;
};

/// Runs both conditioning orders, maps the b|a amplitude with transition_unitary and compares it
/// with the a|b amplitude. Also evaluates the symmetry condition on the two matrices.
/// Propagates the errors of run_qlra.
EquivalenceVerdict check_consistency(const ProbContext& ctx, const ConsistencyOptions& options = {});

/// |cosh(gamma_2 - gamma_1) - cosh(theta_{beta_1})| where gamma_i = arg(psi^{a|b}_i).
/// Vanishes for symmetric contexts. Throws DomainError if an amplitude component leaves G+*,
/// and propagates the errors of run_qlra.
double proof_relation_residual(const ProbContext& ctx, double tol = kDefaultTolerance);

}  // namespace qlra
