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
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace qlra {

using ProbPair = std::array<double, 2>;

/// 2x2 transition matrix. entry[i][j] is the probability of outcome i of the
/// conditioned observable given outcome j of the conditioning observable, so
/// every column is a probability distribution.
using ProbMatrix = std::array<std::array<double, 2>, 2>;

/// Probabilities closer than this to 0 or 1 do not count as strictly positive.
inline constexpr double kPositivityMargin = 1e-12;

/// Default tolerance for probability sums and stochasticity checks.
inline constexpr double kDefaultTolerance = 1e-9;

/// Which transition matrix drives the construction.
enum class Direction : std::uint8_t {
    BgivenA,  ///< P^{b|a}: amplitude over b-outcomes, a is the conditioning observable
    AgivenB,  ///< P^{a|b}: amplitude over a-outcomes, b is the conditioning observable
};

enum class Regime : std::uint8_t { Trigonometric, Hyperbolic, HyperTrigonometric };

std::string_view to_string(Direction d);
std::string_view to_string(Regime r);

/// Probabilistic data of two dichotomous observables a and b.
struct ProbContext {
    ProbPair p_a{};
    ProbPair p_b{};
    ProbMatrix P_b_given_a{};
    /// When absent, transpose(P_b_given_a) is used.
    std::optional<ProbMatrix> P_a_given_b;

    ProbMatrix a_given_b() const;
    bool a_given_b_defaulted() const { return !P_a_given_b.has_value(); }
};

/// The pieces of a context seen from one conditioning order.
struct DirectionalData {
    ProbPair conditioning;  ///< marginals of the conditioning observable (p^a for BgivenA)
    ProbPair conditioned;   ///< marginals of the conditioned observable (p^b for BgivenA)
    ProbMatrix transition;  ///< rows: conditioned outcome, columns: conditioning outcome
};

DirectionalData directional(const ProbContext& ctx, Direction d);

ProbMatrix transpose(const ProbMatrix& m);

/// All row sums and all column sums equal 1 within tol.
bool is_doubly_stochastic(const ProbMatrix& m, double tol = kDefaultTolerance);

enum class ViolationKind : std::uint8_t {
    NonFinite,
    MarginalSum,
    Positivity,
    ColumnStochastic,
    NotDoublyStochastic,
};

std::string_view to_string(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::string field;    ///< e.g. "p_a" or "P_b_given_a"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool valid() const { return violations.empty(); }
    bool has(ViolationKind kind) const;
    bool has(ViolationKind kind, std::string_view field) const;
};

/// Checks marginal sums, strict positivity, column stochasticity and double stochasticity of
/// P_b_given_a and, when given explicitly, P_a_given_b. Reports every violation; never throws.
ValidationReport validate_context(const ProbContext& ctx, double tol = kDefaultTolerance);

/// Coefficients of interference for one conditioning order.
struct InterferenceProfile {
    ProbPair lambda{};
    std::array<int, 2> epsilon{};  ///< sign of lambda, +1 for lambda == 0
    /// arccosh|lambda| where |lambda| > 1, arccos(lambda) otherwise.
    ProbPair theta{};
    Regime regime = Regime::Trigonometric;
};

Regime classify(const ProbPair& lambda);

/// lambda_k = (t_k - sum_i m_i M[k][i]) / (2 sqrt(prod_i m_i M[k][i])) with m the conditioning
/// marginals, t the conditioned ones and M the transition matrix of direction d.
/// Throws DegenerateError if a product under the square root is not positive.
InterferenceProfile interference_coefficients(const ProbContext& ctx, Direction d);

/// lambda_1 + lambda_2 == 0 within tol. Throws StochasticityError unless the transition matrix of
/// direction d is doubly stochastic.
bool check_proposition1(const ProbContext& ctx, Direction d, double tol = kDefaultTolerance);

/// Builds the symmetric context with P^{b|a} = [[p, 1-p], [1-p, p]], p^a = (p_a1, 1 - p_a1) and
/// p^b chosen so that lambda_{beta_1} == lambda1. P_a_given_b is set explicitly to the transpose.
/// Throws PreconditionError for parameters outside their ranges and InfeasibleError when p^b
/// leaves (0, 1) or either direction of the result is not hyperbolic.
ProbContext generate_hyperbolic_context(double p, double p_a1, double lambda1);

/// Open interval (low, high).
struct Interval {
    double low = 0.0;
    double high = 0.0;

    double length() const { return high - low; }
    bool contains(double x) const { return low < x && x < high; }
};

struct FeasibleRange {
    Interval band;                    ///< lambda values keeping p^b in (0, 1)
    std::vector<Interval> hyperbolic; ///< band intersected with |lambda| > 1, ascending, at most two

    bool empty() const { return hyperbolic.empty(); }
    double measure() const;
};

/// Feasible lambda1 values of generate_hyperbolic_context(p, p_a1, .). Requires p, p_a1 in (0, 1).
FeasibleRange lambda_feasible_range(double p, double p_a1);

struct SamplerOptions {
    double param_low = 0.01;  ///< p and p_a1 are drawn uniformly from [param_low, param_high]
    double param_high = 0.99;
    double min_probability = 1e-3;  ///< reject draws whose p^b falls within this of 0 or 1
    int max_attempts = 100000;
};

/// Rejection-samples a feasible symmetric hyperbolic context. Deterministic for a given engine state.
ProbContext sample_hyperbolic_context(std::mt19937_64& rng, const SamplerOptions& options = {});

}  // namespace qlra
