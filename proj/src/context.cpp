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

#include "qlra/context.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qlra/errors.hpp"

namespace qlra {

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::BgivenA:
            return "b_given_a";
        case Direction::AgivenB:
            return "a_given_b";
    }
    return "unknown";
}

std::string_view to_string(Regime r) {
    switch (r) {
        case Regime::Trigonometric:
            return "trigonometric";
        case Regime::Hyperbolic:
            return "hyperbolic";
        case Regime::HyperTrigonometric:
            return "hyper_trigonometric";
    }
    return "unknown";
}

std::string_view to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::NonFinite:
            return "non_finite";
        case ViolationKind::MarginalSum:
            return "marginal_sum";
        case ViolationKind::Positivity:
            return "positivity";
        case ViolationKind::ColumnStochastic:
            return "column_stochastic";
        case ViolationKind::NotDoublyStochastic:
            return "not_doubly_stochastic";
    }
    return "unknown";
}

ProbMatrix transpose(const ProbMatrix& m) { return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}}; }

ProbMatrix ProbContext::a_given_b() const { return P_a_given_b.value_or(transpose(P_b_given_a)); }

DirectionalData directional(const ProbContext& ctx, Direction d) {
    if (d == Direction::BgivenA) {
        return {ctx.p_a, ctx.p_b, ctx.P_b_given_a};
    }
    return {ctx.p_b, ctx.p_a, ctx.a_given_b()};
}

bool is_doubly_stochastic(const ProbMatrix& m, double tol) {
    for (std::size_t i = 0; i < 2; ++i) {
        const double row = m[i][0] + m[i][1];
        const double col = m[0][i] + m[1][i];
        if (!(std::abs(row - 1.0) <= tol) || !(std::abs(col - 1.0) <= tol)) {
            return false;
        }
    }
    return true;
}

bool ValidationReport::has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.kind == kind; });
}

bool ValidationReport::has(ViolationKind kind, std::string_view field) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.kind == kind && v.field == field; });
}

namespace {

bool strictly_positive(double x) { return x >= kPositivityMargin && x <= 1.0 - kPositivityMargin; }

class Validator {
   public:
    explicit Validator(double tol) : tol_(tol) {}

    void marginals(const ProbPair& p, const std::string& field) {
        if (!finite(p[0]) || !finite(p[1])) {
            add(ViolationKind::NonFinite, field, "contains a non-finite value");
            return;
        }
        for (std::size_t i = 0; i < 2; ++i) {
            if (!strictly_positive(p[i])) {
                std::ostringstream msg;
                msg << field << "[" << i << "] = " << p[i] << " is not strictly inside (0, 1)";
                add(ViolationKind::Positivity, field, msg.str());
            }
        }
        const double sum = p[0] + p[1];
        if (!(std::abs(sum - 1.0) <= tol_)) {
            std::ostringstream msg;
            msg << field << " sums to " << sum << ", expected 1";
            add(ViolationKind::MarginalSum, field, msg.str());
        }
    }

    void matrix(const ProbMatrix& m, const std::string& field) {
        for (const auto& row : m) {
            if (!finite(row[0]) || !finite(row[1])) {
                add(ViolationKind::NonFinite, field, "contains a non-finite value");
                return;
            }
        }
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                if (!strictly_positive(m[i][j])) {
                    std::ostringstream msg;
                    msg << field << "[" << i << "][" << j << "] = " << m[i][j] << " is not strictly inside (0, 1)";
                    add(ViolationKind::Positivity, field, msg.str());
                }
            }
        }
        for (std::size_t j = 0; j < 2; ++j) {
            const double col = m[0][j] + m[1][j];
            if (!(std::abs(col - 1.0) <= tol_)) {
                std::ostringstream msg;
                msg << field << " column " << j << " sums to " << col << ", expected 1";
                add(ViolationKind::ColumnStochastic, field, msg.str());
            }
        }
        if (!is_doubly_stochastic(m, tol_)) {
            std::ostringstream msg;
            msg << field << " is not doubly stochastic (row sums " << m[0][0] + m[0][1] << ", " << m[1][0] + m[1][1]
                << ")";
            add(ViolationKind::NotDoublyStochastic, field, msg.str());
        }
    }

    ValidationReport take() { return std::move(report_); }

   private:
    static bool finite(double x) { return std::isfinite(x); }
    void add(ViolationKind kind, const std::string& field, std::string message) {
        report_.violations.push_back({kind, field, std::move(message)});
    }

    double tol_;
    ValidationReport report_;
};

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

}  // namespace

ValidationReport validate_context(const ProbContext& ctx, double tol) {
    Validator v(tol);
    v.marginals(ctx.p_a, "p_a");
    v.marginals(ctx.p_b, "p_b");
    v.matrix(ctx.P_b_given_a, "P_b_given_a");
    if (ctx.P_a_given_b) {
        v.matrix(*ctx.P_a_given_b, "P_a_given_b");
    }
    return v.take();
}

Regime classify(const ProbPair& lambda) {
    const bool first = std::abs(lambda[0]) > 1.0;
    const bool second = std::abs(lambda[1]) > 1.0;
    if (first && second) {
        return Regime::Hyperbolic;
    }
    if (!first && !second) {
        return Regime::Trigonometric;
    }
    return Regime::HyperTrigonometric;
}

InterferenceProfile interference_coefficients(const ProbContext& ctx, Direction d) {
    const DirectionalData data = directional(ctx, d);
    const ProbPair& m = data.conditioning;
    const ProbMatrix& t = data.transition;

    InterferenceProfile out;
    for (std::size_t k = 0; k < 2; ++k) {
        const double first = m[0] * t[k][0];
        const double second = m[1] * t[k][1];
        const double product = first * second;
        if (!(product > 0.0)) {
            std::ostringstream msg;
            msg << "interference_coefficients(" << to_string(d) << "): degenerate denominator for outcome " << k + 1
                << " (product " << product << ")";
            throw DegenerateError(msg.str());
        }
        const double lambda = (data.conditioned[k] - (first + second)) / (2.0 * std::sqrt(product));
        out.lambda[k] = lambda;
        out.epsilon[k] = sign_of(lambda);
        out.theta[k] = std::abs(lambda) > 1.0 ? std::acosh(std::abs(lambda)) : std::acos(lambda);
    }
    out.regime = classify(out.lambda);
    return out;
}

bool check_proposition1(const ProbContext& ctx, Direction d, double tol) {
    const DirectionalData data = directional(ctx, d);
    if (!is_doubly_stochastic(data.transition, tol)) {
        std::ostringstream msg;
        msg << "check_proposition1(" << to_string(d) << "): transition matrix is not doubly stochastic";
        throw StochasticityError(msg.str());
    }
    const InterferenceProfile profile = interference_coefficients(ctx, d);
    return std::abs(profile.lambda[0] + profile.lambda[1]) <= tol;
}

namespace {

void require_open_unit(double x, const char* name, const char* op) {
    if (!(x > 0.0 && x < 1.0)) {
        std::ostringstream msg;
        msg << op << ": " << name << " = " << x << " must lie in (0, 1)";
        throw PreconditionError(msg.str());
    }
}

struct BandTerms {
    double classical;  // S: classical total probability of beta_1
    double scale;      // R: sqrt(p_a1 p (1 - p_a1)(1 - p))
};

BandTerms band_terms(double p, double p_a1) {
    const double q = 1.0 - p;
    const double q_a = 1.0 - p_a1;
    return {p_a1 * p + q_a * q, std::sqrt(p_a1 * p * q_a * q)};
}

}  // namespace

ProbContext generate_hyperbolic_context(double p, double p_a1, double lambda1) {
    require_open_unit(p, "p", "generate_hyperbolic_context");
    require_open_unit(p_a1, "p_a1", "generate_hyperbolic_context");
    if (!(std::abs(lambda1) > 1.0) || !std::isfinite(lambda1)) {
        std::ostringstream msg;
        msg << "generate_hyperbolic_context: |lambda1| = " << std::abs(lambda1) << " must exceed 1";
        throw PreconditionError(msg.str());
    }

    const BandTerms terms = band_terms(p, p_a1);
    const double p_b1 = terms.classical + 2.0 * lambda1 * terms.scale;
    if (!strictly_positive(p_b1)) {
        std::ostringstream msg;
        msg << "generate_hyperbolic_context: p_b1 = " << p_b1 << " is outside (0, 1)";
        throw InfeasibleError(msg.str());
    }

    ProbContext ctx;
    ctx.p_a = {p_a1, 1.0 - p_a1};
    ctx.p_b = {p_b1, 1.0 - p_b1};
    ctx.P_b_given_a = {{{p, 1.0 - p}, {1.0 - p, p}}};
    ctx.P_a_given_b = transpose(ctx.P_b_given_a);

    for (Direction d : {Direction::BgivenA, Direction::AgivenB}) {
        const InterferenceProfile profile = interference_coefficients(ctx, d);
        if (profile.regime != Regime::Hyperbolic) {
            std::ostringstream msg;
            msg << "generate_hyperbolic_context: direction " << to_string(d) << " is " << to_string(profile.regime)
                << " (lambda = " << profile.lambda[0] << ", " << profile.lambda[1] << ")";
            throw InfeasibleError(msg.str());
        }
    }
    return ctx;
}

double FeasibleRange::measure() const {
    double total = 0.0;
    for (const Interval& i : hyperbolic) {
        total += i.length();
    }
    return total;
}

FeasibleRange lambda_feasible_range(double p, double p_a1) {
    require_open_unit(p, "p", "lambda_feasible_range");
    require_open_unit(p_a1, "p_a1", "lambda_feasible_range");

    const BandTerms terms = band_terms(p, p_a1);
    FeasibleRange out;
    out.band = {-terms.classical / (2.0 * terms.scale), (1.0 - terms.classical) / (2.0 * terms.scale)};
    if (out.band.low < -1.0) {
        out.hyperbolic.push_back({out.band.low, std::min(out.band.high, -1.0)});
    }
    if (out.band.high > 1.0) {
        out.hyperbolic.push_back({std::max(out.band.low, 1.0), out.band.high});
    }
    return out;
}

ProbContext sample_hyperbolic_context(std::mt19937_64& rng, const SamplerOptions& options) {
    std::uniform_real_distribution<double> param(options.param_low, options.param_high);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int attempt = 0; attempt < options.max_attempts; ++attempt) {
        const double p = param(rng);
        const double p_a1 = param(rng);
        const FeasibleRange range = lambda_feasible_range(p, p_a1);
        if (range.empty()) {
            continue;
        }
        double pick = unit(rng) * range.measure();
        Interval chosen = range.hyperbolic.back();
        for (const Interval& i : range.hyperbolic) {
            if (pick < i.length()) {
                chosen = i;
                break;
            }
            pick -= i.length();
        }
        const double lambda1 = chosen.low + unit(rng) * chosen.length();
        if (!(std::abs(lambda1) > 1.0)) {
            continue;
        }
        const BandTerms terms = band_terms(p, p_a1);
        const double p_b1 = terms.classical + 2.0 * lambda1 * terms.scale;
        if (p_b1 < options.min_probability || p_b1 > 1.0 - options.min_probability) {
            continue;
        }
        try {
            return generate_hyperbolic_context(p, p_a1, lambda1);
        } catch (const InfeasibleError&) {
            continue;
        }
    }
    throw InfeasibleError("sample_hyperbolic_context: no feasible context found within the attempt budget");
}

}  // namespace qlra
