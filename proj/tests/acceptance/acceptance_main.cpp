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

// Acceptance suite: one line per criterion, non-zero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "qlra/context.hpp"
#include "qlra/engine.hpp"
#include "qlra/equivalence.hpp"
#include "qlra/hyperbolic.hpp"
#include "qlra/linear.hpp"
#include "support/oracles.hpp"

using namespace qlra;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    const char* id;
    const char* title;
    std::function<Outcome()> check;
};

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// |a - b| measured against max(1, |a|, |b|).
double rel_err(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

double cart_err(const HNumber& z, oracle::Cart c, double scale) {
    return std::max(std::abs(z.re() - c.x), std::abs(z.hy() - c.y)) / std::max(1.0, scale);
}

double magnitude(const HNumber& z) { return std::max(std::abs(z.re()), std::abs(z.hy())); }

Outcome ac1_algebra() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1001);
    std::uniform_real_distribution<double> phase(-10.0, 10.0);
    double worst = 0.0;
    int checks = 0;
    for (int i = 0; i < 10000; ++i) {
        const HNumber a = oracle::random_hnumber(rng);
        const HNumber b = oracle::random_hnumber(rng);
        const HNumber c = oracle::random_hnumber(rng);
        const double scale = magnitude(a) * magnitude(b) * magnitude(c);

        worst = std::max(worst, rel_err(sq_modulus(a * b), sq_modulus(a) * sq_modulus(b)));
        worst = std::max(worst, cart_err(a * b, oracle::cart_mul(oracle::cart_of(a), oracle::cart_of(b)),
                                         magnitude(a) * magnitude(b)));
        worst = std::max(worst, max_abs_diff(a * b, b * a) / std::max(1.0, magnitude(a) * magnitude(b)));
        worst = std::max(worst, max_abs_diff((a * b) * c, a * (b * c)) / std::max(1.0, scale));
        worst = std::max(worst, max_abs_diff(a * (b + c), a * b + a * c) /
                                    std::max(1.0, magnitude(a) * (magnitude(b) + magnitude(c))));
        worst = std::max(worst, max_abs_diff((a + b) + c, a + (b + c)) /
                                    std::max({1.0, magnitude(a), magnitude(b), magnitude(c)}));
        worst = std::max(worst, max_abs_diff(a + (-a), HNumber(0.0)) / std::max(1.0, magnitude(a)));
        worst = std::max(worst, max_abs_diff(a * HNumber(1.0), a) / std::max(1.0, magnitude(a)));

        const double theta = phase(rng);
        const HNumber e = exp_j(theta);
        const HNumber f = exp_j(-theta);
        const double big = std::cosh(theta);
        worst = std::max(worst, rel_err(0.5 * (e + f).re(), std::cosh(theta)));
        worst = std::max(worst, std::abs(0.5 * (e + f).hy()) / big);
        worst = std::max(worst, rel_err(0.5 * (e - f).hy(), std::sinh(theta)));
        worst = std::max(worst, std::abs(0.5 * (e - f).re()) / big);
        worst = std::max(worst, rel_err(sq_modulus(e), 1.0));
        checks += 13;
    }
    const double elapsed = seconds_since(start);
    return {worst <= 1e-12 && elapsed < 1.0,
            fmt("%d checks over 10000 samples, max relative error %.2e (limit 1e-12), %.3f s (limit 1 s)", checks,
                worst, elapsed)};
}

Outcome ac2_interference_identity() {
    std::mt19937_64 rng(1002);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> phase(-5.0, 5.0);
    double worst = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const double a = 1.0 - unit(rng);
        const double b = 1.0 - unit(rng);
        const double theta = phase(rng);
        const int sign = (i % 2 == 0) ? 1 : -1;
        const HNumber z = HNumber(std::sqrt(a)) + static_cast<double>(sign) * exp_j(theta) * std::sqrt(b);
        worst = std::max(worst, rel_err(sq_modulus(z), oracle::interference_closed_form(a, b, theta, sign)));
    }
    return {worst <= 1e-11, fmt("10000 samples, A,B in (0,1], theta in [-5,5], max relative error %.2e (limit 1e-11)",
                                worst)};
}

Outcome ac3_worked_example() {
    const ProbContext ctx = oracle::ctx1();
    const InterferenceProfile b = interference_coefficients(ctx, Direction::BgivenA);
    const InterferenceProfile a = interference_coefficients(ctx, Direction::AgivenB);
    const QlraState state = run_qlra(ctx, Direction::BgivenA);
    const double errors[] = {
        std::abs(b.lambda[0] - 4.0 / 3.0),
        std::abs(b.lambda[1] + 4.0 / 3.0),
        std::abs(a.lambda[0] + 16.0 / 9.0),
        std::abs(a.lambda[1] - 16.0 / 9.0),
        std::abs(b.theta[0] - 0.79536546122390563),
        std::abs(sq_modulus(state.psi[0]) - 0.9),
        std::abs(sq_modulus(state.psi[1]) - 0.1),
        std::abs(state.psi[0].re() - 0.96896279024990887),
        std::abs(state.psi[0].hy() - 0.19720265943665387),
    };
    const double worst = *std::max_element(std::begin(errors), std::end(errors));
    const bool regimes = b.regime == Regime::Hyperbolic && a.regime == Regime::Hyperbolic;
    return {worst <= 1e-9 && regimes,
            fmt("lambda b|a = (%.12g, %.12g), lambda a|b = (%.12g, %.12g), theta = %.12g, |psi|^2 = (%.12g, %.12g), "
                "max error %.2e (limit 1e-9)",
                b.lambda[0], b.lambda[1], a.lambda[0], a.lambda[1], b.theta[0], sq_modulus(state.psi[0]),
                sq_modulus(state.psi[1]), worst)};
}

Outcome ac4_born_rule() {
    const auto start = std::chrono::steady_clock::now();
    std::mt19937_64 rng(1004);
    double worst = 0.0;
    const int count = 1000;
    for (int i = 0; i < count; ++i) {
        const ProbContext ctx = sample_hyperbolic_context(rng);
        for (Direction d : {Direction::BgivenA, Direction::AgivenB}) {
            worst = std::max(worst, verify_born_rule(run_qlra(ctx, d), ctx).max_residual);
        }
    }
    const double elapsed = seconds_since(start);
    return {worst < 1e-9 && elapsed < 5.0,
            fmt("%d generated contexts, both directions, max residual %.2e (limit 1e-9), %.3f s (limit 5 s)", count,
                worst, elapsed)};
}

Outcome ac5_proposition1() {
    std::mt19937_64 rng(1005);
    std::uniform_real_distribution<double> param(0.01, 0.99);
    double worst = 0.0;
    int hyper_trig = 0;
    int by_regime[3] = {0, 0, 0};
    const int count = 10000;
    for (int i = 0; i < count; ++i) {
        ProbContext ctx;
        const double pa = param(rng);
        const double pb = param(rng);
        ctx.p_a = {pa, 1.0 - pa};
        ctx.p_b = {pb, 1.0 - pb};
        ctx.P_b_given_a = oracle::doubly_stochastic(param(rng));
        ctx.P_a_given_b = oracle::doubly_stochastic(param(rng));
        for (Direction d : {Direction::BgivenA, Direction::AgivenB}) {
            const InterferenceProfile profile = interference_coefficients(ctx, d);
            worst = std::max(worst, std::abs(profile.lambda[0] + profile.lambda[1]));
            hyper_trig += profile.regime == Regime::HyperTrigonometric ? 1 : 0;
            ++by_regime[static_cast<int>(profile.regime)];
        }
    }
    return {worst <= 1e-10 && hyper_trig == 0,
            fmt("%d doubly stochastic contexts x 2 directions, max |lambda_1 + lambda_2| %.2e (limit 1e-10), "
                "hyper-trigonometric %d, regimes seen %d/%d/%d",
                count, worst, hyper_trig, by_regime[0], by_regime[1], by_regime[2])};
}

Outcome ac6_sufficiency() {
    std::mt19937_64 rng(1006);
    const int count = 500;
    int equivalent = 0;
    int conjugate = 0;
    double worst_deviation = 0.0;
    double worst_proof = 0.0;
    for (int i = 0; i < count; ++i) {
        const ProbContext ctx = sample_hyperbolic_context(rng);
        const EquivalenceVerdict verdict = check_consistency(ctx);
        const double proof = proof_relation_residual(ctx);
        worst_proof = std::max(worst_proof, proof);
        if (verdict.equivalent && verdict.max_component_deviation < 1e-8 && proof < 1e-8) {
            ++equivalent;
            worst_deviation = std::max(worst_deviation, verdict.max_component_deviation);
        } else if (verdict.conjugate_equivalent.value_or(false)) {
            ++conjugate;
        }
    }
    return {equivalent == count,
            fmt("%d/%d symmetric contexts equivalent (max deviation %.2e, limit 1e-8); proof relation residual max "
                "%.2e (limit 1e-8); %d of the rest match conj(U psi^{b|a}), i.e. lambda_alpha1 and lambda_beta1 "
                "share a sign",
                equivalent, count, worst_deviation, worst_proof, conjugate)};
}

Outcome ac7_necessity() {
    std::mt19937_64 rng(1007);
    const int count = 500;
    int rejected = 0;
    for (int i = 0; i < count; ++i) {
        const ProbContext ctx = oracle::perturbed_context(rng);
        const EquivalenceVerdict verdict = check_consistency(ctx);
        rejected += (!verdict.equivalent && verdict.symmetry_holds == false) ? 1 : 0;
    }
    return {rejected == count,
            fmt("%d/%d contexts with P_a_given_b moved by 0.01..0.2 rejected", rejected, count)};
}

Outcome ac8_unitarity() {
    std::mt19937_64 rng(1008);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int ok = 0;
    for (int i = 0; i < 1000; ++i) {
        ok += is_h_unitary(transition_unitary(oracle::doubly_stochastic(unit(rng))), 1e-12) ? 1 : 0;
    }
    return {ok == 1000, fmt("%d/1000 random doubly stochastic matrices give H-unitary U (tol 1e-12)", ok)};
}

Outcome ac9_violation() {
    double worst = 0.0;
    bool positive = true;
    int points = 0;
    for (int k = 0; k <= 8; ++k) {
        const double p = 0.55 + 0.05 * k;
        const double q = 1.0 - p;
        const double residual = born_violation_demo(p).residual;
        worst = std::max(worst, std::abs(residual - (p - q * q / p)));
        positive = positive && residual > 0.0;
        ++points;
    }
    bool balanced_rejected = false;
    try {
        born_violation_demo(0.5);
    } catch (const PreconditionError&) {
        balanced_rejected = true;
    }
    const double near_balance = std::abs(born_violation_demo(0.5 + 1e-9).residual);
    return {worst <= 1e-12 && positive && balanced_rejected && near_balance < 1e-8,
            fmt("%d grid points 0.55..0.95, max |residual - (p - q^2/p)| %.2e (limit 1e-12), residual at 0.5+1e-9 "
                "%.2e, p = 0.5 %s",
                points, worst, near_balance, balanced_rejected ? "rejected as doubly stochastic" : "NOT rejected")};
}

Outcome ac10_measurement_invariance() {
    std::mt19937_64 rng(1010);
    std::uniform_real_distribution<double> phase(-3.0, 3.0);
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    std::bernoulli_distribution flip(0.5);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const HVector2 psi = oracle::random_unit_vector(rng);
        const double s = flip(rng) ? -1.0 : 1.0;
        const HVector2 moved = s * (exp_j(phase(rng)) * psi);
        const auto basis = conditioning_basis(oracle::doubly_stochastic(unit(rng)));
        for (int k = 0; k < 2; ++k) {
            worst = std::max(worst, rel_err(sq_modulus(moved[k]), sq_modulus(psi[k])));
            worst = std::max(worst, rel_err(sq_modulus(inner_product(moved, basis[k])),
                                            sq_modulus(inner_product(psi, basis[k]))));
        }
    }
    return {worst <= 1e-10, fmt("1000 random (psi, gamma, s), four probabilities each, max relative error %.2e "
                                "(limit 1e-10)",
                                worst)};
}

int run_cli(const std::vector<std::string>& args, const std::string& input, std::string& out) {
    std::istringstream in(input);
    std::ostringstream o;
    std::ostringstream e;
    const int code = cli::run(args, in, o, e, {});
    out = o.str();
    return code;
}

Outcome ac11_cli_round_trip() {
    const std::vector<std::vector<std::string>> generators = {
        {"generate", "--p", "0.9", "--p-a1", "0.5", "--lambda", "1.3333333333333333"},
        {"generate", "--p", "0.9", "--p-a1", "0.5", "--lambda", "-1.3333333333333333"},
    };
    int ok = 0;
    for (const auto& args : generators) {
        std::string first_ctx;
        std::string second_ctx;
        std::string first_report;
        std::string second_report;
        const bool generated = run_cli(args, "", first_ctx) == 0 && run_cli(args, "", second_ctx) == 0;
        const bool analyzed = run_cli({"analyze", "-"}, first_ctx, first_report) == 0 &&
                              run_cli({"analyze", "-"}, second_ctx, second_report) == 0;
        ok += (generated && analyzed && first_ctx == second_ctx && first_report == second_report &&
               !first_report.empty())
                  ? 1
                  : 0;
    }
    return {ok == static_cast<int>(generators.size()),
            fmt("%d/%zu generate | analyze pipelines exit 0 with byte-identical output on repeat", ok,
                generators.size())};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "algebra laws", ac1_algebra},
        {"AC2", "interference identity", ac2_interference_identity},
        {"AC3", "worked example", ac3_worked_example},
        {"AC4", "Born rule reconstruction", ac4_born_rule},
        {"AC5", "opposite coefficients under double stochasticity", ac5_proposition1},
        {"AC6", "symmetric contexts are equivalent", ac6_sufficiency},
        {"AC7", "asymmetric contexts are not equivalent", ac7_necessity},
        {"AC8", "transition operator is unitary", ac8_unitarity},
        {"AC9", "Born rule violation without double stochasticity", ac9_violation},
        {"AC10", "measurement invariance in an equivalence class", ac10_measurement_invariance},
        {"AC11", "CLI determinism and round trip", ac11_cli_round_trip},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("threw: ") + e.what()};
        }
        failed += outcome.pass ? 0 : 1;
        std::printf("[%s] %-4s %s: %s\n", outcome.pass ? "PASS" : "FAIL", c.id, c.title, outcome.detail.c_str());
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
