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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "qlra/equivalence.hpp"
#include "qlra/errors.hpp"

namespace qlra::cli {

Environment Environment::from_process() {
    Environment env;
    if (const char* tol = std::getenv("QLRA_TOLERANCE")) {
        env.tolerance = tol;
    }
    return env;
}

double round_significant(double x) {
    if (!std::isfinite(x)) {
        return x;
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    const double rounded = std::strtod(buf, nullptr);
    return rounded == 0.0 ? 0.0 : rounded;
}

std::string format_number(double x) { return Json(round_significant(x)).dump(); }

namespace {

Json num(double x) { return Json(round_significant(x)); }

Json pair_json(const ProbPair& p) { return Json::array({num(p[0]), num(p[1])}); }

Json matrix_json(const ProbMatrix& m) {
    return Json::array({Json::array({num(m[0][0]), num(m[0][1])}), Json::array({num(m[1][0]), num(m[1][1])})});
}

Json context_json(const ProbContext& ctx) {
    Json j = Json::object();
    j["p_a"] = pair_json(ctx.p_a);
    j["p_b"] = pair_json(ctx.p_b);
    j["P_b_given_a"] = matrix_json(ctx.P_b_given_a);
    if (ctx.P_a_given_b) {
        j["P_a_given_b"] = matrix_json(*ctx.P_a_given_b);
    }
    return j;
}

Json hnumber_json(const HNumber& z) { return Json::array({num(z.re()), num(z.hy())}); }

Json hvector_json(const HVector2& v) { return Json::array({hnumber_json(v[0]), hnumber_json(v[1])}); }

/// Higher rank wins when several conditions occur.
int rank(int code) {
    switch (code) {
        case kInvalidInput:
            return 3;
        case kRegimeError:
            return 2;
        case kInconsistent:
            return 1;
        default:
            return 0;
    }
}

int worse(int a, int b) { return rank(b) > rank(a) ? b : a; }

std::string_view status_name(int code) {
    switch (code) {
        case kInvalidInput:
            return "invalid_input";
        case kRegimeError:
            return "regime_error";
        case kInconsistent:
            return "inconsistent";
        default:
            return "ok";
    }
}

std::string_view filter_name(DirectionFilter f) {
    switch (f) {
        case DirectionFilter::BgivenA:
            return "b_given_a";
        case DirectionFilter::AgivenB:
            return "a_given_b";
        case DirectionFilter::Both:
            break;
    }
    return "both";
}

Json error_entry(std::string_view code, std::string_view where, const std::string& message) {
    Json e = Json::object();
    e["code"] = code;
    e["where"] = where;
    e["message"] = message;
    return e;
}

std::string regime_message(Direction d, const InterferenceProfile& profile) {
    std::ostringstream msg;
    msg << to_string(d) << " data is " << to_string(profile.regime) << ":";
    for (std::size_t k = 0; k < 2; ++k) {
        const double magnitude = std::abs(profile.lambda[k]);
        msg << " |lambda_" << k + 1 << "| = " << format_number(magnitude) << (magnitude > 1.0 ? " > 1" : " <= 1")
            << (k == 0 ? "," : "");
    }
    return msg.str();
}

}  // namespace

Json violation_demo_json(const ViolationDemo& demo) {
    Json j = Json::object();
    j["p"] = num(demo.p);
    j["q"] = num(demo.q);
    j["transition"] = matrix_json(demo.transition);
    j["basis"] = Json::array({hvector_json(demo.basis[0]), hvector_json(demo.basis[1])});
    j["p_a"] = pair_json(demo.p_a);
    j["p_b"] = pair_json(demo.p_b);
    j["lambda"] = pair_json(demo.lambda);
    j["lambda_relation_residual"] = num(demo.lambda_relation_residual);
    j["overlap"] = hnumber_json(demo.overlap);
    j["overlap_sq_modulus"] = num(demo.overlap_sq_modulus);
    j["residual"] = num(demo.residual);
    j["expected_residual"] = num(demo.expected_residual);
    j["born_rule_violated"] = std::abs(demo.residual) > 0.0;
    return j;
}

AnalysisResult analyze_context(const ProbContext& ctx, const AnalyzeOptions& options) {
    AnalysisResult result;
    Json& report = result.report;
    Json errors = Json::array();
    int code = kOk;

    report["tool"] = kToolName;
    report["version"] = kVersion;
    report["tolerance"] = num(options.tol);
    report["sign_branch"] = options.branch == SignBranch::Plus ? "plus" : "minus";
    report["directions_requested"] = filter_name(options.filter);

    Json input = Json::object();
    input["p_a"] = pair_json(ctx.p_a);
    input["p_b"] = pair_json(ctx.p_b);
    input["P_b_given_a"] = matrix_json(ctx.P_b_given_a);
    input["P_a_given_b"] = ctx.P_a_given_b ? matrix_json(*ctx.P_a_given_b) : Json(nullptr);
    input["P_a_given_b_defaulted"] = ctx.a_given_b_defaulted();
    input["P_a_given_b_effective"] = matrix_json(ctx.a_given_b());
    report["input"] = input;

    const ValidationReport validation = validate_context(ctx, options.tol);
    Json violations = Json::array();
    for (const Violation& v : validation.violations) {
        Json entry = Json::object();
        entry["kind"] = to_string(v.kind);
        entry["field"] = v.field;
        entry["message"] = v.message;
        violations.push_back(entry);
        errors.push_back(error_entry("invalid_input", v.field, v.message));
    }
    report["validation"] = {{"valid", validation.valid()}, {"violations", violations}};

    Json directions = Json::object();
    bool all_hyperbolic = validation.valid();
    if (!validation.valid()) {
        code = worse(code, kInvalidInput);
    } else {
        std::vector<Direction> requested;
        if (options.filter != DirectionFilter::AgivenB) {
            requested.push_back(Direction::BgivenA);
        }
        if (options.filter != DirectionFilter::BgivenA) {
            requested.push_back(Direction::AgivenB);
        }
        for (Direction d : requested) {
            Json dir = Json::object();
            try {
                const InterferenceProfile profile = interference_coefficients(ctx, d);
                dir["lambda"] = pair_json(profile.lambda);
                dir["epsilon"] = Json::array({profile.epsilon[0], profile.epsilon[1]});
                dir["theta"] = pair_json(profile.theta);
                dir["regime"] = to_string(profile.regime);
                dir["proposition1"] = check_proposition1(ctx, d, options.tol);
                if (profile.regime != Regime::Hyperbolic) {
                    all_hyperbolic = false;
                    code = worse(code, kRegimeError);
                    errors.push_back(error_entry("regime", to_string(d), regime_message(d, profile)));
                } else {
                    const QlraState state = run_qlra(ctx, d, {options.tol, options.branch});
                    const BornReport born = verify_born_rule(state, ctx);
                    dir["interference_sign"] = state.interference_sign();
                    dir["phase"] = num(state.phase());
                    dir["amplitude"] = hvector_json(state.psi);
                    dir["conditioning_basis"] =
                        Json::array({hvector_json(state.conditioning_basis[0]), hvector_json(state.conditioning_basis[1])});
                    Json born_json = Json::object();
                    born_json["conditioned_residuals"] = pair_json(born.conditioned_residuals);
                    born_json["conditioning_residuals"] = pair_json(born.conditioning_residuals);
                    born_json["max_residual"] = num(born.max_residual);
                    born_json["holds"] = born.max_residual <= options.tol;
                    dir["born"] = born_json;
                    dir["expansion_deviation"] = num(expansion_consistency(state));
                }
            } catch (const Error& e) {
                all_hyperbolic = false;
                code = worse(code, kInvalidInput);
                errors.push_back(error_entry("numeric", to_string(d), e.what()));
            }
            directions[std::string(to_string(d))] = dir;
        }
    }
    report["directions"] = directions;

    Json equivalence = nullptr;
    if (all_hyperbolic && options.filter == DirectionFilter::Both) {
        try {
            const EquivalenceVerdict verdict =
                check_consistency(ctx, {options.tol, options.branch, options.branch});
            equivalence = Json::object();
            equivalence["equivalent"] = verdict.equivalent;
            equivalence["sign"] = verdict.sign ? Json(*verdict.sign) : Json(nullptr);
            equivalence["gamma"] = verdict.gamma ? num(*verdict.gamma) : Json(nullptr);
            equivalence["multiplier"] = verdict.multiplier ? hnumber_json(*verdict.multiplier) : Json(nullptr);
            equivalence["relative_phase"] = verdict.relative_phase ? num(*verdict.relative_phase) : Json(nullptr);
            equivalence["symmetry_holds"] = verdict.symmetry_holds.value_or(false);
            equivalence["conjugate_equivalent"] = verdict.conjugate_equivalent.value_or(false);
            equivalence["agrees_with_theorem"] = verdict.agrees_with_symmetry();
            equivalence["max_component_deviation"] = num(verdict.max_component_deviation);
            equivalence["proof_relation_residual"] = num(proof_relation_residual(ctx, options.tol));
            if (!verdict.equivalent) {
                code = worse(code, kInconsistent);
                errors.push_back(error_entry(
                    "inconsistent", "equivalence",
                    verdict.symmetry_holds.value_or(false)
                        ? (verdict.conjugate_equivalent.value_or(false)
                               ? "U applied to psi^{b|a} is not equivalent to psi^{a|b}; psi^{a|b} matches its hyperbolic conjugate"
                               : "U applied to psi^{b|a} is not equivalent to psi^{a|b}")
                        : "U applied to psi^{b|a} is not equivalent to psi^{a|b}; P_b_given_a and P_a_given_b are not transposes"));
            }
        } catch (const Error& e) {
            code = worse(code, kInvalidInput);
            errors.push_back(error_entry("numeric", "equivalence", e.what()));
        }
    }
    report["equivalence"] = equivalence;

    if (options.violation_p) {
        try {
            report["violation_demo"] = violation_demo_json(born_violation_demo(*options.violation_p));
        } catch (const Error& e) {
            code = worse(code, kInvalidInput);
            errors.push_back(error_entry("invalid_input", "violation_demo", e.what()));
        }
    }

    report["errors"] = errors;
    report["status"] = status_name(code);
    report["exit_code"] = code;
    result.exit_code = code;
    return result;
}

std::vector<double> Grid::points() const {
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(round_significant(start + static_cast<double>(i) * step));
    }
    return out;
}

Grid parse_grid(std::string_view text) {
    std::vector<double> parts;
    std::string token;
    std::istringstream stream{std::string(text)};
    while (std::getline(stream, token, ':')) {
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (token.empty() || end != token.c_str() + token.size() || !std::isfinite(value)) {
            throw std::invalid_argument("grid \"" + std::string(text) + "\": \"" + token + "\" is not a number");
        }
        parts.push_back(value);
    }
    if (parts.size() != 3) {
        throw std::invalid_argument("grid \"" + std::string(text) + "\" must have the form start:stop:step");
    }
    Grid g{parts[0], parts[1], parts[2]};
    if (!(g.step > 0.0) || g.stop < g.start) {
        throw std::invalid_argument("grid \"" + std::string(text) + "\" needs step > 0 and start <= stop");
    }
    if (!(g.start > 0.0) || !(g.stop < 1.0)) {
        throw std::invalid_argument("grid \"" + std::string(text) + "\" must lie inside (0, 1)");
    }
    return g;
}

void write_sweep(std::ostream& out, const Grid& p_grid, const Grid& pa_grid) {
    const std::vector<double> ps = p_grid.points();
    const std::vector<double> pas = pa_grid.points();
    std::string buffer = "p,p_a1,band_low,band_high,hyperbolic_feasible\n";
    for (double p : ps) {
        for (double pa : pas) {
            const FeasibleRange range = lambda_feasible_range(p, pa);
            buffer += format_number(p) + ',' + format_number(pa) + ',' + format_number(range.band.low) + ',' +
                      format_number(range.band.high) + ',' + (range.empty() ? "false" : "true") + '\n';
        }
    }
    out << buffer;
}

namespace {

std::optional<double> parse_tolerance(const std::string& text) {
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(value) || !(value > 0.0)) {
        return std::nullopt;
    }
    return value;
}

std::string describe_range(const FeasibleRange& range) {
    if (range.empty()) {
        return "empty";
    }
    std::string out;
    for (const Interval& i : range.hyperbolic) {
        if (!out.empty()) {
            out += " U ";
        }
        out += "(" + format_number(i.low) + ", " + format_number(i.high) + ")";
    }
    return out;
}

/// Writes to --output when given, stdout otherwise.
bool emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
    if (path.empty()) {
        out << text;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    file << text;
    return static_cast<bool>(file);
}

std::optional<std::string> read_input(const std::string& path, std::istream& in, std::ostream& err) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << path << "\n";
        return std::nullopt;
    }
    return std::string(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env) {
    double tolerance = kDefaultTolerance;
    if (env.tolerance) {
        const auto parsed = parse_tolerance(*env.tolerance);
        if (!parsed) {
            err << "error: QLRA_TOLERANCE=\"" << *env.tolerance << "\" is not a positive number\n";
            return kInvalidInput;
        }
        tolerance = *parsed;
    }

    CLI::App app{"Hyperbolic quantum-like representation of dichotomous probabilistic data", std::string(kToolName)};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string output_path;

    auto* analyze = app.add_subcommand("analyze", "Reconstruct amplitudes for a context file and check consistency");
    std::string input_path;
    std::optional<double> tolerance_flag;
    std::string branch_name = "plus";
    std::string direction_name = "both";
    std::optional<double> violation_p;
    analyze->add_option("input", input_path, "Context JSON file, or - for stdin")->required();
    analyze->add_option("--tolerance", tolerance_flag, "Numeric tolerance (default 1e-9, or QLRA_TOLERANCE)");
    analyze->add_option("--sign-branch", branch_name, "Global sign of the amplitudes")
        ->check(CLI::IsMember({"plus", "minus"}));
    analyze->add_option("--direction", direction_name, "Conditioning orders to analyze")
        ->check(CLI::IsMember({"both", "b_given_a", "a_given_b"}));
    analyze->add_option("--violation-demo", violation_p, "Also run the Born-rule violation demo for this p");
    analyze->add_option("-o,--output", output_path, "Write the report here instead of stdout");

    auto* generate = app.add_subcommand("generate", "Emit symmetric hyperbolic contexts");
    std::optional<double> gen_p;
    std::optional<double> gen_pa1;
    std::optional<double> gen_lambda;
    bool gen_random = false;
    std::uint64_t gen_seed = 0;
    int gen_count = 1;
    auto* p_opt = generate->add_option("--p", gen_p, "Diagonal entry of P_b_given_a");
    auto* pa_opt = generate->add_option("--p-a1", gen_pa1, "Marginal p^a of the first a-outcome");
    auto* lambda_opt = generate->add_option("--lambda", gen_lambda, "Coefficient of interference lambda_{beta_1}");
    auto* random_opt = generate->add_flag("--random", gen_random, "Rejection-sample random feasible contexts");
    auto* seed_opt = generate->add_option("--seed", gen_seed, "Seed of the random mode");
    auto* count_opt = generate->add_option("--count", gen_count, "Number of random contexts")->check(CLI::PositiveNumber);
    random_opt->excludes(p_opt)->excludes(pa_opt)->excludes(lambda_opt);
    seed_opt->needs(random_opt);
    count_opt->needs(random_opt);
    generate->add_option("-o,--output", output_path, "Write contexts here instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "Tabulate the hyperbolic feasibility band over a parameter grid");
    std::string p_grid_text;
    std::string pa_grid_text;
    sweep->add_option("--p-grid", p_grid_text, "start:stop:step for p")->required();
    sweep->add_option("--pa-grid", pa_grid_text, "start:stop:step for p_a1")->required();
    sweep->add_option("-o,--output", output_path, "Write CSV here instead of stdout");

    auto* demo = app.add_subcommand("demo-violation", "Born-rule violation for a non doubly stochastic matrix");
    double demo_p = 0.0;
    double demo_pa1 = 0.5;
    double demo_pb1 = 0.5;
    demo->add_option("--p", demo_p, "Entry p of [[p, p], [1-p, 1-p]]")->required();
    demo->add_option("--p-a1", demo_pa1, "Marginal p^a of the first a-outcome");
    demo->add_option("--p-b1", demo_pb1, "Marginal p^b of the first b-outcome");
    demo->add_option("-o,--output", output_path, "Write the report here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kOk : kInvalidInput;
    }

    if (*analyze) {
        if (tolerance_flag) {
            if (!(*tolerance_flag > 0.0) || !std::isfinite(*tolerance_flag)) {
                err << "error: --tolerance must be a positive number\n";
                return kInvalidInput;
            }
            tolerance = *tolerance_flag;
        }
        const auto text = read_input(input_path, in, err);
        if (!text) {
            return kInvalidInput;
        }
        std::vector<ProbContext> contexts;
        bool batch = false;
        try {
            contexts = parse_contexts(*text);
            const auto first = text->find_first_not_of(" \t\r\n");
            batch = first != std::string::npos && (*text)[first] == '[';
        } catch (const ContextParseError& e) {
            err << "error: " << e.what() << "\n";
            return kInvalidInput;
        }

        AnalyzeOptions options;
        options.tol = tolerance;
        options.branch = branch_name == "minus" ? SignBranch::Minus : SignBranch::Plus;
        options.filter = direction_name == "b_given_a"   ? DirectionFilter::BgivenA
                         : direction_name == "a_given_b" ? DirectionFilter::AgivenB
                                                         : DirectionFilter::Both;
        options.violation_p = violation_p;

        int code = kOk;
        Json reports = Json::array();
        for (const ProbContext& ctx : contexts) {
            AnalysisResult result = analyze_context(ctx, options);
            for (const Json& e : result.report["errors"]) {
                err << e["code"].get<std::string>() << " (" << e["where"].get<std::string>()
                    << "): " << e["message"].get<std::string>() << "\n";
            }
            code = worse(code, result.exit_code);
            reports.push_back(std::move(result.report));
        }
        const Json& document = batch ? reports : reports.front();
        if (!emit(document.dump(2) + "\n", output_path, out, err)) {
            return kInvalidInput;
        }
        return code;
    }

    if (*generate) {
        Json document;
        try {
            if (gen_random) {
                std::mt19937_64 rng(gen_seed);
                document = Json::array();
                for (int i = 0; i < gen_count; ++i) {
                    document.push_back(context_json(sample_hyperbolic_context(rng)));
                }
            } else {
                if (!gen_p || !gen_pa1 || !gen_lambda) {
                    err << "error: generate needs --p, --p-a1 and --lambda, or --random\n";
                    return kInvalidInput;
                }
                try {
                    document = context_json(generate_hyperbolic_context(*gen_p, *gen_pa1, *gen_lambda));
                } catch (const InfeasibleError& e) {
                    err << "error: " << e.what() << "\n";
                    if (*gen_p > 0.0 && *gen_p < 1.0 && *gen_pa1 > 0.0 && *gen_pa1 < 1.0) {
                        err << "feasible lambda for p = " << format_number(*gen_p)
                            << ", p_a1 = " << format_number(*gen_pa1) << ": "
                            << describe_range(lambda_feasible_range(*gen_p, *gen_pa1)) << "\n";
                    }
                    return kInvalidInput;
                }
            }
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kInvalidInput;
        }
        return emit(document.dump(2) + "\n", output_path, out, err) ? kOk : kInvalidInput;
    }

    if (*sweep) {
        try {
            const Grid p_grid = parse_grid(p_grid_text);
            const Grid pa_grid = parse_grid(pa_grid_text);
            std::ostringstream csv;
            write_sweep(csv, p_grid, pa_grid);
            return emit(csv.str(), output_path, out, err) ? kOk : kInvalidInput;
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << "\n";
            return kInvalidInput;
        }
    }

    if (*demo) {
        Json report = Json::object();
        report["tool"] = kToolName;
        report["version"] = kVersion;
        try {
            report["violation_demo"] = violation_demo_json(born_violation_demo(demo_p, demo_pa1, demo_pb1));
        } catch (const Error& e) {
            err << "error: " << e.what() << "\n";
            return kInvalidInput;
        }
        report["status"] = "ok";
        report["exit_code"] = kOk;
        return emit(report.dump(2) + "\n", output_path, out, err) ? kOk : kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace qlra::cli
