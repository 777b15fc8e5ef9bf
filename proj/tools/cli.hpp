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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlra/context.hpp"
#include "qlra/context_json.hpp"
#include "qlra/engine.hpp"

namespace qlra::cli {

inline constexpr std::string_view kToolName = "qlra";
inline constexpr std::string_view kVersion = "1.0.0";

/// Exit codes of every handled condition.
enum ExitCode : int {
    kOk = 0,
    kInvalidInput = 1,
    kRegimeError = 2,
    kInconsistent = 3,
};

/// Process environment consulted by the CLI (QLRA_TOLERANCE).
struct Environment {
    std::optional<std::string> tolerance;

    static Environment from_process();
};

enum class DirectionFilter { Both, BgivenA, AgivenB };

struct AnalyzeOptions {
    double tol = kDefaultTolerance;
    SignBranch branch = SignBranch::Plus;
    DirectionFilter filter = DirectionFilter::Both;
    std::optional<double> violation_p;
};

struct AnalysisResult {
    Json report;
    int exit_code = kOk;
};

/// Full pipeline for one context: validate, classify, reconstruct, check Born's rule and the
/// consistency of the two conditioning orders.
AnalysisResult analyze_context(const ProbContext& ctx, const AnalyzeOptions& options);

Json violation_demo_json(const ViolationDemo& demo);

/// x rounded to 12 significant digits (round-half-even on the exact binary value); -0 becomes 0.
double round_significant(double x);

/// Shortest decimal text of round_significant(x).
std::string format_number(double x);

/// Inclusive grid "start:stop:step".
struct Grid {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    std::vector<double> points() const;
};

/// Throws std::invalid_argument on malformed text.
Grid parse_grid(std::string_view text);

/// Writes the feasibility sweep CSV.
void write_sweep(std::ostream& out, const Grid& p_grid, const Grid& pa_grid);

/// Entry point. args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const Environment& env);

}  // namespace qlra::cli
