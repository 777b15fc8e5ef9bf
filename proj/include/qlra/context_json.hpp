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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qlra/context.hpp"
#include "qlra/errors.hpp"

namespace qlra {

using Json = nlohmann::ordered_json;

/// Malformed context input. field() names the offending key ("" for syntax errors).
class ContextParseError : public Error {
   public:
    ContextParseError(std::string field, const std::string& message) : Error(message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

   private:
    std::string field_;
};

/// Reads a context object: {"p_a": [x, y], "p_b": [x, y], "P_b_given_a": [[..], [..]],
/// optional "P_a_given_b": [[..], [..]]}. Unknown keys are rejected.
ProbContext context_from_json(const Json& j);

/// Parses JSON text holding either one context object or an array of them. Syntax errors carry
/// the line and column of the failure.
std::vector<ProbContext> parse_contexts(std::string_view text);

/// Inverse of context_from_json. P_a_given_b is written only when present.
Json context_to_json(const ProbContext& ctx);

}  // namespace qlra
