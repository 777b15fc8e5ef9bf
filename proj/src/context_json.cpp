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

#include "qlra/context_json.hpp"

#include <sstream>

namespace qlra {

namespace {

double number_at(const Json& j, const std::string& path) {
    if (!j.is_number()) {
        throw ContextParseError(path, "field \"" + path + "\" must be a number, got " + std::string(j.type_name()));
    }
    return j.get<double>();
}

ProbPair pair_at(const Json& obj, const std::string& key) {
    const Json& j = obj.at(key);
    if (!j.is_array() || j.size() != 2) {
        throw ContextParseError(key, "field \"" + key + "\" must be an array of 2 numbers");
    }
    return {number_at(j[0], key + "[0]"), number_at(j[1], key + "[1]")};
}

ProbMatrix matrix_at(const Json& obj, const std::string& key) {
    const Json& j = obj.at(key);
    if (!j.is_array() || j.size() != 2) {
        throw ContextParseError(key, "field \"" + key + "\" must be a 2x2 array of numbers");
    }
    ProbMatrix m{};
    for (std::size_t r = 0; r < 2; ++r) {
        const std::string row_path = key + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != 2) {
            throw ContextParseError(row_path, "field \"" + row_path + "\" must be an array of 2 numbers");
        }
        for (std::size_t c = 0; c < 2; ++c) {
            m[r][c] = number_at(j[r][c], row_path + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

}  // namespace

ProbContext context_from_json(const Json& j) {
    if (!j.is_object()) {
        throw ContextParseError("", "context must be a JSON object, got " + std::string(j.type_name()));
    }
    for (const char* key : {"p_a", "p_b", "P_b_given_a"}) {
        if (!j.contains(key)) {
            throw ContextParseError(key, std::string("missing field \"") + key + "\"");
        }
    }
    for (const auto& item : j.items()) {
        const std::string& key = item.key();
        if (key != "p_a" && key != "p_b" && key != "P_b_given_a" && key != "P_a_given_b") {
            throw ContextParseError(key, "unknown field \"" + key + "\"");
        }
    }

    ProbContext ctx;
    ctx.p_a = pair_at(j, "p_a");
    ctx.p_b = pair_at(j, "p_b");
    ctx.P_b_given_a = matrix_at(j, "P_b_given_a");
    if (j.contains("P_a_given_b")) {
        ctx.P_a_given_b = matrix_at(j, "P_a_given_b");
    }
    return ctx;
}

std::vector<ProbContext> parse_contexts(std::string_view text) {
    Json doc;
    try {
        doc = Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ContextParseError("", e.what());
    }

    std::vector<ProbContext> out;
    if (doc.is_array()) {
        out.reserve(doc.size());
        for (std::size_t i = 0; i < doc.size(); ++i) {
            try {
                out.push_back(context_from_json(doc[i]));
            } catch (const ContextParseError& e) {
                std::ostringstream msg;
                msg << "context " << i << ": " << e.what();
                throw ContextParseError(e.field(), msg.str());
            }
        }
    } else {
        out.push_back(context_from_json(doc));
    }
    return out;
}

Json context_to_json(const ProbContext& ctx) {
    auto matrix = [](const ProbMatrix& m) { return Json::array({Json::array({m[0][0], m[0][1]}), Json::array({m[1][0], m[1][1]})}); };
    Json j = Json::object();
    j["p_a"] = Json::array({ctx.p_a[0], ctx.p_a[1]});
    j["p_b"] = Json::array({ctx.p_b[0], ctx.p_b[1]});
    j["P_b_given_a"] = matrix(ctx.P_b_given_a);
    if (ctx.P_a_given_b) {
        j["P_a_given_b"] = matrix(*ctx.P_a_given_b);
    }
    return j;
}

}  // namespace qlra
