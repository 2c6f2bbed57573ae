/*
 * Copyright 2026 The besgraph Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace besgraph::fixtures {

/// Reachability of a state in which a reader can start infinitely often, on
/// a two-reader/one-writer mutual exclusion system.
inline constexpr std::string_view mutex = R"(// nu X. mu Y. <r_s>X || <!r_s>Y on the readers/writer mutex LTS
nu X_s0 = Y_s0;
nu X_s1 = Y_s1;
nu X_s2 = Y_s2;
nu X_s3 = Y_s3;
mu Y_s0 = X_s1 || Y_s1;
mu Y_s1 = X_s2 || Y_s0;
mu Y_s2 = Y_s1;
mu Y_s3 = Y_s0;
)";

/// Unreliable channel: along all read/send paths a send can infinitely often
/// be avoided.
inline constexpr std::string_view application = R"(// unreliable channel, three states
nu X_s0 = Y_s0;
nu X_s1 = Y_s1;
nu X_s2 = Y_s2;
mu Y_s0 = (X_s1 && Z_s0) || Y_s1;
mu Y_s1 = (X_s0 && Z_s1) || Y_s0;
mu Y_s2 = true;
nu Z_s0 = Z_s1;
nu Z_s1 = Z_s2;
nu Z_s2 = Z_s1;
)";

/// Four equations whose structure graph shares the subterm X && Y.
inline constexpr std::string_view example_structure_graph = R"(mu X = (X && Y) || Z;
nu Y = W || (X && Y);
mu Z = Z;
mu W = Z || (Z || W);
)";

inline std::vector<std::string> names() { return {"mutex", "paper-application", "example-structure-graph"}; }

inline std::optional<std::string_view> find(std::string_view name) {
    if (name == "mutex") return mutex;
    if (name == "paper-application") return application;
    if (name == "example-structure-graph") return example_structure_graph;
    return std::nullopt;
}

} // namespace besgraph::fixtures
