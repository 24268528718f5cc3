// Copyright 2026 The leakc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEAKC_IO_H_
#define LEAKC_IO_H_

#include <string>
#include <string_view>

#include "leakc/axioms.h"
#include "leakc/metrics.h"
#include "leakc/prob.h"

namespace leakc {

// Parses {"prior": [...], "channel": [[...], ...], "x_labels": [...],
// "y_labels": [...]}; label lists are optional. Throws kParseError with the
// byte offset for malformed JSON.
System SystemFromJson(std::string_view text);
std::string SystemToJson(const System& sys);

// {"kind": "sibson", "alpha": 2}; kinds are mutual_information, sibson,
// arimoto, maximal_leakage (alias pml), min_entropy, f_divergence (with
// "fdiv_kind": kl | chi_squared | squared_hellinger) and g_leakage (with
// "gain": [[...], ...]).
MetricSpec MetricFromJson(std::string_view text);
std::string MetricToJson(const MetricSpec& m);

// "fig2" or "fig3"; throws kInvalidArgument otherwise.
System BuiltinSystem(std::string_view name);

std::string AxiomReportToJson(const AxiomReport& report);

}  // namespace leakc

#endif  // LEAKC_IO_H_
