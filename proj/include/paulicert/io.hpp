// Copyright 2026 The paulicert developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include <json.hpp>

#include "paulicert/certify.hpp"
#include "paulicert/robustness.hpp"

// Serialization: witness files, correlation-table export, and the CSV
// schema for robustness curves.
namespace paulicert {

/// Witness file schema: {"n": int, "omega": [{"c": [+1,-1...], "z": [1..3...],
/// "d": [...], "w": [...], "value": float}...], "matrix": [[re,im]...] row-major}.
nlohmann::json witness_to_json(const Witness& wit);

/// Parses and validates a witness: the omega coefficients must rebuild
/// the matrix field within 1e-10 (throws std::runtime_error otherwise).
Witness witness_from_json(const nlohmann::json& j);

void save_witness(const Witness& wit, const std::string& path);
Witness load_witness(const std::string& path);

/// Correlation records {settings:{z,x,y,w}, outcomes:{c,a,b,d}, p:float}
/// over all setting/outcome combinations of the network.
nlohmann::json network_correlation_records(const NetworkStrategy& ns);

/// CSV with header `eta,expected_I,theta_crit`, 12 significant digits.
std::string curve_to_csv(const std::vector<RobustnessCurvePoint>& curve);

/// Shortest-width formatting with 12 significant digits.
std::string format_sig12(double value);

}  // namespace paulicert
