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

#include "paulicert/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace paulicert {

using nlohmann::json;

json witness_to_json(const Witness& wit) {
  json j;
  j["n"] = wit.n;
  json omega = json::array();
  for (const WitnessTerm& t : wit.omega) {
    omega.push_back({{"c", t.c}, {"z", t.z}, {"d", t.d}, {"w", t.w}, {"value", t.value}});
  }
  j["omega"] = std::move(omega);
  json matrix = json::array();
  for (Index r = 0; r < wit.matrix.rows(); ++r) {
    for (Index c = 0; c < wit.matrix.cols(); ++c) {
      matrix.push_back({wit.matrix(r, c).real(), wit.matrix(r, c).imag()});
    }
  }
  j["matrix"] = std::move(matrix);
  return j;
}

Witness witness_from_json(const json& j) {
  Witness wit;
  wit.n = j.at("n").get<int>();
  const Index d2 = Index{1} << (2 * wit.n);
  for (const json& term : j.at("omega")) {
    WitnessTerm t;
    t.c = term.at("c").get<std::vector<int>>();
    t.z = term.at("z").get<std::vector<int>>();
    t.d = term.at("d").get<std::vector<int>>();
    t.w = term.at("w").get<std::vector<int>>();
    t.value = term.at("value").get<double>();
    const size_t n = static_cast<size_t>(wit.n);
    if (t.c.size() != n || t.z.size() != n || t.d.size() != n || t.w.size() != n) {
      throw std::runtime_error("witness term arity does not match n");
    }
    wit.omega.push_back(std::move(t));
  }
  if (j.contains("matrix")) {
    const json& matrix = j.at("matrix");
    if (static_cast<Index>(matrix.size()) != d2 * d2) {
      throw std::runtime_error("witness matrix field has wrong size");
    }
    wit.matrix = Matrix(d2, d2);
    Index k = 0;
    for (const json& entry : matrix) {
      wit.matrix(k / d2, k % d2) = Complex(entry.at(0).get<double>(),
                                           entry.at(1).get<double>());
      ++k;
    }
    const Matrix rebuilt = witness_from_omega(wit.omega, wit.n);
    if (max_abs_diff(rebuilt, wit.matrix) > 1e-10) {
      throw std::runtime_error(
          "witness validation failed: omega does not reconstruct the matrix field");
    }
  } else {
    wit.matrix = witness_from_omega(wit.omega, wit.n);
  }
  return wit;
}

void save_witness(const Witness& wit, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << witness_to_json(wit).dump(2) << "\n";
}

Witness load_witness(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;  // nlohmann reports line/position on parse errors
  return witness_from_json(j);
}

json network_correlation_records(const NetworkStrategy& ns) {
  json records = json::array();
  const Index outcomes = Index{1} << ns.n;
  for (Index z = 0; z < ns.charlie.num_settings(); ++z) {
    for (Index w = 0; w < ns.daisy.num_settings(); ++w) {
      for (Index c = 0; c < outcomes; ++c) {
        for (Index a = 0; a < 2; ++a) {
          for (Index b = 0; b < 2; ++b) {
            for (Index d = 0; d < outcomes; ++d) {
              records.push_back(
                  {{"settings",
                    {{"z", ns.charlie.setting_labels[z]},
                     {"x", "*"},
                     {"y", "*"},
                     {"w", ns.daisy.setting_labels[w]}}},
                   {"outcomes",
                    {{"c", ns.charlie.outcome_labels[z][c]},
                     {"a", a == 0 ? "+" : "-"},
                     {"b", b == 0 ? "+" : "-"},
                     {"d", ns.daisy.outcome_labels[w][d]}}},
                   {"p", network_probability(ns, z, c, a, b, w, d)}});
            }
          }
        }
      }
    }
  }
  return records;
}

std::string format_sig12(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string curve_to_csv(const std::vector<RobustnessCurvePoint>& curve) {
  std::string out = "eta,expected_I,theta_crit\n";
  for (const RobustnessCurvePoint& p : curve) {
    out += format_sig12(p.eta) + "," + format_sig12(p.expected_I) + "," +
           format_sig12(p.theta_crit) + "\n";
  }
  return out;
}

}  // namespace paulicert
