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

#include "leakc/io.h"

#include <cmath>
#include <utility>
#include <vector>

#include "json.hpp"
#include "leakc/error.h"

namespace leakc {
namespace {

using nlohmann::json;

json Parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(
        ErrorCode::kParseError,
        "invalid JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const json& Require(const json& doc, const char* key) {
  if (!doc.is_object()) Malformed("expected a JSON object");
  const auto it = doc.find(key);
  if (it == doc.end()) Malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

std::vector<double> Numbers(const json& node, const std::string& field) {
  if (!node.is_array()) Malformed("\"" + field + "\" must be an array");
  std::vector<double> out;
  out.reserve(node.size());
  for (const json& v : node) {
    if (!v.is_number()) {
      Malformed("\"" + field + "\" must contain only numbers");
    }
    out.push_back(v.get<double>());
  }
  return out;
}

std::vector<std::vector<double>> Matrix(const json& node,
                                        const std::string& field) {
  if (!node.is_array()) Malformed("\"" + field + "\" must be an array");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < node.size(); ++i) {
    rows.push_back(Numbers(node[i], field + "[" + std::to_string(i) + "]"));
  }
  return rows;
}

std::vector<std::string> Labels(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) return {};
  if (!it->is_array())
    Malformed(std::string("\"") + key + "\" must be an array");
  std::vector<std::string> out;
  for (const json& v : *it) {
    if (!v.is_string()) {
      Malformed(std::string("\"") + key + "\" must contain only strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

double Alpha(const json& doc) {
  const json& a = Require(doc, "alpha");
  if (!a.is_number()) Malformed("\"alpha\" must be a number");
  return a.get<double>();
}

std::string_view FDivergenceName(FDivergenceKind kind) {
  switch (kind) {
    case FDivergenceKind::kKl:
      return "kl";
    case FDivergenceKind::kChiSquared:
      return "chi_squared";
    case FDivergenceKind::kSquaredHellinger:
      return "squared_hellinger";
  }
  return "kl";
}

json MatrixJson(const std::vector<std::vector<double>>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(row);
  return out;
}

}  // namespace

System SystemFromJson(std::string_view text) {
  const json doc = Parse(text);
  const std::vector<double> prior = Numbers(Require(doc, "prior"), "prior");
  const auto rows = Matrix(Require(doc, "channel"), "channel");
  return System::Create(ProbVec::Validate(prior), Channel::FromMatrix(rows),
                        Labels(doc, "x_labels"), Labels(doc, "y_labels"));
}

std::string SystemToJson(const System& sys) {
  json doc;
  doc["prior"] = std::vector<double>(sys.prior().probs().begin(),
                                     sys.prior().probs().end());
  json channel = json::array();
  for (const ProbVec& row : sys.channel().rows()) {
    channel.push_back(
        std::vector<double>(row.probs().begin(), row.probs().end()));
  }
  doc["channel"] = std::move(channel);
  doc["x_labels"] = sys.x_labels();
  doc["y_labels"] = sys.y_labels();
  return doc.dump(2) + "\n";
}

MetricSpec MetricFromJson(std::string_view text) {
  const json doc = Parse(text);
  const json& kind_node = Require(doc, "kind");
  if (!kind_node.is_string()) Malformed("\"kind\" must be a string");
  const std::string kind = kind_node.get<std::string>();
  if (kind == "mutual_information") return MetricSpec::MutualInformation();
  if (kind == "sibson") return MetricSpec::Sibson(Alpha(doc));
  if (kind == "arimoto") return MetricSpec::Arimoto(Alpha(doc));
  if (kind == "maximal_leakage" || kind == "pml") {
    return MetricSpec::MaximalLeakage();
  }
  if (kind == "min_entropy") return MetricSpec::MinEntropy();
  if (kind == "f_divergence") {
    const json& f = Require(doc, "fdiv_kind");
    const std::string name = f.is_string() ? f.get<std::string>() : "";
    for (FDivergenceKind k :
         {FDivergenceKind::kKl, FDivergenceKind::kChiSquared,
          FDivergenceKind::kSquaredHellinger}) {
      if (name == FDivergenceName(k)) return MetricSpec::FDivergence(k);
    }
    Malformed("unknown fdiv_kind \"" + name + "\"");
  }
  if (kind == "g_leakage") {
    return MetricSpec::GLeakage(
        GainMatrix::Create(Matrix(Require(doc, "gain"), "gain")));
  }
  Malformed("unknown metric kind \"" + kind + "\"");
}

std::string MetricToJson(const MetricSpec& m) {
  json doc;
  switch (m.kind()) {
    case MetricKind::kMutualInformation:
      doc["kind"] = "mutual_information";
      break;
    case MetricKind::kSibson:
      doc["kind"] = "sibson";
      doc["alpha"] = m.alpha();
      break;
    case MetricKind::kArimoto:
      doc["kind"] = "arimoto";
      doc["alpha"] = m.alpha();
      break;
    case MetricKind::kMaximalLeakage:
      doc["kind"] = "maximal_leakage";
      break;
    case MetricKind::kMinEntropy:
      doc["kind"] = "min_entropy";
      break;
    case MetricKind::kFDivergence:
      doc["kind"] = "f_divergence";
      doc["fdiv_kind"] = FDivergenceName(m.fdiv_kind());
      break;
    case MetricKind::kGLeakage:
      doc["kind"] = "g_leakage";
      doc["gain"] = MatrixJson(m.gain()->rows());
      break;
  }
  return doc.dump();
}

System BuiltinSystem(std::string_view name) {
  if (name == "fig2") {
    return System::Create(
        ProbVec::Validate({0.5, 0.5}),
        Channel::FromMatrix({{5.0 / 6.0, 1.0 / 6.0}, {1.0 / 6.0, 5.0 / 6.0}}),
        {"x1", "x2"}, {"Yes", "No"});
  }
  if (name == "fig3") {
    return System::Create(
        ProbVec::Validate({0.6, 0.3, 0.1}),
        Channel::FromMatrix(
            {{0.6, 0.2, 0.2}, {0.2, 0.6, 0.2}, {0.2, 0.2, 0.6}}));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown built-in system \"" +
                                               std::string(name) +
                                               "\" (expected fig2 or fig3)");
}

std::string AxiomReportToJson(const AxiomReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry;
    entry["name"] = c.name;
    entry["status"] = CheckStatusName(c.status);
    entry["samples_used"] = c.samples_used;
    entry["tolerance"] = c.tolerance;
    entry["detail"] = c.detail;
    if (c.witness) {
      const Witness& w = *c.witness;
      json wj;
      wj["p"] = w.p;
      wj["q"] = w.q;
      if (!w.direction.empty()) wj["direction"] = w.direction;
      wj["observed"] =
          std::isfinite(w.observed) ? json(w.observed) : json(nullptr);
      wj["bound"] = std::isfinite(w.bound) ? json(w.bound) : json(nullptr);
      entry["witness"] = std::move(wj);
    }
    checks.push_back(std::move(entry));
  }
  json doc;
  doc["subject"] = report.subject;
  doc["all_pass"] = report.AllPass();
  doc["checks"] = std::move(checks);
  return doc.dump(2);
}

}  // namespace leakc
