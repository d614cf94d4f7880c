// Copyright 2026 The lindobs Authors
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

#include "lindobs/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "lindobs/errors.hpp"

namespace lindobs::io {
namespace {

using nlohmann::json;

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Complex complex_at(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(path + ": expected a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

ComplexMatrix matrix_at(const json& j, const std::string& path, Index expected_dim = -1) {
  if (!j.is_array() || j.empty()) throw ParseError(path + ": expected a non-empty array of rows");
  const auto rows = static_cast<Index>(j.size());
  if (expected_dim >= 0 && rows != expected_dim) {
    throw ParseError(path + ": expected " + std::to_string(expected_dim) + " rows, got " +
                     std::to_string(rows));
  }
  ComplexMatrix m(rows, rows);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    const std::string row_path = path + "[" + std::to_string(i) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != rows) {
      throw ParseError(row_path + ": expected a row of " + std::to_string(rows) + " entries");
    }
    for (Index k = 0; k < rows; ++k) {
      m(i, k) = complex_at(row[static_cast<std::size_t>(k)], row_path + "[" + std::to_string(k) + "]");
    }
  }
  if (!m.allFinite()) throw ParseError(path + ": non-finite entry");
  return m;
}

void write_matrix(std::ostringstream& os, const ComplexMatrix& m, const std::string& indent) {
  os << "[\n";
  for (Index i = 0; i < m.rows(); ++i) {
    os << indent << "  [";
    for (Index k = 0; k < m.cols(); ++k) {
      if (k > 0) os << ", ";
      os << '[' << format_number(m(i, k).real()) << ", " << format_number(m(i, k).imag()) << ']';
    }
    os << ']' << (i + 1 < m.rows() ? ",\n" : "\n");
  }
  os << indent << ']';
}

std::string format_g17(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

ComplexMatrix parse_matrix(std::string_view text) { return matrix_at(parse_json(text), "matrix"); }

LindbladModel parse_model(std::string_view text, const Tolerances& tol) {
  const json j = parse_json(text);
  if (!j.is_object()) throw ParseError("model: expected a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "dim" && key != "hamiltonian" && key != "jumps" && key != "label") {
      throw ParseError("model: unknown field \"" + key + "\"");
    }
  }
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0) {
    throw ParseError("dim: expected a positive integer");
  }
  const auto d = static_cast<Index>(j["dim"].get<long long>());
  if (!j.contains("hamiltonian")) throw ParseError("hamiltonian: missing");
  ComplexMatrix h = matrix_at(j["hamiltonian"], "hamiltonian", d);
  std::vector<ComplexMatrix> jumps;
  if (j.contains("jumps")) {
    if (!j["jumps"].is_array()) throw ParseError("jumps: expected an array of matrices");
    for (std::size_t k = 0; k < j["jumps"].size(); ++k) {
      jumps.push_back(matrix_at(j["jumps"][k], "jumps[" + std::to_string(k) + "]", d));
    }
  } else {
    throw ParseError("jumps: missing (use [] for purely Hamiltonian models)");
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label: expected a string");
    label = j["label"].get<std::string>();
  }
  try {
    return LindbladModel(std::move(h), std::move(jumps), std::move(label), tol);
  } catch (const NonHermitianInput& e) {
    throw ParseError(std::string("hamiltonian: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("jumps: ") + e.what());
  }
}

std::string serialize_matrix(const ComplexMatrix& m) {
  std::ostringstream os;
  write_matrix(os, m, "");
  os << '\n';
  return os.str();
}

std::string serialize_model(const LindbladModel& model) {
  std::ostringstream os;
  os << "{\n  \"dim\": " << model.dim() << ",\n  \"hamiltonian\": ";
  write_matrix(os, model.hamiltonian(), "  ");
  os << ",\n  \"jumps\": [";
  const auto& jumps = model.jumps();
  for (std::size_t k = 0; k < jumps.size(); ++k) {
    os << (k == 0 ? "\n    " : ",\n    ");
    write_matrix(os, jumps[k], "    ");
  }
  os << (jumps.empty() ? "]" : "\n  ]");
  if (!model.label().empty()) os << ",\n  \"label\": " << json(model.label()).dump();
  os << "\n}\n";
  return os.str();
}

std::string entropy_trace_csv(const EntropyTrace& trace) {
  std::ostringstream os;
  os << "t,entropy_nats,linear_entropy,sweep_residual_trace_norm\n";
  for (std::size_t i = 0; i < trace.times.size(); ++i) {
    os << format_g17(trace.times[i]) << ',' << format_g17(trace.entropy[i]) << ','
       << format_g17(trace.linear_entropy[i]) << ',';
    if (trace.sweep_residual) os << format_g17((*trace.sweep_residual)[i]);
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace lindobs::io
