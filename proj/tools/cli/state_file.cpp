// Copyright 2026 The Lucent Authors
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

#include "cli/state_file.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace lucent::cli {

using nlohmann::json;

namespace {

constexpr const char* kStateFormat = "lucent-state";
constexpr const char* kUnitaryFormat = "lucent-unitary";

const json& require(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

double as_number(const json& v, const std::string& what) {
  if (!v.is_number()) throw ParseError(what + " must be a number");
  return v.get<double>();
}

int as_int(const json& v, const std::string& what) {
  if (!v.is_number_integer()) throw ParseError(what + " must be an integer");
  return v.get<int>();
}

void check_version(const json& doc, const char* format, int supported) {
  if (!doc.is_object()) throw ParseError("top-level value must be an object");
  if (auto it = doc.find("format"); it != doc.end() && *it != format) {
    throw ParseError(std::string("expected format \"") + format + "\"");
  }
  const int version = as_int(require(doc, "version"), "version");
  if (version != supported) {
    throw ParseError("unsupported version " + std::to_string(version));
  }
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

Encoding parse_encoding(std::string_view name) {
  if (name == "pauli") return Encoding::kPauli;
  if (name == "dense") return Encoding::kDense;
  throw ParseError("unknown encoding \"" + std::string(name) + "\" (expected pauli or dense)");
}

const char* to_string(Encoding e) noexcept { return e == Encoding::kPauli ? "pauli" : "dense"; }

int StateFile::qubits() const {
  return std::visit([](const auto& d) { return d.qubits(); }, data);
}

Encoding StateFile::encoding() const {
  return std::holds_alternative<PauliState>(data) ? Encoding::kPauli : Encoding::kDense;
}

PauliState StateFile::to_pauli() const {
  if (const auto* p = std::get_if<PauliState>(&data)) return *p;
  return dense_to_coeffs(std::get<DenseOperator>(data));
}

StateFile make_state_file(const PauliState& state, Encoding encoding,
                          std::optional<std::string> label) {
  if (encoding == Encoding::kPauli) return StateFile{kStateFileVersion, std::move(label), state};
  return StateFile{kStateFileVersion, std::move(label), coeffs_to_dense(state)};
}

StateFile parse_state_file(std::string_view text) {
  const json doc = parse_json(text);
  check_version(doc, kStateFormat, kStateFileVersion);
  const int n = as_int(require(doc, "n"), "n");
  if (n < 1 || n > kMaxQubits) throw ParseError("n must be in [1, " + std::to_string(kMaxQubits) + "]");

  std::optional<std::string> label;
  if (auto it = doc.find("label"); it != doc.end()) {
    if (!it->is_string()) throw ParseError("label must be a string");
    label = it->get<std::string>();
  }

  const bool has_pauli = doc.contains("pauli");
  const bool has_dense = doc.contains("dense");
  if (has_pauli == has_dense) throw ParseError("exactly one of \"pauli\" or \"dense\" is required");
  if (auto it = doc.find("encoding"); it != doc.end()) {
    if (!it->is_string() || parse_encoding(it->get<std::string>()) !=
                                (has_pauli ? Encoding::kPauli : Encoding::kDense)) {
      throw ParseError("encoding field does not match payload");
    }
  }

  if (has_pauli) {
    const json& map = doc["pauli"];
    if (!map.is_object()) throw ParseError("\"pauli\" must be an object");
    PauliState state(n);
    for (const auto& [key, value] : map.items()) {
      if (static_cast<int>(key.size()) != n) {
        throw ParseError("Pauli string \"" + key + "\" does not have length " + std::to_string(n));
      }
      try {
        state[PauliIndex::from_string(key).code()] = as_number(value, "coefficient " + key);
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
    }
    return StateFile{kStateFileVersion, std::move(label), std::move(state)};
  }
  {
    const json& rows = doc["dense"];
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
      throw ParseError("\"dense\" must have 2^n rows");
    }
    Eigen::MatrixXcd m(dim, dim);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
        throw ParseError("dense row " + std::to_string(r) + " must have 2^n entries");
      }
      for (Eigen::Index c = 0; c < dim; ++c) {
        const json& entry = row[static_cast<std::size_t>(c)];
        if (!entry.is_array() || entry.size() != 2) {
          throw ParseError("dense entries must be [re, im] pairs");
        }
        m(r, c) = Complex(as_number(entry[0], "real part"), as_number(entry[1], "imaginary part"));
      }
    }
    return StateFile{kStateFileVersion, std::move(label), DenseOperator(std::move(m))};
  }
}

std::string serialize_state_file(const StateFile& file, int indent) {
  json doc;
  doc["format"] = kStateFormat;
  doc["version"] = file.version;
  doc["n"] = file.qubits();
  doc["encoding"] = to_string(file.encoding());
  if (file.label) doc["label"] = *file.label;
  if (const auto* p = std::get_if<PauliState>(&file.data)) {
    json map = json::object();
    for (std::size_t k = 0; k < p->size(); ++k) {
      if ((*p)[k] != 0.0) map[PauliIndex(p->qubits(), k).to_string()] = (*p)[k];
    }
    doc["pauli"] = std::move(map);
  } else {
    const auto& m = std::get<DenseOperator>(file.data).matrix();
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(std::move(row));
    }
    doc["dense"] = std::move(rows);
  }
  return doc.dump(indent);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StateFile read_state_file(const std::string& path) {
  try {
    return parse_state_file(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------

LocalUnitarySpec UnitarySpecFile::to_spec(int n) const {
  if (qubits && *qubits != n) {
    throw ParseError("unitary spec is for " + std::to_string(*qubits) + " qubits, state has " +
                     std::to_string(n));
  }
  std::vector<AxisAngle> factors(static_cast<std::size_t>(n));
  for (const auto& e : entries) {
    if (e.qubit < 1 || e.qubit > n) {
      throw ParseError("unitary entry for qubit " + std::to_string(e.qubit) + " outside [1, " +
                       std::to_string(n) + "]");
    }
    factors[e.qubit - 1] = AxisAngle(e.axis, e.angle);
  }
  return LocalUnitarySpec(std::move(factors));
}

UnitarySpecFile make_unitary_file(const LocalUnitarySpec& spec) {
  UnitarySpecFile f;
  f.qubits = spec.qubits();
  for (int j = 1; j <= spec.qubits(); ++j) {
    const auto& factor = spec.factor(j);
    if (!factor.is_identity()) f.entries.push_back({j, factor.axis(), factor.angle()});
  }
  return f;
}

UnitarySpecFile parse_unitary_file(std::string_view text) {
  const json doc = parse_json(text);
  check_version(doc, kUnitaryFormat, kUnitaryFileVersion);
  UnitarySpecFile f;
  if (auto it = doc.find("n"); it != doc.end()) {
    f.qubits = as_int(*it, "n");
    if (*f.qubits < 1 || *f.qubits > kMaxQubits) throw ParseError("n out of range");
  }
  const json& factors = require(doc, "factors");
  if (!factors.is_array()) throw ParseError("\"factors\" must be an array");
  std::set<int> seen;
  for (const auto& entry : factors) {
    if (!entry.is_object()) throw ParseError("factor entries must be objects");
    UnitaryEntry e;
    e.qubit = as_int(require(entry, "qubit"), "qubit");
    if (!seen.insert(e.qubit).second) {
      throw ParseError("duplicate entry for qubit " + std::to_string(e.qubit));
    }
    const json& axis = require(entry, "axis");
    if (!axis.is_array() || axis.size() != 3) throw ParseError("axis must be [x, y, z]");
    for (int k = 0; k < 3; ++k) e.axis[k] = as_number(axis[k], "axis component");
    e.angle = as_number(require(entry, "angle"), "angle");
    if (e.angle != 0.0) {
      const double len = e.axis.norm();
      if (!(len > 0.0)) {
        throw ParseError("qubit " + std::to_string(e.qubit) + ": zero-length axis with nonzero angle");
      }
      // Leave already-unit axes untouched so files round-trip byte for byte.
      if (std::abs(len - 1.0) > 4 * std::numeric_limits<double>::epsilon()) e.axis /= len;
    } else {
      e.axis = Eigen::Vector3d::UnitZ();
    }
    f.entries.push_back(e);
  }
  return f;
}

UnitarySpecFile read_unitary_file(const std::string& path) {
  try {
    return parse_unitary_file(read_text(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::string serialize_unitary_file(const UnitarySpecFile& file, int indent) {
  json doc;
  doc["format"] = kUnitaryFormat;
  doc["version"] = file.version;
  if (file.qubits) doc["n"] = *file.qubits;
  json factors = json::array();
  for (const auto& e : file.entries) {
    factors.push_back({{"qubit", e.qubit},
                       {"axis", {e.axis.x(), e.axis.y(), e.axis.z()}},
                       {"angle", e.angle}});
  }
  doc["factors"] = std::move(factors);
  return doc.dump(indent);
}

}  // namespace lucent::cli
