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

#include "cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "lucent/centralizer.hpp"
#include "lucent/reduction.hpp"
#include "lucent/states.hpp"

namespace lucent::cli {

using nlohmann::json;

namespace {

std::string fmt(double v, int precision = 12) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

std::string fixed(double v, int decimals = 10) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(decimals) << v;
  return s.str();
}

std::string vec3(const Eigen::Vector3d& v) {
  return "(" + fmt(v.x()) + ", " + fmt(v.y()) + ", " + fmt(v.z()) + ")";
}

json vec3_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

const char* constraint_code(Constraint c) {
  switch (c) {
    case Constraint::kRealCoefficients: return "real_coefficients";
    case Constraint::kTraceNormalization: return "trace_normalization";
    case Constraint::kCoefficientConsistency: return "coefficient_consistency";
    case Constraint::kPurityBound: return "purity_bound";
    case Constraint::kPositivity: return "positivity";
  }
  return "unknown";
}

// Writes to --output when given, otherwise to `out`.
void emit(const Options& opts, const std::string& text, std::ostream& out) {
  if (!opts.output) {
    out << text;
    return;
  }
  std::ofstream file(*opts.output, std::ios::binary);
  if (!file) throw ParseError("cannot write \"" + *opts.output + "\"");
  file << text;
}

std::string label_of(const StateFile& f) { return f.label.value_or("<unlabelled>"); }

DensityState load_density(const StateFile& f, double tol = kEqualityTol) {
  ValidationOptions vopts;
  vopts.equality_tol = tol;
  return DensityState::from(f.to_pauli(), vopts);
}

// Runs a command body and maps exceptions to the shared exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const CentralizerRejection& e) {
    err << "rejected: " << e.what() << "\n";
    for (const auto& d : e.diagnostics()) {
      err << "  qubit " << d.qubit << ": max commutator entry " << fmt(d.max_entry)
          << (d.commutes ? " (ok)" : " (does not commute)") << "\n";
    }
    return kExitRejected;
  } catch (const ValidationError& e) {
    err << "invalid state:\n";
    for (const auto& v : e.violations()) err << "  " << to_string(v.constraint) << ": " << v.detail << "\n";
    return kExitRejected;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kDimension:
      case ErrorKind::kMalformedIndex:
      case ErrorKind::kCapacity:
      case ErrorKind::kHermiticity:
        return kExitInputError;
      default:
        return kExitRejected;
    }
  }
}

}  // namespace

// ---------------------------------------------------------------------------

int cmd_validate(const std::string& state_path, const Options& opts, std::ostream& out,
                 std::ostream& err) {
  return guarded(err, [&] {
    const StateFile file = read_state_file(state_path);
    const double tol = opts.tol.value_or(kEqualityTol);
    ValidationOptions vopts;
    vopts.equality_tol = tol;

    ValidationReport report;
    try {
      report = validate(file.to_pauli(), vopts);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kHermiticity) throw;
      report.violations.push_back({Constraint::kRealCoefficients, e.what()});
    }

    const std::vector<Constraint> all = {
        Constraint::kRealCoefficients, Constraint::kTraceNormalization,
        Constraint::kCoefficientConsistency, Constraint::kPurityBound, Constraint::kPositivity};

    if (opts.json) {
      json rec;
      rec["command"] = "validate";
      rec["label"] = label_of(file);
      rec["n"] = file.qubits();
      rec["tol"] = tol;
      rec["valid"] = report.valid();
      json constraints = json::array();
      for (Constraint c : all) {
        json item{{"code", constraint_code(c)}, {"name", to_string(c)}, {"ok", !report.violates(c)}};
        if (c == Constraint::kPositivity || c == Constraint::kCoefficientConsistency) {
          item["checked"] = report.positivity_checked;
        }
        for (const auto& v : report.violations) {
          if (v.constraint == c) item["detail"] = v.detail;
        }
        constraints.push_back(std::move(item));
      }
      rec["constraints"] = std::move(constraints);
      rec["purity"] = report.purity;
      rec["trace"] = report.trace;
      rec["positivity_checked"] = report.positivity_checked;
      rec["min_eigenvalue"] = report.min_eigenvalue ? json(*report.min_eigenvalue) : json(nullptr);
      rec["max_eigenvalue"] = report.max_eigenvalue ? json(*report.max_eigenvalue) : json(nullptr);
      emit(opts, rec.dump() + "\n", out);
    } else {
      std::ostringstream s;
      s << "state: " << label_of(file) << " (n=" << file.qubits() << ")\n";
      s << "tolerance: " << fmt(tol) << "\n";
      for (Constraint c : all) {
        s << to_string(c) << ": ";
        const bool needs_dense =
            c == Constraint::kPositivity || c == Constraint::kCoefficientConsistency;
        if (report.violates(c)) {
          s << "FAIL";
          for (const auto& v : report.violations) {
            if (v.constraint == c) s << " (" << v.detail << ")";
          }
        } else if (needs_dense && !report.positivity_checked) {
          s << "unchecked (above " << kMaxPositivityQubits << " qubits)";
        } else {
          s << "pass";
        }
        if (c == Constraint::kPositivity && report.min_eigenvalue) {
          s << " [eigenvalues in " << fmt(*report.min_eigenvalue) << ", "
            << fmt(*report.max_eigenvalue) << "]";
        }
        s << "\n";
      }
      s << (report.valid() ? "valid" : "invalid") << ", purity " << fixed(report.purity) << "\n";
      emit(opts, s.str(), out);
    }
    return report.valid() ? kExitOk : kExitRejected;
  });
}

int cmd_decompose(const std::string& state_path, const Options& opts, std::ostream& out,
                  std::ostream& err) {
  return guarded(err, [&] {
    const StateFile file = read_state_file(state_path);
    const DensityState rho = load_density(file);
    const Decomposition parts = decompose(rho);
    const double tol = opts.tol.value_or(kEqualityTol);
    const int n = rho.qubits();

    std::vector<std::pair<std::string, double>> delta_terms;
    for (std::size_t k = 0; k < parts.delta.size(); ++k) {
      if (std::abs(parts.delta[k]) > tol) {
        delta_terms.emplace_back(PauliIndex(n, k).to_string(), parts.delta[k]);
      }
    }

    if (opts.delta_output) {
      std::ofstream f(*opts.delta_output, std::ios::binary);
      if (!f) throw ParseError("cannot write \"" + *opts.delta_output + "\"");
      f << serialize_state_file(make_state_file(parts.delta, Encoding::kPauli,
                                                label_of(file) + ":delta"))
        << "\n";
    }

    if (opts.json) {
      json rec;
      rec["command"] = "decompose";
      rec["label"] = label_of(file);
      rec["n"] = n;
      rec["tol"] = tol;
      rec["identity_coeff"] = parts.identity_coeff;
      json qubits = json::array();
      for (const auto& t : parts.translated) {
        const auto b = partial_trace_single(rho, t.qubit);
        qubits.push_back({{"qubit", t.qubit},
                          {"bloch", vec3_json(b.r)},
                          {"bloch_norm", b.norm()},
                          {"translated_hs_norm", t.hs_norm()},
                          {"translated_norm", t.reduced_norm()},
                          {"lambda_minus", t.lambda_minus},
                          {"lambda_plus", t.lambda_plus}});
      }
      rec["qubits"] = std::move(qubits);
      json delta = json::object();
      for (const auto& [key, value] : delta_terms) delta[key] = value;
      rec["delta"] = std::move(delta);
      rec["delta_purity"] = delta_purity(rho);
      emit(opts, rec.dump() + "\n", out);
    } else {
      std::ostringstream s;
      s << "state: " << label_of(file) << " (n=" << n << ")\n";
      s << "tolerance: " << fmt(tol) << " (delta terms at or below it are omitted)\n";
      s << "identity coefficient: " << fmt(parts.identity_coeff) << "\n";
      s << "qubit  bloch vector                              |r|           |rhobar_Q|\n";
      for (const auto& t : parts.translated) {
        const auto b = partial_trace_single(rho, t.qubit);
        s << std::left << std::setw(7) << t.qubit << std::setw(42) << vec3(b.r) << std::setw(14)
          << fmt(b.norm()) << fmt(t.reduced_norm()) << "\n";
      }
      s << "delta (" << delta_terms.size() << " terms, Tr delta^2 = " << fmt(delta_purity(rho))
        << ")";
      s << (delta_terms.empty() ? ": empty\n" : ":\n");
      for (const auto& [key, value] : delta_terms) s << "  " << key << "  " << fmt(value, 17) << "\n";
      emit(opts, s.str(), out);
    }
    return kExitOk;
  });
}

int cmd_centralizer(const std::string& state_path, const Options& opts, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    const StateFile file = read_state_file(state_path);
    const DensityState rho = load_density(file);
    const double tol = opts.tol.value_or(kClassificationTol);
    const CentralizerDescriptor desc = classify_centralizer(rho, tol);

    if (opts.json) {
      json rec;
      rec["command"] = "centralizer";
      rec["label"] = label_of(file);
      rec["n"] = desc.qubit_count();
      rec["m"] = desc.m;
      rec["dim"] = desc.dim;
      rec["tol"] = tol;
      json qubits = json::array();
      for (int j = 1; j <= desc.qubit_count(); ++j) {
        const auto& q = desc.qubits[j - 1];
        if (const auto* axis = std::get_if<AxisFactor>(&q)) {
          qubits.push_back({{"qubit", j}, {"kind", "axis"}, {"axis", vec3_json(axis->axis)},
                            {"bloch_norm", axis->bloch_norm}});
        } else {
          qubits.push_back({{"qubit", j}, {"kind", "full"}});
        }
      }
      rec["qubits"] = std::move(qubits);
      emit(opts, rec.dump() + "\n", out);
    } else {
      std::ostringstream s;
      s << "state: " << label_of(file) << " (n=" << desc.qubit_count() << ")\n";
      s << "maximally-mixed threshold: |r| < " << fmt(tol) << "\n";
      for (int j = 1; j <= desc.qubit_count(); ++j) {
        const auto& q = desc.qubits[j - 1];
        s << "qubit " << j << ": ";
        if (const auto* axis = std::get_if<AxisFactor>(&q)) {
          s << "Axis " << vec3(axis->axis) << "  |r| = " << fmt(axis->bloch_norm)
            << "  (1 parameter)\n";
        } else {
          s << "Full SU(2)  (3 parameters)\n";
        }
      }
      s << "m = " << desc.m << "\n";
      s << "dim = " << desc.dim << "  (3n - 2m = " << 3 * desc.qubit_count() << " - "
        << 2 * desc.m << ")\n";
      emit(opts, s.str(), out);
    }
    return kExitOk;
  });
}

int cmd_evolve(const std::string& state_path, const std::string& unitary_path,
               const Options& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StateFile file = read_state_file(state_path);
    const DensityState rho = load_density(file);
    const LocalUnitarySpec u = read_unitary_file(unitary_path).to_spec(rho.qubits());
    const double tol = opts.tol.value_or(kCommutatorTol);

    DensityState result = rho;
    if (opts.require_centralizer) {
      result = family_member(rho, u, tol);  // throws CentralizerRejection
    } else {
      result = adjoint_action(rho, u);
    }
    emit(opts,
         serialize_state_file(make_state_file(result.pauli(), opts.format, file.label)) + "\n",
         out);
    return kExitOk;
  });
}

int cmd_sample(const std::string& state_path, const Options& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    if (opts.count < 0) throw ParseError("--count must be non-negative");
    const StateFile file = read_state_file(state_path);
    const DensityState rho = load_density(file);
    const double tol = opts.tol.value_or(kClassificationTol);
    const CentralizerDescriptor desc = classify_centralizer(rho, tol);

    std::mt19937_64 rng(opts.seed);
    std::string batch;
    for (int k = 0; k < opts.count; ++k) {
      const auto params = draw_centralizer_parameters(desc, rng);
      const DensityState member = family_member(rho, sample_centralizer(desc, params));
      batch += serialize_state_file(make_state_file(member.pauli(), opts.format,
                                                    label_of(file) + ":sample-" + std::to_string(k)));
      batch += "\n";
    }
    emit(opts, batch, out);
    return kExitOk;
  });
}

int cmd_compare(const std::string& path_a, const std::string& path_b, const Options& opts,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StateFile fa = read_state_file(path_a);
    const StateFile fb = read_state_file(path_b);
    if (fa.qubits() != fb.qubits()) {
      throw ParseError("dimension mismatch: " + std::to_string(fa.qubits()) + " vs " +
                       std::to_string(fb.qubits()) + " qubits");
    }
    const double tol = opts.tol.value_or(kEqualityTol);
    const FamilyComparison cmp = compare_family(load_density(fa), load_density(fb), tol);

    if (opts.json) {
      json rec;
      rec["command"] = "compare";
      rec["label_a"] = label_of(fa);
      rec["label_b"] = label_of(fb);
      rec["n"] = fa.qubits();
      rec["tol"] = tol;
      rec["lm_agreement"] = cmp.lm_agreement;
      rec["purity_a"] = cmp.purity_a;
      rec["purity_b"] = cmp.purity_b;
      rec["delta_purity_a"] = cmp.delta_purity_a;
      rec["delta_purity_b"] = cmp.delta_purity_b;
      rec["verdict"] = to_string(cmp.verdict);
      emit(opts, rec.dump() + "\n", out);
    } else {
      std::ostringstream s;
      s << "a: " << label_of(fa) << "\nb: " << label_of(fb) << "\n";
      s << "tolerance: " << fmt(tol) << "\n";
      for (std::size_t j = 0; j < cmp.lm_agreement.size(); ++j) {
        s << "qubit " << j + 1 << " reduction: " << (cmp.lm_agreement[j] ? "equal" : "differs")
          << "\n";
      }
      s << "Tr rho^2:   " << fixed(cmp.purity_a) << "  " << fixed(cmp.purity_b) << "\n";
      s << "Tr delta^2: " << fixed(cmp.delta_purity_a) << "  " << fixed(cmp.delta_purity_b)
        << "\n";
      s << "verdict: " << to_string(cmp.verdict) << "\n";
      emit(opts, s.str(), out);
    }
    return kExitOk;
  });
}

int cmd_make(const MakeRequest& request, const Options& opts, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    std::optional<DensityState> rho;
    std::string label = request.kind;
    if (request.kind == "mixed") {
      rho = make_maximally_mixed(request.qubits);
    } else if (request.kind == "ghz") {
      rho = make_ghz(request.qubits);
      label += "-" + std::to_string(request.qubits);
    } else if (request.kind == "werner") {
      rho = make_werner_like(request.qubits, request.weight);
      label += "-" + std::to_string(request.qubits) + "-w" + fmt(request.weight);
    } else if (request.kind == "product") {
      if (request.bloch.empty() || request.bloch.size() % 3 != 0) {
        throw ParseError("--bloch needs 3 values per qubit");
      }
      std::vector<Eigen::Vector3d> list;
      for (std::size_t k = 0; k < request.bloch.size(); k += 3) {
        list.emplace_back(request.bloch[k], request.bloch[k + 1], request.bloch[k + 2]);
      }
      rho = make_product(list);
    } else {
      throw ParseError("unknown fixture kind \"" + request.kind + "\"");
    }
    emit(opts, serialize_state_file(make_state_file(rho->pauli(), opts.format, label)) + "\n",
         out);
    return kExitOk;
  });
}

}  // namespace lucent::cli
