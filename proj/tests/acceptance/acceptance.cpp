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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Usage: lucent_acceptance [seed]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli/commands.hpp"
#include "cli/state_file.hpp"
#include "lucent/lucent.hpp"
#include "lucent/oracle.hpp"
#include "support/generators.hpp"

namespace {

using namespace lucent;
using lucent::testing::random_bloch;
using lucent::testing::random_density;
using lucent::testing::random_spec;
using lucent::testing::random_unit;

struct Outcome {
  bool pass = true;
  std::string detail;
};

/// Tracks the largest deviation seen and the first failure message.
class Gauge {
 public:
  explicit Gauge(double tol) : tol_(tol) {}

  void observe(double deviation, const std::string& where) {
    if (!(deviation <= max_)) max_ = deviation;  // also captures NaN
    if (!(deviation < tol_) && first_failure_.empty()) {
      first_failure_ = where + ": deviation " + sci(deviation);
    }
  }
  void require(bool ok, const std::string& where) {
    if (!ok && first_failure_.empty()) first_failure_ = where;
  }
  bool ok() const { return first_failure_.empty(); }
  double max() const { return max_; }
  double tol() const { return tol_; }
  const std::string& failure() const { return first_failure_; }

  static std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
  }

 private:
  double tol_;
  double max_ = 0.0;
  std::string first_failure_;
};

Outcome finish(const Gauge& g, const std::string& summary) {
  Outcome out;
  out.pass = g.ok();
  out.detail = summary + ", max dev " + Gauge::sci(g.max()) + " (tol " + Gauge::sci(g.tol()) + ")";
  if (!g.ok()) out.detail += "; first failure: " + g.failure();
  return out;
}

double max_entry(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

PauliState weight_at_most_one(const PauliState& s) { return s - correlation_part(s); }

// 1 -------------------------------------------------------------------------
Outcome partial_trace_vs_oracle(std::mt19937_64& rng) {
  Gauge g(1e-10);
  int states = 0;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 0; k < 200; ++k, ++states) {
      const auto rho = random_density(n, rng, k % 4 == 0 ? 1 : 0);
      const DenseOperator dense = coeffs_to_dense(rho.pauli());
      for (int q = 1; q <= n; ++q) {
        const Matrix2c expected = oracle::dense_partial_trace(dense, q);
        const Matrix2c got = partial_trace_single(rho, q).reduced_matrix();
        g.observe(max_entry(got - expected), "n=" + std::to_string(n) + " qubit " + std::to_string(q));
      }
    }
  }
  return finish(g, std::to_string(states) + " states, n=2..6");
}

// 2 -------------------------------------------------------------------------
Outcome adjoint_action_vs_oracle(std::mt19937_64& rng) {
  Gauge g(1e-10);
  int pairs = 0;
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k < 200; ++k, ++pairs) {
      const auto rho = random_density(n, rng, k % 4 == 0 ? 1 : 0);
      const auto spec = random_spec(n, rng);
      const auto expected = oracle::dense_conjugate(coeffs_to_dense(rho.pauli()), spec.matrices());
      const auto got = coeffs_to_dense(adjoint_action(rho, spec).pauli());
      g.observe(max_entry(got.matrix() - expected.matrix()), "n=" + std::to_string(n));
    }
  }
  return finish(g, std::to_string(pairs) + " pairs, n=2..5");
}

// 3 -------------------------------------------------------------------------
Outcome commuting_square(std::mt19937_64& rng) {
  Gauge g(1e-10);
  std::uniform_int_distribution<int> pick_n(2, 5);
  for (int k = 0; k < 100; ++k) {
    const int n = pick_n(rng);
    const auto rho = random_density(n, rng);
    const auto spec = random_spec(n, rng);
    const auto matrices = spec.matrices();
    const PauliState moved = conjugate(rho.pauli(), spec);
    const std::string where = "pair " + std::to_string(k) + " n=" + std::to_string(n);

    for (int q = 1; q <= n; ++q) {
      const PauliState lhs = project_Q(moved, q).state;
      const PauliState rhs = conjugate(project_Q(rho.pauli(), q).state, spec);
      g.observe(lhs.max_abs_diff(rhs), where + " qubit " + std::to_string(q));

      // Same square through the dense oracle.
      const auto dense_rhs =
          oracle::dense_conjugate(coeffs_to_dense(project_Q(rho.pauli(), q).state), matrices);
      g.observe(max_entry(coeffs_to_dense(lhs).matrix() - dense_rhs.matrix()),
                where + " dense qubit " + std::to_string(q));
      g.require(verify_subspace_invariance(rho, spec, q, 1e-10), where + " subspace invariance");
    }

    // Correlations stay correlations.
    const PauliState delta = correlation_part(rho.pauli());
    const PauliState delta_moved = conjugate(delta, spec);
    const PauliState leaked = weight_at_most_one(delta_moved);
    double low = 0.0;
    for (double c : leaked.coeffs()) low = std::max(low, std::abs(c));
    g.observe(low, where + " weight<=1 leakage");
  }
  return finish(g, "100 pairs, every qubit, plus correlation-part closure");
}

// 4 -------------------------------------------------------------------------
Outcome cyclic_soundness_and_completeness(std::mt19937_64& rng) {
  Gauge sound(1e-12);
  std::uniform_real_distribution<double> xi(-10.0, 10.0);
  for (int k = 0; k < 500; ++k) {
    const BlochVector b{1, random_bloch(rng, 1e-3, 1.0)};
    const Matrix2c u = cyclic_unitary(b, xi(rng));
    sound.observe(max_entry(oracle::dense_commutator(u, b.reduced_matrix())),
                  "draw " + std::to_string(k));
    sound.require(commutes_with_reduction(u, b, 1e-12), "draw " + std::to_string(k) + " predicate");
  }

  // Axes at least ~3 degrees off +-r and angles away from 0 and pi, so the
  // rotation is not in the stabiliser.
  int rejected = 0;
  double min_commutator = 1e300;
  std::uniform_real_distribution<double> omega(0.05, std::numbers::pi - 0.05);
  for (int k = 0; k < 500; ++k) {
    const BlochVector b{1, random_bloch(rng, 0.1, 1.0)};
    Eigen::Vector3d s;
    do {
      s = random_unit(rng);
    } while (s.cross(b.r.normalized()).norm() < 0.05);
    const Matrix2c u = AxisAngle(s, omega(rng)).matrix();
    min_commutator =
        std::min(min_commutator, max_entry(oracle::dense_commutator(u, b.reduced_matrix())));
    if (!commutes_with_reduction(u, b, 1e-6)) ++rejected;
  }

  Outcome out;
  out.pass = sound.ok() && rejected == 500;
  out.detail = "500 cyclic draws max commutator " + Gauge::sci(sound.max()) + " (tol 1e-12); " +
               std::to_string(rejected) + "/500 off-axis unitaries rejected at 1e-6, smallest " +
               "commutator " + Gauge::sci(min_commutator);
  if (!sound.ok()) out.detail += "; first failure: " + sound.failure();
  return out;
}

// 5 -------------------------------------------------------------------------

// m polarized qubits and n - m maximally mixed ones, the latter grouped in
// GHZ blocks where possible. `mixed_first` puts the mixed block in front.
DensityState dimension_fixture(int n, int m, bool mixed_first, std::mt19937_64& rng) {
  std::optional<DensityState> polarized;
  if (m > 0) {
    std::vector<Eigen::Vector3d> bloch;
    for (int j = 0; j < m; ++j) bloch.push_back(random_bloch(rng, 0.1, 1.0));
    polarized = make_product(bloch);
  }
  std::optional<DensityState> mixed;
  const int rest = n - m;
  if (rest == 1) {
    mixed = make_maximally_mixed(1);
  } else if (rest >= 2) {
    mixed = make_ghz(rest);
  }
  if (!polarized) return *mixed;
  if (!mixed) return *polarized;
  return mixed_first ? tensor_product(*mixed, *polarized) : tensor_product(*polarized, *mixed);
}

Outcome dimension_formula(std::mt19937_64& rng) {
  int fixtures = 0;
  std::string failure;
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (bool mixed_first : {false, true}) {
        const DensityState rho = dimension_fixture(n, m, mixed_first, rng);
        const CentralizerDescriptor desc = classify_centralizer(rho);
        ++fixtures;
        int params = 0;
        for (int j = 1; j <= n; ++j) params += desc.parameter_count(j);
        const bool ok = desc.m == m && desc.dim == 3 * n - 2 * m && params == desc.dim &&
                        desc.qubit_count() == n;
        if (!ok && failure.empty()) {
          failure = "n=" + std::to_string(n) + " m=" + std::to_string(m) + " got m=" +
                    std::to_string(desc.m) + " dim=" + std::to_string(desc.dim);
        }
      }
    }
  }
  Outcome out;
  out.pass = failure.empty();
  out.detail = std::to_string(fixtures) + " fixtures, every (n, m) with n<=5";
  if (!out.pass) out.detail += "; first failure: " + failure;
  return out;
}

// 6 -------------------------------------------------------------------------
struct FamilyGauges {
  Gauge lm{1e-10};
  Gauge purity{1e-12};
  Gauge delta{1e-12};
  int members = 0;
};

void sample_family(const DensityState& rho, const std::string& name, int count,
                   std::mt19937_64& rng, FamilyGauges& g) {
  const CentralizerDescriptor desc = classify_centralizer(rho);
  const double p0 = purity(rho);
  const double d0 = delta_purity(rho);
  const auto source = bloch_vectors(rho);
  for (int k = 0; k < count; ++k, ++g.members) {
    const auto params = draw_centralizer_parameters(desc, rng);
    const DensityState member = family_member(rho, sample_centralizer(desc, params));
    double lm_dev = 0.0;
    for (const auto& b : bloch_vectors(member)) {
      lm_dev = std::max(lm_dev, (b.r - source[b.qubit - 1].r).cwiseAbs().maxCoeff());
    }
    g.lm.observe(lm_dev, name);
    g.lm.require(lm_equivalent(member, rho, 1e-10), name + " lm_equivalent");
    g.purity.observe(std::abs(purity(member) - p0), name);
    g.delta.observe(std::abs(delta_purity(member) - d0), name);
  }
}

Outcome family_invariance(std::mt19937_64& rng) {
  FamilyGauges g;
  std::uniform_real_distribution<double> weight(-0.05, 1.0);
  for (int n = 2; n <= 5; ++n) {
    const std::string tag = " n=" + std::to_string(n);
    sample_family(make_ghz(n), "ghz" + tag, 100, rng, g);
    sample_family(make_werner_like(n, weight(rng)), "werner" + tag, 100, rng, g);
    sample_family(tensor_product(make_ghz(2), random_density(n - 1, rng)), "biseparable" + tag,
                  100, rng, g);
    sample_family(random_density(n, rng), "random" + tag, 100, rng, g);
    sample_family(random_density(n, rng, 1), "random-pure" + tag, 100, rng, g);
  }

  // Pure products: the family is the state itself.
  Gauge collapse(1e-12);
  int products = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Eigen::Vector3d> bloch;
    for (int j = 0; j < n; ++j) bloch.push_back(random_unit(rng));
    const DensityState rho = make_product(bloch);
    const CentralizerDescriptor desc = classify_centralizer(rho);
    for (int k = 0; k < 100; ++k, ++products) {
      const auto params = draw_centralizer_parameters(desc, rng);
      const DensityState member = family_member(rho, sample_centralizer(desc, params));
      collapse.observe(member.pauli().max_abs_diff(rho.pauli()), "product n=" + std::to_string(n));
    }
  }

  Outcome out;
  out.pass = g.lm.ok() && g.purity.ok() && g.delta.ok() && collapse.ok();
  out.detail = std::to_string(g.members) + " members: reductions " + Gauge::sci(g.lm.max()) +
               " (1e-10), purity " + Gauge::sci(g.purity.max()) + " (1e-12), Tr delta^2 " +
               Gauge::sci(g.delta.max()) + " (1e-12); " + std::to_string(products) +
               " pure-product members collapse " + Gauge::sci(collapse.max()) + " (1e-12)";
  for (const Gauge* x : {&g.lm, &g.purity, &g.delta, &collapse}) {
    if (!x->ok()) {
      out.detail += "; first failure: " + x->failure();
      break;
    }
  }
  return out;
}

// 7 -------------------------------------------------------------------------
Outcome decomposition_exactness(std::mt19937_64& rng) {
  std::vector<DensityState> states;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < 20; ++k) states.push_back(random_density(n, rng, k % 2 ? 1 : 0));
    states.push_back(make_maximally_mixed(n));
    if (n >= 2) {
      states.push_back(make_ghz(n));
      states.push_back(make_werner_like(n, 0.3));
    }
    std::vector<Eigen::Vector3d> bloch;
    for (int j = 0; j < n; ++j) bloch.push_back(random_bloch(rng));
    states.push_back(make_product(bloch));
  }

  int inexact = 0;
  Gauge ortho(1e-12);
  Gauge norms(1e-10);
  for (const DensityState& rho : states) {
    const int n = rho.qubits();
    const Decomposition parts = decompose(rho);
    if (!(parts.recompose() == rho.pauli())) ++inexact;

    // Orthogonality measured on dense operators.
    std::vector<Eigen::MatrixXcd> pieces;
    for (const auto& t : parts.translated) pieces.push_back(coeffs_to_dense(t.state).matrix());
    pieces.push_back(coeffs_to_dense(parts.delta).matrix());
    const Eigen::Index dim = Eigen::Index{1} << n;
    pieces.push_back(Eigen::MatrixXcd::Identity(dim, dim) * parts.identity_coeff);
    for (std::size_t a = 0; a < pieces.size(); ++a) {
      for (std::size_t b = a + 1; b < pieces.size(); ++b) {
        ortho.observe(std::abs((pieces[a] * pieces[b]).trace()), "n=" + std::to_string(n));
      }
    }

    for (const auto& t : parts.translated) {
      const Eigen::VectorXd ev =
          oracle::dense_eigenvalues(coeffs_to_dense(t.state).matrix());
      const double lm = ev.minCoeff();
      const double lp = ev.maxCoeff();
      const std::string where = "n=" + std::to_string(n) + " qubit " + std::to_string(t.qubit);
      norms.observe(std::abs(t.reduced_norm() - std::sqrt(lm * lm + lp * lp)), where);
      norms.observe(std::max(std::abs(t.lambda_minus - lm), std::abs(t.lambda_plus - lp)),
                    where + " eigenvalues");
    }
  }

  Outcome out;
  out.pass = inexact == 0 && ortho.ok() && norms.ok();
  out.detail = std::to_string(states.size()) + " states: " +
               std::to_string(states.size() - inexact) + " bit-exact recompositions, " +
               "orthogonality " + Gauge::sci(ortho.max()) + " (1e-12), norm identity " +
               Gauge::sci(norms.max()) + " (1e-10)";
  if (!ortho.ok()) out.detail += "; first failure: " + ortho.failure();
  if (!norms.ok()) out.detail += "; first failure: " + norms.failure();
  return out;
}

// 8 -------------------------------------------------------------------------
Outcome basis_partial_trace(std::mt19937_64&) {
  int checked = 0;
  std::string failure;
  for (int n = 1; n <= 5; ++n) {
    for (int q = 1; q <= n; ++q) {
      for (int a = 0; a < 4; ++a, ++checked) {
        const DenseOperator b = sigma_dense(PauliIndex::single(n, q, a));
        const Matrix2c image = oracle::dense_partial_trace(b, q);
        const Matrix2c expected = std::ldexp(1.0, n - 1) * pauli_matrix(a);
        if (image != expected && failure.empty()) {
          failure = "n=" + std::to_string(n) + " qubit " + std::to_string(q) + " digit " +
                    std::to_string(a);
        }
      }
    }
  }
  Outcome out;
  out.pass = failure.empty();
  out.detail = std::to_string(checked) + " basis strings, exact equality";
  if (!out.pass) out.detail += "; first failure: " + failure;
  return out;
}

// 9 -------------------------------------------------------------------------
Outcome cli_round_trip(std::mt19937_64& rng) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "lucent_acceptance";
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream(dir / name, std::ios::binary) << text;
    return (dir / name).string();
  };

  int unstable = 0;
  int round_trips = 0;
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < 10; ++k) {
      const auto rho = random_density(n, rng);
      for (auto enc : {cli::Encoding::kPauli, cli::Encoding::kDense}) {
        const std::string text = cli::serialize_state_file(cli::make_state_file(rho.pauli(), enc));
        const std::string again = cli::serialize_state_file(cli::parse_state_file(text));
        if (again != text) ++unstable;
        ++round_trips;
      }
      const auto spec = random_spec(n, rng);
      const std::string utext = cli::serialize_unitary_file(cli::make_unitary_file(spec));
      if (cli::serialize_unitary_file(cli::parse_unitary_file(utext)) != utext) ++unstable;
      ++round_trips;
    }
  }

  std::ostringstream sink;
  int nondeterministic = 0;
  for (int n = 2; n <= 4; ++n) {
    const auto state = write("sample.json", cli::serialize_state_file(cli::make_state_file(
                                                random_density(n, rng).pauli(), cli::Encoding::kPauli)));
    cli::Options opts;
    opts.count = 20;
    opts.seed = 1000 + n;
    std::ostringstream first, second;
    cli::cmd_sample(state, opts, first, sink);
    cli::cmd_sample(state, opts, second, sink);
    if (first.str() != second.str() || first.str().empty()) ++nondeterministic;
  }

  Gauge evolve(1e-10);
  for (int k = 0; k < 50; ++k) {
    const int n = 1 + k % 5;
    const auto rho = random_density(n, rng);
    const auto spec = random_spec(n, rng);
    const auto state = write("evolve_in.json", cli::serialize_state_file(cli::make_state_file(
                                                   rho.pauli(), cli::Encoding::kPauli)));
    const auto u = write("u.json", cli::serialize_unitary_file(cli::make_unitary_file(spec)));
    const auto uinv =
        write("uinv.json", cli::serialize_unitary_file(cli::make_unitary_file(spec.inverse())));
    cli::Options opts;
    opts.output = (dir / "evolved.json").string();
    evolve.require(cli::cmd_evolve(state, u, opts, sink, sink) == cli::kExitOk, "evolve exit");
    opts.output = (dir / "back.json").string();
    evolve.require(cli::cmd_evolve((dir / "evolved.json").string(), uinv, opts, sink, sink) ==
                       cli::kExitOk,
                   "inverse exit");
    const PauliState back = cli::read_state_file((dir / "back.json").string()).to_pauli();
    evolve.observe(back.max_abs_diff(rho.pauli()), "n=" + std::to_string(n));
  }
  fs::remove_all(dir);

  Outcome out;
  out.pass = unstable == 0 && nondeterministic == 0 && evolve.ok();
  out.detail = std::to_string(round_trips - unstable) + "/" + std::to_string(round_trips) +
               " byte-stable round trips, " + std::to_string(3 - nondeterministic) +
               "/3 reproducible sample runs, evolve+inverse max dev " + Gauge::sci(evolve.max()) +
               " (1e-10)";
  if (!evolve.ok()) out.detail += "; first failure: " + evolve.failure();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 20260101;

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome(std::mt19937_64&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "partial trace matches dense oracle", partial_trace_vs_oracle},
      {2, "adjoint action matches dense oracle", adjoint_action_vs_oracle},
      {3, "projection commutes with local unitaries", commuting_square},
      {4, "cyclic unitaries commute, off-axis ones do not", cyclic_soundness_and_completeness},
      {5, "centralizer dimension 3n - 2m", dimension_formula},
      {6, "family members keep reductions and purities", family_invariance},
      {7, "decomposition exact, orthogonal, norm identity", decomposition_exactness},
      {8, "basis strings trace to 2^(n-1) sigma", basis_partial_trace},
      {9, "CLI round trip, determinism, inverse evolve", cli_round_trip},
  };

  std::printf("lucent acceptance suite, seed %llu\n", static_cast<unsigned long long>(seed));
  int failures = 0;
  for (const auto& c : criteria) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(c.id));
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run(rng);
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s [%d] %s: %s [%.2fs]\n", out.pass ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs);
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
