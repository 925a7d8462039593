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

#include "lucent/pauli.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "lucent/error.hpp"

namespace lucent {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kMalformedIndex: return "malformed-index";
    case ErrorKind::kHermiticity: return "hermiticity";
    case ErrorKind::kCapacity: return "capacity";
    case ErrorKind::kDimension: return "dimension";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kInvalidBloch: return "invalid-bloch";
    case ErrorKind::kIndexOutOfRange: return "index-out-of-range";
    case ErrorKind::kDegenerateAxis: return "degenerate-axis";
    case ErrorKind::kNonUnitary: return "non-unitary";
    case ErrorKind::kNotInCentralizer: return "not-in-centralizer";
    case ErrorKind::kArity: return "arity";
    case ErrorKind::kInvalidState: return "invalid-state";
  }
  return "unknown";
}

namespace {

constexpr char kLetters[] = {'I', 'X', 'Y', 'Z'};

void check_qubit_count(int qubits) {
  if (qubits < 1 || qubits > kMaxQubits) {
    throw Error(ErrorKind::kDimension,
                "qubit count " + std::to_string(qubits) + " outside [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

// Entries sigma_alpha[row][col] laid out as p = 2*row + col.
constexpr Complex kI{0.0, 1.0};
const Complex kSigmaEntries[4][4] = {
    {1.0, 0.0, 0.0, 1.0},
    {0.0, 1.0, 1.0, 0.0},
    {0.0, -kI, kI, 0.0},
    {1.0, 0.0, 0.0, -1.0},
};

// Spreads the n bits of a computational-basis index over even bit pairs so
// that qubit j (bit n-j of `x`) lands in bit pair j-1.
std::vector<std::size_t> spread_table(int qubits) {
  const std::size_t dim = std::size_t{1} << qubits;
  std::vector<std::size_t> table(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    std::size_t s = 0;
    for (int j = 1; j <= qubits; ++j) {
      const std::size_t bit = (x >> (qubits - j)) & 1U;
      s |= bit << (2 * (j - 1));
    }
    table[x] = s;
  }
  return table;
}

}  // namespace

Matrix2c pauli_matrix(int digit) {
  if (digit < 0 || digit > 3) {
    throw Error(ErrorKind::kMalformedIndex,
                "Pauli digit " + std::to_string(digit) + " not in {0,1,2,3}");
  }
  Matrix2c m;
  m << kSigmaEntries[digit][0], kSigmaEntries[digit][1],
      kSigmaEntries[digit][2], kSigmaEntries[digit][3];
  return m;
}

// ---------------------------------------------------------------------------
// PauliIndex

PauliIndex::PauliIndex(int qubits, std::size_t code) : qubits_(qubits), code_(code) {
  check_qubit_count(qubits);
  if (code >= pauli_basis_size(qubits)) {
    throw Error(ErrorKind::kMalformedIndex,
                "code " + std::to_string(code) + " out of range for " +
                    std::to_string(qubits) + " qubits");
  }
}

PauliIndex PauliIndex::from_digits(std::span<const int> digits) {
  const int n = static_cast<int>(digits.size());
  check_qubit_count(n);
  std::size_t code = 0;
  for (int j = 0; j < n; ++j) {
    if (digits[j] < 0 || digits[j] > 3) {
      throw Error(ErrorKind::kMalformedIndex,
                  "Pauli digit " + std::to_string(digits[j]) + " at qubit " +
                      std::to_string(j + 1) + " not in {0,1,2,3}");
    }
    code |= static_cast<std::size_t>(digits[j]) << (2 * j);
  }
  return PauliIndex(n, code);
}

PauliIndex PauliIndex::from_string(std::string_view letters) {
  std::vector<int> digits;
  digits.reserve(letters.size());
  for (char c : letters) {
    switch (c) {
      case 'I': digits.push_back(0); break;
      case 'X': digits.push_back(1); break;
      case 'Y': digits.push_back(2); break;
      case 'Z': digits.push_back(3); break;
      default:
        throw Error(ErrorKind::kMalformedIndex,
                    "invalid Pauli letter '" + std::string(1, c) + "' in \"" +
                        std::string(letters) + "\"");
    }
  }
  return from_digits(digits);
}

PauliIndex PauliIndex::single(int qubits, int qubit, int digit) {
  check_qubit_count(qubits);
  if (qubit < 1 || qubit > qubits) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "qubit " + std::to_string(qubit) + " outside [1, " +
                    std::to_string(qubits) + "]");
  }
  if (digit < 0 || digit > 3) {
    throw Error(ErrorKind::kMalformedIndex, "Pauli digit out of range");
  }
  return PauliIndex(qubits, static_cast<std::size_t>(digit) << (2 * (qubit - 1)));
}

int PauliIndex::digit(int qubit) const {
  if (qubit < 1 || qubit > qubits_) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "qubit " + std::to_string(qubit) + " outside [1, " +
                    std::to_string(qubits_) + "]");
  }
  return static_cast<int>((code_ >> (2 * (qubit - 1))) & 3U);
}

std::vector<int> PauliIndex::digits() const {
  std::vector<int> out(qubits_);
  for (int j = 0; j < qubits_; ++j) out[j] = static_cast<int>((code_ >> (2 * j)) & 3U);
  return out;
}

int code_weight(std::size_t code) noexcept {
  // A digit is nonzero iff either of its two bits is set.
  constexpr std::size_t kLowBits = 0x5555555555555555ULL;
  return std::popcount((code | (code >> 1)) & kLowBits);
}

int PauliIndex::weight() const noexcept { return code_weight(code_); }

std::string PauliIndex::to_string() const {
  std::string s(qubits_, 'I');
  for (int j = 0; j < qubits_; ++j) s[j] = kLetters[(code_ >> (2 * j)) & 3U];
  return s;
}

// ---------------------------------------------------------------------------
// DenseOperator

DenseOperator::DenseOperator(Eigen::MatrixXcd entries) : qubits_(0), entries_(std::move(entries)) {
  const auto rows = entries_.rows();
  if (rows != entries_.cols() || rows < 2 || (rows & (rows - 1)) != 0) {
    std::ostringstream msg;
    msg << "dense operator must be 2^n x 2^n with n >= 1, got " << rows << "x"
        << entries_.cols();
    throw Error(ErrorKind::kDimension, msg.str());
  }
  qubits_ = std::countr_zero(static_cast<std::uint64_t>(rows));
}

bool DenseOperator::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// PauliState

PauliState::PauliState(int qubits) : qubits_(qubits) {
  check_qubit_count(qubits);
  coeffs_.assign(pauli_basis_size(qubits), 0.0);
}

PauliState::PauliState(int qubits, std::vector<double> coeffs)
    : qubits_(qubits), coeffs_(std::move(coeffs)) {
  check_qubit_count(qubits);
  if (coeffs_.size() != pauli_basis_size(qubits)) {
    throw Error(ErrorKind::kDimension,
                "expected " + std::to_string(pauli_basis_size(qubits)) +
                    " coefficients, got " + std::to_string(coeffs_.size()));
  }
}

double PauliState::at(const PauliIndex& index) const {
  if (index.qubits() != qubits_) {
    throw Error(ErrorKind::kDimension, "index qubit count does not match state");
  }
  return coeffs_[index.code()];
}

PauliState& PauliState::operator+=(const PauliState& other) {
  if (other.qubits_ != qubits_) throw Error(ErrorKind::kDimension, "qubit count mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  return *this;
}

PauliState& PauliState::operator-=(const PauliState& other) {
  if (other.qubits_ != qubits_) throw Error(ErrorKind::kDimension, "qubit count mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  return *this;
}

PauliState& PauliState::operator*=(double factor) {
  for (double& c : coeffs_) c *= factor;
  return *this;
}

double PauliState::max_abs_diff(const PauliState& other) const {
  if (other.qubits_ != qubits_) throw Error(ErrorKind::kDimension, "qubit count mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    worst = std::max(worst, std::abs(coeffs_[k] - other.coeffs_[k]));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Conversions

DenseOperator sigma_dense(const PauliIndex& index) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  for (int j = 1; j <= index.qubits(); ++j) {
    const Matrix2c factor = pauli_matrix(index.digit(j));
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r) {
      for (Eigen::Index c = 0; c < out.cols(); ++c) {
        next.block<2, 2>(2 * r, 2 * c) = out(r, c) * factor;
      }
    }
    out = std::move(next);
  }
  return DenseOperator(std::move(out));
}

// Both directions use a per-qubit 4-point transform on a buffer whose position
// p = sum_j (2*row_j + col_j) * 4^(j-1) enumerates the (row, col) bit pairs of
// every qubit; this is O(n 4^n) rather than O(8^n) for per-string traces.
PauliState dense_to_coeffs(const DenseOperator& op, double tol) {
  const int n = op.qubits();
  check_qubit_count(n);
  const auto dim = static_cast<std::size_t>(op.dimension());
  const auto spread = spread_table(n);
  const auto& m = op.matrix();

  // Tr{sigma rho} = sum_{r,c} sigma[r][c] rho[c][r]
  std::vector<Complex> buf(pauli_basis_size(n));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      buf[(spread[r] << 1) | spread[c]] = m(static_cast<Eigen::Index>(c),
                                            static_cast<Eigen::Index>(r));
    }
  }

  for (int j = 0; j < n; ++j) {
    const std::size_t stride = std::size_t{1} << (2 * j);
    for (std::size_t base = 0; base < buf.size(); base += 4 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t k = base + off;
        const Complex a0 = buf[k], a1 = buf[k + stride], a2 = buf[k + 2 * stride],
                      a3 = buf[k + 3 * stride];
        buf[k] = a0 + a3;
        buf[k + stride] = a1 + a2;
        buf[k + 2 * stride] = -kI * a1 + kI * a2;
        buf[k + 3 * stride] = a0 - a3;
      }
    }
  }

  const double scale = std::ldexp(1.0, -n);
  std::vector<double> coeffs(buf.size());
  for (std::size_t k = 0; k < buf.size(); ++k) {
    const Complex v = buf[k] * scale;
    if (std::abs(v.imag()) > tol) {
      std::ostringstream msg;
      msg << "operator is not Hermitian: coefficient "
          << PauliIndex(n, k).to_string() << " has imaginary part " << v.imag();
      throw Error(ErrorKind::kHermiticity, msg.str());
    }
    coeffs[k] = v.real();
  }
  return PauliState(n, std::move(coeffs));
}

DenseOperator coeffs_to_dense(const PauliState& state, int max_qubits) {
  const int n = state.qubits();
  if (n > max_qubits) {
    throw Error(ErrorKind::kCapacity,
                "dense materialization of " + std::to_string(n) +
                    " qubits exceeds cap of " + std::to_string(max_qubits));
  }
  std::vector<Complex> buf(state.coeffs().begin(), state.coeffs().end());
  for (int j = 0; j < n; ++j) {
    const std::size_t stride = std::size_t{1} << (2 * j);
    for (std::size_t base = 0; base < buf.size(); base += 4 * stride) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t k = base + off;
        const Complex b0 = buf[k], b1 = buf[k + stride], b2 = buf[k + 2 * stride],
                      b3 = buf[k + 3 * stride];
        buf[k] = b0 + b3;
        buf[k + stride] = b1 - kI * b2;
        buf[k + 2 * stride] = b1 + kI * b2;
        buf[k + 3 * stride] = b0 - b3;
      }
    }
  }

  const std::size_t dim = std::size_t{1} << n;
  const auto spread = spread_table(n);
  Eigen::MatrixXcd m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          buf[(spread[r] << 1) | spread[c]];
    }
  }
  return DenseOperator(std::move(m));
}

double hs_inner(const PauliState& a, const PauliState& b) {
  if (a.qubits() != b.qubits()) {
    throw Error(ErrorKind::kDimension, "hs_inner: qubit counts " +
                                           std::to_string(a.qubits()) + " and " +
                                           std::to_string(b.qubits()) + " differ");
  }
  double sum = 0.0;
  const auto ca = a.coeffs();
  const auto cb = b.coeffs();
  for (std::size_t k = 0; k < ca.size(); ++k) sum += ca[k] * cb[k];
  return std::ldexp(sum, a.qubits());
}

PauliState tensor_product(const PauliState& a, const PauliState& b) {
  const int n = a.qubits() + b.qubits();
  check_qubit_count(n);
  PauliState out(n);
  const std::size_t shift = 2 * static_cast<std::size_t>(a.qubits());
  for (std::size_t cb = 0; cb < b.size(); ++cb) {
    if (b[cb] == 0.0) continue;
    for (std::size_t ca = 0; ca < a.size(); ++ca) {
      out[ca | (cb << shift)] = a[ca] * b[cb];
    }
  }
  return out;
}

}  // namespace lucent
