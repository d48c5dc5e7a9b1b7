// Copyright 2026 The phaseshift Authors
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

/**
 * @file
 * Dense statevector / unitary-matrix simulation of the equal-phase-shift
 * search iteration and its fixed-point recursion
 *
 *     U_{m+1} = U_m R_s(theta) U_m^dag R_t(theta) U_m,   U_0 = U,
 *
 * where R_x(theta) = I - (1 - e^{i theta}) |x><x|. The selective phase
 * operators are applied as diagonal scalings, never as dense matrices.
 *
 * Instances, matrices and states are immutable values; all operations return
 * new values and may be called concurrently.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "phaseshift/types.hpp"

namespace phaseshift::sim {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 12;
inline constexpr std::size_t kMaxDim = std::size_t{1} << kMaxQubits;
inline constexpr std::size_t kMaxRecursionDim = 256;
inline constexpr std::size_t kMaxRecursionDepth = 20;

inline constexpr double kNormTol = 1e-10;
inline constexpr double kUnitaryTol = 1e-10;

class StateVector {
  public:
    /// Throws std::invalid_argument unless the norm is 1 within kNormTol.
    explicit StateVector(Eigen::VectorXcd amps);

    static StateVector basis(std::size_t dim, std::size_t index);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(amps_.size());
    }
    Complex operator[](std::size_t i) const { return amps_(i); }
    const Eigen::VectorXcd &amplitudes() const noexcept { return amps_; }
    double norm() const { return amps_.norm(); }

  private:
    struct Unchecked {};
    StateVector(Eigen::VectorXcd amps, Unchecked) : amps_(std::move(amps)) {}

    friend StateVector selective_phase(const StateVector &, std::size_t,
                                       PhaseAngle);
    friend class UnitaryMatrix;

    Eigen::VectorXcd amps_;
};

class UnitaryMatrix {
  public:
    /// Throws std::invalid_argument unless max|U^dag U - I| <= tol.
    explicit UnitaryMatrix(Eigen::MatrixXcd entries, double tol = kUnitaryTol);

    /// Wraps a matrix that is unitary by construction. Skips the O(N^3)
    /// check, which matters for the larger Hadamard instances.
    static UnitaryMatrix unchecked(Eigen::MatrixXcd entries);

    std::size_t dim() const noexcept {
        return static_cast<std::size_t>(entries_.rows());
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return entries_(row, col);
    }
    const Eigen::MatrixXcd &entries() const noexcept { return entries_; }

    /// max-entry |U^dag U - I|.
    double unitarity_error() const;

    StateVector apply(const StateVector &state) const;
    StateVector apply_adjoint(const StateVector &state) const;
    /// U |index>, i.e. column `index`.
    StateVector column(std::size_t index) const;

  private:
    struct Unchecked {};
    UnitaryMatrix(Eigen::MatrixXcd entries, Unchecked)
        : entries_(std::move(entries)) {}

    Eigen::MatrixXcd entries_;
};

/// A search problem: one query unitary plus source and target basis indices.
class SearchInstance {
  public:
    SearchInstance(UnitaryMatrix unitary, std::size_t s_index,
                   std::size_t t_index);

    const UnitaryMatrix &unitary() const noexcept { return unitary_; }
    std::size_t dim() const noexcept { return unitary_.dim(); }
    std::size_t s_index() const noexcept { return s_; }
    std::size_t t_index() const noexcept { return t_; }

    /// U_ts = <t|U|s>.
    Complex amplitude() const { return unitary_(t_, s_); }
    /// eps = 1 - |U_ts|^2, clamped to [0, 1].
    double epsilon() const;

  private:
    UnitaryMatrix unitary_;
    std::size_t s_;
    std::size_t t_;
};

/// U = H^{(x) n} with s = 0, so eps = 1 - 1/N. 1 <= n_qubits <= 12.
SearchInstance hadamard_instance(std::size_t n_qubits, std::size_t t_index);

/// Real Householder reflection sending |s> to sqrt(1-eps)|t> + sqrt(eps)|w>,
/// with w uniform over every coordinate except t. Gives |U_ts|^2 = 1 - eps to
/// rounding. Falls back to the identity when |s> already equals that target.
SearchInstance crafted_instance(std::size_t dim, FailureProb eps,
                                std::size_t s_index, std::size_t t_index);

/// R_x(theta)|state>: multiplies amplitude `index` by e^{i theta}.
StateVector selective_phase(const StateVector &state, std::size_t index,
                            PhaseAngle theta);

/// U R_s U^dag R_t U |s>.
StateVector one_iteration(const SearchInstance &instance, PhaseAngle theta);

/// 1 - |amps[t_index]|^2.
double measured_failure(const StateVector &state, std::size_t t_index);

/// The full operator U R_s U^dag R_t U as a dense matrix (U_1 of the
/// recursion).
UnitaryMatrix iteration_matrix(const SearchInstance &instance,
                               PhaseAngle theta);

/// U_m for m <= 20 and dim <= 256. Each level costs two dense products.
UnitaryMatrix recursion_unitary(const SearchInstance &instance,
                                PhaseAngle theta, std::size_t levels);

/// measured_failure(U_k |s>, t) for k = 0..levels.
std::vector<double> recursion_failures(const SearchInstance &instance,
                                       PhaseAngle theta, std::size_t levels);

} // namespace phaseshift::sim
