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

#include "phaseshift/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "phaseshift/errors.hpp"

namespace phaseshift::sim {

namespace {

void check_index(std::size_t index, std::size_t dim, const char *what) {
    if (index >= dim) {
        throw std::out_of_range(std::string(what) + " index " +
                                std::to_string(index) + " >= dimension " +
                                std::to_string(dim));
    }
}

// One recursion level: U R_s U^dag R_t U with the phase operators applied as
// row scalings.
Eigen::MatrixXcd next_level(const Eigen::MatrixXcd &u, std::size_t s,
                            std::size_t t, Complex phase) {
    Eigen::MatrixXcd rt_u = u;
    rt_u.row(static_cast<Eigen::Index>(t)) *= phase;
    Eigen::MatrixXcd inner = u.adjoint() * rt_u;
    inner.row(static_cast<Eigen::Index>(s)) *= phase;
    return u * inner;
}

void check_recursion_caps(const SearchInstance &instance, std::size_t levels) {
    if (levels > kMaxRecursionDepth) {
        throw SizeError("recursion depth " + std::to_string(levels) +
                        " exceeds cap " + std::to_string(kMaxRecursionDepth));
    }
    if (instance.dim() > kMaxRecursionDim) {
        throw SizeError("recursion dimension " + std::to_string(instance.dim()) +
                        " exceeds cap " + std::to_string(kMaxRecursionDim));
    }
}

} // namespace

StateVector::StateVector(Eigen::VectorXcd amps) : amps_(std::move(amps)) {
    if (amps_.size() == 0) {
        throw std::invalid_argument("state vector must be nonempty");
    }
    const double n = amps_.norm();
    if (!(std::abs(n - 1.0) <= kNormTol)) {
        throw std::invalid_argument("state vector norm " + std::to_string(n) +
                                    " is not 1");
    }
}

StateVector StateVector::basis(std::size_t dim, std::size_t index) {
    check_index(index, dim, "basis");
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(index)) = 1.0;
    return StateVector(std::move(v), Unchecked{});
}

UnitaryMatrix::UnitaryMatrix(Eigen::MatrixXcd entries, double tol)
    : entries_(std::move(entries)) {
    if (entries_.rows() == 0 || entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("unitary must be a nonempty square matrix");
    }
    const double err = unitarity_error();
    if (!(err <= tol)) {
        throw std::invalid_argument("matrix is not unitary: max|U^dag U - I| = " +
                                    std::to_string(err));
    }
}

UnitaryMatrix UnitaryMatrix::unchecked(Eigen::MatrixXcd entries) {
    return UnitaryMatrix(std::move(entries), Unchecked{});
}

double UnitaryMatrix::unitarity_error() const {
    const auto n = entries_.rows();
    const Eigen::MatrixXcd gram = entries_.adjoint() * entries_;
    return (gram - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
}

StateVector UnitaryMatrix::apply(const StateVector &state) const {
    if (state.dim() != dim()) {
        throw std::invalid_argument("state/unitary dimension mismatch");
    }
    return StateVector(entries_ * state.amplitudes(), StateVector::Unchecked{});
}

StateVector UnitaryMatrix::apply_adjoint(const StateVector &state) const {
    if (state.dim() != dim()) {
        throw std::invalid_argument("state/unitary dimension mismatch");
    }
    return StateVector(entries_.adjoint() * state.amplitudes(),
                       StateVector::Unchecked{});
}

StateVector UnitaryMatrix::column(std::size_t index) const {
    check_index(index, dim(), "column");
    return StateVector(entries_.col(static_cast<Eigen::Index>(index)),
                       StateVector::Unchecked{});
}

SearchInstance::SearchInstance(UnitaryMatrix unitary, std::size_t s_index,
                               std::size_t t_index)
    : unitary_(std::move(unitary)), s_(s_index), t_(t_index) {
    check_index(s_, unitary_.dim(), "source");
    check_index(t_, unitary_.dim(), "target");
}

double SearchInstance::epsilon() const {
    return std::clamp(1.0 - std::norm(amplitude()), 0.0, 1.0);
}

SearchInstance hadamard_instance(std::size_t n_qubits, std::size_t t_index) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw SizeError("hadamard instance needs 1 <= n_qubits <= " +
                        std::to_string(kMaxQubits) + ", got " +
                        std::to_string(n_qubits));
    }
    const std::size_t n = std::size_t{1} << n_qubits;
    check_index(t_index, n, "target");
    // 2^{-n/2}, exact for even n.
    double scale = std::ldexp(1.0, -static_cast<int>(n_qubits / 2));
    if (n_qubits % 2 == 1) {
        scale *= 1.0 / std::numbers::sqrt2;
    }
    const auto dim = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd h(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            const auto parity = std::popcount(static_cast<std::size_t>(i & j)) & 1;
            h(i, j) = parity ? -scale : scale;
        }
    }
    return SearchInstance(UnitaryMatrix::unchecked(std::move(h)), 0, t_index);
}

SearchInstance crafted_instance(std::size_t dim, FailureProb eps,
                                std::size_t s_index, std::size_t t_index) {
    if (dim < 2 || dim > kMaxDim) {
        throw SizeError("crafted instance needs 2 <= dim <= " +
                        std::to_string(kMaxDim) + ", got " +
                        std::to_string(dim));
    }
    check_index(s_index, dim, "source");
    check_index(t_index, dim, "target");
    const double e = eps.value();
    if (s_index == t_index && e != 0.0) {
        throw DomainError("s != t or eps = 0",
                          "crafted instance with s == t and eps " +
                              std::to_string(e));
    }

    const auto n = static_cast<Eigen::Index>(dim);
    const auto t = static_cast<Eigen::Index>(t_index);
    const auto s = static_cast<Eigen::Index>(s_index);

    Eigen::VectorXd w =
        Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(dim - 1)));
    w(t) = 0.0;
    Eigen::VectorXd v = std::sqrt(e) * w;
    v(t) = std::sqrt(1.0 - e);

    Eigen::VectorXd diff = -v;
    diff(s) += 1.0;
    const double len = diff.norm();
    if (len < 1e-14) {
        return SearchInstance(
            UnitaryMatrix::unchecked(Eigen::MatrixXcd::Identity(n, n)), s_index,
            t_index);
    }
    const Eigen::VectorXd u = diff / len;
    const Eigen::MatrixXd reflection =
        Eigen::MatrixXd::Identity(n, n) - 2.0 * u * u.transpose();
    return SearchInstance(UnitaryMatrix::unchecked(reflection.cast<Complex>()),
                          s_index, t_index);
}

StateVector selective_phase(const StateVector &state, std::size_t index,
                            PhaseAngle theta) {
    check_index(index, state.dim(), "phase");
    Eigen::VectorXcd amps = state.amplitudes();
    amps(static_cast<Eigen::Index>(index)) *= std::polar(1.0, theta.radians());
    return StateVector(std::move(amps), StateVector::Unchecked{});
}

StateVector one_iteration(const SearchInstance &instance, PhaseAngle theta) {
    const UnitaryMatrix &u = instance.unitary();
    StateVector psi = u.column(instance.s_index());
    psi = selective_phase(psi, instance.t_index(), theta);
    psi = u.apply_adjoint(psi);
    psi = selective_phase(psi, instance.s_index(), theta);
    return u.apply(psi);
}

double measured_failure(const StateVector &state, std::size_t t_index) {
    check_index(t_index, state.dim(), "target");
    return std::clamp(1.0 - std::norm(state[t_index]), 0.0, 1.0);
}

UnitaryMatrix iteration_matrix(const SearchInstance &instance,
                               PhaseAngle theta) {
    return UnitaryMatrix::unchecked(
        next_level(instance.unitary().entries(), instance.s_index(),
                   instance.t_index(), std::polar(1.0, theta.radians())));
}

UnitaryMatrix recursion_unitary(const SearchInstance &instance,
                                PhaseAngle theta, std::size_t levels) {
    check_recursion_caps(instance, levels);
    const Complex phase = std::polar(1.0, theta.radians());
    Eigen::MatrixXcd u = instance.unitary().entries();
    for (std::size_t m = 0; m < levels; ++m) {
        u = next_level(u, instance.s_index(), instance.t_index(), phase);
    }
    return UnitaryMatrix::unchecked(std::move(u));
}

std::vector<double> recursion_failures(const SearchInstance &instance,
                                       PhaseAngle theta, std::size_t levels) {
    check_recursion_caps(instance, levels);
    const Complex phase = std::polar(1.0, theta.radians());
    const auto s = static_cast<Eigen::Index>(instance.s_index());
    const auto t = static_cast<Eigen::Index>(instance.t_index());
    auto failure = [&](const Eigen::MatrixXcd &u) {
        return std::clamp(1.0 - std::norm(u(t, s)), 0.0, 1.0);
    };

    std::vector<double> out;
    out.reserve(levels + 1);
    Eigen::MatrixXcd u = instance.unitary().entries();
    out.push_back(failure(u));
    for (std::size_t m = 0; m < levels; ++m) {
        u = next_level(u, instance.s_index(), instance.t_index(), phase);
        out.push_back(failure(u));
    }
    return out;
}

} // namespace phaseshift::sim
